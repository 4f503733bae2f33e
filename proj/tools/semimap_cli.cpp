// semimap: enumerate and classify (r,s,k)-representations of the eight
// semi-equivelar torus types.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "semimap/classify.hpp"
#include "semimap/params.hpp"
#include "semimap/report.hpp"

using namespace semimap;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;

bool write_to(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return bool(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return bool(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate and classify semi-equivelar maps on the torus"};
    std::string type_sel;
    std::optional<int> n, n_max;
    std::string format = "csv";
    bool verify = false;
    std::string ledger_path, out_path;

    app.add_option("--type", type_sel, "face sequence joined by dots (e.g. 3.4.6.4), or 'all'")->required();
    auto* o_n = app.add_option("--n", n, "vertex count");
    auto* o_nmax = app.add_option("--n-max", n_max, "classify every vertex count up to this");
    o_n->excludes(o_nmax);
    o_nmax->excludes(o_n);
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--verify", verify, "cross-check classes against isomorphism certificates");
    app.add_option("--ledger", ledger_path, "write reference discrepancies as CSV to this file");
    app.add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }
    if (!n && !n_max) {
        std::cerr << "error: exactly one of --n / --n-max is required\n";
        return kExitConfig;
    }
    int N = n ? *n : *n_max;
    if (N < 1) {
        std::cerr << "error: vertex count must be positive\n";
        return kExitConfig;
    }
    std::vector<TileType> types;
    if (type_sel == "all") {
        types.assign(kAllTypes.begin(), kAllTypes.end());
    } else if (auto t = parse_selector(type_sel)) {
        types.push_back(*t);
    } else {
        std::cerr << "error: unknown type '" << type_sel << "'\n";
        return kExitConfig;
    }

    int workers = worker_count_from_env();
    std::vector<Classification> all;
    std::vector<Discrepancy> ledger;
    std::map<std::string, IsoCertificate> certs;
    bool mismatch = false;

    for (auto t : types) {
        std::vector<Classification> cs;
        if (n) cs.push_back(classify(t, *n, workers));
        else cs = build_catalog(t, *n_max, workers).by_n;
        for (const auto& c : cs) {
            for (const auto& rj : c.rejected)
                std::cerr << "note: " << selector(t) << " T(" << triple_str(rj)
                          << ") passes the admissibility rule but is not a polyhedral map\n";
            if (verify) {
                auto oc = oracle_check(c);
                for (const auto& [k, v] : oc.certs) certs[std::string(selector(t)) + ":" + k] = v;
                for (const auto& msg : oc.mismatches) {
                    std::cerr << "mismatch: " << msg << "\n";
                    mismatch = true;
                }
            }
        }
        if (verify || !ledger_path.empty()) {
            auto d = reference_discrepancies(t, cs);
            ledger.insert(ledger.end(), d.begin(), d.end());
        }
        all.insert(all.end(), cs.begin(), cs.end());
    }

    std::string text;
    if (format == "csv") text = catalog_csv(all);
    else text = catalog_json(all, n.has_value() && types.size() == 1, verify ? &certs : nullptr);
    if (!write_to(out_path, text)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitConfig;
    }
    if (verify) {
        std::cerr << "verify: " << (mismatch ? "key partition differs from certificate partition"
                                             : "key partition equals certificate partition")
                  << "\n";
        for (const auto& d : ledger)
            std::cerr << "discrepancy: " << selector(d.type) << " T(" << triple_str(d.triple) << ") printed "
                      << d.printed << " computed " << d.computed << " [" << d.table_ref << "]\n";
    }
    if (!ledger_path.empty()) {
        std::ofstream lf(ledger_path, std::ios::binary);
        lf << ledger_csv(ledger);
        if (!lf) {
            std::cerr << "error: cannot write " << ledger_path << "\n";
            return kExitConfig;
        }
    }
    return mismatch ? kExitMismatch : 0;
}
