#include "semimap/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semimap/tiling.hpp"

namespace semimap {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string tuple_str(const std::vector<int>& lens, int t) {
    return "(" + join(lens, ";") + " | " + std::to_string(t) + ")";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

bool same_lengths(TileType t, std::vector<int> printed, std::vector<int> ours) {
    if (printed.size() != ours.size()) return false;
    if (t == TileType::T33344) {
        if (printed[0] != ours[0]) return false;
        std::sort(printed.begin() + 1, printed.end());
        std::sort(ours.begin() + 1, ours.end());
        return printed == ours;
    }
    std::sort(printed.begin(), printed.end());
    std::sort(ours.begin(), ours.end());
    return printed == ours;
}

CycleClassProfile profile_of(const RepParams& p) {
    auto b = build_map(p);
    return cycle_profile(*b.map);
}

}  // namespace

std::vector<Discrepancy> reference_discrepancies(TileType t, const std::vector<Classification>& computed) {
    std::vector<Discrepancy> out;
    std::map<int, const Classification*> by_n;
    for (const auto& c : computed) by_n[c.n] = &c;
    for (const auto& row : reference_rows()) {
        if (row.type != t || !by_n.count(row.n)) continue;
        const auto& cl = *by_n[row.n];
        RepParams first{t, row.members[0].r, row.members[0].s, row.members[0].k};
        std::string ref = row_locator(row);

        // membership: the printed set must be one computed class
        std::set<std::string> printed;
        for (auto m : row.members) printed.insert(triple_str({t, m.r, m.s, m.k}));
        bool found = false;
        std::string where;
        for (const auto& ec : cl.classes) {
            std::set<std::string> ours;
            for (const auto& m : ec.members) ours.insert(triple_str(m));
            if (ours == printed) found = true;
            for (auto m : row.members)
                if (ours.count(triple_str({t, m.r, m.s, m.k}))) {
                    std::string ms;
                    for (const auto& x : ours) ms += (ms.empty() ? "" : ";") + x;
                    if (where.find(ms) == std::string::npos) where += (where.empty() ? "{" : " {") + ms + "}";
                }
        }
        if (!found) {
            std::string ps;
            for (const auto& x : printed) ps += (ps.empty() ? "" : ";") + x;
            for (const auto& x : cl.rejected)
                if (printed.count(triple_str(x))) where += (where.empty() ? "" : " ") + std::string("rejected ") + triple_str(x);
            out.push_back({t, first, "members {" + ps + "}", where.empty() ? "absent" : where, ref});
        }

        // length tuple of the first printed member
        auto b = build_map(first);
        if (!b) {
            out.push_back({t, first, tuple_str(row.lengths, row.transversal), "not a polyhedral map", ref});
            continue;
        }
        auto pr = cycle_profile(*b.map);
        if (!same_lengths(t, row.lengths, pr.class_lengths) || pr.transversal_lengths[0] != row.transversal)
            out.push_back({t, first, tuple_str(row.lengths, row.transversal),
                           tuple_str(pr.class_lengths, pr.transversal_lengths[0]), ref});
    }
    return out;
}

std::string ledger_csv(const std::vector<Discrepancy>& d) {
    std::string s = "type,triple,printed_value,computed_value,table_ref\n";
    for (const auto& x : d)
        s += std::string(selector(x.type)) + "," + csv_field(triple_str(x.triple)) + "," + csv_field(x.printed) + "," +
             csv_field(x.computed) + "," + csv_field(x.table_ref) + "\n";
    return s;
}

OracleCheck oracle_check(const Classification& c) {
    OracleCheck oc;
    std::map<IsoCertificate, std::vector<std::string>> by_cert;
    std::map<std::string, int> class_of;
    for (size_t i = 0; i < c.classes.size(); ++i)
        for (const auto& m : c.classes[i].members) {
            auto b = build_map(m);
            auto cert = certificate(*b.map);
            oc.certs[triple_str(m)] = cert;
            by_cert[cert].push_back(triple_str(m));
            class_of[triple_str(m)] = int(i);
        }
    std::string tn = std::string(selector(c.type)) + " n=" + std::to_string(c.n);
    for (const auto& [cert, ms] : by_cert) {
        std::set<int> ids;
        for (const auto& m : ms) ids.insert(class_of[m]);
        if (ids.size() > 1) {
            std::string s = tn + ": isomorphic triples in different classes:";
            for (const auto& m : ms) s += " " + m;
            oc.mismatches.push_back(s);
        }
    }
    for (size_t i = 0; i < c.classes.size(); ++i) {
        std::set<IsoCertificate> cs;
        for (const auto& m : c.classes[i].members) cs.insert(oc.certs[triple_str(m)]);
        if (cs.size() > 1) {
            std::string s = tn + ": class " + std::to_string(i + 1) + " mixes non-isomorphic maps:";
            for (const auto& m : c.classes[i].members) s += " " + triple_str(m);
            oc.mismatches.push_back(s);
        }
    }
    return oc;
}

std::string catalog_csv(const std::vector<Classification>& cs, bool header) {
    std::string s;
    if (header) s = "n,class_id,members,class_lengths,transversal_lengths,obj_count\n";
    for (const auto& c : cs) {
        for (size_t i = 0; i < c.classes.size(); ++i) {
            const auto& ec = c.classes[i];
            std::string mem;
            for (const auto& m : ec.members) mem += (mem.empty() ? "" : ";") + triple_str(m);
            auto pr = profile_of(ec.representative());
            s += std::to_string(c.n) + "," + std::to_string(i + 1) + "," + csv_field(mem) + "," +
                 join(pr.class_lengths, ";") + "," + join(pr.transversal_lengths, ";") + "," +
                 std::to_string(c.classes.size()) + "\n";
        }
    }
    return s;
}

std::string catalog_json(const std::vector<Classification>& cs, bool single,
                         const std::map<std::string, IsoCertificate>* certs) {
    using nlohmann::ordered_json;
    ordered_json arr = ordered_json::array();
    for (const auto& c : cs) {
        ordered_json o;
        o["type"] = std::string(selector(c.type));
        o["n"] = c.n;
        ordered_json classes = ordered_json::array();
        for (const auto& ec : c.classes) {
            ordered_json e;
            ordered_json key;
            if (ec.key.a1) key["a1"] = *ec.key.a1;
            ordered_json pairs = ordered_json::array();
            for (auto [l, t] : ec.key.pairs) pairs.push_back({l, t});
            key["pairs"] = pairs;
            auto pr = profile_of(ec.representative());
            key["class_lengths"] = pr.class_lengths;
            key["transversal_lengths"] = pr.transversal_lengths;
            e["key"] = key;
            ordered_json mem = ordered_json::array();
            for (const auto& m : ec.members) mem.push_back({m.r, m.s, m.k});
            e["members"] = mem;
            if (certs) {
                ordered_json cj = ordered_json::array();
                for (const auto& m : ec.members) {
                    auto it = certs->find(std::string(selector(c.type)) + ":" + triple_str(m));
                    if (it != certs->end()) cj.push_back(it->second.hex());
                }
                e["certificates"] = cj;
            }
            classes.push_back(e);
        }
        o["classes"] = classes;
        o["obj_count"] = int(c.classes.size());
        if (!c.rejected.empty()) {
            ordered_json rj = ordered_json::array();
            for (const auto& m : c.rejected) rj.push_back({m.r, m.s, m.k});
            o["rejected"] = rj;
        }
        arr.push_back(o);
    }
    if (single && arr.size() == 1) return arr[0].dump(2) + "\n";
    return arr.dump(2) + "\n";
}

}  // namespace semimap
