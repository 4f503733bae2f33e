#pragma once

#include <map>
#include <string>
#include <vector>

#include "semimap/classify.hpp"
#include "semimap/oracle.hpp"
#include "semimap/reference.hpp"

namespace semimap {

struct Discrepancy {
    TileType type;
    RepParams triple;
    std::string printed, computed, table_ref;
};

// Length tuples and memberships of reference rows that differ from what we
// trace. `computed` is keyed by n.
std::vector<Discrepancy> reference_discrepancies(TileType t, const std::vector<Classification>& computed);

std::string ledger_csv(const std::vector<Discrepancy>& d);

struct OracleCheck {
    std::map<std::string, IsoCertificate> certs;   // by "r,s,k"
    std::vector<std::string> mismatches;           // human readable
    bool ok() const { return mismatches.empty(); }
};

// compares the key partition with the certificate partition
OracleCheck oracle_check(const Classification& c);

std::string catalog_csv(const std::vector<Classification>& cs, bool header = true);

// one object per classification; certs adds the representative's certificate
std::string catalog_json(const std::vector<Classification>& cs, bool single,
                         const std::map<std::string, IsoCertificate>* certs = nullptr);

}  // namespace semimap
