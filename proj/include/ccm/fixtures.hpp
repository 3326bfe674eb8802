#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccm::fixtures {

/// Fixture directory: $CCM_FIXTURES when set, else the build-time default
/// (the repository's data/fixtures).
std::string directory();

struct Table1Row {  // unramified complex splitting classes: p = k (mod n) -> p^l
    unsigned n;
    unsigned k;
    unsigned l;
    bool operator==(const Table1Row&) const = default;
};

struct Table2Row {  // ramified complex splitting primes
    unsigned n;
    std::uint64_t p;
    std::uint64_t r;
    std::uint64_t phi_r;
    unsigned l;
    unsigned m;
    bool operator==(const Table2Row&) const = default;
};

struct Table3Row {  // residue constants, 6 printed decimals
    unsigned n;
    double alpha;
    double beta;
    double gamma;
};

struct CoefficientRow {  // tables 4 and 5: k -> coefficient
    unsigned n;
    std::uint64_t k;
    std::uint64_t value;
    bool operator==(const CoefficientRow&) const = default;
};

std::vector<Table1Row> load_table1(const std::string& dir = directory());
std::vector<Table2Row> load_table2(const std::string& dir = directory());
std::vector<Table3Row> load_table3(const std::string& dir = directory());
std::vector<CoefficientRow> load_table4(const std::string& dir = directory());
std::vector<CoefficientRow> load_table5(const std::string& dir = directory());

/// Rows derived from the library (same order conventions as the files):
/// catalog order in n; table 1 sorted by (l, k) within n.
std::vector<Table1Row> derive_table1();
std::vector<Table2Row> derive_table2();

std::string to_csv(const std::vector<Table1Row>& rows);
std::string to_csv(const std::vector<Table2Row>& rows);

}  // namespace ccm::fixtures
