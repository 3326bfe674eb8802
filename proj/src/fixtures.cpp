#include "ccm/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ccm/catalog.hpp"

#ifndef CCM_DEFAULT_FIXTURE_DIR
#define CCM_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace ccm::fixtures {

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& dir, const std::string& name,
                                               std::size_t columns) {
    std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != columns)
            throw std::runtime_error("malformed fixture row in " + path + ": " + line);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

std::string directory() {
    if (const char* env = std::getenv("CCM_FIXTURES"); env && *env) return env;
    return CCM_DEFAULT_FIXTURE_DIR;
}

std::vector<Table1Row> load_table1(const std::string& dir) {
    std::vector<Table1Row> out;
    for (const auto& f : read_csv(dir, "table1.csv", 3))
        out.push_back({static_cast<unsigned>(std::stoul(f[0])), static_cast<unsigned>(std::stoul(f[1])),
                       static_cast<unsigned>(std::stoul(f[2]))});
    return out;
}

std::vector<Table2Row> load_table2(const std::string& dir) {
    std::vector<Table2Row> out;
    for (const auto& f : read_csv(dir, "table2.csv", 6))
        out.push_back({static_cast<unsigned>(std::stoul(f[0])), std::stoull(f[1]), std::stoull(f[2]),
                       std::stoull(f[3]), static_cast<unsigned>(std::stoul(f[4])),
                       static_cast<unsigned>(std::stoul(f[5]))});
    return out;
}

std::vector<Table3Row> load_table3(const std::string& dir) {
    std::vector<Table3Row> out;
    for (const auto& f : read_csv(dir, "table3.csv", 4))
        out.push_back({static_cast<unsigned>(std::stoul(f[0])), std::stod(f[1]), std::stod(f[2]),
                       std::stod(f[3])});
    return out;
}

std::vector<CoefficientRow> load_table4(const std::string& dir) {
    std::vector<CoefficientRow> out;
    for (const auto& f : read_csv(dir, "table4.csv", 3))
        out.push_back({static_cast<unsigned>(std::stoul(f[0])), std::stoull(f[1]), std::stoull(f[2])});
    return out;
}

std::vector<CoefficientRow> load_table5(const std::string& dir) {
    std::vector<CoefficientRow> out;
    for (const auto& f : read_csv(dir, "table5.csv", 3))
        out.push_back({static_cast<unsigned>(std::stoul(f[0])), std::stoull(f[1]), std::stoull(f[2])});
    return out;
}

std::vector<Table1Row> derive_table1() {
    std::vector<Table1Row> out;
    for (const CyclotomicField& f : catalog()) {
        std::vector<Table1Row> rows;
        for (unsigned k = 1; k < f.n; ++k) {
            if (std::gcd(k, f.n) != 1) continue;
            // Classification of unramified p depends only on p mod n; use the
            // smallest prime witness in the class.
            std::uint64_t p = k;
            while (p < 2 || !is_prime(p)) p += f.n;
            PrimeSplitting s = classify_prime(f.n, p);
            if (s.is_complex_splitting) rows.push_back({f.n, k, s.residue_degree});
        }
        std::sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
            return std::pair(a.l, a.k) < std::pair(b.l, b.k);
        });
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<Table2Row> derive_table2() {
    std::vector<Table2Row> out;
    for (const CyclotomicField& f : catalog()) {
        for (std::uint64_t p = 2; p <= f.n; ++p) {
            if (f.n % p != 0 || !is_prime(p)) continue;
            PrimeSplitting s = classify_prime(f.n, p);
            if (s.is_complex_splitting)
                out.push_back({f.n, p, s.p_free_part, euler_phi(s.p_free_part), s.residue_degree,
                               s.num_primes});
        }
    }
    return out;
}

std::string to_csv(const std::vector<Table1Row>& rows) {
    std::string s = "n,k,l\n";
    for (const Table1Row& r : rows)
        s += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.l) + "\n";
    return s;
}

std::string to_csv(const std::vector<Table2Row>& rows) {
    std::string s = "n,p,r,phi_r,l,m\n";
    for (const Table2Row& r : rows)
        s += std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.r) + "," +
             std::to_string(r.phi_r) + "," + std::to_string(r.l) + "," + std::to_string(r.m) + "\n";
    return s;
}

}  // namespace ccm::fixtures
