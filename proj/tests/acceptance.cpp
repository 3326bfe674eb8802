// Acceptance suite: runs each criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.
// An optional argument selects a single criterion by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccm/analytic.hpp"
#include "ccm/catalog.hpp"
#include "ccm/counting.hpp"
#include "ccm/fixtures.hpp"
#include "ccm/oracle.hpp"

using namespace ccm;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> check;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool tables_1_2(std::string& detail) {
    std::string dir = fixtures::directory();
    bool ok1 = fixtures::to_csv(fixtures::derive_table1()) == read_file(dir + "/table1.csv");
    bool ok2 = fixtures::to_csv(fixtures::derive_table2()) == read_file(dir + "/table2.csv");
    if (!ok1) detail = "table1 string diff failed";
    if (!ok2) detail += std::string(detail.empty() ? "" : "; ") + "table2 string diff failed";
    return ok1 && ok2;
}

bool table_4(std::string& detail) {
    auto rows = fixtures::load_table4();
    if (rows.size() != 448) {  // known term count across all 29 rows
        detail = "table4 fixture has " + std::to_string(rows.size()) + " rows, expected 448";
        return false;
    }
    int bad = 0;
    for (const auto& row : rows) {
        std::uint64_t got = simple_count(row.n, row.k);
        if (got != row.value && ++bad <= 3)
            detail += "n=" + std::to_string(row.n) + " k=" + std::to_string(row.k) + " got " +
                      std::to_string(got) + " want " + std::to_string(row.value) + "; ";
    }
    return bad == 0;
}

bool table_5(std::string& detail) {
    auto rows = fixtures::load_table5();
    if (rows.size() != 368) {
        detail = "table5 fixture has " + std::to_string(rows.size()) + " rows, expected 368";
        return false;
    }
    int bad = 0;
    for (const auto& row : rows) {
        std::uint64_t got = multiple_count(row.n, row.k) - simple_count(row.n, row.k);
        if (got != row.value && ++bad <= 3)
            detail += "n=" + std::to_string(row.n) + " k=" + std::to_string(row.k) + " got " +
                      std::to_string(got) + " want " + std::to_string(row.value) + "; ";
    }
    return bad == 0;
}

bool table_3(std::string& detail) {
    bool ok = true;
    auto rows = fixtures::load_table3();
    if (rows.size() != 29) {
        detail = "table3 fixture has " + std::to_string(rows.size()) + " rows, expected 29";
        return false;
    }
    for (const auto& row : rows) {
        ResidueReport r = residues(row.n);
        auto check = [&](const char* what, double got, double want, double tol) {
            if (std::abs(got - want) > tol) {
                ok = false;
                char buf[128];
                std::snprintf(buf, sizeof buf, "n=%u %s got %.7f want %.6f; ", row.n, what, got, want);
                detail += buf;
            }
        };
        check("alpha", r.alpha, row.alpha, 5e-7);
        check("beta", r.beta, row.beta, 5e-7);
        check("gamma", r.gamma, row.gamma, 5e-7);
        if (std::abs(r.beta - r.q * r.gamma) > 1e-9) {
            ok = false;
            detail += "n=" + std::to_string(row.n) + " beta != q*gamma; ";
        }
    }
    ResidueReport r3 = residues(3);
    if (std::abs(r3.q - 1.034015) > 2e-6) {
        ok = false;
        detail += "q_3 out of tolerance; ";
    }
    return ok;
}

bool oracle_equivalence(std::string& detail) {
    for (unsigned n : {3u, 4u}) {
        for (std::uint64_t k = 1; k <= 20'000; ++k) {
            BruteForceCounts bf = brute_force_counts(n, k);
            if (bf.simple != simple_count(n, k) || bf.multiple != multiple_count(n, k)) {
                detail = "first mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool figure_indices(std::string& detail) {
    QuadraticIntegerElement omega{3, 2, -1};
    SubmoduleBasis fig0 = intersect_modules(
        3, {{{omega.conj().a, omega.conj().b}, {omega.a, omega.b}}});
    SubmoduleBasis fig1 = intersect_modules(4, {{{1, 2}, {1, -2}}, {{1, -2}, {1, 2}}});
    if (fig0.index != 7) detail = "triangular figure index " + std::to_string(fig0.index) + " != 7";
    if (fig1.index != 25)
        detail += std::string(detail.empty() ? "" : "; ") + "square figure index " +
                  std::to_string(fig1.index) + " != 25";
    return fig0.index == 7 && fig1.index == 25;
}

bool functional_equation(std::string& detail) {
    for (unsigned n : {3u, 5u, 12u}) {
        for (double s : {1.5, 2.0, 3.0}) {
            double gap = std::abs(psi_value(n, s) - phi_value(n, s) * std::sqrt(psi_value(n, 2.0 * s)));
            if (gap > 1e-10) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "n=%u s=%.1f gap %.3e", n, s, gap);
                detail = buf;
                return false;
            }
        }
    }
    return true;
}

bool asymptotic_slope(std::string& detail) {
    const std::uint64_t x = 1'000'000;
    CoefficientTable c = coefficient_table(3, Kind::simple, x);
    CoefficientTable b = coefficient_table(3, Kind::multiple, x);
    std::uint64_t sc = 0, sb = 0;
    for (std::uint64_t k = 1; k <= x; ++k) {
        sc += c.values[k];
        sb += b.values[k];
    }
    double gamma3 = std::sqrt(3.0) / (2.0 * 3.14159265358979323846);
    double beta3 = 0.285041;
    double dev_c = std::abs(static_cast<double>(sc) / x - gamma3) / gamma3;
    double dev_b = std::abs(static_cast<double>(sb) / x - beta3) / beta3;
    char buf[96];
    std::snprintf(buf, sizeof buf, "deviations %.4f%% (simple), %.4f%% (multiple)", 100 * dev_c,
                  100 * dev_b);
    detail = buf;
    return dev_c < 0.005 && dev_b < 0.005;
}

bool property_suites(std::string& detail) {
    // multiplicativity: 10^4 random coprime pairs with k*l <= 10^6, all kinds
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint64_t> draw(1, 1000);
    std::map<Kind, CoefficientTable> tables;
    for (Kind kind : {Kind::simple, Kind::multiple, Kind::ideal})
        tables.emplace(kind, coefficient_table(3, kind, 1'000'000));
    int done = 0;
    while (done < 10'000) {
        std::uint64_t k = draw(rng), l = draw(rng);
        if (std::gcd(k, l) != 1) continue;
        ++done;
        for (auto& [kind, table] : tables) {
            if (table.values[k * l] != table.values[k] * table.values[l]) {
                detail = "multiplicativity fails at k=" + std::to_string(k) + " l=" + std::to_string(l);
                return false;
            }
        }
    }

    // ordering and support equality up to 10^5 for every catalog n
    for (const CyclotomicField& f : catalog()) {
        CoefficientTable a = coefficient_table(f.n, Kind::ideal, 100'000);
        CoefficientTable bb = coefficient_table(f.n, Kind::multiple, 100'000);
        CoefficientTable cc = coefficient_table(f.n, Kind::simple, 100'000);
        for (std::uint64_t k = 1; k <= 100'000; ++k) {
            if (!(a.values[k] >= bb.values[k] && bb.values[k] >= cc.values[k])) {
                detail = "ordering fails at n=" + std::to_string(f.n) + " k=" + std::to_string(k);
                return false;
            }
            if ((bb.values[k] != 0) != (cc.values[k] != 0)) {
                detail = "support equality fails at n=" + std::to_string(f.n) + " k=" + std::to_string(k);
                return false;
            }
        }
    }

    // closed form b_3(k) = prod (r_j + 1) on the spectrum
    CoefficientTable b3 = coefficient_table(3, Kind::multiple, 100'000);
    for (std::uint64_t k = 1; k <= 100'000; ++k) {
        if (b3.values[k] == 0) continue;
        std::uint64_t expect = 1, rest = k;
        for (std::uint64_t p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            unsigned r = 0;
            while (rest % p == 0) {
                rest /= p;
                ++r;
            }
            expect *= r + 1;
        }
        if (rest > 1) expect *= 2;
        if (b3.values[k] != expect) {
            detail = "closed form fails at k=" + std::to_string(k);
            return false;
        }
    }

    // lcm identity on 100 random rotation pairs
    auto random_word = [&](unsigned n) {
        std::vector<std::uint64_t> split;
        for (std::uint64_t p = 2; p < 60; ++p)
            if (is_prime(p) && classify_prime(n, p).is_complex_splitting) split.push_back(p);
        RotationWord w;
        w.n = n;
        w.unit_exponent = static_cast<unsigned>(rng() % (n == 3 ? 6 : 4));
        std::uint64_t sigma = 1;
        for (int tries = 0; tries < 4; ++tries) {
            std::uint64_t p = split[rng() % split.size()];
            int t = static_cast<int>(rng() % 3) - 1;
            std::uint64_t extra = 1;
            for (int i = 0; i < std::abs(t); ++i) extra *= p;
            if (sigma * extra > 10'000) continue;
            sigma *= extra;
            w.factors[p] += t;
        }
        return w;
    };
    for (int trial = 0; trial < 100; ++trial) {
        unsigned n = trial % 2 ? 4 : 3;
        RotationRealization r1 = rotation_from_word(random_word(n));
        RotationRealization r2 = rotation_from_word(random_word(n));
        SubmoduleBasis both = intersect_modules(n, {{{r1.numerator.a, r1.numerator.b},
                                                     {r1.denominator.a, r1.denominator.b}},
                                                    {{r2.numerator.a, r2.numerator.b},
                                                     {r2.denominator.a, r2.denominator.b}}});
        QuadraticIntegerElement g = quad_gcd(r1.numerator, r2.numerator);
        QuadraticIntegerElement lcm = r1.numerator * divide_exact(r2.numerator, g);
        SubmoduleBasis principal = principal_ideal_hnf(n, {lcm.a, lcm.b});
        if (both.basis != principal.basis) {
            detail = "lcm identity fails at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool analytic_kernels(std::string& detail) {
    const double pi = 3.14159265358979323846;
    double worst = 0.0;
    worst = std::max(worst, std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0));
    worst = std::max(worst, std::abs(hurwitz_zeta(2.0, 0.5) - pi * pi / 2.0));
    double mult = 0.0;
    for (int r = 1; r <= 5; ++r) mult += hurwitz_zeta(3.0, r / 5.0);
    worst = std::max(worst, std::abs(mult - 125.0 * hurwitz_zeta(3.0, 1.0)) / 125.0);
    worst = std::max(worst, std::abs(digamma(1.3) - digamma(0.3) - 1.0 / 0.3));
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst defect %.3e", worst);
    detail = buf;
    return worst <= 1e-11;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "tables 1/2 reproduction (string-level)", tables_1_2},
        {2, "table 4 reproduction (simple counts)", table_4},
        {3, "table 5 reproduction (multiple - simple)", table_5},
        {4, "table 3 reproduction (alpha, beta, gamma, q_3)", table_3},
        {5, "oracle equivalence for n in {3,4}, k <= 2*10^4", oracle_equivalence},
        {6, "figure indices Sigma=7 and Sigma=25", figure_indices},
        {7, "functional equation Psi(s) = Phi(s) Psi(2s)^(1/2)", functional_equation},
        {8, "asymptotic slope at x = 10^6 within 0.5%", asymptotic_slope},
        {9, "property suites (multiplicativity, ordering, support, closed form, lcm)",
         property_suites},
        {10, "analytic kernel identities within 1e-11", analytic_kernels},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
