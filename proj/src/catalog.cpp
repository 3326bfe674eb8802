#include "ccm/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccm {

namespace {

// The class-number-one keys, n >= 3 and n != 2 (mod 4).
constexpr unsigned kCatalogKeys[] = {3,  4,  5,  7,  8,  9,  11, 12, 13, 15,
                                     16, 17, 19, 20, 21, 24, 25, 27, 28, 32,
                                     33, 35, 36, 40, 44, 45, 48, 60, 84};

std::optional<unsigned> prime_power_base_of(unsigned n) {
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned m = n;
            while (m % p == 0) m /= p;
            if (m == 1) return p;
            return std::nullopt;
        }
    }
    return n;  // n itself prime
}

std::vector<CyclotomicField> build_catalog() {
    std::vector<CyclotomicField> out;
    out.reserve(std::size(kCatalogKeys));
    for (unsigned n : kCatalogKeys) {
        CyclotomicField f;
        f.n = n;
        f.degree = static_cast<unsigned>(euler_phi(n));
        f.symmetry_order = std::lcm(2u, n);
        f.real_degree = f.degree / 2;
        f.prime_power_base = prime_power_base_of(n);
        f.is_prime_power = f.prime_power_base.has_value();
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const CyclotomicField& a, const CyclotomicField& b) {
        return std::pair(a.degree, a.n) < std::pair(b.degree, b.n);
    });
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

const std::vector<CyclotomicField>& catalog() {
    static const std::vector<CyclotomicField> table = build_catalog();
    return table;
}

bool in_catalog(unsigned n) {
    return std::find(std::begin(kCatalogKeys), std::end(kCatalogKeys), n) != std::end(kCatalogKeys);
}

const CyclotomicField& field_info(unsigned n) {
    for (const CyclotomicField& f : catalog())
        if (f.n == n) return f;
    if (n >= 6 && n % 4 == 2 && in_catalog(n / 2))
        throw std::domain_error("n = " + std::to_string(n) + " aliases the catalog entry n = " +
                                std::to_string(n / 2) + " (Z[xi_n] = Z[xi_{n/2}] for odd n/2); use n = " +
                                std::to_string(n / 2));
    throw std::domain_error("n = " + std::to_string(n) + " is not one of the 29 class-number-one catalog keys");
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw std::domain_error("euler_phi(0) is undefined");
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m % p == 0) return m == p;
    }
    std::uint64_t d = m - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Strong-pseudoprime test; this base set is deterministic below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

unsigned multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m <= 2) return 1;
    if (std::gcd(a, m) != 1) throw std::domain_error("multiplicative_order: arguments not coprime");
    a %= m;
    std::uint64_t x = a;
    unsigned k = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++k;
    }
    return k;
}

PrimeSplitting classify_prime(unsigned n, std::uint64_t p) {
    field_info(n);
    if (!is_prime(p)) throw std::domain_error("classify_prime: p = " + std::to_string(p) + " is not prime");

    PrimeSplitting s;
    s.p = p;
    s.n = n;

    std::uint64_t r = n;
    while (r % p == 0) r /= p;
    s.p_free_part = r;
    s.ramification = (r == n) ? 1u : static_cast<unsigned>(euler_phi(n / r));
    s.residue_degree = (r <= 2) ? 1u : multiplicative_order(p % r, r);
    s.num_primes = static_cast<unsigned>(euler_phi(r)) / s.residue_degree;

    // Complex splitting: -1 must avoid the subgroup generated by p in
    // (Z/rZ)^*. For r <= 2 the subgroup is trivial with -1 = 1, so never.
    bool minus_one_in_subgroup = true;
    if (r > 2) {
        minus_one_in_subgroup = false;
        std::uint64_t x = p % r;
        for (unsigned k = 0; k < s.residue_degree && !minus_one_in_subgroup; ++k) {
            if (x == r - 1) minus_one_in_subgroup = true;
            x = mulmod(x, p % r, r);
        }
    }
    s.is_complex_splitting = !minus_one_in_subgroup;
    if (s.is_complex_splitting) {
        std::uint64_t b = 1;
        for (unsigned i = 0; i < s.residue_degree; ++i) b *= p;
        s.basic_index = b;
    }
    return s;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> basic_indices(unsigned n, std::uint64_t p_max) {
    field_info(n);  // validates n
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        PrimeSplitting s = classify_prime(n, p);
        if (s.is_complex_splitting) out.emplace_back(p, *s.basic_index);
    }
    return out;
}

std::vector<long long> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::domain_error("cyclotomic_polynomial(0) is undefined");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact polynomial division.
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<long long> phi_d = cyclotomic_polynomial(d);
        std::vector<long long> quot(num.size() - phi_d.size() + 1, 0);
        for (std::size_t i = quot.size(); i-- > 0;) {
            long long c = num[i + phi_d.size() - 1];
            quot[i] = c;  // Phi_d is monic
            for (std::size_t j = 0; j < phi_d.size(); ++j) num[i + j] -= c * phi_d[j];
        }
        num = std::move(quot);
    }
    return num;
}

}  // namespace ccm
