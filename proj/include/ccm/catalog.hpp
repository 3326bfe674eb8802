#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ccm {

/// One of the 29 cyclotomic rings Z[xi_n] with class number one.
struct CyclotomicField {
    unsigned n = 0;               // catalog key, n >= 3, n != 2 (mod 4)
    unsigned degree = 0;          // phi(n) = rank of Z[xi_n] over Z
    unsigned symmetry_order = 0;  // N(n) = lcm(2, n), order of the unit group
    unsigned real_degree = 0;     // phi(n)/2, degree of the maximal real subfield
    bool is_prime_power = false;
    std::optional<unsigned> prime_power_base;  // p when n = p^r
};

/// Splitting data of a rational prime p in the tower K_n / L_n / Q.
///
/// residue_degree is the characteristic integer ell_p; for complex splitting
/// primes num_primes equals m_p and the atomic coincidence index is
/// basic_index = p^ell_p.
struct PrimeSplitting {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t p_free_part = 0;  // largest divisor r of n coprime to p
    unsigned ramification = 0;      // e
    unsigned residue_degree = 0;    // f = ell_p
    unsigned num_primes = 0;        // g = m_p
    bool is_complex_splitting = false;
    std::optional<std::uint64_t> basic_index;  // p^f, present iff complex splitting
};

/// The 29 admissible n, sorted by (phi(n), n).
const std::vector<CyclotomicField>& catalog();

/// Catalog lookup. Throws std::domain_error for n outside the catalog;
/// for n = 2 (mod 4) the message names the equivalent odd key n/2.
const CyclotomicField& field_info(unsigned n);

bool in_catalog(unsigned n);

/// Euler's totient. Throws std::domain_error for m = 0.
std::uint64_t euler_phi(std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t m);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1; order 1 for m <= 2).
unsigned multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Splitting type of p in K_n. Throws std::domain_error if n is not in the
/// catalog or p is not prime.
PrimeSplitting classify_prime(unsigned n, std::uint64_t p);

/// All complex splitting primes p <= p_max with their basic indices p^ell_p,
/// sorted by p.
std::vector<std::pair<std::uint64_t, std::uint64_t>> basic_indices(unsigned n, std::uint64_t p_max);

/// Coefficients of the m-th cyclotomic polynomial, constant term first
/// (degree phi(m), monic).
std::vector<long long> cyclotomic_polynomial(unsigned m);

}  // namespace ccm
