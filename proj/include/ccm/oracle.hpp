#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ccm/catalog.hpp"

namespace ccm {

/// Element a + b*xi_n of Z[xi_3] (Eisenstein) or Z[xi_4] (Gaussian).
struct QuadraticIntegerElement {
    unsigned n = 3;  // 3 or 4
    long long a = 0;
    long long b = 0;

    long long norm() const;  // a^2 - ab + b^2 (n=3) or a^2 + b^2 (n=4)
    QuadraticIntegerElement conj() const;
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return norm() == 1; }

    /// The unique associate with 0 <= b < a (n=3) resp. a > 0, b >= 0 (n=4);
    /// zero maps to zero.
    QuadraticIntegerElement canonical() const;

    friend QuadraticIntegerElement operator*(const QuadraticIntegerElement& x,
                                             const QuadraticIntegerElement& y);
    friend QuadraticIntegerElement operator-(const QuadraticIntegerElement& x,
                                             const QuadraticIntegerElement& y);
    friend bool operator==(const QuadraticIntegerElement& x, const QuadraticIntegerElement& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b;
    }
};

/// True iff y divides x exactly in Z[xi_n].
bool divides(const QuadraticIntegerElement& y, const QuadraticIntegerElement& x);

QuadraticIntegerElement divide_exact(const QuadraticIntegerElement& x, const QuadraticIntegerElement& y);

/// gcd up to units (both rings are norm-Euclidean).
QuadraticIntegerElement quad_gcd(QuadraticIntegerElement x, QuadraticIntegerElement y);

/// One canonical representative per unit class of elements of norm k,
/// sorted by (a, b). Length equals the ideal count a_n(k).
std::vector<QuadraticIntegerElement> norm_form_elements(unsigned n, std::uint64_t k);

/// The canonical prime element over a complex splitting prime p: the
/// sector representative of larger argument among the conjugate pair
/// (e.g. 1 + 2i over p = 5).
QuadraticIntegerElement prime_element(unsigned n, std::uint64_t p);

/// A coincidence rotation written as unit * prod (omega_p / conj omega_p)^t_p.
struct RotationWord {
    unsigned n = 3;                        // 3 or 4
    unsigned unit_exponent = 0;            // power of the primitive unit, mod N(n)
    std::map<std::uint64_t, int> factors;  // splitting prime p -> t_p
};

struct RotationRealization {
    QuadraticIntegerElement numerator;
    QuadraticIntegerElement denominator;
    std::uint64_t sigma = 1;  // coincidence index = |norm(numerator)|
};

/// Coprime numerator/denominator realization of the word; the simple CSM is
/// the principal ideal of the numerator. Throws std::domain_error when a
/// factor prime is not complex splitting.
RotationRealization rotation_from_word(const RotationWord& word);

/// Full-rank submodule of Z[xi_n] in the power basis {1, xi, ..., xi^(phi(n)-1)}.
/// basis[i][j] is row i of column j; upper triangular with positive diagonal,
/// entries right of the diagonal reduced modulo it.
struct SubmoduleBasis {
    unsigned n = 0;
    unsigned rank = 0;
    std::vector<std::vector<long long>> basis;
    std::uint64_t index = 1;  // = product of the diagonal = [Z[xi_n] : M]
};

/// A rotation u/v given by exact integer coordinate vectors of length phi(n)
/// in the power basis.
struct RotationPair {
    std::vector<long long> numerator;
    std::vector<long long> denominator;
};

/// HNF basis of Z[xi_n] ∩ ⋂_i (u_i/v_i) Z[xi_n], computed exactly (128-bit
/// arithmetic with arbitrary-precision fallback). Throws std::domain_error
/// when some |u_i/v_i| != 1. The empty intersection list yields the identity
/// basis of index 1.
SubmoduleBasis intersect_modules(unsigned n, const std::vector<RotationPair>& rotations);

/// HNF basis of the principal ideal generated by the element with the given
/// power-basis coordinates.
SubmoduleBasis principal_ideal_hnf(unsigned n, const std::vector<long long>& element);

namespace detail {
/// intersect_modules on the arbitrary-precision engine, bypassing the
/// 128-bit fast path (the fast path falls back to this on overflow).
SubmoduleBasis intersect_modules_bignum(unsigned n, const std::vector<RotationPair>& rotations);
}  // namespace detail

struct BruteForceCounts {
    std::uint64_t simple = 0;
    std::uint64_t multiple = 0;
};

/// Counts of simple/multiple CSMs of index k for n in {3, 4}, derived purely
/// from norm-form enumeration and element divisibility (independent of the
/// Euler-factor formulas).
BruteForceCounts brute_force_counts(unsigned n, std::uint64_t k);

}  // namespace ccm
