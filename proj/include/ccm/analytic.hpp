#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "ccm/catalog.hpp"

namespace ccm {

/// Exact root of unity exp(2*pi*i * num/den), num/den reduced with
/// 0 <= num < den. Complex evaluation happens only at the final numeric step.
struct RootOfUnity {
    long long num = 0;
    long long den = 1;

    static RootOfUnity from(long long e, long long d);
    RootOfUnity operator*(const RootOfUnity& o) const { return from(num * o.den + o.num * den, den * o.den); }
    bool operator==(const RootOfUnity& o) const { return num == o.num && den == o.den; }
    std::complex<double> value() const;
};

/// Primitive Dirichlet character, stored by its exact root-of-unity values
/// on the residues coprime to the conductor.
struct DirichletCharacter {
    unsigned modulus = 1;    // the inducing modulus n
    unsigned conductor = 1;  // f_chi, minimal period
    bool is_even = true;     // chi(-1) = +1
    bool is_principal = false;
    std::map<unsigned, RootOfUnity> values;  // residue mod conductor -> value

    /// chi(k): 0 when gcd(k, conductor) > 1.
    std::complex<double> operator()(std::uint64_t k) const;
    /// Exact value, or nullptr when chi(k) = 0.
    const RootOfUnity* exact_value(std::uint64_t k) const;
};

/// The phi(n) primitive characters inducing the characters mod n, principal
/// first, then ordered by (conductor, value table).
const std::vector<DirichletCharacter>& characters(unsigned n);

/// Exact test of sum_{r=1}^{conductor} chi(r) = 0 (true for every
/// non-principal character), via polynomial reduction mod a cyclotomic
/// polynomial — no floating point involved.
bool character_sum_is_zero(const DirichletCharacter& chi);

/// Hurwitz zeta(s, a) for 0 < a <= 1, s != 1, by Euler-Maclaurin summation;
/// absolute error <= 1e-12 for s >= 1/2. Throws pole_error at s = 1.
double hurwitz_zeta(double s, double a);

/// Gamma'(a)/Gamma(a) for a > 0, absolute error <= 1e-12.
double digamma(double a);

/// L(s, chi) for s >= 1 (s > 1 when principal; throws pole_error otherwise).
std::complex<double> l_value(const DirichletCharacter& chi, double s);

/// Dedekind zeta of K_n = Q(xi_n) resp. of its maximal real subfield L_n,
/// for s > 1, as the product of L-values over all (resp. the even) characters.
double dedekind_zeta_K(unsigned n, double s);
double dedekind_zeta_L(unsigned n, double s);

/// Phi_n(s) = zeta_K(s) / zeta_L(2s), with the extra factor (1+p^-s)^-1 when
/// n is a prime power. Generating function of the simple-CSM counts.
double phi_value(unsigned n, double s);

/// Psi_n(s) = prod_{l>=0} Phi_n(2^l s)^(1/2^l). Generating function of the
/// multiple-CSM counts.
double psi_value(unsigned n, double s);

/// Residues at s = 1 and the multiple/simple ratio, with attached absolute
/// error bounds.
struct ResidueReport {
    unsigned n = 0;
    double alpha = 0;  // res zeta_K = prod_{chi != 1} L(1, chi)
    double gamma = 0;  // res Phi_n
    double q = 1;      // lim Psi_n / Phi_n
    double beta = 0;   // res Psi_n = q * gamma
    double alpha_err = 0, gamma_err = 0, q_err = 0, beta_err = 0;
};

ResidueReport residues(unsigned n);

}  // namespace ccm
