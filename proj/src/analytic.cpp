#include "ccm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_2, B_4, ..., B_16
constexpr double kBernoulli[8] = {1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                  5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};

// ---------------------------------------------------------------------------
// Character group of (Z/nZ)^*
// ---------------------------------------------------------------------------

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

// Smallest primitive root modulo p^e (p odd prime).
std::uint64_t primitive_root(std::uint64_t pe, std::uint64_t p) {
    std::uint64_t order = euler_phi(pe);
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = order;
    for (std::uint64_t q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_factors.push_back(m);
    for (std::uint64_t g = 2; g < pe; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (std::uint64_t q : prime_factors)
            if (powmod_u(g, order / q, pe) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

struct CyclicComponent {
    std::uint64_t generator = 1;  // lifted to a residue mod n
    unsigned order = 1;
};

struct UnitGroup {
    unsigned n = 1;
    std::vector<CyclicComponent> components;
    std::map<unsigned, std::vector<unsigned>> dlog;  // residue -> exponent tuple
};

// CRT lift: x = g (mod pe), x = 1 (mod n/pe).
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t pe, std::uint64_t n) {
    for (std::uint64_t x = g; x < n + g; x += pe)
        if (x % (n / pe) == 1 % (n / pe)) return x % n;
    throw std::logic_error("crt lift failed");
}

UnitGroup build_unit_group(unsigned n) {
    UnitGroup ug;
    ug.n = n;
    unsigned m = n;
    unsigned two_part = 1;
    while (m % 2 == 0) {
        m /= 2;
        two_part *= 2;
    }
    if (two_part == 4) {
        ug.components.push_back({crt_lift(3, 4, n), 2});
    } else if (two_part >= 8) {
        ug.components.push_back({crt_lift(two_part - 1, two_part, n), 2});
        ug.components.push_back({crt_lift(3, two_part, n), two_part / 4});
    }
    for (unsigned p = 3; p <= m; p += 2) {
        if (m % p != 0) continue;
        unsigned pe = 1;
        while (m % p == 0) {
            m /= p;
            pe *= p;
        }
        ug.components.push_back(
            {crt_lift(primitive_root(pe, p), pe, n), static_cast<unsigned>(euler_phi(pe))});
    }

    // Enumerate every exponent tuple; the products cover (Z/nZ)^* exactly once.
    std::vector<unsigned> tuple(ug.components.size(), 0);
    while (true) {
        std::uint64_t r = 1 % n;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            r = r * powmod_u(ug.components[i].generator, tuple[i], n) % n;
        ug.dlog[static_cast<unsigned>(r)] = tuple;
        std::size_t i = 0;
        for (; i < tuple.size(); ++i) {
            if (++tuple[i] < ug.components[i].order) break;
            tuple[i] = 0;
        }
        if (i == tuple.size()) break;
    }
    if (ug.dlog.size() != euler_phi(n)) throw std::logic_error("unit group enumeration incomplete");
    return ug;
}

RootOfUnity character_value(const UnitGroup& ug, const std::vector<unsigned>& chi_tuple, unsigned r) {
    const std::vector<unsigned>& x = ug.dlog.at(r);
    long long num = 0, den = 1;
    for (std::size_t i = 0; i < chi_tuple.size(); ++i) {
        long long d = ug.components[i].order;
        long long e = static_cast<long long>(chi_tuple[i]) * x[i] % d;
        num = num * d + e * den;
        den *= d;
    }
    return RootOfUnity::from(num, den);
}

bool value_table_less(const DirichletCharacter& a, const DirichletCharacter& b) {
    auto ita = a.values.begin();
    auto itb = b.values.begin();
    for (; ita != a.values.end() && itb != b.values.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return ita->first < itb->first;
        // compare exponents num/den as fractions, exactly
        long long lhs = ita->second.num * itb->second.den;
        long long rhs = itb->second.num * ita->second.den;
        if (lhs != rhs) return lhs < rhs;
    }
    return a.values.size() < b.values.size();
}

std::vector<DirichletCharacter> build_characters(unsigned n) {
    field_info(n);
    UnitGroup ug = build_unit_group(n);

    std::vector<DirichletCharacter> out;
    std::vector<unsigned> chi(ug.components.size(), 0);
    while (true) {
        DirichletCharacter c;
        c.modulus = n;

        // Conductor: smallest f | n with chi trivial on {r = 1 (mod f)}.
        for (unsigned f = 1; f <= n; ++f) {
            if (n % f != 0) continue;
            bool trivial = true;
            for (const auto& [r, x] : ug.dlog) {
                if (r % f != 1 % f) continue;
                if (!(character_value(ug, chi, r) == RootOfUnity{})) {
                    trivial = false;
                    break;
                }
            }
            if (trivial) {
                c.conductor = f;
                break;
            }
        }
        c.is_principal = c.conductor == 1;

        // Values of the primitive character: lift residues mod f to residues
        // mod n that stay coprime to n.
        for (unsigned s = 1; s <= c.conductor; ++s) {
            if (std::gcd(s, c.conductor) != 1) continue;
            unsigned lift = s;
            while (std::gcd<std::uint64_t>(lift, n) != 1) lift += c.conductor;
            c.values[s] = character_value(ug, chi, lift % n);
        }
        // chi(-1) = +1 iff even.
        c.is_even = character_value(ug, chi, n - 1) == RootOfUnity{};

        out.push_back(std::move(c));
        std::size_t i = 0;
        for (; i < chi.size(); ++i) {
            if (++chi[i] < ug.components[i].order) break;
            chi[i] = 0;
        }
        if (i == chi.size()) break;
    }

    std::sort(out.begin(), out.end(), [](const DirichletCharacter& a, const DirichletCharacter& b) {
        if (a.is_principal != b.is_principal) return a.is_principal;
        if (a.conductor != b.conductor) return a.conductor < b.conductor;
        return value_table_less(a, b);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

// Direct Dirichlet series for large s, where a handful of terms suffices.
std::complex<double> l_direct(const DirichletCharacter& chi, double s) {
    std::complex<double> sum = 0.0;
    for (std::uint64_t m = 1;; ++m) {
        double t = std::pow(static_cast<double>(m), -s);
        if (m > 1 && t < 1e-22) break;
        sum += chi(m) * t;
    }
    return sum;
}

}  // namespace

RootOfUnity RootOfUnity::from(long long e, long long d) {
    if (d <= 0) throw std::domain_error("root of unity: denominator must be positive");
    e %= d;
    if (e < 0) e += d;
    long long g = std::gcd(e, d);
    if (e == 0) return {0, 1};
    return {e / g, d / g};
}

std::complex<double> RootOfUnity::value() const {
    double t = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

const RootOfUnity* DirichletCharacter::exact_value(std::uint64_t k) const {
    unsigned r = static_cast<unsigned>(k % conductor);
    if (r == 0) r = conductor;
    auto it = values.find(r);
    return it == values.end() ? nullptr : &it->second;
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t k) const {
    const RootOfUnity* v = exact_value(k);
    return v ? v->value() : std::complex<double>(0.0, 0.0);
}

const std::vector<DirichletCharacter>& characters(unsigned n) {
    static std::mutex lock;
    static std::map<unsigned, std::vector<DirichletCharacter>> cache;
    std::scoped_lock guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_characters(n)).first;
    return it->second;
}

bool character_sum_is_zero(const DirichletCharacter& chi) {
    // sum chi(r) = sum_k count_k zeta_D^k with D = lcm of the value orders;
    // the sum vanishes iff Phi_D divides the count polynomial.
    long long d_lcm = 1;
    for (const auto& [r, v] : chi.values) d_lcm = std::lcm(d_lcm, v.den);
    std::vector<long long> counts(static_cast<std::size_t>(d_lcm), 0);
    for (const auto& [r, v] : chi.values) counts[static_cast<std::size_t>(v.num * (d_lcm / v.den))] += 1;

    std::vector<long long> phi = cyclotomic_polynomial(static_cast<unsigned>(d_lcm));
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = counts.size(); k-- > deg;) {
        long long top = counts[k];
        if (top == 0) continue;
        counts[k] = 0;
        for (std::size_t i = 0; i < deg; ++i) counts[k - deg + i] -= top * phi[i];
    }
    return std::all_of(counts.begin(), counts.end(), [](long long c) { return c == 0; });
}

double hurwitz_zeta(double s, double a) {
    if (!(a > 0.0) || a > 1.0) throw std::domain_error("hurwitz_zeta: a must be in (0, 1]");
    if (s == 1.0) throw pole_error("hurwitz_zeta has a pole at s = 1");

    // Euler-Maclaurin: explicit terms until a + K >= 15, then an 8-term
    // Bernoulli tail. Validated to 1e-12 absolute for s >= 1/2.
    int take = std::max(0, static_cast<int>(std::ceil(15.0 - a)));
    double sum = 0.0;
    for (int k = 0; k < take; ++k) sum += std::pow(a + k, -s);
    double x = a + take;
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(x, -s);
    double rising = s;  // s(s+1)...(s+2j-2)
    double factorial = 2.0;
    double power = std::pow(x, -s - 1.0);
    for (int j = 1; j <= 8; ++j) {
        sum += kBernoulli[j - 1] / factorial * rising * power;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        factorial *= (2 * j + 1) * (2 * j + 2);
        power /= x * x;
    }
    return sum;
}

double digamma(double a) {
    if (!(a > 0.0)) throw std::domain_error("digamma: argument must be positive");
    double result = 0.0;
    while (a < 12.0) {
        result -= 1.0 / a;
        a += 1.0;
    }
    result += std::log(a) - 0.5 / a;
    double x2 = 1.0 / (a * a);
    double power = x2;
    for (int j = 1; j <= 8; ++j) {
        result -= kBernoulli[j - 1] / (2 * j) * power;
        power *= x2;
    }
    return result;
}

std::complex<double> l_value(const DirichletCharacter& chi, double s) {
    if (s < 1.0) throw std::domain_error("l_value: s >= 1 required");
    if (chi.is_principal) {
        if (s == 1.0) throw pole_error("L(s, principal) = zeta(s) has a pole at s = 1");
        return {hurwitz_zeta(s, 1.0), 0.0};
    }
    const double q = chi.conductor;
    if (s == 1.0) {
        std::complex<double> sum = 0.0;
        for (const auto& [r, v] : chi.values) sum += v.value() * digamma(r / q);
        return -sum / q;
    }
    if (s >= 32.0) return l_direct(chi, s);
    std::complex<double> sum = 0.0;
    for (const auto& [r, v] : chi.values) sum += v.value() * hurwitz_zeta(s, r / q);
    return sum * std::pow(q, -s);
}

namespace {

double real_character_product(unsigned n, double s, bool even_only, bool skip_principal,
                              const char* what) {
    std::complex<double> prod = 1.0;
    for (const DirichletCharacter& chi : characters(n)) {
        if (even_only && !chi.is_even) continue;
        if (skip_principal && chi.is_principal) continue;
        prod *= l_value(chi, s);
    }
    if (std::abs(prod.imag()) > 1e-10 * std::max(1.0, std::abs(prod.real())))
        throw std::runtime_error(std::string(what) + ": residual imaginary part too large");
    return prod.real();
}

}  // namespace

double dedekind_zeta_K(unsigned n, double s) {
    if (!(s > 1.0)) throw pole_error("dedekind_zeta_K requires s > 1");
    return real_character_product(n, s, false, false, "dedekind_zeta_K");
}

double dedekind_zeta_L(unsigned n, double s) {
    if (!(s > 1.0)) throw pole_error("dedekind_zeta_L requires s > 1");
    return real_character_product(n, s, true, false, "dedekind_zeta_L");
}

double phi_value(unsigned n, double s) {
    if (!(s > 1.0)) throw std::domain_error("phi_value requires s > 1");
    const CyclotomicField& f = field_info(n);
    double v = dedekind_zeta_K(n, s) / dedekind_zeta_L(n, 2.0 * s);
    if (f.is_prime_power) v /= 1.0 + std::pow(static_cast<double>(*f.prime_power_base), -s);
    return v;
}

double psi_value(unsigned n, double s) {
    if (!(s > 1.0)) throw std::domain_error("psi_value requires s > 1");
    double result = 1.0;
    double weight = 1.0;
    double arg = s;
    for (int level = 0; level <= 24; ++level) {
        double factor = phi_value(n, arg);
        result *= std::pow(factor, weight);
        if (std::abs(factor - 1.0) * weight < 1e-14) break;
        weight *= 0.5;
        arg *= 2.0;
    }
    return result;
}

ResidueReport residues(unsigned n) {
    const CyclotomicField& f = field_info(n);
    ResidueReport r;
    r.n = n;

    r.alpha = real_character_product(n, 1.0, false, true, "alpha");
    double zl2 = dedekind_zeta_L(n, 2.0);
    r.gamma = r.alpha / zl2;
    if (f.is_prime_power) {
        double p = static_cast<double>(*f.prime_power_base);
        r.gamma *= p / (p + 1.0);
    }

    // q_n = prod_{l>=1} Phi_n(2^l)^(1/2^l); the factors approach 1 double-
    // exponentially, so the product is truncated once a log-contribution
    // drops below 1e-15 (hard cap 24 levels).
    double q = 1.0;
    double weight = 0.5;
    double arg = 2.0;
    for (int level = 1; level <= 24; ++level) {
        double factor = phi_value(n, arg);
        q *= std::pow(factor, weight);
        if (std::log(factor) * weight < 1e-15) break;
        weight *= 0.5;
        arg *= 2.0;
    }
    r.q = q;
    r.beta = r.q * r.gamma;

    const double rel = 1e-11 * f.degree;  // per-L-value model, accumulated
    r.alpha_err = std::abs(r.alpha) * rel;
    r.gamma_err = std::abs(r.gamma) * 2.0 * rel;
    r.q_err = std::abs(r.q) * rel;
    r.beta_err = std::abs(r.beta) * 3.0 * rel;
    return r;
}

}  // namespace ccm
