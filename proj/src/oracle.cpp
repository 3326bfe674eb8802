#include "ccm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ccm/bigint.hpp"
#include "ccm/errors.hpp"

namespace ccm {

namespace {

using i64 = long long;
using u64 = std::uint64_t;
using i128 = __int128;

void require_quadratic(unsigned n) {
    if (n != 3 && n != 4)
        throw std::domain_error("quadratic element operations are defined for n in {3, 4}");
}

i64 isqrt64(i64 v) {
    if (v < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// ---------------------------------------------------------------------------
// Exact integer engine: Checked128 with std::overflow_error on wrap, and the
// templated lattice routines shared with the BigInt fallback.
// ---------------------------------------------------------------------------

struct Checked128 {
    i128 v = 0;

    Checked128() = default;
    Checked128(long long x) : v(x) {}  // NOLINT(google-explicit-constructor)

    friend Checked128 operator+(Checked128 a, Checked128 b) {
        Checked128 r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw std::overflow_error("128-bit add overflow");
        return r;
    }
    friend Checked128 operator-(Checked128 a, Checked128 b) {
        Checked128 r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw std::overflow_error("128-bit sub overflow");
        return r;
    }
    friend Checked128 operator*(Checked128 a, Checked128 b) {
        Checked128 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw std::overflow_error("128-bit mul overflow");
        return r;
    }
    Checked128 operator-() const { return Checked128(0) - *this; }
    Checked128& operator+=(Checked128 b) { return *this = *this + b; }
    Checked128& operator-=(Checked128 b) { return *this = *this - b; }
    Checked128& operator*=(Checked128 b) { return *this = *this * b; }
    friend Checked128 operator/(Checked128 a, Checked128 b) {
        Checked128 r;
        r.v = a.v / b.v;  // toward zero
        return r;
    }
    friend Checked128 operator%(Checked128 a, Checked128 b) {
        Checked128 r;
        r.v = a.v % b.v;
        return r;
    }
    friend bool operator==(Checked128 a, Checked128 b) { return a.v == b.v; }
    friend bool operator!=(Checked128 a, Checked128 b) { return a.v != b.v; }
    friend bool operator<(Checked128 a, Checked128 b) { return a.v < b.v; }
    friend bool operator>(Checked128 a, Checked128 b) { return a.v > b.v; }

    bool is_zero() const { return v == 0; }
    bool is_negative() const { return v < 0; }
    long long to_int64() const {
        if (v > i128(0x7fffffffffffffffll) || v < -i128(0x7fffffffffffffffll) - 1)
            throw std::overflow_error("value exceeds 64 bits");
        return static_cast<long long>(v);
    }
};

template <typename T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    T r = a % b;
    if (!r.is_zero() && (a.is_negative() != b.is_negative())) q = q - T(1);
    return q;
}

template <typename T>
T abs_of(const T& a) {
    return a.is_negative() ? -a : a;
}

template <typename T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t d) {
        Mat m(d, d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = T(1);
        return m;
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows; ++i) at(i, j) = -at(i, j);
    }
    // col_j -= q * col_k
    void submul_col(std::size_t j, std::size_t k, const T& q) {
        if (q.is_zero()) return;
        for (std::size_t i = 0; i < rows; ++i) at(i, j) = at(i, j) - q * at(i, k);
    }
};

// Column echelon form, rows eliminated bottom-up. Pivot columns are packed at
// the right end (row i's pivot lands at column cols - d + rank_position); the
// remaining left columns become identically zero. When `transform` is given,
// identical column operations are mirrored into it (used for kernels).
template <typename T>
std::size_t column_echelon(Mat<T>& m, Mat<T>* transform) {
    std::size_t active = m.cols;
    for (std::size_t row = m.rows; row-- > 0 && active > 0;) {
        while (true) {
            std::size_t best = active;
            for (std::size_t j = 0; j < active; ++j) {
                if (m.at(row, j).is_zero()) continue;
                if (best == active || abs_of(m.at(row, j)) < abs_of(m.at(row, best))) best = j;
            }
            if (best == active) break;  // row clear in active region
            bool others = false;
            for (std::size_t j = 0; j < active; ++j) {
                if (j == best || m.at(row, j).is_zero()) continue;
                T q = m.at(row, j) / m.at(row, best);
                m.submul_col(j, best, q);
                if (transform) transform->submul_col(j, best, q);
                if (!m.at(row, j).is_zero()) others = true;
            }
            if (!others) {
                m.swap_cols(best, active - 1);
                if (transform) transform->swap_cols(best, active - 1);
                if (m.at(row, active - 1).is_negative()) {
                    m.negate_col(active - 1);
                    if (transform) transform->negate_col(active - 1);
                }
                --active;
                break;
            }
        }
    }
    return active;  // columns [0, active) are zero; rank = cols - active
}

// Upper-triangular HNF of the lattice generated by the columns of m
// (must have full row rank d). Result is d x d with positive diagonal and
// 0 <= h[r][j] < h[r][r] for j > r.
template <typename T>
Mat<T> hnf_of_columns(Mat<T> m) {
    const std::size_t d = m.rows;
    std::size_t active = column_echelon(m, static_cast<Mat<T>*>(nullptr));
    if (m.cols - active != d) throw std::domain_error("hnf: generators do not span a full-rank lattice");
    Mat<T> h(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h.at(i, j) = m.at(i, active + j);
    for (std::size_t r = d; r-- > 0;) {
        for (std::size_t j = r + 1; j < d; ++j) {
            T q = floor_div(h.at(r, j), h.at(r, r));
            h.submul_col(j, r, q);
        }
    }
    return h;
}

// Intersection of the lattices generated by the columns of A and B (both of
// full rank d), via the integer kernel of [A | B].
template <typename T>
Mat<T> lattice_intersection(const Mat<T>& A, const Mat<T>& B) {
    const std::size_t d = A.rows;
    Mat<T> stacked(d, A.cols + B.cols);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) stacked.at(i, j) = A.at(i, j);
        for (std::size_t j = 0; j < B.cols; ++j) stacked.at(i, A.cols + j) = B.at(i, j);
    }
    Mat<T> u = Mat<T>::identity(A.cols + B.cols);
    std::size_t kernel_cols = column_echelon(stacked, &u);
    Mat<T> gen(d, kernel_cols);
    for (std::size_t c = 0; c < kernel_cols; ++c)
        for (std::size_t i = 0; i < d; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < A.cols; ++j) acc += A.at(i, j) * u.at(j, c);
            gen.at(i, c) = acc;
        }
    return hnf_of_columns(std::move(gen));
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic in Z[x]/(Phi_n), power basis of length phi(n).
// ---------------------------------------------------------------------------

// Reduced coordinates of xi^k for k = 0..n-1 (int64 range for all catalog n).
const std::vector<std::vector<i64>>& xi_power_table(unsigned n) {
    static std::mutex lock;
    static std::map<unsigned, std::vector<std::vector<i64>>> cache;
    std::scoped_lock guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<long long> phi = cyclotomic_polynomial(n);
    std::size_t d = phi.size() - 1;
    std::vector<std::vector<i64>> pows(n, std::vector<i64>(d, 0));
    pows[0][0] = 1;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<i64> cur(d + 1, 0);
        for (std::size_t i = 0; i < d; ++i) cur[i + 1] = pows[k - 1][i];
        i64 top = cur[d];
        if (top != 0)
            for (std::size_t i = 0; i < d; ++i) cur[i] -= top * phi[i];
        cur.resize(d);
        pows[k] = std::move(cur);
    }
    return cache.emplace(n, std::move(pows)).first->second;
}

template <typename T>
std::vector<T> poly_mul_mod(const std::vector<T>& x, const std::vector<T>& y,
                            const std::vector<long long>& phi) {
    std::size_t d = phi.size() - 1;
    std::vector<T> prod(2 * d - 1, T(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += x[i] * y[j];
    }
    for (std::size_t k = prod.size(); k-- > d;) {
        T top = prod[k];
        if (top.is_zero()) continue;
        prod[k] = T(0);
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= top * T(phi[i]);
    }
    prod.resize(d);
    return prod;
}

// Galois image sigma_j(x): xi -> xi^j, for j coprime to n.
template <typename T>
std::vector<T> galois_image(unsigned n, const std::vector<T>& x, unsigned j) {
    const auto& pows = xi_power_table(n);
    std::size_t d = pows[0].size();
    std::vector<T> out(d, T(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        const auto& p = pows[(i * static_cast<std::size_t>(j)) % n];
        for (std::size_t t = 0; t < d; ++t) out[t] += x[i] * T(p[t]);
    }
    return out;
}

// Product of all conjugates sigma_j(x), j != 1: x * adjugate(x) = norm(x).
template <typename T>
std::vector<T> adjugate(unsigned n, const std::vector<T>& x, const std::vector<long long>& phi) {
    std::size_t d = phi.size() - 1;
    std::vector<T> acc(d, T(0));
    acc[0] = T(1);
    for (unsigned j = 2; j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        acc = poly_mul_mod(acc, galois_image(n, x, j), phi);
    }
    return acc;
}

template <typename T>
bool is_rational_vector(const std::vector<T>& x) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!x[i].is_zero()) return false;
    return true;
}

// Complex conjugation: xi -> xi^(n-1).
template <typename T>
std::vector<T> complex_conj(unsigned n, const std::vector<T>& x) {
    return galois_image(n, x, n - 1);
}

template <typename T>
Mat<T> multiplication_matrix(const std::vector<T>& w, const std::vector<long long>& phi) {
    std::size_t d = phi.size() - 1;
    Mat<T> m(d, d);
    std::vector<T> col = w;
    std::vector<T> xi(d, T(0));
    xi[1] = T(1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
        if (j + 1 < d) col = poly_mul_mod(col, xi, phi);
    }
    return m;
}

template <typename T>
SubmoduleBasis to_submodule_basis(unsigned n, const Mat<T>& h) {
    SubmoduleBasis s;
    s.n = n;
    s.rank = static_cast<unsigned>(h.rows);
    s.basis.assign(h.rows, std::vector<long long>(h.cols));
    u64 index = 1;
    for (std::size_t i = 0; i < h.rows; ++i) {
        for (std::size_t j = 0; j < h.cols; ++j) s.basis[i][j] = h.at(i, j).to_int64();
        u64 diag = static_cast<u64>(h.at(i, i).to_int64());
        if (__builtin_mul_overflow(index, diag, &index))
            throw std::overflow_error("intersection index exceeds 64 bits");
    }
    s.index = index;
    return s;
}

template <typename T>
SubmoduleBasis intersect_modules_impl(unsigned n, const std::vector<RotationPair>& rotations) {
    const std::vector<long long> phi = cyclotomic_polynomial(n);
    const std::size_t d = phi.size() - 1;

    Mat<T> current = Mat<T>::identity(d);
    for (const RotationPair& rot : rotations) {
        if (rot.numerator.size() != d || rot.denominator.size() != d)
            throw std::domain_error("rotation coordinates must have length phi(n)");
        std::vector<T> u(d), v(d);
        for (std::size_t i = 0; i < d; ++i) {
            u[i] = T(rot.numerator[i]);
            v[i] = T(rot.denominator[i]);
        }
        bool v_zero = true;
        for (const T& c : v) v_zero = v_zero && c.is_zero();
        if (v_zero) throw std::domain_error("rotation denominator must be nonzero");

        // |u/v| = 1 exactly: the relative norms u*conj(u) and v*conj(v) over
        // the real subfield must agree.
        std::vector<T> nu = poly_mul_mod(u, complex_conj(n, u), phi);
        std::vector<T> nv = poly_mul_mod(v, complex_conj(n, v), phi);
        if (nu != nv) throw std::domain_error("rotation u/v does not have absolute value 1");

        // (u/v) O = (1/N(v)) * (u * adj(v)) O with N(v) = v * adj(v) > 0.
        std::vector<T> adj = adjugate(n, v, phi);
        std::vector<T> norm_v = poly_mul_mod(v, adj, phi);
        if (!is_rational_vector(norm_v)) throw std::domain_error("norm computation failed");
        T m = norm_v[0];
        if (m.is_negative()) throw std::domain_error("unexpected negative norm in totally complex field");
        std::vector<T> w = poly_mul_mod(u, adj, phi);

        // current := current ∩ (1/m) wO  =  (1/m) (m*current ∩ wO)
        Mat<T> scaled = current;
        for (auto& c : scaled.a) c *= m;
        Mat<T> inter = lattice_intersection(scaled, multiplication_matrix(w, phi));
        for (auto& c : inter.a) {
            if (!(c % m).is_zero()) throw std::domain_error("internal error: intersection not divisible by norm");
            c = c / m;
        }
        current = hnf_of_columns(std::move(inter));
    }
    return to_submodule_basis(n, hnf_of_columns(std::move(current)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Quadratic elements
// ---------------------------------------------------------------------------

long long QuadraticIntegerElement::norm() const {
    require_quadratic(n);
    i128 v = n == 3 ? i128(a) * a - i128(a) * b + i128(b) * b : i128(a) * a + i128(b) * b;
    if (v > i128(0x7fffffffffffffffll)) throw std::overflow_error("quadratic norm exceeds 64 bits");
    return static_cast<long long>(v);
}

QuadraticIntegerElement QuadraticIntegerElement::conj() const {
    require_quadratic(n);
    if (n == 3) return {n, a - b, -b};
    return {n, a, -b};
}

QuadraticIntegerElement operator*(const QuadraticIntegerElement& x, const QuadraticIntegerElement& y) {
    require_quadratic(x.n);
    if (x.n != y.n) throw std::domain_error("mixed-ring multiplication");
    auto mul = [](i64 p, i64 q) {
        i64 r;
        if (__builtin_mul_overflow(p, q, &r)) throw std::overflow_error("quadratic element overflow");
        return r;
    };
    auto add = [](i64 p, i64 q) {
        i64 r;
        if (__builtin_add_overflow(p, q, &r)) throw std::overflow_error("quadratic element overflow");
        return r;
    };
    if (x.n == 3) {
        // (a + b xi)(c + d xi), xi^2 = -1 - xi
        i64 bd = mul(x.b, y.b);
        return {x.n, add(mul(x.a, y.a), -bd), add(add(mul(x.a, y.b), mul(x.b, y.a)), -bd)};
    }
    return {x.n, add(mul(x.a, y.a), -mul(x.b, y.b)), add(mul(x.a, y.b), mul(x.b, y.a))};
}

QuadraticIntegerElement operator-(const QuadraticIntegerElement& x, const QuadraticIntegerElement& y) {
    if (x.n != y.n) throw std::domain_error("mixed-ring subtraction");
    return {x.n, x.a - y.a, x.b - y.b};
}

QuadraticIntegerElement QuadraticIntegerElement::canonical() const {
    require_quadratic(n);
    if (is_zero()) return *this;
    QuadraticIntegerElement z = *this;
    const QuadraticIntegerElement xi = n == 3 ? QuadraticIntegerElement{3, 0, 1} : QuadraticIntegerElement{4, 0, 1};
    for (unsigned step = 0; step < n; ++step) {  // xi has order 3 resp. 4
        for (const QuadraticIntegerElement& cand : {z, QuadraticIntegerElement{n, -z.a, -z.b}}) {
            bool canonical = n == 3 ? (0 <= cand.b && cand.b < cand.a) : (cand.a > 0 && cand.b >= 0);
            if (canonical) return cand;
        }
        z = z * xi;
    }
    throw std::logic_error("canonical associate not found");
}

bool divides(const QuadraticIntegerElement& y, const QuadraticIntegerElement& x) {
    if (y.is_zero()) return x.is_zero();
    QuadraticIntegerElement t = x * y.conj();
    i64 nrm = y.norm();
    return t.a % nrm == 0 && t.b % nrm == 0;
}

QuadraticIntegerElement divide_exact(const QuadraticIntegerElement& x, const QuadraticIntegerElement& y) {
    QuadraticIntegerElement t = x * y.conj();
    i64 nrm = y.norm();
    if (nrm == 0 || t.a % nrm != 0 || t.b % nrm != 0)
        throw std::domain_error("divide_exact: not divisible");
    return {x.n, t.a / nrm, t.b / nrm};
}

QuadraticIntegerElement quad_gcd(QuadraticIntegerElement x, QuadraticIntegerElement y) {
    require_quadratic(x.n);
    if (x.n != y.n) throw std::domain_error("mixed-ring gcd");
    auto nearest = [](i64 p, i64 q) {  // round p/q to nearest, q > 0
        return p >= 0 ? (p + q / 2) / q : -((-p + q / 2) / q);
    };
    while (!y.is_zero()) {
        QuadraticIntegerElement t = x * y.conj();
        i64 nrm = y.norm();
        QuadraticIntegerElement q{x.n, nearest(t.a, nrm), nearest(t.b, nrm)};
        QuadraticIntegerElement r = x - q * y;
        x = y;
        y = r;
    }
    return x.canonical();
}

std::vector<QuadraticIntegerElement> norm_form_elements(unsigned n, std::uint64_t k) {
    require_quadratic(n);
    if (k == 0) throw std::domain_error("norm_form_elements: k must be >= 1");
    if (k > 1'000'000'000ull) throw resource_error("norm_form_elements: k exceeds the 10^9 enumeration cap");
    std::vector<QuadraticIntegerElement> out;
    i64 kk = static_cast<i64>(k);
    if (n == 4) {
        for (i64 a = 1; a * a <= kk; ++a) {
            i64 b2 = kk - a * a;
            i64 b = isqrt64(b2);
            if (b >= 0 && b * b == b2) out.push_back({4, a, b});
        }
    } else {
        // a^2 - ab + b^2 = k with 0 <= b < a  <=>  (2b - a)^2 + 3a^2 = 4k - ...
        // solve per a: b = (a ± sqrt(4k - 3a^2)) / 2.
        for (i64 a = 1; 3 * a * a <= 4 * kk; ++a) {
            i64 disc = 4 * kk - 3 * a * a;
            i64 s = isqrt64(disc);
            if (s * s != disc) continue;
            for (i64 b : {(a + s) / 2, (a - s) / 2}) {
                if (2 * b - a != s && a - 2 * b != s) continue;  // parity check
                if (b >= 0 && b < a && a * a - a * b + b * b == kk) out.push_back({3, a, b});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const QuadraticIntegerElement& x, const QuadraticIntegerElement& y) {
                      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                  });
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

QuadraticIntegerElement prime_element(unsigned n, std::uint64_t p) {
    require_quadratic(n);
    if (!classify_prime(n, p).is_complex_splitting)
        throw std::domain_error("p = " + std::to_string(p) + " is not complex splitting for n = " +
                                std::to_string(n));
    std::vector<QuadraticIntegerElement> reps = norm_form_elements(n, p);
    if (reps.size() != 2) throw std::logic_error("splitting prime without two norm classes");
    // Larger argument within the sector; cross product gives the exact order.
    const QuadraticIntegerElement &x = reps[0], &y = reps[1];
    return (x.a * y.b - y.a * x.b) > 0 ? y : x;
}

RotationRealization rotation_from_word(const RotationWord& word) {
    require_quadratic(word.n);
    const QuadraticIntegerElement one{word.n, 1, 0};
    const QuadraticIntegerElement unit_gen =
        word.n == 3 ? QuadraticIntegerElement{3, 0, -1} : QuadraticIntegerElement{4, 0, 1};  // -xi_3 resp. i

    RotationRealization r;
    r.numerator = one;
    r.denominator = one;
    unsigned order = word.n == 3 ? 6 : 4;
    for (unsigned i = 0; i < word.unit_exponent % order; ++i) r.numerator = r.numerator * unit_gen;

    u64 sigma = 1;
    for (const auto& [p, t] : word.factors) {
        if (t == 0) continue;
        QuadraticIntegerElement omega = prime_element(word.n, p);  // throws if not splitting
        QuadraticIntegerElement top = t > 0 ? omega : omega.conj();
        QuadraticIntegerElement bottom = t > 0 ? omega.conj() : omega;
        for (int i = 0; i < std::abs(t); ++i) {
            r.numerator = r.numerator * top;
            r.denominator = r.denominator * bottom;
            if (__builtin_mul_overflow(sigma, p, &sigma))
                throw std::overflow_error("coincidence index exceeds 64 bits");
        }
    }
    r.sigma = sigma;
    if (static_cast<u64>(r.numerator.norm()) != sigma)
        throw std::logic_error("rotation word norm mismatch");
    return r;
}

SubmoduleBasis intersect_modules(unsigned n, const std::vector<RotationPair>& rotations) {
    field_info(n);
    try {
        return intersect_modules_impl<Checked128>(n, rotations);
    } catch (const std::overflow_error&) {
        return intersect_modules_impl<BigInt>(n, rotations);
    }
}

SubmoduleBasis detail::intersect_modules_bignum(unsigned n, const std::vector<RotationPair>& rotations) {
    field_info(n);
    return intersect_modules_impl<BigInt>(n, rotations);
}

SubmoduleBasis principal_ideal_hnf(unsigned n, const std::vector<long long>& element) {
    field_info(n);
    const std::vector<long long> phi = cyclotomic_polynomial(n);
    const std::size_t d = phi.size() - 1;
    if (element.size() != d) throw std::domain_error("element coordinates must have length phi(n)");
    auto run = [&](auto tag) {
        using T = decltype(tag);
        std::vector<T> w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = T(element[i]);
        return to_submodule_basis(n, hnf_of_columns(multiplication_matrix(w, phi)));
    };
    try {
        return run(Checked128{});
    } catch (const std::overflow_error&) {
        return run(BigInt{});
    }
}

BruteForceCounts brute_force_counts(unsigned n, std::uint64_t k) {
    require_quadratic(n);
    if (k == 0) throw std::domain_error("brute_force_counts: k must be >= 1");
    if (k > 10'000'000ull) throw resource_error("brute_force_counts: k exceeds the 10^7 cap");

    std::vector<u64> primes;
    u64 rest = k;
    for (u64 p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes.push_back(rest);

    // A rational prime is complex splitting here iff it has exactly two
    // non-associated norm classes (ramified: one, inert: none).
    for (u64 p : primes)
        if (norm_form_elements(n, p).size() != 2) return {0, 0};

    std::vector<QuadraticIntegerElement> classes = norm_form_elements(n, k);
    BruteForceCounts counts;
    counts.multiple = classes.size();
    for (const QuadraticIntegerElement& z : classes) {
        bool one_sided = true;
        for (u64 p : primes) {
            // Divisible by the rational prime p means both conjugate prime
            // elements over p divide z, i.e. the pair is two-sided.
            if (z.a % static_cast<i64>(p) == 0 && z.b % static_cast<i64>(p) == 0) {
                one_sided = false;
                break;
            }
        }
        if (one_sided) ++counts.simple;
    }
    return counts;
}

}  // namespace ccm
