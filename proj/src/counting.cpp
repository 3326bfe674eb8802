#include "ccm/counting.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

constexpr std::uint64_t kMaxK = (1ull << 63);
constexpr std::uint64_t kSieveBudget = 100'000'000;  // SPF entries (4 bytes each)

using u64 = std::uint64_t;
using u128 = unsigned __int128;

[[noreturn]] void overflow(const char* where) {
    throw std::overflow_error(std::string(where) + ": 64-bit count overflow");
}

u64 checked_mul(u64 a, u64 b, const char* where) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) overflow(where);
    return r;
}

u64 checked_add(u64 a, u64 b, const char* where) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) overflow(where);
    return r;
}

// Binomial coefficient with 128-bit intermediates; arguments stay small
// (a <= ~90 here) so the stepwise product cannot exceed 128 bits.
u128 binomial128(unsigned a, unsigned b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    u128 r = 1;
    for (unsigned i = 1; i <= b; ++i) {
        r = r * (a - b + i);
        r /= i;
    }
    return r;
}

u64 to_u64(u128 v, const char* where) {
    if (v > std::numeric_limits<u64>::max()) overflow(where);
    return static_cast<u64>(v);
}

// Splitting data for one rational prime, as used by the Euler factors.
struct PrimeRule {
    bool complex_splitting = false;
    unsigned ell = 1;   // ell_p (residue degree in K_n)
    unsigned m = 0;     // m_p (number of primes of K_n over p, for splitting p)
    unsigned f = 1;     // residue degree for the ideal count
    unsigned g = 1;     // number of primes over p for the ideal count
};

PrimeRule rule_from(const PrimeSplitting& s) {
    PrimeRule r;
    r.complex_splitting = s.is_complex_splitting;
    r.ell = s.residue_degree;
    r.m = s.num_primes;
    r.f = s.residue_degree;
    r.g = s.num_primes;
    return r;
}

// Per-field lookup of PrimeRule. Unramified classification depends only on
// p mod n, so one entry per residue class covers every prime in the sieve.
class SplittingTable {
public:
    explicit SplittingTable(unsigned n) : n_(n), by_class_(n) {
        for (unsigned k = 0; k < n; ++k) {
            if (std::gcd<u64>(k, n) != 1) continue;
            // Classify via a witness prime in the class k (mod n).
            u64 p = k;
            while (p < 2 || !is_prime(p)) p += n;
            by_class_[k] = rule_from(classify_prime(n, p));
        }
        for (u64 p = 2; p <= n; ++p)
            if (n % p == 0 && is_prime(p)) ramified_[p] = rule_from(classify_prime(n, p));
    }

    const PrimeRule& rule(u64 p) const {
        if (auto it = ramified_.find(p); it != ramified_.end()) return it->second;
        return by_class_[p % n_];
    }

    unsigned n() const { return n_; }

private:
    unsigned n_;
    std::vector<PrimeRule> by_class_;
    std::map<u64, PrimeRule> ramified_;
};

const SplittingTable& splitting_table(unsigned n) {
    static std::mutex lock;
    static std::map<unsigned, SplittingTable> cache;  // node stability keeps references valid
    std::scoped_lock guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, SplittingTable(n)).first;
    return it->second;
}

// Coefficient of x^j in ((1+x)/(1-x))^m: simple CSMs at p^{ell j}.
u64 simple_factor(unsigned m, unsigned j) {
    if (j == 0) return 1;
    u128 sum = 0;
    for (unsigned i = 0; i <= j && i <= m; ++i)
        sum += binomial128(m, i) * binomial128(m - 1 + j - i, m - 1);
    return to_u64(sum, "simple_count");
}

// Coefficient of x^j in (1-x)^{-m}: multiple CSMs at p^{ell j}.
u64 multiple_factor(unsigned m, unsigned j) {
    return to_u64(binomial128(j + m - 1, m - 1), "multiple_count");
}

// Per-prime-power contribution; zero means the prime power is inadmissible.
u64 prime_power_value(const PrimeRule& r, unsigned exponent, Kind kind) {
    if (kind == Kind::ideal) {
        if (exponent % r.f != 0) return 0;
        return to_u64(binomial128(exponent / r.f + r.g - 1, r.g - 1), "ideal_count");
    }
    if (!r.complex_splitting || exponent % r.ell != 0) return 0;
    unsigned j = exponent / r.ell;
    return kind == Kind::simple ? simple_factor(r.m / 2, j) : multiple_factor(r.m, j);
}

void check_k(u64 k) {
    if (k == 0) throw std::domain_error("count functions are defined for k >= 1");
    if (k >= kMaxK) throw std::overflow_error("k exceeds the 64-bit evaluation budget");
}

u64 count_by_trial_division(unsigned n, Kind kind, u64 k) {
    check_k(k);
    const SplittingTable& table = splitting_table(n);
    u64 result = 1;
    for (u64 p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        unsigned a = 0;
        while (k % p == 0) {
            k /= p;
            ++a;
        }
        u64 f = prime_power_value(table.rule(p), a, kind);
        if (f == 0) return 0;
        result = checked_mul(result, f, kind_name(kind));
    }
    if (k > 1) {
        u64 f = prime_power_value(table.rule(k), 1, kind);
        if (f == 0) return 0;
        result = checked_mul(result, f, kind_name(kind));
    }
    return result;
}

std::vector<std::uint32_t> smallest_prime_factor(u64 k_max) {
    if (k_max > kSieveBudget)
        throw resource_error("sieve budget exceeded: k_max = " + std::to_string(k_max) + " > " +
                             std::to_string(kSieveBudget));
    std::vector<std::uint32_t> spf;
    try {
        spf.assign(k_max + 1, 0);
    } catch (const std::bad_alloc&) {
        throw resource_error("sieve allocation failed for k_max = " + std::to_string(k_max));
    }
    for (u64 i = 2; i <= k_max; ++i) {
        if (spf[i] == 0)
            for (u64 j = i; j <= k_max; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::simple: return "simple";
        case Kind::multiple: return "multiple";
        case Kind::ideal: return "ideal";
    }
    return "?";
}

std::uint64_t simple_count(unsigned n, std::uint64_t k) { return count_by_trial_division(n, Kind::simple, k); }
std::uint64_t multiple_count(unsigned n, std::uint64_t k) { return count_by_trial_division(n, Kind::multiple, k); }
std::uint64_t ideal_count(unsigned n, std::uint64_t k) { return count_by_trial_division(n, Kind::ideal, k); }

std::uint64_t count(unsigned n, Kind kind, std::uint64_t k) { return count_by_trial_division(n, kind, k); }

bool is_coincidence_index(unsigned n, std::uint64_t k) {
    check_k(k);
    const SplittingTable& table = splitting_table(n);
    for (u64 p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        unsigned a = 0;
        while (k % p == 0) {
            k /= p;
            ++a;
        }
        const PrimeRule& r = table.rule(p);
        if (!r.complex_splitting || a % r.ell != 0) return false;
    }
    if (k > 1) {
        const PrimeRule& r = table.rule(k);
        if (!r.complex_splitting || r.ell != 1) return false;
    }
    return true;
}

CoefficientTable coefficient_table(unsigned n, Kind kind, std::uint64_t k_max, unsigned threads) {
    if (k_max < 1) throw std::domain_error("coefficient_table: k_max must be >= 1");
    const SplittingTable& table = splitting_table(n);
    std::vector<std::uint32_t> spf = smallest_prime_factor(k_max);

    CoefficientTable out;
    out.n = n;
    out.kind = kind;
    out.k_max = k_max;
    try {
        out.values.assign(k_max + 1, 0);
    } catch (const std::bad_alloc&) {
        throw resource_error("coefficient table allocation failed for k_max = " + std::to_string(k_max));
    }
    out.values[1] = 1;

    // Each k only needs values[k / p^a] for its smallest prime factor p, which
    // is a smaller index; a forward pass fills the table in one sweep. The
    // parallel variant instead recomputes each k independently from spf so
    // that ranges are disjoint and the merge is trivially deterministic.
    if (threads <= 1) {
        for (u64 k = 2; k <= k_max; ++k) {
            u64 p = spf[k];
            u64 rest = k;
            unsigned a = 0;
            while (rest % p == 0) {
                rest /= p;
                ++a;
            }
            if (out.values[rest] == 0) continue;
            u64 f = prime_power_value(table.rule(p), a, kind);
            if (f == 0) continue;
            out.values[k] = checked_mul(out.values[rest], f, kind_name(kind));
        }
        return out;
    }

    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](u64 lo, u64 hi, unsigned slot) {
        try {
            for (u64 k = lo; k < hi; ++k) {
                u64 rest = k;
                u64 v = 1;
                while (rest > 1) {
                    u64 p = spf[rest];
                    unsigned a = 0;
                    while (rest % p == 0) {
                        rest /= p;
                        ++a;
                    }
                    u64 f = prime_power_value(table.rule(p), a, kind);
                    if (f == 0) {
                        v = 0;
                        break;
                    }
                    v = checked_mul(v, f, kind_name(kind));
                }
                out.values[k] = v;
            }
        } catch (...) {
            errors[slot] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    u64 chunk = (k_max - 1) / threads + 1;
    for (unsigned t = 0; t < threads; ++t) {
        u64 lo = 2 + t * chunk;
        u64 hi = std::min<u64>(k_max + 1, lo + chunk);
        if (lo > k_max) break;
        pool.emplace_back(worker, lo, hi, t);
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<IdealFactorization> enumerate_csms(unsigned n, std::uint64_t k, Kind kind,
                                               std::uint64_t cap) {
    check_k(k);
    if (kind == Kind::ideal) throw std::domain_error("enumerate_csms supports simple and multiple kinds");
    const SplittingTable& table = splitting_table(n);

    // Factor k; bail out early (empty result) if outside the spectrum.
    struct PrimePart {
        u64 p;
        unsigned j;      // exponent / ell_p
        unsigned pairs;  // m_p / 2
    };
    std::vector<PrimePart> parts;
    u64 rest = k;
    for (u64 p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        const PrimeRule& r = table.rule(p);
        if (!r.complex_splitting || a % r.ell != 0) return {};
        parts.push_back({p, a / r.ell, r.m / 2});
    }
    if (rest > 1) {
        const PrimeRule& r = table.rule(rest);
        if (!r.complex_splitting || r.ell != 1) return {};
        parts.push_back({rest, 1, r.m / 2});
    }
    std::sort(parts.begin(), parts.end(), [](const PrimePart& a, const PrimePart& b) { return a.p < b.p; });

    u64 expected = count(n, kind, k);
    if (expected > cap)
        throw resource_error("enumerate_csms: " + std::to_string(expected) + " results exceed cap " +
                             std::to_string(cap));

    // Per prime: all (left, right) exponent vectors over the conjugate pairs
    // summing to j, one-sided per pair for the simple kind, in lexicographic
    // order on the flattened (l_0, r_0, l_1, r_1, ...) sequence.
    auto assignments_for = [&](const PrimePart& part) {
        std::vector<std::vector<IdealFactorization::Entry>> result;
        std::vector<IdealFactorization::Entry> current;
        auto recurse = [&](auto&& self, unsigned pair, unsigned remaining) -> void {
            if (pair == part.pairs) {
                if (remaining == 0) result.push_back(current);
                return;
            }
            for (unsigned l = 0; l <= remaining; ++l) {
                for (unsigned r = 0; r <= remaining - l; ++r) {
                    if (kind == Kind::simple && l > 0 && r > 0) continue;
                    if (l + r > 0) current.push_back({part.p, pair, l, r});
                    self(self, pair + 1, remaining - l - r);
                    if (l + r > 0) current.pop_back();
                }
            }
        };
        recurse(recurse, 0, part.j);
        return result;
    };

    std::vector<std::vector<std::vector<IdealFactorization::Entry>>> per_prime;
    per_prime.reserve(parts.size());
    for (const PrimePart& part : parts) per_prime.push_back(assignments_for(part));

    std::vector<IdealFactorization> out;
    out.reserve(expected);
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
        IdealFactorization f;
        f.n = n;
        for (std::size_t i = 0; i < parts.size(); ++i)
            f.entries.insert(f.entries.end(), per_prime[i][idx[i]].begin(), per_prime[i][idx[i]].end());
        out.push_back(std::move(f));
        std::size_t i = parts.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per_prime[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (parts.empty()) break;
    }
    return out;
}

SummatoryResult summatory(unsigned n, Kind kind, std::uint64_t x, unsigned threads) {
    if (x < 1) throw std::domain_error("summatory: x must be >= 1");
    CoefficientTable table = coefficient_table(n, kind, x, threads);
    SummatoryResult r;
    for (u64 k = 1; k <= x; ++k) r.total = checked_add(r.total, table.values[k], "summatory");
    r.slope = static_cast<double>(r.total) / static_cast<double>(x);
    return r;
}

}  // namespace ccm
