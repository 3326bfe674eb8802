#pragma once

#include <cstdint>
#include <vector>

#include "ccm/catalog.hpp"

namespace ccm {

enum class Kind { simple, multiple, ideal };

const char* kind_name(Kind k);

/// Values of one of the multiplicative counting functions c_n, b_n, a_n
/// on 1..k_max. values[k] is the count for index k (slot 0 unused).
struct CoefficientTable {
    unsigned n = 0;
    Kind kind = Kind::simple;
    std::uint64_t k_max = 0;
    std::vector<std::uint64_t> values;
};

/// Exponents of the prime ideals over one coincidence index, grouped into
/// conjugate pairs. Only pairs with exponent_left + exponent_right > 0 are
/// stored; a simple CSM has min(exponent_left, exponent_right) = 0 in every
/// entry.
struct IdealFactorization {
    struct Entry {
        std::uint64_t p = 0;
        unsigned pair_index = 0;  // 0 .. m_p/2 - 1
        unsigned exponent_left = 0;
        unsigned exponent_right = 0;
    };
    unsigned n = 0;
    std::vector<Entry> entries;
};

/// c_n(k): number of simple CSMs of Z[xi_n] of index k.
std::uint64_t simple_count(unsigned n, std::uint64_t k);

/// b_n(k): number of multiple CSMs (simple ones included) of index k.
std::uint64_t multiple_count(unsigned n, std::uint64_t k);

/// a_n(k): number of ideals of Z[xi_n] of index k.
std::uint64_t ideal_count(unsigned n, std::uint64_t k);

std::uint64_t count(unsigned n, Kind kind, std::uint64_t k);

/// Bulk table of counts for k = 1..k_max via a smallest-prime-factor sieve.
/// threads > 1 partitions the range; the result is identical for any thread
/// count. Throws resource_error when k_max exceeds the sieve memory budget.
CoefficientTable coefficient_table(unsigned n, Kind kind, std::uint64_t k_max, unsigned threads = 1);

/// True iff k belongs to the coincidence spectrum of Z[xi_n]: every prime
/// factor complex splitting with exponent divisible by ell_p.
bool is_coincidence_index(unsigned n, std::uint64_t k);

/// All exponent assignments over conjugate prime-ideal pairs with norm k,
/// in deterministic lexicographic order. Empty when k is outside the
/// spectrum; throws resource_error when the result would exceed cap.
std::vector<IdealFactorization> enumerate_csms(unsigned n, std::uint64_t k, Kind kind,
                                               std::uint64_t cap = 1'000'000);

struct SummatoryResult {
    std::uint64_t total = 0;
    double slope = 0.0;  // total / x, the quantity that converges to the residue
};

/// S(x) = sum_{k <= x} of the chosen counting function.
SummatoryResult summatory(unsigned n, Kind kind, std::uint64_t x, unsigned threads = 1);

}  // namespace ccm
