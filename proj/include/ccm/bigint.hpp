#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccm {

/// Sign-magnitude arbitrary-precision integer, base 2^32. Only the handful
/// of operations needed by the exact lattice routines are provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT(google-explicit-constructor): integer literals must convert
        if (v == 0) return;
        negative_ = v < 0;
        unsigned long long m = negative_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.limbs_.empty()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        r.negative_ = a.negative_ != b.negative_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Truncated quotient (rounds toward zero), as in C integer division.
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    /// (quotient, remainder) with |r| < |b| and sign(r) = sign(a).
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) return {BigInt(), a};
        BigInt q, r;
        q.limbs_.assign(a.limbs_.size(), 0);
        // Schoolbook bit-by-bit long division on magnitudes.
        for (std::size_t bit = a.limbs_.size() * 32; bit-- > 0;) {
            r.shift_left_one();
            if (a.limbs_[bit / 32] >> (bit % 32) & 1u) {
                if (r.limbs_.empty()) r.limbs_.push_back(1);
                else r.limbs_[0] |= 1u;
            }
            if (cmp_mag(r.limbs_, b.limbs_) >= 0) {
                r.limbs_ = sub_mag(r.limbs_, b.limbs_);
                q.limbs_[bit / 32] |= 1u << (bit % 32);
            }
        }
        q.trim();
        r.trim();
        q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
        r.negative_ = !r.limbs_.empty() && a.negative_;
        return {q, r};
    }

    long long to_int64() const {
        unsigned long long m = 0;
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: value exceeds 64 bits");
        for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        if (!negative_ && m > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: value exceeds 64 bits");
        if (negative_ && m > 0x8000000000000000ull) throw std::overflow_error("BigInt: value exceeds 64 bits");
        return negative_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        unsigned long long m = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        return negative_ ? m <= 0x8000000000000000ull : m <= 0x7fffffffffffffffull;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string digits;
        BigInt t = *this;
        t.negative_ = false;
        const BigInt ten(10);
        while (!t.is_zero()) {
            auto [q, r] = divmod(t, ten);
            digits += static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0]));
            t = q;
        }
        if (negative_) digits += '-';
        return {digits.rbegin(), digits.rend()};
    }

private:
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1ll << 32);
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    void shift_left_one() {
        std::uint32_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zero limb
};

inline BigInt abs(const BigInt& a) { return a.is_negative() ? -a : a; }

}  // namespace ccm
