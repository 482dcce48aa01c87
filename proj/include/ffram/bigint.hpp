// bigint.hpp
//
// Sign-magnitude arbitrary-precision integer, base 2^32 limbs.
// Sized for desk-scale exact arithmetic: series coefficients, norms q^(e*deg),
// and rational normalization. Not a performance bignum.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffram {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ULL;
            push_u64(m);
        } else {
            push_u64(static_cast<unsigned long long>(v));
        }
    }

    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_decimal(std::string_view s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad decimal digit");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }

    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.neg_ == b.neg_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.neg_ = a.neg_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.neg_ = b.neg_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] = static_cast<uint32_t>(carry);
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_) && !r.mag_.empty();
        return r;
    }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend and |r| < |b|.
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        divrem_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.mag_.empty();
        r.neg_ = a.neg_ && !r.mag_.empty();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divrem(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divrem(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divrem(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    static BigInt pow(const BigInt& base, unsigned e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide magnitude by 10^9, collecting 9 decimal digits
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (neg_) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

    double to_double() const {
        double v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
        return neg_ ? -v : v;
    }

    // Fails loudly instead of truncating; callers use it for degrees/counts.
    long long to_int64() const {
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in 64 bits");
        unsigned long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        if (!neg_ && v > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: does not fit in 64 bits");
        if (neg_ && v > 0x8000000000000000ULL) throw std::overflow_error("BigInt: does not fit in 64 bits");
        return neg_ ? -static_cast<long long>(v - 1) - 1 : static_cast<long long>(v);
    }

private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;  // little-endian, no leading zero limbs; empty == 0

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }

    void push_u64(unsigned long long m) {
        if (m) mag_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    }

    void mul_small(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
        trim();
    }

    void add_small(uint32_t v) {
        uint64_t carry = v;
        for (auto& limb : mag_) {
            if (!carry) break;
            uint64_t cur = limb + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // binary shift-subtract long division on magnitudes; operand sizes here
    // are a handful of limbs, so simplicity beats Knuth D
    static void divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        if (cmp_mag(a, b) < 0) {
            r = a;
            return;
        }
        for (size_t bit = a.size() * 32; bit-- > 0;) {
            // r = (r << 1) | bit(a, bit)
            uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
            for (auto& limb : r) {
                uint32_t next = limb >> 31;
                limb = (limb << 1) | carry;
                carry = next;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[bit / 32] |= (1u << (bit % 32));
            }
        }
    }
};

}  // namespace ffram
