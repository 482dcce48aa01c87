// cyclotomic.hpp
//
// Exact elements of Q(zeta_p) for prime p, written over the power basis
// zeta^0, ..., zeta^(p-2) with the reduction zeta^(p-1) = -(zeta^0+...+zeta^(p-2)).
// The representation is unique, so equality is coordinate equality and no
// tolerance policy ever enters the identity checks built on top of it.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffram/field.hpp"
#include "ffram/rational.hpp"

namespace ffram {

class CycQ {
public:
    // the rational r embedded as r * zeta^0
    CycQ(long p, Rational r = Rational(0)) : p_(p), c_(static_cast<size_t>(p - 1)) {
        if (!detail::is_prime(p)) throw std::invalid_argument("cyclotomic: p must be prime");
        c_[0] = std::move(r);
    }

    static CycQ root(long p, long k) {
        CycQ z(p);
        k %= p;
        if (k < 0) k += p;
        if (k == p - 1) {
            for (auto& c : z.c_) c = Rational(-1);
        } else {
            z.c_[static_cast<size_t>(k)] = Rational(1);
        }
        return z;
    }

    long p() const { return p_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    // only valid when is_rational()
    const Rational& rational_value() const {
        if (!is_rational()) throw std::invalid_argument("cyclotomic: value is not rational");
        return c_[0];
    }

    bool is_zero() const {
        for (auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const CycQ& a, const CycQ& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const CycQ& a, const CycQ& b) { return !(a == b); }

    friend CycQ operator+(const CycQ& a, const CycQ& b) {
        a.require_same_p(b);
        CycQ r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CycQ operator-(const CycQ& a, const CycQ& b) {
        a.require_same_p(b);
        CycQ r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    friend CycQ operator*(const CycQ& a, const CycQ& b) {
        a.require_same_p(b);
        long p = a.p_;
        // accumulate in the group ring Z[Z/p], then fold zeta^(p-1)
        std::vector<Rational> acc(static_cast<size_t>(p));
        for (long i = 0; i < p - 1; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (long j = 0; j < p - 1; ++j) {
                if (b.c_[j].is_zero()) continue;
                acc[static_cast<size_t>((i + j) % p)] += a.c_[i] * b.c_[j];
            }
        }
        CycQ r(p);
        for (long k = 0; k < p - 1; ++k) r.c_[k] = acc[k] - acc[p - 1];
        return r;
    }

    CycQ operator-() const { return CycQ(p_) - *this; }

    friend CycQ operator*(const CycQ& a, const Rational& s) {
        CycQ r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend CycQ operator*(const Rational& s, const CycQ& a) { return a * s; }

    friend CycQ operator/(const CycQ& a, const Rational& s) {
        if (s.is_zero()) throw std::invalid_argument("cyclotomic: division by zero scalar");
        CycQ r = a;
        for (auto& c : r.c_) c /= s;
        return r;
    }

    CycQ& operator+=(const CycQ& o) { return *this = *this + o; }
    CycQ& operator-=(const CycQ& o) { return *this = *this - o; }
    CycQ& operator*=(const CycQ& o) { return *this = *this * o; }

    // numerical embedding zeta = exp(2 pi i / p); display only
    std::complex<double> approx() const {
        std::complex<double> v = 0;
        for (size_t k = 0; k < c_.size(); ++k) {
            double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(p_);
            v += c_[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return v;
    }

    // "num/den" when rational, otherwise a sum of z^k terms
    std::string to_string() const {
        if (is_rational()) return c_[0].to_string();
        std::string out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (k == 0) {
                out += c_[0].to_string();
            } else {
                out += c_[k].to_string() + "*z";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    long p_;
    std::vector<Rational> c_;

    void require_same_p(const CycQ& o) const {
        if (p_ != o.p_) throw std::invalid_argument("cyclotomic: mixed root orders");
    }
};

}  // namespace ffram
