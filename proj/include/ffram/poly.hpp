// poly.hpp
//
// Polynomials over F_q: arithmetic, text grammar, lexicographic enumeration,
// trial-division factorization against a cached irreducible sieve, divisors,
// and residue systems.
//
// Coefficients are stored low degree first with no trailing zeros; the zero
// polynomial is the empty list and its degree is "none", never an integer.
// Canonical order everywhere is (degree, then coefficient lists compared
// low-degree-first), which keeps every enumeration and report byte-stable.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffram/field.hpp"

namespace ffram {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

class Poly {
public:
    Poly() : ctx_(nullptr) {}
    explicit Poly(const FieldCtx& ctx) : ctx_(&ctx) {}
    Poly(const FieldCtx& ctx, std::vector<Fq> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const FieldCtx& ctx) { return Poly(ctx); }
    static Poly one(const FieldCtx& ctx) { return Poly(ctx, {ctx.one()}); }
    static Poly constant(const FieldCtx& ctx, Fq a) { return Poly(ctx, {a}); }
    static Poly x(const FieldCtx& ctx) { return Poly(ctx, {ctx.zero(), ctx.one()}); }

    // convenience for tests and literals: coefficients as element indices, low first
    static Poly from_indices(const FieldCtx& ctx, const std::vector<long>& idx) {
        std::vector<Fq> c;
        c.reserve(idx.size());
        for (long v : idx) c.push_back(ctx.from_index(v));
        return Poly(ctx, std::move(c));
    }

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<Fq>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    // degree of a known-nonzero polynomial
    int deg() const {
        if (c_.empty()) throw std::invalid_argument("poly: degree of zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    Fq coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Fq{0};
        return c_[i];
    }
    Fq lead() const {
        if (c_.empty()) throw std::invalid_argument("poly: leading coefficient of zero");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == ctx_->one(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == ctx_->one(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.ctx_ && b.ctx_ && !a.ctx_->same_field(*b.ctx_)) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.require_same_ctx(b);
        const FieldCtx& F = *a.ctx_;
        std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()), Fq{0});
        for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return Poly(F, std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        a.require_same_ctx(b);
        const FieldCtx& F = *a.ctx_;
        std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()), Fq{0});
        for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return Poly(F, std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_ctx(b);
        const FieldCtx& F = *a.ctx_;
        if (a.is_zero() || b.is_zero()) return Poly(F);
        std::vector<Fq> c(a.c_.size() + b.c_.size() - 1, Fq{0});
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
        return Poly(F, std::move(c));
    }

    // scale so the leading coefficient is 1 (explicit, never done silently)
    Poly monic() const {
        if (is_zero()) throw std::invalid_argument("poly: monic of zero polynomial");
        if (is_monic()) return *this;
        const FieldCtx& F = *ctx_;
        Fq s = F.inv(c_.back());
        std::vector<Fq> c = c_;
        for (auto& v : c) v = F.mul(v, s);
        return Poly(F, std::move(c));
    }

    // packed base-q code; injective on canonical polynomials, zero maps to 0
    uint64_t code() const {
        unsigned __int128 v = 0;
        const unsigned __int128 q = static_cast<unsigned __int128>(ctx_->q());
        for (size_t i = c_.size(); i-- > 0;) v = v * q + c_[i].v;
        if (v > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("poly: code overflow");
        return static_cast<uint64_t>(v);
    }

    bool code_fits() const {
        unsigned __int128 v = 1;
        for (size_t i = 0; i < c_.size(); ++i) {
            v *= static_cast<unsigned __int128>(ctx_->q());
            if (v > static_cast<unsigned __int128>(UINT64_MAX)) return false;
        }
        return true;
    }

    static Poly from_code(const FieldCtx& ctx, uint64_t code) {
        std::vector<Fq> c;
        while (code) {
            c.push_back(Fq{static_cast<uint16_t>(code % ctx.q())});
            code /= static_cast<uint64_t>(ctx.q());
        }
        return Poly(ctx, std::move(c));
    }

    void require_same_ctx(const Poly& o) const {
        if (ctx_ == o.ctx_) return;
        if (!ctx_ || !o.ctx_ || !ctx_->same_field(*o.ctx_))
            throw std::invalid_argument("poly: mixed field contexts");
    }

private:
    const FieldCtx* ctx_;
    std::vector<Fq> c_;

    void trim() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }
};

// canonical order: degree first, then coefficient lists low-degree-first
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() ? false : !b.is_zero();
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = 0; i <= a.deg(); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    a.require_same_ctx(b);
    if (b.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
    const FieldCtx& F = a.ctx();
    if (a.is_zero() || a.deg() < b.deg()) return {Poly(F), a};
    std::vector<Fq> rem(a.coeffs());
    int db = b.deg();
    Fq lead_inv = F.inv(b.lead());
    std::vector<Fq> quot(a.deg() - db + 1, Fq{0});
    for (int i = a.deg(); i >= db; --i) {
        Fq c = F.mul(rem[i], lead_inv);
        if (c.v == 0) continue;
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeff(j)));
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

// monic gcd; gcd(f, 0) = monic(f) so that divisor sums with g = 0 are defined
inline Poly gcd(const Poly& a, const Poly& b) {
    a.require_same_ctx(b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly: gcd(0, 0)");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

// --- enumeration ---------------------------------------------------------

// all monic polynomials of degree d, lexicographic on coefficient lists
inline void for_each_monic(const FieldCtx& ctx, int d, const std::function<void(const Poly&)>& fn) {
    if (d < 0) return;
    std::vector<Fq> c(d + 1, Fq{0});
    c[d] = ctx.one();
    while (true) {
        fn(Poly(ctx, c));
        int i = d - 1;  // last free coefficient varies fastest
        while (i >= 0 && c[i].v == ctx.q() - 1) c[i--] = Fq{0};
        if (i < 0) break;
        c[i].v++;
    }
}

inline std::vector<Poly> monic_enum(const FieldCtx& ctx, int d) {
    std::vector<Poly> out;
    if (d < 0) return out;
    out.reserve(static_cast<size_t>(std::min<double>(1e7, std::pow(double(ctx.q()), d))));
    for_each_monic(ctx, d, [&](const Poly& f) { out.push_back(f); });
    return out;
}

// complete residue system mod f in canonical order (zero first), or the
// reduced system of residues coprime to f
inline std::vector<Poly> residues(const Poly& f, bool reduced) {
    if (f.is_zero()) throw std::invalid_argument("poly: residues mod zero");
    if (!f.is_monic()) throw std::invalid_argument("poly: residues need a monic modulus");
    const FieldCtx& F = f.ctx();
    {
        long n = 1;
        for (int i = 0; i < f.deg(); ++i) {
            n *= F.q();
            if (n > 16'000'000) throw std::invalid_argument("poly: residue system too large");
        }
    }
    std::vector<Poly> out;
    auto consider = [&](const Poly& g) {
        if (!reduced || gcd(g, f).is_one()) out.push_back(g);
    };
    consider(Poly::zero(F));
    for (int d = 0; d < f.deg(); ++d) {
        // degree exactly d, any nonzero lead, lex ascending
        std::vector<Fq> c(d + 1, Fq{0});
        c[d] = F.one();
        while (true) {
            consider(Poly(F, c));
            int i = d;  // rightmost position varies fastest; lead skips zero
            while (i >= 0) {
                uint16_t lo = (i == d) ? 1 : 0;
                if (c[i].v == F.q() - 1) {
                    c[i].v = lo;
                    --i;
                } else {
                    c[i].v++;
                    break;
                }
            }
            if (i < 0) break;
        }
    }
    return out;
}

// --- text grammar ---------------------------------------------------------
//
//   poly  := term ('+' term)*
//   term  := coeff | coeff? 'X' ('^' uint)?
//   coeff := uint                       (t = 1; also accepted for t > 1 as
//                                        the prime-subfield embedding)
//          | '[' uint (',' uint)* ']'   (t > 1, a1 first)
//
// Whitespace is ignored. Coefficients must lie in the field.

namespace detail {

class PolyParser {
public:
    PolyParser(const FieldCtx& ctx, std::string_view s) : ctx_(ctx), s_(s) {}

    Poly parse() {
        std::vector<Fq> acc;
        parse_term(acc);
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            parse_term(acc);
            skip_ws();
        }
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return Poly(ctx_, std::move(acc));
    }

private:
    const FieldCtx& ctx_;
    std::string_view s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    long parse_uint(const char* what) {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9')
            throw ParseError(std::string("expected ") + what, pos_);
        long v = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw ParseError("number too large", start);
            ++pos_;
        }
        return v;
    }

    Fq parse_coeff() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '[') {
            size_t start = pos_;
            if (ctx_.t() == 1) throw ParseError("bracketed coefficient in a prime field", pos_);
            ++pos_;
            std::vector<int> rev;  // a1 first in the text
            while (true) {
                long d = parse_uint("field digit");
                if (d >= ctx_.p()) throw ParseError("coefficient digit " + std::to_string(d) + " out of field", start);
                rev.push_back(static_cast<int>(d));
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
            if (pos_ >= s_.size() || s_[pos_] != ']') throw ParseError("expected ']'", pos_);
            ++pos_;
            if (static_cast<int>(rev.size()) != ctx_.t())
                throw ParseError("element needs exactly " + std::to_string(ctx_.t()) + " digits", start);
            std::vector<int> digits(rev.rbegin(), rev.rend());
            return ctx_.from_digits(digits);
        }
        size_t start = pos_;
        long v = parse_uint("coefficient");
        if (v >= ctx_.p())
            throw ParseError("coefficient " + std::to_string(v) + " out of field", start);
        std::vector<int> digits(ctx_.t(), 0);
        digits[0] = static_cast<int>(v);
        return ctx_.from_digits(digits);
    }

    void parse_term(std::vector<Fq>& acc) {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("expected term", pos_);
        Fq coeff = ctx_.one();
        bool have_coeff = false;
        if (s_[pos_] != 'X') {
            coeff = parse_coeff();
            have_coeff = true;
            skip_ws();
        }
        long e = 0;
        if (pos_ < s_.size() && s_[pos_] == 'X') {
            ++pos_;
            e = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = parse_uint("exponent");
                if (e > 64) throw ParseError("exponent too large", pos_);
            }
        } else if (!have_coeff) {
            throw ParseError("expected term", pos_);
        }
        if (acc.size() < static_cast<size_t>(e + 1)) acc.resize(e + 1, Fq{0});
        acc[e] = ctx_.add(acc[e], coeff);
    }
};

}  // namespace detail

inline Poly parse_poly(const FieldCtx& ctx, std::string_view text) {
    return detail::PolyParser(ctx, text).parse();
}

// canonical form: descending powers, zero terms omitted, unit coefficients
// omitted in front of X^k, "0" for the zero polynomial
inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const FieldCtx& F = f.ctx();
    std::string out;
    for (int i = f.deg(); i >= 0; --i) {
        Fq c = f.coeff(i);
        if (c.v == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += F.fq_to_string(c);
        } else {
            if (c != F.one()) out += F.fq_to_string(c);
            out += (i == 1) ? "X" : "X^" + std::to_string(i);
        }
    }
    return out;
}

// --- irreducibles, factorization, divisors --------------------------------

struct FactorCacheEntry {
    uint16_t unit;
    std::vector<std::pair<uint64_t, int>> factors;  // (code of monic irreducible, multiplicity)
};

struct Factorization {
    Fq unit;                                  // leading coefficient of the input
    std::vector<std::pair<Poly, int>> factors;  // sorted canonically, monic irreducibles
};

namespace detail {

// ensure the sieve covers degrees 1..d; returns nothing, caller re-reads under lock
inline void extend_sieve(const FieldCtx& ctx, int d) {
    auto& cache = ctx.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& table = cache.irreducibles_by_degree;
    if (table.empty()) table.resize(1);  // index 0 unused
    for (int k = static_cast<int>(table.size()); k <= d; ++k) {
        std::vector<uint64_t> found;
        for_each_monic(ctx, k, [&](const Poly& f) {
            for (int dd = 1; 2 * dd <= k; ++dd)
                for (uint64_t code : table[dd])
                    if (divrem(f, Poly::from_code(ctx, code)).second.is_zero()) return;
            found.push_back(f.code());
        });
        table.push_back(std::move(found));
    }
}

}  // namespace detail

// all monic irreducibles of degree d, canonical order
inline std::vector<Poly> irreducibles(const FieldCtx& ctx, int d) {
    if (d < 1) throw std::invalid_argument("poly: irreducibles need degree >= 1");
    detail::extend_sieve(ctx, d);
    auto& cache = ctx.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    std::vector<Poly> out;
    out.reserve(cache.irreducibles_by_degree[d].size());
    for (uint64_t code : cache.irreducibles_by_degree[d]) out.push_back(Poly::from_code(ctx, code));
    return out;
}

inline bool irreducible_test(const Poly& f) {
    if (f.is_zero() || !f.is_monic() || f.deg() < 1)
        throw std::invalid_argument("poly: irreducibility test needs a monic non-constant input");
    const FieldCtx& ctx = f.ctx();
    for (int d = 1; 2 * d <= f.deg(); ++d)
        for (const Poly& p : irreducibles(ctx, d))
            if (divrem(f, p).second.is_zero()) return false;
    return true;
}

inline Factorization factorize(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("poly: factorize zero polynomial");
    const FieldCtx& ctx = f.ctx();
    Factorization out;
    out.unit = f.lead();

    Poly work = f.monic();
    const bool memoizable = work.code_fits();
    const uint64_t key = memoizable ? work.code() : 0;
    if (memoizable) {
        auto& cache = ctx.cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.factor_memo.find(key);
        if (it != cache.factor_memo.end()) {
            for (auto& [code, mult] : it->second->factors)
                out.factors.emplace_back(Poly::from_code(ctx, code), mult);
            return out;
        }
    }

    std::vector<std::pair<Poly, int>> factors;
    for (int d = 1; !work.is_one() && 2 * d <= work.deg(); ++d) {
        for (const Poly& p : irreducibles(ctx, d)) {
            if (work.deg() < 2 * d) break;
            int mult = 0;
            while (true) {
                auto [q, r] = divrem(work, p);
                if (!r.is_zero()) break;
                work = q;
                ++mult;
            }
            if (mult) factors.emplace_back(p, mult);
        }
    }
    if (!work.is_one()) factors.emplace_back(work, 1);  // residual is irreducible
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });

    if (memoizable) {
        auto entry = std::make_shared<FactorCacheEntry>();
        entry->unit = 1;
        for (auto& [p, m] : factors) entry->factors.emplace_back(p.code(), m);
        auto& cache = ctx.cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        cache.factor_memo.emplace(key, entry);
    }
    out.factors = std::move(factors);
    return out;
}

// all monic divisors of a monic f, canonical order; count is prod(alpha_i + 1)
inline std::vector<Poly> divisors(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("poly: divisors of zero");
    if (!f.is_monic()) throw std::invalid_argument("poly: divisors need a monic input");
    Factorization fac = factorize(f);
    std::vector<Poly> out{Poly::one(f.ctx())};
    for (auto& [p, mult] : fac.factors) {
        size_t n = out.size();
        Poly power = p;
        for (int e = 1; e <= mult; ++e) {
            for (size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
            if (e < mult) power = power * p;
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

}  // namespace ffram
