// field.hpp
//
// Exact arithmetic in F_q, q = p^t. Elements are packed indices: the element
// a_1*theta^(t-1) + ... + a_t is stored as sum(digit_i * p^i) where digit_i is
// the coefficient of theta^i. All arithmetic goes through lookup tables built
// once per context, so element operations are O(1) array reads.
//
// For t > 1 the extension is F_p[theta]/(Psi) for a monic irreducible Psi of
// degree t over F_p. When no Psi is supplied, the lexicographically smallest
// monic irreducible (coefficients compared low-degree-first) is chosen, so a
// given (p, t) always produces the same field.

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ffram {

// element of F_q, a packed digit index in [0, q)
struct Fq {
    uint16_t v = 0;
    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
    friend bool operator<(Fq a, Fq b) { return a.v < b.v; }
};

namespace detail {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomials over F_p as digit vectors, low degree first, used only
// for Psi selection and validation
using PPoly = std::vector<int>;

inline void ppoly_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly ppoly_mod(PPoly a, const PPoly& b, int p) {
    while (a.size() >= b.size() && !a.empty()) {
        int lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] - lead * b[i]) % p;
            if (a[shift + i] < 0) a[shift + i] += p;
        }
        ppoly_trim(a);
    }
    return a;
}

inline bool ppoly_irreducible(const PPoly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        PPoly div(d + 1, 0);
        div[d] = 1;
        while (true) {
            if (ppoly_mod(f, div, p).empty()) return false;
            // next candidate: odometer over the d low coefficients
            int i = d - 1;
            while (i >= 0 && div[i] == p - 1) div[i--] = 0;
            if (i < 0) break;
            ++div[i];
        }
    }
    return true;
}

}  // namespace detail

struct FactorCacheEntry;  // defined in poly.hpp

// shared lazily-built state: irreducible sieve and factorization memo
struct FieldCache {
    std::mutex mu;
    // irreducibles_by_degree[d] = packed codes of all monic irreducibles of degree d
    std::vector<std::vector<uint64_t>> irreducibles_by_degree;
    std::unordered_map<uint64_t, std::shared_ptr<const FactorCacheEntry>> factor_memo;
    // arithmetical-function multiplicativity checks already performed, by signature
    std::unordered_map<std::string, bool> verified_fns;
};

class FieldCtx {
public:
    // psi: coefficients of the defining polynomial, low degree first, length
    // t+1, monic; empty means "choose the default" (required empty for t=1)
    FieldCtx(long p, int t, std::vector<int> psi = {}) : p_(p), t_(t) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field: p must be prime");
        if (t < 1) throw std::invalid_argument("field: t must be >= 1");
        long q = 1;
        for (int i = 0; i < t; ++i) {
            q *= p;
            if (q > kMaxQ) throw std::invalid_argument("field: q = p^t too large (max 512)");
        }
        q_ = q;
        if (t == 1) {
            if (!psi.empty()) throw std::invalid_argument("field: psi given with t = 1");
        } else if (psi.empty()) {
            psi_ = default_psi(p, t);
        } else {
            if (static_cast<int>(psi.size()) != t + 1 || psi.back() != 1)
                throw std::invalid_argument("field: psi must be monic of degree t");
            for (int c : psi)
                if (c < 0 || c >= p) throw std::invalid_argument("field: psi coefficient out of range");
            if (!detail::ppoly_irreducible(psi, static_cast<int>(p)))
                throw std::invalid_argument("field: psi is reducible over F_p");
            psi_ = std::move(psi);
        }
        build_tables();
        cache_ = std::make_shared<FieldCache>();
    }

    long p() const { return p_; }
    int t() const { return t_; }
    long q() const { return q_; }
    const std::vector<int>& psi() const { return psi_; }  // empty when t == 1

    bool same_field(const FieldCtx& o) const {
        return p_ == o.p_ && t_ == o.t_ && psi_ == o.psi_;
    }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq from_index(long i) const {
        if (i < 0 || i >= q_) throw std::invalid_argument("field: element index out of range");
        return Fq{static_cast<uint16_t>(i)};
    }

    Fq add(Fq a, Fq b) const { return Fq{add_[a.v * q_ + b.v]}; }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const { return Fq{mul_[a.v * q_ + b.v]}; }
    Fq neg(Fq a) const { return Fq{neg_[a.v]}; }

    Fq inv(Fq a) const {
        if (a.v == 0) throw std::invalid_argument("field: inverse of zero");
        return Fq{inv_[a.v]};
    }

    // a_1 in the character construction: the coefficient of theta^(t-1);
    // for t = 1 this is the element itself
    int top_basis_coeff(Fq a) const { return top_[a.v]; }

    // digits low-to-high in theta: digits()[i] is the coefficient of theta^i
    std::vector<int> digits(Fq a) const {
        std::vector<int> d(t_);
        long v = a.v;
        for (int i = 0; i < t_; ++i) {
            d[i] = static_cast<int>(v % p_);
            v /= p_;
        }
        return d;
    }

    Fq from_digits(const std::vector<int>& d) const {
        if (static_cast<int>(d.size()) != t_) throw std::invalid_argument("field: digit list has wrong length");
        long v = 0;
        for (int i = t_ - 1; i >= 0; --i) {
            if (d[i] < 0 || d[i] >= p_) throw std::invalid_argument("field: digit out of range");
            v = v * p_ + d[i];
        }
        return Fq{static_cast<uint16_t>(v)};
    }

    // text form: plain integer for t = 1, "[a1,...,at]" with the theta^(t-1)
    // coefficient first for t > 1
    std::string fq_to_string(Fq a) const {
        if (t_ == 1) return std::to_string(a.v);
        auto d = digits(a);
        std::string s = "[";
        for (int i = t_ - 1; i >= 0; --i) {
            s += std::to_string(d[i]);
            if (i > 0) s += ",";
        }
        s += "]";
        return s;
    }

    FieldCache& cache() const { return *cache_; }

    static constexpr long kMaxQ = 512;

private:
    long p_;
    int t_;
    long q_;
    std::vector<int> psi_;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
    std::vector<uint8_t> top_;
    std::shared_ptr<FieldCache> cache_;

    static std::vector<int> default_psi(long p, int t) {
        // lexicographic scan, low-degree coefficient most significant
        std::vector<int> cand(t + 1, 0);
        cand[t] = 1;
        while (true) {
            if (detail::ppoly_irreducible(cand, static_cast<int>(p))) return cand;
            int i = t - 1;
            while (i >= 0 && cand[i] == p - 1) cand[i--] = 0;
            if (i < 0) break;
            ++cand[i];
        }
        throw std::logic_error("field: no irreducible of requested degree");  // unreachable
    }

    void build_tables() {
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        top_.resize(q_);

        long top_div = 1;
        for (int i = 0; i < t_ - 1; ++i) top_div *= p_;
        for (long a = 0; a < q_; ++a) top_[a] = static_cast<uint8_t>((a / top_div) % p_);

        auto to_digits = [&](long v) {
            std::vector<long> d(t_);
            for (int i = 0; i < t_; ++i) {
                d[i] = v % p_;
                v /= p_;
            }
            return d;
        };
        auto from_digits = [&](const std::vector<long>& d) {
            long v = 0;
            for (int i = t_ - 1; i >= 0; --i) v = v * p_ + d[i];
            return v;
        };

        for (long a = 0; a < q_; ++a) {
            auto da = to_digits(a);
            std::vector<long> dn(t_);
            for (int i = 0; i < t_; ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<uint16_t>(from_digits(dn));
            for (long b = 0; b < q_; ++b) {
                auto db = to_digits(b);
                std::vector<long> ds(t_);
                for (int i = 0; i < t_; ++i) ds[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<uint16_t>(from_digits(ds));

                // schoolbook product, then reduce mod Psi
                std::vector<long> prod(2 * t_ - 1, 0);
                for (int i = 0; i < t_; ++i)
                    for (int j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int d = 2 * t_ - 2; d >= t_; --d) {
                    long c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    // theta^d = -sum psi[i] theta^(d-t+i)
                    for (int i = 0; i < t_; ++i)
                        prod[d - t_ + i] = ((prod[d - t_ + i] - c * psi_[i]) % p_ + p_) % p_;
                }
                std::vector<long> dm(prod.begin(), prod.begin() + t_);
                mul_[a * q_ + b] = static_cast<uint16_t>(from_digits(dm));
            }
        }
        for (long a = 1; a < q_; ++a)
            for (long b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = static_cast<uint16_t>(b);
                    break;
                }
    }
};

}  // namespace ffram
