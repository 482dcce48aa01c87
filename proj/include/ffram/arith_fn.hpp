// arith_fn.hpp
//
// Arithmetical functions on monic polynomials: the norm |f| = q^deg(f), the
// Moebius and Euler functions, von Mangoldt, Liouville, their rational
// combinations, pointwise products, and the divisor convolution
// F(f) = sum_{g | f} G(g) H(f/g).
//
// Every function value is an exact Rational. A function carries a
// multiplicativity tag that is checked, not trusted: claiming a class runs an
// exhaustive test on monic pairs up to degree 3 over the given context (the
// result is cached per context, keyed by the function signature).

#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffram/poly.hpp"
#include "ffram/rational.hpp"

namespace ffram {

// --- direct value functions ------------------------------------------------

inline void require_monic(const Poly& f, const char* who) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument(std::string(who) + ": input must be monic (use monic() explicitly)");
}

inline BigInt norm(const Poly& f) {
    require_monic(f, "norm");
    return BigInt::pow(BigInt(f.ctx().q()), static_cast<unsigned>(f.deg()));
}

inline int moebius(const Poly& f) {
    require_monic(f, "moebius");
    Factorization fac = factorize(f);
    for (auto& [p, m] : fac.factors)
        if (m > 1) return 0;
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

inline BigInt totient(const Poly& f) {
    require_monic(f, "totient");
    // |f| * prod_{P | f} (1 - 1/|P|) = prod |P|^(a-1) (|P| - 1); Phi(1) = 1
    BigInt phi(1);
    for (auto& [p, m] : factorize(f).factors) {
        BigInt np = norm(p);
        phi = phi * BigInt::pow(np, static_cast<unsigned>(m - 1)) * (np - BigInt(1));
    }
    return phi;
}

inline int von_mangoldt(const Poly& f) {
    require_monic(f, "von_mangoldt");
    Factorization fac = factorize(f);
    if (fac.factors.size() != 1) return 0;  // includes Lambda(1) = 0
    return fac.factors[0].first.deg();      // log_q |P| = deg P exactly
}

struct LiouvilleOmega {
    int lambda;  // (-1)^Omega
    int omega;   // irreducible divisors counted with multiplicity
};

inline LiouvilleOmega liouville_omega(const Poly& f) {
    require_monic(f, "liouville");
    int omega = 0;
    for (auto& [p, m] : factorize(f).factors) omega += m;
    return {omega % 2 == 0 ? 1 : -1, omega};
}

// --- dispatchable functions --------------------------------------------------

enum class MultClass { completely_multiplicative, multiplicative, none };
enum class Codomain { integer, rational };

class ArithFn {
public:
    enum class Kind {
        norm,
        norm_pow,
        moebius,
        totient,
        von_mangoldt,
        liouville,
        moebius_sq_over_totient,
        moebius_over_norm,
        one,
        custom,
        product
    };

    static ArithFn norm(const FieldCtx& ctx) {
        return make(ctx, Kind::norm, MultClass::completely_multiplicative);
    }
    static ArithFn norm_pow(const FieldCtx& ctx, int e) {
        if (e < 1) throw std::invalid_argument("arith_fn: norm exponent must be >= 1");
        ArithFn fn(Kind::norm_pow, MultClass::completely_multiplicative);
        fn.exp_ = e;
        fn.verify(ctx);
        return fn;
    }
    static ArithFn moebius(const FieldCtx& ctx) { return make(ctx, Kind::moebius, MultClass::multiplicative); }
    static ArithFn totient(const FieldCtx& ctx) { return make(ctx, Kind::totient, MultClass::multiplicative); }
    static ArithFn von_mangoldt(const FieldCtx& ctx) { return make(ctx, Kind::von_mangoldt, MultClass::none); }
    static ArithFn liouville(const FieldCtx& ctx) {
        return make(ctx, Kind::liouville, MultClass::completely_multiplicative);
    }
    static ArithFn moebius_sq_over_totient(const FieldCtx& ctx) {
        return make(ctx, Kind::moebius_sq_over_totient, MultClass::multiplicative);
    }
    static ArithFn moebius_over_norm(const FieldCtx& ctx) {
        return make(ctx, Kind::moebius_over_norm, MultClass::multiplicative);
    }
    static ArithFn one(const FieldCtx& ctx) { return make(ctx, Kind::one, MultClass::completely_multiplicative); }

    // table keyed by canonical polynomial code; a miss at apply() is an error
    static ArithFn custom(const FieldCtx& ctx, std::map<uint64_t, Rational> table,
                          MultClass claimed = MultClass::none) {
        ArithFn fn(Kind::custom, claimed);
        fn.table_ = std::make_shared<std::map<uint64_t, Rational>>(std::move(table));
        fn.verify(ctx);
        return fn;
    }

    // pointwise product, e.g. J*mu for the Hoelder-type evaluation
    static ArithFn product(const FieldCtx& ctx, const ArithFn& a, const ArithFn& b) {
        MultClass mc;
        if (a.mult_class_ == MultClass::none || b.mult_class_ == MultClass::none)
            mc = MultClass::none;
        else if (a.mult_class_ == MultClass::completely_multiplicative &&
                 b.mult_class_ == MultClass::completely_multiplicative)
            mc = MultClass::completely_multiplicative;
        else
            mc = MultClass::multiplicative;
        ArithFn fn(Kind::product, mc);
        fn.lhs_ = std::make_shared<ArithFn>(a);
        fn.rhs_ = std::make_shared<ArithFn>(b);
        fn.verify(ctx);
        return fn;
    }

    // CLI tokens: norm, norm^e, mu, phi, lambda_vm, liouville, mu2/phi, mu/norm, one
    static ArithFn from_token(const FieldCtx& ctx, const std::string& token) {
        if (token == "norm") return norm(ctx);
        if (token == "mu") return moebius(ctx);
        if (token == "phi") return totient(ctx);
        if (token == "lambda_vm") return von_mangoldt(ctx);
        if (token == "liouville") return liouville(ctx);
        if (token == "mu2/phi") return moebius_sq_over_totient(ctx);
        if (token == "mu/norm") return moebius_over_norm(ctx);
        if (token == "one") return one(ctx);
        if (token.rfind("norm^", 0) == 0) {
            int e;
            try {
                size_t used;
                e = std::stoi(token.substr(5), &used);
                if (used != token.size() - 5) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("arith_fn: bad exponent in '" + token + "'");
            }
            return norm_pow(ctx, e);
        }
        throw std::invalid_argument("arith_fn: unknown function token '" + token + "'");
    }

    Kind kind() const { return kind_; }
    MultClass mult_class() const { return mult_class_; }
    bool completely_multiplicative() const {
        return mult_class_ == MultClass::completely_multiplicative;
    }

    Codomain codomain() const {
        switch (kind_) {
            case Kind::moebius_sq_over_totient:
            case Kind::moebius_over_norm:
            case Kind::custom:
                return Codomain::rational;
            case Kind::product:
                return (lhs_->codomain() == Codomain::integer && rhs_->codomain() == Codomain::integer)
                           ? Codomain::integer
                           : Codomain::rational;
            default:
                return Codomain::integer;
        }
    }

    std::string name() const {
        switch (kind_) {
            case Kind::norm: return "norm";
            case Kind::norm_pow: return "norm^" + std::to_string(exp_);
            case Kind::moebius: return "mu";
            case Kind::totient: return "phi";
            case Kind::von_mangoldt: return "lambda_vm";
            case Kind::liouville: return "liouville";
            case Kind::moebius_sq_over_totient: return "mu2/phi";
            case Kind::moebius_over_norm: return "mu/norm";
            case Kind::one: return "one";
            case Kind::custom: return "custom";
            case Kind::product: return lhs_->name() + "*" + rhs_->name();
        }
        return "?";
    }

    Rational operator()(const Poly& f) const { return apply(*this, f); }

    friend Rational apply(const ArithFn& fn, const Poly& f) {
        require_monic(f, "arith_fn");
        switch (fn.kind_) {
            case Kind::norm:
                return Rational(ffram::norm(f));
            case Kind::norm_pow:
                return Rational(BigInt::pow(BigInt(f.ctx().q()),
                                            static_cast<unsigned>(fn.exp_ * f.deg())));
            case Kind::moebius:
                return Rational(ffram::moebius(f));
            case Kind::totient:
                return Rational(ffram::totient(f));
            case Kind::von_mangoldt:
                return Rational(ffram::von_mangoldt(f));
            case Kind::liouville:
                return Rational(liouville_omega(f).lambda);
            case Kind::moebius_sq_over_totient: {
                int mu = ffram::moebius(f);
                return Rational(BigInt(mu * mu), ffram::totient(f));
            }
            case Kind::moebius_over_norm:
                return Rational(BigInt(ffram::moebius(f)), ffram::norm(f));
            case Kind::one:
                return Rational(1);
            case Kind::custom: {
                auto it = fn.table_->find(f.code());
                if (it == fn.table_->end())
                    throw std::invalid_argument("arith_fn: custom table miss at " + ffram::to_string(f));
                return it->second;
            }
            case Kind::product:
                return apply(*fn.lhs_, f) * apply(*fn.rhs_, f);
        }
        throw std::logic_error("arith_fn: unreachable");
    }

private:
    Kind kind_;
    MultClass mult_class_;
    int exp_ = 0;
    std::shared_ptr<std::map<uint64_t, Rational>> table_;
    std::shared_ptr<ArithFn> lhs_, rhs_;

    ArithFn(Kind k, MultClass mc) : kind_(k), mult_class_(mc) {}

    static ArithFn make(const FieldCtx& ctx, Kind k, MultClass mc) {
        ArithFn fn(k, mc);
        fn.verify(ctx);
        return fn;
    }

    // exhaustive multiplicativity check on monic pairs up to degree 3;
    // named functions cache the verdict per context, custom tables re-run
    void verify(const FieldCtx& ctx) const {
        if (mult_class_ == MultClass::none) return;
        bool cacheable = !contains_custom();
        std::string sig = name() + "#" + (completely_multiplicative() ? "cm" : "m");
        if (cacheable) {
            std::lock_guard<std::mutex> lock(ctx.cache().mu);
            auto it = ctx.cache().verified_fns.find(sig);
            if (it != ctx.cache().verified_fns.end()) {
                if (it->second) return;
                throw std::invalid_argument("arith_fn: " + name() + " failed its multiplicativity check");
            }
        }
        bool ok = run_mult_check(ctx);
        if (cacheable) {
            std::lock_guard<std::mutex> lock(ctx.cache().mu);
            ctx.cache().verified_fns[sig] = ok;
        }
        if (!ok) throw std::invalid_argument("arith_fn: " + name() + " failed its multiplicativity check");
    }

    bool contains_custom() const {
        if (kind_ == Kind::custom) return true;
        if (kind_ == Kind::product) return lhs_->contains_custom() || rhs_->contains_custom();
        return false;
    }

    bool run_mult_check(const FieldCtx& ctx) const {
        // a multiplicative function has G(1) = 1 by definition
        if (apply(*this, Poly::one(ctx)) != Rational(1)) return false;
        std::vector<Poly> monics;
        for (int d = 0; d <= 3; ++d)
            for_each_monic(ctx, d, [&](const Poly& f) { monics.push_back(f); });
        bool complete = completely_multiplicative();
        for (const Poly& a : monics)
            for (const Poly& b : monics) {
                if (!complete && !gcd(a, b).is_one()) continue;
                if (apply(*this, a * b) != apply(*this, a) * apply(*this, b)) return false;
            }
        return true;
    }
};

// divisor convolution F(f) = sum_{g | f} G(g) H(f/g)
inline Rational convolve_F(const ArithFn& G, const ArithFn& H, const Poly& f) {
    require_monic(f, "convolve_F");
    Rational sum(0);
    for (const Poly& g : divisors(f)) sum += apply(G, g) * apply(H, divrem(f, g).first);
    return sum;
}

}  // namespace ffram
