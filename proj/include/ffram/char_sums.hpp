// char_sums.hpp
//
// The additive character eps(h,f) = zeta_p^(a_1), where a_1 is the top
// theta-basis digit of the leading coefficient of h mod f (the coefficient of
// X^(deg f - 1)); the Ramanujan sum eta over reduced residues; the divisor
// convolution S(h;f); finite Fourier coefficients a_f(g) and the
// reconstruction sum; the Hoelder-type evaluation of S through F; and the six
// closed-form coefficient families.
//
// Values live in Q(zeta_p), checked by exact equality. Sums over residue
// systems aggregate root-of-unity exponents first and build the cyclotomic
// value once, so the inner loops stay in machine integers.

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "ffram/arith_fn.hpp"
#include "ffram/cyclotomic.hpp"
#include "ffram/poly.hpp"

namespace ffram {

// a conditional identity was asked about outside its hypotheses; verification
// sweeps count these as skipped, never as passes or failures
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_modulus(const Poly& f, const char* who) {
    if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero modulus");
    if (!f.is_monic()) throw std::invalid_argument(std::string(who) + ": modulus must be monic");
}

// exponent k with eps(h,f) = zeta_p^k; h is reduced mod f internally
inline int eps_exponent(const Poly& h, const Poly& f) {
    require_modulus(f, "eps");
    if (f.is_one()) return 0;
    const Poly rem = divrem(h, f).second;
    return f.ctx().top_basis_coeff(rem.coeff(f.deg() - 1));
}

inline CycQ eps(const Poly& h, const Poly& f) {
    return CycQ::root(f.ctx().p(), eps_exponent(h, f));
}

// sum of eps(hg, f) over a complete residue system mod f
inline CycQ char_sum_full(const Poly& h, const Poly& f) {
    require_modulus(f, "char_sum_full");
    const long p = f.ctx().p();
    std::vector<long> count(static_cast<size_t>(p), 0);
    for (const Poly& g : residues(f, false)) ++count[eps_exponent(h * g, f)];
    CycQ sum(p);
    for (long k = 0; k < p; ++k)
        if (count[k]) sum += CycQ::root(p, k) * Rational(count[k]);
    return sum;
}

// eta(h,f): the sum over the reduced residue system
inline CycQ eta_direct(const Poly& h, const Poly& f) {
    require_modulus(f, "eta");
    require_monic(h, "eta");
    const long p = f.ctx().p();
    std::vector<long> count(static_cast<size_t>(p), 0);
    for (const Poly& g : residues(f, true)) ++count[eps_exponent(h * g, f)];
    CycQ sum(p);
    for (long k = 0; k < p; ++k)
        if (count[k]) sum += CycQ::root(p, k) * Rational(count[k]);
    return sum;
}

// eta(h,f) = sum_{d | (h,f)} |d| mu(f/d), an integer
inline Rational eta_formula(const Poly& h, const Poly& f) {
    require_modulus(f, "eta");
    require_monic(h, "eta");
    Rational sum(0);
    for (const Poly& d : divisors(gcd(h, f)))
        sum += Rational(norm(d)) * Rational(moebius(divrem(f, d).first));
    return sum;
}

// S(h;f) = sum_{g | (h,f)} G(g) H(f/g)
inline Rational s_conv(const ArithFn& G, const ArithFn& H, const Poly& h, const Poly& f) {
    require_modulus(f, "s_conv");
    require_monic(h, "s_conv");
    Rational sum(0);
    for (const Poly& g : divisors(gcd(h, f))) sum += apply(G, g) * apply(H, divrem(f, g).first);
    return sum;
}

// a_f(g) = (1/|f|) sum_{d | (f,g)} |d| H(d) G(f/d); g = 0 is allowed, (f,0) = f
inline Rational fourier_coeff(const ArithFn& G, const ArithFn& H, const Poly& f, const Poly& g) {
    require_modulus(f, "fourier_coeff");
    Rational sum(0);
    for (const Poly& d : divisors(gcd(f, g)))
        sum += Rational(norm(d)) * apply(H, d) * apply(G, divrem(f, d).first);
    return sum / Rational(norm(f));
}

// completely multiplicative refinement: a_f(g) = (1/|f|) G(f/r) sum_{d|r} |d| H(d) G(r/d)
inline Rational fourier_coeff_cm(const ArithFn& G, const ArithFn& H, const Poly& f, const Poly& g) {
    require_modulus(f, "fourier_coeff");
    if (!G.completely_multiplicative())
        throw HypothesisError("fourier_coeff_cm: G is not completely multiplicative");
    Poly r = gcd(f, g);
    Rational sum(0);
    for (const Poly& d : divisors(r))
        sum += Rational(norm(d)) * apply(H, d) * apply(G, divrem(r, d).first);
    return apply(G, divrem(f, r).first) * sum / Rational(norm(f));
}

// S(h;f) rebuilt from its finite Fourier series over a complete residue system
inline CycQ fourier_reconstruct(const ArithFn& G, const ArithFn& H, const Poly& h, const Poly& f) {
    require_modulus(f, "fourier_reconstruct");
    require_monic(h, "fourier_reconstruct");
    const long p = f.ctx().p();
    // a_f(g) depends only on (f,g), so cache it per divisor of f
    std::vector<std::pair<uint64_t, Rational>> by_gcd;
    for (const Poly& d : divisors(f)) by_gcd.emplace_back(d.code(), fourier_coeff(G, H, f, d));
    auto coeff_for = [&](const Poly& g) {
        uint64_t key = gcd(f, g).code();
        for (auto& [code, val] : by_gcd)
            if (code == key) return val;
        throw std::logic_error("fourier_reconstruct: gcd not a divisor");
    };
    std::vector<Rational> acc(static_cast<size_t>(p));
    for (const Poly& g : residues(f, false)) acc[eps_exponent(h * g, f)] += coeff_for(g);
    CycQ sum(p);
    for (long k = 0; k < p; ++k)
        if (!acc[k].is_zero()) sum += CycQ::root(p, k) * acc[k];
    return sum;
}

// Hoelder-type evaluation: with H = J*mu, G completely multiplicative, and
// G(P) notin {0, J(P)} for every irreducible P | f,
//   S(h;f) = J(e) mu(e) F(f) / F(e)  with  e = f / (h,f).
inline Rational holder_eval(const ArithFn& G, const ArithFn& J, const Poly& h, const Poly& f) {
    require_modulus(f, "holder_eval");
    require_monic(h, "holder_eval");
    if (!G.completely_multiplicative())
        throw HypothesisError("holder_eval: G must be completely multiplicative");
    for (auto& [P, m] : factorize(f).factors) {
        Rational gp = apply(G, P);
        if (gp.is_zero())
            throw HypothesisError("holder_eval: G(P) = 0 at P = " + to_string(P));
        if (gp == apply(J, P))
            throw HypothesisError("holder_eval: G(P) = J(P) at P = " + to_string(P));
    }
    auto F_of = [&](const Poly& x) {
        Rational sum(0);
        for (const Poly& g : divisors(x)) {
            Poly cof = divrem(x, g).first;
            sum += apply(G, g) * apply(J, cof) * Rational(moebius(cof));
        }
        return sum;
    };
    Poly e = divrem(f, gcd(h, f)).first;
    Rational Fe = F_of(e);
    if (Fe.is_zero()) throw std::logic_error("holder_eval: F(f/(h,f)) vanished under valid hypotheses");
    return apply(J, e) * Rational(moebius(e)) * F_of(f) / Fe;
}

// the six closed-form coefficient families, all as functions of r = (f,g)
enum class ExampleKind { mu, phi, mu_over_norm, mu2_over_phi, vm, liouville };

inline const char* example_kind_name(ExampleKind k) {
    switch (k) {
        case ExampleKind::mu: return "mu";
        case ExampleKind::phi: return "phi";
        case ExampleKind::mu_over_norm: return "mu/norm";
        case ExampleKind::mu2_over_phi: return "mu2/phi";
        case ExampleKind::vm: return "lambda_vm";
        case ExampleKind::liouville: return "liouville";
    }
    return "?";
}

// the H paired with each closed form (G is always the norm)
inline ArithFn example_kind_fn(ExampleKind k, const FieldCtx& ctx) {
    switch (k) {
        case ExampleKind::mu: return ArithFn::moebius(ctx);
        case ExampleKind::phi: return ArithFn::totient(ctx);
        case ExampleKind::mu_over_norm: return ArithFn::moebius_over_norm(ctx);
        case ExampleKind::mu2_over_phi: return ArithFn::moebius_sq_over_totient(ctx);
        case ExampleKind::vm: return ArithFn::von_mangoldt(ctx);
        case ExampleKind::liouville: return ArithFn::liouville(ctx);
    }
    throw std::logic_error("example_kind_fn: bad kind");
}

inline Rational example_coeff(ExampleKind kind, const Poly& f, const Poly& g) {
    require_modulus(f, "example_coeff");
    Poly r = gcd(f, g);
    switch (kind) {
        case ExampleKind::mu:
            return Rational(r.is_one() ? 1 : 0);
        case ExampleKind::phi:
            return Rational(norm(r));
        case ExampleKind::mu_over_norm:
            return Rational(totient(r)) / Rational(norm(r));
        case ExampleKind::mu2_over_phi:
            return Rational(norm(r)) / Rational(totient(r));
        case ExampleKind::vm:
            return Rational(r.is_one() ? 0 : r.deg());
        case ExampleKind::liouville: {
            for (auto& [P, m] : factorize(r).factors)
                if (m % 2) return Rational(0);
            return Rational(1);
        }
    }
    throw std::logic_error("example_coeff: bad kind");
}

}  // namespace ffram
