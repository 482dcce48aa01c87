// verify.hpp
//
// Exhaustive theorem sweeps with counterexample collection. Every registered
// identity is checked over the full cartesian case space at the configured
// degree bounds, both sides evaluated exactly; failures are collected without
// early abort, and hypothesis-violating cases of conditional identities are
// counted as skipped rather than passed. Reports are canonical: same config,
// same bytes.
//
// The eta and orthogonality sweeps are residue-system bound, O(q^(2 deg f))
// character evaluations per modulus, so they run on a packed-code kernel
// instead of the general polynomial type.

#pragma once

#include <chrono>
#include <cstdio>
#include <sstream>

#include "ffram/series.hpp"

namespace ffram {

struct SweepConfig {
    long p = 2;
    int t = 1;
    std::vector<int> psi;  // optional defining-polynomial override
    std::string theorem;
    int max_deg_f = -1;  // -1 selects the per-theorem default for this q
    int max_deg_h = -1;
    int trunc = 6;  // N for the series identities
    std::string G_token, H_token, J_token;  // optional single-pair override
    bool self_test = false;  // perturb eta's divisor formula by one unit
};

struct Failure {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs, rhs;
};

struct Report {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> params;
    long cases = 0;
    long skipped = 0;
    std::vector<Failure> failures;
    long elapsed_ms = 0;
    bool pass() const { return failures.empty(); }
};

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "gcd_lemma", "thm2.1", "thm2.2", "thm2.3",  "orthogonality", "thm3.1",
        "thm3.2",    "ex_mu",  "ex_phi", "ex_mu_norm", "ex_mu2_phi", "ex_vm",
        "ex_liouville", "thm4.1a", "thm4.1b"};
    return ids;
}

namespace detail {

// packed-code arithmetic on the residue system mod f: residues are base-q
// codes of their coefficient vectors, products are reduced in stack buffers
class ResidueKernel {
public:
    explicit ResidueKernel(const Poly& f) : F_(f.ctx()), r_(f.deg()), q_(F_.q()) {
        if (r_ > 15) throw std::invalid_argument("sweep: modulus degree too large");
        R_ = 1;
        for (int i = 0; i < r_; ++i) {
            R_ *= q_;
            if (R_ > 16'000'000) throw std::invalid_argument("sweep: residue system too large");
        }
        fc_.resize(r_ + 1);
        for (int i = 0; i <= r_; ++i) fc_[i] = f.coeff(i);
        top_pow_ = 1;
        for (int i = 0; i + 1 < r_; ++i) top_pow_ *= q_;
    }

    long count() const { return R_; }

    int eps_exp(long code) const {
        if (r_ == 0) return 0;
        return F_.top_basis_coeff(Fq{static_cast<uint16_t>((code / top_pow_) % q_)});
    }

    long code_of(const Poly& g) const {  // g must already be a residue (deg < r)
        long code = 0;
        for (int i = r_ - 1; i >= 0; --i) code = code * q_ + g.coeff(i).v;
        return code;
    }

    // (a * b) mod f on packed codes
    long mulmod(long a, long b) const {
        if (r_ == 0) return 0;
        uint16_t da[16], db[16], prod[31] = {0};
        for (int i = 0; i < r_; ++i) {
            da[i] = static_cast<uint16_t>(a % q_);
            a /= q_;
            db[i] = static_cast<uint16_t>(b % q_);
            b /= q_;
        }
        for (int i = 0; i < r_; ++i) {
            if (!da[i]) continue;
            Fq ai{da[i]};
            for (int j = 0; j < r_; ++j) {
                if (!db[j]) continue;
                prod[i + j] = F_.add(Fq{prod[i + j]}, F_.mul(ai, Fq{db[j]})).v;
            }
        }
        for (int d = 2 * r_ - 2; d >= r_; --d) {
            uint16_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (int i = 0; i < r_; ++i)
                prod[d - r_ + i] = F_.sub(Fq{prod[d - r_ + i]}, F_.mul(Fq{c}, fc_[i])).v;
        }
        long code = 0;
        for (int i = r_ - 1; i >= 0; --i) code = code * q_ + prod[i];
        return code;
    }

private:
    const FieldCtx& F_;
    int r_;
    long q_, R_, top_pow_;
    std::vector<Fq> fc_;
};

struct SweepState {
    FieldCtx ctx;
    SweepConfig cfg;
    Report report;

    SweepState(FieldCtx c, SweepConfig s) : ctx(std::move(c)), cfg(std::move(s)) {}

    void fail(std::vector<std::pair<std::string, std::string>> inputs, std::string lhs,
              std::string rhs) {
        report.failures.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
    }
};

inline int default_deg_f(const std::string& id, long q) {
    if (id == "thm2.1" || id == "gcd_lemma") return 2;
    if (id == "thm2.3") return 3;
    if (id == "thm4.1a" || id == "thm4.1b") return 3;
    if (id == "thm3.2" || id.rfind("ex_", 0) == 0) return q <= 3 ? 3 : 2;
    // eta, orthogonality, thm2.2
    if (q <= 3) return 4;
    if (q <= 5) return 3;
    return 2;
}

inline int default_deg_h(const std::string& id, int deg_f) {
    if (id == "thm2.1" || id == "gcd_lemma") return 2;
    if (id == "thm2.3") return 3;
    if (id == "thm4.1b") return 3;
    if (id == "thm3.2" || id.rfind("ex_", 0) == 0) return 4;
    if (id == "thm2.2") return 4;
    return deg_f + 2;  // eta, orthogonality
}

inline std::vector<Poly> monics_up_to(const FieldCtx& ctx, int max_deg) {
    std::vector<Poly> out;
    for (int d = 0; d <= max_deg; ++d)
        for_each_monic(ctx, d, [&](const Poly& f) { out.push_back(f); });
    return out;
}

using FnPair = std::pair<ArithFn, ArithFn>;

inline std::vector<FnPair> resolve_pairs(const SweepState& st, const char* second_token,
                                         const std::vector<std::pair<const char*, const char*>>& defaults) {
    const FieldCtx& F = st.ctx;
    std::vector<FnPair> pairs;
    const std::string& b_tok = std::string(second_token) == "J" ? st.cfg.J_token : st.cfg.H_token;
    if (!st.cfg.G_token.empty() || !b_tok.empty()) {
        if (st.cfg.G_token.empty() || b_tok.empty())
            throw std::invalid_argument("verify: a pair override needs both functions");
        pairs.emplace_back(ArithFn::from_token(F, st.cfg.G_token), ArithFn::from_token(F, b_tok));
    } else {
        for (auto [g, h] : defaults)
            pairs.emplace_back(ArithFn::from_token(F, g), ArithFn::from_token(F, h));
    }
    return pairs;
}

inline std::string pair_names(const std::vector<FnPair>& pairs) {
    std::string s;
    for (auto& [g, h] : pairs) {
        if (!s.empty()) s += ",";
        s += "(" + g.name() + ";" + h.name() + ")";
    }
    return s;
}

// --- individual sweeps ------------------------------------------------------

// eta (thm3.1) and orthogonality share the per-modulus residue pass
inline void sweep_residue_theorem(SweepState& st, bool orthogonality, int max_f, int max_h) {
    const FieldCtx& F = st.ctx;
    const long p = F.p();
    for (int df = 0; df <= max_f; ++df) {
        for_each_monic(F, df, [&](const Poly& f) {
            ResidueKernel K(f);
            const long R = K.count();

            // coprime mask and the divisor class of each residue
            std::vector<char> coprime(R);
            std::vector<Rational> formula(R);  // expected value per residue class
            for (long code = 0; code < R; ++code) {
                Poly g = Poly::from_code(F, static_cast<uint64_t>(code));
                if (orthogonality) {
                    formula[code] = (code == 0) ? Rational(norm(f)) : Rational(0);
                } else {
                    Poly d = g.is_zero() ? f : gcd(g, f);
                    Rational sum(0);
                    for (const Poly& e : divisors(d))
                        sum += Rational(norm(e)) * Rational(moebius(divrem(f, e).first));
                    if (st.cfg.self_test) sum += Rational(1);
                    formula[code] = sum;
                }
                coprime[code] = g.is_zero() ? f.is_one() : gcd(g, f).is_one();
            }

            // character sums for every residue class of h
            std::vector<CycQ> direct(static_cast<size_t>(R), CycQ(p));
            std::vector<long> cnt(static_cast<size_t>(p));
            for (long rho = 0; rho < R; ++rho) {
                std::fill(cnt.begin(), cnt.end(), 0);
                for (long g = 0; g < R; ++g) {
                    if (!orthogonality && !coprime[g]) continue;
                    ++cnt[K.eps_exp(K.mulmod(rho, g))];
                }
                CycQ sum(p);
                for (long k = 0; k < p; ++k)
                    if (cnt[k]) sum += CycQ::root(p, k) * Rational(cnt[k]);
                direct[rho] = std::move(sum);
            }
            std::vector<char> ok(R);
            for (long code = 0; code < R; ++code)
                ok[code] = direct[code] == CycQ(p, formula[code]) &&
                           (orthogonality || direct[code].is_rational());

            for (int dh = 0; dh <= max_h; ++dh)
                for_each_monic(F, dh, [&](const Poly& h) {
                    ++st.report.cases;
                    long code = K.code_of(divrem(h, f).second);
                    if (!ok[code])
                        st.fail({{"h", to_string(h)}, {"f", to_string(f)}},
                                direct[code].to_string(), formula[code].to_string());
                });
        });
    }
}

inline void sweep_quadruples(SweepState& st, bool gcd_only, int max_f, int max_h) {
    const FieldCtx& F = st.ctx;
    auto pairs = gcd_only ? std::vector<FnPair>{}
                          : resolve_pairs(st, "H",
                                          {{"norm", "mu"}, {"norm", "phi"}, {"norm^2", "mu"}});
    if (!gcd_only) st.report.params.emplace_back("pairs", pair_names(pairs));
    auto hs = monics_up_to(F, max_h);
    auto fs = monics_up_to(F, max_f);
    for (const Poly& h1 : hs)
        for (const Poly& h2 : hs) {
            if (!gcd(h1, h2).is_one()) continue;
            for (const Poly& f1 : fs) {
                if (!gcd(h2, f1).is_one()) continue;
                for (const Poly& f2 : fs) {
                    if (!gcd(f1, f2).is_one() || !gcd(h1, f2).is_one()) continue;
                    auto inputs = [&] {
                        return std::vector<std::pair<std::string, std::string>>{
                            {"h1", to_string(h1)}, {"h2", to_string(h2)},
                            {"f1", to_string(f1)}, {"f2", to_string(f2)}};
                    };
                    if (gcd_only) {
                        ++st.report.cases;
                        Poly lhs = gcd(h1 * h2, f1 * f2);
                        Poly rhs = gcd(h1, f1) * gcd(h2, f2);
                        if (lhs != rhs) st.fail(inputs(), to_string(lhs), to_string(rhs));
                    } else {
                        for (auto& [G, H] : pairs) {
                            ++st.report.cases;
                            Rational lhs = s_conv(G, H, h1 * h2, f1 * f2);
                            Rational rhs = s_conv(G, H, h1, f1) * s_conv(G, H, h2, f2);
                            if (lhs != rhs) {
                                auto in = inputs();
                                in.emplace_back("pair", "(" + G.name() + ";" + H.name() + ")");
                                st.fail(std::move(in), lhs.to_string(), rhs.to_string());
                            }
                        }
                    }
                }
            }
        }
}

inline void sweep_holder(SweepState& st, int max_f, int max_h) {
    const FieldCtx& F = st.ctx;
    auto pairs = resolve_pairs(st, "J", {{"norm", "one"}, {"norm^2", "one"}});
    st.report.params.emplace_back("pairs", pair_names(pairs));
    auto hs = monics_up_to(F, max_h);
    for (auto& [G, J] : pairs) {
        ArithFn H = ArithFn::product(F, J, ArithFn::moebius(F));
        for (int df = 0; df <= max_f; ++df)
            for_each_monic(F, df, [&](const Poly& f) {
                for (const Poly& h : hs) {
                    Rational lhs;
                    try {
                        lhs = holder_eval(G, J, h, f);
                    } catch (const HypothesisError&) {
                        ++st.report.skipped;
                        continue;
                    }
                    ++st.report.cases;
                    Rational rhs = s_conv(G, H, h, f);
                    if (lhs != rhs)
                        st.fail({{"h", to_string(h)},
                                 {"f", to_string(f)},
                                 {"pair", "(" + G.name() + ";" + J.name() + ")"}},
                                lhs.to_string(), rhs.to_string());
                }
            });
    }
}

inline void sweep_f_multiplicative(SweepState& st, int max_h) {
    const FieldCtx& F = st.ctx;
    auto pairs = resolve_pairs(st, "J", {{"norm", "one"}, {"norm^2", "one"}});
    st.report.params.emplace_back("pairs", pair_names(pairs));
    auto hs = monics_up_to(F, max_h);
    for (auto& [G, J] : pairs) {
        ArithFn H = ArithFn::product(F, J, ArithFn::moebius(F));
        for (const Poly& h : hs)
            for (const Poly& hp : hs) {
                // hypotheses concern the irreducibles dividing h h'
                bool applicable = true;
                for (auto& [P, m] : factorize(h * hp).factors) {
                    Rational gp = apply(G, P);
                    if (gp.is_zero() || gp == apply(J, P)) {
                        applicable = false;
                        break;
                    }
                }
                if (!applicable) {
                    ++st.report.skipped;
                    continue;
                }
                ++st.report.cases;
                Poly g = gcd(h, hp);
                Rational lhs = convolve_F(G, H, h * hp) * convolve_F(G, H, g);
                Rational rhs = convolve_F(G, H, h) * convolve_F(G, H, hp) * apply(G, g);
                if (lhs != rhs)
                    st.fail({{"h", to_string(h)},
                             {"h'", to_string(hp)},
                             {"pair", "(" + G.name() + ";" + J.name() + ")"}},
                            lhs.to_string(), rhs.to_string());
            }
    }
}

inline void sweep_fourier(SweepState& st, int max_f, int max_h) {
    const FieldCtx& F = st.ctx;
    std::vector<FnPair> pairs = resolve_pairs(
        st, "H",
        {{"norm", "mu"}, {"norm", "phi"}, {"norm", "mu/norm"},
         {"norm", "mu2/phi"}, {"norm", "lambda_vm"}, {"norm", "liouville"}});
    st.report.params.emplace_back("pairs", pair_names(pairs));
    auto hs = monics_up_to(F, max_h);
    for (auto& [G, H] : pairs) {
        for (int df = 0; df <= max_f; ++df)
            for_each_monic(F, df, [&](const Poly& f) {
                for (const Poly& h : hs) {
                    ++st.report.cases;
                    CycQ lhs = fourier_reconstruct(G, H, h, f);
                    Rational rhs = s_conv(G, H, h, f);
                    if (lhs != CycQ(F.p(), rhs))
                        st.fail({{"h", to_string(h)},
                                 {"f", to_string(f)},
                                 {"pair", "(" + G.name() + ";" + H.name() + ")"}},
                                lhs.to_string(), rhs.to_string());
                }
                // refinement for completely multiplicative G
                for (const Poly& g : residues(f, false)) {
                    ++st.report.cases;
                    Rational a = fourier_coeff(G, H, f, g);
                    Rational b = fourier_coeff_cm(G, H, f, g);
                    if (a != b)
                        st.fail({{"f", to_string(f)},
                                 {"g", to_string(g)},
                                 {"pair", "(" + G.name() + ";" + H.name() + ")"}},
                                a.to_string(), b.to_string());
                }
            });
    }
}

// one of the six displayed identities, with its literal scaling
inline void sweep_example(SweepState& st, ExampleKind kind, int max_f, int max_h) {
    const FieldCtx& F = st.ctx;
    const long p = F.p();
    ArithFn N = ArithFn::norm(F);
    ArithFn H = example_kind_fn(kind, F);
    auto hs = monics_up_to(F, max_h);
    for (int df = 0; df <= max_f; ++df)
        for_each_monic(F, df, [&](const Poly& f) {
            // closed form vs defining coefficient formula on every residue
            std::vector<Poly> rs = residues(f, false);
            for (const Poly& g : rs) {
                ++st.report.cases;
                Rational closed = example_coeff(kind, f, g);
                Rational defined = fourier_coeff(N, H, f, g);
                if (closed != defined)
                    st.fail({{"f", to_string(f)}, {"g", to_string(g)}}, closed.to_string(),
                            defined.to_string());
            }

            // displayed identity; weights depend only on (f,g), cached per divisor
            std::vector<std::pair<uint64_t, Rational>> weight_by_gcd;
            for (const Poly& d : divisors(f))
                weight_by_gcd.emplace_back(d.code(), example_coeff(kind, f, d));
            auto weight = [&](const Poly& g) {
                uint64_t key = (g.is_zero() ? f : gcd(g, f)).code();
                for (auto& [code, w] : weight_by_gcd)
                    if (code == key) return w;
                throw std::logic_error("example sweep: gcd not a divisor");
            };
            for (const Poly& h : hs) {
                ++st.report.cases;
                std::vector<Rational> acc(static_cast<size_t>(p));
                for (const Poly& g : rs) {
                    Rational w = weight(g);
                    if (w.is_zero()) continue;
                    acc[eps_exponent(h * g, f)] += w;
                }
                CycQ lhs(p);
                for (long k = 0; k < p; ++k)
                    if (!acc[k].is_zero()) lhs += CycQ::root(p, k) * acc[k];
                if (kind == ExampleKind::mu_over_norm) lhs = lhs * Rational(norm(f));

                Rational rhs(0);
                for (const Poly& g : divisors(gcd(h, f))) {
                    Poly cof = divrem(f, g).first;
                    Rational ng(norm(g));
                    switch (kind) {
                        case ExampleKind::mu:
                            rhs += ng * Rational(moebius(cof));
                            break;
                        case ExampleKind::phi:
                            rhs += ng * Rational(totient(cof));
                            break;
                        case ExampleKind::mu_over_norm:
                            rhs += ng * ng * Rational(moebius(cof));
                            break;
                        case ExampleKind::mu2_over_phi: {
                            int mu = moebius(cof);
                            rhs += ng * Rational(BigInt(mu * mu), totient(cof));
                            break;
                        }
                        case ExampleKind::vm:
                            rhs += ng * Rational(von_mangoldt(cof));
                            break;
                        case ExampleKind::liouville:
                            rhs += ng * Rational(liouville_omega(cof).lambda);
                            break;
                    }
                }
                if (lhs != CycQ(p, rhs))
                    st.fail({{"h", to_string(h)}, {"f", to_string(f)}}, lhs.to_string(),
                            rhs.to_string());
            }
        });
}

inline void sweep_dirichlet(SweepState& st, bool first_identity, int max_deg) {
    const FieldCtx& F = st.ctx;
    auto pairs = resolve_pairs(st, "H",
                               {{"norm", "mu"}, {"norm", "phi"}, {"norm^2", "mu"},
                                {"norm", "liouville"}});
    st.report.params.emplace_back("pairs", pair_names(pairs));
    st.report.params.emplace_back("N", std::to_string(st.cfg.trunc));
    for (auto& [G, H] : pairs)
        for (int d = 0; d <= max_deg; ++d)
            for_each_monic(F, d, [&](const Poly& fh) {
                ++st.report.cases;
                SeriesCheck chk = first_identity ? identity1_check(G, H, fh, st.cfg.trunc)
                                                 : identity2_check(G, H, fh, st.cfg.trunc);
                if (!chk.equal)
                    st.fail({{first_identity ? "f" : "h", to_string(fh)},
                             {"pair", "(" + G.name() + ";" + H.name() + ")"}},
                            chk.lhs.to_string(), chk.rhs.to_string());
            });
}

}  // namespace detail

inline Report verify_theorem(const SweepConfig& cfg) {
    bool known = false;
    for (const auto& id : theorem_ids()) known = known || id == cfg.theorem;
    if (!known) throw std::invalid_argument("verify: unknown theorem id '" + cfg.theorem + "'");

    FieldCtx ctx(cfg.p, cfg.t, cfg.psi);
    detail::SweepState st(std::move(ctx), cfg);
    st.report.theorem = cfg.theorem;
    int max_f = cfg.max_deg_f >= 0 ? cfg.max_deg_f : detail::default_deg_f(cfg.theorem, st.ctx.q());
    int max_h = cfg.max_deg_h >= 0 ? cfg.max_deg_h : detail::default_deg_h(cfg.theorem, max_f);

    st.report.params.emplace_back("p", std::to_string(cfg.p));
    st.report.params.emplace_back("t", std::to_string(cfg.t));
    if (st.ctx.t() > 1) {
        std::string s;
        for (int i = static_cast<int>(st.ctx.psi().size()) - 1; i >= 0; --i) {
            int c = st.ctx.psi()[i];
            if (!c) continue;
            if (!s.empty()) s += "+";
            if (i == 0) s += std::to_string(c);
            else {
                if (c != 1) s += std::to_string(c);
                s += (i == 1) ? "X" : "X^" + std::to_string(i);
            }
        }
        st.report.params.emplace_back("psi", s);
    }
    st.report.params.emplace_back("max_deg_f", std::to_string(max_f));
    st.report.params.emplace_back("max_deg_h", std::to_string(max_h));
    if (cfg.self_test) st.report.params.emplace_back("self_test", "true");

    auto start = std::chrono::steady_clock::now();
    const std::string& id = cfg.theorem;
    if (id == "thm3.1")
        detail::sweep_residue_theorem(st, false, max_f, max_h);
    else if (id == "orthogonality")
        detail::sweep_residue_theorem(st, true, max_f, max_h);
    else if (id == "thm2.1")
        detail::sweep_quadruples(st, false, max_f, max_h);
    else if (id == "gcd_lemma")
        detail::sweep_quadruples(st, true, max_f, max_h);
    else if (id == "thm2.2")
        detail::sweep_holder(st, max_f, max_h);
    else if (id == "thm2.3")
        detail::sweep_f_multiplicative(st, max_h);
    else if (id == "thm3.2")
        detail::sweep_fourier(st, max_f, max_h);
    else if (id == "ex_mu")
        detail::sweep_example(st, ExampleKind::mu, max_f, max_h);
    else if (id == "ex_phi")
        detail::sweep_example(st, ExampleKind::phi, max_f, max_h);
    else if (id == "ex_mu_norm")
        detail::sweep_example(st, ExampleKind::mu_over_norm, max_f, max_h);
    else if (id == "ex_mu2_phi")
        detail::sweep_example(st, ExampleKind::mu2_over_phi, max_f, max_h);
    else if (id == "ex_vm")
        detail::sweep_example(st, ExampleKind::vm, max_f, max_h);
    else if (id == "ex_liouville")
        detail::sweep_example(st, ExampleKind::liouville, max_f, max_h);
    else if (id == "thm4.1a")
        detail::sweep_dirichlet(st, true, max_f);
    else if (id == "thm4.1b")
        detail::sweep_dirichlet(st, false, max_h);
    auto stop = std::chrono::steady_clock::now();
    st.report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return std::move(st.report);
}

inline std::vector<Report> verify_all(SweepConfig base) {
    std::vector<Report> reports;
    for (const auto& id : theorem_ids()) {
        base.theorem = id;
        reports.push_back(verify_theorem(base));
    }
    return reports;
}

}  // namespace ffram
