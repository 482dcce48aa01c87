// ffram.cpp
//
// Command line surface: point evaluation, character sums, Fourier
// coefficients, exhaustive theorem verification, series checks, and table
// emission. Exit codes: 0 success / all checks pass, 1 verification failures,
// 2 usage or input errors.

#include <CLI11.hpp>
#include <iostream>

#include "ffram/report.hpp"

using namespace ffram;

namespace {

struct GlobalOpts {
    long p = 0;
    int t = 1;
    std::string psi_text;
    bool json = false;

    FieldCtx make_ctx() const {
        std::vector<int> psi;
        if (!psi_text.empty()) {
            FieldCtx prime(p, 1);
            Poly pp = parse_poly(prime, psi_text);
            if (pp.is_zero()) throw std::invalid_argument("psi: zero polynomial");
            for (int i = 0; i <= pp.deg(); ++i) psi.push_back(pp.coeff(i).v);
        }
        return FieldCtx(p, t, psi);
    }
};

void print_value(const GlobalOpts& g, const std::string& what,
                 std::vector<std::pair<std::string, std::string>> inputs, const std::string& value) {
    if (g.json) {
        ordered_json j;
        j["op"] = what;
        for (auto& [k, v] : inputs) j[k] = v;
        j["value"] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial Ramanujan sums and divisor convolutions over F_q[X]"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep 'h' free for positionals

    GlobalOpts g;
    app.add_option("--p", g.p, "field characteristic (prime)")->required();
    app.add_option("--t", g.t, "extension degree, q = p^t");
    app.add_option("--psi", g.psi_text,
                   "defining polynomial over F_p for t > 1, e.g. \"X^2+X+1\" (default: "
                   "lexicographically smallest monic irreducible)");
    app.add_flag("--json", g.json, "machine-readable output");

    // eval <fn> <poly>
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an arithmetical function at a monic polynomial");
    std::string eval_fn, eval_poly;
    eval_cmd->add_option("fn", eval_fn, "norm | norm^e | mu | phi | lambda_vm | liouville | mu2/phi | mu/norm | one")
        ->required();
    eval_cmd->add_option("poly", eval_poly)->required();

    // eta <h> <f>
    auto* eta_cmd = app.add_subcommand("eta", "Ramanujan sum eta(h, f)");
    std::string eta_h, eta_f;
    eta_cmd->set_help_flag("--help");
    eta_cmd->add_option("h", eta_h)->required();
    eta_cmd->add_option("f", eta_f)->required();

    // s-conv <G> <H> <h> <f>
    auto* sconv_cmd = app.add_subcommand("s-conv", "S(h;f) = sum over g | (h,f) of G(g) H(f/g)");
    std::string sc_G, sc_H, sc_h, sc_f;
    sconv_cmd->set_help_flag("--help");
    sconv_cmd->add_option("G", sc_G)->required();
    sconv_cmd->add_option("H", sc_H)->required();
    sconv_cmd->add_option("h", sc_h)->required();
    sconv_cmd->add_option("f", sc_f)->required();

    // fourier <G> <H> <f> <g>
    auto* fourier_cmd = app.add_subcommand("fourier", "finite Fourier coefficient a_f(g)");
    std::string fc_G, fc_H, fc_f, fc_g;
    fourier_cmd->set_help_flag("--help");
    fourier_cmd->add_option("G", fc_G)->required();
    fourier_cmd->add_option("H", fc_H)->required();
    fourier_cmd->add_option("f", fc_f)->required();
    fourier_cmd->add_option("g", fc_g)->required();

    // verify <theorem>
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem sweep with counterexample report");
    std::string v_theorem;
    SweepConfig v_cfg;
    verify_cmd->add_option("theorem", v_theorem, "theorem id or 'all'")->required();
    verify_cmd->add_option("--max-deg-f", v_cfg.max_deg_f, "degree bound on moduli f");
    verify_cmd->add_option("--max-deg-h", v_cfg.max_deg_h, "degree bound on h");
    verify_cmd->add_option("--N", v_cfg.trunc, "series truncation degree (thm4.1)");
    verify_cmd->add_option("--G", v_cfg.G_token, "override the G of the swept pair");
    verify_cmd->add_option("--H", v_cfg.H_token, "override the H of the swept pair");
    verify_cmd->add_option("--J", v_cfg.J_token, "override the J of the swept pair (thm2.2, thm2.3)");
    verify_cmd->add_flag("--self-test", v_cfg.self_test,
                         "perturb eta's divisor formula by one unit; thm3.1 must then fail");

    // series <check>
    auto* series_cmd = app.add_subcommand("series", "truncated Dirichlet series in u = q^-s");
    std::string s_check, s_fn = "mu";
    int s_N = 6;
    series_cmd->add_option("check", s_check, "zeta | dh | inverse")->required();
    series_cmd->add_option("--fn", s_fn, "H for the dh series (default mu)");
    series_cmd->add_option("--N", s_N, "truncation degree");

    // table <what>
    auto* table_cmd = app.add_subcommand("table", "CSV/JSON value tables in canonical order");
    TableConfig t_cfg;
    table_cmd->add_option("what", t_cfg.what, "eta | phi | coeffs")->required();
    table_cmd->add_option("--f", t_cfg.f_text, "modulus polynomial (eta, coeffs)");
    table_cmd->add_option("--min-deg", t_cfg.min_deg, "lowest degree row");
    table_cmd->add_option("--max-deg", t_cfg.max_deg, "highest degree row");
    table_cmd->add_flag("--float", t_cfg.with_float, "append numerical columns via the complex embedding");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval_cmd) {
            FieldCtx ctx = g.make_ctx();
            ArithFn fn = ArithFn::from_token(ctx, eval_fn);
            Poly f = parse_poly(ctx, eval_poly);
            print_value(g, "eval", {{"fn", eval_fn}, {"input", to_string(f)}},
                        apply(fn, f).to_string());
        } else if (*eta_cmd) {
            FieldCtx ctx = g.make_ctx();
            Poly h = parse_poly(ctx, eta_h), f = parse_poly(ctx, eta_f);
            print_value(g, "eta", {{"h", to_string(h)}, {"f", to_string(f)}},
                        eta_formula(h, f).to_string());
        } else if (*sconv_cmd) {
            FieldCtx ctx = g.make_ctx();
            ArithFn G = ArithFn::from_token(ctx, sc_G), H = ArithFn::from_token(ctx, sc_H);
            Poly h = parse_poly(ctx, sc_h), f = parse_poly(ctx, sc_f);
            print_value(g, "s-conv",
                        {{"G", sc_G}, {"H", sc_H}, {"h", to_string(h)}, {"f", to_string(f)}},
                        s_conv(G, H, h, f).to_string());
        } else if (*fourier_cmd) {
            FieldCtx ctx = g.make_ctx();
            ArithFn G = ArithFn::from_token(ctx, fc_G), H = ArithFn::from_token(ctx, fc_H);
            Poly f = parse_poly(ctx, fc_f), gg = parse_poly(ctx, fc_g);
            print_value(g, "fourier",
                        {{"G", fc_G}, {"H", fc_H}, {"f", to_string(f)}, {"g", to_string(gg)}},
                        fourier_coeff(G, H, f, gg).to_string());
        } else if (*verify_cmd) {
            v_cfg.p = g.p;
            v_cfg.t = g.t;
            if (!g.psi_text.empty()) {
                FieldCtx prime(g.p, 1);
                Poly pp = parse_poly(prime, g.psi_text);
                for (int i = 0; i <= pp.deg(); ++i) v_cfg.psi.push_back(pp.coeff(i).v);
            }
            std::vector<Report> reports;
            if (v_theorem == "all") {
                reports = verify_all(v_cfg);
            } else {
                v_cfg.theorem = v_theorem;
                reports.push_back(verify_theorem(v_cfg));
            }
            bool all_pass = true;
            if (g.json) {
                if (reports.size() == 1) {
                    std::cout << report_to_json(reports[0]).dump(2) << "\n";
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const Report& r : reports) arr.push_back(report_to_json(r));
                    std::cout << arr.dump(2) << "\n";
                }
            } else {
                for (const Report& r : reports) std::cout << report_text(r);
            }
            for (const Report& r : reports) all_pass = all_pass && r.pass();
            return all_pass ? 0 : 1;
        } else if (*series_cmd) {
            FieldCtx ctx = g.make_ctx();
            if (s_check == "zeta") {
                std::cout << series_to_json(zeta_series(ctx, s_N)).dump() << "\n";
            } else if (s_check == "dh") {
                ArithFn H = ArithFn::from_token(ctx, s_fn);
                std::cout << series_to_json(dh_series(H, ctx, s_N)).dump() << "\n";
            } else if (s_check == "inverse") {
                TruncSeries prod = dh_series(ArithFn::moebius(ctx), ctx, s_N) * zeta_series(ctx, s_N);
                bool ok = prod == TruncSeries::constant(ctx.q(), s_N, Rational(1));
                if (g.json) {
                    ordered_json j;
                    j["check"] = "inverse";
                    j["pass"] = ok;
                    j["product"] = series_to_json(prod);
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << (ok ? "PASS" : "FAIL")
                              << " D_mu(s) * zeta_A(s) = 1 truncated at N=" << s_N << "\n";
                }
                return ok ? 0 : 1;
            } else {
                throw std::invalid_argument("series: unknown check '" + s_check + "'");
            }
        } else if (*table_cmd) {
            FieldCtx ctx = g.make_ctx();
            if (g.json)
                std::cout << emit_table_json(ctx, t_cfg).dump(2) << "\n";
            else
                std::cout << emit_table_csv(ctx, t_cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
