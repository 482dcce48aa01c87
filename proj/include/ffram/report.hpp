// report.hpp
//
// Rendering: verification reports as JSON and text, value types in their JSON
// wire forms, and the CSV/JSON tables. JSON reports are byte-stable across
// runs: key order is fixed and the elapsed_ms field is pinned to 0 there (the
// human-readable rendering shows the measured time).

#pragma once

#include <json.hpp>

#include "ffram/verify.hpp"

namespace ffram {

using ordered_json = nlohmann::ordered_json;

// {"p": p, "coords": [...]} in general, collapsing to the bare rational
// string when the value is rational
inline ordered_json cyc_to_json(const CycQ& v) {
    if (v.is_rational()) return v.rational_value().to_string();
    ordered_json j;
    j["p"] = v.p();
    ordered_json coords = ordered_json::array();
    for (const Rational& c : v.coords()) coords.push_back(c.to_string());
    j["coords"] = coords;
    return j;
}

inline ordered_json series_to_json(const TruncSeries& s) {
    ordered_json j;
    j["q"] = s.q();
    j["N"] = s.trunc();
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : s.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    return j;
}

inline ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["theorem"] = r.theorem;
    ordered_json params = ordered_json::object();
    for (auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["cases"] = r.cases;
    j["skipped"] = r.skipped;
    ordered_json failures = ordered_json::array();
    for (const Failure& f : r.failures) {
        ordered_json jf;
        ordered_json inputs = ordered_json::object();
        for (auto& [k, v] : f.inputs) inputs[k] = v;
        jf["inputs"] = inputs;
        jf["lhs"] = f.lhs;
        jf["rhs"] = f.rhs;
        failures.push_back(jf);
    }
    j["failures"] = failures;
    j["elapsed_ms"] = 0;  // pinned so identical configs give identical bytes
    return j;
}

inline std::string report_text(const Report& r) {
    std::string out = (r.pass() ? "[PASS] " : "[FAIL] ") + r.theorem;
    out += "  cases=" + std::to_string(r.cases);
    out += " skipped=" + std::to_string(r.skipped);
    out += " failures=" + std::to_string(r.failures.size());
    out += "  (" + std::to_string(r.elapsed_ms) + " ms)\n";
    out += "  params:";
    for (auto& [k, v] : r.params) out += " " + k + "=" + v;
    out += "\n";
    for (const Failure& f : r.failures) {
        out += "  counterexample:";
        for (auto& [k, v] : f.inputs) out += " " + k + "=" + v;
        out += "  lhs=" + f.lhs + "  rhs=" + f.rhs + "\n";
    }
    return out;
}

// --- tables -----------------------------------------------------------------

struct TableConfig {
    std::string what;    // eta | phi | coeffs
    std::string f_text;  // modulus, required for eta and coeffs
    int min_deg = 0;
    int max_deg = 2;
    bool with_float = false;
};

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline Table build_table(const FieldCtx& ctx, const TableConfig& cfg) {
    Table t;
    auto need_f = [&]() {
        if (cfg.f_text.empty())
            throw std::invalid_argument("table: '" + cfg.what + "' needs a modulus (--f)");
        Poly f = parse_poly(ctx, cfg.f_text);
        require_modulus(f, "table");
        return f;
    };
    if (cfg.what == "eta") {
        Poly f = need_f();
        t.header = {"h", "eta"};
        if (cfg.with_float) {
            t.header.push_back("approx_re");
            t.header.push_back("approx_im");
        }
        for (int d = std::max(0, cfg.min_deg); d <= cfg.max_deg; ++d)
            for_each_monic(ctx, d, [&](const Poly& h) {
                Rational v = eta_formula(h, f);
                std::vector<std::string> row{to_string(h), v.to_string()};
                if (cfg.with_float) {
                    auto a = CycQ(ctx.p(), v).approx();
                    row.push_back(fmt_double(a.real()));
                    row.push_back(fmt_double(a.imag()));
                }
                t.rows.push_back(std::move(row));
            });
    } else if (cfg.what == "phi") {
        t.header = {"f", "phi"};
        for (int d = std::max(0, cfg.min_deg); d <= cfg.max_deg; ++d)
            for_each_monic(ctx, d, [&](const Poly& f) {
                t.rows.push_back({to_string(f), totient(f).to_string()});
            });
    } else if (cfg.what == "coeffs") {
        Poly f = need_f();
        static const ExampleKind kinds[] = {ExampleKind::mu,          ExampleKind::phi,
                                            ExampleKind::mu_over_norm, ExampleKind::mu2_over_phi,
                                            ExampleKind::vm,          ExampleKind::liouville};
        t.header = {"g"};
        for (ExampleKind k : kinds) t.header.push_back(example_kind_name(k));
        for (const Poly& g : residues(f, false)) {
            std::vector<std::string> row{to_string(g)};
            for (ExampleKind k : kinds) row.push_back(example_coeff(k, f, g).to_string());
            t.rows.push_back(std::move(row));
        }
    } else {
        throw std::invalid_argument("table: unknown table '" + cfg.what + "'");
    }
    return t;
}

}  // namespace detail

inline std::string emit_table_csv(const FieldCtx& ctx, const TableConfig& cfg) {
    detail::Table t = detail::build_table(ctx, cfg);
    std::string out;
    for (size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += ",";
        out += t.header[i];
    }
    out += "\n";
    for (auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

inline ordered_json emit_table_json(const FieldCtx& ctx, const TableConfig& cfg) {
    detail::Table t = detail::build_table(ctx, cfg);
    ordered_json rows = ordered_json::array();
    for (auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = row[i];
        rows.push_back(obj);
    }
    return rows;
}

}  // namespace ffram
