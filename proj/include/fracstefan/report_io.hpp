#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fracstefan/classical.hpp"
#include "fracstefan/errors.hpp"
#include "fracstefan/field.hpp"
#include "fracstefan/inverse.hpp"
#include "fracstefan/problem.hpp"

namespace fracstefan {

/// Shortest representation that round-trips the double (17 significant digits
/// at most); keeps report bytes reproducible across runs.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct ParsedConfig {
    ProblemData data;
    std::optional<int> case_id;
};

/// Strict schema: exactly the documented keys, numbers where numbers are
/// expected. Unknown keys are errors; a typo in a coefficient name must not
/// silently change the physics.
inline ParsedConfig parse_problem_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("config root must be a JSON object");

    auto number = [&](const nlohmann::json& v, const char* key) -> double {
        if (!v.is_number())
            throw SchemaError(std::string("key '") + key + "' must be a number");
        return v.get<double>();
    };

    ParsedConfig cfg;
    bool saw_alpha = false, saw_Tm = false, saw_T0 = false, saw_q0 = false,
         saw_sigma = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "alpha") {
            cfg.data.alpha = number(value, "alpha");
            saw_alpha = true;
        } else if (key == "mu") {
            cfg.data.mu = number(value, "mu");
        } else if (key == "nu") {
            cfg.data.nu = number(value, "nu");
        } else if (key == "T_m") {
            cfg.data.T_m = number(value, "T_m");
            saw_Tm = true;
        } else if (key == "T_0") {
            cfg.data.T_0 = number(value, "T_0");
            saw_T0 = true;
        } else if (key == "q_0") {
            cfg.data.q_0 = number(value, "q_0");
            saw_q0 = true;
        } else if (key == "sigma") {
            cfg.data.sigma = number(value, "sigma");
            saw_sigma = true;
        } else if (key == "known") {
            if (!value.is_object()) throw SchemaError("key 'known' must be an object");
            for (const auto& [name, coeff] : value.items()) {
                if (name != "k" && name != "rho" && name != "c" && name != "l")
                    throw SchemaError("unknown coefficient '" + name +
                                      "' in 'known' (expect k, rho, c, l)");
                cfg.data.known.by_name(name) = number(coeff, name.c_str());
            }
        } else if (key == "case") {
            if (!value.is_number_integer())
                throw SchemaError("key 'case' must be an integer in 1..6");
            const int id = value.get<int>();
            if (id < 1 || id > 6) throw SchemaError("key 'case' must be in 1..6");
            cfg.case_id = id;
        } else {
            throw SchemaError("unknown top-level key '" + key + "'");
        }
    }
    for (auto [seen, name] : {std::pair{saw_alpha, "alpha"}, {saw_Tm, "T_m"},
                              {saw_T0, "T_0"}, {saw_q0, "q_0"}, {saw_sigma, "sigma"}})
        if (!seen) throw SchemaError(std::string("missing required key '") + name + "'");
    try {
        cfg.data.validate();
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
    return cfg;
}

namespace detail {

inline void json_kv(std::string& out, const char* key, const std::string& value,
                    bool last = false) {
    out += "  \"";
    out += key;
    out += "\": ";
    out += value;
    out += last ? "\n" : ",\n";
}

} // namespace detail

/// Report of one inverse solve; key order and float formatting are fixed.
inline std::string solve_report_json(const SolveReport& report) {
    std::string out = "{\n";
    detail::json_kv(out, "case", std::to_string(report.case_id.id()));
    detail::json_kv(out, "xi", format_double(report.xi));
    detail::json_kv(out, "k", format_double(report.coefficients.k));
    detail::json_kv(out, "rho", format_double(report.coefficients.rho));
    detail::json_kv(out, "c", format_double(report.coefficients.c));
    detail::json_kv(out, "l", format_double(report.coefficients.l));
    detail::json_kv(out, "residual_eq1", format_double(report.residual_eq1));
    detail::json_kv(out, "residual_eq2", format_double(report.residual_eq2), true);
    out += "}\n";
    return out;
}

inline std::string convergence_header(CaseId cs) {
    const auto names = cs.unknown_names();
    return std::string("alpha,xi,xi_star,xi_abs_dev,") + names[0] + "_rel_dev," +
           names[1] + "_rel_dev";
}

inline std::string convergence_row_csv(const ConvergenceRow& row) {
    return format_double(row.alpha) + "," + format_double(row.xi) + "," +
           format_double(row.xi_star) + "," + format_double(row.xi_abs_dev) + "," +
           format_double(row.coeff_rel_dev[0]) + "," + format_double(row.coeff_rel_dev[1]);
}

inline std::string convergence_table_csv(CaseId cs,
                                         const std::vector<ConvergenceRow>& rows) {
    std::string out = convergence_header(cs) + "\n";
    for (const auto& row : rows) out += convergence_row_csv(row) + "\n";
    return out;
}

inline std::string convergence_table_json(CaseId cs,
                                          const std::vector<ConvergenceRow>& rows) {
    const auto names = cs.unknown_names();
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        out += "  {\"alpha\": " + format_double(row.alpha) +
               ", \"xi\": " + format_double(row.xi) +
               ", \"xi_star\": " + format_double(row.xi_star) +
               ", \"xi_abs_dev\": " + format_double(row.xi_abs_dev) + ", \"" + names[0] +
               "_rel_dev\": " + format_double(row.coeff_rel_dev[0]) + ", \"" + names[1] +
               "_rel_dev\": " + format_double(row.coeff_rel_dev[1]) + "}";
        out += (i + 1 < rows.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

inline std::string field_csv(const std::vector<FieldSample>& samples) {
    std::string out = "x,t,T\n";
    for (const auto& s : samples)
        out += format_double(s.x) + "," + format_double(s.t) + "," + format_double(s.T) +
               "\n";
    return out;
}

inline std::string field_json(const std::vector<FieldSample>& samples) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out += "  {\"x\": " + format_double(samples[i].x) +
               ", \"t\": " + format_double(samples[i].t) +
               ", \"T\": " + format_double(samples[i].T) + "}";
        out += (i + 1 < samples.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

inline std::string roundtrip_json(const RoundTripResult& result, double tolerance) {
    std::string out = "{\n";
    detail::json_kv(out, "alpha", format_double(result.alpha));
    detail::json_kv(out, "tolerance", format_double(tolerance));
    detail::json_kv(out, "max_rel_coeff_err", format_double(result.max_rel_err));
    detail::json_kv(out, "pass", result.max_rel_err <= tolerance ? "true" : "false");
    out += "  \"cases\": [\n";
    for (std::size_t i = 0; i < result.cases.size(); ++i) {
        const auto& c = result.cases[i];
        out += "    {\"case\": " + std::to_string(c.case_id) +
               ", \"xi\": " + format_double(c.xi) +
               ", \"max_rel_coeff_err\": " + format_double(c.max_rel_coeff_err) +
               ", \"residual_eq1\": " + format_double(c.residual_eq1) +
               ", \"residual_eq2\": " + format_double(c.residual_eq2) +
               ", \"pass\": " + (c.max_rel_coeff_err <= tolerance ? "true" : "false") +
               "}";
        out += (i + 1 < result.cases.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string classical_solution_json(const ClassicalSolution& sol, CaseId cs,
                                           const std::vector<ConvergenceRow>& deviations) {
    const auto names = cs.unknown_names();
    std::string out = "{\n";
    detail::json_kv(out, "case", std::to_string(sol.case_id.id()));
    detail::json_kv(out, "sigma_star", format_double(sol.sigma_star));
    detail::json_kv(out, "xi_star", format_double(sol.xi_star));
    detail::json_kv(out, "k", format_double(sol.coefficients.k));
    detail::json_kv(out, "rho", format_double(sol.coefficients.rho));
    detail::json_kv(out, "c", format_double(sol.coefficients.c));
    detail::json_kv(out, "l", format_double(sol.coefficients.l));
    out += "  \"deviations\": [\n";
    for (std::size_t i = 0; i < deviations.size(); ++i) {
        const auto& row = deviations[i];
        out += "    {\"alpha\": " + format_double(row.alpha) +
               ", \"xi\": " + format_double(row.xi) +
               ", \"xi_abs_dev\": " + format_double(row.xi_abs_dev) + ", \"" + names[0] +
               "_rel_dev\": " + format_double(row.coeff_rel_dev[0]) + ", \"" + names[1] +
               "_rel_dev\": " + format_double(row.coeff_rel_dev[1]) + "}";
        out += (i + 1 < deviations.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

} // namespace fracstefan
