#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdsim/conservation.hpp"
#include "rdsim/grid.hpp"
#include "rdsim/residual.hpp"
#include "rdsim/solver.hpp"
#include "rdsim/system.hpp"

namespace rdsim {

using json = nlohmann::ordered_json;

// Shortest round-trip decimal representation; keeps CSV output byte-stable.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary); // binary: LF endings everywhere
    if (!out) throw Error("cannot open output file: " + path);
    out << body;
    if (!out) throw Error("write failed: " + path);
}

// NumericField CSV ("x,W", one node per line).
inline void write_field_csv(const std::string& path, const NumericField& field) {
    std::string body = "x,W\n";
    for (int i = 0; i < field.grid.n_nodes(); ++i) {
        body += format_double(field.grid.x(i));
        body += ',';
        body += format_double(field.values[i]);
        body += '\n';
    }
    write_text_file(path, body);
}

// Figure CSV: one x column plus one column per time.
inline void write_profile_csv(const std::string& path, const std::vector<double>& xs,
                              const std::vector<double>& times,
                              const std::function<double(double, double)>& value) {
    std::string body = "x";
    for (double t : times) body += ",t=" + format_double(t);
    body += '\n';
    for (double x : xs) {
        body += format_double(x);
        for (double t : times) {
            body += ',';
            body += format_double(value(x, t));
        }
        body += '\n';
    }
    write_text_file(path, body);
}

inline json to_json(const ResidualReport& r) {
    json j;
    j["max_abs"] = r.max_abs;
    j["l2"] = r.l2;
    j["n_samples"] = r.n_samples;
    j["method"] = r.method;
    j["skipped"] = r.skipped;
    return j;
}

inline json to_json(const ConservationReport& r) {
    json j;
    j["times"] = r.times;
    j["N_values"] = r.N_values;
    j["fitted_exponent"] = r.fitted_exponent;
    j["expected_exponent"] = r.expected_exponent;
    j["identity_lhs"] = r.identity_lhs;
    j["identity_rhs"] = r.identity_rhs;
    j["defect"] = r.defect;
    return j;
}

inline json to_json(const ComparisonReport& r) {
    json j;
    j["l2_relative"] = r.l2_relative;
    j["max_abs_error"] = r.max_abs_error;
    j["t_end"] = r.t_end;
    j["mass_numeric"] = r.mass_numeric;
    j["mass_analytic"] = r.mass_analytic;
    return j;
}

inline json to_json(const ConvergenceReport& r) {
    json j;
    json lv = json::array();
    for (const auto& l : r.levels)
        lv.push_back(json{{"dx", l.dx}, {"dt", l.dt}, {"l2_error", l.l2_error}});
    j["levels"] = lv;
    j["order_space"] = r.order_space;
    j["order_time"] = r.order_time;
    j["reliable"] = r.reliable;
    j["note"] = r.note;
    return j;
}

inline json to_json(const SystemDescriptor& d) {
    json j;
    j["name"] = d.name;
    j["family"] = d.family;
    j["alpha"] = d.alpha;
    j["mu"] = d.mu;
    j["alpha_note"] = d.alpha_note;
    j["conserving"] = d.conserving;
    j["solver_eligible"] = d.solver_eligible;
    json params = json::array();
    for (const auto& p : d.params)
        params.push_back(json{{"key", p.key}, {"default", p.default_value}, {"doc", p.doc}});
    j["params"] = params;
    j["constraint_note"] = d.constraint_note;
    j["warnings"] = d.warnings;
    return j;
}

// Record of one CLI run: every listed output exists on successful exit.
struct RunManifest {
    std::string command;
    std::string system;
    std::map<std::string, double> parameters;
    json config = json::object();
    std::vector<std::string> outputs;
    double duration_seconds = 0.0;
    std::map<std::string, std::string> verdicts; // check name -> "pass" / "fail" / "skipped"
};

inline json to_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["system"] = m.system;
    j["parameters"] = m.parameters;
    j["config"] = m.config;
    j["outputs"] = m.outputs;
    j["duration_seconds"] = m.duration_seconds;
    j["verdicts"] = m.verdicts;
    return j;
}

} // namespace rdsim
