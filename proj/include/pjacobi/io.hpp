#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pjacobi/bounds.hpp"
#include "pjacobi/jacobi.hpp"
#include "pjacobi/quasimomentum.hpp"

namespace pjacobi::io {

using Json = nlohmann::ordered_json;

struct OperatorDocument {
    PeriodicJacobi op;
    std::optional<std::string> label;
};

/// Parses {"q": int, "a": [...], "b": [...], "label"?: string}. Unknown keys,
/// wrong types and invalid coefficients raise InputError.
OperatorDocument parse_operator(const std::string& text);
OperatorDocument read_operator(const std::string& path);
Json operator_json(const PeriodicJacobi& J, const std::optional<std::string>& label = std::nullopt);

struct AnalyzeOptions {
    SpectrumOptions spectrum;
    DirichletOptions dirichlet;
    bool skip_dirichlet = false;
    bool skip_herglotz = false;
    bool stamp = false;
};

Json bounds_json(const BoundsReport& rep);
Json analysis_json(const OperatorDocument& doc, const AnalyzeOptions& opts = {});

/// CSV with header x,lambda,D,u,v on a uniform grid of n_points over [0, pi].
std::string sample_csv(const QuasimomentumModel& M, int n_points);

struct OracleReport {
    std::vector<double> distances;  ///< per band
    double max_distance = 0.0;
    double c = 0.0;
    bool within_tolerance = false;  ///< max_distance <= 1e-3 c
};

OracleReport oracle_check(const PeriodicJacobi& J, int n_theta, const SpectrumOptions& opts = {});
Json oracle_json(const OracleReport& rep);

/// Pretty-printed with a trailing newline; identical input gives identical bytes.
std::string dump(const Json& j);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

// Subcommand bodies. An empty output path means stdout.
Json cmd_analyze(const std::string& input_path, const std::string& output_path, const AnalyzeOptions& opts);
std::string cmd_sample(const std::string& input_path, const std::string& output_path, int n_points,
                       const SpectrumOptions& opts = {});
Json cmd_bounds(const std::string& input_path, const std::string& output_path, const SpectrumOptions& opts = {});
Json cmd_harper(int p, int q, double theta, const std::string& output_path);
OracleReport cmd_oracle_check(const std::string& input_path, int n_theta, const SpectrumOptions& opts = {});
Json cmd_trace_check(const std::string& input_path, int n, const SpectrumOptions& opts = {});

}  // namespace pjacobi::io
