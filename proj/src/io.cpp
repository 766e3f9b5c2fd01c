#include "pjacobi/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "pjacobi/errors.hpp"

namespace pjacobi::io {

namespace {

std::vector<double> number_array(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_array()) throw InputError(std::string("'") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const Json& x : v) {
        if (!x.is_number()) throw InputError(std::string("'") + key + "' must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty() || output_path == "-") {
        std::cout << content;
        std::cout.flush();
    } else {
        write_atomic(output_path, content);
    }
}

Json interval_json(const Interval& i) { return Json::array({i.lo, i.hi}); }

Json dirichlet_json(const DirichletResult& r) {
    return Json{{"integral", r.integral},
                {"reference", r.reference},
                {"residual", r.residual},
                {"relative_residual", r.relative_residual},
                {"quadrature_error", r.quadrature_error},
                {"tail", r.tail}};
}

std::string utc_stamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

OperatorDocument parse_operator(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed operator document: ") + e.what());
    }
    if (!j.is_object()) throw InputError("operator document must be an object");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k != "q" && k != "a" && k != "b" && k != "label") throw InputError("unknown field '" + k + "'");
    }
    for (const char* k : {"q", "a", "b"}) {
        if (!j.contains(k)) throw InputError(std::string("missing field '") + k + "'");
    }
    if (!j.at("q").is_number_integer()) throw InputError("'q' must be an integer");
    const long long q = j.at("q").get<long long>();
    if (q < 2 || q > 100000) throw InputError("'q' must be at least 2");
    std::optional<std::string> label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw InputError("'label' must be a string");
        label = j.at("label").get<std::string>();
    }
    return {make_jacobi(static_cast<int>(q), number_array(j, "a"), number_array(j, "b")), label};
}

OperatorDocument read_operator(const std::string& path) { return parse_operator(read_file(path)); }

Json operator_json(const PeriodicJacobi& J, const std::optional<std::string>& label) {
    Json j;
    j["q"] = J.period();
    j["a"] = std::vector<double>(J.a().begin(), J.a().end());
    j["b"] = std::vector<double>(J.b().begin(), J.b().end());
    if (label) j["label"] = *label;
    return j;
}

Json bounds_json(const BoundsReport& rep) {
    const BoundsSummary& s = rep.summary;
    Json summary{{"q", s.q},
                 {"c", s.c},
                 {"A", s.A},
                 {"h_plus", s.h_plus},
                 {"Q0", s.Q0},
                 {"shift", s.shift},
                 {"trace_L", s.trace_L},
                 {"trace_L2", s.trace_L2},
                 {"input_trace_L", s.input_trace_L},
                 {"input_trace_L2", s.input_trace_L2},
                 {"b_tilde", s.b_tilde},
                 {"M", s.M},
                 {"b_plus", s.b_plus},
                 {"open_gaps", s.open_gaps}};
    Json records = Json::array();
    for (const BoundRecord& r : rep.records) {
        Json rec{{"name", r.name},
                 {"relation", relation_symbol(r.relation)},
                 {"lhs", r.lhs},
                 {"rhs", r.rhs},
                 {"margin", r.margin},
                 {"satisfied", r.satisfied},
                 {"degenerate", r.degenerate}};
        if (!r.note.empty()) rec["note"] = r.note;
        records.push_back(std::move(rec));
    }
    return Json{{"summary", std::move(summary)},
                {"degenerate", rep.degenerate},
                {"all_satisfied", rep.all_satisfied()},
                {"records", std::move(records)}};
}

Json analysis_json(const OperatorDocument& doc, const AnalyzeOptions& opts) {
    const QuasimomentumModel M = QuasimomentumModel::build(doc.op, opts.spectrum);
    const BandStructure& B = M.bands();
    const int q = M.period();

    Json out;
    out["input"] = operator_json(doc.op, doc.label);
    out["normalization_shift"] = B.shift;
    out["normalized"] = operator_json(M.op());
    out["c"] = M.c();
    out["A"] = M.capacity();
    out["edges"] = B.edges;
    Json bands = Json::array();
    for (const Interval& b : B.bands()) bands.push_back(interval_json(b));
    out["bands"] = std::move(bands);
    Json gaps = Json::array();
    for (int n = 1; n < q; ++n) {
        gaps.push_back(Json{{"index", n},
                            {"interval", interval_json(B.gap(n))},
                            {"open", M.gap_open(n)},
                            {"critical_point", B.critical_points[static_cast<std::size_t>(n - 1)]}});
    }
    out["gaps"] = std::move(gaps);
    Json zg = Json::array();
    for (const Interval& g : M.z_gaps().gaps) zg.push_back(interval_json(g));
    out["z_gaps"] = std::move(zg);
    out["h"] = std::vector<double>(M.slit_heights().begin(), M.slit_heights().end());
    out["h_plus"] = M.h_plus();
    out["Q"] = std::vector<double>(M.Q().begin(), M.Q().end());
    out["bounds"] = bounds_json(certify(doc.op, M));

    Json ver;
    Json moments = Json::array();
    for (int n = 0; n <= std::min(4, 2 * q - 1); ++n) {
        const MomentCheck m = trace_moment_check(M, n);
        moments.push_back(Json{{"n", n}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"residual", m.residual}});
    }
    ver["trace_moments"] = std::move(moments);
    if (opts.skip_dirichlet) {
        ver["dirichlet_1"] = nullptr;
        ver["dirichlet_2"] = nullptr;
    } else {
        ver["dirichlet_1"] = dirichlet_json(dirichlet_integral_1(M, opts.dirichlet));
        ver["dirichlet_2"] = dirichlet_json(dirichlet_integral_2(M, opts.dirichlet));
    }
    const VerticalCheck vc = vertical_identity_check(M);
    ver["vertical"] =
        Json{{"lhs", vc.lhs}, {"rhs", vc.rhs}, {"residual", vc.residual}, {"y_cutoff", vc.y_cutoff}};
    if (opts.skip_herglotz) {
        ver["herglotz"] = nullptr;
    } else {
        double worst = 0.0;
        int count = 0;
        for (double x : {0.3, 1.1, 1.9, 2.7}) {
            for (double y : {0.05, 0.5, 2.0}) {
                const cplx z(x, y);
                worst = std::max(worst, std::abs(herglotz_k(M, z) - M.k(z)));
                ++count;
            }
        }
        ver["herglotz"] = Json{{"points", count}, {"max_difference", worst}};
    }
    out["verification"] = std::move(ver);
    if (opts.stamp) out["stamp"] = utc_stamp();
    return out;
}

std::string sample_csv(const QuasimomentumModel& M, int n_points) {
    if (n_points < 2) throw InputError("sample needs at least 2 points");
    std::string out = "x,lambda,D,u,v\n";
    char line[160];
    for (int i = 0; i < n_points; ++i) {
        const double x = (i == n_points - 1) ? std::numbers::pi : std::numbers::pi * i / (n_points - 1);
        const BoundarySample s = M.sample(x);
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.x, s.lambda, s.D, s.u, s.v);
        out += line;
    }
    return out;
}

OracleReport oracle_check(const PeriodicJacobi& J, int n_theta, const SpectrumOptions& opts) {
    const BandStructure B = band_edges(J, opts);
    const std::vector<Interval> oracle = bloch_oracle(J, n_theta);
    OracleReport rep;
    rep.c = B.c;
    for (int m = 1; m <= J.period(); ++m) {
        const double d = interval_distance(B.band(m), oracle[static_cast<std::size_t>(m - 1)]);
        rep.distances.push_back(d);
        rep.max_distance = std::max(rep.max_distance, d);
    }
    rep.within_tolerance = rep.max_distance <= 1e-3 * rep.c;
    return rep;
}

Json oracle_json(const OracleReport& rep) {
    return Json{{"c", rep.c},
                {"band_distances", rep.distances},
                {"max_distance", rep.max_distance},
                {"within_tolerance", rep.within_tolerance}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw InputError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InputError("cannot rename onto " + path + ": " + ec.message());
    }
}

Json cmd_analyze(const std::string& input_path, const std::string& output_path, const AnalyzeOptions& opts) {
    Json doc = analysis_json(read_operator(input_path), opts);
    emit(output_path, dump(doc));
    return doc;
}

std::string cmd_sample(const std::string& input_path, const std::string& output_path, int n_points,
                       const SpectrumOptions& opts) {
    if (n_points < 2) throw InputError("sample needs at least 2 points");
    const QuasimomentumModel M = QuasimomentumModel::build(read_operator(input_path).op, opts);
    std::string csv = sample_csv(M, n_points);
    emit(output_path, csv);
    return csv;
}

Json cmd_bounds(const std::string& input_path, const std::string& output_path, const SpectrumOptions& opts) {
    Json doc = bounds_json(certify(read_operator(input_path).op, opts));
    emit(output_path, dump(doc));
    return doc;
}

Json cmd_harper(int p, int q, double theta, const std::string& output_path) {
    if (q < 2) throw InputError("harper needs q >= 2");
    std::ostringstream label;
    label.precision(17);
    label << "harper p=" << p << " q=" << q << " theta=" << theta;
    Json doc = operator_json(harper(p, q, theta), label.str());
    emit(output_path, dump(doc));
    return doc;
}

OracleReport cmd_oracle_check(const std::string& input_path, int n_theta, const SpectrumOptions& opts) {
    if (n_theta < 3) throw InputError("oracle-check needs n_theta >= 3");
    return oracle_check(read_operator(input_path).op, n_theta, opts);
}

Json cmd_trace_check(const std::string& input_path, int n, const SpectrumOptions& opts) {
    const QuasimomentumModel M = QuasimomentumModel::build(read_operator(input_path).op, opts);
    const MomentCheck m = trace_moment_check(M, n);
    return Json{{"n", m.n}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"residual", m.residual}};
}

}  // namespace pjacobi::io
