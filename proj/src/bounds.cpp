#include "pjacobi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pjacobi/errors.hpp"
#include "pjacobi/numeric.hpp"

namespace pjacobi {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::Less: return "<";
        case Relation::Greater: return ">";
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
    }
    return "?";
}

BoundRecord make_record(std::string name, double lhs, Relation rel, double rhs, bool degenerate) {
    BoundRecord r;
    r.name = std::move(name);
    r.relation = rel;
    r.lhs = lhs;
    r.rhs = rhs;
    r.degenerate = degenerate;
    const bool greater = rel == Relation::Greater || rel == Relation::GreaterEqual;
    r.margin = greater ? lhs - rhs : rhs - lhs;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.satisfied = r.margin > -1e-10 * scale;
    return r;
}

bool BoundsReport::all_satisfied() const {
    return std::all_of(records.begin(), records.end(),
                       [](const BoundRecord& r) { return r.degenerate || r.satisfied; });
}

const BoundRecord& BoundsReport::at(const std::string& name) const {
    for (const auto& r : records)
        if (r.name == name) return r;
    throw InputError("no bound record named " + name);
}

BoundsReport certify(const PeriodicJacobi& J, const SpectrumOptions& opts) {
    return certify(J, QuasimomentumModel::build(J, opts));
}

BoundsReport certify(const PeriodicJacobi& input, const QuasimomentumModel& M) {
    const PeriodicJacobi& H = M.op();
    const BandStructure& B = M.bands();
    const int q = M.period();
    const double c = M.c();
    const double A = M.capacity();
    const double Q0 = M.Q()[0];
    const double hp = M.h_plus();
    const bool degenerate = M.all_gaps_closed();
    const auto tr = M.traces();

    BoundsReport rep;
    rep.degenerate = degenerate;
    BoundsSummary& s = rep.summary;
    s.q = q;
    s.c = c;
    s.A = A;
    s.h_plus = hp;
    s.Q0 = Q0;
    s.shift = B.shift;
    s.trace_L = tr[1];
    s.trace_L2 = tr[2];
    const std::vector<double> tr_in = trace_powers(build_L(input), 2);
    s.input_trace_L = tr_in[1];
    s.input_trace_L2 = tr_in[2];
    s.open_gaps = B.open_gap_count();

    const auto b = H.b();
    const double bmax = *std::max_element(b.begin(), b.end());
    const double bmin = *std::min_element(b.begin(), b.end());
    s.b_tilde = bmax - bmin;
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= q; ++j) {
        hi = std::max(hi, H.b_at(j) + H.a_at(j) + H.a_at(j - 1));
        lo = std::min(lo, H.b_at(j) - H.a_at(j) - H.a_at(j - 1));
    }
    s.M = std::max(hi - bmin, bmax - lo);
    s.b_plus = std::max(1.0, q * hp / kPi);

    double sum_g = 0.0;
    double sum_g2 = 0.0;
    double sum_cos2 = 0.0;
    double sum_hg = 0.0;
    double sum_h2 = 0.0;
    for (int n = 1; n < q; ++n) {
        const Interval& g = M.z_gaps().gaps[static_cast<std::size_t>(n - 1)];
        const double w = g.width();
        const double h = M.slit_heights()[static_cast<std::size_t>(n - 1)];
        sum_g += w;
        sum_g2 += w * w;
        sum_cos2 += w / 2.0 + (std::sin(2.0 * g.hi) - std::sin(2.0 * g.lo)) / 4.0;
        sum_hg += h * w;
        sum_h2 += h * h;
    }

    auto& R = rep.records;
    auto add = [&](std::string name, double lhs, Relation rel, double rhs) {
        R.push_back(make_record(std::move(name), lhs, rel, rhs, degenerate));
    };
    auto skip = [&](std::string name, Relation rel) {
        BoundRecord r;
        r.name = std::move(name);
        r.relation = rel;
        r.lhs = r.rhs = r.margin = kNaN;
        r.degenerate = true;
        r.note = "degenerate: h_+ = 0";
        R.push_back(std::move(r));
    };

    add("c_gt_2A", c, Relation::Greater, 2.0 * A);
    add("eq_c2", c * c * (0.5 + Q0), Relation::Greater, tr[2] / q);
    for (int j = 1; j <= std::min(3, q - 1); ++j) {
        add("simple_est_" + std::to_string(j), std::pow(c, 2 * j), Relation::Greater,
            tr[static_cast<std::size_t>(2 * j)] / q);
    }
    if (degenerate) {
        skip("g1", Relation::Greater);
        skip("g1_chain", Relation::Greater);
        skip("g1p", Relation::Greater);
    } else {
        add("g1", sum_g, Relation::Greater, kPi * Q0 / hp);
        add("g1_chain", kPi * Q0 / hp, Relation::Greater, kPi * Q0 / std::log(2.0 * c / A));
        add("g1p", sum_cos2, Relation::Greater, kPi / hp * (Q0 / 2.0 + 0.25 - tr[2] / (2.0 * q * c * c)));
    }
    add("g2_lower", Q0 / s.b_plus, Relation::Less, sum_g2);
    add("g2_upper", sum_g2, Relation::Less, 8.0 * Q0);
    add("eL_bands_M", B.total_band_width(), Relation::Greater, 4.0 * std::pow(A, q) / std::pow(s.M, q - 1));
    add("eL_bands_2c", B.total_band_width(), Relation::Greater, 4.0 * std::pow(A, q) / std::pow(2.0 * c, q - 1));
    add("eL_gaps", B.total_gap_width(), Relation::GreaterEqual, s.b_tilde);
    if (degenerate) {
        skip("lemma51_lower", Relation::Less);
        skip("lemma51_upper", Relation::Less);
    } else {
        add("lemma51_lower", sum_hg / (2.0 * kPi), Relation::Less, Q0);
        add("lemma51_upper", Q0, Relation::Less, sum_hg / kPi);
    }
    const double mid = std::log(c / A + std::abs(H.diagonal_sum()) / (A * q));
    add("lemma52_positive", hp, Relation::Greater, 0.0);
    add("lemma52_upper", hp, Relation::Less, mid);
    add("lemma52_chain", mid, Relation::Less, std::log(2.0 * c / A));
    add("lemma53", sum_h2, Relation::LessEqual, kPi * kPi * s.b_plus * Q0);
    return rep;
}

double harper_lower_bound() {
    auto f = [](double x) { return x * x * (0.5 + std::log(x / 2.0)) - 4.0; };
    return numeric::bisect(f, 2.0, 4.0, 0.0);
}

HarperBoundResult harper_bound_demo(int p, int q, double theta) {
    if (q < 3) throw InputError("harper_bound_demo needs q >= 3");
    if ((2 * p) % q == 0) throw InputError("harper_bound_demo needs q not dividing 2p");
    const PeriodicJacobi J = harper(p, q, theta);
    HarperBoundResult out;
    out.p = p;
    out.q = q;
    out.theta = theta;
    out.c = normalize(J).bands.c;
    out.lower_bound = harper_lower_bound();
    if (!(out.lower_bound > 2.41 && out.lower_bound < 2.42)) {
        throw NumericalError("Harper lower bound outside (2.41, 2.42)");
    }
    out.trace_L2 = trace_powers(build_L(J), 2)[2];
    out.holds = out.c > out.lower_bound;
    return out;
}

}  // namespace pjacobi
