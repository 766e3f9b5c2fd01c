#include "pjacobi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "pjacobi/errors.hpp"
#include "pjacobi/numeric.hpp"

namespace pjacobi {

Interval BandStructure::band(int m) const {
    return {edges[static_cast<std::size_t>(2 * (m - 1))], edges[static_cast<std::size_t>(2 * m - 1)]};
}

Interval BandStructure::gap(int m) const {
    return {edges[static_cast<std::size_t>(2 * m - 1)], edges[static_cast<std::size_t>(2 * m)]};
}

std::vector<Interval> BandStructure::bands() const {
    std::vector<Interval> out;
    for (int m = 1; m <= period(); ++m) out.push_back(band(m));
    return out;
}

std::vector<Interval> BandStructure::gaps() const {
    std::vector<Interval> out;
    for (int m = 1; m < period(); ++m) out.push_back(gap(m));
    return out;
}

double BandStructure::total_band_width() const {
    double s = 0.0;
    for (int m = 1; m <= period(); ++m) s += band(m).width();
    return s;
}

double BandStructure::total_gap_width() const {
    double s = 0.0;
    for (int m = 1; m < period(); ++m) s += gap(m).width();
    return s;
}

bool BandStructure::all_gaps_closed() const { return open_gap_count() == 0; }

int BandStructure::open_gap_count() const {
    return static_cast<int>(std::count(closed.begin(), closed.end(), false));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(double x) { return x > 0.0 ? 1 : -1; }

}  // namespace

BandStructure band_edges(const PeriodicJacobi& J, const SpectrumOptions& opts) {
    const int q = J.period();
    BandStructure out;
    out.capacity = J.capacity();
    out.critical_points = critical_points(J);
    const std::vector<double>& cp = out.critical_points;

    const Interval g = gershgorin_interval(J);
    const double pad = 1e-3 * (1.0 + g.width());
    std::vector<double> knots;  // q + 1 piece boundaries
    knots.push_back(g.lo - pad);
    knots.insert(knots.end(), cp.begin(), cp.end());
    knots.push_back(g.hi + pad);

    std::vector<double> dvals(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) dvals[i] = discriminant_value(J, knots[i]);

    // closed at the rounding level: D(crit) = +-2 up to the error bound of D
    out.closed.assign(static_cast<std::size_t>(q - 1), false);
    for (int m = 1; m < q; ++m) {
        const double x = knots[static_cast<std::size_t>(m)];
        const double excess = std::abs(dvals[static_cast<std::size_t>(m)]) - 2.0;
        if (excess <= 8.0 * q * kEps * discriminant_scale(J, x)) out.closed[static_cast<std::size_t>(m - 1)] = true;
    }

    auto D = [&J](double x) { return discriminant_value(J, x); };
    auto solve = [&](int piece, double target) {
        const double lo = knots[static_cast<std::size_t>(piece - 1)];
        const double hi = knots[static_cast<std::size_t>(piece)];
        const double flo = dvals[static_cast<std::size_t>(piece - 1)] - target;
        const double fhi = dvals[static_cast<std::size_t>(piece)] - target;
        if ((flo > 0.0) == (fhi > 0.0) && flo != 0.0 && fhi != 0.0) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "no bracket for D = " << target << " on piece " << piece << " [" << lo << ", " << hi << "]";
            throw NumericalError(msg.str());
        }
        return numeric::bisect([&](double x) { return D(x) - target; }, lo, hi, flo, fhi, opts.edge_tol);
    };

    out.edges.resize(static_cast<std::size_t>(2 * q));
    for (int m = 1; m <= q; ++m) {
        // left edge lambda_{m-1}^+
        double left;
        if (m > 1 && out.closed[static_cast<std::size_t>(m - 2)]) {
            left = cp[static_cast<std::size_t>(m - 2)];
        } else {
            left = solve(m, 2.0 * sign_of(dvals[static_cast<std::size_t>(m - 1)]));
        }
        // right edge lambda_m^-
        double right;
        if (m < q && out.closed[static_cast<std::size_t>(m - 1)]) {
            right = cp[static_cast<std::size_t>(m - 1)];
        } else {
            right = solve(m, 2.0 * sign_of(dvals[static_cast<std::size_t>(m)]));
        }
        out.edges[static_cast<std::size_t>(2 * (m - 1))] = left;
        out.edges[static_cast<std::size_t>(2 * m - 1)] = right;
    }

    out.c = 0.5 * (out.edges.back() - out.edges.front());
    for (int m = 1; m < q; ++m) {
        auto closed = out.closed[static_cast<std::size_t>(m - 1)];
        if (!closed && out.gap(m).width() < opts.closed_gap_tol * out.c) {
            closed = true;
            out.edges[static_cast<std::size_t>(2 * m - 1)] = cp[static_cast<std::size_t>(m - 1)];
            out.edges[static_cast<std::size_t>(2 * m)] = cp[static_cast<std::size_t>(m - 1)];
        }
    }
    for (std::size_t i = 1; i < out.edges.size(); ++i) {
        if (out.edges[i] < out.edges[i - 1]) throw NumericalError("band edges are not ordered");
    }
    return out;
}

NormalizedOperator normalize(const PeriodicJacobi& J, const SpectrumOptions& opts) {
    const BandStructure raw = band_edges(J, opts);
    const double s = -0.5 * (raw.edges.back() + raw.edges.front());
    PeriodicJacobi shifted = shift_diagonal(J, s);
    BandStructure bands = band_edges(shifted, opts);
    bands.shift = s;
    return {std::move(shifted), std::move(bands)};
}

double strip_coordinate(double lambda, double c) {
    const double t = std::clamp(-lambda / c, -1.0, 1.0);
    return std::acos(t);
}

double ZGapSet::total_width() const {
    double s = 0.0;
    for (double w : widths) s += w;
    return s;
}

double ZGapSet::total_width_squared() const {
    double s = 0.0;
    for (double w : widths) s += w * w;
    return s;
}

ZGapSet z_coordinates(const BandStructure& B) {
    ZGapSet out;
    for (int n = 1; n < B.period(); ++n) {
        const Interval g = B.gap(n);
        Interval z{strip_coordinate(g.lo, B.c), strip_coordinate(g.hi, B.c)};
        if (B.closed[static_cast<std::size_t>(n - 1)]) z.hi = z.lo;
        out.gaps.push_back(z);
        out.widths.push_back(z.width());
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const FloquetMatrix& L) {
    const int q = L.dim();
    const int n = 2 * q;
    std::vector<double> s(static_cast<std::size_t>(n) * n);
    auto at = [&s, n](int i, int j) -> double& { return s[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            const cplx z = L(i, j);
            at(i, j) = z.real();
            at(i + q, j + q) = z.real();
            at(i, j + q) = -z.imag();
            at(i + q, j) = z.imag();
        }
    }
    double norm = 0.0;
    for (double x : s) norm += x * x;
    norm = std::sqrt(norm);
    const double target = 1e-12 * std::max(norm, 1e-300);

    auto off_norm = [&]() {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) acc += at(i, j) * at(i, j);
        return std::sqrt(acc);
    };

    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_norm() < target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                const double apr = at(p, r);
                if (apr == 0.0) continue;
                const double theta = (at(r, r) - at(p, p)) / (2.0 * apr);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akr = at(k, r);
                    at(k, p) = cs * akp - sn * akr;
                    at(k, r) = sn * akp + cs * akr;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double ark = at(r, k);
                    at(p, k) = cs * apk - sn * ark;
                    at(r, k) = sn * apk + cs * ark;
                }
            }
        }
    }
    if (!converged && off_norm() >= target) {
        throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(diag.begin(), diag.end());
    // the embedding doubles every eigenvalue
    std::vector<double> out(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) out[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(2 * i)];
    return out;
}

std::vector<Interval> bloch_oracle(const PeriodicJacobi& J, int n_theta) {
    if (n_theta < 3) throw InputError("bloch_oracle needs n_theta >= 3");
    const int q = J.period();
    std::vector<Interval> bands(static_cast<std::size_t>(q),
                                Interval{std::numeric_limits<double>::infinity(),
                                         -std::numeric_limits<double>::infinity()});
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / (n_theta - 1);
        const std::vector<double> ev = hermitian_eigenvalues(build_bloch_matrix(J, theta));
        for (int m = 0; m < q; ++m) {
            auto& band = bands[static_cast<std::size_t>(m)];
            band.lo = std::min(band.lo, ev[static_cast<std::size_t>(m)]);
            band.hi = std::max(band.hi, ev[static_cast<std::size_t>(m)]);
        }
    }
    return bands;
}

double interval_distance(const Interval& x, const Interval& y) {
    return std::max(std::abs(x.lo - y.lo), std::abs(x.hi - y.hi));
}

}  // namespace pjacobi
