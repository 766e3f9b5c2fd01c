#include "pjacobi/quasimomentum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pjacobi/errors.hpp"
#include "pjacobi/numeric.hpp"

namespace pjacobi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdgeExclusion = 1e-12;
constexpr int kMaxTrackDepth = 60;

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// cot(w) without overflow for large |Im w|.
cplx cot(cplx w) {
    const cplx I(0.0, 1.0);
    if (w.imag() >= 0.0) {
        const cplx e = std::exp(2.0 * I * w);
        return I * (e + 1.0) / (e - 1.0);
    }
    const cplx e = std::exp(-2.0 * I * w);
    return I * (1.0 + e) / (1.0 - e);
}

// int_a^b f(x) dx with x = mid - (w/2) cos t, which removes square-root edge behaviour.
double integrate_cosine_sub(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (!(b > a)) return 0.0;
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    auto g = [&](double t) { return f(mid - hw * std::cos(t)) * hw * std::sin(t); };
    return numeric::integrate_adaptive(g, 0.0, kPi, abs_tol, 0.0, 4000).value;
}

}  // namespace

QuasimomentumModel QuasimomentumModel::build(const PeriodicJacobi& J, const SpectrumOptions& opts) {
    NormalizedOperator N = normalize(J, opts);
    DiscriminantRep rep = discriminant_poly(N.op);
    QuasimomentumModel M(std::move(N.op), std::move(N.bands), std::move(rep));
    const int q = M.period();
    M.zgaps_ = z_coordinates(M.bands_);
    M.edge_snap_ = 4.0 * std::max(opts.edge_tol, std::numeric_limits<double>::epsilon()) * M.c();
    M.traces_ = trace_powers(build_L(M.op_), 2 * q - 1);
    M.heights_.assign(static_cast<std::size_t>(q - 1), 0.0);
    for (int n = 1; n < q; ++n) {
        if (!M.gap_open(n)) continue;
        const double Dc = discriminant_value(M.op_, M.bands_.critical_points[static_cast<std::size_t>(n - 1)]);
        M.heights_[static_cast<std::size_t>(n - 1)] = std::acosh(std::max(1.0, std::abs(Dc) / 2.0)) / q;
    }
    M.h_plus_ = *std::max_element(M.heights_.begin(), M.heights_.end());
    M.Q_ = q_coefficients(M.op_, M.bands_);
    return M;
}

double QuasimomentumModel::lambda_of_x(double x) const { return -c() * std::cos(x); }

BoundarySample QuasimomentumModel::sample(double x) const {
    if (!(x >= 0.0 && x <= kPi)) throw InputError("x must lie in [0, pi]");
    const int q = period();
    BoundarySample s;
    s.x = x;
    s.lambda = lambda_of_x(x);
    s.D = discriminant_value(op_, s.lambda);

    int below = 0;  // gaps starting strictly left of x
    for (int n = 1; n < q; ++n) {
        const Interval& g = zgaps_.gaps[static_cast<std::size_t>(n - 1)];
        if (gap_open(n) && x > g.lo && x < g.hi) {
            s.gap = n;
            s.u = n * kPi / q;
            s.v = std::acosh(std::max(1.0, std::abs(s.D) / 2.0)) / q;
            return s;
        }
        if (g.lo < x) ++below;
    }
    const int n = below + 1;
    s.band = n;
    s.v = 0.0;
    // acos turns the rounding error of D at an edge into a sqrt(eps) error in u
    const Interval band = bands_.band(n);
    if (std::abs(s.lambda - band.lo) <= edge_snap_) {
        s.u = (n - 1) * kPi / q;
    } else if (std::abs(s.lambda - band.hi) <= edge_snap_) {
        s.u = n * kPi / q;
    } else {
        const double eps = parity(q - n + 1);
        s.u = ((n - 1) * kPi + std::acos(std::clamp(eps * s.D / 2.0, -1.0, 1.0))) / q;
    }
    return s;
}

double QuasimomentumModel::v_of_x(double x) const { return sample(x).v; }
double QuasimomentumModel::u_of_x(double x) const { return sample(x).u; }

QuasimomentumModel::Branch QuasimomentumModel::branch(cplx z, bool with_slope) const {
    const int q = period();
    Branch br;
    br.lambda = -c() * std::cos(z);
    cplx D;
    if (with_slope) {
        const ValueSlope<cplx> vs = discriminant_with_slope(op_, br.lambda);
        D = vs.value;
        br.dD = vs.slope;
    } else {
        D = discriminant_value(op_, br.lambda);
    }
    // W + 1/W = (-1)^q D; take the root inside the unit disc as 1 / (larger root)
    const cplx w = parity(q) * D / 2.0;
    const cplx s = std::abs(w) > 1.0 ? w * std::sqrt(1.0 - 1.0 / (w * w)) : std::sqrt(w * w - 1.0);
    const cplx r1 = w + s;
    const cplx r2 = w - s;
    br.W = 1.0 / (std::abs(r1) >= std::abs(r2) ? r1 : r2);
    return br;
}

void QuasimomentumModel::check_edge(cplx z) const {
    for (int n = 1; n < period(); ++n) {
        if (!gap_open(n)) continue;
        const Interval& g = zgaps_.gaps[static_cast<std::size_t>(n - 1)];
        if (std::abs(z - g.lo) < kEdgeExclusion || std::abs(z - g.hi) < kEdgeExclusion) {
            throw InputError("edge singularity: z is within 1e-12 of a gap endpoint");
        }
    }
}

// Re(q k) grows monotonically along horizontal lines, so each accepted step must
// advance the phase by an amount in [0, pi/2] in the direction of travel. Where
// |W| is 1 to rounding (y tiny, near band edges) the root choice is only good to
// about sqrt(eps), hence the small backward allowance.
double QuasimomentumModel::track_phase(double y, double x_from, double x_to, const Branch& start, double phase,
                                       Branch* end) const {
    const double dir = x_to >= x_from ? 1.0 : -1.0;
    const int q = period();
    const int pieces = std::max(1, static_cast<int>(std::ceil(8.0 * q * std::abs(x_to - x_from) / kPi)));

    std::function<void(double, double, const Branch&, int)> step = [&](double x0, double x1, const Branch& b0,
                                                                       int depth) {
        Branch b1 = branch(cplx(x1, y), true);
        const double d = std::arg(b1.W / b0.W);
        const double forward = dir * d;
        if (forward < -1e-6 || forward > kPi / 2.0) {
            if (depth >= kMaxTrackDepth) {
                throw NumericalError("quasimomentum branch tracking failed near x = " + std::to_string(x0) +
                                     ", y = " + std::to_string(y));
            }
            const double xm = 0.5 * (x0 + x1);
            Branch bm = branch(cplx(xm, y), true);
            step(x0, xm, b0, depth + 1);
            step(xm, x1, bm, depth + 1);
            return;
        }
        phase += d;
        *end = std::move(b1);
    };

    Branch cur = start;
    double xa = x_from;
    for (int i = 1; i <= pieces; ++i) {
        const double xb = (i == pieces) ? x_to : x_from + (x_to - x_from) * i / pieces;
        step(xa, xb, cur, 0);
        cur = *end;
        xa = xb;
    }
    return phase;
}

cplx QuasimomentumModel::k(cplx z) const {
    const double x = z.real();
    const double y = z.imag();
    if (!(x >= 0.0 && x <= kPi) || !(y >= 0.0)) throw InputError("z must lie in the closed half-strip");
    check_edge(z);
    if (y == 0.0) {
        const BoundarySample s = sample(x);
        return {s.u, s.v};
    }
    const int q = period();
    std::vector<double> marks;  // gap endpoints, so no step spans a whole band
    for (const Interval& g : zgaps_.gaps) {
        marks.push_back(g.lo);
        if (g.hi != g.lo) marks.push_back(g.hi);
    }
    std::sort(marks.begin(), marks.end());

    Branch cur;
    double phase;
    double xc;
    if (x <= kPi / 2.0) {
        cur = branch(cplx(0.0, y), true);
        phase = std::arg(cur.W);
        xc = 0.0;
        for (double m : marks) {
            if (m >= x) break;
            phase = track_phase(y, xc, m, cur, phase, &cur);
            xc = m;
        }
    } else {
        cur = branch(cplx(kPi, y), true);
        phase = q * kPi;
        xc = kPi;
        for (auto it = marks.rbegin(); it != marks.rend(); ++it) {
            if (*it <= x) break;
            phase = track_phase(y, xc, *it, cur, phase, &cur);
            xc = *it;
        }
    }
    if (x != xc) phase = track_phase(y, xc, x, cur, phase, &cur);
    return cplx(phase, -std::log(std::abs(cur.W))) / static_cast<double>(q);
}

cplx QuasimomentumModel::k_derivative(cplx z) const {
    if (!(z.imag() > 0.0)) throw InputError("k_derivative needs Im z > 0");
    const Branch br = branch(z, true);
    const int q = period();
    const cplx I(0.0, 1.0);
    return I * parity(q) * c() * std::sin(z) * br.dD * br.W / (static_cast<double>(q) * (1.0 - br.W * br.W));
}

std::vector<QuasimomentumModel::LinePoint> QuasimomentumModel::along_line(double y,
                                                                          std::span<const double> xs) const {
    if (!(y > 0.0)) throw InputError("along_line needs y > 0");
    const int q = period();
    const cplx I(0.0, 1.0);
    std::vector<double> marks;
    for (const Interval& g : zgaps_.gaps) {
        marks.push_back(g.lo);
        if (g.hi != g.lo) marks.push_back(g.hi);
    }
    std::sort(marks.begin(), marks.end());

    std::vector<LinePoint> out;
    out.reserve(xs.size());
    Branch cur = branch(cplx(0.0, y), true);
    double phase = std::arg(cur.W);
    double xc = 0.0;
    std::size_t m = 0;
    for (double x : xs) {
        if (x < xc || x > kPi) throw InputError("along_line needs ascending x in [0, pi]");
        while (m < marks.size() && marks[m] < x) {
            if (marks[m] > xc) {
                phase = track_phase(y, xc, marks[m], cur, phase, &cur);
                xc = marks[m];
            }
            ++m;
        }
        if (x > xc) {
            phase = track_phase(y, xc, x, cur, phase, &cur);
            xc = x;
        }
        const cplx z(x, y);
        const cplx dk =
            I * parity(q) * c() * std::sin(z) * cur.dD * cur.W / (static_cast<double>(q) * (1.0 - cur.W * cur.W));
        out.push_back({cplx(phase, -std::log(std::abs(cur.W))) / static_cast<double>(q), dk});
    }
    return out;
}

double v_of_x(const QuasimomentumModel& M, double x) { return M.v_of_x(x); }
double u_of_x(const QuasimomentumModel& M, double x) { return M.u_of_x(x); }
cplx k_complex(const QuasimomentumModel& M, cplx z) { return M.k(z); }

std::vector<double> q_coefficients(const PeriodicJacobi& J, const BandStructure& B) {
    const int q = J.period();
    const double c = B.c;
    const std::vector<double> tr = trace_powers(build_L(J), 2 * q - 1);
    std::vector<double> Q(static_cast<std::size_t>(2 * q));
    Q[0] = std::log(c / (2.0 * J.capacity()));
    for (int j = 1; j < 2 * q; ++j) {
        const double t = tr[static_cast<std::size_t>(j)] / (j * std::pow(c, j) * q);
        Q[static_cast<std::size_t>(j)] =
            (j % 2 == 1) ? t : numeric::binomial(j, j / 2) / (j * std::pow(2.0, j)) - t;
    }
    return Q;
}

double sampled_gap_maximum(const QuasimomentumModel& M, int n) {
    if (n < 1 || n >= M.period()) throw InputError("gap index out of range");
    if (!M.gap_open(n)) return 0.0;
    const Interval g = M.z_gaps().gaps[static_cast<std::size_t>(n - 1)];
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = g.lo;
    double b = g.hi;
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    double f1 = M.v_of_x(x1);
    double f2 = M.v_of_x(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = M.v_of_x(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = M.v_of_x(x1);
        }
    }
    return std::max(f1, f2);
}

MomentCheck trace_moment_check(const QuasimomentumModel& M, int n) {
    const int q = M.period();
    if (n < 0 || n >= 2 * q) throw InputError("moment order must satisfy 0 <= n <= 2q - 1");
    MomentCheck out;
    out.n = n;
    double lhs = 0.0;
    for (int m = 1; m < q; ++m) {
        if (!M.gap_open(m)) continue;
        const Interval g = M.z_gaps().gaps[static_cast<std::size_t>(m - 1)];
        const double Dfloor = 1.0;
        auto f = [&](double x) {
            const double D = discriminant_value(M.op(), M.lambda_of_x(x));
            return std::acosh(std::max(Dfloor, std::abs(D) / 2.0)) / q * std::pow(std::cos(x), n);
        };
        lhs += integrate_cosine_sub(f, g.lo, g.hi, 1e-14);
    }
    out.lhs = lhs / kPi;

    // (1/pi) int_0^pi cos^m = C(m, m/2) / 2^m for even m, else 0
    auto mean_cos = [](int m) { return (m % 2 == 1) ? 0.0 : numeric::binomial(m, m / 2) / std::pow(2.0, m); };
    double rhs = 0.0;
    for (int j = 0; j <= n; ++j) rhs += M.Q()[static_cast<std::size_t>(j)] * mean_cos(n - j);
    out.rhs = rhs;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

namespace {

using LineIntegrand = std::function<double(const QuasimomentumModel::LinePoint&, cplx)>;
using TailDerivative = std::function<cplx(cplx)>;

struct Mesh {
    std::vector<double> x_breaks;
    std::vector<double> y_breaks;
};

Mesh dirichlet_mesh(const QuasimomentumModel& M, const DirichletOptions& opts) {
    std::vector<double> singular;
    for (int n = 1; n < M.period(); ++n) {
        if (!M.gap_open(n)) continue;
        const Interval& g = M.z_gaps().gaps[static_cast<std::size_t>(n - 1)];
        singular.push_back(g.lo);
        singular.push_back(g.hi);
    }
    std::vector<double> pts{0.0};
    pts.insert(pts.end(), singular.begin(), singular.end());
    pts.push_back(kPi);

    Mesh mesh;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const bool left = i > 0;
        const bool right = i + 2 < pts.size();
        std::vector<double> br =
            numeric::graded_breaks(pts[i], pts[i + 1], left, right, opts.grading_ratio, opts.min_panel);
        if (!mesh.x_breaks.empty()) br.erase(br.begin());
        mesh.x_breaks.insert(mesh.x_breaks.end(), br.begin(), br.end());
    }
    mesh.y_breaks = numeric::graded_breaks(0.0, 1.0, true, false, opts.grading_ratio, opts.min_panel);
    for (int yi = 2; yi <= static_cast<int>(std::ceil(opts.ymax)); ++yi) {
        mesh.y_breaks.push_back(std::min(static_cast<double>(yi), opts.ymax));
    }
    if (mesh.y_breaks.back() < opts.ymax) mesh.y_breaks.push_back(opts.ymax);
    return mesh;
}

double strip_quadrature(const QuasimomentumModel& M, const Mesh& mesh, int order, const LineIntegrand& f) {
    const auto [xs, wx] = numeric::composite_rule(mesh.x_breaks, order);
    const auto [ys, wy] = numeric::composite_rule(mesh.y_breaks, order);
    double total = 0.0;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        const std::vector<QuasimomentumModel::LinePoint> line = M.along_line(ys[j], xs);
        double row = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) row += wx[i] * f(line[i], cplx(xs[i], ys[j]));
        total += wy[j] * row;
    }
    return total / kPi;
}

// (1/pi) int_ymax^inf int_0^pi |g'(z)|^2 from the asymptotic series of g'.
double tail_quadrature(double ymax, const TailDerivative& dg) {
    const numeric::GaussRule& r = numeric::gauss_legendre(32);
    double total = 0.0;
    for (int panel = 0; panel < 40; ++panel) {
        const double y0 = ymax + panel;
        double acc = 0.0;
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            const double y = y0 + 0.5 * (r.nodes[j] + 1.0);
            for (std::size_t i = 0; i < r.nodes.size(); ++i) {
                const double x = 0.5 * kPi * (r.nodes[i] + 1.0);
                acc += 0.25 * kPi * r.weights[i] * r.weights[j] * std::norm(dg(cplx(x, y)));
            }
        }
        total += acc;
        if (acc < 1e-18 * std::max(total, 1e-300)) break;
    }
    return total / kPi;
}

DirichletResult dirichlet_common(const QuasimomentumModel& M, const DirichletOptions& opts, double reference,
                                 const LineIntegrand& f, const TailDerivative& tail_dg) {
    if (!(opts.ymax > 1.0)) throw InputError("ymax must exceed 1");
    if (opts.order < 2) throw InputError("quadrature order must be at least 2");
    DirichletResult out;
    out.reference = reference;
    if (!M.all_gaps_closed()) {
        const Mesh mesh = dirichlet_mesh(M, opts);
        const double coarse = strip_quadrature(M, mesh, opts.order, f);
        const double fine = strip_quadrature(M, mesh, opts.order + 4, f);
        out.tail = tail_quadrature(opts.ymax, tail_dg);
        const double floor = 1e-14;
        if (out.tail > opts.tail_tolerance * std::abs(reference) && out.tail > floor) {
            throw NumericalError("tail beyond ymax is too large; increase Ymax");
        }
        out.integral = fine + out.tail;
        out.quadrature_error = std::abs(fine - coarse);
    }
    out.residual = std::abs(out.integral - out.reference);
    out.relative_residual = out.reference != 0.0 ? out.residual / std::abs(out.reference) : out.residual;
    return out;
}

}  // namespace

DirichletResult dirichlet_integral_1(const QuasimomentumModel& M, const DirichletOptions& opts) {
    const std::vector<double> Q(M.Q().begin(), M.Q().end());
    const cplx I(0.0, 1.0);
    auto f = [](const QuasimomentumModel::LinePoint& p, cplx) { return std::norm(p.dk - 1.0); };
    auto tail = [Q, I](cplx z) {
        const cplx cz = std::cos(z);
        const cplx sz = std::sin(z);
        cplx acc = 0.0;
        cplx pw = cz;  // cos^{j+1}
        for (std::size_t j = 1; j < Q.size(); ++j) {
            pw *= cz;
            acc += I * static_cast<double>(j) * Q[j] * sz / pw;
        }
        return acc;
    };
    return dirichlet_common(M, opts, Q[0], f, tail);
}

DirichletResult dirichlet_integral_2(const QuasimomentumModel& M, const DirichletOptions& opts) {
    const std::vector<double> Q(M.Q().begin(), M.Q().end());
    const cplx I(0.0, 1.0);
    const double Q0 = Q[0];
    const double Q1 = Q.size() > 1 ? Q[1] : 0.0;
    const double Q2 = Q.size() > 2 ? Q[2] : 0.0;
    const double reference = Q0 / 2.0 + Q2 - 2.0 * Q0 * Q2 - Q1 * Q1 / 2.0;
    auto f = [Q0, I](const QuasimomentumModel::LinePoint& p, cplx z) {
        return std::norm((p.dk - 1.0) * std::cos(z) - (p.k - z - I * Q0) * std::sin(z));
    };
    auto tail = [Q, I](cplx z) {
        const cplx cz = std::cos(z);
        const cplx sz = std::sin(z);
        cplx acc = 0.0;
        cplx pw = cz;  // cos^j
        for (std::size_t j = 2; j < Q.size(); ++j) {
            pw *= cz;
            acc += I * static_cast<double>(j - 1) * Q[j] * sz / pw;
        }
        return acc;
    };
    return dirichlet_common(M, opts, reference, f, tail);
}

VerticalCheck vertical_identity_check(const QuasimomentumModel& M) {
    const int q = M.period();
    VerticalCheck out;

    double lhs = 0.0;
    for (int n = 1; n <= q; ++n) {
        const double lo = (n == 1) ? 0.0 : M.z_gaps().gaps[static_cast<std::size_t>(n - 2)].hi;
        const double hi = (n == q) ? kPi : M.z_gaps().gaps[static_cast<std::size_t>(n - 1)].lo;
        const double eps = parity(q - n + 1);
        auto u = [&](double x) {
            const double D = discriminant_value(M.op(), M.lambda_of_x(x));
            return ((n - 1) * kPi + std::acos(std::clamp(eps * D / 2.0, -1.0, 1.0))) / q;
        };
        lhs += integrate_cosine_sub(u, lo, hi, 1e-13);
    }
    for (int n = 1; n < q; ++n) lhs += n * kPi / q * M.z_gaps().widths[static_cast<std::size_t>(n - 1)];
    out.lhs = lhs;

    const double c = M.c();
    auto side_v = [&](double lambda) {
        return std::acosh(std::max(1.0, std::abs(discriminant_value(M.op(), lambda)) / 2.0)) / q;
    };
    auto f = [&](double y) { return side_v(c * std::cosh(y)) - side_v(-c * std::cosh(y)); };
    double Y = 1.0;
    while (Y < 40.0 && std::abs(f(Y)) >= 1e-10) Y += 1.0;
    out.y_cutoff = Y;
    out.rhs = kPi * kPi / 2.0 + numeric::integrate_adaptive(f, 0.0, Y, 1e-13).value;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

cplx herglotz_k(const QuasimomentumModel& M, cplx z, int n_grid) {
    if (!(z.imag() > 0.0)) throw InputError("herglotz_k needs Im z > 0");
    if (n_grid < 2) throw InputError("n_grid must be at least 2");
    const int q = M.period();
    const int per_panel = std::min(n_grid, 16);
    const int panels = std::max(1, n_grid / per_panel);
    std::vector<double> breaks(static_cast<std::size_t>(panels + 1));
    for (int i = 0; i <= panels; ++i) breaks[static_cast<std::size_t>(i)] = kPi * i / panels;
    const auto [ts, wts] = numeric::composite_rule(breaks, per_panel);

    cplx acc = 0.0;
    for (int n = 1; n < q; ++n) {
        if (!M.gap_open(n)) continue;
        const Interval g = M.z_gaps().gaps[static_cast<std::size_t>(n - 1)];
        const double mid = g.mid();
        const double hw = 0.5 * g.width();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double th = mid - hw * std::cos(ts[i]);
            const double D = discriminant_value(M.op(), M.lambda_of_x(th));
            const double v = std::acosh(std::max(1.0, std::abs(D) / 2.0)) / q;
            acc += wts[i] * hw * std::sin(ts[i]) * v * (cot((th - z) / 2.0) - cot((th + z) / 2.0));
        }
    }
    return z + acc / (2.0 * kPi);
}

GapShapeReport gap_shape_checks(const QuasimomentumModel& M, int gap, int n_points) {
    if (gap < 1 || gap >= M.period()) throw InputError("gap index out of range");
    if (n_points < 3) throw InputError("gap_shape_checks needs at least 3 points");
    GapShapeReport rep;
    rep.gap = gap;
    if (!M.gap_open(gap)) return rep;

    const Interval g = M.z_gaps().gaps[static_cast<std::size_t>(gap - 1)];
    const double h = g.width() / (n_points + 1);
    std::vector<double> v(static_cast<std::size_t>(n_points));
    rep.min_semicircle_slack = std::numeric_limits<double>::infinity();
    rep.max_second_difference = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_points; ++i) {
        const double x = g.lo + h * (i + 1);
        v[static_cast<std::size_t>(i)] = M.v_of_x(x);
        const double slack = v[static_cast<std::size_t>(i)] - std::sqrt(std::max(0.0, (x - g.lo) * (g.hi - x)));
        rep.min_semicircle_slack = std::min(rep.min_semicircle_slack, slack);
        if (slack < -1e-9) ++rep.semicircle_violations;
        rep.sampled_max = std::max(rep.sampled_max, v[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i + 1 < n_points; ++i) {
        const double d2 = v[static_cast<std::size_t>(i - 1)] - 2.0 * v[static_cast<std::size_t>(i)] +
                          v[static_cast<std::size_t>(i + 1)];
        rep.max_second_difference = std::max(rep.max_second_difference, d2);
        if (d2 > 1e-9) ++rep.concavity_violations;
    }
    rep.samples = n_points;
    return rep;
}

}  // namespace pjacobi
