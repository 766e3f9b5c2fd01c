#pragma once

#include <span>
#include <vector>

#include "pjacobi/discriminant.hpp"
#include "pjacobi/jacobi.hpp"
#include "pjacobi/spectrum.hpp"

namespace pjacobi {

/// Boundary values of the quasimomentum at a point of [0, pi].
struct BoundarySample {
    double x = 0.0;
    double lambda = 0.0;  ///< -c cos x
    double D = 0.0;
    double u = 0.0;       ///< integrated density of states, rescaled to [0, pi]
    double v = 0.0;       ///< Lyapunov exponent
    int band = 0;         ///< 1..q when x lies on a band, else 0
    int gap = 0;          ///< 1..q-1 when x lies inside an open gap, else 0
};

/// Quasimomentum k(z) = u + i v of a normalised periodic Jacobi operator, as a
/// conformal map of the half-strip {0 <= Re z <= pi, Im z >= 0} (minus the gap
/// images g_n on the real axis) onto the comb with vertical slits of height h_n
/// at u = n pi / q. Asymptotically k(z) = z + i Q_0 + sum_j i Q_j / cos^j z.
class QuasimomentumModel {
public:
    /// Normalises J first; the model refers to the shifted operator.
    static QuasimomentumModel build(const PeriodicJacobi& J, const SpectrumOptions& opts = {});

    const PeriodicJacobi& op() const { return op_; }
    const BandStructure& bands() const { return bands_; }
    const DiscriminantRep& discriminant() const { return rep_; }
    const ZGapSet& z_gaps() const { return zgaps_; }
    /// Tr L^j, j = 0..2q-1, of the normalised operator.
    std::span<const double> traces() const { return traces_; }
    /// Slit heights h_n, n = 1..q-1 stored at [n-1]; 0 for closed gaps.
    std::span<const double> slit_heights() const { return heights_; }
    double h_plus() const { return h_plus_; }
    /// Asymptotic coefficients Q_0 .. Q_{2q-1}.
    std::span<const double> Q() const { return Q_; }

    int period() const { return op_.period(); }
    double c() const { return bands_.c; }
    double capacity() const { return bands_.capacity; }
    bool all_gaps_closed() const { return bands_.all_gaps_closed(); }
    bool gap_open(int n) const { return !bands_.closed[static_cast<std::size_t>(n - 1)]; }

    double lambda_of_x(double x) const;
    BoundarySample sample(double x) const;
    double v_of_x(double x) const;
    double u_of_x(double x) const;

    /// k(z) for 0 <= Re z <= pi, Im z >= 0. Re k is tracked continuously along the
    /// horizontal line from the nearer vertical side. Throws InputError within
    /// 1e-12 of an open-gap endpoint (square-root branch point).
    cplx k(cplx z) const;
    /// k'(z) in the open half-strip; pointwise, no branch tracking needed.
    cplx k_derivative(cplx z) const;

    struct LinePoint {
        cplx k;
        cplx dk;
    };
    /// k and k' at x + i y for ascending xs in [0, pi], y > 0, in one sweep.
    std::vector<LinePoint> along_line(double y, std::span<const double> xs) const;

private:
    QuasimomentumModel(PeriodicJacobi op, BandStructure bands, DiscriminantRep rep)
        : op_(std::move(op)), bands_(std::move(bands)), rep_(std::move(rep)) {}

    struct Branch {
        cplx W;  ///< e^{i q k}, |W| <= 1
        cplx lambda;
        cplx dD;
    };
    Branch branch(cplx z, bool with_slope) const;
    void check_edge(cplx z) const;
    double track_phase(double y, double x_from, double x_to, const Branch& start, double phase,
                       Branch* end) const;

    PeriodicJacobi op_;
    BandStructure bands_;
    DiscriminantRep rep_;
    ZGapSet zgaps_;
    std::vector<double> traces_;
    std::vector<double> heights_;
    double h_plus_ = 0.0;
    double edge_snap_ = 0.0;  ///< u is pinned to its edge value within this distance
    std::vector<double> Q_;
};

double v_of_x(const QuasimomentumModel& M, double x);
double u_of_x(const QuasimomentumModel& M, double x);
cplx k_complex(const QuasimomentumModel& M, cplx z);

/// Q_0 = ln(c / 2A); for 1 <= j < 2q,
///   Q_j = Tr L^j / (j c^j q)                          (j odd)
///   Q_j = C(j, j/2) / (j 2^j) - Tr L^j / (j c^j q)     (j even).
/// J must be normalised and B its band structure.
std::vector<double> q_coefficients(const PeriodicJacobi& J, const BandStructure& B);

/// Maximum of v over gap n by golden-section search (v is concave on gaps).
double sampled_gap_maximum(const QuasimomentumModel& M, int n);

struct MomentCheck {
    int n = 0;
    double lhs = 0.0;  ///< (1/pi) int_0^pi v(x) cos^n x dx
    double rhs = 0.0;  ///< binomial combination of Q_j
    double residual = 0.0;
};

/// Trace formula of order n, 0 <= n <= 2q - 1.
MomentCheck trace_moment_check(const QuasimomentumModel& M, int n);

struct DirichletOptions {
    double ymax = 12.0;
    int order = 10;               ///< Gauss-Legendre nodes per panel
    double grading_ratio = 0.2;
    double min_panel = 1e-13;
    double tail_tolerance = 1e-4; ///< max tail contribution relative to Q_0
};

struct DirichletResult {
    double integral = 0.0;
    double reference = 0.0;
    double residual = 0.0;           ///< |integral - reference|
    double relative_residual = 0.0;  ///< residual / |reference| (0 when both vanish)
    double quadrature_error = 0.0;   ///< difference between two quadrature orders
    double tail = 0.0;               ///< analytic contribution from y > ymax
};

/// (1/pi) iint |k'(z) - 1|^2 against Q_0.
DirichletResult dirichlet_integral_1(const QuasimomentumModel& M, const DirichletOptions& opts = {});
/// (1/pi) iint |d/dz [(k - z - i Q_0) cos z]|^2 against Q_0/2 + Q_2 - 2 Q_0 Q_2 - Q_1^2/2.
DirichletResult dirichlet_integral_2(const QuasimomentumModel& M, const DirichletOptions& opts = {});

struct VerticalCheck {
    double lhs = 0.0;  ///< int_0^pi u(x) dx
    double rhs = 0.0;  ///< pi^2/2 + int_0^inf (v(pi, y) - v(0, y)) dy
    double residual = 0.0;
    double y_cutoff = 0.0;
};

VerticalCheck vertical_identity_check(const QuasimomentumModel& M);

/// k(z) from the periodic Herglotz (cotangent kernel) representation, using only
/// the boundary values of v on the open gaps. n_grid Gauss-Legendre nodes per gap.
cplx herglotz_k(const QuasimomentumModel& M, cplx z, int n_grid = 4096);

struct GapShapeReport {
    int gap = 0;
    int samples = 0;
    int semicircle_violations = 0;
    int concavity_violations = 0;
    double min_semicircle_slack = 0.0;  ///< min of v(x) - sqrt((x - z^-)(z^+ - x))
    double max_second_difference = 0.0;
    double sampled_max = 0.0;
};

/// Semicircle lower bound and concavity of v at n_points interior samples of gap n.
GapShapeReport gap_shape_checks(const QuasimomentumModel& M, int gap, int n_points);

}  // namespace pjacobi
