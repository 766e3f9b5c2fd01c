#pragma once

#include <vector>

#include "pjacobi/discriminant.hpp"
#include "pjacobi/jacobi.hpp"

namespace pjacobi {

struct SpectrumOptions {
    /// Relative bisection tolerance for band edges.
    double edge_tol = 1e-14;
    /// A gap narrower than closed_gap_tol * c is treated as closed.
    double closed_gap_tol = 1e-10;
};

/// Band edges lambda_0^+ <= lambda_1^- <= lambda_1^+ <= ... <= lambda_q^-.
///
/// Band m (1..q) is [lambda_{m-1}^+, lambda_m^-], gap m (1..q-1) is
/// (lambda_m^-, lambda_m^+). A closed gap has both edges at the critical point.
struct BandStructure {
    std::vector<double> edges;  ///< 2q entries
    std::vector<bool> closed;   ///< q - 1 entries
    std::vector<double> critical_points;
    double c = 0.0;         ///< half-width of the spectrum
    double capacity = 0.0;  ///< A
    double shift = 0.0;     ///< diagonal shift applied by normalize (0 otherwise)

    int period() const { return static_cast<int>(edges.size() / 2); }
    Interval band(int m) const;
    Interval gap(int m) const;
    std::vector<Interval> bands() const;
    std::vector<Interval> gaps() const;
    double total_band_width() const;
    double total_gap_width() const;
    bool all_gaps_closed() const;
    int open_gap_count() const;
    double lower() const { return edges.front(); }
    double upper() const { return edges.back(); }
};

/// Edges by bisecting D = +-2 on each monotone piece of D between critical points.
BandStructure band_edges(const PeriodicJacobi& J, const SpectrumOptions& opts = {});

struct NormalizedOperator {
    PeriodicJacobi op;
    BandStructure bands;
};

/// Shift the diagonal so the spectrum is [-c, c].
NormalizedOperator normalize(const PeriodicJacobi& J, const SpectrumOptions& opts = {});

/// Strip coordinate x(lambda) = arccos(-lambda / c) in [0, pi]; lambda = -c cos x.
double strip_coordinate(double lambda, double c);

struct ZGapSet {
    std::vector<Interval> gaps;  ///< g_n, zero width when closed
    std::vector<double> widths;
    double total_width() const;
    double total_width_squared() const;
};

/// Gap images in the strip coordinate; requires a normalised band structure.
ZGapSet z_coordinates(const BandStructure& B);

/// Eigenvalues (ascending) of a Hermitian matrix, by cyclic Jacobi rotations on
/// the real symmetric embedding [[Re, -Im], [Im, Re]]. Throws NumericalError
/// if the off-diagonal norm does not fall below 1e-12 * ||L|| within the sweep cap.
std::vector<double> hermitian_eigenvalues(const FloquetMatrix& L);

/// Bands as [min, max] over theta in a uniform grid on [0, pi] of the sorted
/// eigenvalues of the Bloch matrices L(theta).
std::vector<Interval> bloch_oracle(const PeriodicJacobi& J, int n_theta);

/// Hausdorff distance between two intervals.
double interval_distance(const Interval& x, const Interval& y);

}  // namespace pjacobi
