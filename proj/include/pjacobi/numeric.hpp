#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace pjacobi::numeric {

/// Root of a continuous f on [lo, hi] with f(lo), f(hi) of opposite sign,
/// refined until the bracket is below rel_tol * (1 + |x|) or cannot shrink.
/// Throws NumericalError if the endpoints do not bracket a sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 0.0);

/// Same, but with endpoint values already known.
double bisect(const std::function<double(double)>& f, double lo, double hi, double flo, double fhi,
              double rel_tol);

struct GaussRule {
    std::vector<double> nodes;    ///< on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton on the Legendre recurrence). Cached per n.
const GaussRule& gauss_legendre(int n);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Intervals with the largest error estimate are bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|) or max_intervals is hit.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol = 0.0, int max_intervals = 2000);

/// Composite Gauss-Legendre over the given sorted breakpoints, `order` nodes per panel.
/// Returns (nodes, weights) in ascending node order.
std::pair<std::vector<double>, std::vector<double>> composite_rule(const std::vector<double>& breaks,
                                                                  int order);

/// Breakpoints on [a, b] graded geometrically toward the flagged ends with ratio
/// `ratio`, down to panels of length `min_size`. Interior is split at the midpoint
/// when both ends are graded.
std::vector<double> graded_breaks(double a, double b, bool grade_left, bool grade_right, double ratio,
                                  double min_size);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

}  // namespace pjacobi::numeric
