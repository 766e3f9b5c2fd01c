#pragma once

#include <vector>

#include "pjacobi/jacobi.hpp"

namespace pjacobi {

/// Real polynomial in the monomial basis, coefficients in ascending degree.
struct Polynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double leading() const { return coeffs.back(); }
    /// Coefficient of lambda^k; zero outside [0, degree].
    double coeff(int k) const {
        return (k < 0 || k > degree()) ? 0.0 : coeffs[static_cast<std::size_t>(k)];
    }

    double operator()(double x) const;
    cplx operator()(cplx x) const;
    Polynomial derivative() const;
};

/// Terminal values of the two fundamental solutions,
/// phi_0 = 0, phi_1 = 1 and theta_0 = 1, theta_1 = 0.
template <class T>
struct FundamentalPairT {
    T phi_q{};
    T phi_q1{};
    T theta_q{};
    T theta_q1{};

    T discriminant() const { return phi_q1 + theta_q; }
    /// Equals 1 identically.
    T wronskian() const { return phi_q1 * theta_q - phi_q * theta_q1; }
};

using FundamentalPair = FundamentalPairT<double>;

FundamentalPairT<double> fundamental_pair(const PeriodicJacobi& J, double lambda);
FundamentalPairT<cplx> fundamental_pair(const PeriodicJacobi& J, cplx lambda);

/// D(lambda) = phi_{q+1}(lambda) + theta_q(lambda).
double discriminant_value(const PeriodicJacobi& J, double lambda);
cplx discriminant_value(const PeriodicJacobi& J, cplx lambda);

template <class T>
struct ValueSlope {
    T value{};
    T slope{};
};

/// D and D' together by the differentiated recurrence.
ValueSlope<double> discriminant_with_slope(const PeriodicJacobi& J, double lambda);
ValueSlope<cplx> discriminant_with_slope(const PeriodicJacobi& J, cplx lambda);

/// D, D', ..., D^(order) at a real point.
std::vector<double> discriminant_derivatives(const PeriodicJacobi& J, double lambda, int order);

/// Magnitude scale of the terms entering D(lambda): the same recurrence run
/// on absolute values. q * eps * scale bounds the rounding error of D.
double discriminant_scale(const PeriodicJacobi& J, double lambda);

struct DiscriminantRep {
    Polynomial poly;                      ///< degree q, leading coefficient A^{-q}
    Polynomial derivative;                ///< degree q - 1
    std::vector<double> critical_points;  ///< the q - 1 roots of D', increasing
};

/// Coefficients from the determinant recurrences for det(lambda - L) divided by
/// A^q; critical points by bracketing the derivative cascade D^(q-1), ..., D'.
DiscriminantRep discriminant_poly(const PeriodicJacobi& J);

/// The q - 1 critical points of D alone (what discriminant_poly stores).
std::vector<double> critical_points(const PeriodicJacobi& J);

/// Monic orthogonal polynomials hat phi_{q+1} (degree q) and hat phi_q (degree
/// q - 1), with the leading coefficient (a_1...a_q)^{-1} of phi_{q+1}.
struct MonicPair {
    Polynomial phi_hat_q1;
    Polynomial phi_hat_q;
    double leading = 0.0;
};

MonicPair monic_pair(const PeriodicJacobi& J);

/// Inverse of monic_pair: peels the three-term recurrence from the top,
/// recovering b_q, a_{q-1}, ..., b_1, then a_q from the leading coefficient.
/// Throws InputError when the pair is not realisable by a Jacobi matrix.
PeriodicJacobi reconstruct_from_monic_pair(const Polynomial& phi_hat_q1, const Polynomial& phi_hat_q,
                                           double leading);

}  // namespace pjacobi
