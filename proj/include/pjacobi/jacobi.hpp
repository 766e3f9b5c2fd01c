#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pjacobi {

using cplx = std::complex<double>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

/// q-periodic Jacobi operator
///
///   (H psi)_n = a_{n-1} psi_{n-1} + b_n psi_n + a_n psi_{n+1},
///   a_n = a_{n+q} > 0,  b_n = b_{n+q}.
///
/// Coefficients are indexed 1..q as in the usual notation; storage is
/// 0-based, so a_n lives at a()[n-1]. Index 0 wraps to q (a_0 = a_q).
class PeriodicJacobi {
public:
    /// Validates q >= 2, equal lengths, a_n > 0 and finite entries.
    PeriodicJacobi(std::vector<double> a, std::vector<double> b);

    int period() const { return static_cast<int>(a_.size()); }
    std::span<const double> a() const { return a_; }
    std::span<const double> b() const { return b_; }

    /// 1-based periodic access; any integer n is accepted.
    double a_at(int n) const { return a_[wrap(n)]; }
    double b_at(int n) const { return b_[wrap(n)]; }

    /// Geometric mean (a_1 ... a_q)^{1/q}, the logarithmic capacity of the spectrum.
    double capacity() const;
    double diagonal_sum() const;

    bool operator==(const PeriodicJacobi&) const = default;

private:
    std::size_t wrap(int n) const {
        const int q = period();
        return static_cast<std::size_t>(((n - 1) % q + q) % q);
    }

    std::vector<double> a_;
    std::vector<double> b_;
};

PeriodicJacobi make_jacobi(int q, std::vector<double> a, std::vector<double> b);

/// b_n -> b_n + s.
PeriodicJacobi shift_diagonal(const PeriodicJacobi& J, double s);

/// Harper (almost Mathieu) operator: a_j = 1, b_j = 2 cos(2 pi p j / q + theta), j = 1..q.
PeriodicJacobi harper(int p, int q, double theta);

/// [min_j(b_j - a_j - a_{j-1}), max_j(b_j + a_j + a_{j-1})]
Interval gershgorin_interval(const PeriodicJacobi& J);

/// Dense q x q complex Hermitian matrix, row-major.
class FloquetMatrix {
public:
    explicit FloquetMatrix(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    cplx& operator()(int i, int j) { return m_[static_cast<std::size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * dim_ + j]; }

    cplx trace() const;
    double frobenius_norm() const;
    FloquetMatrix operator*(const FloquetMatrix& rhs) const;

private:
    int dim_;
    std::vector<cplx> m_;
};

/// The member of the Bloch family with corner phase i: corners +i a_q (top right)
/// and -i a_q (bottom left); for q = 2 the off-diagonal pair is a_1 +- i a_2.
/// Its characteristic polynomial is A^q D(lambda).
FloquetMatrix build_L(const PeriodicJacobi& J);

/// Bloch matrix with quasi-periodic boundary phase e^{i theta}. Eigenvalues are
/// the roots of D(lambda) = 2 cos(theta). build_L is the theta = pi/2 member.
FloquetMatrix build_bloch_matrix(const PeriodicJacobi& J, double theta);

/// Tr L^j for j = 0..jmax (entry 0 is q), by repeated dense multiplication.
/// Throws NumericalError if an imaginary residue exceeds 1e-12 of the trace scale.
std::vector<double> trace_powers(const FloquetMatrix& L, int jmax);

struct DerivedScalars {
    double capacity = 0.0;
    std::vector<double> traces;  ///< Tr L^j, j = 0..2q-1
    Interval gershgorin;
};

DerivedScalars derived_scalars(const PeriodicJacobi& J);

}  // namespace pjacobi
