#include "pjacobi/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pjacobi/errors.hpp"

namespace pjacobi {

PeriodicJacobi::PeriodicJacobi(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) {
        std::ostringstream msg;
        msg << "off-diagonal has " << a_.size() << " entries but diagonal has " << b_.size();
        throw InputError(msg.str());
    }
    if (a_.size() < 2) {
        throw InputError("period q must be at least 2");
    }
    for (std::size_t n = 0; n < a_.size(); ++n) {
        if (!std::isfinite(a_[n]) || !std::isfinite(b_[n])) {
            throw InputError("non-finite coefficient at index " + std::to_string(n + 1));
        }
        if (!(a_[n] > 0.0)) {
            throw InputError("off-diagonal a_" + std::to_string(n + 1) + " must be positive");
        }
    }
}

double PeriodicJacobi::capacity() const {
    double log_sum = 0.0;
    for (double an : a_) log_sum += std::log(an);
    return std::exp(log_sum / static_cast<double>(a_.size()));
}

double PeriodicJacobi::diagonal_sum() const {
    double s = 0.0;
    for (double bn : b_) s += bn;
    return s;
}

PeriodicJacobi make_jacobi(int q, std::vector<double> a, std::vector<double> b) {
    if (q < 2) throw InputError("period q must be at least 2");
    if (a.size() != static_cast<std::size_t>(q) || b.size() != static_cast<std::size_t>(q)) {
        std::ostringstream msg;
        msg << "expected " << q << " coefficients, got |a| = " << a.size() << ", |b| = " << b.size();
        throw InputError(msg.str());
    }
    return PeriodicJacobi(std::move(a), std::move(b));
}

PeriodicJacobi shift_diagonal(const PeriodicJacobi& J, double s) {
    std::vector<double> b(J.b().begin(), J.b().end());
    for (double& bn : b) bn += s;
    return PeriodicJacobi(std::vector<double>(J.a().begin(), J.a().end()), std::move(b));
}

PeriodicJacobi harper(int p, int q, double theta) {
    if (q < 2) throw InputError("Harper operator needs q >= 2");
    std::vector<double> a(static_cast<std::size_t>(q), 1.0);
    std::vector<double> b(static_cast<std::size_t>(q));
    for (int j = 1; j <= q; ++j) {
        // reduce p*j mod q first so the angle stays in [0, 2pi) before theta
        const long long r = (static_cast<long long>(p) * j) % q;
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(r) / q + theta;
        b[static_cast<std::size_t>(j - 1)] = 2.0 * std::cos(phase);
    }
    return PeriodicJacobi(std::move(a), std::move(b));
}

Interval gershgorin_interval(const PeriodicJacobi& J) {
    const int q = J.period();
    Interval out{J.b_at(1) - J.a_at(1) - J.a_at(0), J.b_at(1) + J.a_at(1) + J.a_at(0)};
    for (int j = 2; j <= q; ++j) {
        const double radius = J.a_at(j) + J.a_at(j - 1);
        out.lo = std::min(out.lo, J.b_at(j) - radius);
        out.hi = std::max(out.hi, J.b_at(j) + radius);
    }
    return out;
}

cplx FloquetMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double FloquetMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : m_) s += std::norm(z);
    return std::sqrt(s);
}

FloquetMatrix FloquetMatrix::operator*(const FloquetMatrix& rhs) const {
    FloquetMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const cplx lik = (*this)(i, k);
            if (lik == cplx(0.0)) continue;
            for (int j = 0; j < dim_; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

namespace {

FloquetMatrix bloch_with_phase(const PeriodicJacobi& J, cplx phase) {
    const int q = J.period();
    FloquetMatrix L(q);
    for (int j = 1; j <= q; ++j) L(j - 1, j - 1) = J.b_at(j);
    if (q == 2) {
        const cplx off = J.a_at(1) + J.a_at(2) * phase;
        L(0, 1) = off;
        L(1, 0) = std::conj(off);
        return L;
    }
    for (int j = 1; j < q; ++j) {
        L(j - 1, j) = J.a_at(j);
        L(j, j - 1) = J.a_at(j);
    }
    L(0, q - 1) = J.a_at(q) * phase;
    L(q - 1, 0) = J.a_at(q) * std::conj(phase);
    return L;
}

}  // namespace

FloquetMatrix build_L(const PeriodicJacobi& J) { return bloch_with_phase(J, cplx(0.0, 1.0)); }

FloquetMatrix build_bloch_matrix(const PeriodicJacobi& J, double theta) {
    return bloch_with_phase(J, std::polar(1.0, theta));
}

std::vector<double> trace_powers(const FloquetMatrix& L, int jmax) {
    if (jmax < 1) throw InputError("trace_powers needs jmax >= 1");
    std::vector<double> out(static_cast<std::size_t>(jmax) + 1);
    out[0] = L.dim();
    const double norm = L.frobenius_norm();
    FloquetMatrix power = L;
    for (int j = 1; j <= jmax; ++j) {
        if (j > 1) power = power * L;
        const cplx t = power.trace();
        const double scale = std::max({std::abs(t.real()), std::pow(norm, j), 1e-300});
        if (std::abs(t.imag()) > 1e-12 * scale) {
            std::ostringstream msg;
            msg << "Tr L^" << j << " has imaginary residue " << t.imag() << " (scale " << scale << ")";
            throw NumericalError(msg.str());
        }
        out[static_cast<std::size_t>(j)] = t.real();
    }
    return out;
}

DerivedScalars derived_scalars(const PeriodicJacobi& J) {
    DerivedScalars d;
    d.capacity = J.capacity();
    d.traces = trace_powers(build_L(J), 2 * J.period() - 1);
    d.gershgorin = gershgorin_interval(J);
    return d;
}

}  // namespace pjacobi
