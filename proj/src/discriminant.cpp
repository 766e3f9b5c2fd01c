#include "pjacobi/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pjacobi/errors.hpp"
#include "pjacobi/numeric.hpp"

namespace pjacobi {

double Polynomial::operator()(double x) const {
    double r = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

cplx Polynomial::operator()(cplx x) const {
    cplx r = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs.size() <= 1) return Polynomial{{0.0}};
    Polynomial d;
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs[k - 1] = static_cast<double>(k) * coeffs[k];
    return d;
}

namespace {

template <class T>
FundamentalPairT<T> run_pair(const PeriodicJacobi& J, T lambda) {
    const int q = J.period();
    // psi_{n-1}, psi_n for both solutions
    T phi_prev = 0.0, phi_cur = 1.0;
    T th_prev = 1.0, th_cur = 0.0;
    FundamentalPairT<T> out;
    for (int n = 1; n <= q; ++n) {
        const double an = J.a_at(n);
        const double anm1 = J.a_at(n - 1);
        const T shift = lambda - J.b_at(n);
        const T phi_next = (shift * phi_cur - anm1 * phi_prev) / an;
        const T th_next = (shift * th_cur - anm1 * th_prev) / an;
        phi_prev = phi_cur;
        phi_cur = phi_next;
        th_prev = th_cur;
        th_cur = th_next;
    }
    out.phi_q = phi_prev;
    out.theta_q = th_prev;
    out.phi_q1 = phi_cur;
    out.theta_q1 = th_cur;
    return out;
}

template <class T>
ValueSlope<T> run_slope(const PeriodicJacobi& J, T lambda) {
    const int q = J.period();
    T p0 = 0.0, p1 = 1.0, dp0 = 0.0, dp1 = 0.0;  // phi
    T t0 = 1.0, t1 = 0.0, dt0 = 0.0, dt1 = 0.0;  // theta
    for (int n = 1; n <= q; ++n) {
        const double an = J.a_at(n);
        const double anm1 = J.a_at(n - 1);
        const T shift = lambda - J.b_at(n);
        const T p2 = (shift * p1 - anm1 * p0) / an;
        const T dp2 = (shift * dp1 + p1 - anm1 * dp0) / an;
        const T t2 = (shift * t1 - anm1 * t0) / an;
        const T dt2 = (shift * dt1 + t1 - anm1 * dt0) / an;
        p0 = p1;
        p1 = p2;
        dp0 = dp1;
        dp1 = dp2;
        t0 = t1;
        t1 = t2;
        dt0 = dt1;
        dt1 = dt2;
    }
    // after the loop p1 = phi_{q+1}, t0 = theta_q
    return {p1 + t0, dp1 + dt0};
}

}  // namespace

FundamentalPairT<double> fundamental_pair(const PeriodicJacobi& J, double lambda) {
    return run_pair<double>(J, lambda);
}

FundamentalPairT<cplx> fundamental_pair(const PeriodicJacobi& J, cplx lambda) {
    return run_pair<cplx>(J, lambda);
}

double discriminant_value(const PeriodicJacobi& J, double lambda) {
    return run_pair<double>(J, lambda).discriminant();
}

cplx discriminant_value(const PeriodicJacobi& J, cplx lambda) { return run_pair<cplx>(J, lambda).discriminant(); }

ValueSlope<double> discriminant_with_slope(const PeriodicJacobi& J, double lambda) {
    return run_slope<double>(J, lambda);
}

ValueSlope<cplx> discriminant_with_slope(const PeriodicJacobi& J, cplx lambda) {
    return run_slope<cplx>(J, lambda);
}

std::vector<double> discriminant_derivatives(const PeriodicJacobi& J, double lambda, int order) {
    const int q = J.period();
    const auto width = static_cast<std::size_t>(order) + 1;
    // [k] = k-th derivative of psi_{n-1}, psi_n
    std::vector<double> p0(width, 0.0), p1(width, 0.0), t0(width, 0.0), t1(width, 0.0);
    std::vector<double> p2(width), t2(width);
    p1[0] = 1.0;
    t0[0] = 1.0;
    for (int n = 1; n <= q; ++n) {
        const double an = J.a_at(n);
        const double anm1 = J.a_at(n - 1);
        const double shift = lambda - J.b_at(n);
        for (std::size_t k = 0; k < width; ++k) {
            const double kd = static_cast<double>(k);
            const double p_lower = k > 0 ? p1[k - 1] : 0.0;
            const double t_lower = k > 0 ? t1[k - 1] : 0.0;
            p2[k] = (shift * p1[k] + kd * p_lower - anm1 * p0[k]) / an;
            t2[k] = (shift * t1[k] + kd * t_lower - anm1 * t0[k]) / an;
        }
        std::swap(p0, p1);
        std::swap(p1, p2);
        std::swap(t0, t1);
        std::swap(t1, t2);
    }
    std::vector<double> out(width);
    for (std::size_t k = 0; k < width; ++k) out[k] = p1[k] + t0[k];
    return out;
}

double discriminant_scale(const PeriodicJacobi& J, double lambda) {
    const int q = J.period();
    double p0 = 0.0, p1 = 1.0, t0 = 1.0, t1 = 0.0;
    for (int n = 1; n <= q; ++n) {
        const double an = J.a_at(n);
        const double anm1 = J.a_at(n - 1);
        const double shift = std::abs(lambda) + std::abs(J.b_at(n));
        const double p2 = (shift * p1 + anm1 * p0) / an;
        const double t2 = (shift * t1 + anm1 * t0) / an;
        p0 = p1;
        p1 = p2;
        t0 = t1;
        t1 = t2;
    }
    return p1 + t0;
}

namespace {

// p * (lambda - beta)
Polynomial times_linear(const Polynomial& p, double beta) {
    Polynomial out;
    out.coeffs.assign(p.coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        out.coeffs[k + 1] += p.coeffs[k];
        out.coeffs[k] -= beta * p.coeffs[k];
    }
    return out;
}

// x - s * y, sized to the larger operand
Polynomial axpy(const Polynomial& x, double s, const Polynomial& y) {
    Polynomial out;
    out.coeffs.assign(std::max(x.coeffs.size(), y.coeffs.size()), 0.0);
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) out.coeffs[k] += x.coeffs[k];
    for (std::size_t k = 0; k < y.coeffs.size(); ++k) out.coeffs[k] -= s * y.coeffs[k];
    return out;
}

}  // namespace

std::vector<double> critical_points(const PeriodicJacobi& J) {
    const int q = J.period();
    const Interval g = gershgorin_interval(J);
    const double pad = 1e-3 * (1.0 + g.width());
    const double lo = g.lo - pad;
    const double hi = g.hi + pad;

    // roots of D^(k+1) bracket those of D^(k); D is real-rooted with simple
    // roots, hence so is every derivative.
    std::vector<double> roots;  // roots of D^(k+1), starts empty for k = q-1
    for (int k = q - 1; k >= 1; --k) {
        auto f = [&J, k](double x) { return discriminant_derivatives(J, x, k)[static_cast<std::size_t>(k)]; };
        std::vector<double> brackets;
        brackets.reserve(roots.size() + 2);
        brackets.push_back(lo);
        brackets.insert(brackets.end(), roots.begin(), roots.end());
        brackets.push_back(hi);
        std::vector<double> next;
        next.reserve(brackets.size() - 1);
        for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
            next.push_back(numeric::bisect(f, brackets[i], brackets[i + 1], 0.0));
        }
        roots = std::move(next);
    }
    if (static_cast<int>(roots.size()) != q - 1) {
        throw NumericalError("found " + std::to_string(roots.size()) + " critical points, expected " +
                             std::to_string(q - 1));
    }
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (!(roots[i] > roots[i - 1])) throw NumericalError("critical points are not strictly increasing");
    }
    // |D| >= 2 at every critical point, with alternating signs
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double d = discriminant_value(J, roots[i]);
        const double tol = 1e-9 + 8.0 * q * 2.2e-16 * discriminant_scale(J, roots[i]);
        if (std::abs(d) < 2.0 - tol) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "|D| = " << std::abs(d) << " < 2 at critical point " << roots[i];
            throw NumericalError(msg.str());
        }
        // the last critical point is a minimum
        const bool expect_positive = ((q - 2 - static_cast<int>(i)) % 2) == 1;
        if ((d > 0.0) != expect_positive) throw NumericalError("critical values do not alternate in sign");
    }
    return roots;
}

DiscriminantRep discriminant_poly(const PeriodicJacobi& J) {
    const int q = J.period();
    // D_{1j}: leading principal minors of lambda - L with the corners zeroed
    Polynomial d1_prev{{0.0}};  // D_{1,-1}
    Polynomial d1_cur{{1.0}};   // D_{1,0}
    for (int j = 1; j <= q; ++j) {
        const double a2 = J.a_at(j - 1) * J.a_at(j - 1);
        Polynomial next = axpy(times_linear(d1_cur, J.b_at(j)), j == 1 ? 0.0 : a2, d1_prev);
        d1_prev = std::move(d1_cur);
        d1_cur = std::move(next);
    }
    // D_{2j}: same with the first row and column removed; D_{2,1} = 1
    Polynomial d2_prev{{0.0}};  // D_{2,0}
    Polynomial d2_cur{{1.0}};   // D_{2,1}
    for (int j = 2; j <= q - 1; ++j) {
        const double a2 = J.a_at(j - 1) * J.a_at(j - 1);
        Polynomial next = axpy(times_linear(d2_cur, J.b_at(j)), a2, d2_prev);
        d2_prev = std::move(d2_cur);
        d2_cur = std::move(next);
    }
    const double aq2 = J.a_at(q) * J.a_at(q);
    Polynomial det = axpy(d1_cur, aq2, d2_cur);

    double prod = 1.0;
    for (double an : J.a()) prod *= an;
    DiscriminantRep rep;
    rep.poly = det;
    for (double& c : rep.poly.coeffs) c /= prod;
    rep.derivative = rep.poly.derivative();
    rep.critical_points = critical_points(J);
    return rep;
}

MonicPair monic_pair(const PeriodicJacobi& J) {
    const int q = J.period();
    Polynomial prev{{0.0}};  // hat phi_0
    Polynomial cur{{1.0}};   // hat phi_1
    for (int n = 1; n <= q; ++n) {
        const double a2 = n == 1 ? 0.0 : J.a_at(n - 1) * J.a_at(n - 1);
        Polynomial next = axpy(times_linear(cur, J.b_at(n)), a2, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    double prod = 1.0;
    for (double an : J.a()) prod *= an;
    return MonicPair{std::move(cur), std::move(prev), 1.0 / prod};
}

PeriodicJacobi reconstruct_from_monic_pair(const Polynomial& phi_hat_q1, const Polynomial& phi_hat_q,
                                           double leading) {
    const int q = phi_hat_q1.degree();
    if (q < 2) throw InputError("hat phi_{q+1} must have degree q >= 2");
    if (phi_hat_q.degree() != q - 1) throw InputError("hat phi_q must have degree q - 1");
    auto is_monic = [](const Polynomial& p) { return std::abs(p.leading() - 1.0) <= 1e-12; };
    if (!is_monic(phi_hat_q1) || !is_monic(phi_hat_q)) throw InputError("polynomials must be monic");
    if (!(leading > 0.0) || !std::isfinite(leading)) throw InputError("leading coefficient must be positive");

    std::vector<double> a(static_cast<std::size_t>(q), 0.0);
    std::vector<double> b(static_cast<std::size_t>(q), 0.0);
    Polynomial upper = phi_hat_q1;  // hat phi_{n+1}
    Polynomial middle = phi_hat_q;  // hat phi_n
    for (int n = q; n >= 2; --n) {
        // hat phi_n = lambda^{n-1} + alpha_n^{n-2} lambda^{n-2} + ...
        const double bn = middle.coeff(n - 2) - upper.coeff(n - 1);
        double radicand = middle.coeff(n - 3) - upper.coeff(n - 2) - bn * middle.coeff(n - 2);
        if (radicand < -1e-10) {
            std::ostringstream msg;
            msg << "inconsistent polynomial pair: a_" << n - 1 << "^2 = " << radicand << " < 0";
            throw InputError(msg.str());
        }
        if (radicand < 0.0) radicand = 0.0;
        if (radicand == 0.0) {
            throw InputError("inconsistent polynomial pair: a_" + std::to_string(n - 1) + " vanishes");
        }
        b[static_cast<std::size_t>(n - 1)] = bn;
        a[static_cast<std::size_t>(n - 2)] = std::sqrt(radicand);

        // hat phi_{n-1} = -(hat phi_{n+1} + (b_n - lambda) hat phi_n) / a_{n-1}^2
        Polynomial lower = axpy(upper, 1.0, times_linear(middle, bn));
        for (double& c : lower.coeffs) c /= -radicand;
        lower.coeffs.resize(static_cast<std::size_t>(n - 1));  // degree n - 2
        lower.coeffs.back() = 1.0;
        upper = std::move(middle);
        middle = std::move(lower);
    }
    // n = 1: hat phi_2 = lambda - b_1
    b[0] = -upper.coeff(0);
    double prod = 1.0;
    for (int n = 0; n < q - 1; ++n) prod *= a[static_cast<std::size_t>(n)];
    a[static_cast<std::size_t>(q - 1)] = 1.0 / (leading * prod);
    return PeriodicJacobi(std::move(a), std::move(b));
}

}  // namespace pjacobi
