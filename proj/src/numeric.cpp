#include "pjacobi/numeric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>

#include "pjacobi/errors.hpp"

namespace pjacobi::numeric {

double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
    return bisect(f, lo, hi, f(lo), f(hi), rel_tol);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo, double fhi,
              double rel_tol) {
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "no sign change on [" << lo << ", " << hi << "]: f = " << flo << ", " << fhi;
        throw NumericalError(msg.str());
    }
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= rel_tol * (1.0 + std::abs(mid))) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

GaussRule compute_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

// Gauss-Kronrod 7/15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        resk += kWgk[static_cast<std::size_t>(j)] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[static_cast<std::size_t>(j / 2)] * (f1 + f2);
    }
    return {a, b, resk * half, std::abs((resk - resg) * half)};
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                              double rel_tol, int max_intervals) {
    QuadResult out;
    if (a == b) return out;
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double error = first.error;
    heap.push(first);
    while (error > std::max(abs_tol, rel_tol * std::abs(total)) &&
           static_cast<int>(heap.size()) < max_intervals) {
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;
        heap.pop();
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to shed the accumulated update roundoff
    total = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    out.value = total;
    out.error = error;
    return out;
}

std::pair<std::vector<double>, std::vector<double>> composite_rule(const std::vector<double>& breaks,
                                                                  int order) {
    const GaussRule& rule = gauss_legendre(order);
    std::vector<double> nodes;
    std::vector<double> weights;
    nodes.reserve(breaks.size() * static_cast<std::size_t>(order));
    weights.reserve(nodes.capacity());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i];
        const double hi = breaks[i + 1];
        if (!(hi > lo)) continue;
        const double center = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (int k = 0; k < order; ++k) {
            nodes.push_back(center + half * rule.nodes[static_cast<std::size_t>(k)]);
            weights.push_back(half * rule.weights[static_cast<std::size_t>(k)]);
        }
    }
    return {std::move(nodes), std::move(weights)};
}

std::vector<double> graded_breaks(double a, double b, bool grade_left, bool grade_right, double ratio,
                                  double min_size) {
    std::vector<double> left_part;
    std::vector<double> right_part;
    const double mid = (grade_left && grade_right) ? 0.5 * (a + b) : (grade_left ? b : a);

    // toward a: a, a + h_k, ..., mid with h shrinking geometrically
    if (grade_left) {
        double h = mid - a;
        std::vector<double> pts;
        while (h > min_size) {
            h *= ratio;
            pts.push_back(a + h);
        }
        left_part.push_back(a);
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) left_part.push_back(*it);
    } else {
        left_part.push_back(a);
    }
    if (grade_right) {
        double h = b - mid;
        while (h > min_size) {
            h *= ratio;
            right_part.push_back(b - h);
        }
    }
    std::vector<double> out = left_part;
    if (mid > out.back() && mid < b) out.push_back(mid);
    for (double x : right_part) {
        if (x > out.back() && x < b) out.push_back(x);
    }
    out.push_back(b);
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

}  // namespace pjacobi::numeric
