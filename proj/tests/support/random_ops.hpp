#pragma once

#include <random>
#include <vector>

#include "pjacobi/jacobi.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

/// a_n uniform in [0.5, 2], b_n uniform in [-2, 2].
inline pjacobi::PeriodicJacobi random_operator(Rng& rng, int q) {
    std::uniform_real_distribution<double> da(0.5, 2.0);
    std::uniform_real_distribution<double> db(-2.0, 2.0);
    std::vector<double> a(static_cast<std::size_t>(q));
    std::vector<double> b(static_cast<std::size_t>(q));
    for (auto& x : a) x = da(rng);
    for (auto& x : b) x = db(rng);
    return pjacobi::PeriodicJacobi(std::move(a), std::move(b));
}

inline int random_period(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline pjacobi::PeriodicJacobi constant_operator(int q, double a = 1.0, double b = 0.0) {
    return pjacobi::PeriodicJacobi(std::vector<double>(static_cast<std::size_t>(q), a),
                                   std::vector<double>(static_cast<std::size_t>(q), b));
}

}  // namespace testsupport
