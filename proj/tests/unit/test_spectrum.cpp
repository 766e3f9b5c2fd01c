#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "../support/random_ops.hpp"
#include "pjacobi/errors.hpp"
#include "pjacobi/spectrum.hpp"

using namespace pjacobi;
using testsupport::Rng;

TEST_SUITE("spectrum") {

TEST_CASE("free q = 2 operator has a single closed gap") {
    const BandStructure B = band_edges(testsupport::constant_operator(2));
    REQUIRE(B.edges.size() == 4);
    CHECK(B.edges[0] == doctest::Approx(-2).epsilon(1e-13));
    CHECK(std::abs(B.edges[1]) < 1e-13);
    CHECK(std::abs(B.edges[2]) < 1e-13);
    CHECK(B.edges[3] == doctest::Approx(2).epsilon(1e-13));
    CHECK(B.closed[0]);
    CHECK(B.all_gaps_closed());
}

TEST_CASE("constant operators with artificial period are gapless") {
    for (int q : {3, 4, 6}) {
        const BandStructure B = band_edges(testsupport::constant_operator(q, 1.5, 0.25));
        CHECK(B.all_gaps_closed());
        CHECK(B.c == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(B.total_gap_width() == 0.0);
    }
}

TEST_CASE("edges satisfy |D| = 2 and alternate in sign") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int q = testsupport::random_period(rng, 2, 8);
        const PeriodicJacobi J = testsupport::random_operator(rng, q);
        const BandStructure B = band_edges(J);
        REQUIRE(B.edges.size() == static_cast<std::size_t>(2 * q));
        for (int m = 1; m <= q; ++m) {
            const Interval band = B.band(m);
            CHECK(band.lo <= band.hi);
            CHECK(std::abs(discriminant_value(J, band.lo)) == doctest::Approx(2.0).epsilon(1e-8));
            CHECK(std::abs(discriminant_value(J, band.hi)) == doctest::Approx(2.0).epsilon(1e-8));
            CHECK(std::abs(discriminant_value(J, band.mid())) <= 2.0);
        }
        for (int m = 1; m < q; ++m) {
            if (!B.closed[static_cast<std::size_t>(m - 1)]) {
                CHECK(std::abs(discriminant_value(J, B.gap(m).mid())) > 2.0);
            }
        }
        const Interval g = gershgorin_interval(J);
        CHECK(B.lower() >= g.lo - 1e-12);
        CHECK(B.upper() <= g.hi + 1e-12);
    }
}

TEST_CASE("band edges agree with the Bloch eigenvalue sweep") {
    const PeriodicJacobi H = harper(1, 3, 0.0);
    const BandStructure B = band_edges(H);
    const std::vector<Interval> oracle = bloch_oracle(H, 721);
    for (int m = 1; m <= 3; ++m) CHECK(interval_distance(B.band(m), oracle[static_cast<std::size_t>(m - 1)]) < 1e-9);

    Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const int q = testsupport::random_period(rng, 2, 6);
        const PeriodicJacobi J = testsupport::random_operator(rng, q);
        const BandStructure E = band_edges(J);
        const std::vector<Interval> bo = bloch_oracle(J, 181);
        for (int m = 1; m <= q; ++m) CHECK(interval_distance(E.band(m), bo[static_cast<std::size_t>(m - 1)]) < 1e-4 * E.c);
    }
}

TEST_CASE("theta = 0 and pi eigenvalues are exactly the D = +-2 edges") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int q = testsupport::random_period(rng, 2, 6);
        const PeriodicJacobi J = testsupport::random_operator(rng, q);
        const BandStructure B = band_edges(J);
        for (double theta : {0.0, std::numbers::pi}) {
            const double target = theta == 0.0 ? 2.0 : -2.0;
            for (double ev : testsupport::bloch_eigenvalues(J, theta)) {
                CHECK(discriminant_value(J, ev) == doctest::Approx(target).epsilon(1e-9).scale(1.0));
                double nearest = 1e300;
                for (double e : B.edges) nearest = std::min(nearest, std::abs(e - ev));
                CHECK(nearest < 1e-9);
            }
        }
    }
}

TEST_CASE("Jacobi-rotation eigenvalues match Eigen") {
    Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        const int q = testsupport::random_period(rng, 2, 8);
        const PeriodicJacobi J = testsupport::random_operator(rng, q);
        const double theta = testsupport::uniform(rng, 0, std::numbers::pi);
        const std::vector<double> ours = hermitian_eigenvalues(build_bloch_matrix(J, theta));
        const std::vector<double> ref = testsupport::bloch_eigenvalues(J, theta);
        for (int i = 0; i < q; ++i) CHECK(ours[static_cast<std::size_t>(i)] == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-11).scale(1.0));
    }
}

TEST_CASE("bloch_oracle needs at least three angles") {
    CHECK_THROWS_AS(bloch_oracle(harper(1, 3, 0.0), 2), InputError);
}

TEST_CASE("normalisation centres the spectrum") {
    const NormalizedOperator N = normalize(harper(1, 3, 0.0));
    CHECK(N.bands.lower() == doctest::Approx(-N.bands.c).epsilon(1e-12));
    CHECK(N.bands.upper() == doctest::Approx(N.bands.c).epsilon(1e-12));
    CHECK(std::abs(N.bands.lower() + N.bands.upper()) < 1e-12);
    CHECK(N.bands.c > 2.41);

    Rng rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        const PeriodicJacobi J = testsupport::random_operator(rng, testsupport::random_period(rng, 2, 6));
        const BandStructure raw = band_edges(J);
        const NormalizedOperator M = normalize(J);
        CHECK(M.bands.c == doctest::Approx(raw.c).epsilon(1e-12));
        CHECK(std::abs(M.bands.lower() + M.bands.upper()) < 1e-11);
        for (std::size_t i = 0; i < raw.edges.size(); ++i)
            CHECK(M.bands.edges[i] - raw.edges[i] == doctest::Approx(M.bands.shift).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("strip coordinates of the gaps") {
    const NormalizedOperator N = normalize(make_jacobi(4, {0.7, 1.3, 0.9, 1.6}, {0.4, -1.1, 1.7, 0.2}));
    const ZGapSet Z = z_coordinates(N.bands);
    REQUIRE(Z.gaps.size() == 3);
    double prev = 0.0;
    for (std::size_t n = 0; n < Z.gaps.size(); ++n) {
        CHECK(Z.gaps[n].lo > prev);
        CHECK(Z.gaps[n].hi > Z.gaps[n].lo);
        CHECK(Z.gaps[n].hi < std::numbers::pi);
        CHECK(-N.bands.c * std::cos(Z.gaps[n].lo) == doctest::Approx(N.bands.gap(static_cast<int>(n) + 1).lo).epsilon(1e-12));
        prev = Z.gaps[n].hi;
    }
    CHECK(Z.total_width_squared() < Z.total_width() * Z.total_width());
    CHECK(strip_coordinate(-N.bands.c, N.bands.c) == 0.0);
    CHECK(strip_coordinate(N.bands.c, N.bands.c) == doctest::Approx(std::numbers::pi));
}

}  // TEST_SUITE
