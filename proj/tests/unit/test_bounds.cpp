#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/random_ops.hpp"
#include "pjacobi/bounds.hpp"
#include "pjacobi/errors.hpp"

using namespace pjacobi;
using testsupport::Rng;

TEST_SUITE("bounds") {

TEST_CASE("record tolerance rule") {
    CHECK(make_record("x", 1.0, Relation::Greater, 0.5).satisfied);
    CHECK(make_record("x", 1.0, Relation::Greater, 1.0 + 5e-11).satisfied);
    CHECK_FALSE(make_record("x", 1.0, Relation::Greater, 1.0 + 5e-10).satisfied);
    CHECK_FALSE(make_record("x", 1.0, Relation::Less, 0.5).satisfied);
    const BoundRecord r = make_record("x", 2.0, Relation::LessEqual, 3.0);
    CHECK(r.margin == 1.0);
    CHECK(std::string(relation_symbol(Relation::GreaterEqual)) == ">=");
}

TEST_CASE("Harper(1,3,0) certificate") {
    const BoundsReport rep = certify(harper(1, 3, 0.0));
    CHECK(rep.summary.A == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.summary.c > 2.41);
    CHECK(rep.summary.input_trace_L2 == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(rep.at("c_gt_2A").satisfied);
    CHECK(rep.all_satisfied());
    CHECK_FALSE(rep.degenerate);
}

TEST_CASE("records come in a fixed order") {
    const BoundsReport rep = certify(make_jacobi(5, {1, 1.5, 0.6, 1.2, 0.8}, {-1, 0.5, 1.8, -0.3, 0.9}));
    const std::vector<std::string> names{"c_gt_2A",       "eq_c2",         "simple_est_1",  "simple_est_2",
                                         "simple_est_3",  "g1",            "g1_chain",      "g1p",
                                         "g2_lower",      "g2_upper",      "eL_bands_M",    "eL_bands_2c",
                                         "eL_gaps",       "lemma51_lower", "lemma51_upper", "lemma52_positive",
                                         "lemma52_upper", "lemma52_chain", "lemma53"};
    REQUIRE(rep.records.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(rep.records[i].name == names[i]);
    CHECK(certify(make_jacobi(2, {1, 2}, {0, 1})).records.size() == names.size() - 2);
    CHECK_THROWS_AS(rep.at("nope"), InputError);
}

TEST_CASE("constant operator is flagged degenerate") {
    const BoundsReport rep = certify(testsupport::constant_operator(2));
    CHECK(rep.degenerate);
    const BoundRecord& r = rep.at("c_gt_2A");
    CHECK(std::abs(r.margin) < 1e-12);
    CHECK(r.degenerate);
    for (const char* name : {"g1", "g1_chain", "g1p", "lemma51_lower", "lemma51_upper"}) {
        CHECK(std::isnan(rep.at(name).lhs));
        CHECK(rep.at(name).note == "degenerate: h_+ = 0");
    }
    CHECK(rep.all_satisfied());
}

TEST_CASE("random ensemble satisfies every inequality") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const PeriodicJacobi J = testsupport::random_operator(rng, testsupport::random_period(rng, 2, 6));
        const BoundsReport rep = certify(J);
        for (const BoundRecord& r : rep.records) {
            INFO(r.name << ": " << r.lhs << " " << relation_symbol(r.relation) << " " << r.rhs);
            CHECK(r.satisfied);
        }
        // strictness of g2 for open gaps
        CHECK(rep.at("g2_lower").margin > 0);
        CHECK(rep.at("g2_upper").margin > 0);
    }
}

TEST_CASE("Harper lower bound") {
    const double lb = harper_lower_bound();
    CHECK(lb > 2.41);
    CHECK(lb < 2.42);
    CHECK(lb * lb * (0.5 + std::log(lb / 2)) == doctest::Approx(4.0).epsilon(1e-13));
    const HarperBoundResult a = harper_bound_demo(1, 3);
    const HarperBoundResult b = harper_bound_demo(1, 5);
    CHECK(a.lower_bound == b.lower_bound);
    CHECK(a.holds);
    CHECK(b.holds);
    CHECK(a.trace_L2 == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(b.trace_L2 == doctest::Approx(20.0).epsilon(1e-14));
    for (double theta : {0.0, std::numbers::pi / 4, std::numbers::pi / 2}) {
        CHECK(harper_bound_demo(2, 5, theta).holds);
        CHECK(certify(harper(2, 5, theta)).all_satisfied());
    }
    CHECK_THROWS_AS(harper_bound_demo(1, 2), InputError);
    CHECK_THROWS_AS(harper_bound_demo(2, 4), InputError);
}

}  // TEST_SUITE
