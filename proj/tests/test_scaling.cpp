#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <rdsim/catalog.hpp>
#include <rdsim/numerics.hpp>
#include <rdsim/profile.hpp>
#include <rdsim/scale_check.hpp>
#include <rdsim/scaling.hpp>

using namespace rdsim;

TEST_CASE("derived exponents follow alpha and mu") {
    ScalingExponents e{0.6, -0.6};
    CHECK(e.nu() == Catch::Approx(0.2).margin(1e-15));
    CHECK(e.lambda() == Catch::Approx(-1.6).margin(1e-15));
    CHECK(e.conserving());

    ScalingExponents g{1.0, 0.5};
    CHECK(g.nu() == 1.0);
    CHECK(g.lambda() == -0.5);
    CHECK_FALSE(g.conserving());

    // conservation is an exact relation, not a tolerance band
    CHECK_FALSE(ScalingExponents{0.6, -0.6000001}.conserving());
}

TEST_CASE("similarity variable") {
    CHECK(static_cast<double>(similarity_variable(2.0L, 4.0L, 0.5)) == Catch::Approx(1.0));
    CHECK(static_cast<double>(similarity_variable(3.0L, 1.0L, 0.7)) == Catch::Approx(3.0));
    CHECK(static_cast<double>(similarity_variable(5.0L, 2.0L, 0.0)) == Catch::Approx(5.0));
    CHECK_THROWS_AS(similarity_variable(1.0L, 0.0L, 0.5), DomainError);
    CHECK_THROWS_AS(similarity_variable(1.0L, -2.0L, 0.5), DomainError);
}

TEST_CASE("similarity map round trip") {
    SimilarityMap map{ScalingExponents{0.37, -0.2}};
    for (double x : {-4.0, -0.5, 0.0, 1.0, 7.5}) {
        for (double t : {0.2, 1.0, 9.0}) {
            const double z = static_cast<double>(map.z(x, t));
            CHECK(static_cast<double>(map.x(z, t)) == Catch::Approx(x).margin(1e-14));
        }
    }
}

TEST_CASE("profile reconstruction W = t^mu y(x/t^alpha)") {
    Profile y;
    y.value = [](hp z) { return std::exp(-0.5L * z * z); };
    const auto W = reconstruct_w(y, ScalingExponents{1.0, 0.5});
    CHECK(static_cast<double>(W(0.0L, 4.0L)) == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(static_cast<double>(W(2.0L, 1.0L)) ==
          Catch::Approx(0.1353352832366127).epsilon(1e-14)); // e^{-2}
    CHECK_THROWS_AS(W(1.0L, 0.0L), DomainError);
}

TEST_CASE("least-squares slope helper") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 7; ++i) {
        xs.push_back(0.3 * i);
        ys.push_back(3.0 * 0.3 * i + 1.0);
    }
    CHECK(fitted_slope(xs, ys) == Catch::Approx(3.0).margin(1e-13));
}

TEST_CASE("scale invariance of a catalog solution") {
    const auto sys = make_system("FP-GAUSS");
    const auto samples = default_scale_samples(sys, 50);
    for (double eps : {0.5, 2.0, 10.0})
        CHECK(check_scale_invariance(sys, eps, samples) < 1e-12);
    CHECK_THROWS_AS(check_scale_invariance(sys, 0.0, samples), DomainError);
    CHECK_THROWS_AS(check_scale_invariance(sys, -1.0, samples), DomainError);
}

TEST_CASE("scale invariance detects a broken exponent") {
    auto sys = make_system("GR-GAUSS");
    sys.exponents.mu = 0.75; // claim a wrong growth exponent; W stays the 0.5 solution
    const auto samples = default_scale_samples(sys, 50);
    CHECK(check_scale_invariance(sys, 2.0, samples) > 1e-3);
}
