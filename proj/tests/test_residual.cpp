#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <rdsim/catalog.hpp>
#include <rdsim/residual.hpp>

using namespace rdsim;

TEST_CASE("reduced-equation residual vanishes for every catalog system") {
    for (const auto& d : list_systems()) {
        const auto sys = make_system(d.name);
        INFO(d.name);
        const auto rep = ode_residual(sys, default_z_samples(sys, 300));
        CHECK(rep.method == "analytic-derivative");
        CHECK(rep.max_abs < 1e-8);
        CHECK(rep.l2 <= rep.max_abs + 1e-18);
        CHECK(rep.n_samples + rep.skipped == 300);
        CHECK(rep.n_samples >= 250);
    }
}

TEST_CASE("residual oracle is independent: finite differences agree") {
    for (const auto& d : list_systems()) {
        const auto sys = make_system(d.name);
        INFO(d.name);
        ResidualOptions opts;
        opts.mode = DerivativeMode::FiniteDifference;
        const auto rep = ode_residual(sys, default_z_samples(sys, 300), opts);
        CHECK(rep.method == "central-difference-richardson");
        CHECK(rep.max_abs < 1e-5);
    }
}

TEST_CASE("difference quotients converge at fourth order") {
    const auto sys = make_system("GR-GAUSS");
    const auto z = default_z_samples(sys, 120);
    ResidualOptions coarse, fine;
    coarse.mode = fine.mode = DerivativeMode::FiniteDifference;
    coarse.rel_step = 1e-2;
    fine.rel_step = 5e-3;
    const double e1 = ode_residual(sys, z, coarse).max_abs;
    const double e2 = ode_residual(sys, z, fine).max_abs;
    CHECK(e1 / e2 > 10.0);
    CHECK(e1 / e2 < 24.0);
}

TEST_CASE("first integral residual on the conserving family") {
    for (const char* name : {"FP-GAUSS", "NFP-GAUSS", "NFP-EXP", "NFP-QUAD", "NL-DIFF"}) {
        const auto sys = make_system(name);
        INFO(name);
        REQUIRE(sys.tau);
        const auto rep = first_integral_residual(sys, default_z_samples(sys, 300));
        CHECK(rep.max_abs < 1e-10);
    }
    CHECK_THROWS_AS(
        first_integral_residual(make_system("GR-GAUSS"), default_z_samples(make_system("GR-GAUSS"))),
        ContractError);
    CHECK_THROWS_WITH(
        first_integral_residual(make_system("GR-HALF"), {1.0}),
        Catch::Matchers::ContainsSubstring("mu = -alpha"));
}

TEST_CASE("full PDE residual vanishes for every catalog system") {
    for (const auto& d : list_systems()) {
        const auto sys = make_system(d.name);
        INFO(d.name);
        const auto rep = pde_residual(sys, default_xt_samples(sys, 300));
        CHECK(rep.max_abs < 1e-5);
        CHECK(rep.n_samples >= 250);
        CHECK(rep.step_sizes.size() == 2);
    }
}

TEST_CASE("half-line profile typo is refuted by the oracle") {
    // replacing exp(-c z) by exp(-c z / 2) must light up the residual
    auto sys = make_system("GR-HALF");
    const double c = sys.params.at("c");
    sys.y.value = [c](hp z) { return std::exp(-0.5L * c * z); };
    sys.y.d1 = [c](hp z) { return -0.5L * c * std::exp(-0.5L * c * z); };
    sys.y.d2 = [c](hp z) { return 0.25L * c * c * std::exp(-0.5L * c * z); };

    const auto rep = ode_residual(sys, default_z_samples(sys, 300));
    CHECK(rep.max_abs > 1e-2);

    // frozen: the defect limit at z -> 0 is (mu + beta c) - (mu + beta c / 2) = 0.5
    const auto near_zero = ode_residual(sys, {1e-3});
    CHECK(near_zero.max_abs == Catch::Approx(0.5).margin(0.01));
}

TEST_CASE("quadratic-mobility coefficient typo is refuted by the oracle") {
    // halving D while keeping the profile breaks the PDE by a visible margin
    auto sys = make_system("NFP-QUAD");
    const double alpha = sys.params.at("alpha");
    sys.D.eval = [alpha](hp, hp x, hp t) { return 0.5L * alpha * x * x / t; };

    const auto rep = pde_residual(sys, default_xt_samples(sys, 300));
    CHECK(rep.max_abs > 1e-2);

    const auto good = pde_residual(make_system("NFP-QUAD"), default_xt_samples(sys, 300));
    CHECK(good.max_abs < 1e-5);
}

TEST_CASE("stencils that would cross the boundary are skipped and counted") {
    const auto sys = make_system("GR-HALF");
    const auto rep = ode_residual(sys, {1e-6, 5.0});
    CHECK(rep.skipped == 1);
    CHECK(rep.n_samples == 1);

    const auto pde = pde_residual(sys, {{1e-6, 1.5}, {5.0, 1.5}});
    CHECK(pde.skipped == 1);
    CHECK(pde.n_samples == 1);
}

TEST_CASE("non-finite profile values are surfaced, not silently dropped") {
    auto sys = make_system("GR-GAUSS");
    sys.y.value = [](hp z) {
        return z > 5.0L ? std::numeric_limits<hp>::quiet_NaN() : std::exp(-0.5L * z * z);
    };
    sys.y.d1 = nullptr;
    sys.y.d2 = nullptr;
    CHECK_THROWS_AS(ode_residual(sys, {6.0}), NumericFailure);
}

TEST_CASE("analytic mode demands analytic derivatives") {
    auto sys = make_system("FP-GAUSS");
    sys.y.d1 = nullptr;
    sys.y.d2 = nullptr;
    ResidualOptions opts;
    opts.mode = DerivativeMode::Analytic;
    CHECK_THROWS_AS(ode_residual(sys, default_z_samples(sys, 10), opts), ContractError);
    // auto mode falls back to the difference quotient
    const auto rep = ode_residual(sys, default_z_samples(sys, 50));
    CHECK(rep.method == "central-difference-richardson");
}

TEST_CASE("pde residual refuses t <= 0") {
    const auto sys = make_system("FP-GAUSS");
    CHECK_THROWS_AS(pde_residual(sys, {{0.0, 0.0}}), DomainError);
}
