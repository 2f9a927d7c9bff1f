#include "landau/errors.hpp"
#include "landau/radial_oracle.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

using namespace landau;
using namespace landau::oracle;
namespace geo = landau::geometry;
using spectra::FieldConfig;

TEST_CASE("radial problem examples") {
    const RadialProblem flat = build_radial_problem(geo::Disclination(1.0), {1.0, -1, 0.0}, 0, 0.0);
    CHECK(flat.J == 0.0);
    CHECK(flat.C2 == 0.25);
    CHECK(flat.C0 == 0.0);

    const RadialProblem screw =
        build_radial_problem(geo::ScrewDislocation(0.5, 2.0 * std::numbers::pi), {1.0, -1, 0.0}, 1, 2.0);
    CHECK(screw.J == doctest::Approx(1.0).epsilon(1e-15));

    const RadialProblem disp = build_radial_problem(geo::Dispiration(0.5, 0.0), {1.0, -1, 0.0}, 1, 0.0);
    CHECK(disp.J == 2.0);
}

TEST_CASE("unbound configurations are rejected") {
    CHECK_THROWS_AS(build_radial_problem(geo::Disclination(1.0), {0.0, -1, 0.0}, 0, 0.0), DomainError);
    CHECK_THROWS_AS(build_radial_problem(geo::KKDispiration(1.0, 0.0), {1.0, -1, 1.0}, 0, 0.0, -1.0), DomainError);
    CHECK_THROWS_AS(build_radial_problem(geo::KKDispiration(1.0, 0.0), {1.0, -1, 0.0}, 0, 0.0, 1.0), DomainError);
}

TEST_CASE("flat Landau ladder from the oracle") {
    const RadialProblem p{geo::Scenario::Disclination, 0.0, 0.0, 0.25, 0.0, "flat"};
    const OracleSpectrum s = solve_eigenvalues(p, 3, default_grid(p, 3));
    REQUIRE(s.energies.size() == 3);
    CHECK(s.energies[0] == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(s.energies[1] == doctest::Approx(1.5).epsilon(1e-5));
    CHECK(s.energies[2] == doctest::Approx(2.5).epsilon(1e-5));
    const OracleSpectrum r = solve_richardson(p, 3, default_grid(p, 3));
    CHECK(r.energies[2] == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("grid checks") {
    const RadialProblem p{geo::Scenario::Disclination, 1.5, 0.0, 0.25, 0.0, "check"};
    try {
        solve_eigenvalues(p, 3, {2048, 4.0});
        FAIL("expected ConfigurationError");
    } catch (const ConfigurationError& e) {
        const std::string what = e.what();
        CHECK(what.find("required rho_max") != std::string::npos);
    }
    CHECK_THROWS_AS(solve_eigenvalues(p, 3, {32, 100.0}), ConfigurationError);
    CHECK_THROWS_AS(solve_eigenvalues(p, 65, {256, 1000.0}), ConfigurationError);
    CHECK_NOTHROW(solve_eigenvalues(p, 64, {256, 1000.0}));
}

TEST_CASE("second-order convergence of the ground state") {
    // |e_N - e_2N| / |e_2N - e_4N| near 4; the regular J = 0 ground state
    // converges at fourth order (ratio near 16). The wall sits at twice the
    // default radius so its first-order truncation term stays out of view.
    struct Case { const char* name; geo::DefectDescriptor d; FieldConfig f; int l; double k; double Q; bool smooth; };
    const Case cases[] = {
        {"flat", geo::Disclination(1.0), {1.0, -1, 0.0}, 0, 0.0, 0.0, true},
        {"disclination", geo::Disclination(0.7), {1.0, 1, 0.0}, 1, 0.0, 0.0, false},
        {"screw", geo::ScrewDislocation(0.3, 1.0), {1.0, -1, 0.0}, 0, 1.0, 0.0, false},
        {"dispiration", geo::Dispiration(0.5, 0.3), {1.0, 1, 0.0}, 1, 1.0, 0.0, false},
        {"kk", geo::KKDispiration(1.5, 0.25), {1.0, -1, 1.0}, -1, 1.0, 1.0, false},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        const RadialProblem p = build_radial_problem(c.d, c.f, c.l, c.k, c.Q);
        const double rho_max = 2.0 * default_grid(p, 1).rho_max;
        const double e1 = solve_eigenvalues(p, 1, {256, rho_max}).energies[0];
        const double e2 = solve_eigenvalues(p, 1, {512, rho_max}).energies[0];
        const double e4 = solve_eigenvalues(p, 1, {1024, rho_max}).energies[0];
        const double ratio = (e1 - e2) / (e2 - e4);
        MESSAGE(std::string(c.name), " J=", p.J, " ratio=", ratio);
        if (c.smooth) {
            CHECK(ratio >= 14.0);
            CHECK(ratio <= 18.0);
        } else {
            CHECK(ratio >= 3.5);
            CHECK(ratio <= 4.5);
        }
    }
}

TEST_CASE("eigenvalues increase with n and with C2") {
    for (double J : {0.0, 0.3, 1.0, 2.7}) {
        const RadialProblem weak{geo::Scenario::Dispiration, J, 0.1, 0.2, 0.0, "weak"};
        RadialProblem strong = weak;
        strong.C2 = 0.3;
        const GridSpec grid = default_grid(weak, 6, 1024);
        const auto a = solve_eigenvalues(weak, 6, grid).energies;
        const auto b = solve_eigenvalues(strong, 6, grid).energies;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0) CHECK(a[i] > a[i - 1]);
            CHECK(b[i] > a[i]);
        }
    }
}

TEST_CASE("building a problem twice is bit-identical") {
    const FieldConfig f{1.3, 1, 0.7};
    const geo::DefectDescriptor defects[] = {geo::Disclination(0.7), geo::DisclinationDisk(0.3, 1.0),
                                             geo::ScrewDislocation(0.3, 0.8), geo::Dispiration(0.4, 0.6),
                                             geo::KKDispiration(1.2, 0.3)};
    for (const auto& d : defects) {
        const RadialProblem a = build_radial_problem(d, f, -2, 0.9, 1.1);
        const RadialProblem b = build_radial_problem(d, f, -2, 0.9, 1.1);
        CHECK(a.same_operator(b));
        CHECK(a.description == b.description);
    }
}

TEST_CASE("flux cancellation at the operator level") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> beta(-1.5, 1.5), k(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double b = beta(rng), kk = k(rng);
        for (int l = -3; l <= 3; ++l) {
            const RadialProblem twisted = build_radial_problem(
                geo::ScrewDislocation(b, geo::cancellation_flux(b, kk)), {1.0, -1, 0.0}, l, kk);
            const RadialProblem flat = build_radial_problem(geo::ScrewDislocation(0.0, 0.0), {1.0, -1, 0.0}, l, kk);
            CHECK(twisted.same_operator(flat));
        }
    }
}

TEST_CASE("cross validation") {
    SUBCASE("flat sweep with N = 4096") {
        ValidationRequest r;
        r.l_values = {-3, -2, -1, 0, 1, 2, 3};
        r.options.N = 4096;
        const ValidationReport rep = cross_validate(geo::Disclination(1.0), {1.0, -1, 0.0}, r);
        CHECK(rep.all_pass);
        CHECK(rep.rows.size() == 35);
    }
    SUBCASE("dispiration alpha = 0.5, beta = 0.3, k = 1") {
        ValidationRequest r;
        r.l_values = {-2, -1, 0, 1, 2};
        r.k = 1.0;
        const ValidationReport rep = cross_validate(geo::Dispiration(0.5, 0.3), {1.0, 1, 0.0}, r);
        CHECK(rep.all_pass);
        CHECK(rep.max_rel_dev < 1e-8);
    }
    SUBCASE("mutation: dropping 1/alpha on nu is caught") {
        ValidationRequest r;
        r.l_values = {-2, -1, 0, 1, 2};
        r.k = 1.0;
        const double alpha = 0.5, beta = 0.3;
        const FieldConfig f{1.0, 1, 0.0};
        const auto mutated = [&](const spectra::QuantumNumbers& qn) {
            const double mu = qn.l - beta * qn.k;
            return (f.omega / alpha) * (qn.n + std::abs(mu) / 2.0 - mu / 2.0 + 0.5) + 0.5 * qn.k * qn.k;
        };
        const ValidationReport rep = cross_validate(geo::Dispiration(alpha, beta), f, r, mutated);
        CHECK_FALSE(rep.all_pass);
    }
    SUBCASE("coarse grid failures are report content") {
        ValidationRequest r;
        r.l_values = {0};
        r.options = {64, std::nullopt, false};
        const ValidationReport rep = cross_validate(geo::Disclination(1.0), {1.0, -1, 0.0}, r);
        CHECK_FALSE(rep.all_pass);
    }
    SUBCASE("configuration errors are attached to rows") {
        ValidationRequest r;
        r.l_values = {0};
        r.options.rho_max = 1.0;
        const ValidationReport rep = cross_validate(geo::Disclination(1.0), {1.0, -1, 0.0}, r);
        CHECK_FALSE(rep.all_pass);
        CHECK(rep.rows[0].error.find("rho_max") != std::string::npos);
    }
    SUBCASE("the disk scenario warns about the interior") {
        ValidationRequest r;
        r.l_values = {0, 1};
        const ValidationReport rep = cross_validate(geo::DisclinationDisk(0.4, 1.0), {1.0, -1, 0.0}, r);
        CHECK(rep.all_pass);
        CHECK_FALSE(rep.warnings.empty());
    }
}

TEST_CASE("KK operator reproduces the closed form including Q^2/2") {
    ValidationRequest r;
    r.l_values = {-2, 0, 2};
    r.k = 0.7;
    for (double Q : {0.5, 1.0, 2.0}) {
        r.Q = Q;
        const ValidationReport rep = cross_validate(geo::KKDispiration(0.8, 0.4), {1.0, -1, 1.0}, r);
        CHECK(rep.all_pass);
    }
}

TEST_CASE("discrete eigenvector satisfies the discrete operator") {
    const RadialProblem p = build_radial_problem(geo::Dispiration(0.6, 0.3), {1.0, 1, 0.0}, 1, 1.0);
    const GridSpec grid = default_grid(p, 3, 1024);
    const OracleState s = solve_state(p, 2, grid);
    const DiscreteRadialOperator op = discretize(p, grid);
    CHECK(op.residual(s.values, s.energy) < 1e-9);
    CHECK(s.energy == doctest::Approx(solve_eigenvalues(p, 3, grid).energies[2]).epsilon(1e-14));
}
