#include <doctest.h>

#include <cmath>

#include "bergman/errors.hpp"
#include "bergman/inequalities.hpp"

using bergman::AnalyticFunction;
using bergman::CheckKind;
using bergman::complex;
using bergman::DiskQuadrature;
using bergman::HyperCase;

namespace {

const DiskQuadrature& quad2() {
    static const auto q = bergman::make_disk_quadrature(60, 2.0, 256);
    return q;
}

AnalyticFunction monomial() { return AnalyticFunction::power_series({0.0, 1.0}); }

} // namespace

TEST_CASE("auto_radius follows the two branches") {
    CHECK(bergman::auto_radius(2.0, 4.0, 2.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(bergman::auto_radius(0.5, 1.0, 1.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(bergman::auto_radius(0.5, 1.0, 3.0) == doctest::Approx(std::sqrt(0.4)).epsilon(1e-15));
    CHECK(bergman::auto_radius(1.0, 1.5, 3.0) ==
          doctest::Approx(std::sqrt(4.0 / 7.0)).epsilon(1e-15));
    CHECK_THROWS_AS(bergman::auto_radius(4.0, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("HyperCase validation and derived beta") {
    CHECK(HyperCase(monomial(), 2.0, 4.0, 2.0, 0.5).beta() == 4.0);
    CHECK_THROWS_AS(HyperCase(monomial(), 4.0, 2.0, 2.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(HyperCase(monomial(), 2.0, 4.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(HyperCase(monomial(), 2.0, 4.0, 2.0, 1.5), std::invalid_argument);
}

TEST_CASE("check_hypercontractivity: constants saturate") {
    const HyperCase cse(AnalyticFunction::power_series({complex(0.0, 2.0)}), 2.0, 4.0, 2.0, 0.3);
    const auto rep = bergman::check_hypercontractivity(cse, quad2(), quad2());
    CHECK(rep.pass);
    CHECK(std::abs(rep.margin) < 1e-12);
    CHECK(rep.lhs == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(rep.pass == (rep.margin >= -rep.tol));
}

TEST_CASE("check_hypercontractivity: monomial closed form at r = sqrt(p/q)") {
    const HyperCase cse(monomial(), 2.0, 4.0, 2.0, std::sqrt(0.5));
    const auto rep = bergman::check_hypercontractivity(cse, quad2(), quad2());
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(0.537284965911771).epsilon(1e-10));
    CHECK(rep.rhs == doctest::Approx(0.707106781186548).epsilon(1e-10));
    CHECK(rep.kind == CheckKind::Hypercontractivity);
    CHECK(*rep.r == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("check_hypercontractivity: perturbed constant passes with nonnegative margin") {
    const HyperCase cse(AnalyticFunction::power_series({1.0, 0.5}), 2.0, 4.0, 2.0, std::sqrt(0.5));
    const auto rep = bergman::check_hypercontractivity(cse, quad2(), quad2());
    CHECK(rep.pass);
    CHECK(rep.margin >= 0.0);
}

TEST_CASE("check_hypercontractivity: divergent input raises, does not fail") {
    const auto quad15 = bergman::make_disk_quadrature(60, 1.5, 64);
    const HyperCase cse(AnalyticFunction::binomial_power(1.0, 0.999999, 400.0), 15.0, 16.0, 1.5,
                        0.5);
    CHECK_THROWS_AS(bergman::check_hypercontractivity(cse, quad15, quad15),
                    bergman::divergence_error);
}

TEST_CASE("check_kulikov: constants, extremizers, random instance") {
    const auto quad_beta = bergman::make_disk_quadrature(60, 4.0, 256);
    const auto c = AnalyticFunction::power_series({complex(1.1, -0.3)});
    const auto rep_c = bergman::check_kulikov(c, 2.0, 4.0, 2.0, quad_beta, quad2());
    CHECK(rep_c.pass);
    CHECK(std::abs(rep_c.margin) < 1e-12);

    // extremizer f = (1 - a z)^{-2 alpha/p}: both sides equal (1-|a|^2)^{-alpha/p}
    const auto extremal = AnalyticFunction::binomial_power(1.0, 0.3, 2.0);
    const auto rep_e = bergman::check_kulikov(extremal, 2.0, 4.0, 2.0, quad_beta, quad2());
    CHECK(std::abs(rep_e.margin) / rep_e.rhs <= 1e-6);
    CHECK(rep_e.lhs == doctest::Approx(1.0 / 0.91).epsilon(1e-6));
    CHECK(rep_e.rhs == doctest::Approx(1.0 / 0.91).epsilon(1e-6));
    CHECK(*rep_e.beta == doctest::Approx(4.0));

    const auto quad_a = bergman::make_disk_quadrature(60, 1.5, 256);
    const auto quad_b = bergman::make_disk_quadrature(60, 4.5, 256);
    const auto rep_r =
        bergman::check_kulikov(bergman::random_polynomial(6, 5, 0.9), 1.0, 3.0, 1.5, quad_b, quad_a);
    CHECK(rep_r.pass);

    // rule built for the wrong measure is rejected
    CHECK_THROWS_AS(bergman::check_kulikov(c, 2.0, 4.0, 2.0, quad2(), quad2()),
                    std::invalid_argument);
}

TEST_CASE("check_dilation_embedding: monomial counterexample at q=1 and equality at q=2") {
    const auto quad_b = bergman::make_disk_quadrature(60, 4.0, 256);

    const auto rep = bergman::check_dilation_embedding(monomial(), 1.0, 2.0, 4.0, quad2(), quad_b);
    CHECK_FALSE(rep.pass);
    CHECK(rep.lhs == doctest::Approx(0.471404520791032).epsilon(1e-9));
    CHECK(rep.rhs == doctest::Approx(0.457142857142857).epsilon(1e-9));
    CHECK(rep.lhs - rep.rhs == doctest::Approx(0.0142616636481745).epsilon(1e-7));

    const auto rep2 = bergman::check_dilation_embedding(monomial(), 2.0, 2.0, 4.0, quad2(), quad_b);
    CHECK(rep2.pass);
    CHECK(rep2.lhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rep2.rhs == doctest::Approx(0.25).epsilon(1e-12));

    const auto rep_c = bergman::check_dilation_embedding(
        AnalyticFunction::power_series({complex(0.0, 0.7)}), 1.5, 2.0, 4.0, quad2(), quad_b);
    CHECK(std::abs(rep_c.margin) < 1e-12);

    CHECK_THROWS_AS(bergman::check_dilation_embedding(monomial(), 1.0, 4.0, 2.0, quad_b, quad2()),
                    std::invalid_argument);
}

TEST_CASE("check_pointwise_bound: endpoint equality and interior sample") {
    const auto rep = bergman::check_pointwise_bound(2.0, 4.0);
    CHECK(rep.pass);
    CHECK(rep.lhs <= rep.tol);
    CHECK(rep.lhs >= 0.0); // y = 0 gives equality, so the max is never negative
    REQUIRE(rep.worst_y.has_value());
    CHECK(*rep.worst_y >= 0.0);
    CHECK(*rep.worst_y <= 0.5);

    // direct arithmetic at y = 0.25: (1-0.5)^2 = 0.25 <= 0.75^4
    CHECK(std::pow(1.0 - 0.25 / 0.5, 2.0) == doctest::Approx(0.25));
    CHECK(std::pow(0.75, 4.0) == doctest::Approx(0.31640625));

    CHECK_THROWS_AS(bergman::check_pointwise_bound(4.0, 2.0), std::invalid_argument);
}

TEST_CASE("convexity_profile: monomial second differences") {
    const std::vector<double> grid{0.2, 0.5, 0.8};

    for (const auto& [y, dd] : bergman::convexity_profile(monomial(), 2.0, grid))
        CHECK(std::abs(dd) < 1e-7); // M(y) = y is linear

    for (const auto& [y, dd] : bergman::convexity_profile(monomial(), 4.0, grid))
        CHECK(dd == doctest::Approx(2.0).epsilon(1e-6)); // M(y) = y^2

    for (const auto& [y, dd] : bergman::convexity_profile(monomial(), 1.0, grid)) {
        const double expected = -0.25 * std::pow(y, -1.5); // M(y) = sqrt(y), concave
        CHECK(dd == doctest::Approx(expected).epsilon(1e-4));
        CHECK(dd < 0.0);
    }

    CHECK_THROWS_AS(bergman::convexity_profile(monomial(), 2.0, {0.5e-3}), std::invalid_argument);
}

TEST_CASE("laplacian identity: exact quadratic, affine reduction, analytic sample") {
    // f = z, p = 4: g = |z|^2, Laplacian 4, rhs |2 f'^2|^2 = 4
    CHECK(bergman::laplacian_identity_rhs(monomial(), 4.0, complex(0.3, 0.2)) ==
          doctest::Approx(4.0).epsilon(1e-14));
    CHECK(bergman::laplacian_identity_residual(monomial(), 4.0, complex(0.3, 0.2)) < 1e-7);

    // affine f: rhs reduces to (p-2)^2 |f|^{p-4} |f'|^4
    const auto affine = AnalyticFunction::power_series({1.0, complex(0.5, 0.25)});
    const complex z(0.1, -0.2);
    const double p = 3.2;
    const double expected = (p - 2.0) * (p - 2.0) *
                            std::pow(std::abs(affine.eval(z)), p - 4.0) *
                            std::pow(std::abs(affine.deriv_eval(z, 1)), 4.0);
    CHECK(bergman::laplacian_identity_rhs(affine, p, z) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(bergman::laplacian_identity_residual(affine, p, z) < 1e-6);

    const auto expf = AnalyticFunction::exp_linear(1.0, 1.0);
    CHECK(bergman::laplacian_identity_residual(expf, 3.0, complex(0.2, 0.1)) <= 1e-5);

    // preconditions
    CHECK_THROWS_AS(bergman::laplacian_identity_residual(monomial(), 4.0, complex(0.95, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(bergman::laplacian_identity_residual(monomial(), 4.0, complex(0.0, 0.0)),
                    bergman::singular_point_error);
    CHECK_THROWS_AS(
        bergman::laplacian_identity_residual(AnalyticFunction::power_series({1.0, 1.0}), 1.5,
                                             complex(0.2, 0.1)),
        std::invalid_argument);
}

TEST_CASE("check_log_sobolev: constants saturate and monomial closed form") {
    const auto c = AnalyticFunction::power_series({complex(0.0, 3.0)});
    const auto rep_c = bergman::check_log_sobolev(c, 2.0, 2.0, quad2());
    CHECK(rep_c.pass);
    CHECK(std::abs(rep_c.margin) < 1e-11);
    CHECK(rep_c.lhs == doctest::Approx(9.0 * std::log(3.0)).epsilon(1e-12));

    // the entropy integrand y*log(sqrt(y)) is log-singular at 0; 60 radial
    // nodes deliver ~1e-8 absolute accuracy there
    const auto rep = bergman::check_log_sobolev(monomial(), 2.0, 2.0, quad2());
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(-0.125).epsilon(5e-7));
    CHECK(rep.rhs == doctest::Approx(0.25 + 0.25 * std::log(0.5)).epsilon(1e-10));
    CHECK(rep.margin == doctest::Approx(0.201713204860014).epsilon(1e-6));

    const auto quad15 = bergman::make_disk_quadrature(60, 1.5, 256);
    const auto rep_p = bergman::check_log_sobolev(AnalyticFunction::power_series({1.0, 0.1}), 2.0,
                                                  1.5, quad15);
    CHECK(rep_p.pass);

    CHECK_THROWS_AS(bergman::check_log_sobolev(monomial(), 1.5, 2.0, quad2()),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        bergman::check_log_sobolev(AnalyticFunction::power_series({0.0}), 2.0, 2.0, quad2()),
        std::invalid_argument);
}

TEST_CASE("monomial_hyper_margin: closed forms and strictness") {
    const auto [lhs, rhs] = bergman::monomial_hyper_margin(2.0, 4.0, 2.0);
    CHECK(lhs == doctest::Approx(0.537284965911771).epsilon(1e-13));
    CHECK(rhs == doctest::Approx(0.707106781186548).epsilon(1e-13));
    CHECK(lhs < rhs);

    const auto [l2, r2] = bergman::monomial_hyper_margin(2.0, 2.0 + 1e-9, 2.0);
    CHECK(l2 == doctest::Approx(r2).epsilon(1e-8));

    const auto [l3, r3] = bergman::monomial_hyper_margin(0.5, 1.0, 1.1);
    CHECK(l3 < r3);
}

TEST_CASE("verdicts are scale invariant") {
    const auto quad_b = bergman::make_disk_quadrature(60, 4.0, 256);
    const auto f = bergman::random_polynomial(5, 17, 0.9);
    auto coeffs = std::get<bergman::PowerSeries>(f.repr()).coeffs;
    for (auto& a : coeffs) a *= complex(37.5, -12.0);
    const auto g = AnalyticFunction::power_series(coeffs);

    const auto hf = bergman::check_hypercontractivity(HyperCase(f, 2.0, 4.0, 2.0, std::sqrt(0.5)),
                                                      quad2(), quad2());
    const auto hg = bergman::check_hypercontractivity(HyperCase(g, 2.0, 4.0, 2.0, std::sqrt(0.5)),
                                                      quad2(), quad2());
    CHECK(hf.pass == hg.pass);
    CHECK((hf.margin >= 0) == (hg.margin >= 0));

    const auto kf = bergman::check_kulikov(f, 2.0, 4.0, 2.0, quad_b, quad2());
    const auto kg = bergman::check_kulikov(g, 2.0, 4.0, 2.0, quad_b, quad2());
    CHECK(kf.pass == kg.pass);

    // the failing counterexample keeps failing under scaling
    const auto mono_scaled = AnalyticFunction::power_series({0.0, complex(0.0, 55.0)});
    const auto ef = bergman::check_dilation_embedding(monomial(), 1.0, 2.0, 4.0, quad2(), quad_b);
    const auto eg = bergman::check_dilation_embedding(mono_scaled, 1.0, 2.0, 4.0, quad2(), quad_b);
    CHECK(ef.pass == eg.pass);
    CHECK((ef.margin < 0) == (eg.margin < 0));
}
