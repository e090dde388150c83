#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bergman/errors.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/threading.hpp"

using bergman::AnalyticFunction;
using bergman::complex;

namespace {

// independent Gamma-moment oracle for Int y^m against (a-1)(1-y)^{a-2} dy
double gamma_moment(double m, double alpha) {
    return std::exp(std::lgamma(m + 1.0) + std::lgamma(alpha) - std::lgamma(m + alpha));
}

} // namespace

TEST_CASE("gauss_jacobi_rule: single node matches the first two moments") {
    // moment-matching oracle: node = Int y dmu, weight = Int dmu
    const auto rule = bergman::gauss_jacobi_rule(1, 2.0);
    REQUIRE(rule.size() == 1);
    CHECK(rule.nodes[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

    const auto rule15 = bergman::gauss_jacobi_rule(1, 1.5);
    CHECK(rule15.nodes[0] == doctest::Approx(gamma_moment(1.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("gauss_jacobi_rule: weights normalized, nodes interior and increasing") {
    for (const double alpha : {1.1, 1.5, 2.0, 2.5, 4.0}) {
        for (const int n : {1, 5, 20, 60}) {
            const auto rule = bergman::gauss_jacobi_rule(n, alpha);
            double sum = 0.0;
            for (int k = 0; k < n; ++k) {
                CHECK(rule.weights[k] > 0.0);
                CHECK(rule.nodes[k] > 0.0);
                CHECK(rule.nodes[k] < 1.0);
                if (k) CHECK(rule.nodes[k] > rule.nodes[k - 1]);
                sum += rule.weights[k];
            }
            CHECK(std::abs(sum - 1.0) < 1e-13);
        }
    }
    CHECK_THROWS_AS(bergman::gauss_jacobi_rule(5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bergman::gauss_jacobi_rule(0, 2.0), std::invalid_argument);
}

TEST_CASE("gauss_jacobi_rule: first moment at n=20, alpha=1.5") {
    const auto rule = bergman::gauss_jacobi_rule(20, 1.5);
    double m1 = 0.0;
    for (int k = 0; k < rule.size(); ++k) m1 += rule.weights[k] * rule.nodes[k];
    CHECK(m1 == doctest::Approx(2.0 / 3.0).epsilon(1e-13)); // Gamma(2)Gamma(1.5)/Gamma(2.5)
}

TEST_CASE("gauss_jacobi_rule: exact for y^m, m <= 2n-1") {
    for (const double alpha : {1.1, 1.5, 2.0, 2.5, 4.0}) {
        for (int n = 1; n <= 30; ++n) {
            const auto rule = bergman::gauss_jacobi_rule(n, alpha);
            for (int m = 0; m <= 2 * n - 1; ++m) {
                double got = 0.0;
                for (int k = 0; k < n; ++k)
                    got += rule.weights[k] * std::pow(rule.nodes[k], m);
                CHECK(std::abs(got - gamma_moment(m, alpha)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("circle_mean closed forms") {
    const auto mono = AnalyticFunction::power_series({0.0, 1.0});
    for (const double q : {0.7, 1.0, 2.0, 3.5})
        for (const double y : {0.1, 0.5, 0.9})
            CHECK(bergman::circle_mean(mono, y, q, 16) ==
                  doctest::Approx(std::pow(y, q / 2.0)).epsilon(1e-14));

    const auto c = AnalyticFunction::power_series({complex(0.3, -0.4)});
    CHECK(bergman::circle_mean(c, 0.37, 3.0, 8) == doctest::Approx(std::pow(0.5, 3.0)).epsilon(1e-14));

    // Parseval: |1+z|^2 averages to 1 + y; exact already at N_theta = 4
    const auto f = AnalyticFunction::power_series({1.0, 1.0});
    for (const double y : {0.0, 0.25, 1.0})
        CHECK(bergman::circle_mean(f, y, 2.0, 4) == doctest::Approx(1.0 + y).epsilon(1e-14));

    CHECK_THROWS_AS(bergman::circle_mean(f, -0.1, 2.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(bergman::circle_mean(f, 0.5, 2.0, 3), std::invalid_argument);
}

TEST_CASE("bergman_integral: probability measure and Gamma oracle values") {
    const auto quad = bergman::make_disk_quadrature(60, 2.0, 256);

    const auto c = AnalyticFunction::power_series({complex(0.0, -2.0)});
    CHECK(bergman::bergman_integral(c, 3.0, 2.0, quad) == doctest::Approx(8.0).epsilon(1e-13));

    const auto mono = AnalyticFunction::power_series({0.0, 1.0});
    CHECK(bergman::bergman_integral(mono, 2.0, 2.0, quad) == doctest::Approx(0.5).epsilon(1e-13));

    const auto f = AnalyticFunction::power_series({1.0, 1.0});
    CHECK(bergman::bergman_integral(f, 2.0, 2.0, quad) == doctest::Approx(1.5).epsilon(1e-13));

    // alpha mismatch between rule and argument is the dangerous silent bug
    CHECK_THROWS_AS(bergman::bergman_integral(f, 2.0, 3.0, quad), std::invalid_argument);
}

TEST_CASE("bergman_norm: homogeneity and closed form") {
    const auto quad = bergman::make_disk_quadrature(60, 2.0, 256);
    const auto mono = AnalyticFunction::power_series({0.0, 1.0});
    CHECK(bergman::bergman_norm(mono, 4.0, 2.0, quad) ==
          doctest::Approx(std::pow(1.0 / 3.0, 0.25)).epsilon(1e-13));

    const auto c = AnalyticFunction::power_series({complex(3.0, 4.0)});
    CHECK(bergman::bergman_norm(c, 1.5, 2.0, quad) == doctest::Approx(5.0).epsilon(1e-13));

    const auto f = bergman::random_polynomial(5, 3, 0.8);
    const complex scale(1.7, -0.4);
    auto scaled_coeffs = std::get<bergman::PowerSeries>(f.repr()).coeffs;
    for (auto& a : scaled_coeffs) a *= scale;
    const auto g = AnalyticFunction::power_series(scaled_coeffs);
    for (const double p : {0.7, 2.0, 3.0})
        CHECK(bergman::bergman_norm(g, p, 2.0, quad) ==
              doctest::Approx(std::abs(scale) * bergman::bergman_norm(f, p, 2.0, quad))
                  .epsilon(1e-12));
}

TEST_CASE("monomial_moment closed forms") {
    CHECK(bergman::monomial_moment(0.0, 3.7) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bergman::monomial_moment(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bergman::monomial_moment(0.5, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(bergman::monomial_moment(1.0, 0.9), std::invalid_argument);
}

TEST_CASE("coefficient_norm2: closed forms and cross-oracle agreement") {
    CHECK(bergman::coefficient_norm2(AnalyticFunction::power_series({complex(0.0, 1.5)}), 2.2, 0) ==
          doctest::Approx(2.25).epsilon(1e-14));
    CHECK(bergman::coefficient_norm2(AnalyticFunction::power_series({1.0, 1.0}), 2.0, 1) ==
          doctest::Approx(1.5).epsilon(1e-14));

    for (const double alpha : {1.5, 2.0, 3.0}) {
        const auto quad = bergman::make_disk_quadrature(40, alpha, 64);
        for (unsigned seed = 0; seed < 10; ++seed) {
            const auto f = bergman::random_polynomial(8, seed, 0.9);
            const double via_quad = bergman::bergman_integral(f, 2.0, alpha, quad);
            const double via_coeffs = bergman::coefficient_norm2(f, alpha, 8);
            CHECK(std::abs(via_quad - via_coeffs) <= 1e-9 * via_coeffs);
        }
    }
}

TEST_CASE("dilated integrals are nondecreasing in r") {
    for (const double alpha : {1.3, 2.0}) {
        const auto quad = bergman::make_disk_quadrature(60, alpha, 256);
        for (const double q : {0.7, 2.0, 3.0}) {
            for (unsigned seed = 0; seed < 5; ++seed) {
                const auto f = bergman::random_polynomial(6, 100 + seed, 0.9);
                double prev = 0.0;
                for (int i = 1; i <= 10; ++i) {
                    const double r = 0.1 * i;
                    const double val = bergman::bergman_integral(f.dilate(r), q, alpha, quad);
                    CHECK(val >= prev - 1e-12 * std::max(1.0, val));
                    prev = val;
                }
            }
        }
    }
}

TEST_CASE("bergman_norm is rotation invariant") {
    const auto quad = bergman::make_disk_quadrature(60, 1.7, 256);
    for (unsigned seed = 0; seed < 5; ++seed) {
        const auto f = bergman::random_polynomial(7, 200 + seed, 0.9);
        const auto g = f.rotate(1.234);
        for (const double p : {1.0, 2.0, 4.0}) {
            const double nf = bergman::bergman_norm(f, p, 1.7, quad);
            const double ng = bergman::bergman_norm(g, p, 1.7, quad);
            CHECK(std::abs(nf - ng) <= 1e-10 * std::max(1.0, nf));
        }
    }
}

TEST_CASE("divergence is reported as a distinct error") {
    const auto quad = bergman::make_disk_quadrature(60, 1.5, 64);
    const auto spike = AnalyticFunction::binomial_power(1.0, 0.999999, 400.0);
    CHECK_THROWS_AS(bergman::bergman_integral(spike, 15.0, 1.5, quad), bergman::divergence_error);
}

TEST_CASE("parallel radial sums agree with serial to roundoff") {
    const auto quad = bergman::make_disk_quadrature(80, 1.8, 128);
    const auto f = bergman::random_polynomial(6, 42, 0.9);
    const double serial = bergman::bergman_integral(f, 2.5, 1.8, quad);
    bergman::set_max_threads(4);
    const double parallel = bergman::bergman_integral(f, 2.5, 1.8, quad);
    bergman::set_max_threads(1);
    CHECK(parallel == doctest::Approx(serial).epsilon(1e-13));
}
