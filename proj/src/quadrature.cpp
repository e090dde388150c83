#include "bergman/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bergman/errors.hpp"
#include "bergman/threading.hpp"

namespace bergman {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_alpha(const DiskQuadrature& quad, double alpha, const char* where) {
    // a wrong weight here would silently corrupt every downstream check
    if (std::abs(quad.radial.alpha - alpha) > 1e-12 * std::max(1.0, std::abs(alpha)))
        throw std::invalid_argument(std::string(where) +
                                    ": quadrature was built for a different alpha");
    if (quad.angular_count < 4)
        throw std::invalid_argument(std::string(where) + ": angular_count must be >= 4");
}

double pow_abs(double abs2, double q) {
    // |f|^q from |f|^2; the even cases dominate the corpus checks
    if (q == 2.0) return abs2;
    if (q == 4.0) return abs2 * abs2;
    if (q == 1.0) return std::sqrt(abs2);
    return std::pow(abs2, 0.5 * q);
}

} // namespace

RadialRule gauss_jacobi_rule(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: need at least one node");
    if (!(alpha > 1.0))
        throw std::invalid_argument("gauss_jacobi_rule: alpha must exceed 1");

    // Monic Jacobi recurrence coefficients for weight (1-x)^a (1+x)^b on
    // [-1,1] with a = alpha-2, b = 0, zeroth moment normalized to 1.
    const double a = alpha - 2.0;
    const double b = 0.0;
    const double ab = a + b;

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(0, n - 1));
    diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double two_k = 2.0 * k;
        diag[k] = (b * b - a * a) / ((two_k + ab) * (two_k + ab + 2.0));
        double beta_k;
        if (k == 1) {
            beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                     ((two_k + ab) * (two_k + ab) * (two_k + ab + 1.0) * (two_k + ab - 1.0));
        }
        sub[k - 1] = std::sqrt(beta_k);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigensolve failed");

    RadialRule rule;
    rule.alpha = alpha;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        rule.nodes[static_cast<std::size_t>(k)] = 0.5 * (1.0 + solver.eigenvalues()[k]);
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[static_cast<std::size_t>(k)] = v0 * v0;
    }
    for (int k = 0; k < n; ++k) {
        const double y = rule.nodes[static_cast<std::size_t>(k)];
        if (!(y > 0.0 && y < 1.0) || (k > 0 && y <= rule.nodes[static_cast<std::size_t>(k - 1)]))
            throw std::runtime_error("gauss_jacobi_rule: nodes left (0,1) or lost ordering");
    }
    return rule;
}

DiskQuadrature make_disk_quadrature(int radial_nodes, double alpha, int angular_count) {
    if (angular_count < 4)
        throw std::invalid_argument("make_disk_quadrature: angular_count must be >= 4");
    return DiskQuadrature{gauss_jacobi_rule(radial_nodes, alpha), angular_count};
}

namespace {

double circle_mean_with_dirs(const AnalyticFunction& f, double y, double q,
                             const std::vector<complex>& dirs) {
    const double rho = std::sqrt(y);
    double acc = 0.0;
    for (const complex& w : dirs) acc += pow_abs(std::norm(f.eval(rho * w)), q);
    return acc / static_cast<double>(dirs.size());
}

std::vector<complex> unit_circle(int n_theta) {
    std::vector<complex> dirs(static_cast<std::size_t>(n_theta));
    for (int j = 0; j < n_theta; ++j)
        dirs[static_cast<std::size_t>(j)] = std::polar(1.0, kTwoPi * j / n_theta);
    return dirs;
}

} // namespace

double circle_mean(const AnalyticFunction& f, double y, double q, int n_theta) {
    if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("circle_mean: y must lie in [0, 1]");
    if (!(q > 0.0)) throw std::invalid_argument("circle_mean: q must be positive");
    if (n_theta < 4) throw std::invalid_argument("circle_mean: n_theta must be >= 4");
    return circle_mean_with_dirs(f, y, q, unit_circle(n_theta));
}

double bergman_integral(const AnalyticFunction& f, double p, double alpha,
                        const DiskQuadrature& quad) {
    if (!(p > 0.0)) throw std::invalid_argument("bergman_integral: p must be positive");
    require_alpha(quad, alpha, "bergman_integral");

    const auto dirs = unit_circle(quad.angular_count);
    const auto& rule = quad.radial;
    const double value = detail::parallel_sum(rule.nodes.size(), [&](std::size_t k) {
        return rule.weights[k] * circle_mean_with_dirs(f, rule.nodes[k], p, dirs);
    });
    if (!std::isfinite(value))
        throw divergence_error("bergman integral is not finite for these parameters");
    return value;
}

double bergman_norm(const AnalyticFunction& f, double p, double alpha,
                    const DiskQuadrature& quad) {
    const double value = std::pow(bergman_integral(f, p, alpha, quad), 1.0 / p);
    if (!std::isfinite(value))
        throw divergence_error("bergman norm is not finite for these parameters");
    return value;
}

double monomial_moment(double halfpower, double alpha) {
    if (!(halfpower >= 0.0))
        throw std::invalid_argument("monomial_moment: halfpower must be >= 0");
    if (!(alpha > 1.0)) throw std::invalid_argument("monomial_moment: alpha must exceed 1");
    return std::exp(std::lgamma(halfpower + 1.0) + std::lgamma(alpha) -
                    std::lgamma(halfpower + alpha));
}

double coefficient_norm2(const AnalyticFunction& f, double alpha, int degree) {
    if (!(alpha > 1.0)) throw std::invalid_argument("coefficient_norm2: alpha must exceed 1");
    const auto series = f.truncate_to_series(degree);
    const auto& coeffs = std::get<PowerSeries>(series.repr()).coeffs;
    double acc = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        acc += std::norm(coeffs[n]) * monomial_moment(static_cast<double>(n), alpha);
    return acc;
}

} // namespace bergman
