#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"

namespace bergman {

enum class CheckKind {
    Hypercontractivity, // (Int |f(rz)|^q dA_a)^{1/q} <= (Int |f|^p dA_a)^{1/p}
    Kulikov,            // (Int |f|^q dA_b)^{1/q} <= (Int |f|^p dA_a)^{1/p}, b = q a / p
    DilationEmbedding,  // Int |f(rz)|^q dA_a <= Int |f|^q dA_b, r^2 = a/b
    PointwiseBound,     // (1 - y/r^2)^a <= (1-y)^b on [0, a/b]
    LogSobolev,
};

std::string_view check_kind_name(CheckKind kind);

struct QuadMeta {
    std::optional<int> radial_nodes;
    std::optional<int> angular_count;
    std::optional<double> alpha_lhs; // measure parameter used on each side
    std::optional<double> alpha_rhs;
};

/// Outcome of one inequality check. margin = rhs - lhs; tol is the absolute
/// tolerance applied to the margin, already scaled to the size of the
/// compared sides, so pass <=> margin >= -tol holds exactly as stored.
/// Optional fields are absent when a parameter does not apply to the check.
struct CheckReport {
    CheckKind kind = CheckKind::Hypercontractivity;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    double tol = 0.0;
    QuadMeta quad;

    std::optional<double> p, q, alpha, beta, r;
    std::optional<std::string> function_literal;
    std::optional<double> worst_y; // PointwiseBound: argmax of the violation
};

/// One hypercontractivity instance. Validates 0 < p < q, alpha > 1 and
/// r in [0,1] on construction.
struct HyperCase {
    HyperCase(AnalyticFunction f, double p, double q, double alpha, double r);

    AnalyticFunction f;
    double p;
    double q;
    double alpha;
    double r;

    double beta() const { return q * alpha / p; } // alpha/p = beta/q
};

/// Sharp dilation radius: sqrt(p/q) for q >= 2, and the proven branch
/// sqrt(max{p/2, p(alpha-1)/(q alpha - p)}) for q < 2.
double auto_radius(double p, double q, double alpha);

CheckReport check_hypercontractivity(const HyperCase& cse, const DiskQuadrature& quad_p,
                                     const DiskQuadrature& quad_q, double tol = 1e-8);

/// quad_beta must be built for beta = q*alpha/p, quad_alpha for alpha.
CheckReport check_kulikov(const AnalyticFunction& f, double p, double q, double alpha,
                          const DiskQuadrature& quad_beta, const DiskQuadrature& quad_alpha,
                          double tol = 1e-8);

/// Compares the unnormalized measure integrals (probability factors
/// included in dA): lhs uses alpha with the dilation r = sqrt(alpha/beta),
/// rhs uses beta. Requires beta > alpha > 1.
CheckReport check_dilation_embedding(const AnalyticFunction& f, double q, double alpha,
                                     double beta, const DiskQuadrature& quad_alpha,
                                     const DiskQuadrature& quad_beta, double tol = 1e-8);

/// Samples (1 - y/r^2)^alpha - (1-y)^beta on a uniform grid of n_samples
/// points covering [0, alpha/beta] including both endpoints; lhs is the
/// largest difference found, rhs is 0.
CheckReport check_pointwise_bound(double alpha, double beta, int n_samples = 10001,
                                  double tol = 1e-8);

/// Central second differences [M(y-h) - 2 M(y) + M(y+h)]/h^2 of the circle
/// mean M(y) = circle_mean(f, y, q, n_theta), one entry per grid point.
/// Every y must lie in (h, 1-h).
std::vector<std::pair<double, double>> convexity_profile(const AnalyticFunction& f, double q,
                                                         const std::vector<double>& y_grid,
                                                         double h = 1e-3, int n_theta = 256);

/// Closed-form right side |f|^{p-4} |(p-2) f'^2 + 2 f f''|^2 of the
/// Laplacian identity for g = |f|^{p-2} |f'|^2. Always >= 0.
double laplacian_identity_rhs(const AnalyticFunction& f, double p, complex z);

/// Normalized defect |FD_Laplacian(g, z, h) - rhs| / (1 + |rhs|), with g
/// built from exact derivative values and the five-point second-order
/// Laplacian stencil. Requires |z| <= 0.9, |f(z)| and |f'(z)| > 1e-6, and
/// p >= 2 or f zero-free.
double laplacian_identity_residual(const AnalyticFunction& f, double p, complex z,
                                   double h = 1e-4);

/// Entropy-energy inequality for p >= 2:
/// Int |f|^p log|f| dA_a <= 1/2 Re Int |f|^{p-2} conj(f) z f' dA_a
///                          + (1/p) N log N,  N = Int |f|^p dA_a.
/// The entropy integrand is clamped to its limit 0 where |f| < 1e-300.
CheckReport check_log_sobolev(const AnalyticFunction& f, double p, double alpha,
                              const DiskQuadrature& quad, double tol = 1e-8);

/// Closed forms for f(z) = z at r = sqrt(p/q):
/// lhs = sqrt(p/q) * (Gamma(q/2+1)Gamma(a)/Gamma(q/2+a))^{1/q},
/// rhs = (Gamma(p/2+1)Gamma(a)/Gamma(p/2+a))^{1/p}. No quadrature involved.
std::pair<double, double> monomial_hyper_margin(double p, double q, double alpha);

} // namespace bergman
