#pragma once

#include <vector>

#include "bergman/series.hpp"

namespace bergman {

/// Gauss-Jacobi rule in the radial variable y = |z|^2 for the probability
/// measure (alpha-1)(1-y)^{alpha-2} dy on [0,1]. The endpoint singularity
/// of the weight (alpha-2 in (-1,0) for alpha < 2) is absorbed into the
/// rule, never sampled. With n nodes the rule integrates y^m exactly for
/// m <= 2n-1; weights are positive and sum to 1.
struct RadialRule {
    double alpha = 0.0;
    std::vector<double> nodes;   // strictly increasing, in (0,1)
    std::vector<double> weights; // positive, sum to 1

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Radial rule paired with a uniform angular grid theta_j = 2*pi*j/N.
/// The angular trapezoid rule is exact for trigonometric polynomials of
/// degree < angular_count.
struct DiskQuadrature {
    RadialRule radial;
    int angular_count = 0;
};

/// Golub-Welsch construction from the Jacobi recurrence coefficients.
/// Deterministic for fixed (n, alpha); rejects alpha <= 1.
RadialRule gauss_jacobi_rule(int n, double alpha);

DiskQuadrature make_disk_quadrature(int radial_nodes, double alpha, int angular_count);

/// Normalized circle mean (1/2pi) * Int_0^{2pi} |f(sqrt(y) e^{i theta})|^q dtheta
/// by the angular trapezoid rule.
double circle_mean(const AnalyticFunction& f, double y, double q, int n_theta);

/// Int_D |f|^p dA_alpha via the polar reduction
/// (alpha-1) * Int_0^1 (1-y)^{alpha-2} * mean(y) dy. The rule must have been
/// built for the same alpha; a mismatch is rejected rather than silently
/// integrating against the wrong weight. Non-finite results raise
/// divergence_error.
double bergman_integral(const AnalyticFunction& f, double p, double alpha,
                        const DiskQuadrature& quad);

/// bergman_integral(...)^{1/p}.
double bergman_norm(const AnalyticFunction& f, double p, double alpha,
                    const DiskQuadrature& quad);

/// Closed form Int_D |z|^{2t} dA_alpha = Gamma(t+1)Gamma(alpha)/Gamma(t+alpha),
/// evaluated through log-Gamma.
double monomial_moment(double halfpower, double alpha);

/// Coefficient-side norm Sum |a_n|^2 n! Gamma(alpha)/Gamma(n+alpha), the
/// independent p = 2 oracle. Uses truncate_to_series through `degree`; the
/// caller picks `degree` large enough for the tail to be negligible.
double coefficient_norm2(const AnalyticFunction& f, double alpha, int degree);

} // namespace bergman
