#pragma once

#include <cstdint>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"

namespace bergman {

struct CriticalRadiusResult {
    double r_crit = 1.0;        // in (0, 1]
    int iterations = 0;         // bisection steps performed
    double bracket_width = 0.0; // <= tol_r unless capped
    bool capped = false;        // inequality already holds at r = 1
};

/// Largest r for which the dilation inequality holds for this f, by
/// bisection on the sign of margin(r) = ||f||_{p,alpha} - ||f(r.)||_{q,alpha}
/// (the left side is nondecreasing in r). Both quadratures must be built
/// for alpha. Requires a finite, positive right-hand norm.
CriticalRadiusResult critical_radius(const AnalyticFunction& f, double p, double q,
                                     double alpha, const DiskQuadrature& quad_p,
                                     const DiskQuadrature& quad_q, double tol_r = 1e-6);

struct SharpnessRow {
    double epsilon;
    double r_crit;
    bool capped;
};

/// Critical radius of the perturbation family f_eps(z) = 1 + eps*z for each
/// requested eps in (0, 1]; rows come back sorted by eps ascending.
std::vector<SharpnessRow> sharpness_scan(double p, double q, double alpha,
                                         std::vector<double> epsilons,
                                         const DiskQuadrature& quad_p,
                                         const DiskQuadrature& quad_q, double tol_r = 1e-6);

struct RestartRecord {
    int restart = 0;
    double r_crit = 1.0;
    std::int64_t evaluations = 0;
};

struct SearchResult {
    AnalyticFunction best_function;
    double best_r_crit = 1.0;
    int restarts_used = 0;
    std::int64_t evaluations = 0; // objective evaluations across all restarts
    std::vector<RestartRecord> per_restart;
};

/// Nelder-Mead minimization of r_crit over degree-d polynomials with
/// a_0 = 1 and |a_n| <= 2 (smooth squashing reparameterization of the
/// free coefficients). Deterministic for a fixed seed; restart k uses the
/// derived seed (seed, k).
SearchResult worst_case_search(double p, double q, double alpha, int degree, int restarts,
                               std::uint64_t seed, const DiskQuadrature& quad_p,
                               const DiskQuadrature& quad_q, double tol_r = 1e-6,
                               int max_evals_per_restart = 400);

} // namespace bergman
