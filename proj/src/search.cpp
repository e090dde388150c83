#include "bergman/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bergman {

CriticalRadiusResult critical_radius(const AnalyticFunction& f, double p, double q, double alpha,
                                     const DiskQuadrature& quad_p, const DiskQuadrature& quad_q,
                                     double tol_r) {
    if (!(0.0 < p && p < q)) throw std::invalid_argument("critical_radius: need 0 < p < q");
    if (!(tol_r > 0.0)) throw std::invalid_argument("critical_radius: tol_r must be positive");

    const double rhs = bergman_norm(f, p, alpha, quad_p); // throws divergence_error if infinite
    if (!(rhs > 0.0))
        throw std::invalid_argument("critical_radius: right-hand norm must be positive");
    const auto margin = [&](double r) {
        return rhs - bergman_norm(f.dilate(r), q, alpha, quad_q);
    };

    CriticalRadiusResult result;
    if (margin(1.0) >= 0.0) {
        result.capped = true;
        result.r_crit = 1.0;
        return result;
    }

    // the dilated norm is nondecreasing in r, so the margin changes sign once
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol_r) {
        const double mid = 0.5 * (lo + hi);
        (margin(mid) >= 0.0 ? lo : hi) = mid;
        ++result.iterations;
    }
    result.r_crit = 0.5 * (lo + hi);
    result.bracket_width = hi - lo;
    return result;
}

std::vector<SharpnessRow> sharpness_scan(double p, double q, double alpha,
                                         std::vector<double> epsilons,
                                         const DiskQuadrature& quad_p,
                                         const DiskQuadrature& quad_q, double tol_r) {
    for (const double eps : epsilons)
        if (!(eps > 0.0 && eps <= 1.0))
            throw std::invalid_argument("sharpness_scan: every epsilon must lie in (0, 1]");
    std::sort(epsilons.begin(), epsilons.end());

    std::vector<SharpnessRow> rows;
    rows.reserve(epsilons.size());
    for (const double eps : epsilons) {
        const auto f = AnalyticFunction::power_series({1.0, eps});
        const auto res = critical_radius(f, p, q, alpha, quad_p, quad_q, tol_r);
        rows.push_back({eps, res.r_crit, res.capped});
    }
    return rows;
}

namespace {

double splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// a_0 = 1, free coefficients squashed smoothly into |a_n| <= 2
std::vector<complex> coeffs_from_params(const std::vector<double>& u, int degree) {
    std::vector<complex> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs[0] = 1.0;
    for (int n = 1; n <= degree; ++n) {
        const complex w(u[static_cast<std::size_t>(2 * n - 2)],
                        u[static_cast<std::size_t>(2 * n - 1)]);
        coeffs[static_cast<std::size_t>(n)] = 2.0 * w / std::sqrt(1.0 + std::norm(w));
    }
    return coeffs;
}

struct Simplex {
    std::vector<std::vector<double>> points;
    std::vector<double> values;
};

// classic Nelder-Mead (reflect 1, expand 2, contract 1/2, shrink 1/2),
// minimizing; stops on value spread < ftol or the evaluation budget
template <typename F>
void nelder_mead(Simplex& simplex, F&& objective, double ftol, int max_evals, int& evals) {
    const std::size_t dim = simplex.points.front().size();
    const auto order = [&] {
        std::vector<std::size_t> idx(simplex.points.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return simplex.values[a] < simplex.values[b]; });
        return idx;
    };

    while (evals < max_evals) {
        const auto idx = order();
        const std::size_t best = idx.front();
        const std::size_t worst = idx.back();
        const std::size_t second_worst = idx[idx.size() - 2];
        if (simplex.values[worst] - simplex.values[best] < ftol) break;

        std::vector<double> centroid(dim, 0.0);
        for (const std::size_t i : idx)
            if (i != worst)
                for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex.points[i][d];
        for (double& c : centroid) c /= static_cast<double>(dim);

        const auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t d = 0; d < dim; ++d)
                x[d] = centroid[d] + t * (centroid[d] - simplex.points[worst][d]);
            return x;
        };

        const auto reflected = blend(1.0);
        const double fr = objective(reflected);
        ++evals;
        if (fr < simplex.values[best]) {
            const auto expanded = blend(2.0);
            const double fe = objective(expanded);
            ++evals;
            if (fe < fr) {
                simplex.points[worst] = expanded;
                simplex.values[worst] = fe;
            } else {
                simplex.points[worst] = reflected;
                simplex.values[worst] = fr;
            }
            continue;
        }
        if (fr < simplex.values[second_worst]) {
            simplex.points[worst] = reflected;
            simplex.values[worst] = fr;
            continue;
        }
        const bool outside = fr < simplex.values[worst];
        const auto contracted = blend(outside ? 0.5 : -0.5);
        const double fc = objective(contracted);
        ++evals;
        if (fc < (outside ? fr : simplex.values[worst])) {
            simplex.points[worst] = contracted;
            simplex.values[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (const std::size_t i : idx) {
            if (i == best) continue;
            for (std::size_t d = 0; d < dim; ++d)
                simplex.points[i][d] =
                    simplex.points[best][d] + 0.5 * (simplex.points[i][d] - simplex.points[best][d]);
            simplex.values[i] = objective(simplex.points[i]);
            ++evals;
            if (evals >= max_evals) break;
        }
    }
}

} // namespace

SearchResult worst_case_search(double p, double q, double alpha, int degree, int restarts,
                               std::uint64_t seed, const DiskQuadrature& quad_p,
                               const DiskQuadrature& quad_q, double tol_r,
                               int max_evals_per_restart) {
    if (degree < 1)
        throw std::invalid_argument("worst_case_search: degree must be >= 1 (constants are capped)");
    if (restarts < 1) throw std::invalid_argument("worst_case_search: restarts must be >= 1");

    const std::size_t dim = static_cast<std::size_t>(2 * degree);

    SearchResult result{AnalyticFunction::power_series({1.0}), 1.0, restarts, 0, {}};
    bool have_best = false;
    std::vector<double> best_params;

    for (int k = 0; k < restarts; ++k) {
        std::uint64_t state = seed * 0x2545f4914f6cdd1dULL + static_cast<std::uint64_t>(k);

        Simplex simplex;
        int evals = 0;
        const auto objective = [&](const std::vector<double>& u) {
            const auto f = AnalyticFunction::power_series(coeffs_from_params(u, degree));
            return critical_radius(f, p, q, alpha, quad_p, quad_q, tol_r).r_crit;
        };

        std::vector<double> origin(dim);
        for (double& x : origin) x = 1.5 * (2.0 * splitmix64(state) - 1.0);
        simplex.points.push_back(origin);
        for (std::size_t d = 0; d < dim; ++d) {
            auto vertex = origin;
            vertex[d] += 0.6;
            simplex.points.push_back(std::move(vertex));
        }
        for (const auto& x : simplex.points) {
            simplex.values.push_back(objective(x));
            ++evals;
        }

        nelder_mead(simplex, objective, 1e-7, max_evals_per_restart, evals);

        const std::size_t best_vertex = static_cast<std::size_t>(
            std::min_element(simplex.values.begin(), simplex.values.end()) -
            simplex.values.begin());
        const double r_crit = simplex.values[best_vertex];
        result.per_restart.push_back({k, r_crit, evals});
        result.evaluations += evals;
        if (!have_best || r_crit < result.best_r_crit) {
            have_best = true;
            result.best_r_crit = r_crit;
            best_params = simplex.points[best_vertex];
        }
    }

    result.best_function = AnalyticFunction::power_series(coeffs_from_params(best_params, degree));
    return result;
}

} // namespace bergman
