#include "bergman/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

// pass/fail on the scale of the compared sides: algebraically the same as
// normalizing f by its right-hand norm first, which scale invariance allows
void finish_report(CheckReport& report, double tol, double extra_scale = 0.0) {
    report.margin = report.rhs - report.lhs;
    const double scale = std::max({std::abs(report.lhs), std::abs(report.rhs), extra_scale});
    report.tol = tol * std::max(scale, 1e-300);
    report.pass = report.margin >= -report.tol;
}

void require_alpha_match(const DiskQuadrature& quad, double alpha, const char* where) {
    if (std::abs(quad.radial.alpha - alpha) > 1e-12 * std::max(1.0, std::abs(alpha)))
        throw std::invalid_argument(std::string(where) +
                                    ": quadrature alpha does not match the requested measure");
}

} // namespace

std::string_view check_kind_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::Hypercontractivity: return "hypercontractivity";
        case CheckKind::Kulikov: return "kulikov";
        case CheckKind::DilationEmbedding: return "dilation-embedding";
        case CheckKind::PointwiseBound: return "pointwise-bound";
        case CheckKind::LogSobolev: return "log-sobolev";
    }
    return "unknown";
}

HyperCase::HyperCase(AnalyticFunction f_, double p_, double q_, double alpha_, double r_)
    : f(std::move(f_)), p(p_), q(q_), alpha(alpha_), r(r_) {
    if (!(p > 0.0)) throw std::invalid_argument("HyperCase: p must be positive");
    if (!(q > p)) throw std::invalid_argument("HyperCase: q must exceed p");
    if (!(alpha > 1.0)) throw std::invalid_argument("HyperCase: alpha must exceed 1");
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("HyperCase: r must lie in [0, 1]");
}

double auto_radius(double p, double q, double alpha) {
    if (!(0.0 < p && p < q)) throw std::invalid_argument("auto_radius: need 0 < p < q");
    if (!(alpha > 1.0)) throw std::invalid_argument("auto_radius: alpha must exceed 1");
    if (q >= 2.0) return std::sqrt(p / q);
    return std::sqrt(std::max(p / 2.0, p * (alpha - 1.0) / (q * alpha - p)));
}

CheckReport check_hypercontractivity(const HyperCase& cse, const DiskQuadrature& quad_p,
                                     const DiskQuadrature& quad_q, double tol) {
    require_alpha_match(quad_p, cse.alpha, "check_hypercontractivity");
    require_alpha_match(quad_q, cse.alpha, "check_hypercontractivity");

    CheckReport report;
    report.kind = CheckKind::Hypercontractivity;
    report.p = cse.p;
    report.q = cse.q;
    report.alpha = cse.alpha;
    report.r = cse.r;
    report.function_literal = format_function_literal(cse.f);
    report.quad = {quad_q.radial.size(), quad_q.angular_count, cse.alpha, cse.alpha};

    report.rhs = bergman_norm(cse.f, cse.p, cse.alpha, quad_p);
    report.lhs = bergman_norm(cse.f.dilate(cse.r), cse.q, cse.alpha, quad_q);
    finish_report(report, tol);
    return report;
}

CheckReport check_kulikov(const AnalyticFunction& f, double p, double q, double alpha,
                          const DiskQuadrature& quad_beta, const DiskQuadrature& quad_alpha,
                          double tol) {
    if (!(0.0 < p && p < q)) throw std::invalid_argument("check_kulikov: need 0 < p < q");
    if (!(alpha > 1.0)) throw std::invalid_argument("check_kulikov: alpha must exceed 1");
    const double beta = q * alpha / p;
    require_alpha_match(quad_beta, beta, "check_kulikov (lhs)");
    require_alpha_match(quad_alpha, alpha, "check_kulikov (rhs)");

    CheckReport report;
    report.kind = CheckKind::Kulikov;
    report.p = p;
    report.q = q;
    report.alpha = alpha;
    report.beta = beta;
    report.function_literal = format_function_literal(f);
    report.quad = {quad_alpha.radial.size(), quad_alpha.angular_count, beta, alpha};

    report.lhs = bergman_norm(f, q, beta, quad_beta);
    report.rhs = bergman_norm(f, p, alpha, quad_alpha);
    finish_report(report, tol);
    return report;
}

CheckReport check_dilation_embedding(const AnalyticFunction& f, double q, double alpha,
                                     double beta, const DiskQuadrature& quad_alpha,
                                     const DiskQuadrature& quad_beta, double tol) {
    if (!(q > 0.0)) throw std::invalid_argument("check_dilation_embedding: q must be positive");
    if (!(beta > alpha && alpha > 1.0))
        throw std::invalid_argument("check_dilation_embedding: need beta > alpha > 1");
    require_alpha_match(quad_alpha, alpha, "check_dilation_embedding (lhs)");
    require_alpha_match(quad_beta, beta, "check_dilation_embedding (rhs)");
    const double r = std::sqrt(alpha / beta);

    CheckReport report;
    report.kind = CheckKind::DilationEmbedding;
    report.q = q;
    report.alpha = alpha;
    report.beta = beta;
    report.r = r;
    report.function_literal = format_function_literal(f);
    report.quad = {quad_alpha.radial.size(), quad_alpha.angular_count, alpha, beta};

    report.lhs = bergman_integral(f.dilate(r), q, alpha, quad_alpha);
    report.rhs = bergman_integral(f, q, beta, quad_beta);
    finish_report(report, tol);
    return report;
}

CheckReport check_pointwise_bound(double alpha, double beta, int n_samples, double tol) {
    if (!(beta > alpha && alpha > 1.0))
        throw std::invalid_argument("check_pointwise_bound: need beta > alpha > 1");
    if (n_samples < 2)
        throw std::invalid_argument("check_pointwise_bound: need at least 2 samples");

    const double r2 = alpha / beta; // the interval endpoint and the dilation radius squared
    double worst = -1.0;
    double worst_y = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double y = r2 * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        const double diff = std::pow(1.0 - y / r2, alpha) - std::pow(1.0 - y, beta);
        if (diff > worst) {
            worst = diff;
            worst_y = y;
        }
    }

    CheckReport report;
    report.kind = CheckKind::PointwiseBound;
    report.alpha = alpha;
    report.beta = beta;
    report.r = std::sqrt(r2);
    report.lhs = worst;
    report.rhs = 0.0;
    report.worst_y = worst_y;
    report.margin = -worst;
    report.tol = tol; // sides live on the fixed scale [0, 1]
    report.pass = report.margin >= -tol;
    return report;
}

std::vector<std::pair<double, double>> convexity_profile(const AnalyticFunction& f, double q,
                                                         const std::vector<double>& y_grid,
                                                         double h, int n_theta) {
    if (!(h > 0.0)) throw std::invalid_argument("convexity_profile: h must be positive");
    std::vector<std::pair<double, double>> out;
    out.reserve(y_grid.size());
    for (const double y : y_grid) {
        if (!(y > h && y < 1.0 - h))
            throw std::invalid_argument("convexity_profile: grid points must lie in (h, 1-h)");
        const double lo = circle_mean(f, y - h, q, n_theta);
        const double mid = circle_mean(f, y, q, n_theta);
        const double hi = circle_mean(f, y + h, q, n_theta);
        out.emplace_back(y, (lo - 2.0 * mid + hi) / (h * h));
    }
    return out;
}

double laplacian_identity_rhs(const AnalyticFunction& f, double p, complex z) {
    const complex f0 = f.eval(z);
    const complex f1 = f.deriv_eval(z, 1);
    const complex f2 = f.deriv_eval(z, 2);
    const complex cross = (p - 2.0) * f1 * f1 + 2.0 * f0 * f2;
    return std::pow(std::abs(f0), p - 4.0) * std::norm(cross);
}

double laplacian_identity_residual(const AnalyticFunction& f, double p, complex z, double h) {
    if (!(std::abs(z) <= 0.9))
        throw std::invalid_argument("laplacian_identity_residual: need |z| <= 0.9");
    if (!(h > 0.0 && h <= 0.05))
        throw std::invalid_argument("laplacian_identity_residual: need 0 < h <= 0.05");
    if (!(p >= 2.0) && !f.is_zero_free())
        throw std::invalid_argument(
            "laplacian_identity_residual: p < 2 requires a zero-free function");
    if (std::abs(f.eval(z)) <= 1e-6 || std::abs(f.deriv_eval(z, 1)) <= 1e-6)
        throw singular_point_error(
            "laplacian_identity_residual: singular point (|f| or |f'| below 1e-6)");

    const auto g = [&](complex w) {
        return std::pow(std::norm(f.eval(w)), 0.5 * (p - 2.0)) * std::norm(f.deriv_eval(w, 1));
    };
    const complex ih(0.0, h);
    const double fd =
        (g(z + h) + g(z - h) + g(z + ih) + g(z - ih) - 4.0 * g(z)) / (h * h);
    const double rhs = laplacian_identity_rhs(f, p, z);
    return std::abs(fd - rhs) / (1.0 + std::abs(rhs));
}

CheckReport check_log_sobolev(const AnalyticFunction& f, double p, double alpha,
                              const DiskQuadrature& quad, double tol) {
    if (!(p >= 2.0)) throw std::invalid_argument("check_log_sobolev: p must be at least 2");
    require_alpha_match(quad, alpha, "check_log_sobolev");

    const int n_theta = quad.angular_count;
    double entropy = 0.0;  // E = Int |f|^p log|f|
    double dirichlet = 0.0; // D = 1/2 Re Int |f|^{p-2} conj(f) z f'
    double mass = 0.0;      // N = Int |f|^p
    for (std::size_t k = 0; k < quad.radial.nodes.size(); ++k) {
        const double rho = std::sqrt(quad.radial.nodes[k]);
        double mean_e = 0.0, mean_d = 0.0, mean_n = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const complex z = std::polar(rho, 2.0 * std::numbers::pi * j / n_theta);
            const complex fv = f.eval(z);
            const double am = std::abs(fv);
            if (am < 1e-300) continue; // t^p log t -> 0; measure-negligible node set
            const double amp = std::pow(am, p);
            mean_e += amp * std::log(am);
            mean_n += amp;
            mean_d += std::pow(am, p - 2.0) *
                      (std::conj(fv) * z * f.deriv_eval(z, 1)).real();
        }
        const double w = quad.radial.weights[k] / n_theta;
        entropy += w * mean_e;
        dirichlet += w * mean_d;
        mass += w * mean_n;
    }
    dirichlet *= 0.5;

    if (mass <= 0.0)
        throw std::invalid_argument("check_log_sobolev: function is identically zero");
    if (!std::isfinite(entropy) || !std::isfinite(dirichlet) || !std::isfinite(mass))
        throw divergence_error("log-Sobolev integrals are not finite for these parameters");

    CheckReport report;
    report.kind = CheckKind::LogSobolev;
    report.p = p;
    report.alpha = alpha;
    report.function_literal = format_function_literal(f);
    report.quad = {quad.radial.size(), quad.angular_count, alpha, alpha};
    report.lhs = entropy;
    report.rhs = dirichlet + mass * std::log(mass) / p;
    finish_report(report, tol, mass);
    return report;
}

std::pair<double, double> monomial_hyper_margin(double p, double q, double alpha) {
    if (!(0.0 < p && p < q)) throw std::invalid_argument("monomial_hyper_margin: need 0 < p < q");
    if (!(alpha > 1.0)) throw std::invalid_argument("monomial_hyper_margin: alpha must exceed 1");
    const double lhs = std::sqrt(p / q) * std::pow(monomial_moment(q / 2.0, alpha), 1.0 / q);
    const double rhs = std::pow(monomial_moment(p / 2.0, alpha), 1.0 / p);
    return {lhs, rhs};
}

} // namespace bergman
