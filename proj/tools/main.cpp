// berghyper: hypercontractivity checks for weighted Bergman spaces on the
// unit disk. Every subcommand prints a machine-readable report (json/csv)
// or a human summary.
//
// Exit codes: 0 pass or informational, 1 failed check, 2 usage error,
// 3 divergent norm for the requested parameters.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/inequalities.hpp"
#include "bergman/report_io.hpp"
#include "bergman/search.hpp"
#include "bergman/threading.hpp"

namespace {

using bergman::AnalyticFunction;
using bergman::format_double12;
using json = nlohmann::ordered_json;

struct CommonOpts {
    int radial_nodes = 60;
    int angular_nodes = 256;
    std::string format = "human";
    std::string out;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--radial-nodes", opts.radial_nodes, "radial Gauss-Jacobi nodes")
        ->envname("BH_DEFAULT_NODES");
    cmd->add_option("--angular-nodes", opts.angular_nodes, "uniform angular nodes");
    cmd->add_option("--format", opts.format, "human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", opts.out, "write the report to this path instead of stdout");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)");
}

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

void validate_common(const CommonOpts& opts) {
    require(opts.radial_nodes >= 1, "radial-nodes must be >= 1");
    require(opts.angular_nodes >= 4, "angular-nodes must be >= 4");
    require(opts.threads >= 0, "threads must be >= 0");
    bergman::set_max_threads(opts.threads == 0 ? 0 : opts.threads);
}

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary); // LF endings, verbatim
    if (!file) throw std::runtime_error("cannot open output path " + opts.out);
    file << text;
}

double resolve_radius(const std::string& text, double p, double q, double alpha) {
    if (text == "auto") return bergman::auto_radius(p, q, alpha);
    double r = 0.0;
    try {
        std::size_t pos = 0;
        r = std::stod(text, &pos);
        require(pos == text.size(), "malformed value for --r");
    } catch (const std::logic_error&) {
        throw std::invalid_argument("--r expects a number in [0,1] or 'auto'");
    }
    require(r >= 0.0 && r <= 1.0, "r must lie in [0, 1]");
    return r;
}

int emit_report(const bergman::CheckReport& report, const CommonOpts& opts,
                const std::string& user_literal = {}) {
    bergman::CheckReport echoed = report;
    if (!user_literal.empty()) echoed.function_literal = user_literal;
    if (opts.format == "json")
        write_output(opts, bergman::report_to_json(echoed));
    else if (opts.format == "csv")
        write_output(opts, bergman::report_to_csv(echoed));
    else
        write_output(opts, bergman::report_to_human(echoed));
    return echoed.pass ? 0 : 1;
}

std::string table_to_text(const CommonOpts& opts, const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        out << arr.dump(2) << "\n";
    } else {
        // csv doubles as the human table
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
    }
    return out.str();
}

std::string json_or_lines(const CommonOpts& opts, const json& j) {
    if (opts.format == "json" || opts.format == "csv") {
        if (opts.format == "csv") {
            std::string header;
            std::string row;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!header.empty()) {
                    header += ',';
                    row += ',';
                }
                header += it.key();
                const auto& v = it.value();
                if (v.is_string())
                    row += v.get<std::string>();
                else if (v.is_boolean())
                    row += v.get<bool>() ? "true" : "false";
                else if (v.is_number_integer())
                    row += std::to_string(v.get<long long>());
                else if (!v.is_null())
                    row += format_double12(v.get<double>());
            }
            return header + "\n" + row + "\n";
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << "  " << it.key() << " = ";
        const auto& v = it.value();
        if (v.is_string())
            out << v.get<std::string>();
        else if (v.is_boolean())
            out << (v.get<bool>() ? "true" : "false");
        else if (v.is_number_integer())
            out << v.get<long long>();
        else if (!v.is_null())
            out << format_double12(v.get<double>());
        out << "\n";
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercontractivity checks for weighted Bergman spaces on the unit disk"};
    app.require_subcommand(1);

    std::function<int()> action;

    // ---- norm ----
    {
        auto* cmd = app.add_subcommand("norm", "weighted Bergman norm of a function");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto p = std::make_shared<double>(2.0);
        auto alpha = std::make_shared<double>(2.0);
        cmd->add_option("--f", *literal, "function literal")->required();
        cmd->add_option("--p", *p, "exponent");
        cmd->add_option("--alpha", *alpha, "weight parameter");
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*alpha > 1.0, "alpha must exceed 1");
                const auto f = bergman::parse_function_literal(*literal);
                const auto quad =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const double integral = bergman::bergman_integral(f, *p, *alpha, quad);
                json j;
                j["command"] = "norm";
                j["function_literal"] = *literal;
                j["p"] = bergman::round12(*p);
                j["alpha"] = bergman::round12(*alpha);
                j["integral"] = bergman::round12(integral);
                j["norm"] = bergman::round12(std::pow(integral, 1.0 / *p));
                j["radial_nodes"] = opts->radial_nodes;
                j["angular_nodes"] = opts->angular_nodes;
                write_output(*opts, json_or_lines(*opts, j));
                return 0;
            };
        });
    }

    // ---- check-hyper ----
    {
        auto* cmd = app.add_subcommand("check-hyper", "dilation inequality on one space");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto p = std::make_shared<double>(0.0);
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto r_text = std::make_shared<std::string>("auto");
        auto tol = std::make_shared<double>(1e-8);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--r", *r_text, "dilation radius in [0,1], or 'auto'");
        cmd->add_option("--tol", *tol, "relative margin tolerance");
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*q > *p, "q must exceed p");
                require(*alpha > 1.0, "alpha must exceed 1");
                const double r = resolve_radius(*r_text, *p, *q, *alpha);
                const auto f = bergman::parse_function_literal(*literal);
                const auto quad =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const bergman::HyperCase cse(f, *p, *q, *alpha, r);
                return emit_report(bergman::check_hypercontractivity(cse, quad, quad, *tol), *opts,
                                   *literal);
            };
        });
    }

    // ---- check-kulikov ----
    {
        auto* cmd = app.add_subcommand("check-kulikov", "two-space comparison with beta = q*alpha/p");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto p = std::make_shared<double>(0.0);
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto tol = std::make_shared<double>(1e-8);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--tol", *tol);
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*q > *p, "q must exceed p");
                require(*alpha > 1.0, "alpha must exceed 1");
                const auto f = bergman::parse_function_literal(*literal);
                const double beta = *q * *alpha / *p;
                const auto quad_alpha =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const auto quad_beta =
                    bergman::make_disk_quadrature(opts->radial_nodes, beta, opts->angular_nodes);
                return emit_report(
                    bergman::check_kulikov(f, *p, *q, *alpha, quad_beta, quad_alpha, *tol), *opts,
                    *literal);
            };
        });
    }

    // ---- check-embedding ----
    {
        auto* cmd = app.add_subcommand("check-embedding",
                                       "dilation embedding between weights alpha and beta");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto beta = std::make_shared<double>(0.0);
        auto tol = std::make_shared<double>(1e-8);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--beta", *beta)->required();
        cmd->add_option("--tol", *tol);
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*q > 0.0, "q must be positive");
                require(*alpha > 1.0, "alpha must exceed 1");
                require(*beta > *alpha, "beta must exceed alpha");
                const auto f = bergman::parse_function_literal(*literal);
                const auto quad_alpha =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const auto quad_beta =
                    bergman::make_disk_quadrature(opts->radial_nodes, *beta, opts->angular_nodes);
                return emit_report(
                    bergman::check_dilation_embedding(f, *q, *alpha, *beta, quad_alpha, quad_beta,
                                                      *tol),
                    *opts, *literal);
            };
        });
    }

    // ---- check-pointwise ----
    {
        auto* cmd = app.add_subcommand("check-pointwise",
                                       "(1-y/r^2)^alpha <= (1-y)^beta on [0, alpha/beta]");
        auto opts = std::make_shared<CommonOpts>();
        auto alpha = std::make_shared<double>(0.0);
        auto beta = std::make_shared<double>(0.0);
        auto n_samples = std::make_shared<int>(10001);
        auto tol = std::make_shared<double>(1e-8);
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--beta", *beta)->required();
        cmd->add_option("--n-samples", *n_samples);
        cmd->add_option("--tol", *tol);
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*alpha > 1.0, "alpha must exceed 1");
                require(*beta > *alpha, "beta must exceed alpha");
                require(*n_samples >= 2, "n-samples must be >= 2");
                return emit_report(bergman::check_pointwise_bound(*alpha, *beta, *n_samples, *tol),
                                   *opts);
            };
        });
    }

    // ---- convexity ----
    {
        auto* cmd = app.add_subcommand("convexity",
                                       "second differences of the circle mean M(y)");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto q = std::make_shared<double>(0.0);
        auto y_min = std::make_shared<double>(0.05);
        auto y_max = std::make_shared<double>(0.95);
        auto y_count = std::make_shared<int>(19);
        auto h = std::make_shared<double>(1e-3);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--y-min", *y_min);
        cmd->add_option("--y-max", *y_max);
        cmd->add_option("--y-count", *y_count);
        cmd->add_option("--h", *h, "second-difference step");
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*q > 0.0, "q must be positive");
                require(*h > 0.0, "h must be positive");
                require(*y_count >= 1, "y-count must be >= 1");
                require(*y_min > *h && *y_max < 1.0 - *h && *y_min <= *y_max,
                        "y grid must lie inside (h, 1-h)");
                const auto f = bergman::parse_function_literal(*literal);
                std::vector<double> grid;
                for (int i = 0; i < *y_count; ++i)
                    grid.push_back(*y_count == 1 ? *y_min
                                                 : *y_min + (*y_max - *y_min) * i / (*y_count - 1));
                const auto profile =
                    bergman::convexity_profile(f, *q, grid, *h, opts->angular_nodes);
                std::vector<std::vector<std::string>> rows;
                for (const auto& [y, dd] : profile)
                    rows.push_back({format_double12(y), format_double12(dd)});
                write_output(*opts, table_to_text(*opts, {"y", "second_difference"}, rows));
                return 0;
            };
        });
    }

    // ---- laplacian ----
    {
        auto* cmd = app.add_subcommand("laplacian",
                                       "finite-difference residual of the Laplacian identity");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto p = std::make_shared<double>(0.0);
        auto z_text = std::make_shared<std::string>();
        auto h = std::make_shared<double>(1e-4);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--z", *z_text, "evaluation point, |z| <= 0.9")->required();
        cmd->add_option("--h", *h, "stencil step");
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                const auto f = bergman::parse_function_literal(*literal);
                const auto z = bergman::parse_complex(*z_text);
                const double residual = bergman::laplacian_identity_residual(f, *p, z, *h);
                json j;
                j["command"] = "laplacian";
                j["function_literal"] = *literal;
                j["p"] = bergman::round12(*p);
                j["z"] = bergman::format_complex(z);
                j["h"] = bergman::round12(*h);
                j["residual"] = bergman::round12(residual);
                j["identity_rhs"] = bergman::round12(bergman::laplacian_identity_rhs(f, *p, z));
                write_output(*opts, json_or_lines(*opts, j));
                return 0;
            };
        });
    }

    // ---- check-logsobolev ----
    {
        auto* cmd = app.add_subcommand("check-logsobolev",
                                       "logarithmic Sobolev inequality for p >= 2");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto p = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto tol = std::make_shared<double>(1e-8);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--tol", *tol);
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p >= 2.0, "p must be at least 2");
                require(*alpha > 1.0, "alpha must exceed 1");
                const auto f = bergman::parse_function_literal(*literal);
                const auto quad =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                return emit_report(bergman::check_log_sobolev(f, *p, *alpha, quad, *tol), *opts,
                                   *literal);
            };
        });
    }

    // ---- critical-radius ----
    {
        auto* cmd = app.add_subcommand("critical-radius",
                                       "largest r for which the dilation inequality holds");
        auto opts = std::make_shared<CommonOpts>();
        auto literal = std::make_shared<std::string>();
        auto p = std::make_shared<double>(0.0);
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto tol_r = std::make_shared<double>(1e-6);
        cmd->add_option("--f", *literal)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--tol-r", *tol_r, "bisection bracket tolerance");
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*q > *p, "q must exceed p");
                require(*alpha > 1.0, "alpha must exceed 1");
                require(*tol_r > 0.0, "tol-r must be positive");
                const auto f = bergman::parse_function_literal(*literal);
                const auto quad =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const auto res = bergman::critical_radius(f, *p, *q, *alpha, quad, quad, *tol_r);
                json j;
                j["command"] = "critical-radius";
                j["function_literal"] = *literal;
                j["p"] = bergman::round12(*p);
                j["q"] = bergman::round12(*q);
                j["alpha"] = bergman::round12(*alpha);
                j["r_crit"] = bergman::round12(res.r_crit);
                j["iterations"] = res.iterations;
                j["bracket_width"] = bergman::round12(res.bracket_width);
                j["capped"] = res.capped;
                j["radial_nodes"] = opts->radial_nodes;
                j["angular_nodes"] = opts->angular_nodes;
                write_output(*opts, json_or_lines(*opts, j));
                return 0;
            };
        });
    }

    // ---- sharpness-scan ----
    {
        auto* cmd = app.add_subcommand("sharpness-scan",
                                       "critical radius of 1 + eps*z across epsilons");
        auto opts = std::make_shared<CommonOpts>();
        auto p = std::make_shared<double>(0.0);
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto eps = std::make_shared<std::vector<double>>();
        auto tol_r = std::make_shared<double>(1e-6);
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--epsilons", *eps, "comma-separated values in (0,1]")
            ->required()
            ->delimiter(',');
        cmd->add_option("--tol-r", *tol_r);
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*q > *p, "q must exceed p");
                require(*alpha > 1.0, "alpha must exceed 1");
                for (const double e : *eps)
                    require(e > 0.0 && e <= 1.0, "every epsilon must lie in (0, 1]");
                const auto quad =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const auto rows = bergman::sharpness_scan(*p, *q, *alpha, *eps, quad, quad, *tol_r);
                std::vector<std::vector<std::string>> cells;
                for (const auto& row : rows)
                    cells.push_back({format_double12(row.epsilon), format_double12(row.r_crit),
                                     row.capped ? "true" : "false"});
                write_output(*opts, table_to_text(*opts, {"epsilon", "r_crit", "capped"}, cells));
                return 0;
            };
        });
    }

    // ---- worst-case ----
    {
        auto* cmd = app.add_subcommand("worst-case",
                                       "minimize the critical radius over polynomial coefficients");
        auto opts = std::make_shared<CommonOpts>();
        auto p = std::make_shared<double>(0.0);
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto degree = std::make_shared<int>(4);
        auto restarts = std::make_shared<int>(20);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto tol_r = std::make_shared<double>(1e-6);
        auto max_evals = std::make_shared<int>(400);
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        cmd->add_option("--degree", *degree);
        cmd->add_option("--restarts", *restarts);
        cmd->add_option("--seed", *seed);
        cmd->add_option("--tol-r", *tol_r);
        cmd->add_option("--max-evals", *max_evals, "objective budget per restart");
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*q > *p, "q must exceed p");
                require(*alpha > 1.0, "alpha must exceed 1");
                require(*degree >= 1, "degree must be >= 1");
                require(*restarts >= 1, "restarts must be >= 1");
                const auto quad =
                    bergman::make_disk_quadrature(opts->radial_nodes, *alpha, opts->angular_nodes);
                const auto result = bergman::worst_case_search(*p, *q, *alpha, *degree, *restarts,
                                                               *seed, quad, quad, *tol_r,
                                                               *max_evals);
                if (opts->format == "csv") {
                    std::vector<std::vector<std::string>> cells;
                    for (const auto& rec : result.per_restart)
                        cells.push_back({std::to_string(rec.restart),
                                         format_double12(rec.r_crit),
                                         std::to_string(rec.evaluations)});
                    write_output(*opts,
                                 table_to_text(*opts, {"restart", "best_r_crit", "evaluations"},
                                               cells));
                    return 0;
                }
                json j;
                j["command"] = "worst-case";
                j["p"] = bergman::round12(*p);
                j["q"] = bergman::round12(*q);
                j["alpha"] = bergman::round12(*alpha);
                j["degree"] = *degree;
                j["restarts"] = *restarts;
                j["seed"] = *seed;
                j["best_function"] = bergman::format_function_literal(result.best_function);
                j["best_r_crit"] = bergman::round12(result.best_r_crit);
                j["evaluations"] = result.evaluations;
                write_output(*opts, json_or_lines(*opts, j));
                return 0;
            };
        });
    }

    // ---- monomial-margin ----
    {
        auto* cmd = app.add_subcommand("monomial-margin",
                                       "closed-form sides for f(z) = z at r = sqrt(p/q)");
        auto opts = std::make_shared<CommonOpts>();
        auto p = std::make_shared<double>(0.0);
        auto q = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--alpha", *alpha)->required();
        add_common(cmd, *opts);
        cmd->callback([=, &action] {
            action = [=] {
                validate_common(*opts);
                require(*p > 0.0, "p must be positive");
                require(*q > *p, "q must exceed p");
                require(*alpha > 1.0, "alpha must exceed 1");
                const auto [lhs, rhs] = bergman::monomial_hyper_margin(*p, *q, *alpha);
                json j;
                j["command"] = "monomial-margin";
                j["p"] = bergman::round12(*p);
                j["q"] = bergman::round12(*q);
                j["alpha"] = bergman::round12(*alpha);
                j["lhs"] = bergman::round12(lhs);
                j["rhs"] = bergman::round12(rhs);
                j["margin"] = bergman::round12(rhs - lhs);
                write_output(*opts, json_or_lines(*opts, j));
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const bergman::divergence_error& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return 3;
    } catch (const bergman::singular_point_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return 0;
}
