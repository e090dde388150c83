#include "bergman/series.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bergman {

namespace {

double u01(std::mt19937_64& rng) {
    // fixed 53-bit mapping, identical on every platform
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

AnalyticFunction AnalyticFunction::power_series(std::vector<complex> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return AnalyticFunction(PowerSeries{std::move(coeffs)});
}

AnalyticFunction AnalyticFunction::binomial_power(complex scale, complex pole, double exponent) {
    if (std::abs(pole) >= 1.0)
        throw std::invalid_argument("binomial_power: |a| must be < 1 (zero-free on the closed disk)");
    if (!(exponent > 0.0))
        throw std::invalid_argument("binomial_power: exponent s must be positive");
    return AnalyticFunction(BinomialPower{scale, pole, exponent});
}

AnalyticFunction AnalyticFunction::exp_linear(complex scale, complex rate) {
    return AnalyticFunction(ExpLinear{scale, rate});
}

complex AnalyticFunction::eval(complex z) const {
    return std::visit(
        [&](const auto& f) -> complex {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PowerSeries>) {
                complex acc = 0.0;
                for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
                    acc = acc * z + *it;
                return acc;
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                return f.scale * std::pow(1.0 - f.pole * z, -f.exponent);
            } else {
                return f.scale * std::exp(f.rate * z);
            }
        },
        repr_);
}

complex AnalyticFunction::deriv_eval(complex z, int order) const {
    if (order != 1 && order != 2)
        throw std::invalid_argument("deriv_eval: order must be 1 or 2");
    return std::visit(
        [&](const auto& f) -> complex {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PowerSeries>) {
                // Horner on the shifted coefficients n(n-1)...(n-order+1) a_n
                const auto& a = f.coeffs;
                const int d = static_cast<int>(a.size()) - 1;
                complex acc = 0.0;
                for (int n = d; n >= order; --n) {
                    double fac = n;
                    for (int k = 1; k < order; ++k) fac *= n - k;
                    acc = acc * z + fac * a[static_cast<std::size_t>(n)];
                }
                return acc;
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                const double s = f.exponent;
                if (order == 1)
                    return f.scale * s * f.pole * std::pow(1.0 - f.pole * z, -s - 1.0);
                return f.scale * s * (s + 1.0) * f.pole * f.pole * std::pow(1.0 - f.pole * z, -s - 2.0);
            } else {
                const complex b = f.rate;
                return (order == 1 ? b : b * b) * f.scale * std::exp(b * z);
            }
        },
        repr_);
}

AnalyticFunction AnalyticFunction::dilate(double r) const {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("dilate: r must lie in [0, 1]");
    return std::visit(
        [&](const auto& f) -> AnalyticFunction {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PowerSeries>) {
                std::vector<complex> coeffs(f.coeffs.size());
                double rn = 1.0;
                for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
                    coeffs[n] = f.coeffs[n] * rn;
                    rn *= r;
                }
                return AnalyticFunction(PowerSeries{std::move(coeffs)});
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                return AnalyticFunction(BinomialPower{f.scale, f.pole * r, f.exponent});
            } else {
                return AnalyticFunction(ExpLinear{f.scale, f.rate * r});
            }
        },
        repr_);
}

AnalyticFunction AnalyticFunction::rotate(double phi) const {
    const complex w = std::polar(1.0, phi);
    return std::visit(
        [&](const auto& f) -> AnalyticFunction {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PowerSeries>) {
                std::vector<complex> coeffs(f.coeffs.size());
                complex wn = 1.0;
                for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
                    coeffs[n] = f.coeffs[n] * wn;
                    wn *= w;
                }
                return AnalyticFunction(PowerSeries{std::move(coeffs)});
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                return AnalyticFunction(BinomialPower{f.scale, f.pole * w, f.exponent});
            } else {
                return AnalyticFunction(ExpLinear{f.scale, f.rate * w});
            }
        },
        repr_);
}

AnalyticFunction AnalyticFunction::truncate_to_series(int degree) const {
    if (degree < 0)
        throw std::invalid_argument("truncate_to_series: degree must be >= 0");
    const auto n = static_cast<std::size_t>(degree) + 1;
    return std::visit(
        [&](const auto& f) -> AnalyticFunction {
            using T = std::decay_t<decltype(f)>;
            std::vector<complex> coeffs(n, 0.0);
            if constexpr (std::is_same_v<T, PowerSeries>) {
                for (std::size_t k = 0; k < std::min(n, f.coeffs.size()); ++k)
                    coeffs[k] = f.coeffs[k];
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                // rising-factorial binomial series C * (s)_k / k! * a^k
                complex c = f.scale;
                for (std::size_t k = 0; k < n; ++k) {
                    coeffs[k] = c;
                    c *= f.pole * (f.exponent + static_cast<double>(k)) / static_cast<double>(k + 1);
                }
            } else {
                complex c = f.scale;
                for (std::size_t k = 0; k < n; ++k) {
                    coeffs[k] = c;
                    c *= f.rate / static_cast<double>(k + 1);
                }
            }
            return AnalyticFunction(PowerSeries{std::move(coeffs)});
        },
        repr_);
}

bool AnalyticFunction::is_zero_free() const {
    return std::visit(
        [](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PowerSeries>) {
                for (std::size_t k = 1; k < f.coeffs.size(); ++k)
                    if (f.coeffs[k] != complex(0.0)) return false;
                return !f.coeffs.empty() && f.coeffs[0] != complex(0.0);
            } else {
                return f.scale != complex(0.0);
            }
        },
        repr_);
}

AnalyticFunction random_polynomial(int degree, std::uint64_t seed, double scale) {
    if (degree < 0)
        throw std::invalid_argument("random_polynomial: degree must be >= 0");
    if (!(scale > 0.0))
        throw std::invalid_argument("random_polynomial: scale must be positive");
    std::mt19937_64 rng(seed);
    std::vector<complex> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs[0] = 1.0;
    for (int n = 1; n <= degree; ++n) {
        const double modulus = scale * u01(rng);
        const double phase = 2.0 * std::numbers::pi * u01(rng);
        coeffs[static_cast<std::size_t>(n)] = std::polar(modulus, phase);
    }
    return AnalyticFunction::power_series(std::move(coeffs));
}

namespace {

double parse_real_token(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    return value;
}

// position of the +/- separating real and imaginary parts, npos if absent
std::size_t split_position(std::string_view text) {
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') return i;
    }
    return std::string_view::npos;
}

} // namespace

complex parse_complex(const std::string& text) {
    std::string_view s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("malformed complex literal: empty token");

    if (s.back() != 'i' && s.back() != 'I') return {parse_real_token(s), 0.0};

    s.remove_suffix(1);
    const std::size_t split = split_position(s);
    std::string_view real_part = (split == std::string_view::npos) ? std::string_view() : s.substr(0, split);
    std::string_view imag_part = (split == std::string_view::npos) ? s : s.substr(split);

    double im;
    if (imag_part.empty() || imag_part == "+")
        im = 1.0;
    else if (imag_part == "-")
        im = -1.0;
    else
        im = parse_real_token(imag_part);
    const double re = real_part.empty() ? 0.0 : parse_real_token(real_part);
    return {re, im};
}

std::string format_complex(complex v) {
    char buf[64];
    const auto shortest = [&buf](double x) -> std::string {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
        (void)ec;
        return std::string(buf, ptr);
    };
    if (v.imag() == 0.0) return shortest(v.real());
    std::string imag = shortest(v.imag()) + "i";
    if (v.real() == 0.0) return imag;
    return shortest(v.real()) + (v.imag() < 0.0 ? "" : "+") + imag;
}

AnalyticFunction parse_function_literal(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("function literal must look like poly:..., binom:... or exp:...");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);

    std::vector<complex> tokens;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto comma = body.find(',', pos);
        const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        tokens.push_back(parse_complex(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    if (kind == "poly") return AnalyticFunction::power_series(std::move(tokens));
    if (kind == "binom") {
        if (tokens.size() != 3)
            throw std::invalid_argument("binom literal needs exactly C,a,s");
        if (tokens[2].imag() != 0.0)
            throw std::invalid_argument("binom exponent s must be real");
        return AnalyticFunction::binomial_power(tokens[0], tokens[1], tokens[2].real());
    }
    if (kind == "exp") {
        if (tokens.size() != 2)
            throw std::invalid_argument("exp literal needs exactly c,b");
        return AnalyticFunction::exp_linear(tokens[0], tokens[1]);
    }
    throw std::invalid_argument("unknown function kind '" + kind + "' (expected poly, binom or exp)");
}

std::string format_function_literal(const AnalyticFunction& f) {
    return std::visit(
        [](const auto& g) -> std::string {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, PowerSeries>) {
                std::string out = "poly:";
                for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
                    if (k) out += ',';
                    out += format_complex(g.coeffs[k]);
                }
                return out;
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                return "binom:" + format_complex(g.scale) + "," + format_complex(g.pole) + "," +
                       format_complex(g.exponent);
            } else {
                return "exp:" + format_complex(g.scale) + "," + format_complex(g.rate);
            }
        },
        f.repr());
}

} // namespace bergman
