#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace bergman {

using complex = std::complex<double>;

/// Polynomial a_0 + a_1 z + ... + a_d z^d, coefficients in increasing
/// degree order. Trailing zeros are permitted.
struct PowerSeries {
    std::vector<complex> coeffs;
};

/// f(z) = scale * (1 - pole*z)^(-exponent). Requires |pole| < 1 and
/// exponent > 0, so f is analytic and zero-free on the closed disk.
struct BinomialPower {
    complex scale;
    complex pole;
    double exponent;
};

/// f(z) = scale * exp(rate*z). Zero-free whenever scale != 0.
struct ExpLinear {
    complex scale;
    complex rate;
};

/// A representable analytic function on the unit disk with exact values
/// for f, f' and f''. Immutable after construction; all operations are
/// pure and safe to evaluate concurrently.
class AnalyticFunction {
public:
    using Repr = std::variant<PowerSeries, BinomialPower, ExpLinear>;

    static AnalyticFunction power_series(std::vector<complex> coeffs);
    static AnalyticFunction binomial_power(complex scale, complex pole, double exponent);
    static AnalyticFunction exp_linear(complex scale, complex rate);

    complex eval(complex z) const;

    /// Exact derivative value; order must be 1 or 2.
    complex deriv_eval(complex z, int order) const;

    /// z -> f(r z) for r in [0, 1], represented in the same variant.
    AnalyticFunction dilate(double r) const;

    /// z -> f(e^{i phi} z), same variant.
    AnalyticFunction rotate(double phi) const;

    /// Taylor coefficients through `degree` as a PowerSeries.
    AnalyticFunction truncate_to_series(int degree) const;

    /// True when the representation guarantees no zeros in the closed disk
    /// (BinomialPower and ExpLinear with nonzero scale, nonzero constants).
    bool is_zero_free() const;

    const Repr& repr() const { return repr_; }

private:
    explicit AnalyticFunction(Repr repr) : repr_(std::move(repr)) {}
    Repr repr_;
};

/// Deterministic-in-seed polynomial with a_0 = 1 and |a_n| <= scale for
/// n >= 1. The coefficient stream is reproducible across platforms.
AnalyticFunction random_polynomial(int degree, std::uint64_t seed, double scale);

/// Textual function literals: `poly:1,0.5i,-0.25`, `binom:C,a,s`,
/// `exp:c,b`. Complex tokens are `a`, `bi` or `a+bi` / `a-bi`.
AnalyticFunction parse_function_literal(const std::string& text);
std::string format_function_literal(const AnalyticFunction& f);

complex parse_complex(const std::string& text);
std::string format_complex(complex v);

} // namespace bergman
