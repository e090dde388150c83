#pragma once

#include <string>

#include "bergman/inequalities.hpp"

namespace bergman {

/// Shortest decimal that round-trips the value (17 significant digits max).
std::string format_double(double v);

/// 12-significant-digit formatting used by all CSV and JSON report output.
std::string format_double12(double v);

/// v rounded to 12 significant decimal digits (parse of format_double12).
double round12(double v);

/// Flat JSON object with exactly the keys
/// {kind, p, q, alpha, beta, r, lhs, rhs, margin, pass, tol, radial_nodes,
///  angular_nodes, function_literal}, in that order; inapplicable fields are
/// null. Floats carry 12 significant digits. LF line endings, UTF-8.
std::string report_to_json(const CheckReport& report, int indent = 2);

/// Header plus one data row over the same key set; null fields are empty.
std::string report_to_csv(const CheckReport& report);

/// Multi-line human-readable rendering.
std::string report_to_human(const CheckReport& report);

} // namespace bergman
