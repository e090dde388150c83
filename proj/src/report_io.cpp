#include "bergman/report_io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace bergman {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_double12(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    (void)ec;
    return std::string(buf, ptr);
}

double round12(double v) {
    const std::string s = format_double12(v);
    double out = v;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

namespace {

nlohmann::ordered_json opt_num(const std::optional<double>& v) {
    if (!v) return nullptr;
    return round12(*v);
}

nlohmann::ordered_json opt_int(const std::optional<int>& v) {
    if (!v) return nullptr;
    return *v;
}

nlohmann::ordered_json report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(check_kind_name(report.kind));
    j["p"] = opt_num(report.p);
    j["q"] = opt_num(report.q);
    j["alpha"] = opt_num(report.alpha);
    j["beta"] = opt_num(report.beta);
    j["r"] = opt_num(report.r);
    j["lhs"] = round12(report.lhs);
    j["rhs"] = round12(report.rhs);
    j["margin"] = round12(report.margin);
    j["pass"] = report.pass;
    j["tol"] = round12(report.tol);
    j["radial_nodes"] = opt_int(report.quad.radial_nodes);
    j["angular_nodes"] = opt_int(report.quad.angular_count);
    if (report.function_literal)
        j["function_literal"] = *report.function_literal;
    else
        j["function_literal"] = nullptr;
    return j;
}

} // namespace

std::string report_to_json(const CheckReport& report, int indent) {
    return report_json(report).dump(indent) + "\n";
}

std::string report_to_csv(const CheckReport& report) {
    const auto j = report_json(report);
    std::string header;
    std::string row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += it.key();
        const auto& v = it.value();
        if (v.is_null())
            ; // empty field
        else if (v.is_boolean())
            row += v.get<bool>() ? "true" : "false";
        else if (v.is_string())
            row += v.get<std::string>();
        else if (v.is_number_integer())
            row += std::to_string(v.get<long long>());
        else
            row += format_double12(v.get<double>());
    }
    return header + "\n" + row + "\n";
}

std::string report_to_human(const CheckReport& report) {
    std::ostringstream out;
    out << "check: " << check_kind_name(report.kind) << "\n";
    if (report.function_literal) out << "  f      = " << *report.function_literal << "\n";
    const auto param = [&](const char* name, const std::optional<double>& v) {
        if (v) out << "  " << name << "  = " << format_double12(*v) << "\n";
    };
    param("p    ", report.p);
    param("q    ", report.q);
    param("alpha", report.alpha);
    param("beta ", report.beta);
    param("r    ", report.r);
    out << "  lhs    = " << format_double12(report.lhs) << "\n";
    out << "  rhs    = " << format_double12(report.rhs) << "\n";
    out << "  margin = " << format_double12(report.margin) << "\n";
    if (report.worst_y) out << "  worst y = " << format_double12(*report.worst_y) << "\n";
    if (report.quad.radial_nodes)
        out << "  quadrature: " << *report.quad.radial_nodes << " radial nodes, "
            << *report.quad.angular_count << " angles\n";
    out << "  verdict: " << (report.pass ? "PASS" : "FAIL") << " (tol "
        << format_double12(report.tol) << ")\n";
    return out.str();
}

} // namespace bergman
