#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ascheme {

enum class Status { Pass, Fail, Inconclusive, HypothesisNotMet };

std::string_view to_string(Status s) noexcept;
Status status_from_string(std::string_view s);

/// Structured outcome of one theorem check. `evidence` holds bound values,
/// asserted values and anything else a reader needs to audit the verdict;
/// `witnesses` holds vertex pairs, indices or orderings.
struct TheoremReport {
    std::string subject;
    std::string theorem;
    Status status = Status::Inconclusive;
    std::string reason;
    nlohmann::json evidence = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::array();
    double max_deviation = 0.0;
    double tolerance = 0.0;

    bool passed() const noexcept { return status == Status::Pass; }
    /// Marks the report failed. A failed report always carries a witness.
    void fail(std::string why, nlohmann::json witness);
};

nlohmann::json to_json(const TheoremReport& r);
TheoremReport report_from_json(const nlohmann::json& j);

nlohmann::json reports_to_json(std::string_view subject, const std::vector<TheoremReport>& reports);
std::vector<TheoremReport> reports_from_json(const nlohmann::json& j);

bool any_failed(const std::vector<TheoremReport>& reports) noexcept;

/// Renders x as an integer or small-denominator fraction when it is within
/// tol of one, otherwise as a decimal.
std::string format_value(double x, double tol);

std::string render_text(const TheoremReport& r);

} // namespace ascheme
