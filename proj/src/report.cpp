#include "ascheme/report.hpp"

#include "ascheme/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ascheme {

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "unknown";
}

Status status_from_string(std::string_view s)
{
    for (Status st : {Status::Pass, Status::Fail, Status::Inconclusive, Status::HypothesisNotMet})
        if (to_string(st) == s)
            return st;
    throw Error("unknown report status '" + std::string(s) + "'");
}

void TheoremReport::fail(std::string why, nlohmann::json witness)
{
    status = Status::Fail;
    reason = std::move(why);
    witnesses.push_back(std::move(witness));
}

nlohmann::json to_json(const TheoremReport& r)
{
    return {
        {"subject", r.subject},
        {"theorem", r.theorem},
        {"status", std::string(to_string(r.status))},
        {"reason", r.reason},
        {"evidence", r.evidence},
        {"witnesses", r.witnesses},
        {"max_deviation", r.max_deviation},
        {"tolerance", r.tolerance},
    };
}

TheoremReport report_from_json(const nlohmann::json& j)
{
    TheoremReport r;
    r.subject = j.at("subject").get<std::string>();
    r.theorem = j.at("theorem").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.reason = j.at("reason").get<std::string>();
    r.evidence = j.at("evidence");
    r.witnesses = j.at("witnesses");
    r.max_deviation = j.at("max_deviation").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    return r;
}

nlohmann::json reports_to_json(std::string_view subject, const std::vector<TheoremReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return {{"subject", std::string(subject)}, {"failed", any_failed(reports)}, {"reports", arr}};
}

std::vector<TheoremReport> reports_from_json(const nlohmann::json& j)
{
    std::vector<TheoremReport> out;
    for (const auto& r : j.at("reports"))
        out.push_back(report_from_json(r));
    return out;
}

bool any_failed(const std::vector<TheoremReport>& reports) noexcept
{
    return std::any_of(reports.begin(), reports.end(),
                       [](const TheoremReport& r) { return r.status == Status::Fail; });
}

std::string format_value(double x, double tol)
{
    if (!std::isfinite(x))
        return std::to_string(x);
    for (long den = 1; den <= 64; ++den) {
        const double num = std::round(x * static_cast<double>(den));
        if (std::abs(x - num / static_cast<double>(den)) > tol)
            continue;
        const long inum = static_cast<long>(num);
        if (den == 1)
            return std::to_string(inum);
        return std::to_string(inum) + "/" + std::to_string(den);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string render_text(const TheoremReport& r)
{
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << r.theorem << " :: " << r.subject;
    if (!r.reason.empty())
        os << "\n    reason: " << r.reason;
    for (const auto& [key, value] : r.evidence.items())
        os << "\n    " << key << ": " << value.dump();
    if (!r.witnesses.empty())
        os << "\n    witnesses: " << r.witnesses.dump();
    if (r.max_deviation > 0.0)
        os << "\n    max deviation: " << r.max_deviation << " (tol " << r.tolerance << ")";
    return os.str();
}

} // namespace ascheme
