#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace nsjack {

/// Outcome of one identity check.  Failures are data, not exceptions.
struct Report {
    std::string identity;
    std::size_t n = 0;
    Rational alpha = 1;
    int D = -1;  // truncation degree, -1 when not applicable
    std::map<std::string, std::string> params;
    bool passed = true;
    std::string first_failure;  // empty when passed
    std::string note;           // informational text
};

using ReportList = std::vector<Report>;

inline bool all_passed(const ReportList& reports)
{
    for (const auto& r : reports)
        if (!r.passed)
            return false;
    return true;
}

inline void append(ReportList& into, const ReportList& more)
{
    into.insert(into.end(), more.begin(), more.end());
}

} // namespace nsjack
