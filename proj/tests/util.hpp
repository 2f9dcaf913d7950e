#pragma once

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nsjack/rational.hpp"
#include "nsjack/poly.hpp"
#include "nsjack/verify.hpp"

namespace nsjack::test {

inline SparsePoly mono(std::size_t n, const std::vector<int>& e, const Rational& c = 1)
{
    return SparsePoly::monomial(n, e, c);
}

inline Rational q(const std::string& s) { return parse_rational(s); }

inline std::vector<std::string> alpha_strings() { return {"1", "2", "1/2", "3", "7/5"}; }

inline std::string param_name(const ::testing::TestParamInfo<std::string>& info)
{
    std::string s = info.param;
    for (char& ch : s)
        if (ch == '/')
            ch = '_';
    return "alpha_" + s;
}

inline void expect_passed(const Report& r)
{
    EXPECT_TRUE(r.passed) << r.identity << ": " << r.first_failure;
}

inline void expect_passed(const ReportList& list)
{
    for (const auto& r : list)
        expect_passed(r);
}

} // namespace nsjack::test
