#include <cmath>
#include <numbers>

#include "util.hpp"

using namespace nsjack;
using namespace nsjack::numeric;
using nsjack::test::mono;
using nsjack::test::q;

TEST(Quadrature, GaussRulesIntegrateMoments)
{
    GaussRule gh = gauss_hermite(10);
    double s0 = 0, s2 = 0;
    for (std::size_t i = 0; i < gh.x.size(); ++i) {
        s0 += gh.w[i];
        s2 += gh.w[i] * gh.x[i] * gh.x[i];
    }
    EXPECT_NEAR(s0, std::sqrt(std::numbers::pi), 1e-13);
    EXPECT_NEAR(s2, std::sqrt(std::numbers::pi) / 2, 1e-13);
    GaussRule gl = gauss_laguerre(10, 0.5);
    double m1 = 0;
    for (std::size_t i = 0; i < gl.x.size(); ++i)
        m1 += gl.w[i] * gl.x[i];
    EXPECT_NEAR(m1, std::tgamma(2.5), 1e-12);
}

TEST(Quadrature, OneVariableHermiteNorm)
{
    SparsePoly one = SparsePoly::constant(1, 1);
    EXPECT_NEAR(quad_inner_H(one, one, Rational(1), 24), std::sqrt(std::numbers::pi), 1e-10);
}

TEST(Quadrature, GroundStates)
{
    for (const auto& s : test::alpha_strings()) {
        Rational alpha = q(s);
        NumericReport h = check_N0_hermite(2, alpha);
        EXPECT_TRUE(h.passed()) << s << " " << h.rel_err;
        EXPECT_LT(h.rel_err, 1e-8);
        for (const auto& a : {"0", "1/2", "1"}) {
            NumericReport l = check_N0_laguerre(2, alpha, q(a));
            EXPECT_TRUE(l.passed()) << s << " a=" << a << " " << l.rel_err;
        }
    }
}

TEST(Quadrature, TwoDimensionalGroundStateKnownValue)
{
    // alpha = 2, a = 0: E|y1 - y2| = 1 for two unit exponentials
    EXPECT_NEAR(N0_laguerre(2, Rational(2), Rational(0)), 1.0, 1e-13);
}

TEST(Quadrature, HermiteOrthogonality)
{
    auto jack = std::make_shared<JackBasis>(2, Rational(1));
    HermiteBasis herm(jack);
    double cross = quad_inner_H(herm.E({1, 0}), herm.E({0, 1}), Rational(1), 24);
    double n1 = quad_inner_H(herm.E({1, 0}), herm.E({1, 0}), Rational(1), 24);
    EXPECT_LT(std::abs(cross), 1e-8 * n1);
    for (const auto& r : check_orthogonality_hermite(herm, 3))
        EXPECT_TRUE(r.passed()) << r.check << " " << r.label << " " << r.rel_err;
    LaguerreBasis lag(jack, q("1/2"));
    for (const auto& r : check_orthogonality_laguerre(lag, 3))
        EXPECT_TRUE(r.passed()) << r.check << " " << r.label << " " << r.rel_err;
}

TEST(Quadrature, TransformSpotChecks)
{
    auto jack = std::make_shared<JackBasis>(2, Rational(1));
    for (auto w : {Transform::Hermite1b, Transform::Hermite1c, Transform::IntL, Transform::LaplaceE}) {
        NumericReport r = quad_transform_check(w, jack, q("1/2"), {1, 0}, 6);
        EXPECT_TRUE(r.passed()) << transform_name(w) << " rel " << r.rel_err << " tol " << r.tolerance;
    }
    EXPECT_THROW(quad_transform_check(Transform::IntL, jack, q("1/2"), {2, 1}, 2), ContractError);
}

TEST(Quadrature, ClassicalReductions)
{
    for (const auto& a : {"0", "1/2", "1"})
        for (const auto& r : classical_reductions(q(a), 3)) {
            EXPECT_TRUE(r.passed()) << r.check << " k=" << r.label << " rel " << r.rel_err;
            EXPECT_LE(r.tolerance, kMachineTol);
        }
}

TEST(Quadrature, TransformNames)
{
    for (auto w : verify::all_transforms())
        EXPECT_EQ(parse_transform(transform_name(w)), w);
    EXPECT_THROW(parse_transform("nope"), ContractError);
}

TEST(Quadrature, TooManyVariables)
{
    SparsePoly one = SparsePoly::constant(3, 1);
    EXPECT_THROW(quad_inner_H(one, one, Rational(1), 8), DimensionError);
}
