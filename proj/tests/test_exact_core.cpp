#include "util.hpp"

using namespace nsjack;
using nsjack::test::mono;
using nsjack::test::q;

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(q("6/4"), make_rational(3, 2));
    EXPECT_EQ(to_string(q("-2/6")), "-1/3");
    EXPECT_EQ(to_string(q("5")), "5");
    EXPECT_THROW(q("1/0"), ParameterError);
    EXPECT_THROW(q("abc"), ParameterError);
    EXPECT_THROW(q(""), ParameterError);
}

TEST(Rational, PowAndPochhammer)
{
    EXPECT_EQ(pow(q("2/3"), 3), q("8/27"));
    EXPECT_EQ(pow(q("2/3"), -2), q("9/4"));
    EXPECT_EQ(pochhammer(q("1/2"), 3), q("15/8"));
    EXPECT_EQ(pochhammer(q("7"), 0), 1);
    EXPECT_EQ(factorial(5), 120);
}

TEST(SparsePoly, Arithmetic)
{
    SparsePoly x1 = SparsePoly::variable(2, 0), x2 = SparsePoly::variable(2, 1);
    EXPECT_EQ((x1 + x2) * (x1 - x2), mono(2, {2, 0}) - mono(2, {0, 2}));
    SparsePoly p = x1 * q("3/7") + x2;
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_EQ((p + (-p)).size(), 0u);
    SparsePoly f = (SparsePoly::constant(2, 1) - mono(2, {1, -1})) * (SparsePoly::constant(2, 1) - mono(2, {-1, 1}));
    EXPECT_EQ(f, SparsePoly::constant(2, 2) - mono(2, {1, -1}) - mono(2, {-1, 1}));
    EXPECT_EQ((x1 + x2).pow(3), x1.pow(3) + x1.pow(2) * x2 * Rational(3) + x1 * x2.pow(2) * Rational(3) + x2.pow(3));
}

TEST(SparsePoly, DimensionMismatch)
{
    EXPECT_THROW(SparsePoly::variable(2, 0) + SparsePoly::variable(3, 0), DimensionError);
    EXPECT_THROW(SparsePoly::variable(2, 0) * SparsePoly::variable(3, 0), DimensionError);
}

TEST(SparsePoly, Substitutions)
{
    EXPECT_EQ(shift_by_one(mono(2, {1, 1})),
              SparsePoly::constant(2, 1) + mono(2, {1, 0}) + mono(2, {0, 1}) + mono(2, {1, 1}));
    Rational alpha = 1;
    SparsePoly e10 = mono(2, {1, 0}) + mono(2, {0, 1}, 1 / (alpha + 1));
    EXPECT_EQ(evaluate(e10, {Rational(1), Rational(1)}), q("3/2"));
    EXPECT_EQ(evaluate_at_ones(e10), q("3/2"));
    EXPECT_EQ(invert_variables(mono(2, {2, 1})), mono(2, {-2, -1}));
    EXPECT_EQ(square_variables(mono(2, {2, 1})), mono(2, {4, 2}));
    EXPECT_EQ(negate_variables(mono(2, {2, 1}) + mono(2, {0, 1})), mono(2, {2, 1}, -1) - mono(2, {0, 1}));
    EXPECT_EQ(permute(mono(3, {1, 2, 0}), {1, 2, 0}), mono(3, {0, 1, 2}));
}

TEST(SparsePoly, PoleOnEvaluation)
{
    EXPECT_THROW(evaluate(mono(2, {-1, 0}), {Rational(0), Rational(1)}), PoleError);
    EXPECT_EQ(evaluate(mono(2, {-1, 0}), {Rational(2), Rational(0)}), q("1/2"));
}

TEST(SparsePoly, ConstantTerm)
{
    SparsePoly f = (SparsePoly::constant(2, 1) - mono(2, {1, -1})) * (SparsePoly::constant(2, 1) - mono(2, {-1, 1}));
    EXPECT_EQ(constant_term(f), 2);
    EXPECT_EQ(constant_term(mono(2, {1, -1})), 0);
    EXPECT_EQ(constant_term(SparsePoly::constant(2, q("7/3"))), q("7/3"));
    SparsePoly g = mono(2, {1, 0}) + mono(2, {0, 1});
    EXPECT_EQ(constant_term_of_product(f, g * invert_variables(g)), constant_term(f * g * invert_variables(g)));
}

TEST(SparsePoly, Symmetrize)
{
    EXPECT_EQ(symmetrize(SparsePoly::constant(2, 1)), SparsePoly::constant(2, 2));
    EXPECT_EQ(symmetrize(SparsePoly::variable(2, 0)), SparsePoly::variable(2, 0) + SparsePoly::variable(2, 1));
    EXPECT_EQ(symmetrize(SparsePoly::variable(3, 1)), power_sum(3, 1, 0, 3) * Rational(2));
}

TEST(SparsePoly, SeriesBinomial)
{
    EXPECT_EQ(series_binomial(1, 3), (std::vector<Rational>{1, 1, 1, 1}));
    EXPECT_EQ(series_binomial(q("1/2"), 2), (std::vector<Rational>{1, q("1/2"), q("3/8")}));
    EXPECT_EQ(series_binomial(0, 2), (std::vector<Rational>{1, 0, 0}));
}

TEST(SparsePoly, TruncatedExponential)
{
    SparsePoly x = SparsePoly::variable(1, 0);
    SparsePoly e = exp_truncated(x, 3, 0, 1);
    EXPECT_EQ(e, SparsePoly::constant(1, 1) + x + mono(1, {2}, q("1/2")) + mono(1, {3}, q("1/6")));
}

TEST(SparsePoly, CanonicalTermOrder)
{
    SparsePoly p = mono(2, {0, 1}) + mono(2, {1, 0}) + mono(2, {0, 0});
    std::vector<Exponent> order;
    for (const auto& [e, c] : p.terms())
        order.push_back(e);
    EXPECT_EQ(order[0], make_exponent({1, 0}));
    EXPECT_EQ(order[1], make_exponent({0, 1}));
    EXPECT_EQ(order[2], make_exponent({0, 0}));
}
