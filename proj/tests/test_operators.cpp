#include "util.hpp"

using namespace nsjack;
using nsjack::test::mono;
using nsjack::test::q;

class OperatorAlpha : public ::testing::TestWithParam<std::string> {
protected:
    Rational alpha = q(GetParam());
    OperatorContext c2{2, q(GetParam())};
    SparsePoly one2 = SparsePoly::constant(2, 1);
};

TEST(Operators, TranspositionAndSignFlip)
{
    EXPECT_EQ(apply_transposition(mono(2, {2, 1}), 0, 1), mono(2, {1, 2}));
    EXPECT_EQ(apply_sign_flip(mono(2, {1, 0}) + mono(2, {0, 1}), 0), mono(2, {0, 1}) - mono(2, {1, 0}));
    EXPECT_EQ(apply_transposition(mono(2, {1, 0}) + mono(2, {0, 1}), 0, 1), mono(2, {1, 0}) + mono(2, {0, 1}));
}

TEST(Operators, DividedDifference)
{
    EXPECT_EQ(apply_divided_difference(mono(2, {2, 0}), 0, 1), mono(2, {1, 0}) + mono(2, {0, 1}));
    EXPECT_TRUE(apply_divided_difference(mono(2, {1, 1}), 0, 1).is_zero());
    EXPECT_EQ(apply_divided_difference(mono(2, {2, 1}), 0, 1), mono(2, {1, 1}));
    // against a brute-force product check on a few random-ish polynomials
    SparsePoly p = mono(3, {3, 1, 0}, q("2/3")) + mono(3, {0, 2, 2}) - mono(3, {1, 0, 4}, 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j)
                continue;
            SparsePoly dd = apply_divided_difference(p, i, j);
            SparsePoly diff = SparsePoly::variable(3, i) - SparsePoly::variable(3, j);
            EXPECT_EQ(dd * diff, p - apply_transposition(p, i, j));
        }
}

TEST(Operators, DividedDifferenceLaurentRemainder)
{
    EXPECT_THROW(divide_by_difference(mono(2, {1, 0}), 0, 1), ArithmeticError);
}

TEST_P(OperatorAlpha, DunklA)
{
    EXPECT_EQ(ops::dunkl(c2, mono(2, {1, 1}), 0), mono(2, {0, 1}));
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_TRUE(ops::dunkl(c2, one2, i).is_zero());
    EXPECT_EQ(ops::dunkl(c2, mono(2, {1, 0}), 0), SparsePoly::constant(2, 1 + 1 / alpha));
}

TEST_P(OperatorAlpha, Cherednik)
{
    OperatorContext c3(3, alpha);
    SparsePoly one3 = SparsePoly::constant(3, 1);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(ops::xi(c3, i)(one3), one3 * Rational(-static_cast<long>(i)));
    EXPECT_EQ(ops::xi(c2, 0)(mono(2, {0, 1})), -mono(2, {0, 1}));
    EXPECT_EQ(ops::xi(c2, 0)(mono(2, {1, 0})), mono(2, {1, 0}, alpha) + mono(2, {0, 1}));
    SparsePoly p = mono(3, {2, 0, 1}) + mono(3, {0, 1, 1}, q("1/3"));
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(ops::xi(c3, i)(p), ops::xi_divided(c3, i)(p));
}

TEST_P(OperatorAlpha, Laplacian)
{
    EXPECT_EQ(ops::Delta_A(c2)(mono(2, {1, 1})), SparsePoly::constant(2, -2 / alpha));
    EXPECT_TRUE(ops::Delta_A(c2)(mono(2, {1, 0}) + mono(2, {0, 1}, 3) + one2).is_zero());
    OperatorContext c1(1, alpha);
    EXPECT_EQ(ops::Delta_A(c1)(mono(1, {2})), SparsePoly::constant(1, 2));
}

TEST_P(OperatorAlpha, RaisingLowering)
{
    EXPECT_EQ(ops::Phi(c2)(one2), mono(2, {0, 1}));
    EXPECT_EQ(ops::Phi_hat(c2)(mono(2, {0, 1})), SparsePoly::constant(2, 1 + 1 / alpha));
    EXPECT_EQ(ops::Phi_hat_star(c2)(one2), mono(2, {0, 1}, 2));
}

TEST_P(OperatorAlpha, TypeB)
{
    for (const auto& s : {"0", "1/2", "1"}) {
        OperatorContext c(2, alpha, q(s));
        SparsePoly f = mono(2, {1, 0}) + mono(2, {0, 1}, 1 / (alpha + 1));
        EXPECT_TRUE(ops::B(c, 1)(f).is_zero());
        EXPECT_EQ(ops::B(c, 0)(f), SparsePoly::constant(2, (c.a + 1 + 1 / alpha) * (alpha + 2) / (alpha + 1)));
        EXPECT_TRUE(ops::B(c, 0)(one2).is_zero());
        EXPECT_EQ(ops::Psi(c)(one2), mono(2, {0, 1}));
        EXPECT_TRUE(ops::Psi_hat(c)(one2 * Rational(3)).is_zero());
    }
}

// Delta_B on x-polynomials agrees with 4 sum B_i on y = x^2.
TEST_P(OperatorAlpha, TypeBLaplacianInX)
{
    OperatorContext c(2, alpha, q("1/2"));
    for (const auto& e : std::vector<std::vector<int>>{{1, 0}, {2, 1}, {0, 3}, {2, 2}}) {
        SparsePoly y = mono(2, e);
        EXPECT_EQ(ops::Delta_B_x(c)(square_variables(y)), square_variables(ops::Delta_B(c)(y)));
    }
}

TEST_P(OperatorAlpha, EulerAndH)
{
    EXPECT_EQ(ops::E_tilde(c2, 1)(mono(2, {2, 1})), mono(2, {2, 1}, 3));
    OperatorContext c3(3, alpha);
    SparsePoly one3 = SparsePoly::constant(3, 1);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(ops::h(c3, i)(one3), one3 * Rational(-static_cast<long>(i)));
}

TEST_P(OperatorAlpha, DunklCommute)
{
    OperatorContext c3(3, alpha);
    SparsePoly p = mono(3, {2, 1, 0}) + mono(3, {0, 2, 2}, q("3/5")) - mono(3, {1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_TRUE(commutator(ops::T(c3, i), ops::T(c3, j))(p).is_zero());
}

TEST(Operators, BadContext)
{
    EXPECT_THROW(OperatorContext(2, Rational(0)), ParameterError);
    EXPECT_THROW(OperatorContext(2, Rational(-1)), ParameterError);
    EXPECT_THROW(OperatorContext(0, Rational(1)), ParameterError);
}

TEST(Operators, OperatorAlgebra)
{
    OperatorContext c(2, Rational(1));
    Operator x1 = ops::multiply_x(c, 0), d1 = ops::derivative(c, 0);
    SparsePoly p = mono(2, {3, 1});
    EXPECT_EQ(commutator(d1, x1)(p), p);
    EXPECT_EQ((x1 * d1)(p), mono(2, {3, 1}, 3));
    EXPECT_EQ((Rational(2) * Operator::identity() - Operator::scalar(1))(p), p);
}

INSTANTIATE_TEST_SUITE_P(Alphas, OperatorAlpha, ::testing::ValuesIn(test::alpha_strings()), test::param_name);
