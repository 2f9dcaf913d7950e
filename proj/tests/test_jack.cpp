#include "util.hpp"

using namespace nsjack;
using nsjack::test::mono;
using nsjack::test::q;

class JackAlpha : public ::testing::TestWithParam<std::string> {
protected:
    Rational alpha = q(GetParam());
};

TEST_P(JackAlpha, SmallExamples)
{
    JackBasis jack(2, alpha);
    EXPECT_EQ(jack.E({0, 1}), mono(2, {0, 1}));
    EXPECT_EQ(jack.E({1, 0}), mono(2, {1, 0}) + mono(2, {0, 1}, 1 / (alpha + 1)));
    EXPECT_EQ(jack.E({1, 1}), mono(2, {1, 1}));
    EXPECT_EQ(jack.E({0, 0}), SparsePoly::constant(2, 1));
}

TEST_P(JackAlpha, OracleExamples)
{
    EXPECT_EQ(jack_E_oracle(2, alpha, {1, 0}), mono(2, {1, 0}) + mono(2, {0, 1}, 1 / (alpha + 1)));
    EXPECT_EQ(jack_E_oracle(2, alpha, {0, 0}), SparsePoly::constant(2, 1));
    EXPECT_EQ(jack_E_oracle(2, alpha, {0, 1}), mono(2, {0, 1}));
}

TEST_P(JackAlpha, EigenAndOracle)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        JackBasis jack(n, alpha);
        for (const auto& eta : compositions_up_to(n, 3)) {
            const SparsePoly& E = jack.E(eta);
            for (std::size_t i = 0; i < n; ++i)
                EXPECT_EQ(ops::xi(jack.context(), i)(E), E * eta_bar(eta, i, alpha)) << to_string(eta);
            EXPECT_EQ(E, jack_E_oracle(n, alpha, eta)) << to_string(eta);
            EXPECT_EQ(E.coeff(exponent_of(eta)), 1);
            for (const auto& [e, c] : E.terms()) {
                EXPECT_GT(c, 0);
                Composition nu = composition_of(e, n);
                if (nu != eta) {
                    EXPECT_TRUE(precedes(nu, eta)) << to_string(nu) << " in E" << to_string(eta);
                }
            }
        }
    }
}

TEST_P(JackAlpha, ValueAtOnes)
{
    JackBasis jack(2, alpha);
    EXPECT_EQ(jack.value_at_ones({1, 0}), (alpha + 2) / (alpha + 1));
    EXPECT_EQ(jack.value_at_ones({0, 0}), 1);
    JackBasis jack3(3, alpha);
    for (const auto& eta : compositions_up_to(3, 3))
        EXPECT_EQ(evaluate_at_ones(jack3.E(eta)), jack3.value_at_ones(eta));
}

TEST_P(JackAlpha, SymmetricJack)
{
    JackBasis jack(2, alpha);
    SparsePoly J1 = jack.J({1, 0});
    EXPECT_EQ(symmetrize(J1), J1 * Rational(2));
    Rational c = J1.coeff(make_exponent({1, 0}));
    EXPECT_EQ(J1, (mono(2, {1, 0}) + mono(2, {0, 1})) * c);
    EXPECT_EQ(jack.J({0, 0}), SparsePoly::constant(2, 1));
    SparsePoly J11 = jack.J({1, 1});
    EXPECT_EQ(J11.size(), 1u);
    EXPECT_NE(J11.coeff(make_exponent({1, 1})), 0);
    JackBasis jack3(3, alpha);
    for (const auto& kappa : partitions(3, 3)) {
        SparsePoly J = jack3.J(kappa);
        EXPECT_EQ(symmetrize(J), J * Rational(6));
        // monomial x^kappa in J / j_kappa is 1/d'_kappa
        EXPECT_EQ(J.coeff(exponent_of(kappa)) / hook_norm_j(kappa, alpha),
                  1 / eta_constants(kappa, alpha).d_prime);
    }
    EXPECT_THROW(jack.J({0, 1}), ContractError);
}

TEST_P(JackAlpha, SymmetrizationConstant)
{
    JackBasis jack(3, alpha);
    for (const auto& eta : compositions_up_to(3, 3))
        EXPECT_EQ(symmetrize(jack.E(eta)), jack.J(eta_plus(eta)) * jack.sym_constant(eta));
}

TEST_P(JackAlpha, ShiftAndReverse)
{
    JackBasis jack(3, alpha);
    for (const auto& eta : compositions_up_to(3, 2)) {
        for (int p : {1, 2})
            EXPECT_EQ(jack.E(eta) * mono(3, {p, p, p}), jack.E(add_constant(eta, p)));
        int m = *std::max_element(eta.begin(), eta.end());
        Composition rev = reversed(eta);
        for (int& v : rev)
            v = m - v;
        EXPECT_EQ(mono(3, {m, m, m}) * invert_variables(jack.E(eta)),
                  permute(jack.E(rev), {2, 1, 0}));
    }
}

TEST_P(JackAlpha, Expansion)
{
    JackBasis jack(2, alpha);
    SparsePoly f = mono(2, {2, 1}) + mono(2, {0, 1}, 3);
    Expansion ex = jack.expand(f);
    SparsePoly back(2);
    for (const auto& [eta, c] : ex)
        back += jack.E(eta) * c;
    EXPECT_EQ(back, f);
}

TEST(Jack, BadInput)
{
    EXPECT_THROW(JackBasis(2, Rational(0)), ParameterError);
    JackBasis jack(2, Rational(1));
    EXPECT_THROW(jack.E({1, 0, 0}), DimensionError);
    EXPECT_THROW(jack.E({-1, 0}), ContractError);
}

TEST(Jack, SeededCacheIsUsed)
{
    JackBasis jack(2, Rational(1));
    jack.seed({1, 0}, jack_E_oracle(2, Rational(1), {1, 0}));
    EXPECT_EQ(jack.cache_size(), 1u);
    EXPECT_EQ(jack.E({1, 0}), mono(2, {1, 0}) + mono(2, {0, 1}, q("1/2")));
}

INSTANTIATE_TEST_SUITE_P(Alphas, JackAlpha, ::testing::ValuesIn(test::alpha_strings()), test::param_name);
