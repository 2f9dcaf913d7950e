#include "util.hpp"

using namespace nsjack;
using nsjack::test::mono;
using nsjack::test::q;

class HLAlpha : public ::testing::TestWithParam<std::string> {
protected:
    Rational alpha = q(GetParam());
    std::shared_ptr<JackBasis> jack2 = std::make_shared<JackBasis>(2, q(GetParam()));
    std::shared_ptr<JackBasis> jack3 = std::make_shared<JackBasis>(3, q(GetParam()));
};

TEST_P(HLAlpha, HermiteExamples)
{
    HermiteBasis herm(jack2);
    EXPECT_EQ(herm.E({1, 0}), mono(2, {1, 0}) + mono(2, {0, 1}, 1 / (alpha + 1)));
    EXPECT_EQ(herm.E({1, 1}), mono(2, {1, 1}) + SparsePoly::constant(2, 1 / (2 * alpha)));
    EXPECT_EQ(herm.norm_ratio({0, 0}), 1);
    EXPECT_EQ(herm.norm_ratio({1, 0}), (alpha + 2) / (2 * (alpha + 1)));
}

TEST_P(HLAlpha, HermiteEigen)
{
    HermiteBasis herm(jack3);
    const auto& c = herm.context();
    for (const auto& eta : compositions_up_to(3, 3)) {
        const SparsePoly& E = herm.E(eta);
        for (std::size_t i = 0; i < 3; ++i)
            EXPECT_EQ(ops::h(c, i)(E), E * eta_bar(eta, i, alpha)) << to_string(eta);
        SparsePoly HH = ops::Delta_A(c)(E) - ops::E_tilde(c, 1)(E) * Rational(2);
        EXPECT_EQ(HH, E * Rational(-2 * weight(eta)));
    }
}

TEST_P(HLAlpha, HermiteRaiseLower)
{
    HermiteBasis herm(jack2);
    const auto& c = herm.context();
    EXPECT_EQ(ops::Phi_hat_star(c)(herm.E({0, 0})), herm.E({0, 1}) * Rational(2));
    EXPECT_EQ(herm.E({0, 1}), mono(2, {0, 1}));
    EXPECT_TRUE(ops::Phi_hat(c)(herm.E({1, 0})).is_zero());
    for (const auto& eta : compositions_up_to(2, 3))
        if (eta.back() >= 1) {
            EXPECT_EQ(ops::Phi_hat(c)(herm.E(eta)), herm.E(*phi_hat_composition(eta)) * lowering_constant(eta, alpha));
        }
}

TEST_P(HLAlpha, LaguerreExamples)
{
    Rational qq = 1 + 1 / alpha;
    EXPECT_EQ(laguerre_q(2, alpha), qq);
    for (const auto& s : {"0", "1/2", "1"}) {
        Rational a = q(s);
        LaguerreBasis lag(jack2, a);
        SparsePoly expect = mono(2, {1, 0}) + mono(2, {0, 1}, 1 / (alpha + 1)) -
                            SparsePoly::constant(2, (a + qq) * (alpha + 2) / (alpha + 1));
        EXPECT_EQ(lag.E({1, 0}), expect);
        EXPECT_EQ(lag.at_zero({1, 0}), -(a + 1 + 1 / alpha) * (alpha + 2) / (alpha + 1));
        EXPECT_EQ(lag.at_zero({0, 0}), 1);
        EXPECT_EQ(lag.at_zero({1, 1}), constant_term(lag.E({1, 1})));
        EXPECT_EQ(lag.norm_ratio({0, 0}), 1);
        EXPECT_EQ(lag.norm_ratio({1, 0}), (a + qq) * (alpha + 2) / (alpha + 1));
        EXPECT_EQ(ops::Psi_hat_star(lag.context())(lag.E({0, 0})), lag.E({0, 1}));
    }
}

TEST_P(HLAlpha, LaguerreEigen)
{
    LaguerreBasis lag(jack3, q("1/2"));
    const auto& c = lag.context();
    for (const auto& eta : compositions_up_to(3, 3)) {
        const SparsePoly& E = lag.E(eta);
        for (std::size_t i = 0; i < 3; ++i)
            EXPECT_EQ(ops::l(c, i)(E), E * eta_bar(eta, i, alpha)) << to_string(eta);
        SparsePoly HL = (ops::Sum_B(c)(E) - ops::E_tilde(c, 1)(E)) * Rational(4);
        EXPECT_EQ(HL, E * Rational(-4 * weight(eta)));
        EXPECT_EQ(constant_term(E), lag.at_zero(eta));
    }
}

TEST_P(HLAlpha, Pairings)
{
    const auto& c = jack2->context();
    EXPECT_EQ(pairing_H(c, jack2->E({1, 0}), jack2->E({1, 0})), (alpha + 2) / (alpha + 1));
    EXPECT_EQ(pairing_H(c, jack2->E({1, 0}), jack2->E({0, 1})), 0);
    SparsePoly one = SparsePoly::constant(2, 1);
    EXPECT_EQ(pairing_H(c, one, one), 1);
    for (const auto& eta : compositions(2, 3))
        for (const auto& nu : compositions(2, 3)) {
            Rational expect = eta == nu ? pairing_H_value(eta, alpha) : Rational(0);
            EXPECT_EQ(pairing_H(c, jack2->E(nu), jack2->E(eta)), expect);
        }
    OperatorContext cb(2, alpha, q("1/2"));
    for (const auto& eta : compositions(2, 2))
        for (const auto& nu : compositions(2, 2)) {
            Rational expect = eta == nu ? pairing_L_value(eta, alpha, cb.a) : Rational(0);
            EXPECT_EQ(pairing_L(cb, jack2->E(nu), jack2->E(eta)), expect);
        }
    EXPECT_THROW(pairing_H(c, one + mono(2, {1, 0}), one), ContractError);
}

TEST_P(HLAlpha, HarmonicA)
{
    const auto& c = jack2->context();
    auto single = harmonic_decompose_A(c, jack2->E({1, 0}));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].m, 0);
    EXPECT_EQ(single[0].Y, jack2->E({1, 0}));

    auto comps = harmonic_decompose_A(c, jack2->E({1, 1}));
    ASSERT_EQ(comps.size(), 2u);
    for (const auto& h : comps)
        EXPECT_TRUE(ops::Delta_A(c)(h.Y).is_zero());
    EXPECT_EQ(harmonic_reconstruct_A(c, comps, 2), jack2->E({1, 1}));

    HermiteBasis herm(jack3);
    for (const auto& eta : compositions_up_to(3, 3)) {
        auto cs = harmonic_decompose_A(herm.context(), jack3->E(eta));
        EXPECT_EQ(hermite_from_harmonic(herm.context(), cs, weight(eta), 3), herm.E(eta)) << to_string(eta);
    }
}

TEST_P(HLAlpha, HarmonicB)
{
    LaguerreBasis lag(jack3, q("1/2"));
    const auto& c = lag.context();
    for (const auto& eta : compositions_up_to(3, 3)) {
        auto cs = harmonic_decompose_B(c, jack3->E(eta));
        for (const auto& h : cs)
            EXPECT_TRUE(ops::Sum_B(c)(h.Y).is_zero());
        EXPECT_EQ(harmonic_reconstruct_B(c, cs, 3), jack3->E(eta));
        EXPECT_EQ(laguerre_from_harmonic(c, cs, weight(eta), 3), lag.E(eta)) << to_string(eta);
    }
}

TEST(HermiteLaguerre, OneVariableLaguerre)
{
    // L_2^b(r) = ((b+1)(b+2) - 2(b+2) r + r^2) / 2
    Rational b = q("1/2");
    SparsePoly r = SparsePoly::variable(1, 0);
    SparsePoly expect = SparsePoly::constant(1, (b + 1) * (b + 2) / 2) - r * (b + 2) + mono(1, {2}, q("1/2"));
    EXPECT_EQ(laguerre_1d(2, b, r), expect);
}

TEST(HermiteLaguerre, BadParameter)
{
    auto jack = std::make_shared<JackBasis>(2, Rational(1));
    EXPECT_THROW(LaguerreBasis(jack, Rational(-1)), ParameterError);
}

INSTANTIATE_TEST_SUITE_P(Alphas, HLAlpha, ::testing::ValuesIn(test::alpha_strings()), test::param_name);
