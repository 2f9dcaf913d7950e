#include "util.hpp"

using namespace nsjack;
using nsjack::test::expect_passed;
using nsjack::test::mono;
using nsjack::test::q;

TEST(ConstantTerm, InnerProductExamples)
{
    JackBasis jack(2, Rational(1));
    SparsePoly one = SparsePoly::constant(2, 1);
    EXPECT_EQ(ct_inner(one, one, 1), 2);
    EXPECT_EQ(ct_inner(jack.E({1, 0}), jack.E({1, 0}), 1), q("3/2"));
    EXPECT_EQ(ct_inner(jack.E({1, 0}), jack.E({0, 1}), 1), 0);
    EXPECT_EQ(ct_norm_formula({1, 0}, 1), q("3/2"));
    EXPECT_EQ(ct_norm_formula({0, 0}, 1), 2);
    EXPECT_EQ(ct_norm_formula({0, 1}, 1), ct_inner(jack.E({0, 1}), jack.E({0, 1}), 1));
}

TEST(ConstantTerm, WeightFactor)
{
    SparsePoly w = ct_factor(2, 0, 1, 1) * ct_factor(2, 1, 0, 1);
    EXPECT_EQ(w, SparsePoly::constant(2, 2) - mono(2, {1, -1}) - mono(2, {-1, 1}));
    EXPECT_EQ(ct_weight(2, 1), w);
}

TEST(ConstantTerm, NormsAndOrthogonality)
{
    for (int k : {1, 2}) {
        Rational alpha(1, k);
        for (std::size_t n = 1; n <= 3; ++n) {
            JackBasis jack(n, alpha);
            for (int w = 0; w <= 2; ++w) {
                auto etas = compositions(n, w);
                for (const auto& eta : etas)
                    for (const auto& nu : etas) {
                        Rational v = ct_inner(jack.E(eta), jack.E(nu), k);
                        if (eta == nu)
                            EXPECT_EQ(v, ct_norm_formula(eta, k)) << to_string(eta);
                        else
                            EXPECT_EQ(v, 0) << to_string(eta) << " " << to_string(nu);
                    }
            }
        }
    }
}

TEST(ConstantTerm, Kadell)
{
    JackBasis jack(2, Rational(1));
    expect_passed(kadell_ratio_check(jack, {0, 0}, 1, 1));
    expect_passed(kadell_ratio_check(jack, {1, 0}, 1, 1));
    expect_passed(kadell_ratio_check(jack, {1, 0}, 1, 0));
    JackBasis jack2(2, q("1/2"));
    expect_passed(kadell_ratio_check(jack2, {1, 1}, 2, 1));
}

TEST(ConstantTerm, NormRelation)
{
    JackBasis jack(2, Rational(1));
    expect_passed(norm_relation_check(jack, {0, 0}));
    expect_passed(norm_relation_check(jack, {1, 0}));
    expect_passed(norm_relation_check(jack, {1, 1}));
}

TEST(ConstantTerm, NonIntegerK)
{
    EXPECT_THROW(k_from_alpha(Rational(2)), ParameterError);
    EXPECT_THROW(k_from_alpha(q("2/3")), ParameterError);
    EXPECT_EQ(k_from_alpha(q("1/3")), 3);
    EXPECT_THROW(ct_inner(SparsePoly::constant(2, 1), SparsePoly::constant(2, 1), 0), ParameterError);
}

TEST(Sahi, OneVariablePowerSums)
{
    SahiInnerProduct s(1, Rational(1), 4);
    for (int k = 0; k <= 4; ++k)
        EXPECT_EQ(s.p({k}), mono(1, {k}, k + 1));
}

TEST(Sahi, JackOrthogonality)
{
    for (const auto& str : test::alpha_strings()) {
        Rational alpha = q(str);
        JackBasis jack(2, alpha);
        SahiInnerProduct s(2, alpha, 3);
        for (int w = 1; w <= 3; ++w)
            for (const auto& eta : compositions(2, w))
                for (const auto& nu : compositions(2, w)) {
                    EtaConstants c = eta_constants(eta, alpha);
                    Rational expect = eta == nu ? c.d_prime / c.d : Rational(0);
                    EXPECT_EQ(s.inner(jack.E(eta), jack.E(nu)), expect);
                }
        // [f, g]_H = [n/alpha + 1]_lambda <f, g> on the lambda = (1) block
        Rational fac = generalized_factorial(2 / alpha + 1, {1, 0}, alpha);
        SparsePoly f = jack.E({1, 0}) + jack.E({0, 1}) * 3, g = jack.E({1, 0}) * 2 - jack.E({0, 1});
        EXPECT_EQ(pairing_H(jack.context(), f, g), fac * s.inner(f, g));
    }
}
