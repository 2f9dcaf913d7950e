#include "util.hpp"

using namespace nsjack;
using nsjack::test::expect_passed;
using nsjack::test::mono;
using nsjack::test::q;

class KernelAlpha : public ::testing::TestWithParam<std::string> {
protected:
    Rational alpha = q(GetParam());
};

TEST(Kernels, OneVariableExponential)
{
    JackBasis jack(1, Rational(1));
    SparsePoly expect(2);
    for (int k = 0; k <= 4; ++k)
        expect += mono(2, {k, k}, 1 / factorial(k));
    EXPECT_EQ(kernel_KA(jack, 4).poly, expect);
    EXPECT_EQ(kernel_KA(jack, 0).poly, SparsePoly::constant(2, 1));
}

TEST_P(KernelAlpha, DegreeOneSlice)
{
    JackBasis jack(2, alpha);
    SparsePoly slice = kernel_KA(jack, 1).poly.block_part(0, 2, 1);
    SparsePoly expect(4);
    for (const auto& eta : compositions(2, 1))
        expect += embed(jack.E(eta), 4, 0) * embed(jack.E(eta), 4, 2) * kernel_weight(eta, alpha);
    EXPECT_EQ(slice, expect);
    EXPECT_EQ(kernel_weight({1, 0}, alpha), alpha * (alpha + 1) / (alpha * (alpha + 2)));
}

TEST_P(KernelAlpha, BinomialExamples)
{
    BinomialTable bin(std::make_shared<JackBasis>(2, alpha));
    EXPECT_EQ(bin({1, 1}, {1, 0}), (alpha + 2) / (alpha + 1));
    EXPECT_EQ(bin({1, 1}, {0, 1}), alpha / (alpha + 1));
    for (const auto& eta : compositions_up_to(2, 3)) {
        EXPECT_EQ(bin(eta, eta), 1);
        EXPECT_EQ(bin(eta, {0, 0}), 1);
    }
    EXPECT_EQ(bin({1, 0}, {2, 0}), 0);
    EXPECT_THROW(bin({1, 0}, {1, 0, 0}), DimensionError);
}

TEST_P(KernelAlpha, BinomialNIndependence)
{
    expect_passed(binomial_n_independence({1, 1}, {1, 0}, 2, 3, alpha));
    expect_passed(binomial_n_independence({2, 0}, {1, 0}, 2, 4, alpha));
    expect_passed(binomial_n_independence({0, 0}, {0, 0}, 2, 3, alpha));
}

TEST_P(KernelAlpha, IdentitiesAtSmallDegree)
{
    for (std::size_t n : {1u, 2u}) {
        auto jack = std::make_shared<JackBasis>(n, alpha);
        BinomialTable bin(jack);
        HermiteBasis herm(jack);
        LaguerreBasis lag(jack, q("1/2"));
        const int D = 3;
        expect_passed(check_kernel_symmetry(*jack, D));
        expect_passed(check_shift_identity(*jack, D));
        expect_passed(check_hermite_generating_function(herm, D));
        expect_passed(check_symmetrization(*jack, D));
        expect_passed(check_exp_connection(bin, D));
        expect_passed(check_pex(bin, D));
        expect_passed(check_binomial_actions(bin, D));
        expect_passed(check_2K1_pde(*jack, q("1/3"), Rational(2), q("5/2"), D));
        expect_passed(check_laguerre_generating_function(lag, D));
        expect_passed(check_1K1_generating_function(lag, q("5/2"), D));
        expect_passed(check_laguerre_binomial_expansions(lag, bin, D));
        expect_passed(check_symmetric_binomials(bin, D));
        expect_passed(check_hermite_summation(herm, 3));
        expect_passed(check_laguerre_summation(lag, 3));
    }
}

TEST(Kernels, DegenerateTwoK1)
{
    JackBasis jack(2, Rational(2));
    Rational a = q("3/2");
    TruncatedKernel k = kernel_2K1(jack, a, a, a, 3);
    EXPECT_EQ(k.poly.block_part(0, 2, 0), SparsePoly::constant(4, 1));
    // b = c collapses to the single-parameter series
    EXPECT_EQ(kernel_2K1(jack, a, q("5/3"), q("5/3"), 3).poly, kernel_series(jack, {a}, {}, 3).poly);
}

TEST(Kernels, SingularLowerParameter)
{
    JackBasis jack(2, Rational(1));
    EXPECT_THROW(kernel_1K1(jack, Rational(1), Rational(0), 2), SingularityError);
}

TEST(Kernels, ZeroFZeroConstantSlice)
{
    JackBasis jack(2, Rational(2));
    EXPECT_EQ(kernel_0F0(jack, 0).poly, SparsePoly::constant(4, 1));
}

INSTANTIATE_TEST_SUITE_P(Alphas, KernelAlpha, ::testing::ValuesIn(test::alpha_strings()), test::param_name);
