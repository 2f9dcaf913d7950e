#include "util.hpp"

using namespace nsjack;
using nsjack::test::q;

TEST(Compositions, EtaPlus)
{
    EXPECT_EQ(eta_plus({0, 2, 1}), (Composition{2, 1, 0}));
    EXPECT_EQ(eta_plus({0, 0}), (Composition{0, 0}));
    EXPECT_EQ(eta_plus({1, 3, 1, 0}), (Composition{3, 1, 1, 0}));
}

TEST(Compositions, PartialOrder)
{
    EXPECT_TRUE(precedes({1, 1}, {2, 0}));
    EXPECT_TRUE(precedes({0, 1}, {1, 0}));
    EXPECT_FALSE(precedes({1, 0}, {0, 1}));
    EXPECT_FALSE(precedes({2, 1}, {2, 1}));
    EXPECT_THROW(precedes({1, 0}, {2, 0}), OrderError);
}

TEST(Compositions, Enumeration)
{
    EXPECT_EQ(compositions(2, 2).size(), 3u);
    EXPECT_EQ(compositions(3, 3).size(), 10u);
    EXPECT_EQ(compositions_up_to(2, 2).size(), 6u);
    EXPECT_EQ(partitions(3, 3).size(), 3u);
}

TEST(Compositions, EtaBar)
{
    for (const auto& s : test::alpha_strings()) {
        Rational alpha = q(s);
        for (std::size_t i = 0; i < 3; ++i)
            EXPECT_EQ(eta_bar({0, 0, 0}, i, alpha), -static_cast<long>(i));
        EXPECT_EQ(eta_bar({0, 1}, 0, alpha), -1);
        EXPECT_EQ(eta_bar({0, 1}, 1, alpha), alpha);
    }
    EXPECT_EQ(eta_bar_vector({1, 0}, 1), (std::vector<Rational>{1, -1}));
}

// Brute-force leg counts straight from the definition.
TEST(Compositions, NodeStatsAgainstCounting)
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& eta : compositions_up_to(n, 3))
            for (std::size_t i = 0; i < n; ++i)
                for (int j = 1; j <= eta[i]; ++j) {
                    NodeStats s = node_stats(eta, i, j);
                    int leg = 0, leg_co = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (k < i && j <= eta[k] + 1 && eta[k] + 1 <= eta[i])
                            ++leg;
                        if (k > i && j <= eta[k] && eta[k] <= eta[i])
                            ++leg;
                        if (k < i && eta[k] >= eta[i])
                            ++leg_co;
                        if (k > i && eta[k] > eta[i])
                            ++leg_co;
                    }
                    EXPECT_EQ(s.arm, eta[i] - j);
                    EXPECT_EQ(s.arm_colength, j - 1);
                    EXPECT_EQ(s.leg, leg) << to_string(eta);
                    EXPECT_EQ(s.leg_colength, leg_co) << to_string(eta);
                }
}

TEST(Compositions, EtaConstants)
{
    for (const auto& s : test::alpha_strings()) {
        Rational alpha = q(s);
        EtaConstants c = eta_constants({1, 0}, alpha);
        EXPECT_EQ(c.d_prime, alpha);
        EXPECT_EQ(c.d, alpha + 1);
        EXPECT_EQ(c.e, alpha + 2);
        EXPECT_EQ(c.f, c.d * c.d_prime);
        EtaConstants z = eta_constants({0, 0, 0}, alpha);
        EXPECT_EQ(z.d, 1);
        EXPECT_EQ(z.d_prime, 1);
        EXPECT_EQ(z.e, 1);
        EXPECT_EQ(generalized_factorial(q("5/3"), {1, 0}, alpha), q("5/3"));
        EXPECT_EQ(generalized_factorial(q("5/3"), {0, 0}, alpha), 1);
    }
}

TEST(Compositions, ConstantRecursions)
{
    for (const auto& s : test::alpha_strings()) {
        Rational alpha = q(s);
        for (std::size_t n = 1; n <= 3; ++n)
            for (const auto& eta : compositions_up_to(n, 4)) {
                const long nn = static_cast<long>(n);
                Composition up = phi_composition(eta);
                EtaConstants c = eta_constants(eta, alpha), cu = eta_constants(up, alpha);
                Rational b1 = eta_bar(eta, 0, alpha);
                EXPECT_EQ(cu.d / c.d, b1 + alpha + nn);
                EXPECT_EQ(cu.e / c.e, b1 + alpha + nn);
                EXPECT_EQ(cu.d_prime / c.d_prime, b1 + alpha + nn - 1);
                EXPECT_EQ(c.e, pow(alpha, weight(eta)) * generalized_factorial(Rational(nn) / alpha + 1, eta, alpha));
                Rational cc = q("2/7");
                EXPECT_EQ(generalized_factorial(cc, up, alpha) / generalized_factorial(cc, eta, alpha),
                          cc + b1 / alpha);
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    Composition sw = swap_adjacent(eta, i);
                    EXPECT_EQ(eta_constants(sw, alpha).e, c.e);
                    EXPECT_EQ(generalized_factorial(cc, sw, alpha), generalized_factorial(cc, eta, alpha));
                }
                if (eta.back() >= 1) {
                    Composition down = *phi_hat_composition(eta);
                    EXPECT_EQ(c.d_prime / eta_constants(down, alpha).d_prime,
                              eta_bar(eta, n - 1, alpha) + nn - 1);
                    EXPECT_EQ(generalized_factorial(cc, eta, alpha) / generalized_factorial(cc, down, alpha),
                              cc - 1 + eta_bar(eta, n - 1, alpha) / alpha);
                }
                std::vector<Rational> rot = eta_bar_vector(up, alpha), bars = eta_bar_vector(eta, alpha);
                for (std::size_t i = 0; i + 1 < n; ++i)
                    EXPECT_EQ(rot[i], bars[i + 1]);
                EXPECT_EQ(rot[n - 1], bars[0] + alpha);
            }
    }
}

TEST(Compositions, Maps)
{
    EXPECT_EQ(phi_composition({0, 0}), (Composition{0, 1}));
    EXPECT_EQ(*phi_hat_composition({0, 1}), (Composition{0, 0}));
    EXPECT_FALSE(phi_hat_composition({1, 0}).has_value());
    EXPECT_EQ(swap_adjacent({1, 0}, 0), (Composition{0, 1}));
    EXPECT_EQ(add_constant({1, 0, 2}, 2), (Composition{3, 2, 4}));
    EXPECT_EQ(reversed({1, 0, 2}), (Composition{2, 0, 1}));
}

TEST(Compositions, HookNorm)
{
    for (const auto& s : test::alpha_strings()) {
        Rational alpha = q(s);
        EXPECT_EQ(hook_norm_j({1}, alpha), alpha);
        EXPECT_EQ(hook_norm_j({0, 0}, alpha), 1);
        EXPECT_EQ(hook_norm_j({1, 1}, alpha), 2 * alpha * (alpha + 1));
    }
}

TEST(Compositions, Malformed)
{
    EXPECT_THROW(check_composition({1, -1}), ContractError);
    EXPECT_THROW(node_stats({1, 0}, 1, 1), ContractError);
}
