#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nsjack {

/// Composition eta = (eta_1, ..., eta_n); indices are 0-based in code.
using Composition = std::vector<int>;

inline int weight(const Composition& eta) { return std::accumulate(eta.begin(), eta.end(), 0); }

inline std::string to_string(const Composition& eta)
{
    std::string s = "(";
    for (std::size_t i = 0; i < eta.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(eta[i]);
    }
    return s + ")";
}

inline void check_composition(const Composition& eta)
{
    if (eta.empty())
        throw ContractError("empty composition");
    for (int v : eta)
        if (v < 0)
            throw ContractError("negative part in composition " + to_string(eta));
}

/// Parts sorted decreasing.
inline Composition eta_plus(const Composition& eta)
{
    Composition p = eta;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

inline bool is_partition(const Composition& eta) { return eta == eta_plus(eta); }

/// nu <= eta in dominance (requires equal length and weight).
inline bool dominance_leq(const Composition& nu, const Composition& eta)
{
    int s = 0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        s += eta[i] - nu[i];
        if (s < 0)
            return false;
    }
    return true;
}

/// The partial order nu < eta: first by dominance of the sorted parts, then
/// by dominance of the compositions themselves.
inline bool precedes(const Composition& nu, const Composition& eta)
{
    if (nu.size() != eta.size())
        throw DimensionError("compositions of different length");
    if (weight(nu) != weight(eta))
        throw OrderError("order undefined between " + to_string(nu) + " and " + to_string(eta));
    if (nu == eta)
        return false;
    Composition np = eta_plus(nu), ep = eta_plus(eta);
    if (np != ep)
        return dominance_leq(np, ep);
    return dominance_leq(nu, eta);
}

/// Total order extending the partial order: compare sorted parts
/// lexicographically, then the compositions lexicographically.
inline bool order_key_less(const Composition& nu, const Composition& eta)
{
    Composition np = eta_plus(nu), ep = eta_plus(eta);
    if (np != ep)
        return np < ep;
    return nu < eta;
}

/// Eigenvalue of the i-th Cherednik operator on E_eta (i is 0-based).
inline Rational eta_bar(const Composition& eta, std::size_t i, const Rational& alpha)
{
    int count = 0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        if (k < i && eta[k] >= eta[i])
            ++count;
        if (k > i && eta[k] > eta[i])
            ++count;
    }
    return alpha * eta[i] - count;
}

inline std::vector<Rational> eta_bar_vector(const Composition& eta, const Rational& alpha)
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i < eta.size(); ++i)
        out.push_back(eta_bar(eta, i, alpha));
    return out;
}

struct NodeStats {
    int arm = 0;
    int arm_colength = 0;
    int leg = 0;
    int leg_colength = 0;
};

/// Statistics of the node in row i (0-based) and column j (1-based,
/// 1 <= j <= eta_i) of the composition diagram.
inline NodeStats node_stats(const Composition& eta, std::size_t i, int j)
{
    if (j < 1 || j > eta[i])
        throw ContractError("node outside the diagram of " + to_string(eta));
    NodeStats s;
    s.arm = eta[i] - j;
    s.arm_colength = j - 1;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        if (k > i) {
            if (j <= eta[k] && eta[k] <= eta[i])
                ++s.leg;
            if (eta[k] > eta[i])
                ++s.leg_colength;
        } else if (k < i) {
            if (j <= eta[k] + 1 && eta[k] + 1 <= eta[i])
                ++s.leg;
            if (eta[k] >= eta[i])
                ++s.leg_colength;
        }
    }
    return s;
}

struct EtaConstants {
    Rational d = 1;
    Rational d_prime = 1;
    Rational e = 1;
    Rational f = 1;
};

/// d, d', e and f = d d' as products over the nodes of eta.
inline EtaConstants eta_constants(const Composition& eta, const Rational& alpha)
{
    const long n = static_cast<long>(eta.size());
    EtaConstants c;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        for (int j = 1; j <= eta[i]; ++j) {
            NodeStats s = node_stats(eta, i, j);
            Rational dp = alpha * (s.arm + 1) + s.leg;
            c.d_prime *= dp;
            c.d *= dp + 1;
            c.e *= alpha * (s.arm_colength + 1) + n - s.leg_colength;
        }
    }
    c.f = c.d * c.d_prime;
    return c;
}

/// Generalized factorial [c]_eta as a product over nodes.
inline Rational generalized_factorial(const Rational& c, const Composition& eta,
                                      const Rational& alpha)
{
    Rational r = 1;
    for (std::size_t i = 0; i < eta.size(); ++i)
        for (int j = 1; j <= eta[i]; ++j) {
            NodeStats s = node_stats(eta, i, j);
            r *= c + s.arm_colength - Rational(s.leg_colength) / alpha;
        }
    return r;
}

/// Rising factorial [r]_kappa = prod_j (r - (j-1)/alpha)_{kappa_j}.
inline Rational rising_factorial_alpha(const Rational& r, const Composition& kappa,
                                       const Rational& alpha)
{
    Rational out = 1;
    for (std::size_t j = 0; j < kappa.size(); ++j)
        out *= pochhammer(r - Rational(static_cast<long>(j)) / alpha, kappa[j]);
    return out;
}

/// Phi eta = (eta_2, ..., eta_n, eta_1 + 1).
inline Composition phi_composition(const Composition& eta)
{
    Composition out(eta.begin() + 1, eta.end());
    out.push_back(eta[0] + 1);
    return out;
}

/// Inverse of phi_composition: (eta_n - 1, eta_1, ..., eta_{n-1}); empty
/// when eta_n = 0, which is where the lowering operator annihilates.
inline std::optional<Composition> phi_hat_composition(const Composition& eta)
{
    if (eta.back() == 0)
        return std::nullopt;
    Composition out;
    out.push_back(eta.back() - 1);
    out.insert(out.end(), eta.begin(), eta.end() - 1);
    return out;
}

/// Swap of parts i and i+1 (0-based).
inline Composition swap_adjacent(Composition eta, std::size_t i)
{
    std::swap(eta[i], eta[i + 1]);
    return eta;
}

inline Composition add_constant(Composition eta, int p)
{
    for (int& v : eta)
        v += p;
    return eta;
}

inline Composition reversed(Composition eta)
{
    std::reverse(eta.begin(), eta.end());
    return eta;
}

/// Arm and leg of the node (i, j) of a partition (0-based row, 1-based column).
inline std::pair<int, int> partition_arm_leg(const Composition& kappa, std::size_t i, int j)
{
    int arm = kappa[i] - j;
    int leg = 0;
    for (std::size_t k = i + 1; k < kappa.size(); ++k)
        if (kappa[k] >= j)
            ++leg;
    return {arm, leg};
}

/// j_kappa = prod_s (alpha a + l + 1)(alpha a + l + alpha).
inline Rational hook_norm_j(const Composition& kappa, const Rational& alpha)
{
    if (!is_partition(kappa))
        throw ContractError("hook_norm_j needs a partition, got " + to_string(kappa));
    Rational r = 1;
    for (std::size_t i = 0; i < kappa.size(); ++i)
        for (int j = 1; j <= kappa[i]; ++j) {
            auto [a, l] = partition_arm_leg(kappa, i, j);
            r *= (alpha * a + l + 1) * (alpha * a + l + alpha);
        }
    return r;
}

/// All compositions of length n and weight w, descending lexicographic.
inline std::vector<Composition> compositions(std::size_t n, int w)
{
    std::vector<Composition> out;
    Composition cur(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == n) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n == 0)
        return out;
    rec(0, w);
    return out;
}

/// All compositions of length n and weight <= w, by increasing weight.
inline std::vector<Composition> compositions_up_to(std::size_t n, int w)
{
    std::vector<Composition> out;
    for (int d = 0; d <= w; ++d) {
        auto c = compositions(n, d);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

/// Partitions of w with at most n parts, padded with zeros to length n.
inline std::vector<Composition> partitions(std::size_t n, int w)
{
    std::vector<Composition> out;
    for (auto& c : compositions(n, w))
        if (is_partition(c))
            out.push_back(c);
    return out;
}

inline Composition zero_composition(std::size_t n) { return Composition(n, 0); }

} // namespace nsjack
