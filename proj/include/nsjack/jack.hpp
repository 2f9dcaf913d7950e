#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "operators.hpp"
#include "poly.hpp"

namespace nsjack {

/// Coefficient map of an expansion in a labelled basis.
using Expansion = std::map<Composition, Rational>;

inline Exponent exponent_of(const Composition& eta) { return make_exponent(eta); }

inline Composition composition_of(const Exponent& e, std::size_t n)
{
    return Composition(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
}

/// Memo table of non-symmetric Jack polynomials E_eta for fixed (n, alpha).
/// Lookups take a shared lock; a miss computes outside the lock and
/// inserts idempotently.
class JackBasis {
public:
    JackBasis(std::size_t n, Rational alpha) : ctx_(n, std::move(alpha)) {}

    std::size_t n() const { return ctx_.n; }
    const Rational& alpha() const { return ctx_.alpha; }
    const OperatorContext& context() const { return ctx_; }

    /// E_eta built by the raising-operator / s_i recursion.
    const SparsePoly& E(const Composition& eta)
    {
        check(eta);
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(eta);
            if (it != cache_.end())
                return it->second;
        }
        SparsePoly value = build(eta);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(eta, std::move(value)).first->second;
    }

    EtaConstants constants(const Composition& eta) const { return eta_constants(eta, ctx_.alpha); }

    /// E_eta(1^n) = e_eta / d_eta.
    Rational value_at_ones(const Composition& eta) const
    {
        EtaConstants c = constants(eta);
        return c.e / c.d;
    }

    /// F_eta = d_eta E_eta.
    SparsePoly F(const Composition& eta) { return E(eta) * constants(eta).d; }

    /// Symmetric Jack polynomial J_kappa = j_kappa sum_{eta+ = kappa} E_eta / d'_eta.
    SparsePoly J(const Composition& kappa)
    {
        check(kappa);
        if (!is_partition(kappa))
            throw ContractError("J needs a partition, got " + to_string(kappa));
        SparsePoly r(n());
        Composition eta = kappa;
        std::sort(eta.begin(), eta.end());
        do {
            r += E(eta) * (1 / constants(eta).d_prime);
        } while (std::next_permutation(eta.begin(), eta.end()));
        return r * hook_norm_j(kappa, alpha());
    }

    /// a_eta with Sym E_eta = a_eta J_{eta+}.
    Rational sym_constant(const Composition& eta)
    {
        EtaConstants c = constants(eta);
        return factorial(static_cast<long>(n())) * c.e / (c.d * evaluate_at_ones(J(eta_plus(eta))));
    }

    /// Expansion of f in the basis {E_nu}.  Greedy reduction from the
    /// largest monomial in the total order extending the partial order.
    Expansion expand(const SparsePoly& f)
    {
        if (f.nvars() != n())
            throw DimensionError("expand: polynomial has wrong variable count");
        if (f.has_negative_exponent())
            throw ContractError("expand: Laurent input");
        Expansion out;
        SparsePoly rest = f;
        while (!rest.is_zero()) {
            auto best = rest.terms().begin();
            Composition best_c = composition_of(best->first, n());
            for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
                Composition c = composition_of(it->first, n());
                if (weight(c) > weight(best_c) ||
                    (weight(c) == weight(best_c) && order_key_less(best_c, c))) {
                    best = it;
                    best_c = c;
                }
            }
            Rational coeff = best->second;
            out[best_c] = coeff;
            rest -= E(best_c) * coeff;
        }
        return out;
    }

    std::size_t cache_size() const
    {
        std::shared_lock lock(mutex_);
        return cache_.size();
    }

    /// Snapshot of the cache, for serialization.
    std::map<Composition, SparsePoly> snapshot() const
    {
        std::shared_lock lock(mutex_);
        return cache_;
    }

    /// Seeds the cache (values are trusted to be canonical E_eta).
    void seed(const Composition& eta, const SparsePoly& value)
    {
        check(eta);
        std::unique_lock lock(mutex_);
        cache_.try_emplace(eta, value);
    }

private:
    void check(const Composition& eta) const
    {
        check_composition(eta);
        if (eta.size() != n())
            throw DimensionError("composition " + to_string(eta) + " has length " +
                                 std::to_string(eta.size()) + ", expected " + std::to_string(n()));
    }

    SparsePoly build(const Composition& eta)
    {
        const std::size_t n = this->n();
        if (weight(eta) == 0)
            return SparsePoly::constant(n, 1);
        if (eta.back() >= 1) {
            Composition lower = *phi_hat_composition(eta);
            return ops::Phi(ctx_)(E(lower));
        }
        // eta_n = 0: use the largest descent eta_i > eta_{i+1}.
        std::size_t i = n - 1;
        while (i > 0 && !(eta[i - 1] > eta[i]))
            --i;
        if (i == 0)
            throw ArithmeticError("no descent in " + to_string(eta));
        std::size_t d = i - 1;
        Composition nu = swap_adjacent(eta, d);
        Rational delta = eta_bar(nu, d, alpha()) - eta_bar(nu, d + 1, alpha());
        if (delta == 0)
            throw ArithmeticError("vanishing eigenvalue gap building " + to_string(eta));
        const SparsePoly& e_nu = E(nu);
        return apply_transposition(e_nu, d, d + 1) - e_nu * (1 / delta);
    }

    OperatorContext ctx_;
    mutable std::shared_mutex mutex_;
    std::map<Composition, SparsePoly> cache_;
};

/// Independent construction of E_eta: back-substitution for the joint
/// eigenvector of the divided-difference Cherednik operators on the
/// monomials below eta, followed by a full residual check.
inline SparsePoly jack_E_oracle(std::size_t n, const Rational& alpha, const Composition& eta)
{
    OperatorContext ctx(n, alpha);
    check_composition(eta);
    if (eta.size() != n)
        throw DimensionError("oracle: composition length mismatch");
    std::vector<Composition> basis;
    for (auto& nu : compositions(n, weight(eta)))
        if (nu == eta || precedes(nu, eta))
            basis.push_back(nu);
    // Descending in the total order, so every nu above mu is handled first.
    std::sort(basis.begin(), basis.end(),
              [](const Composition& x, const Composition& y) { return order_key_less(y, x); });
    if (basis.front() != eta)
        throw ArithmeticError("oracle: leading label is not eta");

    auto bars = eta_bar_vector(eta, alpha);
    std::vector<std::vector<SparsePoly>> images(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t i = 0; i < n; ++i)
            images[b].push_back(ops::cherednik_divided(ctx, SparsePoly::monomial(n, basis[b]), i));

    std::vector<Rational> coeff(basis.size());
    coeff[0] = 1;
    for (std::size_t m = 1; m < basis.size(); ++m) {
        auto mu_bars = eta_bar_vector(basis[m], alpha);
        std::size_t i = 0;
        while (i < n && mu_bars[i] == bars[i])
            ++i;
        if (i == n)
            throw ArithmeticError("oracle: degenerate spectrum at " + to_string(basis[m]));
        Exponent em = exponent_of(basis[m]);
        Rational rhs = 0;
        for (std::size_t b = 0; b < m; ++b)
            rhs -= coeff[b] * images[b][i].coeff(em);
        coeff[m] = rhs / (mu_bars[i] - bars[i]);
    }
    SparsePoly result(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
        result.add_term(exponent_of(basis[b]), coeff[b]);
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly residual = ops::cherednik_divided(ctx, result, i) - result * bars[i];
        if (!residual.is_zero())
            throw ArithmeticError("oracle: inconsistent eigen-system for " + to_string(eta));
    }
    return result;
}

} // namespace nsjack
