#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "jack.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "report.hpp"

namespace nsjack {

/// k = 1/alpha, which must be a positive integer for constant terms.
inline int k_from_alpha(const Rational& alpha)
{
    Rational k = 1 / alpha;
    if (!is_integer(k) || k <= 0)
        throw ParameterError("constant-term inner product needs 1/alpha in Z+, alpha = " +
                             to_string(alpha));
    return static_cast<int>(k.get_num().get_si());
}

/// (1 - x_i / x_j)^m as a Laurent polynomial.
inline SparsePoly ct_factor(std::size_t n, std::size_t i, std::size_t j, int m)
{
    SparsePoly r(n);
    auto row = binomial_row(m);
    for (int t = 0; t <= m; ++t) {
        Exponent e{};
        e[i] = t;
        e[j] = -t;
        r.add_term(e, t % 2 == 0 ? row[t] : Rational(-row[t]));
    }
    return r;
}

/// prod_{i != j} (1 - x_i/x_j)^m, cached per (n, m).
inline const SparsePoly& ct_weight(std::size_t n, int m)
{
    if (m < 0)
        throw ParameterError("constant-term weight exponent must be non-negative");
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, SparsePoly> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    SparsePoly w = SparsePoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                w *= ct_factor(n, i, j, m);
    return cache.emplace(key, std::move(w)).first->second;
}

/// <f, g> = CT(f(x) g(1/x) prod_{i!=j}(1 - x_i/x_j)^k), summed directly as
/// sum_{mu, nu} f_mu g_nu W_{nu - mu} without expanding the product.
inline Rational ct_inner(const SparsePoly& f, const SparsePoly& g, int k)
{
    if (k <= 0)
        throw ParameterError("ct_inner needs a positive integer k");
    if (f.nvars() != g.nvars())
        throw DimensionError("ct_inner: variable count mismatch");
    const SparsePoly& w = ct_weight(f.nvars(), k);
    Rational total = 0;
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            Exponent d;
            for (std::size_t i = 0; i < kMaxVars; ++i)
                d[i] = eg[i] - ef[i];
            auto it = w.terms().find(d);
            if (it != w.terms().end())
                total += cf * cg * it->second;
        }
    return total;
}

/// Product formula for <E_eta, E_eta> with alpha = 1/k.
inline Rational ct_norm_formula(const Composition& eta, int k)
{
    Rational alpha(1, k);
    auto bars = eta_bar_vector(eta, alpha);
    Rational r = 1;
    for (std::size_t i = 0; i < eta.size(); ++i)
        for (std::size_t j = i + 1; j < eta.size(); ++j) {
            Rational x = bars[j] - bars[i];
            bool positive = x > 0;
            for (int p = 0; p < k; ++p) {
                Rational ratio = (k * x + p) / (k * x - p - 1);
                r *= positive ? ratio : Rational(1 / ratio);
            }
        }
    return r;
}

/// prod_i (1 - x_i)^a (1 - 1/x_i)^b times the weight with exponent k.
inline const SparsePoly& kadell_weight(std::size_t n, int k, int a, int b)
{
    static std::mutex mutex;
    static std::map<std::tuple<std::size_t, int, int, int>, SparsePoly> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(n, k, a, b);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    SparsePoly r = SparsePoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly one_minus_x = SparsePoly::constant(n, 1) - SparsePoly::variable(n, i);
        SparsePoly one_minus_inv = SparsePoly::constant(n, 1) - SparsePoly::variable(n, i, -1);
        r *= one_minus_x.pow(static_cast<unsigned>(a)) * one_minus_inv.pow(static_cast<unsigned>(b));
    }
    SparsePoly w = SparsePoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                w *= ct_factor(n, i, j, k);
    return cache.emplace(key, r * w).first->second;
}

/// CT(prod(1-x)^a(1-1/x)^b E_eta W) / CT(prod(1-x)^a(1-1/x)^b W) against
/// E_eta(1^n) [-b]_{eta+} / [1 + a + (n-1)/alpha]_{eta+}.
inline Report kadell_ratio_check(JackBasis& jack, const Composition& eta, int a, int b)
{
    const std::size_t n = jack.n();
    int k = k_from_alpha(jack.alpha());
    if (a < 0 || b < 0)
        throw ParameterError("kadell_ratio_check needs non-negative a, b");
    const SparsePoly& L = kadell_weight(n, k, a, b);
    Rational num = constant_term_of_product(jack.E(eta), L);
    Rational den = constant_term(L);
    Rational lhs = num / den;
    Composition kappa = eta_plus(eta);
    const Rational& alpha = jack.alpha();
    Rational rhs = jack.value_at_ones(eta) * rising_factorial_alpha(Rational(-b), kappa, alpha) /
                   rising_factorial_alpha(1 + a + Rational(static_cast<long>(n) - 1) / alpha, kappa, alpha);
    Report rep;
    rep.identity = "kadell-ratio";
    rep.n = n;
    rep.alpha = alpha;
    rep.params = {{"eta", to_string(eta)}, {"a", std::to_string(a)}, {"b", std::to_string(b)},
                  {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    rep.passed = lhs == rhs;
    if (!rep.passed)
        rep.first_failure = "eta=" + to_string(eta) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
    return rep;
}

/// prod_j Gamma(1+(j-1)/alpha) / Gamma(1+(j-1)/alpha + kappa_{n+1-j}) as
/// an exact product of reciprocal rising factorials.
inline Rational gamma_ratio_product(const Composition& kappa, const Rational& alpha)
{
    const std::size_t n = kappa.size();
    Rational r = 1;
    for (std::size_t j = 0; j < n; ++j)
        r /= pochhammer(1 + Rational(static_cast<long>(j)) / alpha, kappa[n - 1 - j]);
    return r;
}

/// alpha^{|eta|} (d/f) N_eta/N_0 against E_eta(1^n) times the Gamma-ratio
/// product.  The relation is asserted with the product itself; the printed
/// variant with the product inverted is recorded in the note.
inline Report norm_relation_check(JackBasis& jack, const Composition& eta)
{
    const std::size_t n = jack.n();
    int k = k_from_alpha(jack.alpha());
    const Rational& alpha = jack.alpha();
    Rational N_eta = ct_inner(jack.E(eta), jack.E(eta), k);
    Rational N_0 = ct_inner(SparsePoly::constant(n, 1), SparsePoly::constant(n, 1), k);
    EtaConstants c = jack.constants(eta);
    Rational lhs = pow(alpha, weight(eta)) * c.d / c.f * N_eta / N_0;
    Rational g = gamma_ratio_product(eta_plus(eta), alpha);
    Rational rhs = jack.value_at_ones(eta) * g;
    Rational printed = jack.value_at_ones(eta) / g;
    Report rep;
    rep.identity = "norm-relation";
    rep.n = n;
    rep.alpha = alpha;
    rep.params = {{"eta", to_string(eta)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)},
                  {"rhs_printed_inverse", to_string(printed)}};
    rep.passed = lhs == rhs;
    if (!rep.passed)
        rep.first_failure = "eta=" + to_string(eta) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
    rep.note = lhs == printed ? "printed inverse form also holds" : "printed inverse form differs";
    return rep;
}

/// Power-sum basis p_eta from prod 1/(1 - x_i y_i) prod_{i,j} (1 - x_i y_j)^{-1/alpha},
/// and the inner product <f, g> = sum f_eta A_{eta nu} g_nu.
class SahiInnerProduct {
public:
    SahiInnerProduct(std::size_t n, Rational alpha, int max_degree)
        : n_(n), alpha_(std::move(alpha)), D_(max_degree)
    {
        if (2 * n > kMaxVars)
            throw DimensionError("power-sum basis: too many variables");
        const std::size_t N = 2 * n;
        SparsePoly g = SparsePoly::constant(N, 1);
        auto geometric = series_binomial(Rational(1), D_);
        auto fractional = series_binomial(1 / alpha_, D_);
        auto multiply_series = [&](std::size_t i, std::size_t j, const std::vector<Rational>& coeffs) {
            SparsePoly s(N);
            for (int t = 0; t <= D_; ++t) {
                Exponent e{};
                e[i] = t;
                e[n + j] = t;
                s.add_term(e, coeffs[t]);
            }
            g = (g * s).truncate_block(n, n, D_);
        };
        for (std::size_t i = 0; i < n; ++i)
            multiply_series(i, i, geometric);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                multiply_series(i, j, fractional);
        for (const auto& [e, c] : g.terms()) {
            Composition y(e.begin() + static_cast<std::ptrdiff_t>(n),
                          e.begin() + static_cast<std::ptrdiff_t>(2 * n));
            Exponent x{};
            for (std::size_t i = 0; i < n; ++i)
                x[i] = e[i];
            auto [it, ins] = p_.try_emplace(y, SparsePoly(n));
            it->second.add_term(x, c);
        }
    }

    std::size_t n() const { return n_; }
    const Rational& alpha() const { return alpha_; }

    const SparsePoly& p(const Composition& eta) const
    {
        auto it = p_.find(eta);
        if (it == p_.end())
            throw ContractError("power-sum basis element outside truncation: " + to_string(eta));
        return it->second;
    }

    /// Coefficients of a homogeneous f in {p_eta : |eta| = deg f}.
    std::vector<Rational> coordinates(const SparsePoly& f, int degree) const
    {
        auto basis = compositions(n_, degree);
        RationalMatrix M(basis.size(), std::vector<Rational>(basis.size()));
        std::vector<Rational> rhs(basis.size());
        for (std::size_t row = 0; row < basis.size(); ++row) {
            Exponent e = make_exponent(basis[row]);
            for (std::size_t col = 0; col < basis.size(); ++col)
                M[row][col] = p(basis[col]).coeff(e);
            rhs[row] = f.coeff(e);
        }
        try {
            return solve_linear(M, rhs);
        } catch (const SingularBasisError&) {
            throw SingularBasisError("power sums of degree " + std::to_string(degree) +
                                     " do not span at alpha = " + to_string(alpha_));
        }
    }

    Rational inner(const SparsePoly& f, const SparsePoly& g) const
    {
        if (!f.is_homogeneous() || !g.is_homogeneous())
            throw ContractError("sahi inner product needs homogeneous arguments");
        if (f.is_zero() || g.is_zero())
            return 0;
        int d = f.total_degree();
        if (d != g.total_degree())
            return 0;
        if (d > D_)
            throw ContractError("degree exceeds power-sum truncation");
        auto basis = compositions(n_, d);
        auto fc = coordinates(f, d);
        auto gc = coordinates(g, d);
        Rational total = 0;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            if (fc[a] == 0)
                continue;
            const SparsePoly& pa = p(basis[a]);
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (gc[b] != 0)
                    total += fc[a] * pa.coeff(make_exponent(basis[b])) * gc[b];
        }
        return total;
    }

private:
    std::size_t n_;
    Rational alpha_;
    int D_;
    std::map<Composition, SparsePoly> p_;
};

} // namespace nsjack
