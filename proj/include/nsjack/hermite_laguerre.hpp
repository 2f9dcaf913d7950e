#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "jack.hpp"
#include "operators.hpp"
#include "poly.hpp"

namespace nsjack {

/// q = 1 + (n-1)/alpha.
inline Rational laguerre_q(std::size_t n, const Rational& alpha)
{
    return 1 + Rational(static_cast<long>(n) - 1) / alpha;
}

/// exp(c X) p for an operator X that lowers degree, summed until it vanishes.
inline SparsePoly exp_nilpotent(const Operator& X, const SparsePoly& p, const Rational& c)
{
    SparsePoly out = p;
    SparsePoly term = p;
    for (long m = 1;; ++m) {
        term = X(term) * (c / m);
        if (term.is_zero())
            break;
        out += term;
    }
    return out;
}

namespace detail {

/// Small thread-safe memo table shared by the Hermite and Laguerre caches.
class PolyCache {
public:
    template <class Build>
    const SparsePoly& get(const Composition& eta, Build&& build)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(eta);
            if (it != table_.end())
                return it->second;
        }
        SparsePoly value = build();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(eta, std::move(value)).first->second;
    }

    std::map<Composition, SparsePoly> snapshot() const
    {
        std::shared_lock lock(mutex_);
        return table_;
    }

    void seed(const Composition& eta, const SparsePoly& p)
    {
        std::unique_lock lock(mutex_);
        table_.try_emplace(eta, p);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Composition, SparsePoly> table_;
};

} // namespace detail

/// Non-symmetric Hermite polynomials E^(H) = exp(-Delta_A/4) E.
class HermiteBasis {
public:
    explicit HermiteBasis(std::shared_ptr<JackBasis> jack) : jack_(std::move(jack)) {}

    JackBasis& jack() { return *jack_; }
    std::shared_ptr<JackBasis> jack_ptr() const { return jack_; }
    std::size_t n() const { return jack_->n(); }
    const Rational& alpha() const { return jack_->alpha(); }
    const OperatorContext& context() const { return jack_->context(); }

    const SparsePoly& E(const Composition& eta)
    {
        return cache_.get(eta, [&] {
            return exp_nilpotent(ops::Delta_A(context()), jack_->E(eta), Rational(-1, 4));
        });
    }

    /// <E^(H), E^(H)>_H / N_0^(H) = (2 alpha)^{-|eta|} d' e / d.
    Rational norm_ratio(const Composition& eta) const
    {
        EtaConstants c = jack_->constants(eta);
        return c.d_prime * c.e / (c.d * pow(2 * alpha(), weight(eta)));
    }

    std::map<Composition, SparsePoly> snapshot() const { return cache_.snapshot(); }
    void seed(const Composition& eta, const SparsePoly& p) { cache_.seed(eta, p); }

private:
    std::shared_ptr<JackBasis> jack_;
    detail::PolyCache cache_;
};

/// Non-symmetric Laguerre polynomials in y = x^2:
/// E^(L) = exp(-Delta_B/4) E = exp(-sum_i B_i) E.
class LaguerreBasis {
public:
    LaguerreBasis(std::shared_ptr<JackBasis> jack, Rational a)
        : jack_(std::move(jack)), ctx_(jack_->n(), jack_->alpha(), std::move(a))
    {
        if (ctx_.a <= -1)
            throw ParameterError("Laguerre parameter a must exceed -1, got " + to_string(ctx_.a));
    }

    JackBasis& jack() { return *jack_; }
    std::shared_ptr<JackBasis> jack_ptr() const { return jack_; }
    std::size_t n() const { return ctx_.n; }
    const Rational& alpha() const { return ctx_.alpha; }
    const Rational& a() const { return ctx_.a; }
    const OperatorContext& context() const { return ctx_; }
    Rational q() const { return laguerre_q(n(), alpha()); }

    const SparsePoly& E(const Composition& eta)
    {
        return cache_.get(eta, [&] {
            return exp_nilpotent(ops::Sum_B(ctx_), jack_->E(eta), Rational(-1));
        });
    }

    /// [a+q]_eta.
    Rational factorial_aq(const Composition& eta) const
    {
        return generalized_factorial(a() + q(), eta, alpha());
    }

    /// <E^(L), E^(L)>_L / N_0^(L) = [a+q]_eta alpha^{-|eta|} d' e / d.
    Rational norm_ratio(const Composition& eta) const
    {
        EtaConstants c = jack_->constants(eta);
        return factorial_aq(eta) * c.d_prime * c.e / (c.d * pow(alpha(), weight(eta)));
    }

    /// E^(L)_eta(0) = (-1)^{|eta|} [a+q]_eta e / d.
    Rational at_zero(const Composition& eta) const
    {
        EtaConstants c = jack_->constants(eta);
        Rational v = factorial_aq(eta) * c.e / c.d;
        return weight(eta) % 2 ? Rational(-v) : v;
    }

    std::map<Composition, SparsePoly> snapshot() const { return cache_.snapshot(); }
    void seed(const Composition& eta, const SparsePoly& p) { cache_.seed(eta, p); }

private:
    std::shared_ptr<JackBasis> jack_;
    OperatorContext ctx_;
    detail::PolyCache cache_;
};

// ---------------------------------------------------------------------------
// Raising and lowering constants.

/// Constant c with Phi-hat E_eta = c E_{Phi-hat eta}; zero when eta_n = 0.
inline Rational lowering_constant(const Composition& eta, const Rational& alpha)
{
    auto lower = phi_hat_composition(eta);
    if (!lower)
        return 0;
    return eta_constants(eta, alpha).d_prime / (alpha * eta_constants(*lower, alpha).d_prime);
}

/// Constant for Psi-hat on E^(L): adds the ratio [a+q]_eta / [a+q]_{Phi-hat eta}.
inline Rational lowering_constant_laguerre(const Composition& eta, const Rational& alpha,
                                           const Rational& a)
{
    auto lower = phi_hat_composition(eta);
    if (!lower)
        return 0;
    Rational c = a + laguerre_q(eta.size(), alpha);
    return lowering_constant(eta, alpha) * generalized_factorial(c, eta, alpha) /
           generalized_factorial(c, *lower, alpha);
}

// ---------------------------------------------------------------------------
// Pairings.

/// Constant terms of T^e q for all exponents e, computed on demand.  The
/// Dunkl operators commute, so T^e q is built from T^{e - unit} q.
class DunklMoments {
public:
    enum class Kind { A, B };

    /// For Kind::B, q is given in y = x^2 and the x-form is stored.
    DunklMoments(OperatorContext c, const SparsePoly& q, Kind kind)
        : ctx_(std::move(c)), kind_(kind), q_(kind == Kind::B ? square_variables(q) : q)
    {
        if (!q.is_homogeneous())
            throw ContractError("pairing needs homogeneous polynomials");
        degree_ = q.is_zero() ? -1 : q.total_degree();
    }

    int degree() const { return degree_; }

    /// [p, q] = sum_e p_e CT(T^e q); in type B each y-exponent is doubled.
    Rational pair(const SparsePoly& p)
    {
        if (!p.is_homogeneous())
            throw ContractError("pairing needs homogeneous polynomials");
        if (p.is_zero() || degree_ < 0 || p.total_degree() != degree_)
            return 0;
        Rational out = 0;
        for (const auto& [e, coeff] : p.terms()) {
            Exponent x{};
            for (std::size_t i = 0; i < ctx_.n; ++i)
                x[ctx_.var(i)] = kind_ == Kind::B ? 2 * e[ctx_.var(i)] : e[ctx_.var(i)];
            out += coeff * constant_term(image(x));
        }
        return out;
    }

private:
    const SparsePoly& image(const Exponent& e)
    {
        auto it = memo_.find(e);
        if (it != memo_.end())
            return it->second;
        std::size_t i = ctx_.n;
        while (i > 0 && e[ctx_.var(i - 1)] == 0)
            --i;
        if (i == 0)
            return q_;
        Exponent prev = e;
        --prev[ctx_.var(i - 1)];
        const SparsePoly& base = image(prev);
        SparsePoly r = kind_ == Kind::B ? ops::dunkl_B(ctx_, base, i - 1) : ops::dunkl(ctx_, base, i - 1);
        return memo_.emplace(e, std::move(r)).first->second;
    }

    OperatorContext ctx_;
    Kind kind_;
    SparsePoly q_;
    int degree_ = -1;
    std::map<Exponent, SparsePoly> memo_;
};

/// [p, q]_H = p(T) q, zero when the degrees differ.
inline Rational pairing_H(const OperatorContext& c, const SparsePoly& p, const SparsePoly& q)
{
    if (!p.is_homogeneous())
        throw ContractError("pairing needs homogeneous polynomials");
    return DunklMoments(c, q, DunklMoments::Kind::A).pair(p);
}

/// [p(x^2), q(x^2)]_L for p, q given in y = x^2; the type B Dunkl
/// operators act on the x-form.
inline Rational pairing_L(const OperatorContext& c, const SparsePoly& p, const SparsePoly& q)
{
    if (!p.is_homogeneous())
        throw ContractError("pairing needs homogeneous polynomials");
    return DunklMoments(c, q, DunklMoments::Kind::B).pair(p);
}

/// Predicted [E_eta, E_eta]_H.
inline Rational pairing_H_value(const Composition& eta, const Rational& alpha)
{
    EtaConstants c = eta_constants(eta, alpha);
    return c.d_prime * c.e / (c.d * pow(alpha, weight(eta)));
}

/// Predicted [E_eta(x^2), E_eta(x^2)]_L.
inline Rational pairing_L_value(const Composition& eta, const Rational& alpha, const Rational& a)
{
    Rational fac = generalized_factorial(a + laguerre_q(eta.size(), alpha), eta, alpha);
    return pow(Rational(4), weight(eta)) * fac * pairing_H_value(eta, alpha);
}

// ---------------------------------------------------------------------------
// Harmonic decompositions.

/// Classical Laguerre polynomial L_m^{(b)} evaluated at the polynomial R:
/// sum_k (-1)^k binom(m+b, m-k) R^k / k!.
inline SparsePoly laguerre_1d(int m, const Rational& b, const SparsePoly& R)
{
    SparsePoly out(R.nvars());
    SparsePoly Rk = SparsePoly::constant(R.nvars(), 1);
    for (int k = 0; k <= m; ++k) {
        Rational binom = pochhammer(b + k + 1, m - k) / factorial(m - k);
        Rational c = binom / factorial(k);
        out += Rk * (k % 2 ? Rational(-c) : c);
        Rk *= R;
    }
    return out;
}

struct HarmonicComponent {
    int m = 0;       // power of r^2 multiplying the component
    SparsePoly Y;
};

/// gamma = n(n-1)/(2 alpha).
inline Rational harmonic_gamma(const OperatorContext& c)
{
    long n = static_cast<long>(c.n);
    return Rational(n * (n - 1)) / (2 * c.alpha);
}

/// E = sum_m r^{2m} Y_m with Delta_A Y_m = 0.  Throws DecompositionError if a
/// component is not harmonic (the message records whether Delta_A^2 kills it).
inline std::vector<HarmonicComponent> harmonic_decompose_A(const OperatorContext& c,
                                                           const SparsePoly& f)
{
    if (!f.is_homogeneous())
        throw ContractError("harmonic decomposition needs a homogeneous polynomial");
    const int deg = f.is_zero() ? 0 : f.total_degree();
    const Rational nh = make_rational(static_cast<long>(c.n), 2) + harmonic_gamma(c);
    const SparsePoly r2 = power_sum(f.nvars(), 2, c.offset, c.n);
    Operator lap = ops::Delta_A(c);

    std::vector<HarmonicComponent> out;
    SparsePoly lap_m = f;  // Delta^m f
    for (int m = 0; 2 * m <= deg; ++m) {
        if (m > 0)
            lap_m = lap(lap_m);
        const int k = deg - 2 * m;
        Rational norm = pow(Rational(4), m) * factorial(m) * pochhammer(nh + k, m);
        if (norm == 0)
            throw DecompositionError("vanishing normalizer at m=" + std::to_string(m));
        // T~_k applied to Delta^m f
        SparsePoly y(f.nvars());
        SparsePoly lap_j = lap_m;
        SparsePoly r2j = SparsePoly::constant(f.nvars(), 1);
        for (int j = 0; 2 * j <= k; ++j) {
            if (j > 0) {
                lap_j = lap(lap_j);
                r2j *= r2;
            }
            Rational den = pow(Rational(4), j) * factorial(j) * pochhammer(-nh - k + 2, j);
            if (den == 0)
                throw DecompositionError("vanishing projector coefficient at k=" + std::to_string(k));
            y += r2j * lap_j * (1 / den);
        }
        y *= 1 / norm;
        SparsePoly ly = lap(y);
        if (!ly.is_zero()) {
            bool square_kills = lap(ly).is_zero();
            throw DecompositionError("component m=" + std::to_string(m) +
                                     " is not annihilated by Delta_A" +
                                     (square_kills ? " (only by Delta_A^2)" : ""));
        }
        out.push_back({m, std::move(y)});
    }
    return out;
}

/// sum_m r^{2m} Y_m.
inline SparsePoly harmonic_reconstruct_A(const OperatorContext& c,
                                         const std::vector<HarmonicComponent>& comps,
                                         std::size_t nvars)
{
    SparsePoly r2 = power_sum(nvars, 2, c.offset, c.n);
    SparsePoly out(nvars);
    for (const auto& h : comps)
        out += r2.pow(h.m) * h.Y;
    return out;
}

/// E^(H) = sum_m (-1)^m m! L_m^{(|eta|-2m+gamma+n/2-1)}(r^2) Y_m.
inline SparsePoly hermite_from_harmonic(const OperatorContext& c,
                                        const std::vector<HarmonicComponent>& comps, int deg,
                                        std::size_t nvars)
{
    SparsePoly r2 = power_sum(nvars, 2, c.offset, c.n);
    Rational base = harmonic_gamma(c) + make_rational(static_cast<long>(c.n), 2) - 1;
    SparsePoly out(nvars);
    for (const auto& h : comps) {
        Rational coeff = factorial(h.m) * (h.m % 2 ? -1 : 1);
        out += laguerre_1d(h.m, base + deg - 2 * h.m, r2) * h.Y * coeff;
    }
    return out;
}

/// Type B, in y: E(y) = sum_m p_1(y)^m Y_m with sum_i B_i Y_m = 0.
inline std::vector<HarmonicComponent> harmonic_decompose_B(const OperatorContext& c,
                                                           const SparsePoly& f)
{
    if (!f.is_homogeneous())
        throw ContractError("harmonic decomposition needs a homogeneous polynomial");
    const int deg = f.is_zero() ? 0 : f.total_degree();
    const long n = static_cast<long>(c.n);
    const Rational base = n * (c.a + 1) + Rational(n * (n - 1)) / c.alpha;
    const SparsePoly r2 = power_sum(f.nvars(), 1, c.offset, c.n);
    // Delta_B = 4 sum B in y, so the 4^m factors cancel.
    Operator lap = ops::Sum_B(c);

    std::vector<HarmonicComponent> out;
    SparsePoly lap_m = f;
    for (int m = 0; m <= deg; ++m) {
        if (m > 0)
            lap_m = lap(lap_m);
        const int k = deg - m;
        Rational norm = factorial(m) * pochhammer(base + 2 * deg - 2 * m, m);
        if (norm == 0)
            throw DecompositionError("vanishing normalizer at m=" + std::to_string(m));
        SparsePoly y(f.nvars());
        SparsePoly lap_j = lap_m;
        SparsePoly r2j = SparsePoly::constant(f.nvars(), 1);
        for (int j = 0; j <= k; ++j) {
            if (j > 0) {
                lap_j = lap(lap_j);
                r2j *= r2;
            }
            Rational den = factorial(j) * pochhammer(-base - 2 * k + 2, j);
            if (den == 0)
                throw DecompositionError("vanishing projector coefficient at k=" + std::to_string(k));
            y += r2j * lap_j * (1 / den);
        }
        y *= 1 / norm;
        SparsePoly ly = lap(y);
        if (!ly.is_zero()) {
            bool square_kills = lap(ly).is_zero();
            throw DecompositionError("component m=" + std::to_string(m) +
                                     " is not annihilated by Delta_B" +
                                     (square_kills ? " (only by Delta_B^2)" : ""));
        }
        out.push_back({m, std::move(y)});
    }
    return out;
}

inline SparsePoly harmonic_reconstruct_B(const OperatorContext& c,
                                         const std::vector<HarmonicComponent>& comps,
                                         std::size_t nvars)
{
    SparsePoly r2 = power_sum(nvars, 1, c.offset, c.n);
    SparsePoly out(nvars);
    for (const auto& h : comps)
        out += r2.pow(h.m) * h.Y;
    return out;
}

/// Which Laguerre index to use in the type B reconstruction of E^(L).
/// Doubled: 2(|eta|-m) + n(n-1)/alpha + n(a+1) - 1, which is what the
/// underlying exponential identity gives for a component of degree |eta|-m.
/// Single: the same with |eta|-m in place of 2(|eta|-m).
enum class LaguerreIndex { Doubled, Single };

inline SparsePoly laguerre_from_harmonic(const OperatorContext& c,
                                         const std::vector<HarmonicComponent>& comps, int deg,
                                         std::size_t nvars,
                                         LaguerreIndex which = LaguerreIndex::Doubled)
{
    const long n = static_cast<long>(c.n);
    SparsePoly r2 = power_sum(nvars, 1, c.offset, c.n);
    Rational base = Rational(n * (n - 1)) / c.alpha + n * (c.a + 1) - 1;
    SparsePoly out(nvars);
    for (const auto& h : comps) {
        int k = deg - h.m;
        Rational idx = base + (which == LaguerreIndex::Doubled ? 2 * k : k);
        Rational coeff = factorial(h.m) * (h.m % 2 ? -1 : 1);
        out += laguerre_1d(h.m, idx, r2) * h.Y * coeff;
    }
    return out;
}

} // namespace nsjack
