#pragma once

#include <functional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace nsjack {

// ---------------------------------------------------------------------------
// Primitive actions.  Variable indices are absolute positions in the
// polynomial's variable list.

inline SparsePoly apply_transposition(const SparsePoly& p, std::size_t i, std::size_t j)
{
    if (i == j)
        return p;
    return p.map_terms([&](Exponent& e) {
        std::swap(e[i], e[j]);
        return Rational(1);
    });
}

inline SparsePoly apply_sign_flip(const SparsePoly& p, std::size_t i)
{
    return p.map_terms([&](Exponent& e) { return Rational(e[i] % 2 == 0 ? 1 : -1); });
}

inline SparsePoly multiply_by_variable(const SparsePoly& p, std::size_t i, int power = 1)
{
    return p.map_terms([&](Exponent& e) {
        e[i] += power;
        return Rational(1);
    });
}

inline SparsePoly partial_derivative(const SparsePoly& p, std::size_t i)
{
    return p.map_terms([&](Exponent& e) {
        int k = e[i];
        e[i] -= 1;
        return Rational(k);
    });
}

/// (p - s_ij p) / (x_i - x_j), computed monomial by monomial.
inline SparsePoly apply_divided_difference(const SparsePoly& p, std::size_t i, std::size_t j)
{
    SparsePoly r(p.nvars());
    if (i == j)
        return r;
    for (const auto& [e, c] : p.terms()) {
        int a = e[i], b = e[j];
        if (a == b)
            continue;
        int lo = std::min(a, b), span = std::abs(a - b);
        Rational sign = a > b ? 1 : -1;
        Exponent base = e;
        base[i] = lo;
        base[j] = lo;
        for (int k = 0; k < span; ++k) {
            Exponent m = base;
            m[i] += k;
            m[j] += span - 1 - k;
            r.add_term(m, sign * c);
        }
    }
    return r;
}

/// Exact quotient p / (x_i - x_j).  Throws ArithmeticError when the
/// division leaves a remainder.
inline SparsePoly divide_by_difference(const SparsePoly& p, std::size_t i, std::size_t j)
{
    SparsePoly quotient(p.nvars()), remainder(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        int a = e[i];
        if (a < 0)
            throw ContractError("divide_by_difference on a negative exponent");
        for (int t = 0; t < a; ++t) {
            Exponent m = e;
            m[i] = t;
            m[j] = e[j] + a - 1 - t;
            quotient.add_term(m, c);
        }
        Exponent rem = e;
        rem[i] = 0;
        rem[j] = e[j] + a;
        remainder.add_term(rem, c);
    }
    if (!remainder.is_zero())
        throw ArithmeticError("non-zero remainder dividing by (x" + std::to_string(i + 1) +
                              " - x" + std::to_string(j + 1) + "): " + remainder.str());
    return quotient;
}

// ---------------------------------------------------------------------------
// Composable operator values.

/// A linear operator on SparsePoly.  Product is composition (right factor
/// acts first), matching how operator words are written.
class Operator {
public:
    using Fn = std::function<SparsePoly(const SparsePoly&)>;

    Operator() : fn_([](const SparsePoly& p) { return p; }) {}
    explicit Operator(Fn fn) : fn_(std::move(fn)) {}

    SparsePoly operator()(const SparsePoly& p) const { return fn_(p); }

    friend Operator operator*(const Operator& a, const Operator& b)
    {
        return Operator([a, b](const SparsePoly& p) { return a(b(p)); });
    }
    friend Operator operator+(const Operator& a, const Operator& b)
    {
        return Operator([a, b](const SparsePoly& p) { return a(p) + b(p); });
    }
    friend Operator operator-(const Operator& a, const Operator& b)
    {
        return Operator([a, b](const SparsePoly& p) { return a(p) - b(p); });
    }
    friend Operator operator*(const Rational& c, const Operator& a)
    {
        return Operator([c, a](const SparsePoly& p) { return a(p) * c; });
    }

    static Operator identity() { return Operator(); }
    static Operator scalar(const Rational& c)
    {
        return Operator([c](const SparsePoly& p) { return p * c; });
    }

private:
    Fn fn_;
};

inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Operators attached to a block of n variables.

/// Context for the operators: variable count n, Jack parameter alpha,
/// Laguerre parameter a, and the position of the block of n variables
/// inside the polynomial (0 except when acting on one half of a kernel).
struct OperatorContext {
    std::size_t n = 1;
    Rational alpha = 1;
    Rational a = 0;
    std::size_t offset = 0;

    OperatorContext() = default;
    OperatorContext(std::size_t n_, Rational alpha_, Rational a_ = 0, std::size_t offset_ = 0)
        : n(n_), alpha(std::move(alpha_)), a(std::move(a_)), offset(offset_)
    {
        if (n == 0)
            throw ParameterError("operator context needs n >= 1");
        if (alpha <= 0)
            throw ParameterError("alpha must be positive, got " + to_string(alpha));
    }

    std::size_t var(std::size_t i) const { return offset + i; }
    OperatorContext shifted(std::size_t new_offset) const
    {
        return OperatorContext(n, alpha, a, new_offset);
    }
};

namespace ops {

inline Operator transposition(const OperatorContext& c, std::size_t i, std::size_t j)
{
    std::size_t vi = c.var(i), vj = c.var(j);
    return Operator([vi, vj](const SparsePoly& p) { return apply_transposition(p, vi, vj); });
}

/// Adjacent transposition s_i = s_{i,i+1} (0-based).
inline Operator s(const OperatorContext& c, std::size_t i) { return transposition(c, i, i + 1); }

inline Operator sign_flip(const OperatorContext& c, std::size_t i)
{
    std::size_t v = c.var(i);
    return Operator([v](const SparsePoly& p) { return apply_sign_flip(p, v); });
}

inline Operator multiply_x(const OperatorContext& c, std::size_t i, int power = 1)
{
    std::size_t v = c.var(i);
    return Operator([v, power](const SparsePoly& p) { return multiply_by_variable(p, v, power); });
}

inline Operator multiply(const SparsePoly& f)
{
    return Operator([f](const SparsePoly& p) { return f * p; });
}

inline Operator derivative(const OperatorContext& c, std::size_t i)
{
    std::size_t v = c.var(i);
    return Operator([v](const SparsePoly& p) { return partial_derivative(p, v); });
}

/// Type A Dunkl operator T_i.
inline SparsePoly dunkl(const OperatorContext& c, const SparsePoly& p, std::size_t i)
{
    SparsePoly r = partial_derivative(p, c.var(i));
    SparsePoly dd(p.nvars());
    for (std::size_t q = 0; q < c.n; ++q)
        if (q != i)
            dd += apply_divided_difference(p, c.var(i), c.var(q));
    return r + dd * (1 / c.alpha);
}

inline Operator T(const OperatorContext& c, std::size_t i)
{
    return Operator([c, i](const SparsePoly& p) { return dunkl(c, p, i); });
}

/// Cherednik operator xi_i = alpha x_i T_i + 1 - n + sum_{p>i} s_ip.
inline SparsePoly cherednik(const OperatorContext& c, const SparsePoly& p, std::size_t i)
{
    SparsePoly r = multiply_by_variable(dunkl(c, p, i), c.var(i)) * c.alpha;
    r += p * Rational(1 - static_cast<long>(c.n));
    for (std::size_t q = i + 1; q < c.n; ++q)
        r += apply_transposition(p, c.var(i), c.var(q));
    return r;
}

inline Operator xi(const OperatorContext& c, std::size_t i)
{
    return Operator([c, i](const SparsePoly& p) { return cherednik(c, p, i); });
}

/// Cherednik operator in its original divided-difference form:
/// alpha x_i d_i + sum_{p<i} x_i/(x_i-x_p)(1-s_ip)
///                + sum_{p>i} x_p/(x_i-x_p)(1-s_ip) + 1 - i.
inline SparsePoly cherednik_divided(const OperatorContext& c, const SparsePoly& p, std::size_t i)
{
    std::size_t vi = c.var(i);
    SparsePoly r = multiply_by_variable(partial_derivative(p, vi), vi) * c.alpha;
    for (std::size_t q = 0; q < c.n; ++q) {
        if (q == i)
            continue;
        SparsePoly dd = apply_divided_difference(p, vi, c.var(q));
        r += multiply_by_variable(dd, q < i ? vi : c.var(q));
    }
    r += p * Rational(-static_cast<long>(i));
    return r;
}

inline Operator xi_divided(const OperatorContext& c, std::size_t i)
{
    return Operator([c, i](const SparsePoly& p) { return cherednik_divided(c, p, i); });
}

/// Delta_A = sum_i T_i^2.
inline SparsePoly laplacian_A(const OperatorContext& c, const SparsePoly& p)
{
    SparsePoly r(p.nvars());
    for (std::size_t i = 0; i < c.n; ++i)
        r += dunkl(c, dunkl(c, p, i), i);
    return r;
}

inline Operator Delta_A(const OperatorContext& c)
{
    return Operator([c](const SparsePoly& p) { return laplacian_A(c, p); });
}

/// s_{n-1} ... s_1 (s_1 acts first).
inline Operator cyclic_up(const OperatorContext& c)
{
    Operator w;
    for (std::size_t i = 0; i + 1 < c.n; ++i)
        w = s(c, i) * w;
    return w;
}

/// s_1 ... s_{n-1} (s_{n-1} acts first).
inline Operator cyclic_down(const OperatorContext& c)
{
    Operator w;
    for (std::size_t i = 0; i + 1 < c.n; ++i)
        w = w * s(c, i);
    return w;
}

/// Raising operator Phi = x_n s_{n-1} ... s_1.
inline Operator Phi(const OperatorContext& c) { return multiply_x(c, c.n - 1) * cyclic_up(c); }

/// Lowering operator Phi-hat = T_1 s_1 ... s_{n-1}.
inline Operator Phi_hat(const OperatorContext& c) { return T(c, 0) * cyclic_down(c); }

/// Adjoint of Phi-hat: 2 Phi + [Phi, Delta_A] / 2.
inline Operator Phi_hat_star(const OperatorContext& c)
{
    return Rational(2) * Phi(c) + Rational(1, 2) * commutator(Phi(c), Delta_A(c));
}

/// h_i = xi_i - (alpha/2) T_i^2.
inline Operator h(const OperatorContext& c, std::size_t i)
{
    return xi(c, i) - (c.alpha / 2) * (T(c, i) * T(c, i));
}

/// Euler-type operator sum_i x_i^k d_i.
inline SparsePoly euler(const OperatorContext& c, const SparsePoly& p, int k)
{
    SparsePoly r(p.nvars());
    for (std::size_t i = 0; i < c.n; ++i)
        r += multiply_by_variable(partial_derivative(p, c.var(i)), c.var(i), k);
    return r;
}

inline Operator E_tilde(const OperatorContext& c, int k)
{
    return Operator([c, k](const SparsePoly& p) { return euler(c, p, k); });
}

/// Shared body of D~1 (power 1) and D~2 (power 2).  Each unordered pair
/// j<k contributes a numerator over (x_j - x_k)^2 that is divided out
/// exactly.
inline SparsePoly d_tilde(const OperatorContext& c, const SparsePoly& p, int power)
{
    SparsePoly r(p.nvars());
    const Rational two_over_alpha = 2 / c.alpha;
    for (std::size_t j = 0; j < c.n; ++j) {
        std::size_t vj = c.var(j);
        r += multiply_by_variable(partial_derivative(partial_derivative(p, vj), vj), vj, power);
    }
    for (std::size_t j = 0; j < c.n; ++j) {
        for (std::size_t k = j + 1; k < c.n; ++k) {
            std::size_t vj = c.var(j), vk = c.var(k);
            SparsePoly first = multiply_by_variable(partial_derivative(p, vj), vj, power) -
                               multiply_by_variable(partial_derivative(p, vk), vk, power);
            SparsePoly diff = SparsePoly::variable(p.nvars(), vj) - SparsePoly::variable(p.nvars(), vk);
            SparsePoly antisym = p - apply_transposition(p, vj, vk);
            SparsePoly second(p.nvars());
            if (power == 1) {
                // x_j/(x_j-x_k)^2 + x_k/(x_k-x_j)^2 = (x_j+x_k)/(x_j-x_k)^2
                SparsePoly sum = SparsePoly::variable(p.nvars(), vj) + SparsePoly::variable(p.nvars(), vk);
                second = sum * antisym * (1 / c.alpha);
            } else {
                SparsePoly prod = multiply_by_variable(SparsePoly::variable(p.nvars(), vj), vk);
                second = prod * antisym * two_over_alpha;
            }
            SparsePoly numerator = first * diff * two_over_alpha - second;
            r += divide_by_difference(divide_by_difference(numerator, vj, vk), vj, vk);
        }
    }
    return r;
}

inline Operator D_tilde1(const OperatorContext& c)
{
    return Operator([c](const SparsePoly& p) { return d_tilde(c, p, 1); });
}

inline Operator D_tilde2(const OperatorContext& c)
{
    return Operator([c](const SparsePoly& p) { return d_tilde(c, p, 2); });
}

/// Calogero-type operator H^(C) = sum x_j^2 d_j^2
///   + (2/alpha) sum_{j<k} x_j x_k/(x_j-x_k) [(d_j - d_k) - (1-s_jk)/(x_j-x_k)].
inline SparsePoly calogero(const OperatorContext& c, const SparsePoly& p)
{
    SparsePoly r(p.nvars());
    for (std::size_t j = 0; j < c.n; ++j) {
        std::size_t vj = c.var(j);
        r += multiply_by_variable(partial_derivative(partial_derivative(p, vj), vj), vj, 2);
    }
    for (std::size_t j = 0; j < c.n; ++j)
        for (std::size_t k = j + 1; k < c.n; ++k) {
            std::size_t vj = c.var(j), vk = c.var(k);
            SparsePoly g = partial_derivative(p, vj) - partial_derivative(p, vk) -
                           apply_divided_difference(p, vj, vk);
            SparsePoly q = divide_by_difference(g, vj, vk);
            r += multiply_by_variable(multiply_by_variable(q, vj), vk) * (2 / c.alpha);
        }
    return r;
}

inline Operator H_calogero(const OperatorContext& c)
{
    return Operator([c](const SparsePoly& p) { return calogero(c, p); });
}

// ---------------------------------------------------------------------------
// Type B.  dunkl_B acts on polynomials in x; everything else acts on
// polynomials in y = x^2, where the type A Dunkl operator in y plays the
// role of the squared-variable Dunkl operator.

/// T_i^(B) = d_i + (1/alpha) sum_{p != i} [(1 - s_ip)/(x_i - x_p)
///           + (1 - sigma_i sigma_p s_ip)/(x_i + x_p)] + (a + 1/2)(1 - sigma_i)/x_i.
inline SparsePoly dunkl_B(const OperatorContext& c, const SparsePoly& p, std::size_t i)
{
    std::size_t vi = c.var(i);
    SparsePoly r = partial_derivative(p, vi);
    SparsePoly sum(p.nvars());
    for (std::size_t q = 0; q < c.n; ++q) {
        if (q == i)
            continue;
        std::size_t vq = c.var(q);
        sum += apply_divided_difference(p, vi, vq);
        // (f - sigma_i sigma_p s_ip f)/(x_i + x_p) = sigma_p DD_ip(sigma_p f)
        sum += apply_sign_flip(apply_divided_difference(apply_sign_flip(p, vq), vi, vq), vq);
    }
    r += sum * (1 / c.alpha);
    // (1 - sigma_i) f / x_i keeps twice the odd-in-x_i part, lowered by one.
    SparsePoly odd = p.map_terms([&](Exponent& e) {
        if (e[vi] % 2 == 0)
            return Rational(0);
        e[vi] -= 1;
        return Rational(2);
    });
    r += odd * (c.a + Rational(1, 2));
    return r;
}

inline Operator T_B(const OperatorContext& c, std::size_t i)
{
    return Operator([c, i](const SparsePoly& p) { return dunkl_B(c, p, i); });
}

/// Delta_B = sum_i (T_i^(B))^2 acting on polynomials in x.
inline Operator Delta_B_x(const OperatorContext& c)
{
    return Operator([c](const SparsePoly& p) {
        SparsePoly r(p.nvars());
        for (std::size_t i = 0; i < c.n; ++i)
            r += dunkl_B(c, dunkl_B(c, p, i), i);
        return r;
    });
}

/// B_i = y_i T_i^2 + (a+1) T_i + (1/alpha) sum_{p != i} s_ip T_i, in y.
inline SparsePoly apply_B(const OperatorContext& c, const SparsePoly& p, std::size_t i)
{
    SparsePoly t = dunkl(c, p, i);
    SparsePoly r = multiply_by_variable(dunkl(c, t, i), c.var(i));
    r += t * (c.a + 1);
    SparsePoly sw(p.nvars());
    for (std::size_t q = 0; q < c.n; ++q)
        if (q != i)
            sw += apply_transposition(t, c.var(i), c.var(q));
    r += sw * (1 / c.alpha);
    return r;
}

inline Operator B(const OperatorContext& c, std::size_t i)
{
    return Operator([c, i](const SparsePoly& p) { return apply_B(c, p, i); });
}

inline SparsePoly sum_B(const OperatorContext& c, const SparsePoly& p)
{
    SparsePoly r(p.nvars());
    for (std::size_t i = 0; i < c.n; ++i)
        r += apply_B(c, p, i);
    return r;
}

inline Operator Sum_B(const OperatorContext& c)
{
    return Operator([c](const SparsePoly& p) { return sum_B(c, p); });
}

/// Delta_B written in y: 4 sum_i B_i.
inline Operator Delta_B(const OperatorContext& c) { return Rational(4) * Sum_B(c); }

/// Cherednik operator in y (same formula as xi).
inline Operator xi_hat(const OperatorContext& c, std::size_t i) { return xi(c, i); }

/// l_i = xi-hat_i - alpha B_i.
inline Operator l(const OperatorContext& c, std::size_t i)
{
    return xi_hat(c, i) - c.alpha * B(c, i);
}

/// Psi = y_n s_{n-1} ... s_1.
inline Operator Psi(const OperatorContext& c) { return Phi(c); }

/// Psi-hat = B_1 s_1 ... s_{n-1}.
inline Operator Psi_hat(const OperatorContext& c) { return B(c, 0) * cyclic_down(c); }

/// Psi-hat* = Psi + [Psi, Delta_B]/4 + s_{n-1} ... s_1 B_1.
inline Operator Psi_hat_star(const OperatorContext& c)
{
    return Psi(c) + commutator(Psi(c), Sum_B(c)) + cyclic_up(c) * B(c, 0);
}

} // namespace ops
} // namespace nsjack
