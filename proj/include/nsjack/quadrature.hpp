#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "errors.hpp"
#include "poly.hpp"

namespace nsjack::numeric {

inline double to_double(const Rational& r) { return r.get_d(); }

/// One-dimensional Gauss rule: sum w_k f(x_k) approximates the weighted integral.
struct GaussRule {
    std::vector<double> x, w;
};

/// Golub-Welsch from monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
/// `b` holds b_1..b_{N-1}.  Weights come from the Christoffel sum of the
/// orthonormal polynomials, which keeps tiny tail weights relatively accurate.
inline GaussRule golub_welsch(const std::vector<double>& a, const std::vector<double>& b, double mu0)
{
    const std::size_t N = a.size();
    if (N == 0 || b.size() + 1 != N)
        throw DimensionError("golub_welsch: recurrence length mismatch");
    Eigen::VectorXd diag(N), sub(N > 1 ? N - 1 : 0);
    for (std::size_t k = 0; k < N; ++k)
        diag[static_cast<Eigen::Index>(k)] = a[k];
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (!(b[k] > 0))
            throw ArithmeticError("golub_welsch: non-positive recurrence coefficient");
        sub[static_cast<Eigen::Index>(k)] = std::sqrt(b[k]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw ArithmeticError("golub_welsch: eigen-solve failed");

    GaussRule rule;
    for (std::size_t k = 0; k < N; ++k) {
        double x = es.eigenvalues()[static_cast<Eigen::Index>(k)];
        // Newton polish on p_N.
        for (int it = 0; it < 3; ++it) {
            double p0 = 0, p1 = 1, d0 = 0, d1 = 0;
            for (std::size_t j = 0; j < N; ++j) {
                double bj = j == 0 ? 0 : b[j - 1];
                double p2 = (x - a[j]) * p1 - bj * p0;
                double d2 = p1 + (x - a[j]) * d1 - bj * d0;
                p0 = p1, p1 = p2, d0 = d1, d1 = d2;
            }
            if (d1 == 0 || !std::isfinite(p1 / d1))
                break;
            double step = p1 / d1;
            x -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x)))
                break;
        }
        double prev = 0, cur = 1 / std::sqrt(mu0), sum = cur * cur;
        for (std::size_t j = 0; j + 1 < N; ++j) {
            double sb = std::sqrt(b[j]);
            double prev_sb = j == 0 ? 0 : std::sqrt(b[j - 1]);
            double next = ((x - a[j]) * cur - prev_sb * prev) / sb;
            prev = cur, cur = next;
            sum += cur * cur;
        }
        rule.x.push_back(x);
        rule.w.push_back(1 / sum);
    }
    return rule;
}

/// Weight |u|^gamma e^{-u^2} on the real line.
inline GaussRule gauss_hermite(int N, double gamma = 0)
{
    if (N < 1 || gamma <= -1)
        throw ParameterError("gauss_hermite: need N >= 1 and gamma > -1");
    std::vector<double> a(static_cast<std::size_t>(N), 0.0), b;
    for (int k = 1; k < N; ++k)
        b.push_back((k + (k % 2 ? gamma : 0.0)) / 2);
    return golub_welsch(a, b, std::tgamma((gamma + 1) / 2));
}

/// Weight s^A e^{-s} on [0, inf).
inline GaussRule gauss_laguerre(int N, double A = 0)
{
    if (N < 1 || A <= -1)
        throw ParameterError("gauss_laguerre: need N >= 1 and A > -1");
    std::vector<double> a, b;
    for (int k = 0; k < N; ++k)
        a.push_back(2.0 * k + A + 1);
    for (int k = 1; k < N; ++k)
        b.push_back(k * (k + A));
    return golub_welsch(a, b, std::tgamma(A + 1));
}

/// Weight (1-t)^p t^r on [0, 1].
inline GaussRule gauss_jacobi01(int N, double p, double r)
{
    if (N < 1 || p <= -1 || r <= -1)
        throw ParameterError("gauss_jacobi01: need N >= 1 and exponents > -1");
    // Jacobi on [-1, 1] with (1-x)^p (1+x)^r, then t = (1+x)/2.
    const double s = p + r;
    std::vector<double> a, b;
    a.push_back((r - p) / (s + 2));
    for (int k = 1; k < N; ++k)
        a.push_back((r * r - p * p) / ((2 * k + s) * (2 * k + s + 2)));
    for (int k = 1; k < N; ++k) {
        if (k == 1)
            b.push_back(4 * (1 + p) * (1 + r) / ((2 + s) * (2 + s) * (3 + s)));
        else
            b.push_back(4.0 * k * (k + p) * (k + r) * (k + s) /
                        ((2 * k + s) * (2 * k + s) * (2 * k + s + 1) * (2 * k + s - 1)));
    }
    double mu0 = std::exp((s + 1) * std::log(2.0) + std::lgamma(p + 1) + std::lgamma(r + 1) -
                          std::lgamma(s + 2));
    GaussRule g = golub_welsch(a, b, mu0);
    const double scale = std::pow(2.0, -(s + 1));
    for (std::size_t k = 0; k < g.x.size(); ++k) {
        g.x[k] = (1 + g.x[k]) / 2;
        g.w[k] *= scale;
    }
    return g;
}

enum class Measure { Hermite, Laguerre };

/// Product rule for the Hermite or Laguerre measure in n <= 2 variables.
/// The interaction |x_1 - x_2|^{2/alpha} is absorbed into the one-dimensional
/// rules, so polynomial integrands are integrated exactly up to rounding.
///   Hermite, n=2: u = (x1-x2)/sqrt2, v = (x1+x2)/sqrt2.
///   Laguerre, n=2: s = y1+y2, w = (y1-y2)/s, t = w^2.
struct QuadratureGrid {
    Measure measure = Measure::Hermite;
    std::string rule;  // description of the 1-d rules
    std::size_t n = 1;
    int points = 0;    // per axis
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

inline void require_small_n(std::size_t n)
{
    if (n < 1 || n > 2)
        throw DimensionError("quadrature supports n in {1, 2}, got " + std::to_string(n));
}

inline QuadratureGrid hermite_grid(std::size_t n, const Rational& alpha, int N)
{
    require_small_n(n);
    if (alpha <= 0)
        throw ParameterError("alpha must be positive");
    QuadratureGrid g{Measure::Hermite, "", n, N, {}, {}};
    if (n == 1) {
        g.rule = "gauss-hermite";
        GaussRule r = gauss_hermite(N);
        for (std::size_t k = 0; k < r.x.size(); ++k) {
            g.nodes.push_back({r.x[k]});
            g.weights.push_back(r.w[k]);
        }
        return g;
    }
    const double inv_a = 1 / to_double(alpha);
    g.rule = "gauss-hermite x generalized gauss-hermite |u|^{2/alpha}";
    GaussRule ru = gauss_hermite(N, 2 * inv_a), rv = gauss_hermite(N);
    const double c = std::pow(2.0, inv_a), h = std::numbers::sqrt2 / 2;
    for (std::size_t i = 0; i < ru.x.size(); ++i)
        for (std::size_t j = 0; j < rv.x.size(); ++j) {
            g.nodes.push_back({h * (rv.x[j] + ru.x[i]), h * (rv.x[j] - ru.x[i])});
            g.weights.push_back(c * ru.w[i] * rv.w[j]);
        }
    return g;
}

inline QuadratureGrid laguerre_grid(std::size_t n, const Rational& alpha, const Rational& a, int N)
{
    require_small_n(n);
    if (alpha <= 0)
        throw ParameterError("alpha must be positive");
    if (a <= -1)
        throw ParameterError("Laguerre parameter a must exceed -1");
    const double ad = to_double(a);
    QuadratureGrid g{Measure::Laguerre, "", n, N, {}, {}};
    if (n == 1) {
        g.rule = "gauss-laguerre";
        GaussRule r = gauss_laguerre(N, ad);
        for (std::size_t k = 0; k < r.x.size(); ++k) {
            g.nodes.push_back({r.x[k]});
            g.weights.push_back(r.w[k]);
        }
        return g;
    }
    const double inv_a = 1 / to_double(alpha);
    g.rule = "generalized gauss-laguerre x gauss-jacobi (via s = y1+y2, w^2 = t)";
    GaussRule rs = gauss_laguerre(N, 2 * ad + 1 + 2 * inv_a);
    GaussRule rt = gauss_jacobi01(N, ad, inv_a - 0.5);
    const double c = std::pow(2.0, -2 * ad - 1);
    for (std::size_t i = 0; i < rs.x.size(); ++i)
        for (std::size_t j = 0; j < rt.x.size(); ++j) {
            const double w = std::sqrt(rt.x[j]), s = rs.x[i];
            for (double sign : {1.0, -1.0}) {
                g.nodes.push_back({s * (1 + sign * w) / 2, s * (1 - sign * w) / 2});
                g.weights.push_back(c * rs.w[i] * rt.w[j] / 2);
            }
        }
    return g;
}

/// Double-precision copy of a SparsePoly for repeated evaluation.
class NumPoly {
public:
    NumPoly() = default;
    explicit NumPoly(const SparsePoly& p) : n_(p.nvars())
    {
        for (const auto& [e, c] : p.terms()) {
            for (std::size_t i = 0; i < n_; ++i)
                max_deg_ = std::max(max_deg_, e[i]);
            terms_.push_back({e, to_double(c)});
        }
    }

    std::size_t nvars() const { return n_; }

    template <class T>
    T operator()(const std::vector<T>& x) const
    {
        if (x.size() != n_)
            throw DimensionError("NumPoly: point has wrong dimension");
        std::vector<std::vector<T>> powers(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            powers[i].push_back(T(1));
            for (int k = 1; k <= max_deg_; ++k)
                powers[i].push_back(powers[i].back() * x[i]);
        }
        T sum(0);
        for (const auto& [e, c] : terms_) {
            T t(c);
            for (std::size_t i = 0; i < n_; ++i)
                t *= powers[i][static_cast<std::size_t>(e[i])];
            sum += t;
        }
        return sum;
    }

private:
    std::size_t n_ = 0;
    int max_deg_ = 0;
    std::vector<std::pair<Exponent, double>> terms_;
};

/// Values of p at every grid node.
inline std::vector<double> values_on(const QuadratureGrid& g, const SparsePoly& p)
{
    NumPoly f(p);
    std::vector<double> v;
    v.reserve(g.size());
    for (const auto& x : g.nodes)
        v.push_back(f(x));
    return v;
}

inline double integrate(const QuadratureGrid& g, const std::vector<double>& values)
{
    if (values.size() != g.size())
        throw DimensionError("integrate: value count mismatch");
    double s = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
        s += g.weights[k] * values[k];
    return s;
}

inline double integrate_product(const QuadratureGrid& g, const std::vector<double>& f,
                                const std::vector<double>& h)
{
    if (f.size() != g.size() || h.size() != g.size())
        throw DimensionError("integrate_product: value count mismatch");
    double s = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
        s += g.weights[k] * f[k] * h[k];
    return s;
}

/// <f, g>_H, integrated over R^n.
inline double quad_inner_H(const SparsePoly& f, const SparsePoly& g, const Rational& alpha, int N)
{
    QuadratureGrid grid = hermite_grid(f.nvars(), alpha, N);
    return integrate_product(grid, values_on(grid, f), values_on(grid, g));
}

/// <f, g>_L in y = x^2, integrated over [0, inf)^n against prod y^a e^{-y} |y_j - y_k|^{2/alpha}.
inline double quad_inner_L(const SparsePoly& f, const SparsePoly& g, const Rational& alpha,
                           const Rational& a, int N)
{
    QuadratureGrid grid = laguerre_grid(f.nvars(), alpha, a, N);
    return integrate_product(grid, values_on(grid, f), values_on(grid, g));
}

/// Ground-state normalizations.
inline double N0_hermite(std::size_t n, const Rational& alpha)
{
    const double ia = 1 / to_double(alpha), nd = static_cast<double>(n);
    double lg = -nd * (nd - 1) / 2 * ia * std::log(2.0) + nd / 2 * std::log(std::numbers::pi);
    for (std::size_t j = 0; j < n; ++j)
        lg += std::lgamma(1 + (static_cast<double>(j) + 1) * ia) - std::lgamma(1 + ia);
    return std::exp(lg);
}

/// Selberg form prod_{j<n} Gamma(a+1+j/alpha) Gamma(1+(j+1)/alpha) / Gamma(1+1/alpha).
inline double N0_laguerre(std::size_t n, const Rational& alpha, const Rational& a)
{
    const double ia = 1 / to_double(alpha), ad = to_double(a);
    double lg = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double jd = static_cast<double>(j);
        lg += std::lgamma(ad + 1 + jd * ia) + std::lgamma(1 + (jd + 1) * ia) - std::lgamma(1 + ia);
    }
    return std::exp(lg);
}

/// The normalization as printed, with the extra alpha^{1-n-(n-1)^2/alpha}.
inline double N0_laguerre_printed(std::size_t n, const Rational& alpha, const Rational& a)
{
    const double ad = to_double(alpha), nd = static_cast<double>(n);
    return std::pow(ad, 1 - nd - (nd - 1) * (nd - 1) / ad) * N0_laguerre(n, alpha, a);
}

} // namespace nsjack::numeric
