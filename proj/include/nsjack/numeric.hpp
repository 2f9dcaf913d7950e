#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hermite_laguerre.hpp"
#include "jack.hpp"
#include "kernels.hpp"
#include "quadrature.hpp"
#include "report.hpp"

namespace nsjack::numeric {

using cplx = std::complex<double>;

/// Result of one floating-point check.  status is "pass", "fail" or
/// "precision-failure" (refinement did not settle).
struct NumericReport {
    std::string check;
    std::string label;  // composition or case tag
    std::size_t n = 0;
    Rational alpha = 1;
    Rational a = 0;
    int D = -1;
    double lhs = 0, rhs = 0, abs_err = 0, rel_err = 0, tolerance = 0;
    std::string status;
    std::string note;

    bool passed() const { return status == "pass"; }
};

using NumericReportList = std::vector<NumericReport>;

inline NumericReport make_numeric(std::string check, std::string label, std::size_t n,
                                  const Rational& alpha, const Rational& a, int D)
{
    NumericReport r;
    r.check = std::move(check);
    r.label = std::move(label);
    r.n = n;
    r.alpha = alpha;
    r.a = a;
    r.D = D;
    return r;
}

inline Report to_report(const NumericReport& r)
{
    Report out;
    out.identity = "numeric." + r.check;
    out.n = r.n;
    out.alpha = r.alpha;
    out.D = r.D;
    out.params["a"] = to_string(r.a);
    if (!r.label.empty())
        out.params["case"] = r.label;
    out.passed = r.passed();
    std::ostringstream s;
    s.precision(17);
    s << "lhs=" << r.lhs << " rhs=" << r.rhs << " rel_err=" << r.rel_err << " tol=" << r.tolerance;
    if (!out.passed)
        out.first_failure = r.status + ": " + s.str();
    out.note = r.note.empty() ? s.str() : s.str() + "; " + r.note;
    return out;
}

/// Default points per axis and the refinement step of the convergence diagnostic.
inline constexpr int kBasePoints = 24;
inline constexpr int kRefineStep = 8;
inline constexpr double kSettleTol = 1e-11;
inline constexpr double kMachineTol = 1e-12;

namespace detail {

inline void settle(NumericReport& r, double coarse, double fine)
{
    double diff = std::abs(fine - coarse);
    if (diff > kSettleTol * std::max(1.0, std::abs(fine))) {
        r.status = "precision-failure";
        std::ostringstream s;
        s << "refinement moved the value by " << diff;
        r.note += (r.note.empty() ? "" : "; ") + s.str();
    }
}

inline void finish(NumericReport& r, double lhs, double rhs, double tol)
{
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max(std::abs(rhs), 1e-300);
    r.tolerance = tol;
    if (r.status.empty())
        r.status = r.rel_err <= tol ? "pass" : "fail";
}

inline double p_sum(const std::vector<double>& z, int k)
{
    double s = 0;
    for (double v : z)
        s += std::pow(v, k);
    return s;
}

inline std::vector<cplx> to_complex(const std::vector<double>& v, cplx scale = 1)
{
    std::vector<cplx> out;
    for (double x : v)
        out.push_back(scale * x);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Normalizations and orthogonality.

inline NumericReport check_N0_hermite(std::size_t n, const Rational& alpha)
{
    NumericReport r = make_numeric("N0-hermite", "", n, alpha, 0, -1);
    SparsePoly one = SparsePoly::constant(n, 1);
    double coarse = quad_inner_H(one, one, alpha, kBasePoints);
    double fine = quad_inner_H(one, one, alpha, kBasePoints + kRefineStep);
    detail::settle(r, coarse, fine);
    detail::finish(r, fine, N0_hermite(n, alpha), 1e-8);
    return r;
}

inline NumericReport check_N0_laguerre(std::size_t n, const Rational& alpha, const Rational& a)
{
    NumericReport r = make_numeric("N0-laguerre", "", n, alpha, a, -1);
    SparsePoly one = SparsePoly::constant(n, 1);
    double coarse = quad_inner_L(one, one, alpha, a, kBasePoints);
    double fine = quad_inner_L(one, one, alpha, a, kBasePoints + kRefineStep);
    detail::settle(r, coarse, fine);
    detail::finish(r, fine, N0_laguerre(n, alpha, a), 1e-8);
    std::ostringstream s;
    s.precision(17);
    s << "printed prefactor form gives " << N0_laguerre_printed(n, alpha, a);
    r.note += (r.note.empty() ? "" : "; ") + s.str();
    return r;
}

/// Gram matrix of a family under a grid, normalized by N_0.  Emits one
/// report for the worst relative off-diagonal entry and one for the worst
/// diagonal deviation from the exact norm ratio.
inline NumericReportList gram_checks(const std::string& family, const QuadratureGrid& grid,
                                     const QuadratureGrid& fine_grid, double N0,
                                     const std::vector<Composition>& labels,
                                     const std::function<const SparsePoly&(const Composition&)>& poly,
                                     const std::function<Rational(const Composition&)>& ratio,
                                     std::size_t n, const Rational& alpha, const Rational& a)
{
    std::vector<std::vector<double>> vals, fvals;
    for (const auto& eta : labels) {
        vals.push_back(values_on(grid, poly(eta)));
        fvals.push_back(values_on(fine_grid, poly(eta)));
    }
    const std::size_t m = labels.size();
    std::vector<double> diag(m);
    NumericReport off = make_numeric("orthogonality-" + family, "", n, alpha, a, -1);
    NumericReport dia = make_numeric("norm-ratio-" + family, "", n, alpha, a, -1);
    double worst_off = 0, worst_dia = 0, dia_lhs = 0, dia_rhs = 0;
    std::string off_label, dia_label;
    for (std::size_t i = 0; i < m; ++i) {
        double c = integrate_product(grid, vals[i], vals[i]);
        double f = integrate_product(fine_grid, fvals[i], fvals[i]);
        detail::settle(dia, c, f);
        diag[i] = f;
        double exact = to_double(ratio(labels[i]));
        double dev = std::abs(f / N0 - exact) / exact;
        if (dev >= worst_dia) {
            worst_dia = dev;
            dia_lhs = f / N0;
            dia_rhs = exact;
            dia_label = to_string(labels[i]);
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double v = integrate_product(fine_grid, fvals[i], fvals[j]);
            double rel = std::abs(v) / std::sqrt(diag[i] * diag[j]);
            if (rel >= worst_off) {
                worst_off = rel;
                off_label = to_string(labels[i]) + " vs " + to_string(labels[j]);
            }
        }
    // rhs is zero, so rel_err is the off-diagonal relative to the norms.
    off.label = off_label;
    off.lhs = off.abs_err = off.rel_err = worst_off;
    off.tolerance = 1e-8;
    if (off.status.empty())
        off.status = worst_off < 1e-8 ? "pass" : "fail";
    dia.label = dia_label;
    detail::finish(dia, dia_lhs, dia_rhs, 1e-7);
    return {off, dia};
}

inline NumericReportList check_orthogonality_hermite(HermiteBasis& herm, int max_weight)
{
    const std::size_t n = herm.n();
    auto grid = hermite_grid(n, herm.alpha(), kBasePoints);
    auto fine = hermite_grid(n, herm.alpha(), kBasePoints + kRefineStep);
    return gram_checks(
        "hermite", grid, fine, N0_hermite(n, herm.alpha()), compositions_up_to(n, max_weight),
        [&](const Composition& eta) -> const SparsePoly& { return herm.E(eta); },
        [&](const Composition& eta) { return herm.norm_ratio(eta); }, n, herm.alpha(), 0);
}

inline NumericReportList check_orthogonality_laguerre(LaguerreBasis& lag, int max_weight)
{
    const std::size_t n = lag.n();
    auto grid = laguerre_grid(n, lag.alpha(), lag.a(), kBasePoints);
    auto fine = laguerre_grid(n, lag.alpha(), lag.a(), kBasePoints + kRefineStep);
    return gram_checks(
        "laguerre", grid, fine, N0_laguerre(n, lag.alpha(), lag.a()), compositions_up_to(n, max_weight),
        [&](const Composition& eta) -> const SparsePoly& { return lag.E(eta); },
        [&](const Composition& eta) { return lag.norm_ratio(eta); }, n, lag.alpha(), lag.a());
}

// ---------------------------------------------------------------------------
// Kernel integral formulas and Laplace transforms.

enum class Transform { Hermite1b, Hermite1c, IntL, IntLL, LaplaceEL, LaplaceE };

inline std::string transform_name(Transform w)
{
    switch (w) {
    case Transform::Hermite1b: return "int.h-1b";
    case Transform::Hermite1c: return "int.h-1c";
    case Transform::IntL: return "int.l";
    case Transform::IntLL: return "int.ll";
    case Transform::LaplaceEL: return "laplace-l.el";
    case Transform::LaplaceE: return "laplace-l.e";
    }
    return "?";
}

inline Transform parse_transform(const std::string& s)
{
    for (auto w : {Transform::Hermite1b, Transform::Hermite1c, Transform::IntL, Transform::IntLL,
                   Transform::LaplaceEL, Transform::LaplaceE})
        if (transform_name(w) == s)
            return w;
    throw ContractError("unknown transform check '" + s + "'");
}

/// Evaluation points (z for kernel formulas, t for Laplace transforms).
inline std::vector<std::vector<double>> transform_points(Transform w, std::size_t n)
{
    std::vector<std::vector<double>> pts;
    switch (w) {
    case Transform::Hermite1b:
    case Transform::Hermite1c: pts = {{0.2, -0.15}, {-0.1, 0.25}}; break;
    case Transform::IntL:
    case Transform::IntLL: pts = {{0.2, 0.1}, {0.05, 0.25}}; break;
    case Transform::LaplaceEL:
    case Transform::LaplaceE: pts = {{0.96, 0.94}, {0.95, 0.97}}; break;
    }
    for (auto& p : pts)
        p.resize(n);
    return pts;
}

/// Spot check of one transform identity for E_eta with kernels truncated at
/// degree D.  Kernel terms of degree D+1 and D+2 are integrated as well;
/// their magnitude at the evaluation point is the truncation budget.
/// tolerance = max(1e-6, 10 * budget / |rhs|).
inline NumericReport quad_transform_check(Transform which, const std::shared_ptr<JackBasis>& jack,
                                          const Rational& a, const Composition& eta, int D)
{
    const std::size_t n = jack->n();
    require_small_n(n);
    if (D < weight(eta))
        throw ContractError("transform check needs D >= |eta|");
    const Rational alpha = jack->alpha();
    const bool hermite = which == Transform::Hermite1b || which == Transform::Hermite1c;
    NumericReport rep = make_numeric(transform_name(which), to_string(eta), n, alpha, hermite ? Rational(0) : a, D);

    HermiteBasis herm(jack);
    std::unique_ptr<LaguerreBasis> lag;
    if (!hermite)
        lag = std::make_unique<LaguerreBasis>(jack, a);
    const double N0 = hermite ? N0_hermite(n, alpha) : N0_laguerre(n, alpha, a);
    const double aq = hermite ? 0 : to_double(a + laguerre_q(n, alpha));
    const double faq = hermite ? 1 : to_double(lag->factorial_aq(eta));

    // Integrand factor f(y) multiplying the kernel, as complex values on the grid.
    auto f_values = [&](const QuadratureGrid& g) {
        std::vector<cplx> v;
        switch (which) {
        case Transform::Hermite1b: {
            NumPoly f(herm.E(eta));
            for (const auto& y : g.nodes)
                v.push_back(f(y));
            break;
        }
        case Transform::Hermite1c: {
            NumPoly f(jack->E(eta));
            for (const auto& y : g.nodes)
                v.push_back(f(detail::to_complex(y, cplx(0, 1))));
            break;
        }
        case Transform::IntL: {
            NumPoly f(jack->E(eta));
            for (const auto& y : g.nodes)
                v.push_back(f(detail::to_complex(y, -1)));
            break;
        }
        case Transform::IntLL:
        case Transform::LaplaceEL: {
            NumPoly f(lag->E(eta));
            for (const auto& y : g.nodes)
                v.push_back(f(y));
            break;
        }
        case Transform::LaplaceE: {
            NumPoly f(jack->E(eta));
            for (const auto& y : g.nodes)
                v.push_back(f(y));
            break;
        }
        }
        return v;
    };

    // Kernel coefficient, including the 2^{|nu|} from K_A(2y; .).
    auto coeff = [&](const Composition& nu) -> double {
        Rational c = kernel_weight(nu, alpha);
        if (hermite)
            c *= pow(Rational(2), weight(nu));
        if (which == Transform::IntL || which == Transform::IntLL)
            c /= lag->factorial_aq(nu);
        return to_double(c);
    };
    // Second kernel argument at the evaluation point.
    auto kernel_arg = [&](const std::vector<double>& p) {
        switch (which) {
        case Transform::Hermite1b: return detail::to_complex(p);
        case Transform::Hermite1c: return detail::to_complex(p, cplx(0, -1));
        case Transform::IntL:
        case Transform::IntLL: return detail::to_complex(p, -1);
        default: {
            // K_A(-t; x) = e^{-p1(x)} K_A(x; 1 - t); the e^{-p1} sits in the measure.
            std::vector<cplx> s;
            for (double t : p)
                s.push_back(1 - t);
            return s;
        }
        }
    };
    auto exact_rhs = [&](const std::vector<double>& p, bool printed) -> double {
        switch (which) {
        case Transform::Hermite1b:
            return N0 * std::exp(detail::p_sum(p, 2)) * NumPoly(jack->E(eta))(p);
        case Transform::Hermite1c:
            return N0 * std::exp(-detail::p_sum(p, 2)) * NumPoly(herm.E(eta))(p);
        case Transform::IntL:
            return N0 * std::exp(-detail::p_sum(p, 1)) * NumPoly(lag->E(eta))(p);
        case Transform::IntLL: {
            std::vector<double> m;
            for (double v : p)
                m.push_back(-v);
            return N0 * std::exp(-detail::p_sum(p, 1)) * NumPoly(jack->E(eta))(m);
        }
        case Transform::LaplaceEL: {
            std::vector<double> u;
            for (double t : p)
                u.push_back(printed ? 1 - 1 / t : 1 / t - 1);
            double pre = faq * N0;
            for (double t : p)
                pre *= std::pow(t, -aq);
            return pre * NumPoly(jack->E(eta))(u);
        }
        case Transform::LaplaceE: {
            std::vector<double> u;
            for (double t : p)
                u.push_back(1 / t);
            double pre = faq * N0;
            for (double t : p)
                pre *= std::pow(t, -aq);
            return pre * (printed ? NumPoly(lag->E(eta))(u) : NumPoly(jack->E(eta))(u));
        }
        }
        return 0;
    };

    auto grid_for = [&](int N) {
        return hermite ? hermite_grid(n, alpha, N) : laguerre_grid(n, alpha, a, N);
    };
    // Exactness: integrand degree <= D + 2 + |eta| per axis.
    const int N = std::max(kBasePoints, (D + 2 + weight(eta)) / 2 + 4);
    QuadratureGrid grid = grid_for(N), fine = grid_for(N + kRefineStep);
    std::vector<cplx> fv = f_values(grid), ffv = f_values(fine);

    struct Term {
        int deg;
        double c;
        cplx I;
        NumPoly E;
    };
    std::vector<Term> terms;
    double worst_settle = 0, settle_scale = 1;
    for (const auto& nu : compositions_up_to(n, D + 2)) {
        const SparsePoly& Enu = jack->E(nu);
        auto ev = values_on(grid, Enu), fev = values_on(fine, Enu);
        cplx I = 0, If = 0;
        for (std::size_t k = 0; k < grid.size(); ++k)
            I += grid.weights[k] * ev[k] * fv[k];
        for (std::size_t k = 0; k < fine.size(); ++k)
            If += fine.weights[k] * fev[k] * ffv[k];
        worst_settle = std::max(worst_settle, std::abs(I - If));
        settle_scale = std::max(settle_scale, std::abs(If));
        terms.push_back({weight(nu), coeff(nu), If, NumPoly(Enu)});
    }
    if (worst_settle > kSettleTol * settle_scale)
        detail::settle(rep, settle_scale, settle_scale + worst_settle);

    double worst_rel = -1, worst_tol = 0, w_lhs = 0, w_rhs = 0, worst_imag = 0, printed_rel = 0;
    bool ok = true;
    for (const auto& p : transform_points(which, n)) {
        auto arg = kernel_arg(p);
        cplx lhs = 0, tail = 0;
        for (const auto& t : terms) {
            cplx v = t.c * t.I * t.E(arg);
            (t.deg <= D ? lhs : tail) += v;
        }
        const double rhs = exact_rhs(p, false);
        const double budget = std::abs(tail);
        const double tol = std::max(1e-6, 10 * budget / std::abs(rhs));
        const double rel = std::abs(lhs - rhs) / std::abs(rhs);
        worst_imag = std::max(worst_imag, std::abs(lhs.imag()));
        if (rel > tol)
            ok = false;
        if (rel / tol > worst_rel / std::max(worst_tol, 1e-300) || worst_rel < 0) {
            worst_rel = rel;
            worst_tol = tol;
            w_lhs = lhs.real();
            w_rhs = rhs;
        }
        if (which == Transform::LaplaceEL || which == Transform::LaplaceE) {
            double pr = exact_rhs(p, true);
            printed_rel = std::max(printed_rel, std::abs(lhs.real() - pr) / std::max(std::abs(pr), 1e-300));
        }
    }
    detail::finish(rep, w_lhs, w_rhs, worst_tol);
    rep.rel_err = worst_rel;
    if (rep.status != "precision-failure")
        rep.status = ok ? "pass" : "fail";
    std::ostringstream s;
    s.precision(3);
    s << "max |Im lhs| = " << worst_imag;
    if (which == Transform::LaplaceEL || which == Transform::LaplaceE)
        s << "; printed right side rel. deviation " << printed_rel;
    rep.note += (rep.note.empty() ? "" : "; ") + s.str();
    return rep;
}

// ---------------------------------------------------------------------------
// n = 1 classical reductions with closed-form kernels.

/// 0F1(; b; -w) = Gamma(b) w^{(1-b)/2} J_{b-1}(2 sqrt w), w > 0.
inline double hyp0f1_neg(double b, double w)
{
    if (w == 0)
        return 1;
    return std::tgamma(b) * std::pow(w, (1 - b) / 2) * std::cyl_bessel_j(b - 1, 2 * std::sqrt(w));
}

inline NumericReportList classical_reductions(const Rational& a, int max_k)
{
    NumericReportList out;
    auto jack = std::make_shared<JackBasis>(1, Rational(1));
    HermiteBasis herm(jack);
    LaguerreBasis lag(jack, a);
    const double ad = to_double(a), sp = std::sqrt(std::numbers::pi);
    const int N = 48;
    GaussRule gh = gauss_hermite(N), gl = gauss_laguerre(N, ad);
    GaussRule gh2 = gauss_hermite(N + kRefineStep), gl2 = gauss_laguerre(N + kRefineStep, ad);

    auto run = [&](const std::string& name, int k, const Rational& aa,
                   const std::function<double(const GaussRule&)>& lhs, double rhs) {
        NumericReport r = make_numeric("n1." + name, std::to_string(k), 1, 1, aa, -1);
        const GaussRule& base = name.find("int.h") == 0 || name == "norm-hermite" ? gh : gl;
        const GaussRule& finer = &base == &gh ? gh2 : gl2;
        double c = lhs(base), f = lhs(finer);
        detail::settle(r, c, f);
        detail::finish(r, f, rhs, kMachineTol);
        out.push_back(r);
    };

    for (int k = 0; k <= max_k; ++k) {
        NumPoly H(herm.E({k})), L(lag.E({k}));
        const double z = 0.3, t = 0.9;
        run("norm-hermite", k, 0, [&](const GaussRule& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * std::pow(H(std::vector<double>{g.x[i]}), 2);
            return s;
        }, std::tgamma(k + 1.0) * sp / std::pow(2.0, k));
        run("norm-laguerre", k, a, [&](const GaussRule& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * std::pow(L(std::vector<double>{g.x[i]}), 2);
            return s;
        }, std::tgamma(k + 1.0) * std::tgamma(k + ad + 1));
        run("int.h-1b", k, 0, [&](const GaussRule& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * std::exp(2 * g.x[i] * z) * H(std::vector<double>{g.x[i]});
            return s;
        }, sp * std::exp(z * z) * std::pow(z, k));
        run("int.h-1c", k, 0, [&](const GaussRule& g) {
            cplx s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * std::exp(cplx(0, -2 * g.x[i] * z)) * std::pow(cplx(0, g.x[i]), k);
            return s.real();
        }, sp * std::exp(-z * z) * H(std::vector<double>{z}));
        run("int.l", k, a, [&](const GaussRule& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * hyp0f1_neg(ad + 1, g.x[i] * z) * std::pow(-g.x[i], k);
            return s;
        }, std::tgamma(ad + 1) * std::exp(-z) * L(std::vector<double>{z}));
        run("laplace-l.e", k, a, [&](const GaussRule& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * std::exp((1 - t) * g.x[i]) * std::pow(g.x[i], k);
            return s;
        }, std::tgamma(ad + k + 1) / std::pow(t, ad + k + 1));
        run("laplace-l.el", k, a, [&](const GaussRule& g) {
            double s = 0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                s += g.w[i] * std::exp((1 - t) * g.x[i]) * L(std::vector<double>{g.x[i]});
            return s;
        }, std::tgamma(ad + 1) * to_double(pochhammer(a + 1, k)) * std::pow(t, -(ad + 1)) *
               std::pow(1 / t - 1, k));
    }
    return out;
}

} // namespace nsjack::numeric
