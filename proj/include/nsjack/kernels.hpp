#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "hermite_laguerre.hpp"
#include "jack.hpp"
#include "operators.hpp"
#include "poly.hpp"
#include "report.hpp"

namespace nsjack {

/// Degree-truncated series in 2n variables: x = variables [0, n), y = [n, 2n).
struct TruncatedKernel {
    std::size_t n = 0;
    int D = 0;
    SparsePoly poly;
};

/// c_eta = alpha^{|eta|} d / (d' e).
inline Rational kernel_weight(const Composition& eta, const Rational& alpha)
{
    EtaConstants c = eta_constants(eta, alpha);
    return pow(alpha, weight(eta)) * c.d / (c.d_prime * c.e);
}

/// prod [u]_eta / prod [v]_eta; SingularityError naming eta when a lower
/// parameter makes [v]_eta vanish.
inline Rational hypergeometric_ratio(const Composition& eta, const std::vector<Rational>& up,
                                     const std::vector<Rational>& down, const Rational& alpha)
{
    Rational r = 1;
    for (const auto& u : up)
        r *= generalized_factorial(u, eta, alpha);
    for (const auto& v : down) {
        Rational f = generalized_factorial(v, eta, alpha);
        if (f == 0)
            throw SingularityError("lower parameter " + to_string(v) + " gives [c]_eta = 0 at eta = " +
                                   to_string(eta));
        r /= f;
    }
    return r;
}

/// sum_{|eta| <= D} coeff(eta) fx(eta)(x) fy(eta)(y).
inline TruncatedKernel kernel_from(std::size_t n, int D,
                                   const std::function<Rational(const Composition&)>& coeff,
                                   const std::function<SparsePoly(const Composition&)>& fx,
                                   const std::function<SparsePoly(const Composition&)>& fy)
{
    TruncatedKernel k{n, D, SparsePoly(2 * n)};
    for (const auto& eta : compositions_up_to(n, D)) {
        Rational c = coeff(eta);
        if (c == 0)
            continue;
        k.poly += embed(fx(eta), 2 * n, 0) * embed(fy(eta), 2 * n, n) * c;
    }
    return k;
}

/// sum alpha^{|eta|} prod[u]/prod[v] d/(d'e) E_eta(x) E_eta(y).
inline TruncatedKernel kernel_series(JackBasis& jack, const std::vector<Rational>& up,
                                     const std::vector<Rational>& down, int D)
{
    const Rational alpha = jack.alpha();
    auto E = [&](const Composition& eta) { return jack.E(eta); };
    return kernel_from(
        jack.n(), D,
        [&](const Composition& eta) -> Rational {
            return kernel_weight(eta, alpha) * hypergeometric_ratio(eta, up, down, alpha);
        },
        E, E);
}

inline TruncatedKernel kernel_KA(JackBasis& jack, int D) { return kernel_series(jack, {}, {}, D); }

/// K_B in y-variables: extra factor 1/[a+q]_eta.
inline TruncatedKernel kernel_KB(JackBasis& jack, const Rational& a, int D)
{
    return kernel_series(jack, {}, {a + laguerre_q(jack.n(), jack.alpha())}, D);
}

inline TruncatedKernel kernel_1K1(JackBasis& jack, const Rational& a, const Rational& c, int D)
{
    return kernel_series(jack, {a}, {c}, D);
}

inline TruncatedKernel kernel_2K1(JackBasis& jack, const Rational& a, const Rational& b,
                                  const Rational& c, int D)
{
    return kernel_series(jack, {a, b}, {c}, D);
}

/// 0F0 = sum_kappa alpha^{|kappa|} J_kappa(x) J_kappa(y) / (j_kappa J_kappa(1^n)).
inline TruncatedKernel kernel_0F0(JackBasis& jack, int D)
{
    const std::size_t n = jack.n();
    TruncatedKernel k{n, D, SparsePoly(2 * n)};
    for (int d = 0; d <= D; ++d)
        for (const auto& kappa : partitions(n, d)) {
            SparsePoly J = jack.J(kappa);
            Rational c = pow(jack.alpha(), d) / (hook_norm_j(kappa, jack.alpha()) * evaluate_at_ones(J));
            k.poly += embed(J, 2 * n, 0) * embed(J, 2 * n, n) * c;
        }
    return k;
}

// ---------------------------------------------------------------------------
// Generalized binomial coefficients.

/// Memo of (eta over nu) for all nu, per eta, at fixed (n, alpha).
class BinomialTable {
public:
    explicit BinomialTable(std::shared_ptr<JackBasis> jack) : jack_(std::move(jack)) {}

    JackBasis& jack() { return *jack_; }

    /// All nonzero (eta over nu), keyed by nu.
    const Expansion& row(const Composition& eta)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = rows_.find(eta);
            if (it != rows_.end())
                return it->second;
        }
        Expansion raw = jack_->expand(shift_by_one(jack_->E(eta)));
        Rational at_eta = jack_->value_at_ones(eta);
        Expansion out;
        for (auto& [nu, c] : raw)
            out[nu] = c * jack_->value_at_ones(nu) / at_eta;
        std::unique_lock lock(mutex_);
        return rows_.try_emplace(eta, std::move(out)).first->second;
    }

    Rational operator()(const Composition& eta, const Composition& nu)
    {
        if (eta.size() != nu.size())
            throw DimensionError("binomial coefficient of compositions of different length");
        const Expansion& r = row(eta);
        auto it = r.find(nu);
        return it == r.end() ? Rational(0) : it->second;
    }

private:
    std::shared_ptr<JackBasis> jack_;
    mutable std::shared_mutex mutex_;
    std::map<Composition, Expansion> rows_;
};

inline Composition pad(const Composition& eta, std::size_t n)
{
    Composition out = eta;
    out.resize(n, 0);
    return out;
}

/// (eta over nu) computed in n1 and n2 variables (zero padded) must agree.
inline Report binomial_n_independence(const Composition& eta, const Composition& nu,
                                      std::size_t n1, std::size_t n2, const Rational& alpha)
{
    Report r;
    r.identity = "binomial n-independence";
    r.n = n1;
    r.alpha = alpha;
    r.params["eta"] = to_string(eta);
    r.params["nu"] = to_string(nu);
    r.params["n2"] = std::to_string(n2);
    BinomialTable t1(std::make_shared<JackBasis>(n1, alpha));
    BinomialTable t2(std::make_shared<JackBasis>(n2, alpha));
    Rational v1 = t1(pad(eta, n1), pad(nu, n1));
    Rational v2 = t2(pad(eta, n2), pad(nu, n2));
    if (v1 != v2) {
        r.passed = false;
        r.first_failure = "n=" + std::to_string(n1) + " gives " + to_string(v1) + ", n=" +
                          std::to_string(n2) + " gives " + to_string(v2);
    }
    r.note = to_string(v1);
    return r;
}

/// Expansion of a symmetric polynomial in {J_kappa}, keyed by partition.
inline Expansion expand_symmetric(JackBasis& jack, const SparsePoly& f)
{
    const std::size_t n = jack.n();
    Expansion out;
    SparsePoly rest = f;
    while (!rest.is_zero()) {
        int top = rest.total_degree();
        SparsePoly slice = rest.homogeneous_part(top);
        // Lex-largest monomial of the top slice; a partition when f is symmetric.
        Composition kappa = composition_of(slice.terms().begin()->first, n);
        for (const auto& [e, c] : slice.terms()) {
            Composition k = composition_of(e, n);
            if (k > kappa)
                kappa = k;
        }
        if (!is_partition(kappa))
            throw ContractError("expand_symmetric: input is not symmetric");
        SparsePoly J = jack.J(kappa);
        Rational c = rest.coeff(exponent_of(kappa)) / J.coeff(exponent_of(kappa));
        out[kappa] = c;
        rest -= J * c;
    }
    return out;
}

/// Symmetric binomial (kappa over sigma):
/// J_kappa(1+z)/J_kappa(1) = sum (kappa over sigma) J_sigma(z)/J_sigma(1).
inline Expansion symmetric_binomial_row(JackBasis& jack, const Composition& kappa)
{
    SparsePoly J = jack.J(kappa);
    Rational at_one = evaluate_at_ones(J);
    Expansion raw = expand_symmetric(jack, shift_by_one(J));
    Expansion out;
    for (auto& [sigma, c] : raw)
        out[sigma] = c * evaluate_at_ones(jack.J(sigma)) / at_one;
    return out;
}

// ---------------------------------------------------------------------------
// Helpers for the identity suite.

/// epsilon_eta = sum_j (eta+_j (eta+_j - 1) + (2/alpha)(n-j) eta+_j).
inline Rational epsilon_eigenvalue(const Composition& eta, const Rational& alpha)
{
    Composition p = eta_plus(eta);
    const long n = static_cast<long>(eta.size());
    Rational e = 0;
    for (long j = 1; j <= n; ++j) {
        long k = p[static_cast<std::size_t>(j - 1)];
        e += k * (k - 1) + 2 * Rational(n - j) * k / alpha;
    }
    return e;
}

/// Replaces z_i by z_i/(1 - z_i) = z_i + z_i^2 + ... on variables
/// [offset, offset+count), truncated to block degree D.
inline SparsePoly substitute_geometric(const SparsePoly& p, std::size_t offset, std::size_t count, int D)
{
    const std::size_t nv = p.nvars();
    std::vector<SparsePoly> series;
    for (std::size_t i = 0; i < count; ++i) {
        SparsePoly s(nv);
        for (int k = 1; k <= D; ++k)
            s += SparsePoly::variable(nv, offset + i, k);
        series.push_back(s);
    }
    SparsePoly out(nv);
    for (const auto& [e, c] : p.terms()) {
        if (block_degree(e, offset, count) > D)
            continue;
        Exponent rest = e;
        for (std::size_t i = 0; i < count; ++i)
            rest[offset + i] = 0;
        SparsePoly term = SparsePoly::monomial(nv, rest) * c;
        for (std::size_t i = 0; i < count; ++i)
            for (int k = 0; k < e[offset + i]; ++k)
                term = (term * series[i]).truncate_block(offset, count, D);
        out += term;
    }
    return out;
}

/// prod_i (1 - z_i)^{-c} on variables [offset, offset+count) to block degree D.
inline SparsePoly product_binomial_series(std::size_t nv, const Rational& c, std::size_t offset,
                                          std::size_t count, int D)
{
    auto coeffs = series_binomial(c, D);
    SparsePoly out = SparsePoly::constant(nv, 1);
    for (std::size_t i = 0; i < count; ++i) {
        SparsePoly s(nv);
        for (int k = 0; k <= D; ++k)
            s += SparsePoly::variable(nv, offset + i, k) * coeffs[k];
        out = (out * s).truncate_block(offset, count, D);
    }
    return out;
}

/// Text naming the lowest-degree term of a nonzero difference, with its
/// degrees in each block of `block` variables.
inline std::string describe_difference(const SparsePoly& diff, std::size_t block)
{
    if (diff.is_zero())
        return "";
    const std::size_t nv = diff.nvars();
    const std::size_t blocks = block == 0 ? 1 : (nv + block - 1) / block;
    auto degs = [&](const Exponent& e) {
        std::vector<int> d;
        for (std::size_t b = 0; b < blocks; ++b)
            d.push_back(block_degree(e, b * block, std::min(block, nv - b * block)));
        return d;
    };
    auto best = diff.terms().begin();
    for (auto it = diff.terms().begin(); it != diff.terms().end(); ++it)
        if (degs(it->first) < degs(best->first))
            best = it;
    std::ostringstream os;
    auto d = degs(best->first);
    os << "bidegree (";
    for (std::size_t b = 0; b < d.size(); ++b)
        os << (b ? "," : "") << d[b];
    os << "): term ";
    std::vector<int> e(best->first.begin(), best->first.begin() + static_cast<std::ptrdiff_t>(nv));
    os << to_string(Composition(e)) << " differs by " << to_string(best->second);
    return os.str();
}

inline Report make_report(std::string identity, std::size_t n, const Rational& alpha, int D)
{
    Report r;
    r.identity = std::move(identity);
    r.n = n;
    r.alpha = alpha;
    r.D = D;
    return r;
}

/// Records the first mismatch of lhs and rhs into r.
inline void expect_equal(Report& r, const SparsePoly& lhs, const SparsePoly& rhs, std::size_t block,
                         const std::string& label = "")
{
    if (!r.passed)
        return;
    SparsePoly diff = lhs - rhs;
    if (!diff.is_zero()) {
        r.passed = false;
        r.first_failure = (label.empty() ? "" : label + ": ") + describe_difference(diff, block);
    }
}

inline void expect_equal(Report& r, const Rational& lhs, const Rational& rhs, const std::string& label)
{
    if (!r.passed)
        return;
    if (lhs != rhs) {
        r.passed = false;
        r.first_failure = label + ": " + to_string(lhs) + " != " + to_string(rhs);
    }
}

// ---------------------------------------------------------------------------
// The identity suite.  Every check is an exact polynomial identity, compared
// on the slices that the truncation at degree D determines completely.

/// (a) s_i^(y) K = s_i^(x) K, T_i^(y) K = x_i K, Phi-hat^(y) K = Phi^(x) K.
inline Report check_kernel_symmetry(JackBasis& jack, int D)
{
    const std::size_t n = jack.n();
    Report r = make_report("kernel K_A: s_i, T_i and Phi-hat/Phi relations", n, jack.alpha(), D);
    TruncatedKernel K = kernel_KA(jack, D);
    OperatorContext cx(n, jack.alpha(), 0, 0), cy = cx.shifted(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        expect_equal(r, ops::s(cy, i)(K.poly), ops::s(cx, i)(K.poly), n, "s_" + std::to_string(i + 1));
    // lowering in y / raising in x: determined for y-degree <= D-1
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly lhs = ops::dunkl(cy, K.poly, i).truncate_block(n, n, D - 1);
        SparsePoly rhs = multiply_by_variable(K.poly, i).truncate_block(n, n, D - 1);
        expect_equal(r, lhs, rhs, n, "T_" + std::to_string(i + 1));
    }
    expect_equal(r, ops::Phi_hat(cy)(K.poly).truncate_block(n, n, D - 1),
                 ops::Phi(cx)(K.poly).truncate_block(n, n, D - 1), n, "Phi-hat");
    SparsePoly swapped = K.poly.map_terms([n](Exponent& e) {
        for (std::size_t i = 0; i < n; ++i)
            std::swap(e[i], e[n + i]);
        return Rational(1);
    });
    expect_equal(r, swapped, K.poly, n, "x<->y symmetry");
    return r;
}

/// (b) e^{p_1(x)} K_A(x;y) = K_A(x;y+1), compared for x-degree <= D.
inline Report check_shift_identity(JackBasis& jack, int D)
{
    const std::size_t n = jack.n();
    Report r = make_report("e^{p1(x)} K_A(x;y) = K_A(x;y+1)", n, jack.alpha(), D);
    TruncatedKernel K = kernel_KA(jack, D);
    SparsePoly ep = exp_truncated(power_sum(2 * n, 1, 0, n), D, 0, n);
    SparsePoly lhs = (ep * K.poly).truncate_block(0, n, D);
    SparsePoly rhs = shift_by_one(K.poly, n, n);
    expect_equal(r, lhs, rhs, n);
    return r;
}

/// (c) sum (2 alpha)^{|eta|} d/(e d') E^(H)(x) E(z) = K_A(2x;z) e^{-p_2(z)}, z-degree <= D.
inline Report check_hermite_generating_function(HermiteBasis& herm, int D)
{
    JackBasis& jack = herm.jack();
    const std::size_t n = jack.n();
    Report r = make_report("Hermite generating function", n, jack.alpha(), D);
    TruncatedKernel lhs = kernel_from(
        n, D, [&](const Composition& eta) -> Rational { return pow(Rational(2), weight(eta)) * kernel_weight(eta, jack.alpha()); },
        [&](const Composition& eta) { return herm.E(eta); },
        [&](const Composition& eta) { return jack.E(eta); });
    SparsePoly K2 = scale_variables(kernel_KA(jack, D).poly, 2, 0, n);
    SparsePoly ez = exp_truncated(power_sum(2 * n, 2, n, n) * Rational(-1), D, n, n);
    SparsePoly rhs = (K2 * ez).truncate_block(n, n, D);
    expect_equal(r, lhs.poly, rhs, n);
    return r;
}

/// (d) Sym^(x) K_A = n! 0F0.
inline Report check_symmetrization(JackBasis& jack, int D)
{
    const std::size_t n = jack.n();
    Report r = make_report("Sym K_A = n! 0F0", n, jack.alpha(), D);
    SparsePoly lhs = symmetrize(kernel_KA(jack, D).poly, 0, n);
    SparsePoly rhs = kernel_0F0(jack, D).poly * factorial(static_cast<long>(n));
    expect_equal(r, lhs, rhs, n);
    for (int d = 0; d <= std::min(D, 3) && r.passed; ++d)
        for (const auto& eta : compositions(n, d)) {
            SparsePoly s = symmetrize(jack.E(eta));
            SparsePoly J = jack.J(eta_plus(eta));
            expect_equal(r, s, J * jack.sym_constant(eta), 0, "Sym E" + to_string(eta));
        }
    return r;
}

/// (e) e^{p_1} E_eta alpha^{|eta|}/d'_eta = sum_nu alpha^{|nu|}/d'_nu (nu over eta) E_nu, degree <= D.
inline Report check_exp_connection(BinomialTable& bin, int D)
{
    JackBasis& jack = bin.jack();
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    Report r = make_report("e^{p1} E_eta expansion in binomial coefficients", n, alpha, D);
    SparsePoly ep = exp_truncated(power_sum(n, 1, 0, n), D, 0, n);
    for (const auto& eta : compositions_up_to(n, D)) {
        SparsePoly lhs = (ep * jack.E(eta)).truncate_block(0, n, D) *
                         (pow(alpha, weight(eta)) / jack.constants(eta).d_prime);
        SparsePoly rhs(n);
        for (const auto& nu : compositions_up_to(n, D)) {
            if (weight(nu) < weight(eta))
                continue;
            Rational b = bin(nu, eta);
            if (b != 0)
                rhs += jack.E(nu) * (b * pow(alpha, weight(nu)) / jack.constants(nu).d_prime);
        }
        expect_equal(r, lhs, rhs, 0, "eta=" + to_string(eta));
        if (!r.passed)
            break;
    }
    return r;
}

/// (f) p_1 E_eta = alpha d'_eta sum_{|nu|=|eta|+1} (nu over eta)/d'_nu E_nu.
inline Report check_pex(BinomialTable& bin, int D)
{
    JackBasis& jack = bin.jack();
    const std::size_t n = jack.n();
    Report r = make_report("p1 E_eta expansion", n, jack.alpha(), D);
    SparsePoly p1 = power_sum(n, 1, 0, n);
    for (const auto& eta : compositions_up_to(n, D - 1)) {
        SparsePoly rhs(n);
        for (const auto& nu : compositions(n, weight(eta) + 1))
            rhs += jack.E(nu) * (bin(nu, eta) / jack.constants(nu).d_prime);
        rhs *= jack.alpha() * jack.constants(eta).d_prime;
        expect_equal(r, p1 * jack.E(eta), rhs, 0, "eta=" + to_string(eta));
        if (!r.passed)
            break;
    }
    return r;
}

/// (g) actions of E~_0, E~_2, D~_1 (and D~_2 eigenvalues, D~_1 = [E~_0, D~_2]/2).
inline Report check_binomial_actions(BinomialTable& bin, int D)
{
    JackBasis& jack = bin.jack();
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    const OperatorContext& c = jack.context();
    Report r = make_report("E~0, E~2, D~1 actions and D~2 eigenvalues", n, alpha, D);
    const Rational shift = 2 * Rational(static_cast<long>(n) - 1) / alpha;
    for (const auto& eta : compositions_up_to(n, D)) {
        const SparsePoly& E = jack.E(eta);
        const Rational at1 = jack.value_at_ones(eta);
        const Rational eps = epsilon_eigenvalue(eta, alpha);
        const std::string tag = " eta=" + to_string(eta);
        expect_equal(r, ops::d_tilde(c, E, 2), E * eps, 0, "D~2 eigenvalue" + tag);

        SparsePoly e0(n), d1(n);
        if (weight(eta) > 0)
            for (const auto& nu : compositions(n, weight(eta) - 1)) {
                Rational b = bin(eta, nu);
                if (b == 0)
                    continue;
                SparsePoly term = jack.E(nu) * (b / jack.value_at_ones(nu));
                e0 += term;
                d1 += term * ((eps - epsilon_eigenvalue(nu, alpha)) / 2);
            }
        expect_equal(r, ops::euler(c, E, 0) * (1 / at1), e0, 0, "E~0" + tag);
        expect_equal(r, ops::d_tilde(c, E, 1) * (1 / at1), d1, 0, "D~1" + tag);
        SparsePoly comm = ops::euler(c, ops::d_tilde(c, E, 2), 0) - ops::d_tilde(c, ops::euler(c, E, 0), 2);
        expect_equal(r, ops::d_tilde(c, E, 1), comm * Rational(1, 2), 0, "D~1 = [E~0,D~2]/2" + tag);

        if (weight(eta) < D) {
            SparsePoly e2(n);
            for (const auto& nu : compositions(n, weight(eta) + 1)) {
                Rational b = bin(nu, eta);
                if (b == 0)
                    continue;
                e2 += jack.E(nu) * (b / jack.constants(nu).d_prime *
                                    (epsilon_eigenvalue(nu, alpha) - eps - shift));
            }
            e2 *= alpha / 2 * jack.constants(eta).d_prime;
            expect_equal(r, ops::euler(c, E, 2), e2, 0, "E~2" + tag);
        }
        if (!r.passed)
            break;
    }
    return r;
}

/// (h) the 2K1 p.d.e., on bidegrees (d, d+1) with d+1 <= D.
inline Report check_2K1_pde(JackBasis& jack, const Rational& a, const Rational& b, const Rational& c,
                            int D)
{
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    Report r = make_report("2K1 p.d.e.", n, alpha, D);
    r.params["a"] = to_string(a);
    r.params["b"] = to_string(b);
    r.params["c"] = to_string(c);
    SparsePoly F = kernel_2K1(jack, a, b, c, D).poly;
    OperatorContext cx(n, alpha, 0, 0), cy = cx.shifted(n);
    const Rational nm = Rational(static_cast<long>(n) - 1) / alpha;
    SparsePoly e2y = ops::euler(cy, F, 2);
    SparsePoly comm = ops::d_tilde(cy, e2y, 2) - ops::euler(cy, ops::d_tilde(cy, F, 2), 2);
    SparsePoly lhs = ops::d_tilde(cx, F, 1) + ops::euler(cx, F, 0) * (c - nm) - e2y * (a + b - nm) -
                     comm * Rational(1, 2);
    SparsePoly rhs = power_sum(2 * n, 1, n, n) * F * (a * b);
    expect_equal(r, lhs.truncate_block(0, n, D - 1), rhs.truncate_block(0, n, D - 1), n);
    return r;
}

/// (i) sum (-alpha)^{|eta|}/[a+q] d/(d'e) E^(L)(x) E(z) = K_B(x;-z) e^{p_1(z)}.
inline Report check_laguerre_generating_function(LaguerreBasis& lag, int D)
{
    JackBasis& jack = lag.jack();
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    Report r = make_report("Laguerre generating function with K_B", n, alpha, D);
    r.params["a"] = to_string(lag.a());
    TruncatedKernel lhs = kernel_from(
        n, D,
        [&](const Composition& eta) -> Rational {
            Rational s = weight(eta) % 2 ? -1 : 1;
            return s * kernel_weight(eta, alpha) / lag.factorial_aq(eta);
        },
        [&](const Composition& eta) { return lag.E(eta); },
        [&](const Composition& eta) { return jack.E(eta); });
    SparsePoly KB = negate_variables(kernel_KB(jack, lag.a(), D).poly, n, n);
    SparsePoly ez = exp_truncated(power_sum(2 * n, 1, n, n), D, n, n);
    expect_equal(r, lhs.poly, (KB * ez).truncate_block(n, n, D), n);
    return r;
}

/// (j) prod (1-z)^{-c-q} 1K1(c+q; a+q; -x; z/(1-z))
///     = sum (-alpha)^{|eta|} [c+q]/[a+q] d/(d'e) E^(L)(x) E(z),
/// and the a = c case with K_A.
inline Report check_1K1_generating_function(LaguerreBasis& lag, const Rational& c, int D)
{
    JackBasis& jack = lag.jack();
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    const Rational q = lag.q();
    Report r = make_report("Laguerre generating functions with 1K1 and K_A", n, alpha, D);
    r.params["a"] = to_string(lag.a());
    r.params["c"] = to_string(c);
    auto lhs_for = [&](const Rational& cc) {
        return kernel_from(
                   n, D,
                   [&](const Composition& eta) -> Rational {
                       Rational s = weight(eta) % 2 ? -1 : 1;
                       return s * kernel_weight(eta, alpha) *
                              hypergeometric_ratio(eta, {cc + q}, {lag.a() + q}, alpha);
                   },
                   [&](const Composition& eta) { return lag.E(eta); },
                   [&](const Composition& eta) { return jack.E(eta); })
            .poly;
    };
    auto rhs_for = [&](const SparsePoly& kernel, const Rational& cc) {
        SparsePoly K = substitute_geometric(negate_variables(kernel, 0, n), n, n, D);
        return (product_binomial_series(2 * n, cc + q, n, n, D) * K).truncate_block(n, n, D);
    };
    expect_equal(r, lhs_for(c), rhs_for(kernel_1K1(jack, c + q, lag.a() + q, D).poly, c), n, "1K1 form");
    // a = c: 1K1(a+q; a+q) is K_A
    expect_equal(r, lhs_for(lag.a()), rhs_for(kernel_KA(jack, D).poly, lag.a()), n, "K_A form");
    return r;
}

/// (k) the two expansions between E^(L) and E via binomial coefficients.
inline Report check_laguerre_binomial_expansions(LaguerreBasis& lag, BinomialTable& bin, int D)
{
    JackBasis& jack = lag.jack();
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    Report r = make_report("E^(L) <-> E binomial expansions", n, alpha, D);
    r.params["a"] = to_string(lag.a());
    for (const auto& eta : compositions_up_to(n, D)) {
        const EtaConstants ce = jack.constants(eta);
        Rational pre = lag.factorial_aq(eta) * ce.e / ce.d;
        SparsePoly f1(n), f2(n);
        for (const auto& [nu, b] : bin.row(eta)) {
            const EtaConstants cn = jack.constants(nu);
            Rational w = b * cn.d / (cn.e * lag.factorial_aq(nu));
            f1 += jack.E(nu) * (weight(nu) % 2 ? Rational(-w) : w);
            f2 += lag.E(nu) * w;
        }
        f1 *= weight(eta) % 2 ? Rational(-pre) : pre;
        f2 *= pre;
        expect_equal(r, lag.E(eta), f1, 0, "E^(L) from E, eta=" + to_string(eta));
        expect_equal(r, jack.E(eta), f2, 0, "E from E^(L), eta=" + to_string(eta));
        if (!r.passed)
            break;
    }
    return r;
}

/// (l) sum rule sum_{nu+=mu} (eta over nu) = (kappa over mu) and the
/// symmetrized connection formula, against symmetric binomials.
inline Report check_symmetric_binomials(BinomialTable& bin, int D)
{
    JackBasis& jack = bin.jack();
    const std::size_t n = jack.n();
    const Rational alpha = jack.alpha();
    Report r = make_report("binomial sum rule and symmetrized connection", n, alpha, D);
    std::map<Composition, Expansion> sym;
    auto sym_row = [&](const Composition& kappa) -> const Expansion& {
        auto it = sym.find(kappa);
        if (it == sym.end())
            it = sym.emplace(kappa, symmetric_binomial_row(jack, kappa)).first;
        return it->second;
    };
    auto sym_at = [&](const Composition& kappa, const Composition& mu) {
        const Expansion& e = sym_row(kappa);
        auto it = e.find(mu);
        return it == e.end() ? Rational(0) : it->second;
    };
    int printed_bad = 0, printed_total = 0;
    for (const auto& eta : compositions_up_to(n, D)) {
        const Composition kappa = eta_plus(eta);
        for (int w = 0; w <= weight(eta); ++w)
            for (const auto& mu : partitions(n, w)) {
                Rational s = 0;
                for (const auto& nu : compositions(n, w))
                    if (eta_plus(nu) == mu)
                        s += bin(eta, nu);
                expect_equal(r, s, sym_at(kappa, mu),
                             "sum rule eta=" + to_string(eta) + " mu=" + to_string(mu));
            }
        for (int w = weight(eta); w <= D; ++w)
            for (const auto& mu : partitions(n, w)) {
                // each nu carries E_nu(1^n)/E_eta(1^n), which the symmetrization produces
                Rational weighted = 0, plain = 0;
                for (const auto& nu : compositions(n, w))
                    if (eta_plus(nu) == mu) {
                        Rational t = bin(nu, eta) / jack.constants(nu).d_prime;
                        plain += t;
                        weighted += t * jack.value_at_ones(nu);
                    }
                Rational pre = jack.constants(eta).d_prime * hook_norm_j(mu, alpha) *
                               evaluate_at_ones(jack.J(kappa)) /
                               (hook_norm_j(kappa, alpha) * evaluate_at_ones(jack.J(mu)));
                Rational target = sym_at(mu, kappa);
                expect_equal(r, pre * weighted / jack.value_at_ones(eta), target,
                             "connection eta=" + to_string(eta) + " mu=" + to_string(mu));
                ++printed_total;
                if (pre * plain != target)
                    ++printed_bad;
            }
        if (!r.passed)
            break;
    }
    r.note = "form without the E_nu(1^n)/E_eta(1^n) weights fails in " + std::to_string(printed_bad) +
             " of " + std::to_string(printed_total) + " cases";
    return r;
}

/// Builds the t-series sides of the summation formulas in variables
/// (x block, y block, t), 2n+1 variables in total.
namespace detail {

inline SparsePoly t_power(std::size_t nv, int k) { return SparsePoly::variable(nv, nv - 1, k); }

/// sum_k coeffs[k] t^{step k}.
inline SparsePoly t_series(std::size_t nv, const std::vector<Rational>& coeffs, int step)
{
    SparsePoly s(nv);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s += t_power(nv, step * static_cast<int>(k)) * coeffs[k];
    return s;
}

} // namespace detail

/// (m, Hermite) sum_eta E^(H)(w) E^(H)(z) t^{|eta|} N_0/N_eta
///   = (1-t^2)^{-nq/2} exp(-t^2/(1-t^2)(p_2(w)+p_2(z))) K_A(2wt/s; z/s), s^2 = 1-t^2.
inline Report check_hermite_summation(HermiteBasis& herm, int T)
{
    JackBasis& jack = herm.jack();
    const std::size_t n = jack.n();
    const std::size_t nv = 2 * n + 1;
    const Rational alpha = jack.alpha();
    Report r = make_report("Hermite summation formula in t", n, alpha, T);
    SparsePoly lhs(nv);
    for (const auto& eta : compositions_up_to(n, T))
        lhs += embed(herm.E(eta), nv, 0) * embed(herm.E(eta), nv, n) * detail::t_power(nv, weight(eta)) *
               (1 / herm.norm_ratio(eta));
    const int half = T / 2;
    // K_A(2wt/s; z/s): each term picks up (2t)^{|eta|} (1-t^2)^{-|eta|}
    SparsePoly K(nv);
    for (const auto& eta : compositions_up_to(n, T)) {
        int w = weight(eta);
        SparsePoly geo = detail::t_series(nv, series_binomial(Rational(w), half), 2);
        K += embed(jack.E(eta), nv, 0) * embed(jack.E(eta), nv, n) * detail::t_power(nv, w) * geo *
             (pow(Rational(2), w) * kernel_weight(eta, alpha));
    }
    K = K.truncate_block(nv - 1, 1, T);
    Rational q = laguerre_q(n, alpha);
    SparsePoly pre = detail::t_series(nv, series_binomial(Rational(static_cast<long>(n)) * q / 2, half), 2);
    // -t^2/(1-t^2) = -(t^2 + t^4 + ...)
    SparsePoly arg(nv);
    for (int k = 1; 2 * k <= T; ++k)
        arg -= detail::t_power(nv, 2 * k);
    arg = arg * (power_sum(nv, 2, 0, n) + power_sum(nv, 2, n, n));
    SparsePoly ex = exp_truncated(arg, T, nv - 1, 1);
    SparsePoly rhs = (((pre * ex).truncate_block(nv - 1, 1, T)) * K).truncate_block(nv - 1, 1, T);
    expect_equal(r, lhs, rhs, n);
    return r;
}

/// (m, Laguerre) sum_eta E^(L)(x) E^(L)(y) t^{|eta|} N_0/N_eta
///   = (1-t)^{-n(a+q)} exp(-t/(1-t)(p_1(x)+p_1(y))) K_B(y/(1-t); tx/(1-t)).
inline Report check_laguerre_summation(LaguerreBasis& lag, int T)
{
    JackBasis& jack = lag.jack();
    const std::size_t n = jack.n();
    const std::size_t nv = 2 * n + 1;
    const Rational alpha = jack.alpha();
    Report r = make_report("Laguerre summation formula in t", n, alpha, T);
    r.params["a"] = to_string(lag.a());
    SparsePoly lhs(nv);
    for (const auto& eta : compositions_up_to(n, T))
        lhs += embed(lag.E(eta), nv, 0) * embed(lag.E(eta), nv, n) * detail::t_power(nv, weight(eta)) *
               (1 / lag.norm_ratio(eta));
    SparsePoly K(nv);
    for (const auto& eta : compositions_up_to(n, T)) {
        int w = weight(eta);
        SparsePoly geo = detail::t_series(nv, series_binomial(Rational(2 * w), T), 1);
        K += embed(jack.E(eta), nv, 0) * embed(jack.E(eta), nv, n) * detail::t_power(nv, w) * geo *
             (kernel_weight(eta, alpha) / lag.factorial_aq(eta));
    }
    K = K.truncate_block(nv - 1, 1, T);
    Rational c = Rational(static_cast<long>(n)) * (lag.a() + lag.q());
    SparsePoly pre = detail::t_series(nv, series_binomial(c, T), 1);
    SparsePoly arg(nv);
    for (int k = 1; k <= T; ++k)
        arg -= detail::t_power(nv, k);
    arg = arg * (power_sum(nv, 1, 0, n) + power_sum(nv, 1, n, n));
    SparsePoly ex = exp_truncated(arg, T, nv - 1, 1);
    SparsePoly rhs = (((pre * ex).truncate_block(nv - 1, 1, T)) * K).truncate_block(nv - 1, 1, T);
    expect_equal(r, lhs, rhs, n);
    return r;
}

} // namespace nsjack
