#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "combinatorics.hpp"
#include "ct.hpp"
#include "errors.hpp"
#include "hermite_laguerre.hpp"
#include "jack.hpp"
#include "kernels.hpp"
#include "numeric.hpp"
#include "operators.hpp"
#include "poly.hpp"
#include "report.hpp"

namespace nsjack::verify {

inline std::vector<Rational> default_alphas()
{
    return {Rational(1), Rational(2), make_rational(1, 2), Rational(3), make_rational(7, 5)};
}

struct Config {
    std::vector<Rational> alphas = default_alphas();
    int max_weight = 4;
    std::size_t max_n = 3;
    std::vector<Rational> laguerre_a = {Rational(0), make_rational(1, 2), Rational(1)};
    int operator_degree = 5;
    int pairing_weight = 3;
    int ct_weight = 3;
    std::vector<int> ct_k = {1, 2};
    int kadell_max = 2;
    int kernel_degree_n2 = 5;
    int kernel_degree_n3 = 4;
    Rational kernel_a = make_rational(1, 2);
    // 2K1 and 1K1 parameters; chosen so no [c]_eta vanishes for the test alphas
    Rational hyp_a = make_rational(1, 3), hyp_b = Rational(2), hyp_c = make_rational(5, 2);
    int summation_T = 4;
    int numeric_weight = 2;
    int numeric_ortho_weight = 3;
    int numeric_D = 8;
    Rational numeric_a = make_rational(1, 2);

    int kernel_degree(std::size_t n) const
    {
        if (n <= 2)
            return kernel_degree_n2;
        return kernel_degree_n3;
    }
};

/// Shared bases keyed by (n, alpha[, a]).
class Workspace {
public:
    std::shared_ptr<JackBasis> jack(std::size_t n, const Rational& alpha)
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(n, alpha);
        auto it = jack_.find(key);
        if (it == jack_.end())
            it = jack_.emplace(key, std::make_shared<JackBasis>(n, alpha)).first;
        return it->second;
    }

    HermiteBasis& hermite(std::size_t n, const Rational& alpha)
    {
        auto j = jack(n, alpha);
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(n, alpha);
        auto it = hermite_.find(key);
        if (it == hermite_.end())
            it = hermite_.emplace(key, std::make_unique<HermiteBasis>(j)).first;
        return *it->second;
    }

    LaguerreBasis& laguerre(std::size_t n, const Rational& alpha, const Rational& a)
    {
        auto j = jack(n, alpha);
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(n, alpha, a);
        auto it = laguerre_.find(key);
        if (it == laguerre_.end())
            it = laguerre_.emplace(key, std::make_unique<LaguerreBasis>(j, a)).first;
        return *it->second;
    }

    BinomialTable& binomial(std::size_t n, const Rational& alpha)
    {
        auto j = jack(n, alpha);
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(n, alpha);
        auto it = binomial_.find(key);
        if (it == binomial_.end())
            it = binomial_.emplace(key, std::make_unique<BinomialTable>(j)).first;
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, Rational>, std::shared_ptr<JackBasis>> jack_;
    std::map<std::tuple<std::size_t, Rational>, std::unique_ptr<HermiteBasis>> hermite_;
    std::map<std::tuple<std::size_t, Rational, Rational>, std::unique_ptr<LaguerreBasis>> laguerre_;
    std::map<std::tuple<std::size_t, Rational>, std::unique_ptr<BinomialTable>> binomial_;
};

/// Accumulates the cases of one report; keeps the first failure.
class Tally {
public:
    Tally(std::string identity, std::size_t n, const Rational& alpha, int D = -1)
        : r_(make_report(std::move(identity), n, alpha, D))
    {
    }

    Tally& with(const std::string& key, const std::string& value)
    {
        r_.params[key] = value;
        return *this;
    }

    bool ok() const { return r_.passed; }

    void equal(const SparsePoly& lhs, const SparsePoly& rhs, const std::string& where)
    {
        ++cases_;
        expect_equal(r_, lhs, rhs, 0, where);
    }

    void equal(const Rational& lhs, const Rational& rhs, const std::string& where)
    {
        ++cases_;
        expect_equal(r_, lhs, rhs, where);
    }

    void holds(bool cond, const std::string& where)
    {
        ++cases_;
        if (!cond)
            fail(where);
    }

    void fail(const std::string& why)
    {
        if (!r_.passed)
            return;
        r_.passed = false;
        r_.first_failure = why;
    }

    void note(const std::string& text) { r_.note = text; }

    /// Folds a report produced elsewhere into this one.
    void absorb(const Report& other)
    {
        ++cases_;
        if (!other.passed)
            fail(other.identity + ": " + other.first_failure);
    }

    Report finish()
    {
        r_.params["cases"] = std::to_string(cases_);
        return r_;
    }

private:
    Report r_;
    long cases_ = 0;
};

/// Runs body on a fresh tally; an exception becomes the failure text.
template <class Body>
Report run(Tally t, Body&& body)
{
    try {
        body(t);
    } catch (const std::exception& e) {
        t.fail(std::string("exception: ") + e.what());
    }
    return t.finish();
}

inline std::string a_label(const Rational& a) { return to_string(a); }

inline std::vector<SparsePoly> monomial_basis(std::size_t n, int max_degree)
{
    std::vector<SparsePoly> out;
    for (const auto& c : compositions_up_to(n, max_degree))
        out.push_back(SparsePoly::monomial(n, c));
    return out;
}

/// lhs == rhs on every polynomial of the test basis.
inline void operator_identity(Tally& t, const Operator& lhs, const Operator& rhs,
                              const std::vector<SparsePoly>& basis, const std::string& label)
{
    for (const auto& m : basis) {
        t.equal(lhs(m), rhs(m), label + " on " + m.str());
        if (!t.ok())
            return;
    }
}

inline std::string idx(std::size_t i) { return std::to_string(i + 1); }

// ---------------------------------------------------------------------------
// Operator algebra.

inline ReportList operator_checks(std::size_t n, const Rational& alpha, const Config& cfg)
{
    ReportList out;
    const OperatorContext c(n, alpha);
    const auto basis = monomial_basis(n, cfg.operator_degree);
    const Rational inv = 1 / alpha;
    using namespace ops;

    out.push_back(run(Tally("operators.dunkl-commutation", n, alpha), [&](Tally& t) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Operator lhs = commutator(T(c, i), multiply_x(c, j));
                Operator rhs;
                if (i == j) {
                    rhs = Operator::identity();
                    for (std::size_t p = 0; p < n; ++p)
                        if (p != i)
                            rhs = rhs + inv * transposition(c, i, p);
                } else {
                    rhs = Rational(-inv) * transposition(c, i, j);
                }
                operator_identity(t, lhs, rhs, basis, "[T" + idx(i) + ",x" + idx(j) + "]");
            }
    }));

    out.push_back(run(Tally("operators.commuting-T-xi-h", n, alpha), [&](Tally& t) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                operator_identity(t, T(c, i) * T(c, j), T(c, j) * T(c, i), basis, "T T");
                operator_identity(t, xi(c, i) * xi(c, j), xi(c, j) * xi(c, i), basis, "xi xi");
                operator_identity(t, h(c, i) * h(c, j), h(c, j) * h(c, i), basis, "h h");
            }
    }));

    auto hecke = [&](Tally& t, const std::function<Operator(std::size_t)>& X, const std::string& name) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            operator_identity(t, X(i) * s(c, i) - s(c, i) * X(i + 1), Operator::identity(), basis,
                              name + idx(i) + " s" + idx(i) + " - s" + idx(i) + " " + name + idx(i + 1));
            operator_identity(t, X(i + 1) * s(c, i) - s(c, i) * X(i), Operator::scalar(-1), basis,
                              name + idx(i + 1) + " s" + idx(i) + " - s" + idx(i) + " " + name + idx(i));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j)
                if (i != j && i != j + 1)
                    operator_identity(t, X(i) * s(c, j), s(c, j) * X(i), basis,
                                      "[" + name + idx(i) + ",s" + idx(j) + "]");
    };
    out.push_back(run(Tally("operators.hecke-xi-h", n, alpha), [&](Tally& t) {
        hecke(t, [&](std::size_t i) { return xi(c, i); }, "xi");
        hecke(t, [&](std::size_t i) { return h(c, i); }, "h");
    }));

    // [xi_j, T_i]
    out.push_back(run(Tally("operators.xi-T-commutators", n, alpha), [&](Tally& t) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Operator lhs = commutator(xi(c, j), T(c, i));
                Operator rhs;
                if (i < j) {
                    rhs = T(c, i) * transposition(c, i, j);
                } else if (i > j) {
                    rhs = T(c, j) * transposition(c, i, j);
                } else {
                    rhs = Rational(-alpha) * T(c, j);
                    for (std::size_t p = 0; p < j; ++p)
                        rhs = rhs - transposition(c, j, p) * T(c, j);
                    for (std::size_t p = j + 1; p < n; ++p)
                        rhs = rhs - T(c, j) * transposition(c, j, p);
                }
                operator_identity(t, lhs, rhs, basis, "[xi" + idx(j) + ",T" + idx(i) + "]");
            }
    }));

    out.push_back(run(Tally("operators.Phi-intertwining", n, alpha), [&](Tally& t) {
        Operator P = Phi(c), Ph = Phi_hat(c);
        for (std::size_t j = 0; j + 1 < n; ++j)
            operator_identity(t, xi(c, j) * P, P * xi(c, j + 1), basis, "xi" + idx(j) + " Phi");
        operator_identity(t, xi(c, n - 1) * P, P * (xi(c, 0) + Operator::scalar(alpha)), basis, "xi_n Phi");
        for (std::size_t j = 1; j < n; ++j)
            operator_identity(t, xi(c, j) * Ph, Ph * xi(c, j - 1), basis, "xi" + idx(j) + " Phi-hat");
        operator_identity(t, xi(c, 0) * Ph, Ph * (xi(c, n - 1) - Operator::scalar(alpha)), basis,
                          "xi_1 Phi-hat");
    }));

    out.push_back(run(Tally("operators.h-intertwining", n, alpha), [&](Tally& t) {
        Operator Ps = Phi_hat_star(c), Ph = Phi_hat(c);
        operator_identity(t, h(c, n - 1) * Ps, Ps * (h(c, 0) + Operator::scalar(alpha)), basis,
                          "h_n Phi-hat*");
        for (std::size_t i = 0; i + 1 < n; ++i)
            operator_identity(t, h(c, i) * Ps, Ps * h(c, i + 1), basis, "h" + idx(i) + " Phi-hat*");
        operator_identity(t, h(c, 0) * Ph, Ph * (h(c, n - 1) - Operator::scalar(alpha)), basis,
                          "h_1 Phi-hat");
        for (std::size_t i = 1; i < n; ++i)
            operator_identity(t, h(c, i) * Ph, Ph * h(c, i - 1), basis, "h" + idx(i) + " Phi-hat");
        // adjoint written as s_{n-1}...s_1 (2 x_1 - T_1)
        Operator direct = cyclic_up(c) * (Rational(2) * multiply_x(c, 0) - T(c, 0));
        operator_identity(t, Ps, direct, basis, "Phi-hat* forms");
    }));

    out.push_back(run(Tally("operators.laplacian-commutators", n, alpha), [&](Tally& t) {
        Operator L = Delta_A(c);
        for (std::size_t i = 0; i < n; ++i) {
            operator_identity(t, commutator(xi(c, i), L), Rational(-2 * alpha) * (T(c, i) * T(c, i)), basis,
                              "[xi" + idx(i) + ",Delta_A]");
            operator_identity(t, commutator(multiply_x(c, i), L), Rational(-2) * T(c, i), basis,
                              "[x" + idx(i) + ",Delta_A]");
        }
    }));

    out.push_back(run(Tally("operators.xi-forms", n, alpha), [&](Tally& t) {
        for (std::size_t i = 0; i < n; ++i)
            operator_identity(t, xi(c, i), xi_divided(c, i), basis, "xi" + idx(i));
    }));

    out.push_back(run(Tally("operators.euler-D1", n, alpha), [&](Tally& t) {
        operator_identity(t, D_tilde1(c), Rational(1, 2) * commutator(E_tilde(c, 0), D_tilde2(c)), basis,
                          "D~1 = [E~0, D~2]/2");
    }));
    return out;
}

/// Type B operators; basis polynomials are in y = x^2 except where noted.
inline ReportList operator_checks_B(std::size_t n, const Rational& alpha, const Rational& a,
                                    const Config& cfg)
{
    ReportList out;
    const OperatorContext c(n, alpha, a);
    const auto basis = monomial_basis(n, cfg.operator_degree);
    using namespace ops;
    auto tally = [&](const std::string& id) { return Tally(id, n, alpha).with("a", a_label(a)); };

    out.push_back(run(tally("operators.commuting-l"), [&](Tally& t) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                operator_identity(t, l(c, i) * l(c, j), l(c, j) * l(c, i), basis, "l l");
    }));

    out.push_back(run(tally("operators.hecke-l"), [&](Tally& t) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            operator_identity(t, l(c, i) * s(c, i) - s(c, i) * l(c, i + 1), Operator::identity(), basis,
                              "l" + idx(i) + " s" + idx(i));
            operator_identity(t, l(c, i + 1) * s(c, i) - s(c, i) * l(c, i), Operator::scalar(-1), basis,
                              "l" + idx(i + 1) + " s" + idx(i));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j)
                if (i != j && i != j + 1)
                    operator_identity(t, l(c, i) * s(c, j), s(c, j) * l(c, i), basis, "[l,s]");
    }));

    out.push_back(run(tally("operators.xi-hat-B-commutators"), [&](Tally& t) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Operator lhs = commutator(xi_hat(c, j), B(c, i));
                Operator rhs;
                if (i < j) {
                    rhs = B(c, i) * transposition(c, i, j);
                } else if (i > j) {
                    rhs = B(c, j) * transposition(c, i, j);
                } else {
                    rhs = Rational(-alpha) * B(c, j);
                    for (std::size_t p = 0; p < j; ++p)
                        rhs = rhs - transposition(c, j, p) * B(c, j);
                    for (std::size_t p = j + 1; p < n; ++p)
                        rhs = rhs - B(c, j) * transposition(c, j, p);
                }
                operator_identity(t, lhs, rhs, basis, "[xi^" + idx(j) + ",B" + idx(i) + "]");
            }
        for (std::size_t i = 0; i < n; ++i)
            operator_identity(t, commutator(xi_hat(c, i), Sum_B(c)), Rational(-alpha) * B(c, i), basis,
                              "[xi^" + idx(i) + ", sum B]");
    }));

    out.push_back(run(tally("operators.Psi-intertwining"), [&](Tally& t) {
        Operator Ph = Psi_hat(c), Ps = Psi_hat_star(c);
        for (std::size_t j = 1; j < n; ++j)
            operator_identity(t, xi_hat(c, j) * Ph, Ph * xi_hat(c, j - 1), basis, "xi^" + idx(j) + " Psi-hat");
        operator_identity(t, xi_hat(c, 0) * Ph, Ph * (xi_hat(c, n - 1) - Operator::scalar(alpha)), basis,
                          "xi^1 Psi-hat");
        operator_identity(t, l(c, n - 1) * Ps, Ps * (l(c, 0) + Operator::scalar(alpha)), basis,
                          "l_n Psi-hat*");
        for (std::size_t i = 0; i + 1 < n; ++i)
            operator_identity(t, l(c, i) * Ps, Ps * l(c, i + 1), basis, "l" + idx(i) + " Psi-hat*");
        operator_identity(t, l(c, 0) * Ph, Ph * (l(c, n - 1) - Operator::scalar(alpha)), basis,
                          "l_1 Psi-hat");
        for (std::size_t i = 1; i < n; ++i)
            operator_identity(t, l(c, i) * Ph, Ph * l(c, i - 1), basis, "l" + idx(i) + " Psi-hat");
    }));

    // x-space: [x_i, Delta_B] = -2 T^(B)_i on all monomials in x, and
    // Delta_B f(x^2) = (4 sum B f)(x^2).
    out.push_back(run(tally("operators.type-B-laplacian"), [&](Tally& t) {
        Operator L = Delta_B_x(c);
        for (std::size_t i = 0; i < n; ++i)
            operator_identity(t, commutator(multiply_x(c, i), L), Rational(-2) * T_B(c, i), basis,
                              "[x" + idx(i) + ",Delta_B]");
        for (const auto& m : monomial_basis(n, std::max(0, cfg.operator_degree - 2))) {
            t.equal(L(square_variables(m)), square_variables(Delta_B(c)(m)), "Delta_B on squares of " + m.str());
            if (!t.ok())
                break;
        }
    }));
    return out;
}

inline ReportList operators_suite(Workspace&, const Config& cfg)
{
    ReportList out;
    for (std::size_t n = 1; n <= cfg.max_n; ++n)
        for (const auto& alpha : cfg.alphas) {
            append(out, operator_checks(n, alpha, cfg));
            for (const auto& a : cfg.laguerre_a)
                append(out, operator_checks_B(n, alpha, a, cfg));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Non-symmetric Jack polynomials.

inline std::vector<Composition> labels(std::size_t n, int max_weight)
{
    return compositions_up_to(n, max_weight);
}

/// Sahi's s_i action for one basis family.
inline void s_action(Tally& t, const std::function<const SparsePoly&(const Composition&)>& E,
                     const Composition& eta, const Rational& alpha)
{
    const std::size_t n = eta.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        SparsePoly lhs = apply_transposition(E(eta), i, i + 1);
        Rational delta = eta_bar(eta, i, alpha) - eta_bar(eta, i + 1, alpha);
        SparsePoly rhs;
        if (eta[i] == eta[i + 1]) {
            rhs = E(eta);
        } else {
            const SparsePoly& other = E(swap_adjacent(eta, i));
            rhs = E(eta) * (1 / delta);
            if (eta[i] > eta[i + 1])
                rhs += other * (1 - 1 / (delta * delta));
            else
                rhs += other;
        }
        t.equal(lhs, rhs, "s" + idx(i) + " on eta=" + to_string(eta));
    }
}

inline ReportList jack_checks(Workspace& ws, std::size_t n, const Rational& alpha, const Config& cfg)
{
    ReportList out;
    auto jp = ws.jack(n, alpha);
    JackBasis& jack = *jp;
    const OperatorContext& c = jack.context();
    const auto etas = labels(n, cfg.max_weight);
    auto E = [&](const Composition& eta) -> const SparsePoly& { return jack.E(eta); };

    out.push_back(run(Tally("jack.xi-eigen", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas) {
            auto bars = eta_bar_vector(eta, alpha);
            for (std::size_t i = 0; i < n; ++i)
                t.equal(ops::cherednik(c, E(eta), i), E(eta) * bars[i],
                        "xi" + idx(i) + " on eta=" + to_string(eta));
        }
    }));

    out.push_back(run(Tally("jack.oracle", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas)
            t.equal(E(eta), jack_E_oracle(n, alpha, eta), "eta=" + to_string(eta));
    }));

    out.push_back(run(Tally("jack.triangular-positive", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas) {
            const SparsePoly& p = E(eta);
            t.equal(p.coeff(exponent_of(eta)), Rational(1), "leading coefficient, eta=" + to_string(eta));
            for (const auto& [e, coeff] : p.terms()) {
                Composition nu = composition_of(e, n);
                if (nu != eta)
                    t.holds(precedes(nu, eta), "term " + to_string(nu) + " not below eta=" + to_string(eta));
                t.holds(coeff > 0, "non-positive coefficient at " + to_string(nu) + " in eta=" + to_string(eta));
            }
        }
    }));

    out.push_back(run(Tally("jack.shift-and-reverse", n, alpha), [&](Tally& t) {
        std::vector<std::size_t> rev(n);
        for (std::size_t i = 0; i < n; ++i)
            rev[i] = n - 1 - i;
        for (const auto& eta : etas) {
            for (int p : {1, 2}) {
                SparsePoly xp = SparsePoly::monomial(n, Composition(n, p));
                t.equal(xp * E(eta), E(add_constant(eta, p)), "x^" + std::to_string(p) + " E" + to_string(eta));
            }
            int m = *std::max_element(eta.begin(), eta.end());
            SparsePoly lhs = SparsePoly::monomial(n, Composition(n, m)) * invert_variables(E(eta));
            Composition mu(n);
            for (std::size_t i = 0; i < n; ++i)
                mu[i] = m - eta[n - 1 - i];
            t.equal(lhs, permute(E(mu), rev), "E(1/x) for eta=" + to_string(eta));
        }
    }));

    out.push_back(run(Tally("jack.s_i-action", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas)
            s_action(t, E, eta, alpha);
    }));

    out.push_back(run(Tally("jack.eval-ones", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas) {
            EtaConstants k = jack.constants(eta);
            t.equal(evaluate_at_ones(E(eta)), k.e / k.d, "eta=" + to_string(eta));
        }
    }));

    out.push_back(run(Tally("jack.symmetric", n, alpha), [&](Tally& t) {
        const Rational nfact = factorial(static_cast<long>(n));
        for (int w = 0; w <= cfg.max_weight; ++w)
            for (const auto& kappa : partitions(n, w)) {
                SparsePoly J = jack.J(kappa);
                t.equal(symmetrize(J), J * nfact, "Sym J" + to_string(kappa));
                Rational lead = J.coeff(exponent_of(kappa)) / hook_norm_j(kappa, alpha);
                t.equal(lead, 1 / jack.constants(kappa).d_prime, "x^kappa coefficient of J/j, kappa=" + to_string(kappa));
            }
        for (const auto& eta : etas)
            t.equal(symmetrize(E(eta)), jack.J(eta_plus(eta)) * jack.sym_constant(eta),
                    "Sym E" + to_string(eta));
    }));

    out.push_back(run(Tally("jack.constant-recursions", n, alpha), [&](Tally& t) {
        const Rational nn = static_cast<long>(n);
        std::vector<Rational> cs = {make_rational(7, 3), Rational(1) + nn / alpha};
        for (const auto& eta : etas) {
            const std::string at = "eta=" + to_string(eta);
            auto bars = eta_bar_vector(eta, alpha);
            EtaConstants k = jack.constants(eta);
            Composition up = phi_composition(eta);
            EtaConstants ku = jack.constants(up);
            t.equal(ku.d / k.d, bars[0] + alpha + nn, "d ratio under Phi, " + at);
            t.equal(ku.e / k.e, bars[0] + alpha + nn, "e ratio under Phi, " + at);
            t.equal(ku.d_prime / k.d_prime, bars[0] + alpha + nn - 1, "d' ratio under Phi, " + at);
            // eigenvalues of Phi eta rotate
            auto ubars = eta_bar_vector(up, alpha);
            for (std::size_t i = 0; i + 1 < n; ++i)
                t.equal(ubars[i], bars[i + 1], "rotated eigenvalue, " + at);
            t.equal(ubars[n - 1], bars[0] + alpha, "rotated eigenvalue, " + at);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Composition s = swap_adjacent(eta, i);
                EtaConstants ks = jack.constants(s);
                t.equal(ks.e, k.e, "e under s_i, " + at);
                if (eta[i] > eta[i + 1]) {
                    Rational delta = bars[i] - bars[i + 1];
                    t.equal(ks.d / k.d, (delta + 1) / delta, "d under s_i, " + at);
                    t.equal(ks.d_prime / k.d_prime, delta / (delta - 1), "d' under s_i, " + at);
                }
            }
            t.equal(k.e, pow(alpha, weight(eta)) * generalized_factorial(nn / alpha + 1, eta, alpha),
                    "e as generalized factorial, " + at);
            for (const auto& cc : cs) {
                Rational f = generalized_factorial(cc, eta, alpha);
                for (std::size_t i = 0; i + 1 < n; ++i)
                    t.equal(generalized_factorial(cc, swap_adjacent(eta, i), alpha), f, "[c] under s_i, " + at);
                t.equal(generalized_factorial(cc, up, alpha) / f, cc + bars[0] / alpha, "[c] under Phi, " + at);
            }
            if (auto down = phi_hat_composition(eta)) {
                t.equal(k.d_prime / jack.constants(*down).d_prime, bars[n - 1] + nn - 1, "d' under Phi-hat, " + at);
                for (const auto& cc : cs)
                    t.equal(generalized_factorial(cc, eta, alpha) / generalized_factorial(cc, *down, alpha),
                            cc - 1 + bars[n - 1] / alpha, "[c] under Phi-hat, " + at);
            }
        }
    }));

    out.push_back(run(Tally("jack.raising-lowering", n, alpha), [&](Tally& t) {
        Operator P = ops::Phi(c), Ph = ops::Phi_hat(c);
        for (const auto& eta : etas) {
            if (weight(eta) < cfg.max_weight)
                t.equal(P(E(eta)), E(phi_composition(eta)), "Phi E" + to_string(eta));
            SparsePoly lowered = Ph(E(eta));
            if (auto down = phi_hat_composition(eta))
                t.equal(lowered, E(*down) * lowering_constant(eta, alpha), "Phi-hat E" + to_string(eta));
            else
                t.holds(lowered.is_zero(), "Phi-hat E" + to_string(eta) + " should vanish");
        }
    }));
    return out;
}

inline ReportList jack_suite(Workspace& ws, const Config& cfg)
{
    ReportList out;
    for (std::size_t n = 1; n <= cfg.max_n; ++n)
        for (const auto& alpha : cfg.alphas)
            append(out, jack_checks(ws, n, alpha, cfg));
    return out;
}

// ---------------------------------------------------------------------------
// Hermite.

inline ReportList hermite_checks(Workspace& ws, std::size_t n, const Rational& alpha, const Config& cfg)
{
    ReportList out;
    HermiteBasis& herm = ws.hermite(n, alpha);
    JackBasis& jack = herm.jack();
    const OperatorContext& c = herm.context();
    const auto etas = labels(n, cfg.max_weight);
    auto EH = [&](const Composition& eta) -> const SparsePoly& { return herm.E(eta); };

    out.push_back(run(Tally("hermite.h-eigen", n, alpha), [&](Tally& t) {
        Operator H = ops::Delta_A(c) - Rational(2) * ops::E_tilde(c, 1);
        for (const auto& eta : etas) {
            auto bars = eta_bar_vector(eta, alpha);
            for (std::size_t i = 0; i < n; ++i)
                t.equal(ops::h(c, i)(EH(eta)), EH(eta) * bars[i], "h" + idx(i) + " on eta=" + to_string(eta));
            t.equal(H(EH(eta)), EH(eta) * Rational(-2 * weight(eta)), "H^(H) on eta=" + to_string(eta));
        }
    }));

    out.push_back(run(Tally("hermite.s_i-action", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas)
            s_action(t, EH, eta, alpha);
    }));

    out.push_back(run(Tally("hermite.raising-lowering", n, alpha), [&](Tally& t) {
        Operator Ph = ops::Phi_hat(c), Ps = ops::Phi_hat_star(c);
        for (const auto& eta : etas) {
            SparsePoly lowered = Ph(EH(eta));
            if (auto down = phi_hat_composition(eta))
                t.equal(lowered, EH(*down) * lowering_constant(eta, alpha), "Phi-hat E^(H)" + to_string(eta));
            else
                t.holds(lowered.is_zero(), "Phi-hat E^(H)" + to_string(eta) + " should vanish");
            if (weight(eta) < cfg.max_weight)
                t.equal(Ps(EH(eta)), EH(phi_composition(eta)) * Rational(2), "Phi-hat* E^(H)" + to_string(eta));
        }
    }));

    out.push_back(run(Tally("hermite.pairing", n, alpha), [&](Tally& t) {
        for (int w = 0; w <= std::min(cfg.pairing_weight, cfg.max_weight); ++w) {
            auto block = compositions(n, w);
            for (const auto& nu : block) {
                DunklMoments mom(c, jack.E(nu), DunklMoments::Kind::A);
                for (const auto& eta : block) {
                    Rational want = eta == nu ? pairing_H_value(eta, alpha) : Rational(0);
                    t.equal(mom.pair(jack.E(eta)), want, "[E" + to_string(eta) + ",E" + to_string(nu) + "]_H");
                }
            }
        }
    }));

    out.push_back(run(Tally("hermite.norm-recursions", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas) {
            Composition up = phi_composition(eta);
            t.equal(herm.norm_ratio(up) / herm.norm_ratio(eta),
                    jack.constants(up).d_prime / (2 * alpha * jack.constants(eta).d_prime),
                    "Phi step, eta=" + to_string(eta));
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (eta[i] < eta[i + 1]) {
                    Rational delta = eta_bar(eta, i, alpha) - eta_bar(eta, i + 1, alpha);
                    t.equal(herm.norm_ratio(swap_adjacent(eta, i)),
                            (1 - 1 / (delta * delta)) * herm.norm_ratio(eta), "s_i step, eta=" + to_string(eta));
                }
        }
    }));

    out.push_back(run(Tally("hermite.harmonic", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas) {
            const std::string at = "eta=" + to_string(eta);
            std::vector<HarmonicComponent> comps;
            try {
                comps = harmonic_decompose_A(c, jack.E(eta));
            } catch (const DecompositionError& e) {
                t.fail(at + ": " + e.what());
                return;
            }
            Operator L = ops::Delta_A(c);
            for (const auto& h : comps)
                t.holds(L(h.Y).is_zero(), "component m=" + std::to_string(h.m) + " not harmonic, " + at);
            t.equal(harmonic_reconstruct_A(c, comps, n), jack.E(eta), "reconstruction, " + at);
            t.equal(hermite_from_harmonic(c, comps, weight(eta), n), EH(eta), "Laguerre-series form, " + at);
        }
    }));
    return out;
}

inline ReportList hermite_suite(Workspace& ws, const Config& cfg)
{
    ReportList out;
    for (std::size_t n = 1; n <= cfg.max_n; ++n)
        for (const auto& alpha : cfg.alphas)
            append(out, hermite_checks(ws, n, alpha, cfg));
    return out;
}

// ---------------------------------------------------------------------------
// Laguerre (all polynomials in y = x^2).

inline ReportList laguerre_checks(Workspace& ws, std::size_t n, const Rational& alpha, const Rational& a,
                                  const Config& cfg)
{
    ReportList out;
    LaguerreBasis& lag = ws.laguerre(n, alpha, a);
    JackBasis& jack = lag.jack();
    const OperatorContext& c = lag.context();
    const auto etas = labels(n, cfg.max_weight);
    auto EL = [&](const Composition& eta) -> const SparsePoly& { return lag.E(eta); };
    auto tally = [&](const std::string& id) { return Tally(id, n, alpha).with("a", a_label(a)); };

    out.push_back(run(tally("laguerre.l-eigen"), [&](Tally& t) {
        Operator H = Rational(4) * (ops::Sum_B(c) - ops::E_tilde(c, 1));
        for (const auto& eta : etas) {
            auto bars = eta_bar_vector(eta, alpha);
            for (std::size_t i = 0; i < n; ++i)
                t.equal(ops::l(c, i)(EL(eta)), EL(eta) * bars[i], "l" + idx(i) + " on eta=" + to_string(eta));
            t.equal(H(EL(eta)), EL(eta) * Rational(-4 * weight(eta)), "H^(L) on eta=" + to_string(eta));
        }
    }));

    out.push_back(run(tally("laguerre.s_i-action"), [&](Tally& t) {
        for (const auto& eta : etas)
            s_action(t, EL, eta, alpha);
    }));

    out.push_back(run(tally("laguerre.raising-lowering"), [&](Tally& t) {
        Operator Ph = ops::Psi_hat(c), Ps = ops::Psi_hat_star(c);
        for (const auto& eta : etas) {
            const std::string at = to_string(eta);
            auto down = phi_hat_composition(eta);
            Rational k = lowering_constant_laguerre(eta, alpha, a);
            SparsePoly lowered = Ph(EL(eta));
            SparsePoly lowered_jack = Ph(jack.E(eta));
            if (down) {
                t.equal(lowered, EL(*down) * k, "Psi-hat E^(L)" + at);
                t.equal(lowered_jack, jack.E(*down) * k, "Psi-hat E" + at);
            } else {
                t.holds(lowered.is_zero(), "Psi-hat E^(L)" + at + " should vanish");
                t.holds(lowered_jack.is_zero(), "Psi-hat E" + at + " should vanish");
            }
            if (weight(eta) < cfg.max_weight) {
                t.equal(Ps(EL(eta)), EL(phi_composition(eta)), "Psi-hat* E^(L)" + at);
                t.equal(ops::Psi(c)(jack.E(eta)), jack.E(phi_composition(eta)), "Psi E" + at);
            }
        }
    }));

    out.push_back(run(tally("laguerre.at-zero"), [&](Tally& t) {
        for (const auto& eta : etas)
            t.equal(constant_term(EL(eta)), lag.at_zero(eta), "eta=" + to_string(eta));
    }));

    out.push_back(run(tally("laguerre.pairing"), [&](Tally& t) {
        for (int w = 0; w <= std::min(cfg.pairing_weight, cfg.max_weight); ++w) {
            auto block = compositions(n, w);
            for (const auto& nu : block) {
                DunklMoments mom(c, jack.E(nu), DunklMoments::Kind::B);
                for (const auto& eta : block) {
                    Rational want = eta == nu ? pairing_L_value(eta, alpha, a) : Rational(0);
                    t.equal(mom.pair(jack.E(eta)), want, "[E" + to_string(eta) + ",E" + to_string(nu) + "]_L");
                }
            }
        }
    }));

    out.push_back(run(tally("laguerre.harmonic"), [&](Tally& t) {
        for (const auto& eta : etas) {
            const std::string at = "eta=" + to_string(eta);
            std::vector<HarmonicComponent> comps;
            try {
                comps = harmonic_decompose_B(c, jack.E(eta));
            } catch (const DecompositionError& e) {
                t.fail(at + ": " + e.what());
                return;
            }
            Operator L = ops::Sum_B(c);
            for (const auto& h : comps)
                t.holds(L(h.Y).is_zero(), "component m=" + std::to_string(h.m) + " not harmonic, " + at);
            t.equal(harmonic_reconstruct_B(c, comps, n), jack.E(eta), "reconstruction, " + at);
            t.equal(laguerre_from_harmonic(c, comps, weight(eta), n), EL(eta), "Laguerre-series form, " + at);
        }
    }));
    return out;
}

inline ReportList laguerre_suite(Workspace& ws, const Config& cfg)
{
    ReportList out;
    for (std::size_t n = 1; n <= cfg.max_n; ++n)
        for (const auto& alpha : cfg.alphas)
            for (const auto& a : cfg.laguerre_a)
                append(out, laguerre_checks(ws, n, alpha, a, cfg));
    return out;
}

// ---------------------------------------------------------------------------
// Kernels and binomial coefficients.

/// Kernel identities (a)-(m) at the configured truncation degree.
inline ReportList kernel_checks(Workspace& ws, std::size_t n, const Rational& alpha, const Config& cfg)
{
    ReportList out;
    const int D = cfg.kernel_degree(n);
    auto jp = ws.jack(n, alpha);
    JackBasis& jack = *jp;
    HermiteBasis& herm = ws.hermite(n, alpha);
    LaguerreBasis& lag = ws.laguerre(n, alpha, cfg.kernel_a);
    BinomialTable& bin = ws.binomial(n, alpha);

    auto guarded = [&](const std::string& name, const std::function<Report()>& f) {
        try {
            Report r = f();
            r.identity = name + ": " + r.identity;
            out.push_back(r);
        } catch (const std::exception& e) {
            Report r = make_report(name, n, alpha, D);
            r.passed = false;
            r.first_failure = std::string("exception: ") + e.what();
            out.push_back(r);
        }
    };
    guarded("kernel (a)", [&] { return check_kernel_symmetry(jack, D); });
    guarded("kernel (b)", [&] { return check_shift_identity(jack, D); });
    guarded("kernel (c)", [&] { return check_hermite_generating_function(herm, D); });
    guarded("kernel (d)", [&] { return check_symmetrization(jack, D); });
    guarded("kernel (e)", [&] { return check_exp_connection(bin, D); });
    guarded("kernel (f)", [&] { return check_pex(bin, D); });
    guarded("kernel (g)", [&] { return check_binomial_actions(bin, D); });
    guarded("kernel (h)", [&] { return check_2K1_pde(jack, cfg.hyp_a, cfg.hyp_b, cfg.hyp_c, D); });
    guarded("kernel (i)", [&] { return check_laguerre_generating_function(lag, D); });
    guarded("kernel (j)", [&] { return check_1K1_generating_function(lag, cfg.hyp_c, D); });
    guarded("kernel (k)", [&] { return check_laguerre_binomial_expansions(lag, bin, D); });
    guarded("kernel (l)", [&] { return check_symmetric_binomials(bin, D); });
    guarded("kernel (m) Hermite", [&] { return check_hermite_summation(herm, cfg.summation_T); });
    guarded("kernel (m) Laguerre", [&] { return check_laguerre_summation(lag, cfg.summation_T); });
    return out;
}

/// Defining expansion, n vs n+1, spot values, sum rule and connection
/// formula, for |eta| <= max_weight.
inline ReportList binomial_checks(Workspace& ws, std::size_t n, const Rational& alpha, const Config& cfg)
{
    ReportList out;
    JackBasis& jack = *ws.jack(n, alpha);
    BinomialTable& bin = ws.binomial(n, alpha);
    const auto etas = labels(n, cfg.max_weight);

    out.push_back(run(Tally("binomial.defining-expansion", n, alpha), [&](Tally& t) {
        for (const auto& eta : etas) {
            SparsePoly lhs = shift_by_one(jack.E(eta)) * (1 / jack.value_at_ones(eta));
            SparsePoly rhs(n);
            for (const auto& [nu, b] : bin.row(eta))
                rhs += jack.E(nu) * (b / jack.value_at_ones(nu));
            t.equal(lhs, rhs, "eta=" + to_string(eta));
            t.equal(bin(eta, eta), Rational(1), "(eta over eta), eta=" + to_string(eta));
            t.equal(bin(eta, zero_composition(n)), Rational(1), "(eta over 0), eta=" + to_string(eta));
        }
        if (n == 2) {
            t.equal(bin({1, 1}, {1, 0}), (alpha + 2) / (alpha + 1), "((1,1) over (1,0))");
            t.equal(bin({1, 1}, {0, 1}), alpha / (alpha + 1), "((1,1) over (0,1))");
        }
    }));

    out.push_back(run(Tally("binomial.n-independence", n, alpha).with("n2", std::to_string(n + 1)), [&](Tally& t) {
        BinomialTable& big = ws.binomial(n + 1, alpha);
        for (const auto& eta : etas) {
            const Expansion& small_row = bin.row(eta);
            const Expansion& big_row = big.row(pad(eta, n + 1));
            for (const auto& [nu, b] : small_row)
                t.equal(big(pad(eta, n + 1), pad(nu, n + 1)), b,
                        "(" + to_string(eta) + " over " + to_string(nu) + ")");
            for (const auto& [nu, b] : big_row) {
                Composition head(nu.begin(), nu.begin() + static_cast<std::ptrdiff_t>(n));
                bool padded = nu.back() == 0;
                t.holds(padded && small_row.count(head) == 1,
                        "extra coefficient at n+1: (" + to_string(pad(eta, n + 1)) + " over " + to_string(nu) + ")");
            }
        }
    }));

    out.push_back(run(Tally("binomial.sum-rule-connection", n, alpha, cfg.max_weight), [&](Tally& t) {
        Report r = check_symmetric_binomials(bin, cfg.max_weight);
        t.absorb(r);
        t.note(r.note);
    }));
    return out;
}

inline ReportList kernels_suite(Workspace& ws, const Config& cfg)
{
    ReportList out;
    for (std::size_t n = 1; n <= cfg.max_n; ++n)
        for (const auto& alpha : cfg.alphas) {
            append(out, kernel_checks(ws, n, alpha, cfg));
            append(out, binomial_checks(ws, n, alpha, cfg));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Constant-term identities and the power-sum inner product.

inline ReportList ct_checks(Workspace& ws, std::size_t n, int k, const Config& cfg)
{
    ReportList out;
    const Rational alpha = make_rational(1, k);
    JackBasis& jack = *ws.jack(n, alpha);
    const int W = std::min(cfg.ct_weight, cfg.max_weight);
    const auto etas = labels(n, W);
    auto E = [&](const Composition& eta) -> const SparsePoly& { return jack.E(eta); };
    auto tally = [&](const std::string& id) { return Tally(id, n, alpha).with("k", std::to_string(k)); };

    std::map<Composition, Rational> norms;
    out.push_back(run(tally("ct.norms"), [&](Tally& t) {
        for (const auto& eta : etas) {
            Rational v = ct_inner(E(eta), E(eta), k);
            norms[eta] = v;
            t.equal(v, ct_norm_formula(eta, k), "eta=" + to_string(eta));
        }
        if (n == 2 && k == 1)
            t.equal(ct_inner(E({1, 0}), E({1, 0}), 1), make_rational(3, 2), "<E(1,0),E(1,0)>");
    }));

    out.push_back(run(tally("ct.orthogonality"), [&](Tally& t) {
        for (int w = 0; w <= W; ++w) {
            auto block = compositions(n, w);
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j)
                    t.equal(ct_inner(E(block[i]), E(block[j]), k), Rational(0),
                            "<E" + to_string(block[i]) + ",E" + to_string(block[j]) + ">");
        }
    }));

    out.push_back(run(tally("ct.norm-recursions"), [&](Tally& t) {
        for (const auto& eta : etas) {
            if (weight(eta) < W) {
                Composition up = phi_composition(eta);
                SparsePoly raised = ops::Phi(jack.context())(E(eta));
                t.equal(ct_inner(raised, raised, k), norms.at(eta), "Phi isometry, eta=" + to_string(eta));
            }
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (eta[i] < eta[i + 1]) {
                    Rational delta = eta_bar(eta, i, alpha) - eta_bar(eta, i + 1, alpha);
                    t.equal(norms.at(swap_adjacent(eta, i)), (1 - 1 / (delta * delta)) * norms.at(eta),
                            "s_i step, eta=" + to_string(eta));
                }
        }
    }));

    out.push_back(run(tally("ct.kadell"), [&](Tally& t) {
        for (int a = 0; a <= cfg.kadell_max; ++a)
            for (int b = 0; b <= cfg.kadell_max; ++b)
                for (const auto& eta : etas)
                    t.absorb(kadell_ratio_check(jack, eta, a, b));
    }));

    out.push_back(run(tally("ct.norm-relation"), [&](Tally& t) {
        int printed_ok = 0, total = 0;
        for (const auto& eta : etas) {
            Report r = norm_relation_check(jack, eta);
            t.absorb(r);
            ++total;
            if (r.note == "printed inverse form also holds")
                ++printed_ok;
        }
        t.note("printed form with inverted Gamma product holds in " + std::to_string(printed_ok) + " of " +
               std::to_string(total) + " cases");
    }));
    return out;
}

/// [f, g]_H = [n/alpha + 1]_lambda <f, g> on span{E_eta : eta+ = lambda},
/// with <E_eta, E_nu> = (d'/d) delta.
inline Report sahi_check(Workspace& ws, std::size_t n, const Rational& alpha, const Config& cfg)
{
    const int W = std::min(cfg.pairing_weight, cfg.max_weight);
    JackBasis& jack = *ws.jack(n, alpha);
    return run(Tally("ct.sahi-pairing", n, alpha, W), [&](Tally& t) {
        SahiInnerProduct sip(n, alpha, W);
        const Rational nn = static_cast<long>(n);
        for (int w = 0; w <= W; ++w) {
            auto block = compositions(n, w);
            for (const auto& nu : block) {
                DunklMoments mom(jack.context(), jack.E(nu), DunklMoments::Kind::A);
                for (const auto& eta : block) {
                    const std::string at = "(" + to_string(eta) + "," + to_string(nu) + ")";
                    Rational s = sip.inner(jack.E(eta), jack.E(nu));
                    EtaConstants k = jack.constants(eta);
                    t.equal(s, eta == nu ? k.d_prime / k.d : Rational(0), "<E,E> at " + at);
                    Rational fac = generalized_factorial(nn / alpha + 1, eta_plus(eta), alpha);
                    t.equal(mom.pair(jack.E(eta)), fac * s, "[E,E]_H at " + at);
                }
            }
        }
    });
}

inline ReportList ct_suite(Workspace& ws, const Config& cfg)
{
    ReportList out;
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
        for (int k : cfg.ct_k)
            append(out, ct_checks(ws, n, k, cfg));
        for (const auto& alpha : cfg.alphas)
            out.push_back(sahi_check(ws, n, alpha, cfg));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadrature checks (n <= 2).

inline ReportList to_reports(const numeric::NumericReportList& list)
{
    ReportList out;
    for (const auto& r : list)
        out.push_back(numeric::to_report(r));
    return out;
}

inline numeric::NumericReportList numeric_norms(Workspace& ws, const Config& cfg)
{
    using namespace numeric;
    NumericReportList out;
    const std::size_t top = std::min<std::size_t>(2, cfg.max_n);
    for (const auto& alpha : cfg.alphas)
        for (std::size_t n = 1; n <= top; ++n) {
            out.push_back(check_N0_hermite(n, alpha));
            for (const auto& a : cfg.laguerre_a)
                out.push_back(check_N0_laguerre(n, alpha, a));
        }
    (void)ws;
    return out;
}

inline numeric::NumericReportList numeric_orthogonality(Workspace& ws, const Config& cfg)
{
    using namespace numeric;
    NumericReportList out;
    const std::size_t top = std::min<std::size_t>(2, cfg.max_n);
    const int W = std::min(cfg.numeric_ortho_weight, cfg.max_weight);
    for (const auto& alpha : cfg.alphas)
        for (std::size_t n = 1; n <= top; ++n) {
            auto h = check_orthogonality_hermite(ws.hermite(n, alpha), W);
            out.insert(out.end(), h.begin(), h.end());
            for (const auto& a : cfg.laguerre_a) {
                auto l = check_orthogonality_laguerre(ws.laguerre(n, alpha, a), W);
                out.insert(out.end(), l.begin(), l.end());
            }
        }
    return out;
}

inline numeric::NumericReportList numeric_transforms(Workspace& ws, const Config& cfg,
                                                     const std::vector<numeric::Transform>& which)
{
    using namespace numeric;
    NumericReportList out;
    const std::size_t top = std::min<std::size_t>(2, cfg.max_n);
    const int W = std::min(cfg.numeric_weight, cfg.max_weight);
    for (const auto& alpha : cfg.alphas)
        for (std::size_t n = 1; n <= top; ++n) {
            auto jack = ws.jack(n, alpha);
            for (auto w : which)
                for (const auto& eta : compositions_up_to(n, W))
                    out.push_back(quad_transform_check(w, jack, cfg.numeric_a, eta, cfg.numeric_D));
        }
    return out;
}

inline std::vector<numeric::Transform> all_transforms()
{
    using numeric::Transform;
    return {Transform::Hermite1b, Transform::Hermite1c, Transform::IntL,
            Transform::IntLL,     Transform::LaplaceEL, Transform::LaplaceE};
}

inline numeric::NumericReportList numeric_classical(const Config& cfg)
{
    numeric::NumericReportList out;
    for (const auto& a : cfg.laguerre_a) {
        auto r = numeric::classical_reductions(a, 3);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

inline numeric::NumericReportList numeric_all(Workspace& ws, const Config& cfg)
{
    numeric::NumericReportList out = numeric_norms(ws, cfg);
    auto add = [&](const numeric::NumericReportList& more) { out.insert(out.end(), more.begin(), more.end()); };
    add(numeric_orthogonality(ws, cfg));
    add(numeric_transforms(ws, cfg, all_transforms()));
    add(numeric_classical(cfg));
    return out;
}

inline ReportList numeric_suite(Workspace& ws, const Config& cfg) { return to_reports(numeric_all(ws, cfg)); }

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"operators", "jack", "hermite", "laguerre",
                                                   "kernels",   "ct",   "numeric", "all"};
    return names;
}

inline ReportList run_suite(const std::string& name, Workspace& ws, const Config& cfg)
{
    if (name == "operators")
        return operators_suite(ws, cfg);
    if (name == "jack")
        return jack_suite(ws, cfg);
    if (name == "hermite")
        return hermite_suite(ws, cfg);
    if (name == "laguerre")
        return laguerre_suite(ws, cfg);
    if (name == "kernels")
        return kernels_suite(ws, cfg);
    if (name == "ct")
        return ct_suite(ws, cfg);
    if (name == "numeric")
        return numeric_suite(ws, cfg);
    if (name == "all") {
        ReportList out;
        for (const auto& s : suite_names())
            if (s != "all")
                append(out, run_suite(s, ws, cfg));
        return out;
    }
    throw ContractError("unknown suite '" + name + "'");
}

/// Exact reports and quadrature reports kept apart, for output.
struct SuiteResult {
    ReportList exact;
    numeric::NumericReportList numeric;

    bool passed() const
    {
        if (!all_passed(exact))
            return false;
        for (const auto& r : numeric)
            if (!r.passed())
                return false;
        return true;
    }
};

inline SuiteResult collect_suite(const std::string& name, Workspace& ws, const Config& cfg)
{
    SuiteResult out;
    if (name == "numeric" || name == "all")
        out.numeric = numeric_all(ws, cfg);
    if (name == "all") {
        for (const auto& s : suite_names())
            if (s != "all" && s != "numeric")
                append(out.exact, run_suite(s, ws, cfg));
    } else if (name != "numeric") {
        out.exact = run_suite(name, ws, cfg);
    }
    return out;
}

} // namespace nsjack::verify
