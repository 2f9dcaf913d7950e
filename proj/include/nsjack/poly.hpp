#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nsjack {

/// Upper bound on the number of variables of a SparsePoly.  Kernels use
/// 2n variables, so this allows n = 5 there.
inline constexpr std::size_t kMaxVars = 10;

/// Exponent vector; entries past the ambient variable count stay zero.
using Exponent = std::array<int, kMaxVars>;

/// Descending lexicographic order, which is the canonical term order.
struct DescendingLex {
    bool operator()(const Exponent& a, const Exponent& b) const { return b < a; }
};

using TermMap = std::map<Exponent, Rational, DescendingLex>;

inline Exponent make_exponent(const std::vector<int>& e)
{
    if (e.size() > kMaxVars)
        throw DimensionError("too many variables: " + std::to_string(e.size()));
    Exponent out{};
    std::copy(e.begin(), e.end(), out.begin());
    return out;
}

inline int block_degree(const Exponent& e, std::size_t offset, std::size_t count)
{
    int s = 0;
    for (std::size_t i = offset; i < offset + count; ++i)
        s += e[i];
    return s;
}

/// Sparse Laurent polynomial with exact rational coefficients.
class SparsePoly {
public:
    SparsePoly() = default;

    explicit SparsePoly(std::size_t nvars) : n_(nvars)
    {
        if (nvars > kMaxVars)
            throw DimensionError("variable count " + std::to_string(nvars) + " exceeds limit");
    }

    static SparsePoly constant(std::size_t nvars, const Rational& c)
    {
        SparsePoly p(nvars);
        p.add_term(Exponent{}, c);
        return p;
    }

    static SparsePoly monomial(std::size_t nvars, const Exponent& e, const Rational& c = 1)
    {
        SparsePoly p(nvars);
        p.add_term(e, c);
        return p;
    }

    static SparsePoly monomial(std::size_t nvars, const std::vector<int>& e, const Rational& c = 1)
    {
        if (e.size() != nvars)
            throw DimensionError("exponent length does not match variable count");
        return monomial(nvars, make_exponent(e), c);
    }

    static SparsePoly variable(std::size_t nvars, std::size_t i, int power = 1)
    {
        if (i >= nvars)
            throw DimensionError("variable index out of range");
        Exponent e{};
        e[i] = power;
        return monomial(nvars, e);
    }

    std::size_t nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates c x^e, dropping the term if it cancels.
    void add_term(const Exponent& e, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& q)
    {
        check_same(q);
        for (const auto& [e, c] : q.terms_)
            add_term(e, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& q)
    {
        check_same(q);
        for (const auto& [e, c] : q.terms_)
            add_term(e, -c);
        return *this;
    }

    SparsePoly& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_)
            v *= c;
        return *this;
    }

    SparsePoly& operator*=(const SparsePoly& q) { return *this = *this * q; }

    friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
    friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
    friend SparsePoly operator*(SparsePoly p, const Rational& c) { return p *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly p) { return p *= c; }
    friend SparsePoly operator-(SparsePoly p) { return p *= Rational(-1); }

    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q)
    {
        p.check_same(q);
        SparsePoly r(p.n_);
        Rational t;
        for (const auto& [ep, cp] : p.terms_) {
            for (const auto& [eq, cq] : q.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < kMaxVars; ++i)
                    e[i] = ep[i] + eq[i];
                t = cp * cq;
                r.add_term(e, t);
            }
        }
        return r;
    }

    friend bool operator==(const SparsePoly& p, const SparsePoly& q)
    {
        return p.n_ == q.n_ && p.terms_ == q.terms_;
    }

    SparsePoly pow(unsigned k) const
    {
        SparsePoly result = constant(n_, 1);
        SparsePoly base = *this;
        while (k > 0) {
            if (k & 1u)
                result *= base;
            k >>= 1u;
            if (k > 0)
                base *= base;
        }
        return result;
    }

    /// Largest total degree; 0 for the zero polynomial.
    int total_degree() const
    {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            int s = block_degree(e, 0, n_);
            d = first ? s : std::max(d, s);
            first = false;
        }
        return d;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        int d = block_degree(terms_.begin()->first, 0, n_);
        for (const auto& [e, c] : terms_)
            if (block_degree(e, 0, n_) != d)
                return false;
        return true;
    }

    bool has_negative_exponent() const
    {
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < n_; ++i)
                if (e[i] < 0)
                    return true;
        return false;
    }

    /// Terms whose degree in variables [offset, offset+count) equals d.
    SparsePoly block_part(std::size_t offset, std::size_t count, int d) const
    {
        SparsePoly r(n_);
        for (const auto& [e, c] : terms_)
            if (block_degree(e, offset, count) == d)
                r.terms_.emplace_hint(r.terms_.end(), e, c);
        return r;
    }

    /// Terms whose degree in variables [offset, offset+count) is at most d.
    SparsePoly truncate_block(std::size_t offset, std::size_t count, int d) const
    {
        SparsePoly r(n_);
        for (const auto& [e, c] : terms_)
            if (block_degree(e, offset, count) <= d)
                r.terms_.emplace_hint(r.terms_.end(), e, c);
        return r;
    }

    SparsePoly homogeneous_part(int d) const { return block_part(0, n_, d); }

    /// Applies f to every exponent (coefficient multiplied by the returned
    /// factor).  Used by the substitution helpers.
    template <class F>
    SparsePoly map_terms(F&& f) const
    {
        SparsePoly r(n_);
        for (const auto& [e, c] : terms_) {
            Exponent out = e;
            Rational factor = f(out);
            if (factor != 0)
                r.add_term(out, c * factor);
        }
        return r;
    }

    /// Human-readable form, e.g. "x1^2*x2 + 1/2*x2".
    std::string str(const std::string& var = "x") const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            bool unit = true;
            std::ostringstream mono;
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] == 0)
                    continue;
                if (!unit)
                    mono << "*";
                unit = false;
                mono << var << (i + 1);
                if (e[i] != 1)
                    mono << "^" << e[i];
            }
            if (unit)
                os << to_string(c);
            else if (c == 1)
                os << mono.str();
            else
                os << to_string(c) << "*" << mono.str();
        }
        return os.str();
    }

private:
    void check_same(const SparsePoly& q) const
    {
        if (n_ != q.n_)
            throw DimensionError("polynomials in " + std::to_string(n_) + " and " +
                                 std::to_string(q.n_) + " variables");
    }

    std::size_t n_ = 0;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Substitutions

/// x_i -> 1/x_i for every variable.
inline SparsePoly invert_variables(const SparsePoly& p)
{
    return p.map_terms([&](Exponent& e) {
        for (std::size_t i = 0; i < p.nvars(); ++i)
            e[i] = -e[i];
        return Rational(1);
    });
}

/// x_i -> x_i^2 for every variable.
inline SparsePoly square_variables(const SparsePoly& p)
{
    return p.map_terms([&](Exponent& e) {
        for (std::size_t i = 0; i < p.nvars(); ++i)
            e[i] *= 2;
        return Rational(1);
    });
}

/// x_i -> c x_i for i in [offset, offset+count).
inline SparsePoly scale_variables(const SparsePoly& p, const Rational& c, std::size_t offset,
                                  std::size_t count)
{
    return p.map_terms([&](Exponent& e) { return pow(c, block_degree(e, offset, count)); });
}

inline SparsePoly scale_variables(const SparsePoly& p, const Rational& c)
{
    return scale_variables(p, c, 0, p.nvars());
}

/// x_i -> -x_i for i in [offset, offset+count).
inline SparsePoly negate_variables(const SparsePoly& p, std::size_t offset, std::size_t count)
{
    return scale_variables(p, Rational(-1), offset, count);
}

inline SparsePoly negate_variables(const SparsePoly& p)
{
    return negate_variables(p, 0, p.nvars());
}

/// result(x) = p(x_{sigma[0]}, ..., x_{sigma[n-1]}).
inline SparsePoly permute(const SparsePoly& p, const std::vector<std::size_t>& sigma)
{
    if (sigma.size() != p.nvars())
        throw DimensionError("permutation length does not match variable count");
    return p.map_terms([&](Exponent& e) {
        Exponent out{};
        for (std::size_t i = 0; i < sigma.size(); ++i)
            out[sigma[i]] += e[i];
        e = out;
        return Rational(1);
    });
}

/// Binomial coefficients of (1+x)^m as rationals.
inline std::vector<Rational> binomial_row(int m)
{
    std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    for (int k = 1; k <= m; ++k)
        row[k] = row[k - 1] * (m - k + 1) / k;
    return row;
}

/// x_i -> 1 + x_i for i in [offset, offset+count).  Requires non-negative
/// exponents in that block.
inline SparsePoly shift_by_one(const SparsePoly& p, std::size_t offset, std::size_t count)
{
    SparsePoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        SparsePoly expanded = SparsePoly::constant(p.nvars(), c);
        for (std::size_t i = offset; i < offset + count; ++i) {
            if (e[i] < 0)
                throw ContractError("shift_by_one on a negative exponent");
            if (e[i] == 0)
                continue;
            SparsePoly factor(p.nvars());
            auto row = binomial_row(e[i]);
            for (int k = 0; k <= e[i]; ++k) {
                Exponent m{};
                m[i] = k;
                factor.add_term(m, row[k]);
            }
            expanded *= factor;
        }
        Exponent rest = e;
        for (std::size_t i = offset; i < offset + count; ++i)
            rest[i] = 0;
        r += expanded * SparsePoly::monomial(p.nvars(), rest);
    }
    return r;
}

inline SparsePoly shift_by_one(const SparsePoly& p) { return shift_by_one(p, 0, p.nvars()); }

/// Exact evaluation at a rational point.
inline Rational evaluate(const SparsePoly& p, const std::vector<Rational>& point)
{
    if (point.size() != p.nvars())
        throw DimensionError("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (e[i] < 0 && point[i] == 0)
                throw PoleError("evaluation at 0 of a negative power of x" + std::to_string(i + 1));
            if (e[i] != 0)
                t *= pow(point[i], e[i]);
        }
        total += t;
    }
    return total;
}

inline Rational evaluate_at_ones(const SparsePoly& p)
{
    Rational total = 0;
    for (const auto& [e, c] : p.terms())
        total += c;
    return total;
}

inline Rational constant_term(const SparsePoly& p) { return p.coeff(Exponent{}); }

/// Constant term of p*q computed without forming the product.
inline Rational constant_term_of_product(const SparsePoly& p, const SparsePoly& q)
{
    const SparsePoly& small = p.size() <= q.size() ? p : q;
    const SparsePoly& large = p.size() <= q.size() ? q : p;
    Rational total = 0;
    for (const auto& [e, c] : small.terms()) {
        Exponent neg;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            neg[i] = -e[i];
        auto it = large.terms().find(neg);
        if (it != large.terms().end())
            total += c * it->second;
    }
    return total;
}

/// Sum over all permutations of the variables in [offset, offset+count).
inline SparsePoly symmetrize(const SparsePoly& p, std::size_t offset, std::size_t count)
{
    std::vector<std::size_t> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    SparsePoly r(p.nvars());
    do {
        std::vector<std::size_t> sigma(p.nvars());
        std::iota(sigma.begin(), sigma.end(), 0);
        for (std::size_t i = 0; i < count; ++i)
            sigma[offset + i] = offset + perm[i];
        r += permute(p, sigma);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

inline SparsePoly symmetrize(const SparsePoly& p) { return symmetrize(p, 0, p.nvars()); }

/// Copies an m-variable polynomial into variables [offset, offset+m) of an
/// n-variable space.
inline SparsePoly embed(const SparsePoly& p, std::size_t nvars, std::size_t offset)
{
    if (offset + p.nvars() > nvars)
        throw DimensionError("embedding does not fit");
    SparsePoly r(nvars);
    for (const auto& [e, c] : p.terms()) {
        Exponent out{};
        for (std::size_t i = 0; i < p.nvars(); ++i)
            out[offset + i] = e[i];
        r.add_term(out, c);
    }
    return r;
}

/// Power sum p_k over variables [offset, offset+count).
inline SparsePoly power_sum(std::size_t nvars, int k, std::size_t offset, std::size_t count)
{
    SparsePoly r(nvars);
    for (std::size_t i = offset; i < offset + count; ++i) {
        Exponent e{};
        e[i] = k;
        r.add_term(e, 1);
    }
    return r;
}

/// Coefficients of (1-t)^{-c} up to t^D: (c)_k / k!.
inline std::vector<Rational> series_binomial(const Rational& c, int D)
{
    if (D < 0)
        throw ContractError("series_binomial with negative degree");
    std::vector<Rational> out(static_cast<std::size_t>(D) + 1);
    out[0] = 1;
    for (int k = 1; k <= D; ++k)
        out[k] = out[k - 1] * (c + k - 1) / k;
    return out;
}

/// exp(f) truncated to degree D in the block, for f with no constant term
/// in that block (so the series terminates after D steps).
inline SparsePoly exp_truncated(const SparsePoly& f, int D, std::size_t offset, std::size_t count)
{
    SparsePoly result = SparsePoly::constant(f.nvars(), 1);
    SparsePoly term = result;
    for (int k = 1; k <= D; ++k) {
        term = (term * f).truncate_block(offset, count, D);
        term *= Rational(1, k);
        result += term;
    }
    return result;
}

} // namespace nsjack
