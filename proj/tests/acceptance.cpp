// Acceptance run: one PASS/FAIL line per criterion, default parameters.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "nsjack/verify.hpp"

using namespace nsjack;
using namespace nsjack::verify;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(const Report&)> select;
    long expected = 0;  // exact report count when nonzero
};

std::function<bool(const Report&)> ids(std::set<std::string> names, std::set<std::size_t> ns = {})
{
    return [names, ns](const Report& r) { return names.count(r.identity) && (ns.empty() || ns.count(r.n)); };
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

} // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    Config cfg;
    Workspace ws;

    ReportList pool;
    append(pool, jack_suite(ws, cfg));
    append(pool, hermite_suite(ws, cfg));
    append(pool, laguerre_suite(ws, cfg));
    append(pool, kernels_suite(ws, cfg));
    append(pool, ct_suite(ws, cfg));
    numeric::NumericReportList num = numeric_all(ws, cfg);

    std::vector<Criterion> criteria = {
        {1, "eigenfunctions of xi, h and l", ids({"jack.xi-eigen", "hermite.h-eigen", "laguerre.l-eigen"})},
        {2, "recursive E equals the eigen-solve oracle", ids({"jack.oracle"})},
        {3, "E(1^n) = e/d and E^(L)(0)", ids({"jack.eval-ones", "laguerre.at-zero"})},
        {4, "constant-term norms, k in {1,2}", ids({"ct.norms"})},
        {5, "Kadell-form ratio and norm relation, n = 2, 3", ids({"ct.kadell", "ct.norm-relation"}, {2, 3})},
        {6, "raising and lowering constants, with annihilation",
         ids({"jack.raising-lowering", "hermite.raising-lowering", "laguerre.raising-lowering"})},
        {7, "Dunkl pairings and the power-sum inner product",
         ids({"hermite.pairing", "laguerre.pairing", "ct.sahi-pairing"})},
        {8, "kernel identities (a)-(m), n=2 D=5 and n=3 D=4",
         [](const Report& r) { return starts_with(r.identity, "kernel (") && (r.n == 2 || r.n == 3); },
         // (a)-(l) plus the two summation formulas of (m), for both n and every alpha
         14 * 2 * static_cast<long>(default_alphas().size())},
        {9, "generalized binomial coefficients",
         [](const Report& r) { return starts_with(r.identity, "binomial."); }},
        {10, "harmonic decompositions", ids({"hermite.harmonic", "laguerre.harmonic"})},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        long count = 0;
        const Report* bad = nullptr;
        for (const auto& r : pool)
            if (c.select(r)) {
                ++count;
                if (!r.passed && !bad)
                    bad = &r;
            }
        bool complete = c.expected == 0 || count == c.expected;
        bool ok = count > 0 && complete && !bad;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << count
                  << " reports)";
        if (bad)
            std::cout << " first failure: " << bad->identity << " n=" << bad->n << " alpha=" << to_string(bad->alpha)
                      << ": " << bad->first_failure;
        else if (count == 0)
            std::cout << " no reports selected";
        else if (!complete)
            std::cout << " expected " << c.expected << " reports";
        std::cout << "\n";
    }

    {
        long count = 0, n2_norms = 0;
        const numeric::NumericReport* bad = nullptr;
        for (const auto& r : num) {
            ++count;
            if (starts_with(r.check, "N0-") && r.n == 2) {
                ++n2_norms;
                if (!(r.rel_err < 1e-8) && !bad)
                    bad = &r;
            }
            if (!r.passed() && !bad)
                bad = &r;
        }
        bool ok = count > 0 && n2_norms > 0 && !bad;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion 11: quadrature norms, orthogonality, transforms, n=1 "
                  << "reductions (" << count << " reports)";
        if (bad)
            std::cout << " first failure: " << bad->check << " case=" << bad->label << " n=" << bad->n
                      << " alpha=" << to_string(bad->alpha) << " rel_err=" << bad->rel_err
                      << " tol=" << bad->tolerance << " " << bad->status;
        std::cout << "\n";
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "elapsed " << secs << " s\n";
    return all_ok ? 0 : 1;
}
