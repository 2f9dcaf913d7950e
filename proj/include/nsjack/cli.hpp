#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ct.hpp"
#include "errors.hpp"
#include "hermite_laguerre.hpp"
#include "io.hpp"
#include "jack.hpp"
#include "kernels.hpp"
#include "quadrature.hpp"
#include "verify.hpp"

namespace nsjack::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Raised for bad flag values detected after parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Bases backed by the optional on-disk cache in $NSJACK_CACHE_DIR.
class CacheDir {
public:
    CacheDir()
    {
        if (const char* dir = std::getenv("NSJACK_CACHE_DIR"); dir && *dir)
            dir_ = std::filesystem::path(dir);
    }

    std::shared_ptr<JackBasis> jack(std::size_t n, const Rational& alpha)
    {
        auto basis = std::make_shared<JackBasis>(n, alpha);
        if (dir_)
            for (const auto& [eta, p] : io::read_cache(file("jack", n, alpha), "jack", n, alpha))
                basis->seed(eta, p);
        jack_ = basis;
        return basis;
    }

    std::shared_ptr<HermiteBasis> hermite(std::size_t n, const Rational& alpha)
    {
        auto basis = std::make_shared<HermiteBasis>(jack(n, alpha));
        if (dir_)
            for (const auto& [eta, p] : io::read_cache(file("hermite", n, alpha), "hermite", n, alpha))
                basis->seed(eta, p);
        herm_ = basis;
        return basis;
    }

    std::shared_ptr<LaguerreBasis> laguerre(std::size_t n, const Rational& alpha, const Rational& a)
    {
        auto basis = std::make_shared<LaguerreBasis>(jack(n, alpha), a);
        if (dir_)
            for (const auto& [eta, p] : io::read_cache(file("laguerre", n, alpha, &a), "laguerre", n, alpha, &a))
                basis->seed(eta, p);
        lag_ = basis;
        return basis;
    }

    /// Writes back whatever the bases computed.
    void save()
    {
        if (!dir_)
            return;
        if (jack_)
            io::write_cache(file("jack", jack_->n(), jack_->alpha()),
                            io::cache_to_json("jack", jack_->n(), jack_->alpha(), jack_->snapshot()));
        if (herm_)
            io::write_cache(file("hermite", herm_->n(), herm_->alpha()),
                            io::cache_to_json("hermite", herm_->n(), herm_->alpha(), herm_->snapshot()));
        if (lag_) {
            Rational a = lag_->a();
            io::write_cache(file("laguerre", lag_->n(), lag_->alpha(), &a),
                            io::cache_to_json("laguerre", lag_->n(), lag_->alpha(), lag_->snapshot(), &a));
        }
    }

private:
    std::filesystem::path file(const std::string& family, std::size_t n, const Rational& alpha,
                               const Rational* a = nullptr) const
    {
        return *dir_ / io::cache_file_name(family, n, alpha, a);
    }

    std::optional<std::filesystem::path> dir_;
    std::shared_ptr<JackBasis> jack_;
    std::shared_ptr<HermiteBasis> herm_;
    std::shared_ptr<LaguerreBasis> lag_;
};

struct Options {
    std::string format = "json";
    std::string out_file;
    std::string eta, nu, alpha, a = "0", b, c, family, suite;
    std::string alpha_set = "1,2,1/2,3,7/5";
    std::size_t n = 0;
    int degree = 0, max_weight = 4, max_n = 3;
    bool x2 = false;
};

inline Composition label(const Options& o)
{
    Composition eta = io::parse_composition(o.eta);
    if (o.n != 0 && o.n != eta.size())
        throw UsageError("--eta has " + std::to_string(eta.size()) + " parts but --n is " + std::to_string(o.n));
    if (eta.size() > kMaxVars / 2)
        throw UsageError("at most " + std::to_string(kMaxVars / 2) + " variables are supported");
    return eta;
}

inline std::string scalar_output(const Options& o, const std::string& value)
{
    if (o.format == "csv")
        return io::csv_row({"value"}) + io::csv_row({value});
    return io::json(value).dump() + "\n";
}

inline std::string poly_output(const Options& o, const SparsePoly& p, bool doubled = false)
{
    if (o.format == "csv")
        return io::poly_to_csv(p, doubled);
    return io::poly_to_json(p, doubled).dump() + "\n";
}

inline std::string object_output(const Options& o, const io::json& j)
{
    if (o.format == "csv") {
        std::vector<std::string> head, row;
        for (const auto& [k, v] : j.items()) {
            head.push_back(k);
            row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        return io::csv_row(head) + io::csv_row(row);
    }
    return j.dump() + "\n";
}

/// Runs the command line; returns the exit code.  Output goes to `out`
/// unless --out names a file.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact non-symmetric Jack, Hermite and Laguerre polynomials"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", o.out_file, "Write output to this file");

    auto poly_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("--eta", o.eta, "Composition, comma separated")->required();
        s->add_option("--n", o.n, "Number of variables (defaults to the length of --eta)");
        s->add_option("--alpha", o.alpha, "Jack parameter p/q")->required();
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--out", o.out_file, "Write output to this file");
        return s;
    };
    CLI::App* jack_cmd = poly_cmd("jack", "Non-symmetric Jack polynomial E_eta");
    CLI::App* herm_cmd = poly_cmd("hermite", "Non-symmetric Hermite polynomial");
    CLI::App* lag_cmd = poly_cmd("laguerre", "Non-symmetric Laguerre polynomial (in y = x^2)");
    lag_cmd->add_option("--a", o.a, "Laguerre parameter");
    lag_cmd->add_flag("--x2", o.x2, "Write in the variables x instead of y = x^2");
    CLI::App* ones_cmd = poly_cmd("eval-ones", "E_eta(1,...,1)");
    CLI::App* norm_cmd = poly_cmd("norm", "Norms: constant term, Hermite or Laguerre");
    norm_cmd->add_option("--family", o.family, "ct, hermite or laguerre")
        ->required()
        ->check(CLI::IsMember({"ct", "hermite", "laguerre"}));
    norm_cmd->add_option("--a", o.a, "Laguerre parameter");
    CLI::App* bin_cmd = poly_cmd("binomial", "Generalized binomial coefficient (eta over nu)");
    bin_cmd->add_option("--nu", o.nu, "Lower composition")->required();

    CLI::App* ker_cmd = app.add_subcommand("kernel", "Degree-truncated kernel in 2n variables");
    ker_cmd->add_option("--family", o.family, "A, B, 0F0, 1K1 or 2K1")
        ->required()
        ->check(CLI::IsMember({"A", "B", "0F0", "1K1", "2K1"}));
    ker_cmd->add_option("--degree", o.degree, "Truncation degree")->required()->check(CLI::Range(0, 12));
    ker_cmd->add_option("--n", o.n, "Number of variables")->required()->check(CLI::Range(1, 5));
    ker_cmd->add_option("--alpha", o.alpha, "Jack parameter")->required();
    ker_cmd->add_option("--a", o.a, "Upper parameter a (B, 1K1, 2K1)");
    ker_cmd->add_option("--b", o.b, "Upper parameter b (2K1)");
    ker_cmd->add_option("--c", o.c, "Lower parameter c (1K1, 2K1)");
    ker_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    ker_cmd->add_option("--out", o.out_file, "Write output to this file");

    CLI::App* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
    ver_cmd->add_option("--suite", o.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(verify::suite_names()));
    ver_cmd->add_option("--alpha-set", o.alpha_set, "Comma separated alpha values");
    ver_cmd->add_option("--max-weight", o.max_weight, "Largest |eta|")->check(CLI::Range(0, 6));
    ver_cmd->add_option("--max-n", o.max_n, "Largest number of variables")->check(CLI::Range(1, 4));
    ver_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    ver_cmd->add_option("--out", o.out_file, "Write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitPass;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text;
    int code = kExitPass;
    CacheDir cache;
    try {
        if (jack_cmd->parsed()) {
            Composition eta = label(o);
            auto jack = cache.jack(eta.size(), parse_rational(o.alpha));
            text = poly_output(o, jack->E(eta));
        } else if (herm_cmd->parsed()) {
            Composition eta = label(o);
            auto herm = cache.hermite(eta.size(), parse_rational(o.alpha));
            text = poly_output(o, herm->E(eta));
        } else if (lag_cmd->parsed()) {
            Composition eta = label(o);
            auto lag = cache.laguerre(eta.size(), parse_rational(o.alpha), parse_rational(o.a));
            text = poly_output(o, lag->E(eta), o.x2);
        } else if (ones_cmd->parsed()) {
            Composition eta = label(o);
            JackBasis jack(eta.size(), parse_rational(o.alpha));
            text = scalar_output(o, to_string(jack.value_at_ones(eta)));
        } else if (norm_cmd->parsed()) {
            Composition eta = label(o);
            const std::size_t n = eta.size();
            const Rational alpha = parse_rational(o.alpha);
            io::json j{{"family", o.family}, {"eta", eta}, {"n", n}, {"alpha", to_string(alpha)}};
            if (o.family == "ct") {
                int k = k_from_alpha(alpha);
                auto jack = cache.jack(n, alpha);
                j["value"] = to_string(ct_inner(jack->E(eta), jack->E(eta), k));
                j["formula"] = to_string(ct_norm_formula(eta, k));
            } else if (o.family == "hermite") {
                HermiteBasis herm(std::make_shared<JackBasis>(n, alpha));
                Rational ratio = herm.norm_ratio(eta);
                double N0 = numeric::N0_hermite(n, alpha);
                j["ratio"] = to_string(ratio);
                j["N0"] = N0;
                j["value"] = numeric::to_double(ratio) * N0;
            } else {
                const Rational a = parse_rational(o.a);
                LaguerreBasis lag(std::make_shared<JackBasis>(n, alpha), a);
                Rational ratio = lag.norm_ratio(eta);
                double N0 = numeric::N0_laguerre(n, alpha, a);
                j["a"] = to_string(a);
                j["ratio"] = to_string(ratio);
                j["N0"] = N0;
                j["value"] = numeric::to_double(ratio) * N0;
            }
            text = object_output(o, j);
        } else if (bin_cmd->parsed()) {
            Composition eta = label(o);
            Composition nu = io::parse_composition(o.nu);
            if (nu.size() != eta.size())
                throw UsageError("--eta and --nu must have the same length");
            BinomialTable bin(cache.jack(eta.size(), parse_rational(o.alpha)));
            text = scalar_output(o, to_string(bin(eta, nu)));
        } else if (ker_cmd->parsed()) {
            const Rational alpha = parse_rational(o.alpha);
            auto jack = cache.jack(o.n, alpha);
            const Rational a = parse_rational(o.a);
            auto need = [&](const std::string& v, const std::string& flag) {
                if (v.empty())
                    throw UsageError("kernel " + o.family + " needs " + flag);
                return parse_rational(v);
            };
            TruncatedKernel K;
            if (o.family == "A")
                K = kernel_KA(*jack, o.degree);
            else if (o.family == "B")
                K = kernel_KB(*jack, a, o.degree);
            else if (o.family == "0F0")
                K = kernel_0F0(*jack, o.degree);
            else if (o.family == "1K1")
                K = kernel_1K1(*jack, a, need(o.c, "--c"), o.degree);
            else
                K = kernel_2K1(*jack, a, need(o.b, "--b"), need(o.c, "--c"), o.degree);
            text = poly_output(o, K.poly);
        } else if (ver_cmd->parsed()) {
            verify::Config cfg;
            cfg.alphas = io::parse_rational_list(o.alpha_set);
            for (const auto& al : cfg.alphas)
                if (al <= 0)
                    throw UsageError("alpha must be positive, got " + to_string(al));
            cfg.max_weight = o.max_weight;
            cfg.max_n = static_cast<std::size_t>(o.max_n);
            verify::Workspace ws;
            verify::SuiteResult res = verify::collect_suite(o.suite, ws, cfg);
            if (o.format == "csv") {
                text = io::reports_to_csv(res.exact, res.numeric);
            } else {
                io::json reports = io::json::array(), numeric = io::json::array();
                for (const auto& r : res.exact)
                    reports.push_back(io::report_to_json(r));
                for (const auto& r : res.numeric)
                    numeric.push_back(io::numeric_to_json(r));
                io::json j{{"suite", o.suite}, {"passed", res.passed()}, {"reports", reports}};
                if (!res.numeric.empty())
                    j["numeric"] = numeric;
                text = j.dump(1) + "\n";
            }
            code = res.passed() ? kExitPass : kExitFail;
            if (!res.passed())
                err << "verification failed\n";
        }
        cache.save();
    } catch (const ArithmeticError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        // bad parameters, compositions or dimensions
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFail;
    }

    if (o.out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_file);
        if (!f) {
            err << "error: cannot write " << o.out_file << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return code;
}

} // namespace nsjack::cli
