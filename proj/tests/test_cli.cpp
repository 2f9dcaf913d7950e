#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "nsjack/cli.hpp"
#include "util.hpp"

using namespace nsjack;
using nsjack::test::mono;
using nsjack::test::q;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "nsjack");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = nsjack::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Io, ParseComposition)
{
    EXPECT_EQ(io::parse_composition("1,0,2"), (Composition{1, 0, 2}));
    EXPECT_THROW(io::parse_composition("1,,2"), ParameterError);
    EXPECT_THROW(io::parse_composition("1,-2"), ParameterError);
    EXPECT_THROW(io::parse_composition("1,"), ParameterError);
    EXPECT_THROW(io::parse_composition(""), ParameterError);
    EXPECT_EQ(io::parse_rational_list("1,2,1/2").size(), 3u);
}

TEST(Io, PolyJsonRoundTrip)
{
    SparsePoly p = mono(2, {1, 0}) + mono(2, {0, 1}, q("1/2")) - mono(2, {0, 0}, q("8/3"));
    auto j = io::poly_to_json(p);
    EXPECT_EQ(j.dump(), R"({"n":2,"terms":[[[1,0],"1","1"],[[0,1],"1","2"],[[0,0],"-8","3"]]})");
    EXPECT_EQ(io::poly_from_json(j), p);
    EXPECT_EQ(io::poly_to_json(mono(1, {1}), true)["terms"][0][0][0], 2);
    EXPECT_THROW(io::poly_from_json(io::json::parse(R"({"n":2,"terms":[[[1],"1","1"]]})")), DimensionError);
}

TEST(Io, Csv)
{
    EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(io::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(io::poly_to_csv(mono(2, {1, 0}, q("3/4"))), "e1,e2,num,den\n1,0,3,4\n");
}

TEST(Io, CacheRoundTrip)
{
    auto dir = std::filesystem::temp_directory_path() / "nsjack_io_test";
    std::filesystem::remove_all(dir);
    JackBasis jack(2, q("1/2"));
    jack.E({2, 1});
    auto file = dir / io::cache_file_name("jack", 2, q("1/2"));
    io::write_cache(file, io::cache_to_json("jack", 2, q("1/2"), jack.snapshot()));
    auto table = io::read_cache(file, "jack", 2, q("1/2"));
    EXPECT_EQ(table.size(), jack.cache_size());
    EXPECT_EQ(table.at({2, 1}), jack.E({2, 1}));
    EXPECT_TRUE(io::read_cache(file, "jack", 2, Rational(2)).empty());
    EXPECT_TRUE(io::read_cache(dir / "missing.json", "jack", 2, q("1/2")).empty());
    std::filesystem::remove_all(dir);
}

TEST(Cli, JackExample)
{
    CliRun r = run_cli({"jack", "--eta", "1,0", "--n", "2", "--alpha", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"n\":2,\"terms\":[[[1,0],\"1\",\"1\"],[[0,1],\"1\",\"2\"]]}\n");
}

TEST(Cli, Subcommands)
{
    EXPECT_EQ(run_cli({"eval-ones", "--eta", "1,0", "--alpha", "1"}).out, "\"3/2\"\n");
    CliRun h = run_cli({"hermite", "--eta", "1,1", "--alpha", "2"});
    EXPECT_EQ(h.code, 0);
    EXPECT_EQ(io::poly_from_json(io::json::parse(h.out)), mono(2, {1, 1}) + SparsePoly::constant(2, q("1/4")));
    CliRun l = run_cli({"laguerre", "--eta", "1", "--alpha", "1", "--a", "1/2", "--x2"});
    EXPECT_EQ(l.out, "{\"n\":1,\"terms\":[[[2],\"1\",\"1\"],[[0],\"-3\",\"2\"]]}\n");
    CliRun n = run_cli({"norm", "--family", "ct", "--eta", "1,0", "--alpha", "1"});
    EXPECT_EQ(io::json::parse(n.out)["value"], "3/2");
    CliRun b = run_cli({"binomial", "--eta", "1,1", "--nu", "1,0", "--alpha", "1"});
    EXPECT_EQ(b.out, "\"3/2\"\n");
    CliRun k = run_cli({"kernel", "--family", "A", "--degree", "2", "--n", "1", "--alpha", "1"});
    EXPECT_EQ(k.code, 0);
    EXPECT_EQ(io::poly_from_json(io::json::parse(k.out)),
              SparsePoly::constant(2, 1) + mono(2, {1, 1}) + mono(2, {2, 2}, q("1/2")));
    CliRun csv = run_cli({"jack", "--eta", "1,0", "--alpha", "1", "--format", "csv"});
    EXPECT_EQ(csv.out, "e1,e2,num,den\n1,0,1,1\n0,1,1,2\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({"jack", "--eta", "1,0", "--alpha", "0"}).code, 2);
    EXPECT_EQ(run_cli({"jack", "--eta", "1,x", "--alpha", "1"}).code, 2);
    EXPECT_EQ(run_cli({"jack", "--eta", "1,0", "--n", "3", "--alpha", "1"}).code, 2);
    EXPECT_EQ(run_cli({"jack", "--eta", "1,0"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"norm", "--family", "ct", "--eta", "1,0", "--alpha", "2"}).code, 2);
    EXPECT_EQ(run_cli({"kernel", "--family", "1K1", "--degree", "2", "--n", "1", "--alpha", "1", "--a", "1", "--c", "0"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, VerifySmall)
{
    CliRun r = run_cli({"verify", "--suite", "ct", "--max-weight", "2", "--max-n", "2", "--alpha-set", "1,1/2"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = io::json::parse(r.out);
    EXPECT_EQ(j["suite"], "ct");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_FALSE(j["reports"].empty());
    for (const auto& rep : j["reports"])
        EXPECT_EQ(rep["status"], "pass") << rep.dump();
}

TEST(Cli, OutFile)
{
    auto file = std::filesystem::temp_directory_path() / "nsjack_cli_out.json";
    std::filesystem::remove(file);
    CliRun r = run_cli({"jack", "--eta", "0,1", "--alpha", "3", "--out", file.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(text, "{\"n\":2,\"terms\":[[[0,1],\"1\",\"1\"]]}\n");
    std::filesystem::remove(file);
}
