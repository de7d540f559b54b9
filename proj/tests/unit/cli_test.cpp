#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "lcoal_cli/cli.hpp"

namespace lcoal
{
namespace
{

struct CliResult
{
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args)
{
  for (auto &a : args)
    if (a.find('.') != std::string::npos && a.rfind("--", 0) != 0 && a.find(' ') == std::string::npos)
      a = testing::fixture_path(a);
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string &hay, const std::string &needle)
{
  return hay.find(needle) != std::string::npos;
}

TEST(Cli, ValidateE4)
{
  const CliResult r = run({"validate", "e4.graph"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "valid: 4 vertices, 8 arcs"));
}

TEST(Cli, ValidatePathNamesSourceAndSink)
{
  const CliResult r = run({"validate", "path.graph"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "source: a\n"));
  EXPECT_TRUE(contains(r.out, "sink: b\n"));
}

TEST(Cli, ValidateMalformed)
{
  const CliResult r = run({"validate", "malformed.graph"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "SyntaxError"));
}

TEST(Cli, CoalgebraE4)
{
  const CliResult r = run({"coalgebra", "e4.graph"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "delta a = a (x) a + a (x) b\n"));
  EXPECT_TRUE(contains(r.out, "tilde a = a (x) a + c (x) a\n"));
  // The printout is itself a coalgebra file.
  const CoalgebraText t = parse_coalgebra(r.out);
  EXPECT_EQ(LCoalgebra(t.basis, t.delta, t.tilde), markov_from_graph(testing::e4()));
}

TEST(Cli, CompanionE4)
{
  const CliResult r = run({"companion", "e4.graph"});
  EXPECT_EQ(r.code, 0);
  const auto psi = r.out.find("# psi_left");
  ASSERT_NE(psi, std::string::npos);
  EXPECT_NE(r.out.find("col a = a + c + h_a", psi), std::string::npos);
  EXPECT_TRUE(contains(r.out, "# factorization: holds"));
}

TEST(Cli, CompanionSectionsRoundTrip)
{
  const auto c = build_companion(markov_from_graph(testing::e4()));
  EXPECT_EQ(parse_matrix(run({"companion", "e4.graph", "--only", "psi_left"}).out), c.psi_left());
  EXPECT_EQ(parse_matrix(run({"companion", "e4.graph", "--only", "phi_right"}).out), c.phi_right());
  const CoalgebraText t = parse_coalgebra(run({"companion", "e4.graph", "--only", "coalgebra"}).out);
  EXPECT_EQ(LCoalgebra(t.basis, t.delta, t.tilde), c.full());
}

TEST(Cli, MissingFile)
{
  EXPECT_EQ(run({"coalgebra", "does/not/exist.graph"}).code, 2);
  EXPECT_EQ(run({"companion", "nope.graph"}).code, 2);
}

TEST(Cli, RmatrixRoundTrips)
{
  const auto c = build_companion(markov_from_graph(testing::e4()));
  const CliResult r = run({"rmatrix", "e4.graph", "--side", "right", "--hat", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(from_product_endo(parse_matrix(r.out)), companion_r_matrix(c, Side::Right, 2));
  const CliResult sparse = run({"rmatrix", "e4.graph", "--sparse"});
  EXPECT_EQ(sparse.code, 0);
  EXPECT_TRUE(contains(sparse.out, "\na*a a*a 1\n"));
}

TEST(Cli, VerifyYbe)
{
  for (const char *side : {"left", "right"})
    for (const char *hat : {"1", "2"})
    {
      const CliResult r = run({"verify-ybe", "e4.graph", "--side", side, "--hat", hat});
      EXPECT_EQ(r.code, 0) << r.out << r.err;
      EXPECT_TRUE(contains(r.out, "YBE holds on all 512 basis triples"));
    }
}

TEST(Cli, VerifyYbeNonCommutingMatrix)
{
  const CliResult r = run({"verify-ybe", "--matrix", "cross_noncommuting.matrix"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "YBE fails at e1 (x) e1 (x) e1"));
}

TEST(Cli, VerifyYbeOnInvalidGraph)
{
  const CliResult r = run({"verify-ybe", "path.graph", "--side", "left"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "InvalidGraph"));
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify-ybe", "e4.graph", "--hat", "3"}).code, 2);
  EXPECT_EQ(run({"verify-ybe", "e4.graph", "--side", "up"}).code, 2);
  EXPECT_EQ(run({"verify-ybe"}).code, 2);
  EXPECT_EQ(run({"--jobs", "0", "validate", "e4.graph"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BraidCheck)
{
  const CliResult r = run({"braid-check", "e4.graph", "-n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "s1 s2 s1 = s2 s1 s2: ok"));
  EXPECT_TRUE(contains(r.out, "checked all 512 basis tensors"));
}

TEST(Cli, BraidCheckSampledEchoesSeed)
{
  const CliResult r = run({"--seed", "77", "braid-check", "e4.graph", "-n", "4", "--exhaustive-cap", "0",
                     "--samples", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# lcoal braid-check (seed 77)\n", 0), 0u);
  EXPECT_TRUE(contains(r.out, "checked 50 sampled basis tensors (seed 77)"));
  EXPECT_TRUE(contains(r.out, "s1 s3 = s3 s1: ok"));
}

TEST(Cli, BraidCheckNonYbe)
{
  EXPECT_EQ(run({"braid-check", "--matrix", "cross_noncommuting.matrix"}).code, 1);
  const CliResult r = run({"braid-check", "--matrix", "cross_noncommuting.matrix", "--skip-ybe-check"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "FAIL at e1 (x) e1 (x) e1"));
}

TEST(Cli, BraidEvalRelation)
{
  const CliResult a = run({"braid-eval", "e4.graph", "--word", "s1 s2 s1", "--state", "a (x) b (x) c"});
  const CliResult b = run({"braid-eval", "e4.graph", "--word", "s2 s1 s2", "--state", "a (x) b (x) c"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  auto last_line = [](const std::string &s) {
    const auto end = s.find_last_not_of('\n');
    return s.substr(s.rfind('\n', end) + 1, end - s.rfind('\n', end));
  };
  EXPECT_EQ(last_line(a.out), last_line(b.out));
  // The result is a formal sum in the state syntax.
  const auto c = build_companion(markov_from_graph(testing::e4()));
  EXPECT_NO_THROW(resolve_tensorn(parse_formal_sum(last_line(a.out)), *c.full().basis()));
}

TEST(Cli, BraidEvalErrors)
{
  EXPECT_EQ(run({"braid-eval", "e4.graph", "--word", "s5", "-n", "3", "--state", "a (x) b (x) c"}).code, 2);
  EXPECT_EQ(run({"braid-eval", "e4.graph", "--word", "s1", "--state", "a (x) q"}).code, 2);
  EXPECT_EQ(run({"braid-eval", "e4.graph", "--word", "s1", "-n", "3", "--state", "a (x) b"}).code, 2);
}

TEST(Cli, MarkovizeD4)
{
  const CliResult r = run({"markovize", "d4.coalg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "# L-cocommutative: no"));
  EXPECT_TRUE(contains(r.out, "# two distinct R-matrices available"));
  EXPECT_TRUE(contains(r.err, "warning: ignoring 4 tilde line(s)"));
  EXPECT_TRUE(run({"markovize", "d4_delta.coalg"}).err.empty());
}

TEST(Cli, MarkovizeGroupLike)
{
  const CliResult r = run({"markovize", "grouplike.coalg", "--require-coassociative"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "# L-cocommutative: yes"));
  EXPECT_TRUE(contains(r.out, "# one representation"));
}

TEST(Cli, MarkovizeRequireCoassociative)
{
  EXPECT_EQ(run({"markovize", "d4_delta.coalg", "--require-coassociative"}).code, 0);
  EXPECT_EQ(run({"markovize", "breaking_fail.coalg", "--require-coassociative"}).code, 1);
}

TEST(Cli, Support)
{
  const CliResult r = run({"support", "d4.coalg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph(r.out), testing::e4());
  EXPECT_EQ(run({"support", "ambiguous.coalg"}).code, 2);
}

TEST(Cli, EveryReportHasSeedHeader)
{
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"validate", "e4.graph"},
           {"coalgebra", "e4.graph"},
           {"companion", "e4.graph"},
           {"rmatrix", "e4.graph"},
           {"verify-ybe", "e4.graph"},
           {"braid-check", "e4.graph"},
           {"braid-eval", "e4.graph", "--word", "s1", "--state", "a (x) b"},
           {"markovize", "d4.coalg"},
           {"support", "d4.coalg"}})
  {
    std::vector<std::string> with_seed = {"--seed", "5"};
    with_seed.insert(with_seed.end(), args.begin(), args.end());
    const CliResult r = run(with_seed);
    EXPECT_EQ(r.out.rfind("# lcoal " + args[0] + " (seed 5)\n", 0), 0u) << r.out << r.err;
  }
}

TEST(Cli, JobsDoNotChangeOutput)
{
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"verify-ybe", "e4.graph", "--side", "right"},
           {"verify-ybe", "--matrix", "cross_noncommuting.matrix"},
           {"braid-check", "e4.graph", "-n", "3"},
           {"braid-check", "--matrix", "cross_noncommuting.matrix", "--skip-ybe-check", "-n", "4",
            "--exhaustive-cap", "0"}})
  {
    std::vector<std::string> one = args, eight = args;
    one.insert(one.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    const CliResult a = run(one), b = run(eight);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace lcoal
