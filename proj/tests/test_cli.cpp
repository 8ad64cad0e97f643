#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(SQRTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("--no-such-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("sums --q 15").code, 2);
  EXPECT_EQ(run("sums --q 7 --kind nonsense").code, 2);
  EXPECT_EQ(run("bilinear sweep --weights gaussian").code, 2);
  EXPECT_EQ(run("energy sweep --which nope").code, 2);
}

TEST(Cli, SizeGuardsExitThree) {
  EXPECT_EQ(run("discrepancy coverage --q 200003 --P 10 --R 10 --S 10").code, 3);
}

TEST(Cli, HelpExitsZero) {
  const CliResult r = run("--help");
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"sums", "energy", "lattice", "bilinear", "forms", "split", "discrepancy", "verify"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}

TEST(Cli, SingleQueriesEmitJson) {
  const CliResult g = run("sums --q 5 --kind gauss --a 1 --b 0");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("\"kind\": \"gauss\""), std::string::npos);
  EXPECT_NE(g.out.find("2.236067977"), std::string::npos);
  const CliResult e = run("energy --q 5 --N 1 --j 1");
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("\"re\": 6.0"), std::string::npos) << e.out;
  const CliResult e2 = run("energy --q 1009 --N 30 --weights pm1");
  EXPECT_EQ(e2.out.find("\"pass\": false"), std::string::npos) << e2.out;
  const CliResult f = run("forms --q 23");
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("\"class_number\": 3"), std::string::npos) << f.out;
  const CliResult s = run("split --q 23 --P 5");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("\"split\": 2"), std::string::npos) << s.out;
}

TEST(Cli, SweepCsvIsDeterministic) {
  const std::string args = "bilinear sweep --qset 101,211 --weights pm1 --seed 42 --quick";
  const CliResult a = run(args);
  const CliResult b = run(args);
  const CliResult c = run(args + " --threads 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(a.out.rfind("# sweep=thm14 seed=42 rng=mt19937_64", 0), 0u) << a.out.substr(0, 80);
  const CliResult d = run("bilinear sweep --qset 101,211 --weights pm1 --seed 43 --quick");
  EXPECT_NE(a.out, d.out);
}

TEST(Cli, SplitFactorTable) {
  const CliResult r = run("split thm12 --qmax 1000");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("q,t,omega,bound,excluded,not_split,all_odd,pass\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n67,7,6,"), std::string::npos);
  EXPECT_EQ(r.out.find(",0\n"), std::string::npos);  // no failing row
}

TEST(Cli, QuickVerifyPasses) {
  const CliResult r = run("verify --quick");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[PASS]"), std::string::npos);
}
