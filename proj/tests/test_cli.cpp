#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "vpal/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = vpal::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Scalars) {
  EXPECT_EQ(run({"v", "198"}).out, "18\n");
  EXPECT_EQ(run({"v", "1"}).out, "0\n");
  EXPECT_EQ(run({"reverse", "8712"}).out, "2178\n");
  EXPECT_EQ(run({"reverse", "6", "--base", "2"}).out, "3\n");
  EXPECT_EQ(run({"v", "198", "--format", "jsonl"}).out,
            R"({"schema_version":"1","type":"scalar","name":"v","input":"198","value":"18"})"
            "\n");
}

TEST(Cli, Check) {
  EXPECT_EQ(run({"check", "198"}).out, "true n=198 reversal=891 shared_v=18\n");
  EXPECT_EQ(run({"check", "121"}).out, "false n=121 (equals its reversal)\n");
  EXPECT_EQ(run({"check", "1980"}).out, "false n=1980 (multiple of base 10)\n");
  EXPECT_EQ(run({"check", "19"}).out, "false n=19 reversal=91 v(n)=19 v(reversal)=20\n");
  EXPECT_EQ(run({"check", "576", "--format", "csv"}).out, "n,reversal,shared_v,base\n576,675,13,10\n");
}

TEST(Cli, EnumerateCanonicalTable) {
  const Outcome o = run({"enumerate", "--lo", "1", "--hi", "100000", "--canonical", "--threads", "1"});
  EXPECT_EQ(o.code, 0);
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 46U);
  EXPECT_EQ(rows.front(), "18 81 7");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].substr(0, rows[i].find(' ')), std::to_string(fixture::kCanonicalTable[i]));
  }
  EXPECT_EQ(run({"enumerate", "--lo", "1", "--hi", "1000", "--format", "bfile"}).out,
            "1 18\n2 81\n3 198\n4 576\n5 675\n6 819\n7 891\n8 918\n");
}

TEST(Cli, Families) {
  EXPECT_EQ(run({"family", "nines", "--k", "3"}).out, "1998\n");
  EXPECT_EQ(run({"family", "repeat18", "--k", "2", "--check"}).out, "1818 true\n");
  EXPECT_EQ(run({"family", "nines", "--k", "0"}).code, vpal::cli::kExitDomain);
}

TEST(Cli, Anchors) {
  const auto rows = lines(run({"anchors", "--from", "2", "--to", "4"}).out);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0], "m\tp_verdict\tq_verdict\tmeets_floor\tcandidate");
  EXPECT_EQ(rows[2], "3\tprime\tcomposite\tno\tno");
  EXPECT_EQ(rows[3].substr(0, 2), "4\t");
}

TEST(Cli, VerifyAndHeuristic) {
  const Outcome v = run({"verify", "--bound", "1000"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "bound 1000\nbrute_force_hits (none)\ncharacterization_hits (none)\nconsistent true\n");
  const auto h = lines(run({"heuristic", "--from", "1", "--to", "4"}).out);
  ASSERT_EQ(h.size(), 4U);
  EXPECT_EQ(h[0], "C 1");
  EXPECT_EQ(h[3], "tail_bound 25");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"frobnicate"}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"v", "0"}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"v", "-4"}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"reverse", "0"}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"enumerate", "--lo", "9", "--hi", "3"}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"v", "12", "--format", "xml"}).code, vpal::cli::kExitDomain);
  // (2^31 - 1)(2^89 - 1) cannot be split in 100 steps.
  const Outcome budget = run({"--budget", "100", "v", "1329227995165945853261116920683298817"});
  EXPECT_EQ(budget.code, vpal::cli::kExitBudget) << budget.err;
  EXPECT_NE(budget.err.find("budget"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FlagsOverrideEnvironment) {
  ::setenv("VPAL_BUDGET", "100", 1);
  EXPECT_EQ(run({"v", "1329227995165945853261116920683298817"}).code, vpal::cli::kExitBudget);
  EXPECT_EQ(run({"--budget", "50000000", "v", "1329227995165945853261116920683298817"}).code, 0);
  ::unsetenv("VPAL_BUDGET");
  ::setenv("VPAL_THREADS", "0", 1);
  EXPECT_EQ(run({"v", "12"}).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"--threads", "2", "v", "12"}).code, 0);
  ::setenv("VPAL_THREADS", "two", 1);
  EXPECT_EQ(run({"v", "12"}).code, vpal::cli::kExitDomain);
  ::unsetenv("VPAL_THREADS");
}

TEST(Cli, ExportPipeline) {
  const std::string records = run({"enumerate", "--lo", "1", "--hi", "600", "--format", "jsonl"}).out;
  EXPECT_EQ(run({"export", "--format", "bfile"}, records).out, "1 18\n2 81\n3 198\n4 576\n");
  EXPECT_EQ(run({"export", "--format", "csv"}, records).out,
            "n,reversal,shared_v,base\n18,81,7,10\n81,18,7,10\n198,891,18,10\n576,675,13,10\n");
  EXPECT_EQ(run({"export", "--format", "jsonl"}, records).out, records);
  const std::string mixed = records + run({"v", "10", "--format", "jsonl"}).out;
  EXPECT_EQ(run({"export", "--format", "csv"}, mixed).code, vpal::cli::kExitDomain);
  EXPECT_EQ(run({"export", "--format", "csv"}, "{broken\n").code, vpal::cli::kExitDomain);
}
