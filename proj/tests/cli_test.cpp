#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "riskarg/report.hpp"

namespace {

const std::string kCorpus = RISKARG_CORPUS_DIR;

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string("'") + RISKARG_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(CliTest, Woe) {
  EXPECT_EQ(run("woe sufficient no_data").out, "known_human_carcinogen\n");
  EXPECT_EQ(run("woe inadequate sufficient").out, "possible\n");
  EXPECT_EQ(run("woe no_evidence no_evidence").out, "non_carcinogenic\n");
  EXPECT_EQ(run("woe sufficient somewhat").status, 1);
}

TEST(CliTest, QueryIsDeterministic) {
  for (const char* fmt : {"text", "structured"}) {
    const auto args = "query '" + kCorpus + "/benzidine_like.kb' carcinogenic --format " + fmt;
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliTest, QueryMatchesLibraryRendering) {
  const auto r = riskarg::run_query(kCorpus + "/deep_chain.kb", "carcinogenic",
                                    riskarg::AggregationPolicy::Sum, std::nullopt);
  EXPECT_EQ(run("query '" + kCorpus + "/deep_chain.kb' carcinogenic --policy sum").out,
            riskarg::render_text(r));
}

TEST(CliTest, ContradictoryStillExitsZero) {
  EXPECT_EQ(run("query '" + kCorpus + "/contradictory.kb' carcinogenic").status, 0);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("query /nonexistent/x.kb p").status, 1);
  EXPECT_EQ(run("query '" + kCorpus + "/clean_support.kb' Bad-Name").status, 1);
  EXPECT_EQ(run("query '" + kCorpus + "/clean_support.kb' p --policy median").status, 1);

  const auto bad = temp_file("bad.kb", "fact f1: p : +++ .\n");
  EXPECT_EQ(run("query '" + bad + "' p").status, 2);
  EXPECT_EQ(run("check '" + bad + "'").status, 2);

  const auto badlex = temp_file("bad.lexicon", "ambivalent = \"x\"\n");
  EXPECT_EQ(run("query '" + kCorpus + "/clean_support.kb' p --lexicon '" + badlex + "'").status, 2);

  std::string wide = "fact base: a : + .\n";
  for (int i = 0; i < 8; ++i) wide += "fact f" + std::to_string(i) + ": p : + .\n";
  const auto many = temp_file("many.kb", wide);
  EXPECT_EQ(run("query '" + many + "' p --max-arguments 4").status, 3);
  EXPECT_EQ(run("query '" + many + "' p").status, 0);
}

TEST(CliTest, Check) {
  const auto r = run("check '" + kCorpus + "/benzidine_like.kb'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find(": 9 items, 0 warnings\n"), std::string::npos) << r.out;
}

TEST(CliTest, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.status, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(CliTest, LexiconChangesTerm) {
  const auto r = run("query '" + kCorpus + "/clean_support.kb' carcinogenic --lexicon '" + kCorpus +
                     "/default.lexicon'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("term: "), std::string::npos);
}

}  // namespace
