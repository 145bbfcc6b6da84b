#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qsym/io.hpp"

namespace qsym {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

QSymElement printed(const CliRun& r) { return parse_element(trim(r.out)); }

class ScopedFile {
 public:
  explicit ScopedFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("qsym_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json");
    std::ofstream(path_) << content;
  }
  ~ScopedFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, MulDExample) {
  CliRun r = run({"mul", "D[2,1]", "D[2]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(printed(r), parse_element("(q*t + t^2)*D[5] + (q + 2*t)*D[2,3] + (q + 2*t)*D[4,1] + D[2,1,2] + 2*D[2,2,1]"));
}

TEST(Cli, MulMonomials) {
  CliRun r = run({"mul", "M[1]", "M[1]"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "M[2] + 2*M[1,1]");
}

TEST(Cli, ComulGExample) {
  CliRun r = run({"comul", "G[1,2,1]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(trim(r.out),
            "G[] # G[1,2,1] + G[1] # G[2,1] + (-q^2 + q)*G[1] # G[1,1,1] + (-q^2 + 1)*G[1,1] # G[1,1] + G[1,2] # G[1] + "
            "G[1,2,1] # G[]");
}

TEST(Cli, ExpandExamples) {
  CliRun d = run({"expand", "D[2,1]", "--to", "M"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(printed(d), parse_element("(-t/q^2)*M[3] + (1/q)*M[2,1]"));

  CliRun g = run({"expand", "G[1,2,1]", "--to", "L", "--at", "q=0"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(trim(g.out), "L[1,2,1]");

  CliRun u = run({"expand", "M[]", "--to", "D"});
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(trim(u.out), "D[]");
}

TEST(Cli, JsonOutputRoundTrips) {
  CliRun r = run({"expand", "D[2,1]", "--to", "L", "--output", "json"});
  ASSERT_EQ(r.code, 0);
  QSymElement x = element_from_json(json::parse(r.out));
  EXPECT_EQ(x, convert(parse_element("D[2,1]"), BasisKind::L));
  CliRun again = run({"expand", r.out, "--to", "D"});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(printed(again), parse_element("D[2,1]"));
}

TEST(Cli, ParseErrorShowsPosition) {
  CliRun r = run({"expand", "D[2,", "--to", "M"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("    ^"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"mul", "M[1]", "L[1]"}).code, 2);
  EXPECT_EQ(run({"expand", "K[1]", "--to", "M"}).code, 2);
  EXPECT_EQ(run({"expand", "D[1]", "--to", "Q"}).code, 2);
  EXPECT_EQ(run({"verify", "no-such-suite"}).code, 2);
  EXPECT_EQ(run({"table", "L-to-K", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"table", "wt"}).code, 2);
  EXPECT_EQ(run({"verify", "positivity", "--max-grade", "-1"}).code, 2);
  EXPECT_EQ(run({"expand", "D[1]", "--to", "M", "--nu", "1"}).code, 2);
  EXPECT_EQ(run({"expand", "q^-1*D[1]", "--to", "M", "--at", "q=0"}).code, 2);
}

TEST(Cli, MulWithBasisConverts) {
  CliRun r = run({"mul", "M[1]", "L[1]", "--basis", "L"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(printed(r), parse_element("L[2] + L[1,1]"));
}

TEST(Cli, CheckOracle) {
  EXPECT_EQ(run({"mul", "G[2]", "G[1,1]", "--check-oracle"}).code, 0);
  EXPECT_EQ(run({"mul", "(q+1)*Mq[1] + Mq[2]", "Mq[1]", "--check-oracle"}).code, 0);
  EXPECT_EQ(run({"comul", "D[1,2]", "--check-oracle"}).code, 0);
  EXPECT_EQ(run({"antipode", "G[2,1]", "--check-oracle"}).code, 0);
  EXPECT_EQ(run({"mul", "K[1](nu=2)", "K[1](nu=2)", "--check-oracle"}).code, 0);
}

TEST(Cli, Antipode) {
  CliRun r = run({"antipode", "M[1,2]"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(printed(r), parse_element("M[3] + M[2,1]"));
}

TEST(Cli, VerifyTextAndJson) {
  CliRun r = run({"verify", "specializations", "--max-grade", "4"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("PASS specializations", 0), 0u) << r.out;

  CliRun j = run({"verify", "psi-phi", "kappa-rules", "--max-grade", "4", "--output", "json"});
  ASSERT_EQ(j.code, 0);
  json doc = json::parse(j.out);
  EXPECT_TRUE(doc.at("ok").get<bool>());
  ASSERT_EQ(doc.at("suites").size(), 2u);
  EXPECT_EQ(doc.at("suites")[0].at("suite"), "psi-phi");
}

TEST(Cli, VerifyScfWithNus) {
  CliRun r = run({"verify", "scf-morphism", "--nu", "2", "--nu", "3", "--max-grade", "4", "--random-cases", "20"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, TableWeights) {
  CliRun r = run({"table", "wt", "--n", "4", "--output", "json"});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  std::vector<std::vector<int>> values;
  for (const auto& row : doc.at("rows")) values.push_back(row.at("values").get<std::vector<int>>());
  EXPECT_EQ(values, (std::vector<std::vector<int>>{
                        {1, 1, 1}, {1, 2, 2}, {1, 1, 2}, {1, 1, 1}, {1, 2, 3}, {1, 2, 2}, {1, 1, 2}, {1, 2, 3}}));

  CliRun text = run({"table", "wt", "--n", "4"});
  ASSERT_EQ(text.code, 0);
  std::istringstream lines(text.out);
  std::string line;
  while (std::getline(lines, line)) EXPECT_TRUE(line.empty() || line.back() != ' ');
}

TEST(Cli, TableGToLHasUnitDiagonal) {
  CliRun r = run({"table", "G-to-L", "--n", "3", "--output", "json"});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  const auto& rows = doc.at("rows");
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].at("values")[i], "1");
}

TEST(Cli, TableKTransitionsAreInverse) {
  auto matrix = [](const std::string& kind) {
    CliRun r = run({"table", kind, "--n", "3", "--nu", "2", "--output", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::vector<std::vector<RatFunc>> m;
    for (json doc = json::parse(r.out); const auto& row : doc.at("rows")) {
      std::vector<RatFunc> cells;
      for (const auto& v : row.at("values")) cells.push_back(parse_ratfunc(v.get<std::string>()));
      m.push_back(cells);
    }
    return m;
  };
  auto a = matrix("L-to-K"), b = matrix("K-to-L");
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      RatFunc s = 0;
      for (std::size_t k = 0; k < a.size(); ++k) s += a[i][k] * b[k][j];
      EXPECT_EQ(s, RatFunc(i == j ? 1 : 0)) << i << "," << j;
    }
}

TEST(Cli, ConfigFileAndEnvironment) {
  ScopedFile cfg(R"({"output": "json", "max_grade": 3})");
  CliRun r = run({"verify", "positivity", "--config", cfg.path()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out).at("ok").get<bool>());

  // Flags override the file.
  CliRun text = run({"verify", "positivity", "--config", cfg.path(), "--output", "text"});
  EXPECT_EQ(text.out.rfind("PASS", 0), 0u);

  ::setenv("QSYM_CONFIG", cfg.path().c_str(), 1);
  CliRun env = run({"mul", "M[1]", "M[1]"});
  ::unsetenv("QSYM_CONFIG");
  ASSERT_EQ(env.code, 0);
  EXPECT_NO_THROW(element_from_json(json::parse(env.out)));

  ScopedFile bad(R"({"nus": [1]})");
  EXPECT_EQ(run({"verify", "positivity", "--config", bad.path()}).code, 2);
  EXPECT_EQ(run({"verify", "positivity", "--config", "/nonexistent/qsym.json"}).code, 2);
}

TEST(Cli, Help) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace qsym
