#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run(std::string const& args, std::string const& env = "") {
    std::string cmd = env + " " + GENPOS_CLI + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       f = popen(cmd.c_str(), "r");
    if (f == nullptr) {
      return r;
    }
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, f)) {
      r.out.append(buf, n);
    }
    int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  json run_json(std::string const& args, int expect_code) {
    auto r = run(args + " --json");
    EXPECT_EQ(r.code, expect_code) << args << "\n" << r.out;
    return json::parse(r.out);
  }

  unsigned value(json const& j, char const* key) {
    return j["invariants"][key]["value"].get<unsigned>();
  }

  void statuses_valid(json const& j) {
    for (auto const& [k, v] : j["invariants"].items()) {
      auto s = v["status"].get<std::string>();
      EXPECT_TRUE(s == "exact" || s == "lower_bound" || s == "fail" || s == "skipped") << s;
    }
  }

}  // namespace

TEST(Cli, InvariantsOfSym3) {
  auto j = run_json("invariants --group sym:3 --which all", 0);
  EXPECT_EQ(value(j, "m"), 2u);
  EXPECT_EQ(value(j, "md"), 2u);
  EXPECT_EQ(value(j, "i"), 2u);
  EXPECT_EQ(j["order"], 6);
  statuses_valid(j);
}

TEST(Cli, InvariantsOfGqp23) {
  auto j = run_json("invariants --group gqp:2,3 --which all", 0);
  EXPECT_EQ(value(j, "m"), 3u);
  EXPECT_EQ(value(j, "md"), 3u);
  EXPECT_EQ(value(j, "i"), 4u);
  auto c = run_json("invariants --group gqp:2,3 --which all --mode chief", 0);
  EXPECT_EQ(value(c, "m"), 3u);
  EXPECT_EQ(value(c, "md"), 3u);
  EXPECT_EQ(value(c, "i"), 4u);
}

TEST(Cli, TrivialGroupIsAllZero) {
  auto j = run_json("invariants --group cyclic:1", 0);
  for (auto key : {"m", "md", "i"}) {
    EXPECT_EQ(value(j, key), 0u) << key;
  }
}

TEST(Cli, HumanOutputListsValues) {
  auto r = run("invariants --group sym:3 --which m");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m = 2"), std::string::npos) << r.out;
}

TEST(Cli, GqpMdAtThreeSeven) {
  auto j = run_json("gqp --p 3 --q 7 --compute md", 0);
  EXPECT_EQ(value(j, "md"), 3u);
  EXPECT_EQ(j["invariants"]["md"]["status"], "exact");
  EXPECT_EQ(j["invariants"]["md"]["certificate"]["members"].size(), 3u);
}

TEST(Cli, GqpFamilyAtFiveElevenIsALowerBound) {
  auto j = run_json("gqp --p 5 --q 11 --compute family", 2);
  EXPECT_EQ(j["family"]["size"], 5);
  EXPECT_EQ(j["family"]["general_position"], true);
  EXPECT_EQ(j["invariants"]["md"]["status"], "lower_bound");
}

TEST(Cli, GqpPreconditionFails) {
  auto r = run("gqp --p 3 --q 5");
  EXPECT_EQ(r.code, 1);
  auto j = run_json("gqp --p 3 --q 5", 1);
  EXPECT_TRUE(j.contains("error"));
}

TEST(Cli, BadSpecIsAnError) {
  auto j = run_json("invariants --group nonsense:3", 1);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_EQ(run("invariants").code, 1);
}

TEST(Cli, ExpiredTimeoutGivesExitTwo) {
  auto j = run_json("invariants --group 'direct(sym:4,abelian:2,2,2)' --which m --timeout 0.001", 2);
  EXPECT_EQ(j["invariants"]["m"]["status"], "lower_bound");
}

TEST(Cli, CapFromEnvironment) {
  auto r = run("invariants --group sym:4 --json", "GENPOS_ENUMERATION_CAP=10");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run("invariants --group sym:3 --which m", "GENPOS_ENUMERATION_CAP=10").code, 0);
}

TEST(Cli, VerifyChainSmall) {
  auto j = run_json("verify chain --max-order 30", 0);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_GT(j["checked"].get<int>(), 30);
  for (auto const& e : j["entries"]) {
    EXPECT_EQ(e["status"], "exact") << e["group"];
  }
}

TEST(Cli, VerifyIsDeterministicAcrossThreads) {
  auto a = run_json("verify frattini-invariance --max-order 40", 0);
  auto b = run_json("verify frattini-invariance --max-order 40 --threads 3", 0);
  EXPECT_EQ(a["entries"], b["entries"]);
  auto c = run_json("verify frattini-invariance --max-order 40", 0);
  a.erase("elapsed_ms");
  c.erase("elapsed_ms");
  EXPECT_EQ(a.dump(), c.dump());
}

TEST(Cli, UnknownVerifyTarget) {
  EXPECT_EQ(run("verify thm9").code, 1);
}

TEST(Cli, CorpusLines) {
  auto r = run("corpus --max-order 8 --filter abelian");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string        line;
  int                n = 0;
  while (std::getline(in, line)) {
    auto j = json::parse(line);
    EXPECT_EQ(j["abelian"], true);
    ++n;
  }
  EXPECT_EQ(n, 11);
}

TEST(Cli, ExportImportRoundTrip) {
  auto path = (std::filesystem::temp_directory_path() / "genpos_cli_s4.json").string();
  EXPECT_EQ(run("export --group sym:4 --out " + path).code, 0);
  auto r = run("import " + path + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["order"], 24);
  std::filesystem::remove(path);
}
