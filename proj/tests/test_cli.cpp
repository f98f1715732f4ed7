#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qlprop/cli.hpp"
#include "qlprop/model.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qlprop::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const char* name) {
  return std::string(QLPROP_MODELS_DIR) + "/" + name;
}

TEST(Cli, Parse) {
  EXPECT_EQ(run({"parse", "--lang", "lx", "E(x)&F(x)"}).out, "E(x) & F(x)\n");
  EXPECT_EQ(run({"parse", "--lang", "ltq", "E(x) |q F(x)"}).out,
            "E(x) |q F(x)\n");
  EXPECT_EQ(run({"parse", "--lang", "prag", "N|- E(x)"}).out, "N |- E(x)\n");
  CliRun bad = run({"parse", "--lang", "ltq", "E(x)|F(x)"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("ClassicalConnectiveInTQ"), std::string::npos);
  EXPECT_NE(bad.err.find("^"), std::string::npos);
}

TEST(Cli, ParseJson) {
  CliRun r = run({"--format", "json", "parse", "--lang", "lx", "!E(x)"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lang"], "lx");
  EXPECT_EQ(j["canonical"], "!E(x)");
}

TEST(Cli, EvalClassical) {
  EXPECT_EQ(run({"eval", "--model", model("m_sr.json"), "--state", "S2",
                 "E(x)"})
                .out,
            "T\n");
  EXPECT_EQ(run({"eval", "--model", model("m_sr.json"), "--state", "S1",
                 "--object", "u2", "E(x)"})
                .out,
            "F\n");
  EXPECT_EQ(run({"eval", "--model", model("m_sr.json"), "E(x)"}).out,
            "S1 u1 T\nS1 u2 F\nS2 v1 T\n");
  EXPECT_EQ(run({"eval", "--model", model("m_sr.json"), "--interp",
                 "S1=u2,S2=v1", "E(x)"})
                .out,
            "S1 F\nS2 T\n");
}

TEST(Cli, EvalQuantum) {
  EXPECT_EQ(run({"eval", "--model", model("m_qbit.json"), "--qtruth",
                 "--state", "Sx+", "Ez+(x)"})
                .out,
            "QIndeterminate\n");
  EXPECT_EQ(run({"eval", "--model", model("m_qbit.json"), "--lang", "prag",
                 "--state", "Sz+", "|- Ez+(x)"})
                .out,
            "Justified\n");
  CliRun r = run({"--format", "json", "eval", "--model", model("m_qbit.json"),
               "--qtruth", "Ez+(x)"});
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 4u);
  EXPECT_EQ(j["records"][0]["state"], "Sz+");
  EXPECT_EQ(j["records"][0]["value"], "QTrue");
}

TEST(Cli, EvalErrors) {
  CliRun r = run({"eval", "--model", model("m_sr.json"), "--qtruth", "--state",
               "S1", "E(x)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NoHilbertAnnotation"), std::string::npos);
  EXPECT_EQ(run({"eval", "--model", model("m_qbit.json"), "--lang", "prag",
                 "|- (Ez+(x) & Ex+(x))"})
                .code,
            1);
  EXPECT_EQ(run({"eval", "--model", model("m_sr.json"), "--object", "u1",
                 "E(x)"})
                .code,
            2);
  EXPECT_EQ(run({"eval", "--model", "/nonexistent.json", "E(x)"}).code, 1);
}

TEST(Cli, Props) {
  EXPECT_EQ(run({"props", "--model", model("m_sr.json"), "--physical",
                 "E(x)"})
                .out,
            "{S2}\n");
  EXPECT_EQ(run({"props", "--model", model("m_sr.json"), "--forall", "E(x)"})
                .out,
            "{S2}\n");
  EXPECT_EQ(run({"props", "--model", model("m_sr.json"), "--individual",
                 "S1=u1,S2=v1", "E(x)"})
                .out,
            "{S1,S2}\n");
  EXPECT_EQ(run({"props", "--model", model("m_sr.json"), "--testable",
                 "!!E(x)"})
                .out,
            "E\n");
  EXPECT_EQ(run({"props", "--model", model("m_qbit.json"), "--lang", "ltq",
                 "--physical", "~q Ez+(x)"})
                .out,
            "{Sz-}\n");
  CliRun j = run({"--format", "json", "props", "--model", model("m_sr.json"),
               "--physical", "E(x) | F(x)"});
  auto v = nlohmann::json::parse(j.out);
  EXPECT_EQ(v["kind"], "physical");
  EXPECT_EQ(v["value"], nlohmann::json::array({"S1", "S2"}));
  EXPECT_EQ(run({"props", "--model", model("m_sr.json"), "E(x)"}).code, 2);
}

TEST(Cli, CheckSuites) {
  CliRun sec3 = run({"check", "--model", model("m_sr.json"), "--suite", "sec3"});
  EXPECT_EQ(sec3.code, 0) << sec3.out << sec3.err;
  EXPECT_EQ(sec3.out.find("FAIL"), std::string::npos);
  CliRun cm = run({"check", "--model", model("m_cm.json"), "--suite", "cm"});
  EXPECT_EQ(cm.code, 0) << cm.out << cm.err;
  CliRun qm = run({"check", "--model", model("m_qbit.json"), "--suite", "qm"});
  EXPECT_EQ(qm.code, 0) << qm.out << qm.err;
  EXPECT_NE(qm.out.find("XFAIL"), std::string::npos);
  CliRun prag = run({"check", "--model", model("m_qbit.json"), "--suite", "prag",
                  "--depth", "2"});
  EXPECT_EQ(prag.code, 0) << prag.out << prag.err;
}

TEST(Cli, CheckFailures) {
  CliRun cmt = run({"check", "--model", model("m_cm.json"), "--suite", "cm",
                 "--assume-cmt"});
  EXPECT_EQ(cmt.code, 1);
  EXPECT_NE(cmt.err.find("CmtViolation"), std::string::npos);
  EXPECT_EQ(run({"check", "--model", model("m_sr.json"), "--suite", "qm"})
                .code,
            1);
  EXPECT_EQ(run({"check", "--model", model("m_sr.json"), "--suite", "nope"})
                .code,
            2);
}

TEST(Cli, CheckJson) {
  CliRun r = run({"--format", "json", "check", "--model", model("m_sr.json"),
               "--suite", "sec3"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "sec3");
  EXPECT_TRUE(j.contains("results"));
}

TEST(Cli, Lattice) {
  CliRun r = run({"lattice", "--model", model("m_qbit.json"), "--which", "LS"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("elements 6\n", 0), 0u);
  EXPECT_NE(r.out.find("edges 8"), std::string::npos);
  CliRun dot = run({"lattice", "--model", model("m_qbit.json"), "--which", "LS",
                 "--dot", "-"});
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  CliRun j = run({"--format", "json", "lattice", "--model", model("m_cm.json"),
               "--which", "lindenbaum", "--depth", "3"});
  auto v = nlohmann::json::parse(j.out);
  EXPECT_EQ(v["elements"].size(), 8u);
  EXPECT_EQ(v["which"], "lindenbaum");
}

TEST(Cli, GenRoundTrip) {
  CliRun r = run({"gen", "--fixture", "qbit"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(qlprop::save_model(qlprop::load_model(r.out)),
            qlprop::save_model(qlprop::make_qbit_model()));
  const auto path =
      std::filesystem::temp_directory_path() / "qlprop_gen_test.json";
  EXPECT_EQ(run({"gen", "--fixture", "sr", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(qlprop::save_model(qlprop::load_model(ss.str())),
            qlprop::save_model(qlprop::make_sr_model()));
  std::filesystem::remove(path);
  CliRun seeded = run({"gen", "--fixture", "qbit", "--policy", "random", "--seed",
                    "7", "--universe-size", "4"});
  EXPECT_EQ(seeded.out, run({"gen", "--fixture", "qbit", "--policy", "random",
                             "--seed", "7", "--universe-size", "4"})
                            .out);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"eval", "E(x)"}).code, 2);
  EXPECT_EQ(run({"parse", "E(x)"}).code, 2);
}

TEST(Cli, Tolerance) {
  EXPECT_EQ(run({"--tol", "1e-6", "eval", "--model", model("m_qbit.json"),
                 "--qtruth", "--state", "Sz+", "Ez+(x)"})
                .out,
            "QTrue\n");
}

}  // namespace
