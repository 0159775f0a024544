#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/cli.hpp"
#include "holo/json_io.hpp"

using holo::io::json;

namespace {

constexpr const char* kScene = R"({
  "domain": {"kind": "complement", "n": 2, "deleted": [1]},
  "words": {
    "id": {"n": 2, "steps": []},
    "inv1": {"n": 2, "steps": [{"type": "inversion", "axis": 1}]},
    "inv2": {"n": 2, "steps": [{"type": "inversion", "axis": 2}]},
    "diag": {"n": 2, "steps": [{"type": "diagonal", "lambda": [[2, 0], [3, 0]]}]},
    "shear": {"n": 2, "steps": [{"type": "overshear", "axis": 2,
                                 "f": [{"exponents": [1, 0], "re": 1, "im": 0}], "g": []}]},
    "shift1": {"n": 2, "steps": [{"type": "overshear", "axis": 1,
                                  "f": [{"exponents": [0, 0], "re": 1, "im": 0}], "g": []}]},
    "three": {"n": 3, "steps": []}
  },
  "contours": {
    "c0": {"axis": 1, "p": [[1, 0], [1, 0]], "R": 1.0},
    "bad_axis": {"axis": 2, "p": [[1, 0], [1, 0]], "R": 1.0},
    "outside": {"axis": 1, "p": [[0, 0], [1, 0]], "R": 1.0}
  },
  "paths": {
    "os": {"type": "overshear", "n": 2, "axis": 2, "f": [{"exponents": [1, 0], "re": 1, "im": 0}], "g": []},
    "tr": {"type": "transposition", "n": 2, "j": 1, "k": 2, "bump": "sin"}
  },
  "exponent_matrices": {
    "m1": {"n": 2, "a": [[1, 1], [0, 1]]},
    "m2": {"n": 2, "a": [[2, 0], [0, 1]]}
  }
})";

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    scene_path_ = (std::filesystem::temp_directory_path() / "holoaut_cli_test_scene.json").string();
    std::ofstream(scene_path_) << kScene;
  }

  struct Result {
    int code;
    json out;
    std::string text;
  };

  static Result run(std::vector<std::string> args) {
    args.insert(args.begin() + 1, {"--scene", scene_path_});
    std::ostringstream out;
    std::ostringstream err;
    const int code = holo::cli::run(args, out, err);
    return {code, json::parse(out.str()), out.str()};
  }

  static inline std::string scene_path_;
};

std::pair<int, std::string> run_binary(const std::string& args) {
  const std::string command = std::string(HOLOAUT_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  std::string output;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_F(CliTest, WindingIndexOfInversion) {
  const auto r = run({"winding-index", "--word", "inv1", "--contour", "c0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["index"], -1);
  EXPECT_NEAR(r.out["raw"].get<double>(), -1.0, 1e-12);
  EXPECT_GE(r.out["samples"].get<int>(), 64);
}

TEST_F(CliTest, EvalIdentity) {
  const auto r = run({"eval", "--word", "id", "--point", "1,0;2,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.text, "{\"image\":[[1,0],[2,0]]}\n");
}

TEST_F(CliTest, ValidateExponents) {
  const auto bad = run({"validate-exponents", "--matrix", "m2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.out, json::parse(R"({"error": "NotUnimodular", "det": 2})"));
  const auto good = run({"validate-exponents", "--matrix", "m1"});
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(good.out["det"], 1);
}

TEST_F(CliTest, EverySubcommandRuns) {
  EXPECT_EQ(run({"compose", "--word", "diag", "--word", "inv1"}).out["word"]["steps"].size(), 2U);
  EXPECT_EQ(run({"invert", "--word", "diag"}).out["word"]["steps"][0]["lambda"][0][0], 0.5);
  EXPECT_EQ(run({"jacobian", "--word", "diag", "--point", "1,0;1,0"}).out["det"], json::parse("[6, 0]"));
  EXPECT_EQ(run({"negative-component", "--word", "inv1", "--contour", "c0"}).out["negative"], true);
  EXPECT_EQ(run({"negative-component", "--word", "id", "--contour", "c0"}).out["negative"], false);

  const auto cert = run({"homotopy-certify", "--path", "tr", "--grid", "101"});
  EXPECT_EQ(cert.code, 0);
  EXPECT_LT(cert.out["endpoint_err0"].get<double>(), 1e-12);
  EXPECT_GT(cert.out["min_abs_det"].get<double>(), 0.0);

  const auto cont = run({"continuity", "--path", "os", "--dt", "0.01"});
  EXPECT_EQ(cont.code, 0);
  EXPECT_GT(cont.out["modulus"].get<double>(), 0.0);

  EXPECT_EQ(run({"centralizer", "--word", "diag"}).out["commutes"], true);
  const auto shear = run({"centralizer", "--word", "shear"});
  EXPECT_EQ(shear.out["commutes"], false);
  EXPECT_GT(shear.out["witness"]["deviation"].get<double>(), 1e-3);

  EXPECT_EQ(run({"extract-diagonal", "--word", "diag"}).out["lambda"], json::parse("[[2, 0], [3, 0]]"));
  EXPECT_EQ(run({"classify"}).out, json::parse(R"({"kind": "complement", "is_stein": true})"));
  EXPECT_EQ(run({"preserves", "--word", "diag"}).out["preserves"], true);
  const auto escape = run({"preserves", "--word", "shift1"});
  EXPECT_EQ(escape.out["preserves"], false);
  EXPECT_EQ(escape.out["witness"][0], json::parse("[-1, 0]"));

  const auto along = run({"eval", "--path", "os", "--t", "0.5", "--point", "1,0;2,0"});
  EXPECT_EQ(along.out["image"], json::parse("[[1, 0], [2.5, 0]]"));
}

TEST_F(CliTest, DomainErrorsExitTwo) {
  EXPECT_EQ(run({"eval", "--word", "inv1", "--point", "0,0;1,0"}).out["error"], "SingularPoint");
  EXPECT_EQ(run({"eval", "--word", "inv1", "--point", "0,0;1,0"}).code, 2);
  EXPECT_EQ(run({"winding-index", "--word", "id", "--contour", "outside"}).out["error"], "OutsideDomain");
  EXPECT_EQ(run({"winding-index", "--word", "id", "--contour", "outside"}).code, 2);
  EXPECT_EQ(run({"extract-diagonal", "--word", "shear"}).out["error"], "NotDiagonal");
  EXPECT_EQ(run({"extract-diagonal", "--word", "shear"}).code, 2);
  EXPECT_EQ(run({"winding-index", "--word", "shift1", "--contour", "c0"}).out["error"], "ZeroOnContour");
  EXPECT_EQ(run({"winding-index", "--word", "shift1", "--contour", "c0"}).code, 2);
  EXPECT_EQ(run({"validate-exponents", "--matrix", "m2"}).code, 2);
}

TEST_F(CliTest, MalformedInputExitsOne) {
  EXPECT_EQ(run({"eval", "--word", "missing", "--point", "1,0;1,0"}).code, 1);
  EXPECT_EQ(run({"eval", "--word", "id"}).code, 1);
  EXPECT_EQ(run({"eval", "--word", "id", "--point", "1,0"}).code, 1);
  EXPECT_EQ(run({"eval", "--word", "three", "--point", "1;1;1"}).code, 1);
  EXPECT_EQ(run({"winding-index", "--word", "id", "--contour", "bad_axis"}).code, 1);
  EXPECT_EQ(run({"eval", "--path", "os", "--t", "2", "--point", "1,0;1,0"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"eval", "--bogus", "1"}).code, 1);

  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(holo::cli::run({"eval", "--word", "id", "--point", "1"}, out, err), 1);
}

TEST_F(CliTest, BinaryOutputIsDeterministic) {
  const std::string args = "centralizer --scene " + scene_path_ + " --word shear --seed 7";
  const auto first = run_binary(args);
  const auto second = run_binary(args);
  EXPECT_EQ(first.first, 0);
  EXPECT_EQ(first.second, second.second);
  EXPECT_FALSE(first.second.empty());

  const auto bad = run_binary("validate-exponents --scene " + scene_path_ + " --matrix m2");
  EXPECT_EQ(bad.first, 2);
  EXPECT_EQ(json::parse(bad.second), json::parse(R"({"error": "NotUnimodular", "det": 2})"));
  EXPECT_EQ(run_binary("no-such-command").first, 1);
}

TEST_F(CliTest, JsonIndent) {
  const auto r = run({"classify", "--json-indent", "2"});
  EXPECT_EQ(r.text, "{\n  \"is_stein\": true,\n  \"kind\": \"complement\"\n}\n");
}
