#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dvf/cli.hpp"
#include "dvf/model_io.hpp"
#include "dvf/parse.hpp"

namespace fs = std::filesystem;
using namespace dvf;
using json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int code;
  json out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, json::parse(out.str()), err.str()};
}

const std::string kModels = std::string(DVF_SOURCE_DIR) + "/models";

}  // namespace

TEST(Cli, ValIsLexMinimum) {
  const CliResult r = run({"val", "t^[1;0] + t^[0;3]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, json::parse(R"({"val": "[0;3]"})"));
}

TEST(Cli, WresOfOmega) {
  const CliResult r = run({"wres", "--model", kModels + "/base.toml", "t^[1;0]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, json::parse(R"({"wres": "0 + 1*eps"})"));
}

TEST(Cli, GameAgainstOne) {
  const CliResult r = run({"game", "--adversary", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["n"], 2);
  EXPECT_EQ(r.out["outcome"], "refuted");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"res", "t^-1"}).code, kExitDomain);
  EXPECT_EQ(run({"val", "O(t^2)"}).code, kExitPrecision);
  const CliResult parse = run({"val", "t^[1;0 + 2"});
  EXPECT_EQ(parse.code, kExitParse);
  EXPECT_EQ(parse.out["error"]["code"], "parse");
  EXPECT_EQ(parse.out["error"]["offset"], 2);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run({"classify", "th9"}).out["error"]["code"], "undeclared-generator");
}

TEST(Cli, CheckReportsSuiteSummary) {
  const CliResult r = run({"check", "vp-laws", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["suites"][0]["cases"], 300);
  EXPECT_EQ(r.out["suites"][0]["failures"], 0);
  EXPECT_NE(r.err.find("vp-laws: 300 cases, 0 failures"), std::string::npos);
}

TEST(Cli, JsonReportShape) {
  const CliResult r = run({"--json", "density", "--a", "0", "--b", "t^[0;-1]", "--gamma", "[1;0]"});
  ASSERT_EQ(r.code, 0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.out.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"operation", "inputs", "output", "witness_ledger", "precision_used"}));
  ASSERT_EQ(r.out["witness_ledger"].size(), 1u);
  EXPECT_EQ(r.out["witness_ledger"][0]["th"], "th2");
  EXPECT_EQ(r.out["precision_used"], "[2;0]");
}

TEST(Cli, GrownModelIsWrittenBesideTheInput) {
  const fs::path dir = fs::temp_directory_path() / "dvf_cli_grown";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy_file(kModels + "/dt.toml", dir / "dt.toml");
  const CliResult r = run({"--model", (dir / "dt.toml").string(), "density", "--a", "t", "--b", "t^-2", "--gamma", "3"});
  ASSERT_EQ(r.code, 0);
  const fs::path grown = dir / "dt.grown.toml";
  EXPECT_EQ(r.out["grown_model"], grown.string());
  ASSERT_TRUE(fs::exists(grown));
  const DVModel m = load_model(grown.string());
  EXPECT_EQ(m.generator_log().size(), 1u);
  // The witness is valid in the grown model.
  const HahnSeries x = parse_series(r.out["x"].get<std::string>(), {1, std::nullopt});
  EXPECT_TRUE(definitely_equal(m.delta(x), parse_series("t^-2")));
  // The input file is untouched.
  EXPECT_EQ(load_model((dir / "dt.toml").string()).generator_log().size(), 0u);
  fs::remove_all(dir);
}

TEST(ModelIo, RoundTripsBuiltIns) {
  for (const DVModel& m : {DVModel::base(), DVModel::dt()}) {
    const std::string text = model_text(m);
    EXPECT_EQ(model_text(parse_model(text)), text);
  }
}

TEST(ModelIo, ShippedFilesMatchBuiltIns) {
  EXPECT_EQ(model_text(load_model(kModels + "/base.toml")), model_text(DVModel::base()));
  EXPECT_EQ(model_text(load_model(kModels + "/dt.toml")), model_text(DVModel::dt()));
}

TEST(ModelIo, AcceptsTheDocumentedConfigBlock) {
  const DVModel m = parse_model(
      "group = \"Z x Z\"\nprecision = \"[2;0]\"\n"
      "character = { omega = \"t^[-1;0]\", unit = \"0\" }\n"
      "coeff = { th1 = \"t^[0;-3]\" }\n"
      "u = \"1 + t^[0;1]\"  # comment\n");
  EXPECT_EQ(m.u(), parse_series("1 + t^[0;1]"));
  EXPECT_EQ(m.rank(), 2u);
}

TEST(ModelIo, ErrorsCiteByteOffsets) {
  try {
    parse_model("group = \"Z\"\nprecision = \"4\"\nbogus = \"1\"\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 28u);
  }
  EXPECT_THROW(parse_model("group = \"Z\"\nprecision = \"4\"\ngenerators = [ { th = 2, exponent = \"3\" } ]\n"),
               ParseError);
  EXPECT_THROW(parse_model("group = \"R\"\nprecision = \"4\"\n"), ParseError);
}

TEST(ModelIo, GrownPath) {
  EXPECT_EQ(grown_model_path("models/base.toml"), "models/base.grown.toml");
  EXPECT_EQ(grown_model_path("m.toml"), "m.grown.toml");
}
