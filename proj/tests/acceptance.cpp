// Acceptance gate: one PASS/FAIL line per criterion, exact checks only.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "dvf/cli.hpp"
#include "dvf/parse.hpp"
#include "dvf/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kSeed = 20261018;

const fs::path kSource = DVF_SOURCE_DIR;

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<GoldenCase> load_manifest() {
  const json m = json::parse(read_file(kSource / "tests/golden/manifest.json"));
  std::vector<GoldenCase> out;
  for (const auto& c : m) {
    GoldenCase g{c.at("name").get<std::string>(), {}};
    for (const auto& a : c.at("args")) {
      std::string s = a.get<std::string>();
      if (auto at = s.find("{models}"); at != std::string::npos) s.replace(at, 8, (kSource / "models").string());
      g.args.push_back(std::move(s));
    }
    out.push_back(std::move(g));
  }
  return out;
}

// "exit <code>" then the report stream.
std::string run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dvf::run_cli(args, out, err);
  return "exit " + std::to_string(code) + "\n" + out.str();
}

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Verdict round_trip() {
  Verdict v;
  std::istringstream in(read_file(kSource / "tests/golden/series.txt"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++n;
    try {
      const dvf::HahnSeries s = dvf::parse_series(line);
      const std::string printed = s.to_string();
      const dvf::HahnSeries back = dvf::parse_series(printed, {s.rank(), std::nullopt});
      if (!(back == s)) v.fail("round trip changed '" + line + "' (printed '" + printed + "')");
      if (back.to_string() != printed) v.fail("printing is not idempotent on '" + line + "'");
    } catch (const std::exception& e) {
      v.fail("'" + line + "': " + e.what());
    }
  }
  if (n < 20) v.fail("series corpus has only " + std::to_string(n) + " entries");
  return v;
}

Verdict golden(std::size_t& cases) {
  Verdict v;
  const auto manifest = load_manifest();
  cases = manifest.size();
  const fs::path reports = fs::temp_directory_path() / ("dvf_reports_" + std::to_string(::getpid()));
  fs::create_directories(reports);
  for (const auto& c : manifest) {
    const std::string first = run(c.args), second = run(c.args);
    if (first != second) v.fail(c.name + ": output differs between two runs");
    const fs::path expected = kSource / "tests/golden/expected" / (c.name + ".out");
    if (!fs::exists(expected))
      v.fail(c.name + ": no expected output");
    else if (read_file(expected) != first)
      v.fail(c.name + ": output differs from " + expected.filename().string());
    std::vector<std::string> with_json{"--json"};
    with_json.insert(with_json.end(), c.args.begin(), c.args.end());
    std::ostringstream out, err;
    dvf::run_cli(with_json, out, err);
    std::ofstream(reports / (c.name + ".json"), std::ios::binary) << out.str();
  }
  const std::string cmd = "python3 \"" + (kSource / "tests/validate_reports.py").string() + "\" \"" +
                          (kSource / "schema/report.schema.json").string() + "\" \"" + reports.string() + "\"";
  if (std::system(cmd.c_str()) != 0) v.fail("schema validation failed (see validator output above)");
  fs::remove_all(reports);
  return v;
}

int regenerate() {
  for (const auto& c : load_manifest()) {
    std::ofstream(kSource / "tests/golden/expected" / (c.name + ".out"), std::ios::binary) << run(c.args);
    std::cout << "wrote " << c.name << ".out\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--regen-golden") return regenerate();
  ::setenv("DVF_DATA_DIR", (kSource / "tests/data").c_str(), 0);
  int failed = 0;
  int index = 0;
  auto line = [&](bool ok, const std::string& name, const std::string& summary, const std::string& detail) {
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << ++index << ". " << name << ": " << summary;
    if (!ok && !detail.empty()) std::cout << "\n      first counterexample: " << detail;
    std::cout << std::endl;
  };
  for (const auto& s : dvf::math_suites()) {
    const dvf::SuiteResult r = s.run(kSeed);
    std::ostringstream summary;
    summary << r.cases << " cases, " << r.failures << " failures";
    line(r.passed(), s.name, summary.str(), r.first_counterexample);
  }
  std::size_t cases = 0;
  const Verdict rt = round_trip(), g = golden(cases);
  Verdict all = rt;
  if (!g.ok) all.fail(g.detail);
  line(all.ok, "cli-golden", std::to_string(cases) + " golden invocations, round trip, byte stability, schema", all.detail);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
