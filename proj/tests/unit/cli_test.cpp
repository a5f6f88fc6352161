#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "toric/error.hpp"

namespace {

namespace fs = std::filesystem;
using namespace toric;
using namespace toric::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "toric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("toric_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                         ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliSpec, ParsesRationalStringsAndNumbers) {
  auto spec = parse_system_spec(R"({"kind": "frozen-hill", "m": 1, "g": "1/3", "f": 0.1})");
  EXPECT_EQ(spec.kind, SystemKind::FrozenHill);
  EXPECT_EQ(spec.params.m, 1);
  EXPECT_EQ(spec.params.g, Rational(1, 3));
  EXPECT_EQ(spec.params.f, Rational(1, 10));
}

TEST(CliSpec, ParsesCustomTermsInBothShapes) {
  auto a = parse_system_spec(R"({"kind": "custom", "f": 1, "custom_G": [{"coefficient": "1/2", "e1": 2, "e2": 0}]})");
  auto b = parse_system_spec(R"({"kind": "custom", "f": 1, "custom_G": [["1/2", 2, 0]]})");
  EXPECT_EQ(a.params.custom_g, b.params.custom_g);
  EXPECT_EQ(a.params.custom_g, BivariatePoly::monomial(Rational(1, 2), 2, 0));
}

TEST(CliSpec, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_system_spec("not json"), InvalidArgument);
  EXPECT_THROW(parse_system_spec("[1, 2]"), InvalidArgument);
  EXPECT_THROW(parse_system_spec(R"({"m": 1})"), InvalidArgument);
  EXPECT_THROW(parse_system_spec(R"({"kind": "pendulum"})"), InvalidArgument);
  EXPECT_THROW(parse_system_spec(R"({"kind": "generalized", "n": 0})"), InvalidArgument);
  EXPECT_THROW(parse_system_spec(R"({"kind": "custom"})"), InvalidArgument);
  EXPECT_THROW(parse_system_spec(R"({"kind": "stark", "g": true})"), InvalidArgument);
  EXPECT_THROW(parse_system_spec(R"({"kind": "stark", "g": "1/0"})"), InvalidArgument);
}

TEST(CliCoeffs, OrderOneText) {
  auto r = run_cli({"coeffs", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C: 1 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("D: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("all-positive: true"), std::string::npos);
}

TEST(CliCoeffs, OrderFiveJson) {
  auto r = run_cli({"coeffs", "--n", "5", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"cn_is_one\": true"), std::string::npos);
  EXPECT_NE(r.out.find("\"231\""), std::string::npos);
}

TEST(CliCoeffs, InvalidOrder) {
  EXPECT_EQ(run_cli({"coeffs", "--n", "0"}).code, 2);
  EXPECT_EQ(run_cli({"coeffs", "--n", "-3"}).code, 2);
  EXPECT_EQ(run_cli({"coeffs", "--n", "65"}).code, 2);
  EXPECT_EQ(run_cli({"coeffs"}).code, 2);
}

TEST(CliArgs, UnknownSubcommandAndHelp) {
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  auto h = run_cli({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("analyze"), std::string::npos);
}

TEST(CliAnalyze, FrozenHillConcave) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "frozen-hill", "m": 1, "g": 1, "f": 2})");
  auto r = run_cli({"analyze", spec});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: concave (Criterion 3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("energy regime: below first critical value"), std::string::npos);
}

TEST(CliAnalyze, AboveFirstCriticalValue) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "frozen-hill", "m": 1, "g": 1, "f": 1})");
  auto r = run_cli({"analyze", spec});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("energy above first critical value"), std::string::npos);
}

TEST(CliAnalyze, NotSeparable) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "custom", "m": 1, "f": 1, "custom_G": [{"coefficient": "1", "e1": 1, "e2": 1}]})");
  auto r = run_cli({"analyze", spec});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not separable"), std::string::npos);
}

TEST(CliAnalyze, InvalidInputs) {
  TempDir dir;
  auto good = dir.write("s.json", R"({"kind": "kepler", "m": 1, "f": 1})");
  EXPECT_EQ(run_cli({"analyze", dir.file("missing.json")}).code, 2);
  EXPECT_EQ(run_cli({"analyze", dir.write("bad.json", R"({"kind": "stark", "m": -1, "g": 1, "f": 1})")}).code, 2);
  EXPECT_EQ(run_cli({"analyze", good, "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", good, "--samples", "1"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", good, "--margin", "0.7"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", good, "--threads", "0"}).code, 2);
}

TEST(CliAnalyze, NoBoundedComponentForStarkAtSmallF) {
  TempDir dir;
  // V(u) = u/10 - u^2 peaks at 1/400 < m.
  auto spec = dir.write("s.json", R"({"kind": "stark", "m": 1, "g": 1, "f": "1/10"})");
  auto r = run_cli({"analyze", spec});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(CliAnalyze, IndeterminateExitsZero) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "stark", "m": 1, "g": "1/10", "f": 1})");
  auto r = run_cli({"analyze", spec});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: "), std::string::npos);
}

TEST(CliCurve, CsvLayout) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "frozen-hill", "m": 1, "g": 1, "f": 2})");
  auto out = dir.file("c.csv");
  auto r = run_cli({"curve", spec, "--out", out, "--samples", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "a,b,I1,I2,dI2_dI1,d2I2_dI12");
  int rows = 0;
  double prev_a = -1.0;
  while (std::getline(csv, line)) {
    ++rows;
    double a = std::stod(line.substr(0, line.find(',')));
    EXPECT_GT(a, prev_a);
    prev_a = a;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
  }
  EXPECT_EQ(rows, 9);
}

TEST(CliCurve, OutIsMandatory) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "frozen-hill", "m": 1, "g": 1, "f": 2})");
  EXPECT_EQ(run_cli({"curve", spec}).code, 2);
}

TEST(CliCurve, JsonFormat) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "kepler", "m": 1, "f": 1})");
  auto out = dir.file("c.json");
  ASSERT_EQ(run_cli({"analyze", spec, "--out", out, "--format", "json", "--samples", "5"}).code, 0);
  auto text = slurp(out);
  EXPECT_NE(text.find("\"d2I2_dI12\""), std::string::npos);
  EXPECT_NE(text.find("\"rows\""), std::string::npos);
}

TEST(CliCurve, ThreadCountDoesNotChangeOutput) {
  TempDir dir;
  auto spec = dir.write("s.json", R"({"kind": "stark", "m": 1, "g": 1, "f": 3})");
  std::vector<std::string> files, reports;
  for (const char* t : {"1", "3"}) {
    auto out = dir.file(std::string("c") + t + ".csv");
    auto r = run_cli({"analyze", spec, "--out", out, "--samples", "17", "--threads", t});
    ASSERT_EQ(r.code, 0) << r.err;
    files.push_back(slurp(out));
    reports.push_back(r.out.substr(0, r.out.find("curve written")));
  }
  EXPECT_EQ(files[0], files[1]);
  EXPECT_EQ(reports[0], reports[1]);
}

TEST(CliAudit, SmallRunPasses) {
  auto r = run_cli({"audit", "--n-max", "4", "--mc-samples", "200000", "--threads", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("identity audit: 0 mismatches"), std::string::npos);
  EXPECT_NE(r.out.find("audit: PASS"), std::string::npos);
}

TEST(CliAudit, InvalidFlags) {
  EXPECT_EQ(run_cli({"audit", "--n-max", "0"}).code, 2);
  EXPECT_EQ(run_cli({"audit", "--mc-samples", "5"}).code, 2);
}

}  // namespace
