#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "toric/poly.hpp"
#include "toric/separation.hpp"
#include "toric/verdict.hpp"

namespace toric::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kAuditFailed = 1,
  kInvalidInput = 2,
  kNoBoundedComponent = 3,
  kNumericFailure = 4,
};

/// Parsed system document, e.g.
///   {"kind": "frozen-hill", "m": 1, "g": "1", "f": "2"}
///   {"kind": "custom", "m": 1, "f": 1,
///    "custom_G": [{"coefficient": "1/2", "e1": 2, "e2": 0}]}
/// Reals may be JSON numbers or strings ("p/q" or decimals); both are read exactly.
struct SystemSpec {
  SystemKind kind = SystemKind::Kepler;
  SystemParams params;
};

SystemSpec parse_system_spec(const std::string& json_text);
SystemSpec load_system_spec(const std::filesystem::path& path);

struct CoeffsOptions {
  long n = 1;
  bool json = false;
};

struct AnalyzeOptions {
  std::filesystem::path spec_path;
  int samples = 65;
  std::optional<std::filesystem::path> out;
  std::string format = "csv";
  double margin = 1e-3;
  double tolerance = 1e-9;
  unsigned threads = 1;
};

struct AuditOptions {
  long n_max = 8;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

int cmd_coeffs(const CoeffsOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditOptions& opts, std::ostream& out, std::ostream& err);

/// CSV with header `a,b,I1,I2,dI2_dI1,d2I2_dI12`, 17 significant digits.
void write_curve_csv(const MomentMapCurve& curve, std::ostream& os);
void write_curve_json(const MomentMapCurve& curve, std::ostream& os);

/// Full command line: `toric <coeffs|analyze|curve|audit> [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
