#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dwmd::cli {

enum class FilterKind { kDwmd, kMedian3x3 };
enum class ReportFormat { kText, kCsv, kMarkdown };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

struct RunConfig {
  std::string input;
  std::string output;
  std::string mask;       // corrupt: ground-truth mask output (optional)
  std::string histogram;  // detect: statistic histogram output (optional)
  double level = 0.0;
  std::uint64_t seed = 0;
  int threshold = 256;
  int step = 5;
  FilterKind filter = FilterKind::kDwmd;
  ReportFormat format = ReportFormat::kText;
  bool ascii = false;  // write P2 instead of P5
};

struct EvalConfig {
  std::string reference;
  std::string test;
  std::string truth_mask;  // optional ground truth for detector scoring
  std::string detection;   // detection mask PGM, or
  std::string noisy;       // image to run the detector on
  int threshold = 256;
  ReportFormat format = ReportFormat::kText;
};

struct BenchConfig {
  std::string image;
  std::vector<double> levels;
  std::uint64_t seed = 0;
  int threshold = 256;
  int step = 5;
  ReportFormat format = ReportFormat::kMarkdown;
  bool timing = true;
};

// Each command writes data to `out`, diagnostics to `err`, and returns an
// exit code.
int cmd_corrupt(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_denoise(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace dwmd::cli
