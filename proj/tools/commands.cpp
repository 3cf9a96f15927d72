#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "dwmd/detector.hpp"
#include "dwmd/filters.hpp"
#include "dwmd/metrics.hpp"
#include "dwmd/noise.hpp"
#include "dwmd/pgm.hpp"

namespace dwmd::cli {
namespace {

using Row = std::vector<std::string>;

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string Percent(double level) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g%%", level * 100.0);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void EmitTable(std::ostream& out, ReportFormat format, const Row& header,
               const std::vector<Row>& rows) {
  switch (format) {
    case ReportFormat::kCsv: {
      auto line = [&](const Row& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          out << (c ? "," : "") << CsvField(r[c]);
        }
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      break;
    }
    case ReportFormat::kMarkdown: {
      auto line = [&](const Row& r) {
        out << "|";
        for (const auto& cell : r) out << " " << cell << " |";
        out << "\n";
      };
      line(header);
      out << "|";
      for (std::size_t c = 0; c < header.size(); ++c) {
        out << (c == 0 ? " --- |" : " ---: |");
      }
      out << "\n";
      for (const auto& r : rows) line(r);
      break;
    }
    case ReportFormat::kText: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
      }
      auto line = [&](const Row& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          if (c) out << "  ";
          out << r[c];
          if (c + 1 < r.size()) out << std::string(width[c] - r[c].size(), ' ');
        }
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      break;
    }
  }
}

// One record: key=value lines for text, a one-row table otherwise.
void EmitRecord(std::ostream& out, ReportFormat format,
                const std::vector<std::pair<std::string, std::string>>& kv) {
  if (format == ReportFormat::kText) {
    for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
    return;
  }
  Row header;
  Row row;
  for (const auto& [k, v] : kv) {
    header.push_back(k);
    row.push_back(v);
  }
  EmitTable(out, format, header, {row});
}

bool CheckLevel(double level, std::ostream& err) {
  if (!std::isfinite(level) || level < 0.0 || level > 1.0) {
    err << "usage error: noise level must be in [0, 1]\n";
    return false;
  }
  return true;
}

bool CheckFilterParams(int threshold, int step, std::ostream& err) {
  if (threshold < 0) {
    err << "usage error: threshold must be nonnegative\n";
    return false;
  }
  if (step < 1) {
    err << "usage error: step must be at least 1\n";
    return false;
  }
  return true;
}

FilterParams MakeFilterParams(int threshold, int step) {
  FilterParams p;
  p.detection.threshold = threshold;
  p.step = step;
  return p;
}

template <class Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int cmd_corrupt(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  if (!CheckLevel(config.level, err)) return kUsage;
  return Guarded(err, [&] {
    const GrayImage img = load_pgm(config.input);
    const NoisyImage noisy = inject_rvin(img, {config.level, config.seed});
    save_pgm(config.output, noisy.image, config.ascii);
    if (!config.mask.empty()) {
      save_pgm(config.mask, mask_to_image(noisy.mask), config.ascii);
    }
    out << "corrupted " << noisy.mask.count() << " of " << img.size()
        << " pixels\n";
    return kOk;
  });
}

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!CheckFilterParams(config.threshold, config.step, err)) return kUsage;
  return Guarded(err, [&] {
    const GrayImage img = load_pgm(config.input);
    DetectionParams params;
    params.threshold = config.threshold;
    const DetectionMap map = detect(img, params);
    save_pgm(config.output, mask_to_image(map.noisy), config.ascii);
    if (!config.histogram.empty()) {
      std::map<std::uint32_t, std::size_t> counts;
      for (auto r : map.statistic) ++counts[r];
      std::ofstream hist(config.histogram);
      if (!hist) throw Error("cannot write " + config.histogram);
      hist << "# statistic count\n";
      for (const auto& [r, n] : counts) hist << r << " " << n << "\n";
    }
    out << "flagged " << map.noisy.count() << " of " << img.size()
        << " pixels\n";
    return kOk;
  });
}

int cmd_denoise(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  if (!CheckFilterParams(config.threshold, config.step, err)) return kUsage;
  return Guarded(err, [&] {
    const GrayImage img = load_pgm(config.input);
    if (config.filter == FilterKind::kMedian3x3) {
      save_pgm(config.output, median3x3(img), config.ascii);
      out << "median3x3 filtered " << img.size() << " pixels\n";
      return kOk;
    }
    const Restoration r =
        dwmd_denoise(img, MakeFilterParams(config.threshold, config.step));
    save_pgm(config.output, r.image, config.ascii);
    const auto flagged = r.detection.noisy.count();
    out << "flagged " << flagged << " of " << img.size()
        << " pixels, restored " << flagged << "\n";
    return kOk;
  });
}

int cmd_eval(const EvalConfig& config, std::ostream& out, std::ostream& err) {
  if (config.threshold < 0) {
    err << "usage error: threshold must be nonnegative\n";
    return kUsage;
  }
  if (!config.truth_mask.empty() && config.detection.empty() &&
      config.noisy.empty()) {
    err << "usage error: --mask needs --detection or --noisy\n";
    return kUsage;
  }
  return Guarded(err, [&] {
    const GrayImage ref = load_pgm(config.reference);
    const GrayImage test = load_pgm(config.test);
    const QualityReport q = evaluate(ref, test);
    std::vector<std::pair<std::string, std::string>> kv = {
        {"n_pixels", std::to_string(q.n_pixels)},
        {"mse", Fixed(q.mse, 6)},
        {"psnr_db", q.psnr.to_string(2)},
        {"fidelity", Fixed(q.fidelity, 6)},
    };
    if (!config.truth_mask.empty()) {
      const Mask truth = mask_from_image(load_pgm(config.truth_mask));
      Mask predicted = truth;
      if (!config.detection.empty()) {
        predicted = mask_from_image(load_pgm(config.detection));
      } else {
        DetectionParams params;
        params.threshold = config.threshold;
        predicted = detect(load_pgm(config.noisy), params).noisy;
      }
      const DetectionScore s = detection_score(truth, predicted);
      kv.insert(kv.end(), {
                              {"tp", std::to_string(s.true_positives)},
                              {"fp", std::to_string(s.false_positives)},
                              {"fn", std::to_string(s.false_negatives)},
                              {"tn", std::to_string(s.true_negatives)},
                              {"precision", Fixed(s.precision, 4)},
                              {"recall", Fixed(s.recall, 4)},
                          });
    }
    EmitRecord(out, config.format, kv);
    return kOk;
  });
}

int cmd_bench(const BenchConfig& config, std::ostream& out,
              std::ostream& err) {
  if (config.levels.empty()) {
    err << "usage error: at least one noise level is required\n";
    return kUsage;
  }
  for (double level : config.levels) {
    if (!CheckLevel(level, err)) return kUsage;
  }
  if (!CheckFilterParams(config.threshold, config.step, err)) return kUsage;

  return Guarded(err, [&] {
    const GrayImage original = load_pgm(config.image);
    const FilterParams params =
        MakeFilterParams(config.threshold, config.step);
    const Row header = {"level",        "noisy_psnr_db",  "median_psnr_db",
                        "dwmd_psnr_db", "dwmd_fidelity",  "precision",
                        "recall",       "dwmd_time_ms"};
    std::vector<Row> rows;
    for (std::size_t n = 0; n < config.levels.size(); ++n) {
      const double level = config.levels[n];
      const NoisyImage noisy = inject_rvin(original, {level, config.seed + n});
      const GrayImage median = median3x3(noisy.image);

      const auto start = std::chrono::steady_clock::now();
      const Restoration restored = dwmd_denoise(noisy.image, params);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;

      const DetectionScore score =
          detection_score(noisy.mask, restored.detection);
      rows.push_back({
          config.format == ReportFormat::kCsv ? Fixed(level, 4)
                                              : Percent(level),
          psnr(original, noisy.image).to_string(2),
          psnr(original, median).to_string(2),
          psnr(original, restored.image).to_string(2),
          Fixed(fidelity(original, restored.image), 6),
          Fixed(score.precision, 4),
          Fixed(score.recall, 4),
          config.timing ? Fixed(elapsed.count(), 1) : "-",
      });
    }
    EmitTable(out, config.format, header, rows);
    return kOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Directional weighted minimum deviation impulse-noise filter"};
  app.require_subcommand(1);

  const std::map<std::string, ReportFormat> formats = {
      {"text", ReportFormat::kText},
      {"csv", ReportFormat::kCsv},
      {"markdown", ReportFormat::kMarkdown}};
  const std::map<std::string, FilterKind> filters = {
      {"dwmd", FilterKind::kDwmd}, {"median3x3", FilterKind::kMedian3x3}};

  RunConfig run;
  EvalConfig eval;
  BenchConfig bench;

  auto* corrupt = app.add_subcommand("corrupt", "Inject random-valued impulse noise");
  corrupt->add_option("--in", run.input, "Input PGM")->required();
  corrupt->add_option("--out", run.output, "Corrupted PGM")->required();
  corrupt->add_option("--mask", run.mask, "Ground-truth mask PGM (0/255)");
  corrupt->add_option("--level", run.level, "Fraction of pixels to corrupt")
      ->required();
  corrupt->add_option("--seed", run.seed, "PRNG seed");
  corrupt->add_flag("--ascii", run.ascii, "Write P2 instead of P5");

  auto* detect_cmd = app.add_subcommand("detect", "Run the impulse detector");
  detect_cmd->add_option("--in", run.input, "Input PGM")->required();
  detect_cmd->add_option("--out", run.output, "Detection mask PGM (0/255)")
      ->required();
  detect_cmd->add_option("--threshold", run.threshold, "Detection threshold");
  detect_cmd->add_option("--histogram", run.histogram,
                         "Write a statistic histogram (text)");
  detect_cmd->add_flag("--ascii", run.ascii, "Write P2 instead of P5");

  auto* denoise = app.add_subcommand("denoise", "Restore a noisy image");
  denoise->add_option("--in", run.input, "Input PGM")->required();
  denoise->add_option("--out", run.output, "Restored PGM")->required();
  denoise->add_option("--threshold", run.threshold, "Detection threshold");
  denoise->add_option("--step", run.step, "Center-value walk increment");
  denoise->add_option("--filter", run.filter, "dwmd or median3x3")
      ->transform(CLI::CheckedTransformer(filters, CLI::ignore_case));
  denoise->add_flag("--ascii", run.ascii, "Write P2 instead of P5");

  auto* eval_cmd = app.add_subcommand("eval", "Compare two images");
  eval_cmd->add_option("--ref", eval.reference, "Reference PGM")->required();
  eval_cmd->add_option("--test", eval.test, "Test PGM")->required();
  eval_cmd->add_option("--mask", eval.truth_mask, "Ground-truth noise mask");
  eval_cmd->add_option("--detection", eval.detection, "Detection mask PGM");
  eval_cmd->add_option("--noisy", eval.noisy,
                       "Noisy PGM to run the detector on");
  eval_cmd->add_option("--threshold", eval.threshold, "Detection threshold");
  eval_cmd->add_option("--format", eval.format, "text, csv or markdown")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* bench_cmd = app.add_subcommand("bench", "Noise level sweep table");
  bench_cmd->add_option("--image", bench.image, "Clean PGM")->required();
  bench_cmd->add_option("--levels", bench.levels, "Comma-separated levels")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Base PRNG seed");
  bench_cmd->add_option("--threshold", bench.threshold, "Detection threshold");
  bench_cmd->add_option("--step", bench.step, "Center-value walk increment");
  bench_cmd->add_option("--format", bench.format, "text, csv or markdown")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  bench_cmd->add_flag("--timing,!--no-timing", bench.timing,
                      "Omit the wall-time column values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (corrupt->parsed()) return cmd_corrupt(run, out, err);
  if (detect_cmd->parsed()) return cmd_detect(run, out, err);
  if (denoise->parsed()) return cmd_denoise(run, out, err);
  if (eval_cmd->parsed()) return cmd_eval(eval, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace dwmd::cli
