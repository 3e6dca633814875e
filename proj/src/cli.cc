/* Copyright 2026 The RPCP Augment Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "rpcp/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rpcp/config.h"
#include "rpcp/dataset_io.h"
#include "rpcp/metrics.h"
#include "rpcp/patch_bank.h"
#include "rpcp/pipeline.h"

namespace rpcp {

namespace fs = std::filesystem;

namespace {

struct CommonFlags {
  std::string config_path;
  std::string images;
  std::string masks;
  std::string out;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

AugConfig ResolveConfig(const CommonFlags& f) {
  AugConfig cfg = f.config_path.empty() ? ParseConfig("")
                                        : LoadConfigFile(f.config_path);
  if (f.seed) cfg.seed = *f.seed;
  return cfg;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failure: " + path.string());
}

std::vector<double> ParseList(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(flag + ": not a number: '" + item + "'");
    }
  }
  if (values.empty()) throw ConfigError(flag + ": empty list");
  return values;
}

int CmdExtract(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const AugConfig cfg = ResolveConfig(f);
  const auto pairs = ScanDataset(f.images, f.masks);
  if (pairs.empty()) throw IoError("no image/mask pairs found in " + f.images);
  const PatchBank bank = BuildBank(pairs, cfg, f.jobs);
  SaveBank(bank, f.out);
  const BankSummary summary = bank.Summarize(pairs.size());
  WriteFile(fs::path(f.out) / "summary.json", SummaryToJson(summary) + "\n");
  for (const auto& w : summary.warnings) err << "warning: " << w << "\n";
  out << "extracted " << summary.patch_count << " patches from "
      << summary.pair_count << " pairs into " << f.out << "\n";
  return kExitOk;
}

int CmdAugment(const CommonFlags& f, const std::string& bank_dir,
               std::ostream& out, std::ostream& err) {
  AugmentOptions opts;
  opts.config = ResolveConfig(f);
  opts.image_dir = f.images;
  opts.mask_dir = f.masks;
  opts.out_dir = f.out;
  opts.jobs = f.jobs;
  if (!bank_dir.empty()) opts.bank_dir = bank_dir;
  const AugmentResult result = RunAugment(opts);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  for (const auto& rec : result.records) {
    if (rec.error) err << "warning: " << rec.id << ": " << *rec.error << "\n";
  }
  const auto& s = result.summary;
  out << "augmented " << s.images_processed << " images (" << s.images_failed
      << " failed); pastes: " << s.pastes_succeeded << " succeeded, "
      << s.pastes_failed << " failed; output in " << f.out << "\n";
  return kExitOk;
}

int CmdStats(const CommonFlags& f, int sample_pixels, std::ostream& out) {
  const AugConfig cfg = ResolveConfig(f);
  const ClassScheme& scheme = cfg.class_scheme;
  const auto stems = ListPngStems(f.masks);
  if (stems.empty()) throw IoError("no masks found in " + f.masks);

  PixelDistribution dist = EmptyDistribution(scheme);
  for (const auto& stem : stems) {
    dist += LoadLabelMap((fs::path(f.masks) / (stem + ".png")).string(), scheme);
  }
  FinalizeDistribution(dist, scheme);
  const std::string text = DistributionToText(dist, scheme);
  out << text;
  if (!f.out.empty()) {
    WriteFile(fs::path(f.out) / "distribution.json",
              DistributionToJson(dist, scheme) + "\n");
    WriteFile(fs::path(f.out) / "distribution.txt", text);
  }
  if (sample_pixels > 0) {
    if (f.images.empty()) throw ConfigError("--sample-pixels requires --images");
    const auto pairs = ScanDataset(f.images, f.masks);
    const auto rows = SamplePixels(pairs, scheme, sample_pixels, cfg.seed);
    const fs::path csv = fs::path(f.out.empty() ? "." : f.out) / "pixels.csv";
    WriteFile(csv, PixelSamplesToCsv(rows));
    out << "wrote " << rows.size() << " pixel samples to " << csv.string() << "\n";
  }
  return kExitOk;
}

int CmdEvalAggregate(const std::string& iou_list, const std::string& acc_list,
                     std::ostream& out) {
  const auto ious = ParseList(iou_list, "--per-class-iou");
  const auto accs = ParseList(acc_list, "--per-class-acc");
  std::ostringstream line;
  line << std::fixed << std::setprecision(2) << "mIoU " << MeanOf(ious)
       << "\nmAcc " << MeanOf(accs) << "\n";
  out << line.str();
  return kExitOk;
}

int CmdEval(const CommonFlags& f, const std::string& pred_dir,
            const std::string& gt_dir, std::ostream& out) {
  const AugConfig cfg = ResolveConfig(f);
  const ClassScheme& scheme = cfg.class_scheme;
  const auto pairs = ScanDataset(pred_dir, gt_dir);
  if (pairs.empty()) throw IoError("no prediction/ground-truth pairs in " + pred_dir);

  // Predictions may carry any byte value; out-of-scheme values count as
  // misses rather than load errors.
  ClassScheme any = scheme;
  any.class_count = 256;
  ConfusionCounts total(scheme.class_count);
  for (const auto& p : pairs) {
    const LabelMap pred = LoadLabelMap(p.image_path, any);
    const LabelMap gt = LoadLabelMap(p.mask_path, scheme);
    try {
      total += Confusion(pred, gt, scheme);
    } catch (const DataError& e) {
      throw DataError("pair '" + p.id + "': " + e.what());
    }
  }
  const MetricReport report = BuildReport(total, scheme);
  const std::string text = ReportToText(report);
  out << text;
  if (!f.out.empty()) {
    WriteFile(fs::path(f.out) / "metrics.json", ReportToJson(report) + "\n");
    WriteFile(fs::path(f.out) / "metrics.txt", text);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Rare-class copy-paste augmentation with random-projection refinement",
               "rpcp"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
  };

  auto* extract = app.add_subcommand("extract", "Build a patch bank archive");
  add_config(extract);
  extract->add_option("--images", flags.images, "Image directory")->required();
  extract->add_option("--masks", flags.masks, "Mask directory")->required();
  extract->add_option("--out", flags.out, "Bank output directory")->required();
  extract->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string bank_dir;
  auto* augment = app.add_subcommand("augment", "Augment a dataset");
  add_config(augment);
  augment->add_option("--images", flags.images, "Image directory")->required();
  augment->add_option("--masks", flags.masks, "Mask directory")->required();
  augment->add_option("--out", flags.out, "Output directory")->required();
  augment->add_option("--seed", flags.seed, "Master seed (overrides config)");
  augment->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  augment->add_option("--bank", bank_dir, "Use a bank archive from `extract`");

  int sample_pixels = 0;
  auto* stats = app.add_subcommand("stats", "Per-class pixel distribution");
  add_config(stats);
  stats->add_option("--images", flags.images, "Image directory (for sampling)");
  stats->add_option("--masks", flags.masks, "Mask directory")->required();
  stats->add_option("--out", flags.out, "Report directory");
  stats->add_option("--seed", flags.seed, "Sampling seed (overrides config)");
  stats->add_option("--sample-pixels", sample_pixels,
                    "Export up to N pixels per class as CSV")
      ->check(CLI::NonNegativeNumber);

  std::string pred_dir, gt_dir, iou_list, acc_list;
  auto* eval = app.add_subcommand("eval", "IoU / accuracy of predicted masks");
  add_config(eval);
  eval->add_option("--pred", pred_dir, "Predicted mask directory");
  eval->add_option("--gt", gt_dir, "Ground-truth mask directory");
  eval->add_option("--out", flags.out, "Report directory");
  eval->add_option("--per-class-iou", iou_list,
                   "Aggregate printed per-class IoU values (comma list)");
  eval->add_option("--per-class-acc", acc_list,
                   "Aggregate printed per-class Acc values (comma list)");

  std::vector<std::string> reversed(args.size() > 1 ? args.size() - 1 : 0);
  std::reverse_copy(args.begin() + (args.empty() ? 0 : 1), args.end(),
                    reversed.begin());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (extract->parsed()) return CmdExtract(flags, out, err);
    if (augment->parsed()) return CmdAugment(flags, bank_dir, out, err);
    if (stats->parsed()) return CmdStats(flags, sample_pixels, out);
    if (eval->parsed()) {
      if (!iou_list.empty() || !acc_list.empty()) {
        if (iou_list.empty() || acc_list.empty()) {
          throw ConfigError("--per-class-iou and --per-class-acc go together");
        }
        return CmdEvalAggregate(iou_list, acc_list, out);
      }
      if (pred_dir.empty() || gt_dir.empty()) {
        throw ConfigError("eval needs --pred and --gt");
      }
      return CmdEval(flags, pred_dir, gt_dir, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitDataMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rpcp
