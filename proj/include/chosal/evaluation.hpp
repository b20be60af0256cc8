#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "chosal/image.hpp"

namespace chosal {

/// Strict threshold: pixel predicted salient iff value > threshold.
BinaryMask binarize(const GrayImage& map, int threshold);

struct PrPoint {
  double precision = 0.0;
  double recall = 0.0;
};

/// precision = TP/(TP+FP), recall = TP/(TP+FN). Empty predictions give
/// precision 1; empty ground truth gives recall 1.
PrPoint pr_at(const BinaryMask& pred, const BinaryMask& gt);

/// Weighted F-measure (1+b2)pr / (b2*p + r); 0 when the denominator is 0.
double f_measure(double precision, double recall, double beta2);

/// One (precision, recall) pair per threshold 0..255, computed from a single
/// histogram pass rather than 256 re-scans.
struct PrCurve {
  std::array<PrPoint, 256> points;
};

PrCurve pr_curve(const GrayImage& map, const BinaryMask& gt);

struct EvalRow {
  std::string id;
  double best_f = 0.0;
  int best_threshold = 0;
  double precision = 0.0;  // at best threshold
  double recall = 0.0;
  double adaptive_f = 0.0;  // threshold 2 * mean saliency, capped at 255
};

struct SkippedFile {
  std::string id;
  std::string reason;
};

struct EvalReport {
  std::vector<EvalRow> rows;  // ordered by id
  PrCurve corpus_curve;       // per-threshold mean of per-image P and R
  double corpus_best_f = 0.0;
  int corpus_best_threshold = 0;
  double corpus_precision = 0.0;
  double corpus_recall = 0.0;
  double corpus_adaptive_f = 0.0;  // mean over images
  double beta2 = 0.3;
  std::vector<SkippedFile> skipped;
  std::string config_json;  // echoed into the JSON report

  bool empty() const { return rows.empty(); }
};

struct EvalOptions {
  double beta2 = 0.3;
  int workers = 0;  // 0 = hardware concurrency
  std::string config_json = "{}";
};

/// Produces the saliency map for one image path (pipeline run or a
/// precomputed map load); exceptions skip the image with their message.
using MapProvider = std::function<GrayImage(const std::string& image_path)>;

/// Sweeps image_dir (*.png), pairs each stem with mask_dir/<stem>.png, maps
/// through the provider, and aggregates. Per-image work runs on a worker
/// pool; the reduction is ordered by stem, so reports are deterministic for
/// any worker count.
EvalReport eval_dataset(const std::string& image_dir, const std::string& mask_dir,
                        const MapProvider& provider, const EvalOptions& options);

/// CSV rows `image,best_f,precision,recall,adaptive_f` plus a final CORPUS
/// row; JSON carries the full corpus curve, config echo, and skip list.
void write_report_csv(const EvalReport& report, const std::string& path);
void write_report_json(const EvalReport& report, const std::string& path);

}  // namespace chosal
