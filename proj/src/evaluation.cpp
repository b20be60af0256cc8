#include "chosal/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace fs = std::filesystem;

namespace chosal {

BinaryMask binarize(const GrayImage& map, int threshold) {
  BinaryMask mask(map.width, map.height);
  for (std::size_t i = 0; i < map.data.size(); ++i) {
    mask.data[i] = map.data[i] > threshold ? 1 : 0;
  }
  return mask;
}

PrPoint pr_at(const BinaryMask& pred, const BinaryMask& gt) {
  if (pred.width != gt.width || pred.height != gt.height) {
    throw std::invalid_argument("pr_at: dimension mismatch");
  }
  long long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < pred.data.size(); ++i) {
    const bool p = pred.data[i] != 0;
    const bool g = gt.data[i] != 0;
    tp += p && g;
    fp += p && !g;
    fn += !p && g;
  }
  PrPoint out;
  out.precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 1.0;
  out.recall = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 1.0;
  return out;
}

double f_measure(double precision, double recall, double beta2) {
  const double denom = beta2 * precision + recall;
  if (denom <= 0.0) return 0.0;
  return (1.0 + beta2) * precision * recall / denom;
}

PrCurve pr_curve(const GrayImage& map, const BinaryMask& gt) {
  if (map.width != gt.width || map.height != gt.height) {
    throw std::invalid_argument("pr_curve: dimension mismatch");
  }

  // Histograms of map values, split by ground truth; suffix sums then give
  // TP and prediction counts for every strict threshold at once.
  std::array<long long, 256> hist_pos{};
  std::array<long long, 256> hist_all{};
  long long gt_count = 0;
  for (std::size_t i = 0; i < map.data.size(); ++i) {
    hist_all[map.data[i]] += 1;
    if (gt.data[i] != 0) {
      hist_pos[map.data[i]] += 1;
      ++gt_count;
    }
  }

  PrCurve curve;
  long long tp = 0, pred = 0;
  for (int t = 255; t >= 0; --t) {
    // Counts for threshold t cover values strictly above t.
    PrPoint& point = curve.points[t];
    point.precision = pred > 0 ? static_cast<double>(tp) / pred : 1.0;
    point.recall = gt_count > 0 ? static_cast<double>(tp) / gt_count : 1.0;
    tp += hist_pos[t];
    pred += hist_all[t];
  }
  return curve;
}

namespace {

double adaptive_f(const GrayImage& map, const BinaryMask& gt, double beta2) {
  double mean = 0.0;
  for (const std::uint8_t v : map.data) mean += v;
  mean /= static_cast<double>(map.data.size());
  const double threshold = std::min(255.0, 2.0 * mean);

  long long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < map.data.size(); ++i) {
    const bool p = map.data[i] > threshold;
    const bool g = gt.data[i] != 0;
    tp += p && g;
    fp += p && !g;
    fn += !p && g;
  }
  const double precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 1.0;
  const double recall = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 1.0;
  return f_measure(precision, recall, beta2);
}

struct ImageOutcome {
  bool ok = false;
  std::string reason;
  EvalRow row;
  PrCurve curve;
};

}  // namespace

EvalReport eval_dataset(const std::string& image_dir, const std::string& mask_dir,
                        const MapProvider& provider, const EvalOptions& options) {
  std::vector<std::pair<std::string, fs::path>> images;  // (stem, path), sorted by stem
  if (fs::is_directory(image_dir)) {
    for (const auto& entry : fs::directory_iterator(image_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".png") {
        images.emplace_back(entry.path().stem().string(), entry.path());
      }
    }
  }
  std::sort(images.begin(), images.end());

  EvalReport report;
  report.beta2 = options.beta2;
  report.config_json = options.config_json;

  std::vector<ImageOutcome> outcomes(images.size());
  std::atomic<std::size_t> next{0};
  int workers = options.workers > 0 ? options.workers
                                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(images.size())));

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < images.size(); i = next.fetch_add(1)) {
      const auto& [stem, path] = images[i];
      ImageOutcome& out = outcomes[i];
      const fs::path mask_path = fs::path(mask_dir) / (stem + ".png");
      if (!fs::exists(mask_path)) {
        out.reason = "no matching mask";
        continue;
      }
      try {
        const GrayImage map = provider(path.string());
        const BinaryMask gt = load_mask(mask_path.string());
        if (map.width != gt.width || map.height != gt.height) {
          out.reason = "dimension mismatch between map and mask";
          continue;
        }
        out.curve = pr_curve(map, gt);
        out.row.id = stem;
        out.row.best_f = -1.0;
        for (int t = 0; t < 256; ++t) {
          const double f =
              f_measure(out.curve.points[t].precision, out.curve.points[t].recall, options.beta2);
          if (f > out.row.best_f) {
            out.row.best_f = f;
            out.row.best_threshold = t;
            out.row.precision = out.curve.points[t].precision;
            out.row.recall = out.curve.points[t].recall;
          }
        }
        out.row.adaptive_f = adaptive_f(map, gt, options.beta2);
        out.ok = true;
      } catch (const std::exception& e) {
        out.reason = e.what();
      }
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Deterministic reduction in stem order.
  std::array<double, 256> sum_p{};
  std::array<double, 256> sum_r{};
  double sum_adaptive = 0.0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const ImageOutcome& out = outcomes[i];
    if (!out.ok) {
      report.skipped.push_back({images[i].first, out.reason});
      continue;
    }
    report.rows.push_back(out.row);
    for (int t = 0; t < 256; ++t) {
      sum_p[t] += out.curve.points[t].precision;
      sum_r[t] += out.curve.points[t].recall;
    }
    sum_adaptive += out.row.adaptive_f;
  }

  const std::size_t n = report.rows.size();
  if (n > 0) {
    report.corpus_best_f = -1.0;
    for (int t = 0; t < 256; ++t) {
      report.corpus_curve.points[t].precision = sum_p[t] / n;
      report.corpus_curve.points[t].recall = sum_r[t] / n;
      const double f = f_measure(report.corpus_curve.points[t].precision,
                                 report.corpus_curve.points[t].recall, options.beta2);
      if (f > report.corpus_best_f) {
        report.corpus_best_f = f;
        report.corpus_best_threshold = t;
        report.corpus_precision = report.corpus_curve.points[t].precision;
        report.corpus_recall = report.corpus_curve.points[t].recall;
      }
    }
    report.corpus_adaptive_f = sum_adaptive / n;
  }
  return report;
}

void write_report_csv(const EvalReport& report, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write report: " + path);
  os << "image,best_f,precision,recall,adaptive_f\n";
  os.precision(6);
  os << std::fixed;
  for (const EvalRow& row : report.rows) {
    os << row.id << ',' << row.best_f << ',' << row.precision << ',' << row.recall << ','
       << row.adaptive_f << '\n';
  }
  os << "CORPUS," << report.corpus_best_f << ',' << report.corpus_precision << ','
     << report.corpus_recall << ',' << report.corpus_adaptive_f << '\n';
}

void write_report_json(const EvalReport& report, const std::string& path) {
  nlohmann::json j;
  j["beta2"] = report.beta2;
  auto config = nlohmann::json::parse(report.config_json, nullptr, false);
  j["config"] = config.is_discarded() ? nlohmann::json(report.config_json) : config;
  j["corpus"] = {
      {"best_f", report.corpus_best_f},
      {"best_threshold", report.corpus_best_threshold},
      {"precision", report.corpus_precision},
      {"recall", report.corpus_recall},
      {"adaptive_f", report.corpus_adaptive_f},
  };
  auto& curve = j["corpus"]["curve"] = nlohmann::json::array();
  for (int t = 0; t < 256; ++t) {
    curve.push_back({{"threshold", t},
                     {"precision", report.corpus_curve.points[t].precision},
                     {"recall", report.corpus_curve.points[t].recall}});
  }
  auto& rows = j["images"] = nlohmann::json::array();
  for (const EvalRow& row : report.rows) {
    rows.push_back({{"id", row.id},
                    {"best_f", row.best_f},
                    {"best_threshold", row.best_threshold},
                    {"precision", row.precision},
                    {"recall", row.recall},
                    {"adaptive_f", row.adaptive_f}});
  }
  auto& skipped = j["skipped"] = nlohmann::json::array();
  for (const SkippedFile& s : report.skipped) {
    skipped.push_back({{"id", s.id}, {"reason", s.reason}});
  }

  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write report: " + path);
  os << j.dump(2) << '\n';
}

}  // namespace chosal
