#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chosal/evaluation.hpp"
#include "chosal/geometry.hpp"
#include "chosal/pipeline.hpp"

namespace fs = std::filesystem;
using namespace chosal;

namespace {

struct Overrides {
  std::optional<double> sigma_c2, sigma_s2, sigma_w2;
  std::optional<double> scale_k, smooth_sigma, beta2;
  std::optional<int> min_size, workers;
  std::vector<int> layer_counts;  // empty = keep
};

struct CommonArgs {
  std::string config_path;
  Overrides over;
};

void add_config_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file; flags override its values")
      ->check(CLI::ExistingFile);
  cmd->add_option("--sigma-c2", args.over.sigma_c2, "color falloff of the region-graph weights");
  cmd->add_option("--sigma-s2", args.over.sigma_s2, "spatial falloff (graph and contrast cue)");
  cmd->add_option("--sigma-w2", args.over.sigma_w2, "center-prior falloff of the contrast cue");
  cmd->add_option("--scale-k", args.over.scale_k, "over-segmentation scale k");
  cmd->add_option("--min-size", args.over.min_size, "minimum over-segmentation region size");
  cmd->add_option("--smooth-sigma", args.over.smooth_sigma, "pre-segmentation Gaussian sigma");
  cmd->add_option("--beta2", args.over.beta2, "F-measure beta^2");
  cmd->add_option("--layer-counts", args.over.layer_counts,
                  "hierarchy snapshot sizes, strictly increasing")
      ->delimiter(',');
  cmd->add_option("--workers", args.over.workers, "eval worker count (0 = hardware)");
}

PipelineConfig resolve_config(const CommonArgs& args) {
  PipelineConfig config =
      args.config_path.empty() ? PipelineConfig{} : load_config_file(args.config_path);
  if (const char* env = std::getenv("CHOSAL_WORKERS")) {
    config.workers = std::atoi(env);
  }
  const Overrides& o = args.over;
  if (o.sigma_c2) config.sigma_c2 = *o.sigma_c2;
  if (o.sigma_s2) config.sigma_s2 = *o.sigma_s2;
  if (o.sigma_w2) config.sigma_w2 = *o.sigma_w2;
  if (o.scale_k) config.felz_scale_k = *o.scale_k;
  if (o.min_size) config.felz_min_size = *o.min_size;
  if (o.smooth_sigma) config.felz_smooth_sigma = *o.smooth_sigma;
  if (o.beta2) config.beta2 = *o.beta2;
  if (o.workers) config.workers = *o.workers;
  if (!o.layer_counts.empty()) config.layer_counts = o.layer_counts;
  validate_config(config);
  return config;
}

RgbImage render_labels(int width, int height, const std::vector<int>& labels, int num_regions) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> channel(0, 255);
  std::vector<std::array<std::uint8_t, 3>> palette(num_regions);
  for (auto& color : palette) {
    color = {static_cast<std::uint8_t>(channel(rng)), static_cast<std::uint8_t>(channel(rng)),
             static_cast<std::uint8_t>(channel(rng))};
  }
  RgbImage out(width, height);
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const auto& color = palette[labels[p]];
    out.data[p * 3] = color[0];
    out.data[p * 3 + 1] = color[1];
    out.data[p * 3 + 2] = color[2];
  }
  return out;
}

void draw_segment(RgbImage& img, Point a, Point b) {
  const double steps = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), 1.0}) * 2.0;
  const int n = static_cast<int>(std::ceil(steps));
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const int x = static_cast<int>(std::llround(a.x + (b.x - a.x) * t - 0.5));
    const int y = static_cast<int>(std::llround(a.y + (b.y - a.y) * t - 0.5));
    if (x < 0 || x >= img.width || y < 0 || y >= img.height) continue;
    const std::size_t p = (static_cast<std::size_t>(y) * img.width + x) * 3;
    img.data[p] = img.data[p + 1] = img.data[p + 2] = 255;
  }
}

void overlay_hulls(RgbImage& img, const HierarchyLayer& layer) {
  for (const RegionStats& region : layer.regions) {
    std::vector<Point> centers;
    centers.reserve(region.pixels.size());
    for (int p : region.pixels) {
      centers.push_back({p % img.width + 0.5, p / img.width + 0.5});
    }
    const HullPoly hull = convex_hull(centers);
    const auto& v = hull.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      draw_segment(img, v[i], v[(i + 1) % v.size()]);
    }
  }
}

void dump_layers(const PipelineResult& result, const std::string& dir) {
  fs::create_directories(dir);
  const Segmentation& base = result.base;
  save_rgb(render_labels(base.width, base.height, base.labels, base.num_regions),
           (fs::path(dir) / "base.png").string());

  std::vector<int> labels(base.labels.size());
  for (int i = 0; i < result.hierarchy.layer_count(); ++i) {
    const HierarchyLayer& layer = result.hierarchy.layers[i];
    for (std::size_t p = 0; p < labels.size(); ++p) {
      labels[p] = layer.base_to_region[base.labels[p]];
    }
    RgbImage img = render_labels(base.width, base.height, labels, layer.region_count());
    overlay_hulls(img, layer);
    char name[32];
    std::snprintf(name, sizeof(name), "layer_%02d.png", i);
    save_rgb(img, (fs::path(dir) / name).string());
  }

  std::ofstream txt(fs::path(dir) / "layers.txt");
  txt << "base regions: " << base.num_regions << "\n";
  for (int i = 0; i < result.hierarchy.layer_count(); ++i) {
    txt << "layer " << i << ": regions=" << result.hierarchy.layers[i].region_count() << "\n";
  }
  txt << "splits (cluster count, ncut):\n";
  for (const auto& [count, ncut] : result.hierarchy.split_log) {
    txt << "  " << count << " " << ncut << "\n";
  }
}

int cmd_run(const CommonArgs& common, const std::string& image_path, const std::string& out_path,
            const std::string& raw_out, const std::string& layers_dir,
            const std::string& cues_dir) {
  const PipelineConfig config = resolve_config(common);
  const RgbImage img = load_image(image_path);
  const PipelineResult result = compute_saliency_full(img, config);

  if (!fs::path(out_path).parent_path().empty()) {
    fs::create_directories(fs::path(out_path).parent_path());
  }
  save_gray(to_u8(result.fused), out_path);
  std::cout << "wrote " << out_path << "\n";

  if (!raw_out.empty()) {
    write_raw_map(result.fused, raw_out);
    std::cout << "wrote " << raw_out << "\n";
  }
  if (!layers_dir.empty()) {
    dump_layers(result, layers_dir);
    std::cout << "wrote layer dumps to " << layers_dir << "\n";
  }
  if (!cues_dir.empty()) {
    fs::create_directories(cues_dir);
    save_gray(to_u8(result.cho), (fs::path(cues_dir) / "cho.png").string());
    save_gray(to_u8(result.gc), (fs::path(cues_dir) / "gc.png").string());
    std::cout << "wrote cue maps to " << cues_dir << "\n";
  }
  return 0;
}

int cmd_eval(const CommonArgs& common, const std::string& image_dir, const std::string& mask_dir,
             const std::string& report_prefix, const std::string& maps_dir) {
  const PipelineConfig config = resolve_config(common);

  MapProvider provider;
  if (!maps_dir.empty()) {
    provider = [&maps_dir](const std::string& image_path) {
      const fs::path map_path =
          fs::path(maps_dir) / (fs::path(image_path).stem().string() + ".png");
      return load_gray(map_path.string());
    };
  } else {
    provider = [&config](const std::string& image_path) {
      return to_u8(compute_saliency(load_image(image_path), config));
    };
  }

  EvalOptions options;
  options.beta2 = config.beta2;
  options.workers = config.workers;
  options.config_json = config_to_json(config);
  const EvalReport report = eval_dataset(image_dir, mask_dir, provider, options);

  for (const SkippedFile& skip : report.skipped) {
    std::cerr << "skipped " << skip.id << ": " << skip.reason << "\n";
  }
  if (report.empty()) {
    throw std::runtime_error("eval: no image/mask pairs produced a result");
  }

  if (!fs::path(report_prefix).parent_path().empty()) {
    fs::create_directories(fs::path(report_prefix).parent_path());
  }
  write_report_csv(report, report_prefix + ".csv");
  write_report_json(report, report_prefix + ".json");
  std::cout << "images " << report.rows.size() << ", skipped " << report.skipped.size() << "\n"
            << "corpus best F " << report.corpus_best_f << " at threshold "
            << report.corpus_best_threshold << " (P " << report.corpus_precision << ", R "
            << report.corpus_recall << "), adaptive F " << report.corpus_adaptive_f << "\n"
            << "wrote " << report_prefix << ".csv and " << report_prefix << ".json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saliency maps from convex hull overlap and global contrast"};
  app.require_subcommand(1);

  CommonArgs run_args;
  std::string image_path, out_path, raw_out, layers_dir, cues_dir;
  CLI::App* run = app.add_subcommand("run", "Compute a saliency map for one image");
  run->add_option("image", image_path, "input PNG")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "output saliency PNG")->required();
  run->add_option("--raw-out", raw_out, "also dump the raw float map");
  run->add_option("--dump-layers", layers_dir, "write per-layer label PNGs with hull outlines");
  run->add_option("--dump-cues", cues_dir, "write the CHO and GC cue maps as PNGs");
  add_config_options(run, run_args);

  CommonArgs eval_args;
  std::string image_dir, mask_dir, report_prefix, maps_dir;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate against ground-truth masks");
  eval->add_option("--images", image_dir, "directory of input PNGs")
      ->required()
      ->check(CLI::ExistingDirectory);
  eval->add_option("--masks", mask_dir, "directory of ground-truth PNGs (matched by stem)")
      ->required()
      ->check(CLI::ExistingDirectory);
  eval->add_option("--report", report_prefix, "report path prefix (.csv/.json appended)")
      ->required();
  eval->add_option("--maps", maps_dir, "evaluate precomputed maps instead of running the pipeline")
      ->check(CLI::ExistingDirectory);
  add_config_options(eval, eval_args);

  CommonArgs config_args;
  bool emit = false;
  CLI::App* config_cmd = app.add_subcommand("config", "Inspect configuration");
  config_cmd->add_flag("--emit", emit, "print the effective config as JSON")->required();
  add_config_options(config_cmd, config_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      return cmd_run(run_args, image_path, out_path, raw_out, layers_dir, cues_dir);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_args, image_dir, mask_dir, report_prefix, maps_dir);
    }
    std::cout << config_to_json(resolve_config(config_args)) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
