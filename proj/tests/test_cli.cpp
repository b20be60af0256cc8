#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "chosal/config.hpp"
#include "chosal/image.hpp"
#include "helpers.hpp"

using namespace chosal;
using chosal::testing::TempDir;

namespace {

#ifndef CHOSAL_CLI_PATH
#error "CHOSAL_CLI_PATH must point at the cli binary"
#endif

int run_cli(const std::string& args, const std::string& out_file = "") {
  std::string cmd = std::string(CHOSAL_CLI_PATH) + " " + args;
  if (!out_file.empty()) {
    cmd += " > " + out_file + " 2>/dev/null";
  } else {
    cmd += " > /dev/null 2>&1";
  }
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

RgbImage test_image() {
  return chosal::testing::make_rgb(40, 32, [](int x, int y) {
    const bool inside = x >= 14 && x < 26 && y >= 10 && y < 22;
    return inside ? std::array<std::uint8_t, 3>{220, 70, 50}
                  : std::array<std::uint8_t, 3>{50, 110, 160};
  });
}

}  // namespace

TEST_CASE("run writes a saliency png and exits 0") {
  TempDir tmp;
  save_rgb(test_image(), tmp.file("in.png"));
  const int code = run_cli("run " + tmp.file("in.png") + " --out " + tmp.file("out.png") +
                           " --raw-out " + tmp.file("out.raw") + " --dump-cues " +
                           tmp.file("cues") + " --dump-layers " + tmp.file("layers"));
  CHECK(code == 0);

  const GrayImage map = load_gray(tmp.file("out.png"));
  CHECK(map.width == 40);
  CHECK(map.height == 32);
  CHECK(std::filesystem::exists(tmp.file("out.raw")));
  CHECK(std::filesystem::exists(tmp.file("cues") + "/cho.png"));
  CHECK(std::filesystem::exists(tmp.file("cues") + "/gc.png"));
  CHECK(std::filesystem::exists(tmp.file("layers") + "/base.png"));
  CHECK(std::filesystem::exists(tmp.file("layers") + "/layer_00.png"));
  CHECK(std::filesystem::exists(tmp.file("layers") + "/layers.txt"));
}

TEST_CASE("unknown flag exits 2; missing image exits 1") {
  TempDir tmp;
  CHECK(run_cli("--definitely-not-a-flag") == 2);
  CHECK(run_cli("run") == 2);
  save_rgb(test_image(), tmp.file("in.png"));
  CHECK(run_cli("bogus-subcommand") == 2);

  // Existing file that is not a decodable png: usage passes, runtime fails.
  std::ofstream(tmp.file("broken.png")) << "not a png";
  CHECK(run_cli("run " + tmp.file("broken.png") + " --out " + tmp.file("o.png")) == 1);
}

TEST_CASE("eval with maps equal to masks reports corpus best_f 1") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.path() / "img");
  std::filesystem::create_directories(tmp.path() / "gt");

  GrayImage gt(16, 12, 0);
  for (int y = 3; y < 9; ++y) {
    for (int x = 4; x < 12; ++x) gt.data[y * 16 + x] = 255;
  }
  for (const char* name : {"a.png", "b.png"}) {
    save_gray(gt, (tmp.path() / "img" / name).string());
    save_gray(gt, (tmp.path() / "gt" / name).string());
  }

  const int code = run_cli("eval --images " + (tmp.path() / "img").string() + " --masks " +
                           (tmp.path() / "gt").string() + " --maps " +
                           (tmp.path() / "gt").string() + " --report " + tmp.file("report"));
  CHECK(code == 0);

  const std::string csv = slurp(tmp.file("report.csv"));
  CHECK(csv.rfind("image,best_f,precision,recall,adaptive_f\n", 0) == 0);
  CHECK(csv.find("CORPUS,1.000000,1.000000,1.000000") != std::string::npos);
  CHECK(std::filesystem::exists(tmp.file("report.json")));
}

TEST_CASE("eval on empty directories exits 1") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.path() / "img");
  std::filesystem::create_directories(tmp.path() / "gt");
  CHECK(run_cli("eval --images " + (tmp.path() / "img").string() + " --masks " +
                (tmp.path() / "gt").string() + " --report " + tmp.file("report")) == 1);
}

TEST_CASE("config --emit round-trips and honors flag overrides") {
  TempDir tmp;
  CHECK(run_cli("config --emit", tmp.file("emitted.json")) == 0);
  const PipelineConfig parsed = config_from_json(slurp(tmp.file("emitted.json")));
  CHECK(parsed == PipelineConfig{});

  CHECK(run_cli("config --emit --sigma-c2 99 --layer-counts 2,5,9 --config " +
                    tmp.file("emitted.json"),
                tmp.file("override.json")) == 0);
  const PipelineConfig overridden = config_from_json(slurp(tmp.file("override.json")));
  CHECK(overridden.sigma_c2 == 99.0);
  CHECK(overridden.layer_counts == std::vector<int>{2, 5, 9});
  CHECK(overridden.sigma_s2 == PipelineConfig{}.sigma_s2);
}

TEST_CASE("eval reports are identical across worker counts") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.path() / "img");
  std::filesystem::create_directories(tmp.path() / "gt");
  std::mt19937 rng(8);
  for (int i = 0; i < 4; ++i) {
    GrayImage map(20, 14);
    GrayImage gt(20, 14);
    for (std::size_t p = 0; p < map.data.size(); ++p) {
      map.data[p] = static_cast<std::uint8_t>(rng() % 256);
      gt.data[p] = (rng() % 2) ? 255 : 0;
    }
    const std::string name = "s" + std::to_string(i) + ".png";
    save_gray(map, (tmp.path() / "img" / name).string());
    save_gray(gt, (tmp.path() / "gt" / name).string());
  }

  const std::string base_cmd = "eval --images " + (tmp.path() / "img").string() + " --masks " +
                               (tmp.path() / "gt").string() + " --maps " +
                               (tmp.path() / "img").string() + " --report ";
  CHECK(run_cli(base_cmd + tmp.file("w1") + " --workers 1") == 0);
  CHECK(run_cli(base_cmd + tmp.file("w4") + " --workers 4") == 0);
  CHECK(slurp(tmp.file("w1.csv")) == slurp(tmp.file("w4.csv")));

  // The env override is honored too.
  const int env_code = std::system(("CHOSAL_WORKERS=3 " + std::string(CHOSAL_CLI_PATH) + " " +
                                    base_cmd + tmp.file("we") + " > /dev/null 2>&1")
                                       .c_str());
  REQUIRE(env_code != -1);
  CHECK(WEXITSTATUS(env_code) == 0);
  CHECK(slurp(tmp.file("we.csv")) == slurp(tmp.file("w1.csv")));
}
