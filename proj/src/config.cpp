#include "chosal/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chosal {

void validate_config(const PipelineConfig& config) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("config: " + what); };
  if (config.sigma_c2 <= 0.0) fail("sigma_c2 must be > 0");
  if (config.sigma_s2 <= 0.0) fail("sigma_s2 must be > 0");
  if (config.sigma_w2 <= 0.0) fail("sigma_w2 must be > 0");
  if (config.felz_scale_k <= 0.0) fail("felz_scale_k must be > 0");
  if (config.felz_min_size < 1) fail("felz_min_size must be >= 1");
  if (config.felz_smooth_sigma < 0.0) fail("felz_smooth_sigma must be >= 0");
  if (config.beta2 <= 0.0) fail("beta2 must be > 0");
  if (config.workers < 0) fail("workers must be >= 0");
  if (config.layer_counts.empty()) fail("layer_counts must not be empty");
  int prev = 0;
  for (const int c : config.layer_counts) {
    if (c <= prev) fail("layer_counts must be strictly increasing and positive");
    prev = c;
  }
}

std::string config_to_json(const PipelineConfig& config) {
  nlohmann::json j;
  j["sigma_c2"] = config.sigma_c2;
  j["sigma_s2"] = config.sigma_s2;
  j["sigma_w2"] = config.sigma_w2;
  j["layer_counts"] = config.layer_counts;
  j["felz_scale_k"] = config.felz_scale_k;
  j["felz_min_size"] = config.felz_min_size;
  j["felz_smooth_sigma"] = config.felz_smooth_sigma;
  j["beta2"] = config.beta2;
  j["normalize_cues"] = config.normalize_cues;
  j["workers"] = config.workers;
  return j.dump(2);
}

PipelineConfig config_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");

  PipelineConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "sigma_c2") {
      config.sigma_c2 = value.get<double>();
    } else if (key == "sigma_s2") {
      config.sigma_s2 = value.get<double>();
    } else if (key == "sigma_w2") {
      config.sigma_w2 = value.get<double>();
    } else if (key == "layer_counts") {
      config.layer_counts = value.get<std::vector<int>>();
    } else if (key == "felz_scale_k") {
      config.felz_scale_k = value.get<double>();
    } else if (key == "felz_min_size") {
      config.felz_min_size = value.get<int>();
    } else if (key == "felz_smooth_sigma") {
      config.felz_smooth_sigma = value.get<double>();
    } else if (key == "beta2") {
      config.beta2 = value.get<double>();
    } else if (key == "normalize_cues") {
      config.normalize_cues = value.get<bool>();
    } else if (key == "workers") {
      config.workers = value.get<int>();
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  validate_config(config);
  return config;
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot read " + path);
  std::ostringstream buffer;
  buffer << is.rdbuf();
  return config_from_json(buffer.str());
}

}  // namespace chosal
