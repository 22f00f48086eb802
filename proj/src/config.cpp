#include "adpipe/config.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "adpipe/errors.hpp"
#include "adpipe/io.hpp"

namespace adpipe {
namespace {

double parse_double(const std::string& value, const std::string& key,
                    const std::string& context) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw InputError(context + ": value '" + value + "' for key '" + key +
                     "' is not a number");
  }
  return parsed;
}

std::int64_t parse_int(const std::string& value, const std::string& key,
                       const std::string& context) {
  std::int64_t parsed = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InputError(context + ": value '" + value + "' for key '" + key +
                     "' is not an integer");
  }
  return parsed;
}

int parse_bounded_int(const std::string& value, const std::string& key,
                      const std::string& context) {
  const std::int64_t parsed = parse_int(value, key, context);
  if (parsed < INT32_MIN || parsed > INT32_MAX) {
    throw InputError(context + ": value '" + value + "' for key '" + key +
                     "' is out of range");
  }
  return static_cast<int>(parsed);
}

}  // namespace

void apply_config_entry(PipelineConfig& config, const std::string& key,
                        const std::string& value, const std::string& context) {
  if (key == "u") {
    config.u = parse_double(value, key, context);
  } else if (key == "theta") {
    config.theta = parse_double(value, key, context);
  } else if (key == "mu") {
    config.mu = parse_bounded_int(value, key, context);
  } else if (key == "k_clusters") {
    config.k_clusters = parse_bounded_int(value, key, context);
  } else if (key == "K_ctx") {
    config.K_ctx = parse_bounded_int(value, key, context);
  } else if (key == "alpha") {
    config.alpha = parse_double(value, key, context);
  } else if (key == "tau_assoc") {
    config.tau_assoc = parse_double(value, key, context);
  } else if (key == "n_ads") {
    config.n_ads = parse_bounded_int(value, key, context);
  } else if (key == "min_gap_s") {
    config.min_gap_s = parse_double(value, key, context);
  } else if (key == "seed") {
    config.seed = parse_int(value, key, context);
  } else if (key == "epsilon") {
    config.epsilon = parse_double(value, key, context);
  } else {
    throw InputError(context + ": unknown config key '" + key + "'");
  }
}

PipelineConfig load_config(const std::string& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "' for reading");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto eq = line.find('=', begin);
    const std::string context = path + ":" + std::to_string(line_no);
    if (eq == std::string::npos) {
      throw InputError(context + ": expected key=value, got '" + line + "'");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(begin, eq - begin));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InputError(context + ": empty key");
    apply_config_entry(base, key, value, context);
  }
  validate_config(base);
  return base;
}

void validate_config(const PipelineConfig& config) {
  auto require = [](bool ok, const std::string& message) {
    if (!ok) throw InputError("config: " + message);
  };
  require(config.u >= 0.0, "u must be non-negative");
  require(config.theta > 0.0 && config.theta <= 1.0, "theta must lie in (0, 1]");
  require(config.mu >= 1, "mu must be at least 1");
  require(config.k_clusters >= 1, "k_clusters must be at least 1");
  require(config.K_ctx >= 1, "K_ctx must be at least 1");
  require(config.alpha >= 0.0 && config.alpha <= 1.0, "alpha must lie in [0, 1]");
  require(config.tau_assoc >= -1.0 && config.tau_assoc <= 1.0,
          "tau_assoc must lie in [-1, 1]");
  require(config.n_ads >= 1, "n_ads must be at least 1");
  require(config.min_gap_s > 0.0, "min_gap_s must be positive");
  require(config.epsilon > 0.0, "epsilon must be positive");
}

std::string echo_config(const PipelineConfig& config) {
  std::ostringstream out;
  out << "u=" << io::format_double(config.u) << '\n';
  out << "theta=" << io::format_double(config.theta) << '\n';
  out << "mu=" << config.mu << '\n';
  out << "k_clusters=" << config.k_clusters << '\n';
  out << "K_ctx=" << config.K_ctx << '\n';
  out << "alpha=" << io::format_double(config.alpha) << '\n';
  out << "tau_assoc=" << io::format_double(config.tau_assoc) << '\n';
  out << "n_ads=" << config.n_ads << '\n';
  out << "min_gap_s=" << io::format_double(config.min_gap_s) << '\n';
  out << "seed=" << config.seed << '\n';
  out << "epsilon=" << io::format_double(config.epsilon) << '\n';
  return out.str();
}

}  // namespace adpipe
