#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace adpipe {

// Knobs shared across the pipeline stages. Field names double as config file
// keys, CLI flags and environment overrides.
struct PipelineConfig {
  double u = 1.3;            // recognition threshold on squared distance
  double theta = 0.5;        // redundancy similarity cutoff
  int mu = 4;                // token budget after merging
  int k_clusters = 2;        // candidate clusters per character
  int K_ctx = 7;             // propagation context FIFO capacity
  double alpha = 0.5;        // propagation embedding weight
  double tau_assoc = 0.5;    // propagation association threshold
  int n_ads = 3;             // prior descriptions per clip
  double min_gap_s = 1.0;    // minimum dialogue-free clip length
  std::int64_t seed = 0;     // master RNG seed
  double epsilon = 1e-6;     // bank objective stabilizer

  bool operator==(const PipelineConfig&) const = default;
};

// Applies one key=value pair. Unknown keys and malformed values raise
// InputError; context names the source for error messages.
void apply_config_entry(PipelineConfig& config, const std::string& key,
                        const std::string& value, const std::string& context);

// Flat key=value file; blank lines and '#' comments are ignored.
PipelineConfig load_config(const std::string& path, PipelineConfig base = {});

// Range checks for every field. Raises InputError naming the offender.
void validate_config(const PipelineConfig& config);

// key=value lines in declaration order; feeding them back through
// load_config reproduces the exact configuration.
std::string echo_config(const PipelineConfig& config);

}  // namespace adpipe
