#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adpipe/config.hpp"
#include "adpipe/io.hpp"
#include "adpipe/prompt.hpp"
#include "adpipe/query_bank.hpp"
#include "adpipe/recognition.hpp"
#include "adpipe/redundancy.hpp"
#include "adpipe/segmenter.hpp"
#include "adpipe/track.hpp"

namespace adpipe {

struct PipelineOptions {
  PipelineConfig config;
  std::string movie_id;
  double duration_s = 0.0;
  double fps = 30.0;
  int stride = 15;
  int prompt_capacity = 8;
  int threads = 1;
};

struct PipelineInputs {
  std::vector<TimedText> subtitles;
  std::vector<TimedText> ad_history;
  QueryBank bank;
  std::vector<FaceDetection> detections;
  PromptTemplateSet templates;
  std::optional<std::vector<io::ScorePair>> score_pairs;
  std::optional<WordVectorLookup> lookup;
};

struct ClipResult {
  ClipSpec clip;
  std::vector<io::FrameRecognition> recognition;
  std::vector<Track> tracks;
  std::vector<std::string> characters;  // first appearance, then leftmost box
  std::string text_prior;
  AssembledPrompt prompt;
};

struct ScoreResult {
  std::string id;
  double score = 0.0;
  std::size_t valid_count = 0;
};

struct PipelineResult {
  std::vector<ClipResult> clips;
  std::vector<ScoreResult> scores;
};

// Full deterministic chain: segment dialogue-free clips, recognize faces on
// clip keyframes, propagate anchored identities, assemble prompts with their
// narrative priors, and score provided captions when a lookup is available.
// Clips are processed independently; the thread count never changes results.
PipelineResult run_pipeline(const PipelineInputs& inputs,
                            const PipelineOptions& options);

}  // namespace adpipe
