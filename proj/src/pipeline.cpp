#include "adpipe/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "adpipe/errors.hpp"

namespace adpipe {
namespace {

// Characters ordered by first labeled appearance: earliest frame, then
// leftmost box, then name as the final deterministic fallback.
std::vector<std::string> character_order(
    const std::vector<io::FrameRecognition>& recognition,
    const std::unordered_map<std::string, const FaceDetection*>& by_id) {
  struct FirstSeen {
    int frame;
    double x;
  };
  std::map<std::string, FirstSeen> first;
  for (const io::FrameRecognition& frame : recognition) {
    for (const RecognitionResult& r : frame.results) {
      if (r.label == kUnknownLabel) continue;
      const double x = by_id.at(r.detection_id)->bbox.x;
      auto [it, inserted] = first.try_emplace(r.label, FirstSeen{frame.frame_index, x});
      if (!inserted) {
        if (frame.frame_index < it->second.frame ||
            (frame.frame_index == it->second.frame && x < it->second.x)) {
          it->second = {frame.frame_index, x};
        }
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(first.size());
  for (const auto& [name, seen] : first) names.push_back(name);
  std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    const FirstSeen& fa = first.at(a);
    const FirstSeen& fb = first.at(b);
    if (fa.frame != fb.frame) return fa.frame < fb.frame;
    if (fa.x != fb.x) return fa.x < fb.x;
    return a < b;
  });
  return names;
}

ClipResult process_clip(const TimeInterval& gap, const PipelineInputs& inputs,
                        const PipelineOptions& options,
                        const std::vector<TimedText>& history) {
  const PipelineConfig& cfg = options.config;
  ClipResult result;
  result.clip.movie_id = options.movie_id;
  result.clip.start_s = gap.start_s;
  result.clip.end_s = gap.end_s;

  const TextPriorSelection prior =
      select_text_prior(history, gap.start_s, cfg.n_ads);
  result.clip.prior_ads = prior.ads;
  result.clip.prior_subtitles = prior.subtitles;
  result.text_prior = render_text_prior(prior);

  const std::vector<int> keyframes =
      keyframe_indices(gap.start_s, gap.end_s, options.fps, options.stride);
  std::vector<FaceDetection> clip_detections;
  for (const FaceDetection& det : inputs.detections) {
    if (std::binary_search(keyframes.begin(), keyframes.end(), det.frame_index)) {
      clip_detections.push_back(det);
    }
  }
  const DetectionTimeline timeline =
      io::build_timeline(clip_detections, keyframes);

  std::unordered_map<std::string, const FaceDetection*> by_id;
  std::vector<TrackAnchor> anchors;
  for (const FrameDetections& frame : timeline.frames) {
    io::FrameRecognition rec;
    rec.frame_index = frame.frame_index;
    if (!frame.detections.empty()) {
      rec.results = recognize_frame(frame.detections, inputs.bank, cfg.u);
      for (std::size_t i = 0; i < frame.detections.size(); ++i) {
        by_id[frame.detections[i].detection_id] = &frame.detections[i];
        if (rec.results[i].label != kUnknownLabel) {
          anchors.push_back({frame.frame_index, rec.results[i].detection_id,
                             rec.results[i].label});
        }
      }
    }
    result.recognition.push_back(std::move(rec));
  }

  if (!anchors.empty()) {
    PropagationParams params;
    params.context_capacity = cfg.K_ctx;
    params.prompt_capacity = options.prompt_capacity;
    params.alpha = cfg.alpha;
    params.tau_assoc = cfg.tau_assoc;
    result.tracks = propagate(timeline, anchors, params).tracks;
  }

  result.characters = character_order(result.recognition, by_id);
  result.prompt = assemble_prompt(result.characters, inputs.templates);
  return result;
}

}  // namespace

PipelineResult run_pipeline(const PipelineInputs& inputs,
                            const PipelineOptions& options) {
  validate_config(options.config);
  if (options.threads < 1) {
    throw InvariantError("run_pipeline: thread count must be positive");
  }
  if (inputs.score_pairs && !inputs.lookup) {
    throw InvariantError("run_pipeline: caption scoring needs a word-vector lookup");
  }

  std::vector<TimedText> history = inputs.subtitles;
  history.insert(history.end(), inputs.ad_history.begin(), inputs.ad_history.end());
  std::stable_sort(history.begin(), history.end(),
                   [](const TimedText& a, const TimedText& b) {
                     return a.start_s < b.start_s;
                   });

  const std::vector<TimeInterval> gaps = find_gaps(
      inputs.subtitles, options.duration_s, options.config.min_gap_s, false);

  PipelineResult result;
  result.clips.resize(gaps.size());

  // Clips are independent; workers pull indices and drop results into place,
  // so the emitted order never depends on scheduling.
  const int worker_count = static_cast<int>(
      std::min<std::size_t>(options.threads, std::max<std::size_t>(gaps.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= gaps.size()) break;
      try {
        result.clips[i] = process_clip(gaps[i], inputs, options, history);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (worker_count <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (int t = 0; t < worker_count; ++t) workers.emplace_back(work);
    for (std::thread& worker : workers) worker.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (inputs.score_pairs) {
    result.scores.reserve(inputs.score_pairs->size());
    for (const io::ScorePair& pair : *inputs.score_pairs) {
      const RedundancyReport report = sentence_redundancy(
          pair.generated, pair.ground_truth, *inputs.lookup, options.config.theta);
      result.scores.push_back({pair.id, report.score, report.valid_count});
    }
  }
  return result;
}

}  // namespace adpipe
