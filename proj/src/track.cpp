#include "adpipe/track.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "adpipe/errors.hpp"

namespace adpipe {

MemoryBank::MemoryBank(std::size_t context_capacity, std::size_t prompt_capacity)
    : context_capacity_(context_capacity), prompt_capacity_(prompt_capacity) {
  if (context_capacity_ == 0 || prompt_capacity_ == 0) {
    throw InvariantError("MemoryBank: queue capacities must be positive");
  }
}

std::optional<int> MemoryBank::push_context(int frame_index,
                                            const Embedding& embedding) {
  std::optional<int> evicted;
  if (context_.size() == context_capacity_) {
    evicted = context_.front().first;
    context_.pop_front();
  }
  context_.emplace_back(frame_index, embedding);
  return evicted;
}

std::optional<int> MemoryBank::push_prompt(int frame_index,
                                           const std::string& detection_id) {
  std::optional<int> evicted;
  if (prompt_.size() == prompt_capacity_) {
    evicted = prompt_.front().first;
    prompt_.pop_front();
  }
  prompt_.emplace_back(frame_index, detection_id);
  return evicted;
}

Embedding MemoryBank::context_mean() const {
  if (context_.empty()) {
    throw InvariantError("MemoryBank: context mean of an empty queue");
  }
  const std::size_t dim = context_.front().second.dim();
  Embedding mean;
  mean.values.assign(dim, 0.0);
  for (const auto& [frame, embedding] : context_) {
    for (std::size_t d = 0; d < dim; ++d) mean.values[d] += embedding[d];
  }
  for (std::size_t d = 0; d < dim; ++d) {
    mean.values[d] /= static_cast<double>(context_.size());
  }
  return mean;
}

namespace {

struct Claim {
  const FaceDetection* detection = nullptr;
  double score = 0.0;
  Provenance provenance = Provenance::kAnchor;
  int anchor_distance = 0;
  int anchor_frame = 0;
};

// True when lhs should replace rhs as a track's claim for one frame.
bool closer_claim(const Claim& lhs, const Claim& rhs) {
  if (lhs.anchor_distance != rhs.anchor_distance) {
    return lhs.anchor_distance < rhs.anchor_distance;
  }
  if (lhs.provenance != rhs.provenance) {
    return lhs.provenance == Provenance::kForward;
  }
  return lhs.anchor_frame < rhs.anchor_frame;
}

struct CharacterState {
  std::string name;
  std::vector<const TrackAnchor*> anchors;       // ascending frame order
  std::vector<std::optional<Claim>> claims;      // per timeline position
};

}  // namespace

PropagationResult propagate(const DetectionTimeline& timeline,
                            const std::vector<TrackAnchor>& anchors,
                            const PropagationParams& params) {
  if (params.alpha < 0.0 || params.alpha > 1.0) {
    throw InvariantError("propagate: alpha must lie in [0, 1]");
  }
  for (std::size_t i = 1; i < timeline.frames.size(); ++i) {
    if (timeline.frames[i].frame_index <= timeline.frames[i - 1].frame_index) {
      throw InvariantError("propagate: timeline frames must be strictly "
                           "increasing near index " +
                           std::to_string(timeline.frames[i].frame_index));
    }
  }

  const std::size_t n_frames = timeline.frames.size();
  std::unordered_map<int, std::size_t> frame_pos;
  std::unordered_map<int, std::unordered_map<std::string, const FaceDetection*>> frame_dets;
  for (std::size_t pos = 0; pos < n_frames; ++pos) {
    const FrameDetections& fd = timeline.frames[pos];
    frame_pos[fd.frame_index] = pos;
    auto& by_id = frame_dets[fd.frame_index];
    for (const FaceDetection& det : fd.detections) {
      if (!by_id.emplace(det.detection_id, &det).second) {
        throw InvariantError("propagate: duplicate detection id '" +
                             det.detection_id + "' in frame " +
                             std::to_string(fd.frame_index));
      }
    }
  }

  // Validate anchors and group them per character in first-appearance order.
  std::vector<CharacterState> characters;
  std::unordered_map<std::string, std::size_t> char_index;
  std::unordered_map<std::string, std::string> detection_owner;  // frame:id -> name
  for (const TrackAnchor& anchor : anchors) {
    auto pos_it = frame_pos.find(anchor.frame_index);
    if (pos_it == frame_pos.end()) {
      throw InvariantError("propagate: anchor for '" + anchor.character_name +
                           "' references missing frame " +
                           std::to_string(anchor.frame_index));
    }
    const auto& by_id = frame_dets[anchor.frame_index];
    if (!by_id.count(anchor.detection_id)) {
      throw InvariantError("propagate: anchor for '" + anchor.character_name +
                           "' references missing detection '" +
                           anchor.detection_id + "' in frame " +
                           std::to_string(anchor.frame_index));
    }
    const std::string key =
        std::to_string(anchor.frame_index) + ":" + anchor.detection_id;
    auto [owner_it, inserted] = detection_owner.emplace(key, anchor.character_name);
    if (!inserted && owner_it->second != anchor.character_name) {
      throw InvariantError("propagate: detection '" + anchor.detection_id +
                           "' in frame " + std::to_string(anchor.frame_index) +
                           " anchored by both '" + owner_it->second +
                           "' and '" + anchor.character_name + "'");
    }
    auto [idx_it, is_new] = char_index.try_emplace(anchor.character_name, characters.size());
    if (is_new) {
      characters.push_back({anchor.character_name, {}, {}});
      characters.back().claims.resize(n_frames);
    }
    CharacterState& state = characters[idx_it->second];
    for (const TrackAnchor* existing : state.anchors) {
      if (existing->frame_index == anchor.frame_index) {
        throw InvariantError("propagate: duplicate anchor for '" +
                             anchor.character_name + "' in frame " +
                             std::to_string(anchor.frame_index));
      }
    }
    state.anchors.push_back(&anchor);
  }
  for (CharacterState& state : characters) {
    std::sort(state.anchors.begin(), state.anchors.end(),
              [](const TrackAnchor* a, const TrackAnchor* b) {
                return a->frame_index < b->frame_index;
              });
  }

  PropagationResult result;

  for (CharacterState& state : characters) {
    // Track-level prompt queue: the recognition-anchored frames, oldest first.
    MemoryBank prompt_bank(params.context_capacity, params.prompt_capacity);
    for (const TrackAnchor* anchor : state.anchors) {
      const auto evicted = prompt_bank.push_prompt(anchor->frame_index,
                                                   anchor->detection_id);
      result.steps.push_back({state.name, -1, Provenance::kAnchor,
                              MemoryStep::Queue::kPrompt, anchor->frame_index,
                              prompt_bank.prompt_size(),
                              evicted.value_or(-1)});
    }

    for (const TrackAnchor* anchor : state.anchors) {
      const std::size_t anchor_pos = frame_pos[anchor->frame_index];
      const FaceDetection* anchor_det =
          frame_dets[anchor->frame_index][anchor->detection_id];
      Claim anchor_claim{anchor_det, std::numeric_limits<double>::infinity(),
                         Provenance::kAnchor, 0, anchor->frame_index};
      if (!state.claims[anchor_pos] ||
          closer_claim(anchor_claim, *state.claims[anchor_pos])) {
        state.claims[anchor_pos] = anchor_claim;
      }

      for (const Provenance direction :
           {Provenance::kForward, Provenance::kBackward}) {
        MemoryBank memory(params.context_capacity, params.prompt_capacity);
        const auto seeded = memory.push_context(anchor->frame_index,
                                                anchor_det->embedding);
        result.steps.push_back({state.name, anchor->frame_index, direction,
                                MemoryStep::Queue::kContext,
                                anchor->frame_index, memory.context_size(),
                                seeded.value_or(-1)});
        BBox last_bbox = anchor_det->bbox;
        const long step = direction == Provenance::kForward ? 1 : -1;
        for (long pos = static_cast<long>(anchor_pos) + step;
             pos >= 0 && pos < static_cast<long>(n_frames); pos += step) {
          const FrameDetections& frame = timeline.frames[pos];
          const Embedding mean = memory.context_mean();
          const bool mean_usable = l2_norm(mean) != 0.0;
          const FaceDetection* best = nullptr;
          double best_score = -std::numeric_limits<double>::infinity();
          for (const FaceDetection& det : frame.detections) {
            const double sim =
                mean_usable ? cosine_similarity(det.embedding, mean) : 0.0;
            const double score = params.alpha * sim +
                                 (1.0 - params.alpha) * iou(det.bbox, last_bbox);
            if (score > best_score) {
              best_score = score;
              best = &det;
            }
          }
          if (best == nullptr || best_score < params.tau_assoc) {
            continue;  // frame lost for this walk; memory stays unchanged
          }
          Claim claim{best, best_score, direction,
                      static_cast<int>(std::labs(pos - static_cast<long>(anchor_pos))),
                      anchor->frame_index};
          if (!state.claims[pos] || closer_claim(claim, *state.claims[pos])) {
            state.claims[pos] = claim;
          }
          const auto evicted = memory.push_context(frame.frame_index,
                                                   best->embedding);
          result.steps.push_back({state.name, anchor->frame_index, direction,
                                  MemoryStep::Queue::kContext,
                                  frame.frame_index, memory.context_size(),
                                  evicted.value_or(-1)});
          last_bbox = best->bbox;
        }
      }
    }
  }

  // Serial conflict resolution, frames ascending: one detection belongs to at
  // most one character; the higher score keeps it, earlier characters win ties.
  for (std::size_t pos = 0; pos < n_frames; ++pos) {
    std::unordered_map<const FaceDetection*, std::size_t> winner;
    for (std::size_t c = 0; c < characters.size(); ++c) {
      const auto& claim = characters[c].claims[pos];
      if (!claim) continue;
      auto [it, inserted] = winner.try_emplace(claim->detection, c);
      if (inserted) continue;
      const std::size_t other = it->second;
      if (claim->score > characters[other].claims[pos]->score) {
        characters[other].claims[pos].reset();
        it->second = c;
      } else {
        characters[c].claims[pos].reset();
      }
    }
  }

  for (const CharacterState& state : characters) {
    Track track;
    track.character_name = state.name;
    for (std::size_t pos = 0; pos < n_frames; ++pos) {
      const int frame_index = timeline.frames[pos].frame_index;
      if (const auto& claim = state.claims[pos]) {
        track.assignments[frame_index] = {claim->detection->bbox,
                                          claim->detection->embedding,
                                          claim->detection->detection_id,
                                          claim->provenance,
                                          claim->anchor_distance};
      } else {
        track.lost_frames.insert(frame_index);
      }
    }
    result.tracks.push_back(std::move(track));
  }
  return result;
}

}  // namespace adpipe
