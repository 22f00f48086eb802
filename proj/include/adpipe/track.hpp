#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adpipe/embedding.hpp"
#include "adpipe/geometry.hpp"
#include "adpipe/recognition.hpp"

namespace adpipe {

struct FrameDetections {
  int frame_index = 0;
  std::vector<FaceDetection> detections;
};

// Keyframe sequence with per-frame detections. Frame indices are strictly
// increasing; walk distances count sequence steps, not raw index deltas.
struct DetectionTimeline {
  std::vector<FrameDetections> frames;
};

// A frame where recognition identified a character with certainty.
struct TrackAnchor {
  int frame_index = 0;
  std::string detection_id;
  std::string character_name;
};

enum class Provenance { kAnchor, kForward, kBackward };

struct TrackAssignment {
  BBox bbox;
  Embedding embedding;
  std::string detection_id;
  Provenance provenance = Provenance::kAnchor;
  int anchor_distance = 0;
  bool operator==(const TrackAssignment&) const = default;
};

// One character's per-frame region assignments over a clip. Every timeline
// frame lands in exactly one of assignments / lost_frames.
struct Track {
  std::string character_name;
  std::map<int, TrackAssignment> assignments;  // keyed by frame index
  std::set<int> lost_frames;
  bool operator==(const Track&) const = default;
};

struct PropagationParams {
  int context_capacity = 7;  // recent-context FIFO bound
  int prompt_capacity = 8;   // recognition-anchored prompt FIFO bound
  double alpha = 0.5;        // embedding-similarity weight; 1 - alpha goes to IoU
  double tau_assoc = 0.5;    // minimum association score
};

// Bounded FIFO state carried along a track: recent context frames plus the
// recognition-anchored prompt frames.
class MemoryBank {
 public:
  MemoryBank(std::size_t context_capacity, std::size_t prompt_capacity);

  // Both push fronts return the evicted frame index, if the queue was full.
  std::optional<int> push_context(int frame_index, const Embedding& embedding);
  std::optional<int> push_prompt(int frame_index, const std::string& detection_id);

  // Arithmetic mean of the queued context embeddings. Empty queue is an error.
  Embedding context_mean() const;
  std::size_t context_size() const { return context_.size(); }
  std::size_t prompt_size() const { return prompt_.size(); }

 private:
  std::size_t context_capacity_;
  std::size_t prompt_capacity_;
  std::deque<std::pair<int, Embedding>> context_;
  std::deque<std::pair<int, std::string>> prompt_;
};

// One FIFO event, kept so tests can replay queue behavior.
struct MemoryStep {
  enum class Queue { kContext, kPrompt };
  std::string character;
  int anchor_frame = 0;       // walk origin; -1 for track-level prompt pushes
  Provenance direction = Provenance::kAnchor;
  Queue queue = Queue::kContext;
  int frame_index = 0;        // frame whose record was pushed
  std::size_t queue_len_after = 0;
  int evicted_frame = -1;     // -1 when nothing was evicted
};

struct PropagationResult {
  std::vector<Track> tracks;  // characters in anchor first-appearance order
  std::vector<MemoryStep> steps;
};

// Spreads anchored identities across the timeline. From each anchor a forward
// and a backward walk scores every candidate of the next frame by
// alpha * cos(candidate, context mean) + (1 - alpha) * IoU(candidate, last
// assigned box), assigning the argmax when it reaches tau_assoc and marking
// the frame lost otherwise (memory unchanged). Frames claimed by several
// anchors of one character keep the nearest anchor's pick (ties: forward
// direction, then earlier anchor frame). A detection claimed by two
// characters goes to the higher score; the loser's frame becomes lost.
PropagationResult propagate(const DetectionTimeline& timeline,
                            const std::vector<TrackAnchor>& anchors,
                            const PropagationParams& params = {});

}  // namespace adpipe
