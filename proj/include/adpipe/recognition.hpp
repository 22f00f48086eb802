#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adpipe/embedding.hpp"
#include "adpipe/geometry.hpp"
#include "adpipe/query_bank.hpp"

namespace adpipe {

// Distinguished label for faces matching no bank entry.
inline constexpr const char* kUnknownLabel = "Unknown";

struct FaceDetection {
  int frame_index = 0;
  BBox bbox;
  Embedding embedding;
  std::string detection_id;
  bool operator==(const FaceDetection&) const = default;
};

struct RecognitionResult {
  std::string detection_id;
  std::string label;  // character name, or kUnknownLabel
  double min_distance = 0.0;
  // Squared distance per bank entry, in bank order.
  std::vector<std::pair<std::string, double>> distances;
};

// Nearest-query lookup under squared L2. The face is labeled with the argmin
// entry only when the minimum distance is strictly below u; ties go to the
// lowest bank index.
RecognitionResult recognize(const FaceDetection& face, const QueryBank& bank,
                            double u);

// Per-face recognition plus a frame-level uniqueness pass: when several faces
// of one frame match the same character, only the closest keeps the label and
// the rest are demoted to Unknown. All faces must share one frame index.
std::vector<RecognitionResult> recognize_frame(
    const std::vector<FaceDetection>& faces, const QueryBank& bank, double u);

struct LabeledDetection {
  FaceDetection face;
  std::string true_label;  // character name or kUnknownLabel
};

struct SweepPoint {
  double u = 0.0;
  double accuracy = 0.0;
  double unknown_rate = 0.0;
};

// Evaluates recognition over a labeled dataset at each threshold. Thresholds
// must be non-empty and sorted ascending; the dataset must be non-empty.
// Unknown counts as the expected label for background faces.
std::vector<SweepPoint> sweep_threshold(
    const std::vector<LabeledDetection>& dataset, const QueryBank& bank,
    const std::vector<double>& thresholds);

}  // namespace adpipe
