#include "adpipe/recognition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {

RecognitionResult recognize(const FaceDetection& face, const QueryBank& bank,
                            double u) {
  if (bank.entries.empty()) {
    throw InvariantError("recognize: empty query bank");
  }
  if (face.embedding.dim() != bank.dim) {
    throw InvariantError("recognize: face dimension " +
                         std::to_string(face.embedding.dim()) +
                         " does not match bank dimension " +
                         std::to_string(bank.dim));
  }
  RecognitionResult result;
  result.detection_id = face.detection_id;
  result.distances.reserve(bank.entries.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < bank.entries.size(); ++i) {
    const double d = l2_distance_sq(face.embedding, bank.entries[i].query);
    result.distances.emplace_back(bank.entries[i].name, d);
    if (d < result.distances[best].second) best = i;
  }
  result.min_distance = result.distances[best].second;
  result.label =
      result.min_distance < u ? bank.entries[best].name : kUnknownLabel;
  return result;
}

std::vector<RecognitionResult> recognize_frame(
    const std::vector<FaceDetection>& faces, const QueryBank& bank, double u) {
  for (const FaceDetection& face : faces) {
    if (face.frame_index != faces.front().frame_index) {
      throw InvariantError("recognize_frame: mixed frame indices " +
                           std::to_string(faces.front().frame_index) + " and " +
                           std::to_string(face.frame_index));
    }
  }
  std::vector<RecognitionResult> results;
  results.reserve(faces.size());
  for (const FaceDetection& face : faces) {
    results.push_back(recognize(face, bank, u));
  }

  // A character can appear once per frame: among faces sharing a label, only
  // the closest keeps it.
  std::map<std::string, std::size_t> closest;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].label == kUnknownLabel) continue;
    auto [it, inserted] = closest.try_emplace(results[i].label, i);
    if (!inserted && results[i].min_distance < results[it->second].min_distance) {
      it->second = i;
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].label == kUnknownLabel) continue;
    if (closest[results[i].label] != i) results[i].label = kUnknownLabel;
  }
  return results;
}

std::vector<SweepPoint> sweep_threshold(
    const std::vector<LabeledDetection>& dataset, const QueryBank& bank,
    const std::vector<double>& thresholds) {
  if (dataset.empty()) {
    throw InvariantError("sweep_threshold: empty dataset");
  }
  if (thresholds.empty()) {
    throw InvariantError("sweep_threshold: empty threshold list");
  }
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw InvariantError("sweep_threshold: thresholds must be sorted ascending");
  }

  // The nearest entry never depends on u, so recognize once with an accepting
  // threshold and reapply the cutoff per sweep point.
  struct Nearest {
    std::string label;
    double distance;
    const std::string* truth;
  };
  std::vector<Nearest> nearest;
  nearest.reserve(dataset.size());
  for (const LabeledDetection& item : dataset) {
    RecognitionResult r =
        recognize(item.face, bank, std::numeric_limits<double>::infinity());
    nearest.push_back({r.label, r.min_distance, &item.true_label});
  }

  std::vector<SweepPoint> sweep;
  sweep.reserve(thresholds.size());
  for (double u : thresholds) {
    SweepPoint point;
    point.u = u;
    std::size_t correct = 0;
    std::size_t unknown = 0;
    for (const Nearest& n : nearest) {
      const std::string& label = n.distance < u ? n.label : kUnknownLabel;
      if (label == kUnknownLabel) ++unknown;
      if (label == *n.truth) ++correct;
    }
    point.accuracy = static_cast<double>(correct) / nearest.size();
    point.unknown_rate = static_cast<double>(unknown) / nearest.size();
    sweep.push_back(point);
  }
  return sweep;
}

}  // namespace adpipe
