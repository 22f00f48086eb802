#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adpipe/prompt.hpp"
#include "adpipe/query_bank.hpp"
#include "adpipe/recognition.hpp"
#include "adpipe/redundancy.hpp"
#include "adpipe/segmenter.hpp"
#include "adpipe/timed_text.hpp"
#include "adpipe/token_merge.hpp"
#include "adpipe/track.hpp"

// Readers validate schema and report problems as InputError naming the
// source, line and field. Writers emit stable field order and shortest
// round-trip number formatting, so identical data yields identical bytes.
namespace adpipe::io {

std::string format_double(double v);

// --- query banks (single JSON document) ---
void save_bank(const QueryBank& bank, std::ostream& out);
void save_bank(const QueryBank& bank, const std::string& path);
QueryBank load_bank(std::istream& in, const std::string& source_name);
QueryBank load_bank(const std::string& path);

// --- portrait rows {"character","id","vector"} grouped in input order ---
std::vector<PortraitSet> load_portraits(std::istream& in, const std::string& source_name);
std::vector<PortraitSet> load_portraits(const std::string& path);

// --- detections {"frame","bbox","id","vector"}; embeddings must be unit norm ---
std::vector<FaceDetection> load_detections(std::istream& in, const std::string& source_name);
std::vector<FaceDetection> load_detections(const std::string& path);
void save_detections(const std::vector<FaceDetection>& detections, std::ostream& out);

// Detections with an extra ground-truth "label" field, for threshold sweeps.
std::vector<LabeledDetection> load_labeled_detections(std::istream& in,
                                                      const std::string& source_name);
std::vector<LabeledDetection> load_labeled_detections(const std::string& path);

// Groups detections into a timeline. With explicit keyframes, every listed
// frame appears (possibly empty) and stray detections are an error; without,
// the frames present in the input are used.
DetectionTimeline build_timeline(const std::vector<FaceDetection>& detections,
                                 const std::optional<std::vector<int>>& keyframes);

// --- recognition results {"id","frame","label","min_distance"} ---
struct FrameRecognition {
  int frame_index = 0;
  std::vector<RecognitionResult> results;
};
void save_recognition(const std::vector<FrameRecognition>& frames, std::ostream& out);

// --- anchors {"frame","id","character"} ---
std::vector<TrackAnchor> load_anchors(std::istream& in, const std::string& source_name);
std::vector<TrackAnchor> load_anchors(const std::string& path);

// --- tracks: assignment rows plus one lost-frames row per character ---
void save_tracks(const std::vector<Track>& tracks, std::ostream& out);
void save_tracks(const std::vector<Track>& tracks, const std::string& path);
// Loaded assignments carry only the persisted fields; embeddings and
// detection ids stay empty.
std::vector<Track> load_tracks(std::istream& in, const std::string& source_name);
std::vector<Track> load_tracks(const std::string& path);

// --- timed text {"start_s","end_s","text","kind"} ---
std::vector<TimedText> load_timed_text(std::istream& in, const std::string& source_name);
std::vector<TimedText> load_timed_text(const std::string& path);
void save_timed_text(const std::vector<TimedText>& records, std::ostream& out);

// Reads subtitles from either SubRip (.srt) or timed-text JSONL, by extension.
std::vector<TimedText> load_subtitles(const std::string& path);

// --- clip specs ---
void save_clip_specs(const std::vector<ClipSpec>& clips, std::ostream& out);
void save_clip_specs(const std::vector<ClipSpec>& clips, const std::string& path);
std::vector<ClipSpec> load_clip_specs(std::istream& in, const std::string& source_name);
std::vector<ClipSpec> load_clip_specs(const std::string& path);

// --- token sequences {"index","vector"} with optional trailing runs row ---
TokenSequence load_tokens(std::istream& in, const std::string& source_name);
TokenSequence load_tokens(const std::string& path);
void save_tokens(const TokenSequence& seq,
                 const std::vector<std::pair<int, int>>* runs, std::ostream& out);

// --- prompt templates (single JSON document) ---
PromptTemplateSet load_templates(std::istream& in, const std::string& source_name);
PromptTemplateSet load_templates(const std::string& path);

// --- word vectors {"word","vector"} plus one stopword per line ---
WordVectorLookup load_lookup(const std::string& vectors_path,
                             const std::string& stopwords_path);

// --- caption pairs {"id","generated","ground_truth"} ---
struct ScorePair {
  std::string id;
  std::string generated;
  std::string ground_truth;
};
std::vector<ScorePair> load_score_pairs(std::istream& in, const std::string& source_name);
std::vector<ScorePair> load_score_pairs(const std::string& path);

}  // namespace adpipe::io
