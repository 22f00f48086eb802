#include "adpipe/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "adpipe/errors.hpp"
#include "json.hpp"

namespace adpipe::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& message) {
  throw InputError(source + (line ? ":" + std::to_string(line) : "") + ": " +
                   message);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  return out;
}

json parse_json(const std::string& text, const std::string& source,
                std::size_t line) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) fail(source, line, "malformed JSON");
  return parsed;
}

const json& field(const json& j, const char* name, const std::string& source,
                  std::size_t line) {
  if (!j.is_object()) fail(source, line, "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(source, line, std::string("missing field '") + name + "'");
  return *it;
}

std::string get_string(const json& j, const char* name,
                       const std::string& source, std::size_t line) {
  const json& v = field(j, name, source, line);
  if (!v.is_string()) fail(source, line, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

double get_double(const json& j, const char* name, const std::string& source,
                  std::size_t line) {
  const json& v = field(j, name, source, line);
  if (!v.is_number()) fail(source, line, std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

int get_int(const json& j, const char* name, const std::string& source,
            std::size_t line) {
  const json& v = field(j, name, source, line);
  if (!v.is_number_integer()) {
    fail(source, line, std::string("field '") + name + "' must be an integer");
  }
  return v.get<int>();
}

std::vector<double> get_vector(const json& j, const char* name,
                               const std::string& source, std::size_t line) {
  const json& v = field(j, name, source, line);
  if (!v.is_array() || v.empty()) {
    fail(source, line, std::string("field '") + name + "' must be a non-empty array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& item : v) {
    if (!item.is_number()) {
      fail(source, line, std::string("field '") + name + "' must contain numbers only");
    }
    out.push_back(item.get<double>());
  }
  return out;
}

BBox get_bbox(const json& j, const std::string& source, std::size_t line) {
  const json& v = field(j, "bbox", source, line);
  if (!v.is_array() || v.size() != 4) {
    fail(source, line, "field 'bbox' must be an [x, y, w, h] array");
  }
  for (const json& item : v) {
    if (!item.is_number()) fail(source, line, "field 'bbox' must contain numbers only");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
          v[3].get<double>()};
}

// Applies fn to every non-empty line; fn gets the parsed object and line number.
template <typename Fn>
void for_each_jsonl(std::istream& in, const std::string& source, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(parse_json(line, source, line_no), line_no);
  }
}

ordered_json vector_json(const std::vector<double>& values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

ordered_json bbox_json(const BBox& box) {
  return ordered_json::array({box.x, box.y, box.w, box.h});
}

TextKind parse_kind(const std::string& kind, const std::string& source,
                    std::size_t line) {
  if (kind == "subtitle") return TextKind::kSubtitle;
  if (kind == "ad") return TextKind::kAd;
  fail(source, line, "field 'kind' must be 'subtitle' or 'ad', got '" + kind + "'");
}

const char* kind_name(TextKind kind) {
  return kind == TextKind::kAd ? "ad" : "subtitle";
}

Provenance parse_provenance(const std::string& name, const std::string& source,
                            std::size_t line) {
  if (name == "anchor") return Provenance::kAnchor;
  if (name == "forward") return Provenance::kForward;
  if (name == "backward") return Provenance::kBackward;
  fail(source, line,
       "field 'provenance' must be anchor, forward or backward, got '" + name + "'");
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kAnchor: return "anchor";
    case Provenance::kForward: return "forward";
    case Provenance::kBackward: return "backward";
  }
  return "anchor";
}

TimedText timed_text_from(const json& j, const std::string& source,
                          std::size_t line) {
  TimedText record;
  record.start_s = get_double(j, "start_s", source, line);
  record.end_s = get_double(j, "end_s", source, line);
  record.text = get_string(j, "text", source, line);
  record.kind = parse_kind(get_string(j, "kind", source, line), source, line);
  if (record.start_s < 0.0) fail(source, line, "field 'start_s' must be non-negative");
  if (record.end_s <= record.start_s) {
    fail(source, line, "field 'end_s' must exceed 'start_s'");
  }
  if (record.text.find_first_not_of(" \t") == std::string::npos) {
    fail(source, line, "field 'text' must not be blank");
  }
  return record;
}

ordered_json timed_text_json(const TimedText& record) {
  return ordered_json{{"start_s", record.start_s},
                      {"end_s", record.end_s},
                      {"text", record.text},
                      {"kind", kind_name(record.kind)}};
}

}  // namespace

std::string format_double(double v) {
  return json(v).dump();
}

void save_bank(const QueryBank& bank, std::ostream& out) {
  ordered_json entries = ordered_json::array();
  for (const BankEntry& entry : bank.entries) {
    entries.push_back(ordered_json{{"name", entry.name},
                                   {"query", vector_json(entry.query.values)}});
  }
  ordered_json doc{{"movie_id", bank.movie_id},
                   {"dim", bank.dim},
                   {"epsilon", bank.epsilon},
                   {"objective_value", bank.objective_value},
                   {"entries", std::move(entries)}};
  out << doc.dump(2) << '\n';
}

void save_bank(const QueryBank& bank, const std::string& path) {
  auto out = open_output(path);
  save_bank(bank, out);
}

QueryBank load_bank(std::istream& in, const std::string& source_name) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json doc = parse_json(buffer.str(), source_name, 0);

  QueryBank bank;
  bank.movie_id = get_string(doc, "movie_id", source_name, 0);
  const int dim = get_int(doc, "dim", source_name, 0);
  if (dim < 1) fail(source_name, 0, "field 'dim' must be positive");
  bank.dim = static_cast<std::size_t>(dim);
  bank.epsilon = get_double(doc, "epsilon", source_name, 0);
  if (!(bank.epsilon > 0.0)) fail(source_name, 0, "field 'epsilon' must be positive");
  bank.objective_value = get_double(doc, "objective_value", source_name, 0);

  const json& entries = field(doc, "entries", source_name, 0);
  if (!entries.is_array() || entries.empty()) {
    fail(source_name, 0, "field 'entries' must be a non-empty array");
  }
  for (const json& item : entries) {
    BankEntry entry;
    entry.name = get_string(item, "name", source_name, 0);
    entry.query = Embedding(get_vector(item, "query", source_name, 0));
    if (entry.query.dim() != bank.dim) {
      fail(source_name, 0, "entry '" + entry.name + "' has dimension " +
                               std::to_string(entry.query.dim()) + ", expected " +
                               std::to_string(bank.dim));
    }
    for (const BankEntry& existing : bank.entries) {
      if (existing.name == entry.name) {
        fail(source_name, 0, "duplicate entry name '" + entry.name + "'");
      }
    }
    bank.entries.push_back(std::move(entry));
  }
  return bank;
}

QueryBank load_bank(const std::string& path) {
  auto in = open_input(path);
  return load_bank(in, path);
}

std::vector<PortraitSet> load_portraits(std::istream& in,
                                        const std::string& source_name) {
  std::vector<PortraitSet> sets;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    const std::string character = get_string(j, "character", source_name, line);
    const std::string id = get_string(j, "id", source_name, line);
    Embedding vec(get_vector(j, "vector", source_name, line));
    auto it = std::find_if(sets.begin(), sets.end(), [&](const PortraitSet& s) {
      return s.character_name == character;
    });
    if (it == sets.end()) {
      sets.push_back({character, {}, {}});
      it = sets.end() - 1;
    }
    if (!it->embeddings.empty() && it->embeddings.front().dim() != vec.dim()) {
      fail(source_name, line, "character '" + character + "' mixes dimensions");
    }
    it->embeddings.push_back(std::move(vec));
    it->source_ids.push_back(id);
  });
  if (sets.empty()) throw InputError(source_name + ": no portrait rows");
  return sets;
}

std::vector<PortraitSet> load_portraits(const std::string& path) {
  auto in = open_input(path);
  return load_portraits(in, path);
}

namespace {

FaceDetection detection_from(const json& j, const std::string& source,
                             std::size_t line) {
  FaceDetection det;
  det.frame_index = get_int(j, "frame", source, line);
  det.bbox = get_bbox(j, source, line);
  det.detection_id = get_string(j, "id", source, line);
  det.embedding = Embedding(get_vector(j, "vector", source, line));
  if (det.frame_index < 0) fail(source, line, "field 'frame' must be non-negative");
  if (det.bbox.w <= 0.0 || det.bbox.h <= 0.0) {
    fail(source, line, "field 'bbox' needs positive width and height");
  }
  const double norm = l2_norm(det.embedding);
  if (std::abs(norm - 1.0) > 1e-6) {
    fail(source, line, "detection '" + det.detection_id +
                           "' embedding norm " + format_double(norm) +
                           " is not unit");
  }
  return det;
}

}  // namespace

std::vector<FaceDetection> load_detections(std::istream& in,
                                           const std::string& source_name) {
  std::vector<FaceDetection> detections;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    detections.push_back(detection_from(j, source_name, line));
  });
  return detections;
}

std::vector<FaceDetection> load_detections(const std::string& path) {
  auto in = open_input(path);
  return load_detections(in, path);
}

void save_detections(const std::vector<FaceDetection>& detections,
                     std::ostream& out) {
  for (const FaceDetection& det : detections) {
    ordered_json row{{"frame", det.frame_index},
                     {"bbox", bbox_json(det.bbox)},
                     {"id", det.detection_id},
                     {"vector", vector_json(det.embedding.values)}};
    out << row.dump() << '\n';
  }
}

std::vector<LabeledDetection> load_labeled_detections(
    std::istream& in, const std::string& source_name) {
  std::vector<LabeledDetection> labeled;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    LabeledDetection item;
    item.face = detection_from(j, source_name, line);
    item.true_label = get_string(j, "label", source_name, line);
    labeled.push_back(std::move(item));
  });
  return labeled;
}

std::vector<LabeledDetection> load_labeled_detections(const std::string& path) {
  auto in = open_input(path);
  return load_labeled_detections(in, path);
}

DetectionTimeline build_timeline(const std::vector<FaceDetection>& detections,
                                 const std::optional<std::vector<int>>& keyframes) {
  DetectionTimeline timeline;
  if (keyframes) {
    for (std::size_t i = 1; i < keyframes->size(); ++i) {
      if ((*keyframes)[i] <= (*keyframes)[i - 1]) {
        throw InvariantError("build_timeline: keyframes must be strictly increasing");
      }
    }
    timeline.frames.reserve(keyframes->size());
    for (int frame : *keyframes) timeline.frames.push_back({frame, {}});
    for (const FaceDetection& det : detections) {
      auto it = std::lower_bound(
          timeline.frames.begin(), timeline.frames.end(), det.frame_index,
          [](const FrameDetections& f, int frame) { return f.frame_index < frame; });
      if (it == timeline.frames.end() || it->frame_index != det.frame_index) {
        throw InvariantError("build_timeline: detection '" + det.detection_id +
                             "' sits in frame " + std::to_string(det.frame_index) +
                             " outside the keyframe list");
      }
      it->detections.push_back(det);
    }
  } else {
    for (const FaceDetection& det : detections) {
      auto it = std::find_if(timeline.frames.begin(), timeline.frames.end(),
                             [&](const FrameDetections& f) {
                               return f.frame_index == det.frame_index;
                             });
      if (it == timeline.frames.end()) {
        timeline.frames.push_back({det.frame_index, {}});
        it = timeline.frames.end() - 1;
      }
      it->detections.push_back(det);
    }
    std::sort(timeline.frames.begin(), timeline.frames.end(),
              [](const FrameDetections& a, const FrameDetections& b) {
                return a.frame_index < b.frame_index;
              });
  }
  return timeline;
}

void save_recognition(const std::vector<FrameRecognition>& frames,
                      std::ostream& out) {
  for (const FrameRecognition& frame : frames) {
    for (const RecognitionResult& r : frame.results) {
      ordered_json row{{"id", r.detection_id},
                       {"frame", frame.frame_index},
                       {"label", r.label},
                       {"min_distance", r.min_distance}};
      out << row.dump() << '\n';
    }
  }
}

std::vector<TrackAnchor> load_anchors(std::istream& in,
                                      const std::string& source_name) {
  std::vector<TrackAnchor> anchors;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    TrackAnchor anchor;
    anchor.frame_index = get_int(j, "frame", source_name, line);
    anchor.detection_id = get_string(j, "id", source_name, line);
    anchor.character_name = get_string(j, "character", source_name, line);
    if (anchor.character_name == kUnknownLabel) {
      fail(source_name, line, "anchors must name a known character");
    }
    anchors.push_back(std::move(anchor));
  });
  return anchors;
}

std::vector<TrackAnchor> load_anchors(const std::string& path) {
  auto in = open_input(path);
  return load_anchors(in, path);
}

void save_tracks(const std::vector<Track>& tracks, std::ostream& out) {
  for (const Track& track : tracks) {
    for (const auto& [frame, assignment] : track.assignments) {
      ordered_json row{{"character", track.character_name},
                       {"frame", frame},
                       {"bbox", bbox_json(assignment.bbox)},
                       {"provenance", provenance_name(assignment.provenance)},
                       {"anchor_distance", assignment.anchor_distance}};
      out << row.dump() << '\n';
    }
    ordered_json lost{{"character", track.character_name},
                      {"lost_frames", track.lost_frames}};
    out << lost.dump() << '\n';
  }
}

void save_tracks(const std::vector<Track>& tracks, const std::string& path) {
  auto out = open_output(path);
  save_tracks(tracks, out);
}

std::vector<Track> load_tracks(std::istream& in, const std::string& source_name) {
  std::vector<Track> tracks;
  auto track_for = [&](const std::string& name) -> Track& {
    auto it = std::find_if(tracks.begin(), tracks.end(), [&](const Track& t) {
      return t.character_name == name;
    });
    if (it != tracks.end()) return *it;
    tracks.push_back({name, {}, {}});
    return tracks.back();
  };
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    const std::string character = get_string(j, "character", source_name, line);
    if (j.contains("lost_frames")) {
      const json& lost = field(j, "lost_frames", source_name, line);
      if (!lost.is_array()) {
        fail(source_name, line, "field 'lost_frames' must be an array");
      }
      Track& track = track_for(character);
      for (const json& frame : lost) {
        if (!frame.is_number_integer()) {
          fail(source_name, line, "field 'lost_frames' must contain integers");
        }
        track.lost_frames.insert(frame.get<int>());
      }
      return;
    }
    TrackAssignment assignment;
    const int frame = get_int(j, "frame", source_name, line);
    assignment.bbox = get_bbox(j, source_name, line);
    assignment.provenance = parse_provenance(
        get_string(j, "provenance", source_name, line), source_name, line);
    assignment.anchor_distance = get_int(j, "anchor_distance", source_name, line);
    if (assignment.anchor_distance < 0) {
      fail(source_name, line, "field 'anchor_distance' must be non-negative");
    }
    Track& track = track_for(character);
    if (!track.assignments.emplace(frame, std::move(assignment)).second) {
      fail(source_name, line, "duplicate assignment for '" + character +
                                  "' in frame " + std::to_string(frame));
    }
  });
  return tracks;
}

std::vector<Track> load_tracks(const std::string& path) {
  auto in = open_input(path);
  return load_tracks(in, path);
}

std::vector<TimedText> load_timed_text(std::istream& in,
                                       const std::string& source_name) {
  std::vector<TimedText> records;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    records.push_back(timed_text_from(j, source_name, line));
  });
  return records;
}

std::vector<TimedText> load_timed_text(const std::string& path) {
  auto in = open_input(path);
  return load_timed_text(in, path);
}

void save_timed_text(const std::vector<TimedText>& records, std::ostream& out) {
  for (const TimedText& record : records) {
    out << timed_text_json(record).dump() << '\n';
  }
}

std::vector<TimedText> load_subtitles(const std::string& path) {
  auto in = open_input(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".srt") == 0) {
    return parse_srt(in, path);
  }
  return load_timed_text(in, path);
}

namespace {

ordered_json clip_json(const ClipSpec& clip) {
  ordered_json prior_ads = ordered_json::array();
  for (const TimedText& record : clip.prior_ads) prior_ads.push_back(timed_text_json(record));
  ordered_json prior_subs = ordered_json::array();
  for (const TimedText& record : clip.prior_subtitles) {
    prior_subs.push_back(timed_text_json(record));
  }
  ordered_json row{{"movie_id", clip.movie_id},
                   {"start_s", clip.start_s},
                   {"end_s", clip.end_s},
                   {"ad_type", nullptr},
                   {"prior_ads", std::move(prior_ads)},
                   {"prior_subtitles", std::move(prior_subs)}};
  if (clip.ad_type != AdType::kNone) row["ad_type"] = static_cast<int>(clip.ad_type);
  return row;
}

}  // namespace

void save_clip_specs(const std::vector<ClipSpec>& clips, std::ostream& out) {
  for (const ClipSpec& clip : clips) out << clip_json(clip).dump() << '\n';
}

void save_clip_specs(const std::vector<ClipSpec>& clips, const std::string& path) {
  auto out = open_output(path);
  save_clip_specs(clips, out);
}

std::vector<ClipSpec> load_clip_specs(std::istream& in,
                                      const std::string& source_name) {
  std::vector<ClipSpec> clips;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    ClipSpec clip;
    clip.movie_id = get_string(j, "movie_id", source_name, line);
    clip.start_s = get_double(j, "start_s", source_name, line);
    clip.end_s = get_double(j, "end_s", source_name, line);
    if (clip.end_s <= clip.start_s) {
      fail(source_name, line, "field 'end_s' must exceed 'start_s'");
    }
    const json& ad_type = field(j, "ad_type", source_name, line);
    if (ad_type.is_null()) {
      clip.ad_type = AdType::kNone;
    } else if (ad_type.is_number_integer() && ad_type.get<int>() >= 1 &&
               ad_type.get<int>() <= 3) {
      clip.ad_type = static_cast<AdType>(ad_type.get<int>());
    } else {
      fail(source_name, line, "field 'ad_type' must be null or 1, 2, 3");
    }
    const json& ads = field(j, "prior_ads", source_name, line);
    const json& subs = field(j, "prior_subtitles", source_name, line);
    if (!ads.is_array() || !subs.is_array()) {
      fail(source_name, line, "prior record fields must be arrays");
    }
    for (const json& item : ads) {
      clip.prior_ads.push_back(timed_text_from(item, source_name, line));
    }
    for (const json& item : subs) {
      clip.prior_subtitles.push_back(timed_text_from(item, source_name, line));
    }
    clips.push_back(std::move(clip));
  });
  return clips;
}

std::vector<ClipSpec> load_clip_specs(const std::string& path) {
  auto in = open_input(path);
  return load_clip_specs(in, path);
}

TokenSequence load_tokens(std::istream& in, const std::string& source_name) {
  struct Row {
    int index;
    Embedding vector;
  };
  std::vector<Row> rows;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    if (j.contains("runs")) return;  // merge metadata row, not a token
    Row row;
    row.index = get_int(j, "index", source_name, line);
    row.vector = Embedding(get_vector(j, "vector", source_name, line));
    rows.push_back(std::move(row));
  });
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].index != static_cast<int>(i)) {
      throw InputError(source_name + ": token indices must cover 0..n-1, missing " +
                       std::to_string(i));
    }
  }
  TokenSequence seq;
  seq.tokens.reserve(rows.size());
  for (Row& row : rows) seq.tokens.push_back(std::move(row.vector));
  return seq;
}

TokenSequence load_tokens(const std::string& path) {
  auto in = open_input(path);
  return load_tokens(in, path);
}

void save_tokens(const TokenSequence& seq,
                 const std::vector<std::pair<int, int>>* runs, std::ostream& out) {
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    ordered_json row{{"index", i}, {"vector", vector_json(seq.tokens[i].values)}};
    out << row.dump() << '\n';
  }
  if (runs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [start, end] : *runs) {
      arr.push_back(ordered_json::array({start, end}));
    }
    out << ordered_json{{"runs", std::move(arr)}}.dump() << '\n';
  }
}

PromptTemplateSet load_templates(std::istream& in, const std::string& source_name) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json doc = parse_json(buffer.str(), source_name, 0);
  PromptTemplateSet templates;
  templates.base = get_string(doc, "base", source_name, 0);
  templates.character = get_string(doc, "char", source_name, 0);
  templates.multi_prefix = get_string(doc, "multi_prefix", source_name, 0);
  const json& slots = field(doc, "soft_slots", source_name, 0);
  if (!slots.is_array()) fail(source_name, 0, "field 'soft_slots' must be an array");
  for (const json& slot : slots) {
    if (!slot.is_string()) {
      fail(source_name, 0, "field 'soft_slots' must contain strings");
    }
    templates.soft_slots.push_back(slot.get<std::string>());
  }
  return templates;
}

PromptTemplateSet load_templates(const std::string& path) {
  auto in = open_input(path);
  return load_templates(in, path);
}

WordVectorLookup load_lookup(const std::string& vectors_path,
                             const std::string& stopwords_path) {
  WordVectorLookup lookup;
  auto in = open_input(vectors_path);
  std::size_t dim = 0;
  for_each_jsonl(in, vectors_path, [&](const json& j, std::size_t line) {
    const std::string word = get_string(j, "word", vectors_path, line);
    Embedding vec(get_vector(j, "vector", vectors_path, line));
    if (dim == 0) dim = vec.dim();
    if (vec.dim() != dim) {
      fail(vectors_path, line, "word '" + word + "' has dimension " +
                                   std::to_string(vec.dim()) + ", expected " +
                                   std::to_string(dim));
    }
    if (!lookup.vocabulary.emplace(word, std::move(vec)).second) {
      fail(vectors_path, line, "duplicate word '" + word + "'");
    }
  });

  auto stops = open_input(stopwords_path);
  std::string line;
  while (std::getline(stops, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t");
    lookup.stop_set.insert(line.substr(begin, end - begin + 1));
  }
  return lookup;
}

std::vector<ScorePair> load_score_pairs(std::istream& in,
                                        const std::string& source_name) {
  std::vector<ScorePair> pairs;
  for_each_jsonl(in, source_name, [&](const json& j, std::size_t line) {
    ScorePair pair;
    pair.id = get_string(j, "id", source_name, line);
    pair.generated = get_string(j, "generated", source_name, line);
    pair.ground_truth = get_string(j, "ground_truth", source_name, line);
    pairs.push_back(std::move(pair));
  });
  return pairs;
}

std::vector<ScorePair> load_score_pairs(const std::string& path) {
  auto in = open_input(path);
  return load_score_pairs(in, path);
}

}  // namespace adpipe::io
