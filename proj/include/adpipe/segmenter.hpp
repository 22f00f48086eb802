#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "adpipe/query_bank.hpp"
#include "adpipe/timed_text.hpp"

namespace adpipe {

struct TimeInterval {
  double start_s = 0.0;
  double end_s = 0.0;
  bool operator==(const TimeInterval&) const = default;
};

// Dialogue-free intervals of at least min_gap_s seconds: the complement of
// the merged subtitle spans within [0, duration_s]. Subtitles must arrive
// sorted by start time unless sort_input is set; duration_s must reach the
// last subtitle end.
std::vector<TimeInterval> find_gaps(const std::vector<TimedText>& subtitles,
                                    double duration_s, double min_gap_s,
                                    bool sort_input = false);

enum class AdType { kNone = 0, kType1 = 1, kType2 = 2, kType3 = 3 };

// Classifies one description against the cast: type 1 names a recognized
// character, type 2 names only unrecognized ones, type 3 names nobody while
// someone was recognized, none when neither side has a character. Name
// matching is whole-word and case-insensitive.
AdType tag_ad_type(const std::string& ad_text, const QueryBank& bank,
                   const std::set<std::string>& recognized_names);

// Sampled frame indices of a clip: floor(start_s * fps) stepping by stride,
// keeping the first index and dropping indices at or past floor(end_s * fps).
std::vector<int> keyframe_indices(double start_s, double end_s, double fps,
                                  int stride);

// A dialogue-free clip with its narrative context attached.
struct ClipSpec {
  std::string movie_id;
  double start_s = 0.0;
  double end_s = 0.0;
  std::vector<TimedText> prior_ads;
  std::vector<TimedText> prior_subtitles;
  AdType ad_type = AdType::kNone;
  bool operator==(const ClipSpec&) const = default;
};

// SubRip parser ("HH:MM:SS,mmm --> HH:MM:SS,mmm" blocks). Multi-line cues are
// joined with single spaces; malformed blocks raise InputError naming
// source_name and the line.
std::vector<TimedText> parse_srt(std::istream& in, const std::string& source_name);

}  // namespace adpipe
