#include "adpipe/segmenter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {

std::vector<TimeInterval> find_gaps(const std::vector<TimedText>& subtitles,
                                    double duration_s, double min_gap_s,
                                    bool sort_input) {
  if (duration_s <= 0.0) {
    throw InvariantError("find_gaps: duration must be positive");
  }
  if (min_gap_s <= 0.0) {
    throw InvariantError("find_gaps: min_gap_s must be positive");
  }
  std::vector<TimedText> spans = subtitles;
  if (sort_input) {
    std::stable_sort(spans.begin(), spans.end(),
                     [](const TimedText& a, const TimedText& b) {
                       return a.start_s < b.start_s;
                     });
  }
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].end_s <= spans[i].start_s) {
      throw InvariantError("find_gaps: subtitle " + std::to_string(i) +
                           " has non-positive span");
    }
    if (spans[i].end_s > duration_s) {
      throw InvariantError("find_gaps: subtitle " + std::to_string(i) +
                           " ends after the movie duration");
    }
    if (i > 0 && spans[i].start_s < spans[i - 1].start_s) {
      throw InvariantError(
          "find_gaps: subtitles not sorted by start time at index " +
          std::to_string(i));
    }
  }

  // Coalesce touching or overlapping spans, then emit the complement.
  std::vector<TimeInterval> merged;
  for (const TimedText& span : spans) {
    if (!merged.empty() && span.start_s <= merged.back().end_s) {
      merged.back().end_s = std::max(merged.back().end_s, span.end_s);
    } else {
      merged.push_back({span.start_s, span.end_s});
    }
  }

  std::vector<TimeInterval> gaps;
  double cursor = 0.0;
  for (const TimeInterval& span : merged) {
    if (span.start_s - cursor >= min_gap_s) gaps.push_back({cursor, span.start_s});
    cursor = std::max(cursor, span.end_s);
  }
  if (duration_s - cursor >= min_gap_s) gaps.push_back({cursor, duration_s});
  return gaps;
}

namespace {

std::string to_lower(const std::string& text) {
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

// Whole-word, case-insensitive containment; handles multi-word names.
bool mentions_name(const std::string& lowered_text, const std::string& name) {
  const std::string needle = to_lower(name);
  if (needle.empty()) return false;
  for (std::size_t pos = lowered_text.find(needle); pos != std::string::npos;
       pos = lowered_text.find(needle, pos + 1)) {
    const bool left_ok = pos == 0 || !is_word_char(lowered_text[pos - 1]);
    const std::size_t end = pos + needle.size();
    const bool right_ok =
        end == lowered_text.size() || !is_word_char(lowered_text[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

}  // namespace

AdType tag_ad_type(const std::string& ad_text, const QueryBank& bank,
                   const std::set<std::string>& recognized_names) {
  if (bank.entries.empty()) {
    throw InvariantError("tag_ad_type: empty query bank");
  }
  const std::string lowered = to_lower(ad_text);
  bool mentions_any = false;
  bool mentions_recognized = false;
  for (const BankEntry& entry : bank.entries) {
    if (!mentions_name(lowered, entry.name)) continue;
    mentions_any = true;
    if (recognized_names.count(entry.name)) mentions_recognized = true;
  }
  if (mentions_recognized) return AdType::kType1;
  if (mentions_any) return AdType::kType2;
  if (!recognized_names.empty()) return AdType::kType3;
  return AdType::kNone;
}

std::vector<int> keyframe_indices(double start_s, double end_s, double fps,
                                  int stride) {
  if (end_s <= start_s) {
    throw InvariantError("keyframe_indices: clip end must exceed its start");
  }
  if (fps <= 0.0) {
    throw InvariantError("keyframe_indices: fps must be positive");
  }
  if (stride < 1) {
    throw InvariantError("keyframe_indices: stride must be at least 1");
  }
  const int first = static_cast<int>(std::floor(start_s * fps));
  const int end_frame = static_cast<int>(std::floor(end_s * fps));
  std::vector<int> indices{first};
  for (int idx = first + stride; idx < end_frame; idx += stride) {
    indices.push_back(idx);
  }
  return indices;
}

namespace {

bool parse_srt_timestamp(const std::string& token, double* seconds) {
  int h = 0;
  int m = 0;
  int s = 0;
  int ms = 0;
  char sep = 0;
  int consumed = 0;
  if (std::sscanf(token.c_str(), " %d:%d:%d%c%3d%n", &h, &m, &s, &sep, &ms,
                  &consumed) != 5) {
    return false;
  }
  for (std::size_t i = consumed; i < token.size(); ++i) {
    if (token[i] != ' ' && token[i] != '\t') return false;
  }
  if (sep != ',' && sep != '.') return false;
  if (h < 0 || m < 0 || m > 59 || s < 0 || s > 59 || ms < 0 || ms > 999) {
    return false;
  }
  *seconds = h * 3600.0 + m * 60.0 + s + ms / 1000.0;
  return true;
}

std::string strip_cr(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.pop_back();
  }
  return line;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

std::vector<TimedText> parse_srt(std::istream& in, const std::string& source_name) {
  std::vector<TimedText> cues;
  std::string line;
  std::size_t line_no = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (first_line && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
      line.erase(0, 3);  // UTF-8 byte order mark
    }
    first_line = false;
    if (is_blank(line)) continue;

    // Optional numeric cue counter.
    const bool counter =
        !line.empty() && line.find_first_not_of("0123456789") == std::string::npos;
    if (counter) {
      if (!std::getline(in, line)) {
        throw InputError(source_name + ":" + std::to_string(line_no) +
                         ": cue counter without a timing line");
      }
      ++line_no;
      line = strip_cr(line);
    }

    const std::size_t arrow = line.find("-->");
    if (arrow == std::string::npos) {
      throw InputError(source_name + ":" + std::to_string(line_no) +
                       ": expected 'start --> end' timing line");
    }
    TimedText cue;
    cue.kind = TextKind::kSubtitle;
    double start = 0.0;
    double end = 0.0;
    std::string lhs = line.substr(0, arrow);
    std::string rhs = line.substr(arrow + 3);
    if (!parse_srt_timestamp(lhs, &start) || !parse_srt_timestamp(rhs, &end)) {
      throw InputError(source_name + ":" + std::to_string(line_no) +
                       ": malformed timestamp in '" + line + "'");
    }
    if (end <= start) {
      throw InputError(source_name + ":" + std::to_string(line_no) +
                       ": cue ends before it starts");
    }
    cue.start_s = start;
    cue.end_s = end;

    std::string text;
    while (std::getline(in, line)) {
      ++line_no;
      line = strip_cr(line);
      if (is_blank(line)) break;
      if (!text.empty()) text += ' ';
      text += line;
    }
    if (text.empty()) {
      throw InputError(source_name + ":" + std::to_string(line_no) +
                       ": cue has no text");
    }
    cue.text = std::move(text);
    cues.push_back(std::move(cue));
  }
  return cues;
}

}  // namespace adpipe
