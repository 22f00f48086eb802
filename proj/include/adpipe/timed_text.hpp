#pragma once

#include <string>

namespace adpipe {

enum class TextKind { kSubtitle, kAd };

// A subtitle line or an audio-description sentence with its time span.
struct TimedText {
  double start_s = 0.0;
  double end_s = 0.0;
  std::string text;
  TextKind kind = TextKind::kSubtitle;
  bool operator==(const TimedText&) const = default;
};

}  // namespace adpipe
