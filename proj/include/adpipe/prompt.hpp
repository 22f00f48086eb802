#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adpipe/timed_text.hpp"

namespace adpipe {

// Instruction templates for prompt assembly. The character template must
// contain the {name} placeholder exactly once; soft-prompt slots are literal
// marker substrings (for example "<style>") and must be distinct.
struct PromptTemplateSet {
  std::string base;
  std::string character;
  std::string multi_prefix;
  std::vector<std::string> soft_slots;
};

struct SlotPosition {
  std::string slot_id;
  // Index into character_names_in_order when the slot sits inside a character
  // clause; empty for base / prefix slots.
  std::optional<int> character_index;
  bool operator==(const SlotPosition&) const = default;
};

struct AssembledPrompt {
  std::string text;
  std::vector<SlotPosition> slot_positions;  // in order of appearance
  std::vector<std::string> character_names_in_order;
};

// Builds the instruction prompt for the characters present in a clip. Zero
// names produce the base template alone; one name prepends its character
// clause; several names additionally start with the multi-character prefix.
// Clauses are joined with single spaces. Names must be unique and must not
// include the Unknown label.
AssembledPrompt assemble_prompt(const std::vector<std::string>& names,
                                const PromptTemplateSet& templates);

// The records feeding the narrative context paragraph.
struct TextPriorSelection {
  std::vector<TimedText> ads;
  std::vector<TimedText> subtitles;
};

// Picks the last n_ads descriptions ending at or before current_start_s plus
// every subtitle starting inside [earliest selected description, clip start).
// History must be sorted by start time.
TextPriorSelection select_text_prior(const std::vector<TimedText>& history,
                                     double current_start_s, int n_ads = 3);

// Chronological merge of a selection into one paragraph; each record carries
// its kind tag. Empty selection renders as "".
std::string render_text_prior(const TextPriorSelection& selection);

std::string build_text_prior(const std::vector<TimedText>& history,
                             double current_start_s, int n_ads = 3);

}  // namespace adpipe
