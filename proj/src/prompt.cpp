#include "adpipe/prompt.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "adpipe/errors.hpp"
#include "adpipe/recognition.hpp"

namespace adpipe {
namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  if (needle.empty()) return 0;
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

void validate_templates(const PromptTemplateSet& templates) {
  if (count_occurrences(templates.character, "{name}") != 1) {
    throw InvariantError(
        "prompt templates: character clause must contain {name} exactly once");
  }
  std::set<std::string> seen;
  for (const std::string& slot : templates.soft_slots) {
    if (slot.empty()) {
      throw InvariantError("prompt templates: empty soft slot marker");
    }
    if (!seen.insert(slot).second) {
      throw InvariantError("prompt templates: duplicate soft slot marker '" +
                           slot + "'");
    }
  }
}

// Records every soft slot occurring in one assembled clause, in text order.
void collect_slots(const std::string& clause, const PromptTemplateSet& templates,
                   std::optional<int> character_index, AssembledPrompt& prompt) {
  std::vector<std::pair<std::size_t, const std::string*>> hits;
  for (const std::string& slot : templates.soft_slots) {
    for (std::size_t pos = clause.find(slot); pos != std::string::npos;
         pos = clause.find(slot, pos + slot.size())) {
      hits.emplace_back(pos, &slot);
    }
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& [pos, slot] : hits) {
    prompt.slot_positions.push_back({*slot, character_index});
  }
}

}  // namespace

AssembledPrompt assemble_prompt(const std::vector<std::string>& names,
                                const PromptTemplateSet& templates) {
  validate_templates(templates);
  std::set<std::string> unique;
  for (const std::string& name : names) {
    if (name == kUnknownLabel) {
      throw InvariantError("assemble_prompt: '" + std::string(kUnknownLabel) +
                           "' is not a character name");
    }
    if (!unique.insert(name).second) {
      throw InvariantError("assemble_prompt: duplicate name '" + name + "'");
    }
  }

  AssembledPrompt prompt;
  prompt.character_names_in_order = names;

  std::vector<std::pair<std::string, std::optional<int>>> clauses;
  if (names.size() > 1) clauses.emplace_back(templates.multi_prefix, std::nullopt);
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string clause = templates.character;
    clause.replace(clause.find("{name}"), 6, names[i]);
    clauses.emplace_back(std::move(clause), static_cast<int>(i));
  }
  clauses.emplace_back(templates.base, std::nullopt);

  for (const auto& [clause, character_index] : clauses) {
    if (clause.empty()) continue;
    if (!prompt.text.empty()) prompt.text += ' ';
    prompt.text += clause;
    collect_slots(clause, templates, character_index, prompt);
  }
  return prompt;
}

TextPriorSelection select_text_prior(const std::vector<TimedText>& history,
                                     double current_start_s, int n_ads) {
  if (n_ads < 1) {
    throw InvariantError("select_text_prior: n_ads must be positive, got " +
                         std::to_string(n_ads));
  }
  for (std::size_t i = 1; i < history.size(); ++i) {
    if (history[i].start_s < history[i - 1].start_s) {
      throw InvariantError(
          "select_text_prior: history must be sorted by start time");
    }
  }

  TextPriorSelection selection;
  for (const TimedText& record : history) {
    if (record.kind == TextKind::kAd && record.end_s <= current_start_s) {
      selection.ads.push_back(record);
    }
  }
  if (selection.ads.size() > static_cast<std::size_t>(n_ads)) {
    selection.ads.erase(selection.ads.begin(),
                        selection.ads.end() - n_ads);
  }
  if (selection.ads.empty()) return selection;  // no window without a description

  const double window_start = selection.ads.front().start_s;
  for (const TimedText& record : history) {
    if (record.kind == TextKind::kSubtitle && record.start_s >= window_start &&
        record.start_s < current_start_s) {
      selection.subtitles.push_back(record);
    }
  }
  return selection;
}

std::string render_text_prior(const TextPriorSelection& selection) {
  std::vector<const TimedText*> merged;
  merged.reserve(selection.ads.size() + selection.subtitles.size());
  for (const TimedText& record : selection.ads) merged.push_back(&record);
  for (const TimedText& record : selection.subtitles) merged.push_back(&record);
  std::stable_sort(merged.begin(), merged.end(),
                   [](const TimedText* a, const TimedText* b) {
                     return a->start_s < b->start_s;
                   });
  std::string out;
  for (const TimedText* record : merged) {
    if (!out.empty()) out += ' ';
    out += record->kind == TextKind::kAd ? "[AD] " : "[SUB] ";
    out += record->text;
  }
  return out;
}

std::string build_text_prior(const std::vector<TimedText>& history,
                             double current_start_s, int n_ads) {
  return render_text_prior(select_text_prior(history, current_start_s, n_ads));
}

}  // namespace adpipe
