#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "adpipe/embedding.hpp"

namespace adpipe {

struct WordVectorLookup {
  std::unordered_map<std::string, Embedding> vocabulary;
  std::unordered_set<std::string> stop_set;
};

// Lowercases and splits on non-alphanumeric characters, dropping empties.
std::vector<std::string> tokenize_words(const std::string& text);

// 1 - m when the best ground-truth similarity m stays below theta, else 0.
// ground_truth must be non-empty; theta must lie in (0, 1].
double word_redundancy(const Embedding& word,
                       const std::vector<Embedding>& ground_truth, double theta);

struct WordScore {
  std::string word;
  double max_similarity = 0.0;
  bool flagged = false;        // true when max_similarity < theta
  double contribution = 0.0;   // clamped to [0, 1]
};

struct RedundancyReport {
  double score = 0.0;  // mean contribution, in [0, 1]
  std::vector<WordScore> per_word;
  std::size_t valid_count = 0;
  std::vector<std::string> skipped;  // generated tokens dropped as stopword / OOV
  bool empty_generated_warning = false;
};

// Scores how much of the generated sentence is not covered by the ground
// truth. Both sides keep only in-vocabulary non-stopword tokens; a generated
// sentence with no valid words scores 0 with a warning; an empty ground-truth
// side makes every valid word count as fully novel.
RedundancyReport sentence_redundancy(const std::string& generated,
                                     const std::string& ground_truth,
                                     const WordVectorLookup& lookup,
                                     double theta);

}  // namespace adpipe
