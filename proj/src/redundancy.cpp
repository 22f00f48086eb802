#include "adpipe/redundancy.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {
namespace {

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw InvariantError("theta must lie in (0, 1], got " +
                         std::to_string(theta));
  }
}

}  // namespace

std::vector<std::string> tokenize_words(const std::string& text) {
  std::vector<std::string> words;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

double word_redundancy(const Embedding& word,
                       const std::vector<Embedding>& ground_truth,
                       double theta) {
  check_theta(theta);
  if (ground_truth.empty()) {
    throw InvariantError("word_redundancy: empty ground-truth vector list");
  }
  double max_sim = -1.0;
  for (const Embedding& gt : ground_truth) {
    max_sim = std::max(max_sim, cosine_similarity(word, gt));
  }
  return max_sim < theta ? 1.0 - max_sim : 0.0;
}

RedundancyReport sentence_redundancy(const std::string& generated,
                                     const std::string& ground_truth,
                                     const WordVectorLookup& lookup,
                                     double theta) {
  check_theta(theta);
  RedundancyReport report;

  std::vector<Embedding> gt_vectors;
  for (const std::string& word : tokenize_words(ground_truth)) {
    if (lookup.stop_set.count(word) || !lookup.vocabulary.count(word)) continue;
    gt_vectors.push_back(lookup.vocabulary.at(word));
  }

  double total = 0.0;
  for (const std::string& word : tokenize_words(generated)) {
    if (lookup.stop_set.count(word) || !lookup.vocabulary.count(word)) {
      report.skipped.push_back(word);
      continue;
    }
    WordScore entry;
    entry.word = word;
    if (gt_vectors.empty()) {
      // Nothing to compare against: the word is fully novel.
      entry.max_similarity = 0.0;
    } else {
      entry.max_similarity = -1.0;
      for (const Embedding& gt : gt_vectors) {
        entry.max_similarity = std::max(
            entry.max_similarity,
            cosine_similarity(lookup.vocabulary.at(word), gt));
      }
    }
    entry.flagged = entry.max_similarity < theta;
    entry.contribution =
        entry.flagged ? std::min(1.0, 1.0 - entry.max_similarity) : 0.0;
    total += entry.contribution;
    report.per_word.push_back(std::move(entry));
  }

  report.valid_count = report.per_word.size();
  if (report.valid_count == 0) {
    report.score = 0.0;
    report.empty_generated_warning = true;
  } else {
    report.score = total / static_cast<double>(report.valid_count);
  }
  return report;
}

}  // namespace adpipe
