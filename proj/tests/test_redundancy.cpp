#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "adpipe/embedding.hpp"
#include "adpipe/errors.hpp"
#include "adpipe/redundancy.hpp"
#include "doctest.h"
#include "oracles.hpp"

using adpipe::Embedding;
using adpipe::RedundancyReport;
using adpipe::WordVectorLookup;

namespace {

// Four mutually orthogonal directions so max similarities are exactly 0 or 1.
WordVectorLookup demo_lookup() {
  WordVectorLookup lookup;
  lookup.vocabulary["ryan"] = Embedding({1, 0, 0, 0});
  lookup.vocabulary["walks"] = Embedding({0, 1, 0, 0});
  lookup.vocabulary["red"] = Embedding({0, 0, 1, 0});
  lookup.vocabulary["chair"] = Embedding({0, 0, 0, 1});
  lookup.stop_set = {"the", "a", "an", "and"};
  return lookup;
}

WordVectorLookup random_lookup(std::mt19937_64& rng, int words) {
  WordVectorLookup lookup;
  for (int i = 0; i < words; ++i) {
    lookup.vocabulary["w" + std::to_string(i)] = oracle::random_unit(rng, 6);
  }
  lookup.stop_set = {"the", "and"};
  return lookup;
}

std::string random_sentence(std::mt19937_64& rng, int words, int vocab_size) {
  std::string text;
  for (int i = 0; i < words; ++i) {
    if (!text.empty()) text += ' ';
    const int roll = static_cast<int>(rng() % 10);
    if (roll == 0) {
      text += "the";
    } else if (roll == 1) {
      text += "zzz";  // never in the vocabulary
    } else {
      text += "w" + std::to_string(rng() % vocab_size);
    }
  }
  return text;
}

}  // namespace

TEST_CASE("tokenizer lowercases and splits on non-alphanumerics") {
  CHECK(adpipe::tokenize_words("Ryan walks, near THE red-chair.") ==
        std::vector<std::string>{"ryan", "walks", "near", "the", "red",
                                 "chair"});
  CHECK(adpipe::tokenize_words("It's 9 PM!") ==
        std::vector<std::string>{"it", "s", "9", "pm"});
  CHECK(adpipe::tokenize_words("  ...  ").empty());
  CHECK(adpipe::tokenize_words("").empty());
}

TEST_CASE("word redundancy at the similarity extremes") {
  const Embedding w({1.0, 0.0});
  CHECK(adpipe::word_redundancy(w, {Embedding({2.0, 0.0})}, 0.5) == 0.0);
  CHECK(adpipe::word_redundancy(w, {Embedding({0.0, 1.0})}, 0.5) == 1.0);
}

TEST_CASE("word redundancy keys off the threshold") {
  // Unit ground-truth vector at cosine 0.3 from the word.
  const Embedding w({1.0, 0.0});
  const std::vector<Embedding> gt = {Embedding({0.3, std::sqrt(0.91)})};
  CHECK(adpipe::word_redundancy(w, gt, 0.5) == doctest::Approx(0.7));
  CHECK(adpipe::word_redundancy(w, gt, 0.2) == 0.0);
  CHECK(adpipe::word_redundancy(w, gt, 0.3) == 0.0);
}

TEST_CASE("only the best ground-truth match counts") {
  const Embedding w({1.0, 0.0});
  const std::vector<Embedding> gt = {Embedding({0.0, 1.0}),
                                     Embedding({1.0, 0.0})};
  CHECK(adpipe::word_redundancy(w, gt, 0.5) == 0.0);
}

TEST_CASE("word redundancy can exceed one, sentence contributions cannot") {
  const Embedding w({1.0, 0.0});
  CHECK(adpipe::word_redundancy(w, {Embedding({-1.0, 0.0})}, 0.5) == 2.0);

  WordVectorLookup lookup;
  lookup.vocabulary["hot"] = Embedding({1.0, 0.0});
  lookup.vocabulary["cold"] = Embedding({-1.0, 0.0});
  const RedundancyReport report =
      adpipe::sentence_redundancy("hot", "cold", lookup, 0.5);
  REQUIRE(report.per_word.size() == 1);
  CHECK(report.per_word[0].max_similarity == doctest::Approx(-1.0));
  CHECK(report.per_word[0].contribution == 1.0);
  CHECK(report.score == 1.0);
}

TEST_CASE("worked sentence example scores one half") {
  const RedundancyReport report = adpipe::sentence_redundancy(
      "Ryan walks near the red chair.", "Ryan walks.", demo_lookup(), 0.5);
  CHECK(report.score == 0.5);
  CHECK(report.valid_count == 4);
  CHECK(report.skipped == std::vector<std::string>{"near", "the"});
  REQUIRE(report.per_word.size() == 4);
  CHECK_FALSE(report.per_word[0].flagged);  // ryan
  CHECK_FALSE(report.per_word[1].flagged);  // walks
  CHECK(report.per_word[2].flagged);        // red
  CHECK(report.per_word[3].flagged);        // chair
  CHECK(report.per_word[2].contribution == 1.0);
  CHECK_FALSE(report.empty_generated_warning);
}

TEST_CASE("identical sentences carry no redundancy penalty") {
  const RedundancyReport report = adpipe::sentence_redundancy(
      "Ryan walks.", "Ryan walks.", demo_lookup(), 0.5);
  CHECK(report.score == 0.0);
  CHECK(report.valid_count == 2);
}

TEST_CASE("a generated sentence with no usable words warns and scores zero") {
  const RedundancyReport report = adpipe::sentence_redundancy(
      "The, a... unknownword!", "Ryan walks.", demo_lookup(), 0.5);
  CHECK(report.score == 0.0);
  CHECK(report.valid_count == 0);
  CHECK(report.empty_generated_warning);
  CHECK(report.skipped ==
        std::vector<std::string>{"the", "a", "unknownword"});
}

TEST_CASE("an empty ground-truth side makes every valid word novel") {
  for (const std::string gt : {"", "the and", "notinvocab"}) {
    const RedundancyReport report =
        adpipe::sentence_redundancy("Ryan walks.", gt, demo_lookup(), 0.5);
    CHECK(report.score == 1.0);
    CHECK(report.valid_count == 2);
    for (const auto& word : report.per_word) {
      CHECK(word.max_similarity == 0.0);
      CHECK(word.contribution == 1.0);
    }
  }
}

TEST_CASE("stopwords are filtered from both sides") {
  // "the" appears in both sentences but never produces a score entry.
  const RedundancyReport report = adpipe::sentence_redundancy(
      "the red chair", "the ryan", demo_lookup(), 0.5);
  CHECK(report.valid_count == 2);
  CHECK(report.skipped == std::vector<std::string>{"the"});
  CHECK(report.score == 1.0);
}

TEST_CASE("sentence score matches the independent oracle") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const WordVectorLookup lookup = random_lookup(rng, 8);
    const std::string gen =
        random_sentence(rng, 1 + static_cast<int>(rng() % 8), 8);
    const std::string gt = random_sentence(rng, static_cast<int>(rng() % 8), 8);
    const double theta = 0.05 + 0.9 * (rng() % 100) / 100.0;
    const RedundancyReport report =
        adpipe::sentence_redundancy(gen, gt, lookup, theta);
    CHECK(report.score ==
          doctest::Approx(oracle::sentence_redundancy(gen, gt, lookup, theta))
              .epsilon(1e-12));
  }
}

TEST_CASE("score is the mean contribution and flags follow the threshold") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const WordVectorLookup lookup = random_lookup(rng, 6);
    const std::string gen = random_sentence(rng, 6, 6);
    const std::string gt = random_sentence(rng, 4, 6);
    const RedundancyReport report =
        adpipe::sentence_redundancy(gen, gt, lookup, 0.6);
    if (report.valid_count == 0) continue;
    double total = 0.0;
    for (const auto& word : report.per_word) {
      CHECK(word.flagged == (word.max_similarity < 0.6));
      CHECK(word.contribution >= 0.0);
      CHECK(word.contribution <= 1.0);
      total += word.contribution;
    }
    CHECK(report.score ==
          doctest::Approx(total / report.valid_count).epsilon(1e-12));
  }
}

TEST_CASE("raising the threshold never lowers the score") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const WordVectorLookup lookup = random_lookup(rng, 6);
    const std::string gen = random_sentence(rng, 6, 6);
    const std::string gt = random_sentence(rng, 4, 6);
    double previous = -1.0;
    for (const double theta : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      const double score =
          adpipe::sentence_redundancy(gen, gt, lookup, theta).score;
      CHECK(score >= previous - 1e-12);
      previous = score;
    }
  }
}

TEST_CASE("growing the ground truth never raises the score") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const WordVectorLookup lookup = random_lookup(rng, 6);
    const std::string gen = random_sentence(rng, 6, 6);
    const std::string gt = random_sentence(rng, 3, 6);
    const double base = adpipe::sentence_redundancy(gen, gt, lookup, 0.5).score;
    const std::string grown = gt + " " + random_sentence(rng, 3, 6);
    const double wider =
        adpipe::sentence_redundancy(gen, grown, lookup, 0.5).score;
    CHECK(wider <= base + 1e-12);
  }
}

TEST_CASE("sentence redundancy is directional") {
  const WordVectorLookup lookup = demo_lookup();
  CHECK(adpipe::sentence_redundancy("ryan", "ryan walks", lookup, 0.5).score ==
        0.0);
  CHECK(adpipe::sentence_redundancy("ryan walks", "ryan", lookup, 0.5).score ==
        0.5);
}

TEST_CASE("redundancy validates theta and the ground-truth list") {
  const Embedding w({1.0, 0.0});
  const std::vector<Embedding> gt = {Embedding({0.0, 1.0})};
  CHECK_THROWS_AS(adpipe::word_redundancy(w, gt, 0.0), adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::word_redundancy(w, gt, 1.2), adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::word_redundancy(w, gt, -0.1), adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::word_redundancy(w, {}, 0.5), adpipe::InvariantError);
  CHECK_NOTHROW(adpipe::word_redundancy(w, gt, 1.0));
  CHECK_THROWS_AS(adpipe::sentence_redundancy("a", "b", demo_lookup(), 2.0),
                  adpipe::InvariantError);
}
