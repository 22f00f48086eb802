#include <random>
#include <vector>

#include "adpipe/embedding.hpp"
#include "adpipe/errors.hpp"
#include "adpipe/token_merge.hpp"
#include "doctest.h"
#include "oracles.hpp"

using adpipe::Embedding;
using adpipe::MergeResult;
using adpipe::TokenSequence;

namespace {

TokenSequence seq_of(std::vector<std::vector<double>> rows) {
  TokenSequence seq;
  for (auto& row : rows) seq.tokens.emplace_back(std::move(row));
  return seq;
}

TokenSequence random_seq(std::mt19937_64& rng, int k, std::size_t dim) {
  TokenSequence seq;
  for (int i = 0; i < k; ++i) seq.tokens.push_back(oracle::random_unit(rng, dim));
  return seq;
}

}  // namespace

TEST_CASE("adjacent similarities match the per-pair oracle") {
  std::mt19937_64 rng(41);
  const TokenSequence seq = random_seq(rng, 6, 5);
  const std::vector<double> got = adpipe::adjacent_similarities(seq);
  REQUIRE(got.size() == 5);
  for (std::size_t m = 0; m < got.size(); ++m) {
    CHECK(got[m] == doctest::Approx(oracle::cosine(seq.tokens[m],
                                                   seq.tokens[m + 1]))
                        .epsilon(1e-9));
  }
}

TEST_CASE("identical tokens are fully similar, orthogonal ones are not") {
  const TokenSequence same = seq_of({{1, 0}, {1, 0}, {1, 0}});
  for (double s : adpipe::adjacent_similarities(same)) CHECK(s == 1.0);
  const TokenSequence ortho = seq_of({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  for (double s : adpipe::adjacent_similarities(ortho)) CHECK(s == 0.0);
}

TEST_CASE("adjacent similarities validate their input") {
  CHECK_THROWS_AS(adpipe::adjacent_similarities(seq_of({{1, 0}})),
                  adpipe::InvariantError);
  CHECK_THROWS_WITH_AS(
      adpipe::adjacent_similarities(seq_of({{1, 0}, {0, 0}, {0, 1}})),
      doctest::Contains("token 1"), adpipe::InvariantError);
}

TEST_CASE("sequences at or below the target pass through unchanged") {
  const TokenSequence seq = seq_of({{1, 0}, {0, 1}, {1, 1}, {2, 0}});
  const MergeResult got = adpipe::merge_tokens(seq, 4);
  CHECK(got.tokens == seq);
  CHECK(got.runs ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  const MergeResult wider = adpipe::merge_tokens(seq, 9);
  CHECK(wider.tokens == seq);
}

TEST_CASE("a single dominating boundary forces one merge") {
  // Two parallel tokens at the front; their boundary similarity 1.0 wins.
  const TokenSequence seq = seq_of({{2, 0}, {4, 0}, {0, 1}, {0, -3}, {1, 1}});
  const MergeResult got = adpipe::merge_tokens(seq, 4);
  REQUIRE(got.tokens.size() == 4);
  CHECK(got.runs ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 2}, {3, 3}, {4, 4}});
  CHECK(got.tokens.tokens[0] == Embedding({3.0, 0.0}));
  CHECK(got.tokens.tokens[1] == Embedding({0.0, 1.0}));
}

TEST_CASE("equal similarities merge the lowest boundaries first") {
  // All tokens identical: every boundary ties at 1.0, so boundaries 0 and 1
  // are selected and the first three tokens become one run.
  const TokenSequence seq = seq_of({{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  const MergeResult got = adpipe::merge_tokens(seq, 3);
  CHECK(got.runs ==
        std::vector<std::pair<int, int>>{{0, 2}, {3, 3}, {4, 4}});
}

TEST_CASE("merging down to one token yields the global mean") {
  const TokenSequence seq = seq_of({{1, 0}, {0, 1}, {5, 3}});
  const MergeResult got = adpipe::merge_tokens(seq, 1);
  REQUIRE(got.tokens.size() == 1);
  CHECK(got.tokens.tokens[0] == Embedding({2.0, 4.0 / 3.0}));
  CHECK(got.runs == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("merge equals the exhaustive boundary-subset oracle") {
  std::mt19937_64 rng(42);
  for (int k = 2; k <= 10; ++k) {
    for (const int mu : {1, 2, 4}) {
      for (int trial = 0; trial < 25; ++trial) {
        const TokenSequence seq = random_seq(rng, k, 4);
        const MergeResult got = adpipe::merge_tokens(seq, mu);
        const oracle::MergeOracle want = oracle::best_merge(seq, mu);
        REQUIRE(got.runs == want.runs);
        REQUIRE(got.tokens.size() == want.tokens.size());
        CHECK(got.tokens.size() == static_cast<std::size_t>(std::min(k, mu)));
        for (std::size_t i = 0; i < want.tokens.size(); ++i) {
          for (std::size_t d = 0; d < want.tokens[i].dim(); ++d) {
            CHECK(got.tokens.tokens[i][d] ==
                  doctest::Approx(want.tokens[i][d]).epsilon(1e-9));
          }
        }
      }
    }
  }
}

TEST_CASE("runs tile the input in order and reproduce the means") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 12);
    const int mu = 1 + static_cast<int>(rng() % 5);
    const TokenSequence seq = random_seq(rng, k, 3);
    const MergeResult got = adpipe::merge_tokens(seq, mu);

    int cursor = 0;
    for (const auto& [start, end] : got.runs) {
      CHECK(start == cursor);
      CHECK(end >= start);
      cursor = end + 1;
    }
    CHECK(cursor == k);

    for (std::size_t r = 0; r < got.runs.size(); ++r) {
      const auto [start, end] = got.runs[r];
      for (std::size_t d = 0; d < 3; ++d) {
        double sum = 0.0;
        for (int i = start; i <= end; ++i) sum += seq.tokens[i][d];
        CHECK(got.tokens.tokens[r][d] ==
              doctest::Approx(sum / (end - start + 1)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("merging is idempotent once the budget is reached") {
  std::mt19937_64 rng(44);
  const TokenSequence seq = random_seq(rng, 9, 4);
  const MergeResult once = adpipe::merge_tokens(seq, 4);
  const MergeResult twice = adpipe::merge_tokens(once.tokens, 4);
  CHECK(twice.tokens == once.tokens);
}

TEST_CASE("swapping values inside a run keeps that run's output") {
  // Parallel vectors have identical similarity to everything, so exchanging
  // them alters no boundary score, only the run contents.
  TokenSequence seq = seq_of({{2, 0}, {4, 0}, {0, 1}, {0, -3}, {1, 1}});
  const MergeResult before = adpipe::merge_tokens(seq, 4);
  std::swap(seq.tokens[0], seq.tokens[1]);
  const MergeResult after = adpipe::merge_tokens(seq, 4);
  CHECK(before.tokens == after.tokens);
  CHECK(before.runs == after.runs);
}

TEST_CASE("merge_tokens validates its input") {
  CHECK_THROWS_AS(adpipe::merge_tokens(seq_of({{1, 0}, {0, 1}}), 0),
                  adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::merge_tokens(TokenSequence{}, 2),
                  adpipe::InvariantError);
}
