#pragma once

#include <utility>
#include <vector>

#include "adpipe/embedding.hpp"

namespace adpipe {

// Ordered character-token vectors collected across a clip.
struct TokenSequence {
  std::vector<Embedding> tokens;
  std::size_t size() const { return tokens.size(); }
  bool operator==(const TokenSequence&) const = default;
};

// Cosine similarity of each adjacent token pair; entry m compares tokens m
// and m + 1. Needs at least two tokens; zero-norm tokens are an error.
std::vector<double> adjacent_similarities(const TokenSequence& seq);

struct MergeResult {
  TokenSequence tokens;                     // one mean vector per run
  std::vector<std::pair<int, int>> runs;    // inclusive [start, end] source ranges
};

// Compresses the sequence to at most target_len tokens. Sequences already at
// or below the target pass through unchanged. Otherwise the size() - target_len
// most similar adjacent boundaries (ties to the lower index) are merged and
// each resulting run is replaced by its element-wise mean, preserving order.
MergeResult merge_tokens(const TokenSequence& seq, int target_len);

}  // namespace adpipe
