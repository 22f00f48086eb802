#include "adpipe/token_merge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {

std::vector<double> adjacent_similarities(const TokenSequence& seq) {
  if (seq.size() < 2) {
    throw InvariantError("adjacent_similarities: need at least 2 tokens, got " +
                         std::to_string(seq.size()));
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (l2_norm(seq.tokens[i]) == 0.0) {
      throw InvariantError("adjacent_similarities: token " + std::to_string(i) +
                           " has zero norm");
    }
  }
  std::vector<double> sims(seq.size() - 1);
  for (std::size_t m = 0; m + 1 < seq.size(); ++m) {
    sims[m] = cosine_similarity(seq.tokens[m], seq.tokens[m + 1]);
  }
  return sims;
}

MergeResult merge_tokens(const TokenSequence& seq, int target_len) {
  if (target_len < 1) {
    throw InvariantError("merge_tokens: target length must be positive, got " +
                         std::to_string(target_len));
  }
  if (seq.size() == 0) {
    throw InvariantError("merge_tokens: empty token sequence");
  }
  const int k = static_cast<int>(seq.size());

  MergeResult out;
  if (k <= target_len) {
    out.tokens = seq;
    out.runs.reserve(seq.size());
    for (int i = 0; i < k; ++i) out.runs.emplace_back(i, i);
    return out;
  }

  const std::vector<double> sims = adjacent_similarities(seq);
  std::vector<int> order(sims.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (sims[lhs] != sims[rhs]) return sims[lhs] > sims[rhs];
    return lhs < rhs;
  });

  // Boundary m sits between tokens m and m + 1; merging the k - target_len
  // most similar boundaries leaves exactly target_len runs.
  std::vector<char> merged(sims.size(), 0);
  for (int i = 0; i < k - target_len; ++i) merged[order[i]] = 1;

  const std::size_t dim = seq.tokens.front().dim();
  int run_start = 0;
  for (int i = 0; i < k; ++i) {
    if (i + 1 < k && merged[i]) continue;
    out.runs.emplace_back(run_start, i);
    Embedding mean;
    mean.values.assign(dim, 0.0);
    for (int j = run_start; j <= i; ++j) {
      for (std::size_t d = 0; d < dim; ++d) mean.values[d] += seq.tokens[j][d];
    }
    const double count = static_cast<double>(i - run_start + 1);
    for (std::size_t d = 0; d < dim; ++d) mean.values[d] /= count;
    out.tokens.tokens.push_back(std::move(mean));
    run_start = i + 1;
  }
  return out;
}

}  // namespace adpipe
