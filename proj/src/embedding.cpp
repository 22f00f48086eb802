#include "adpipe/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {
namespace {

void check_same_dim(const Embedding& a, const Embedding& b) {
  if (a.dim() != b.dim()) {
    throw InvariantError("embedding dimension mismatch: " +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

double l2_norm(const Embedding& a) {
  long double acc = 0.0L;
  for (double v : a.values) acc += static_cast<long double>(v) * v;
  return static_cast<double>(std::sqrt(acc));
}

double l2_distance_sq(const Embedding& a, const Embedding& b) {
  check_same_dim(a, b);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const long double d = static_cast<long double>(a.values[i]) - b.values[i];
    acc += d * d;
  }
  return static_cast<double>(acc);
}

double l2_distance(const Embedding& a, const Embedding& b) {
  return std::sqrt(l2_distance_sq(a, b));
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
  check_same_dim(a, b);
  long double dot = 0.0L;
  long double norm_a = 0.0L;
  long double norm_b = 0.0L;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    dot += static_cast<long double>(a.values[i]) * b.values[i];
    norm_a += static_cast<long double>(a.values[i]) * a.values[i];
    norm_b += static_cast<long double>(b.values[i]) * b.values[i];
  }
  if (norm_a == 0.0L) {
    throw InvariantError("cosine_similarity: first operand has zero norm");
  }
  if (norm_b == 0.0L) {
    throw InvariantError("cosine_similarity: second operand has zero norm");
  }
  const long double sim = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return std::clamp(static_cast<double>(sim), -1.0, 1.0);
}

Embedding normalize(const Embedding& a) {
  const double norm = l2_norm(a);
  if (norm == 0.0) throw InvariantError("normalize: zero vector");
  Embedding out = a;
  for (double& v : out.values) v /= norm;
  return out;
}

}  // namespace adpipe
