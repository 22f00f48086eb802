#pragma once

#include <cstddef>
#include <vector>

namespace adpipe {

// Dense real-valued feature vector. The dimension is implied by the value
// count; every vector taking part in one operation must agree on it.
struct Embedding {
  std::vector<double> values;

  Embedding() = default;
  explicit Embedding(std::vector<double> v) : values(std::move(v)) {}

  std::size_t dim() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  bool operator==(const Embedding&) const = default;
};

double l2_norm(const Embedding& a);
double l2_distance(const Embedding& a, const Embedding& b);

// Squared Euclidean distance. Accumulates in the widest floating type so the
// rounding error stays far below the recognition threshold granularity.
double l2_distance_sq(const Embedding& a, const Embedding& b);

// Result is clamped to [-1, 1]. Throws InvariantError on zero-norm operands.
double cosine_similarity(const Embedding& a, const Embedding& b);

// Returns a / ||a||. Idempotent on unit vectors. Throws on the zero vector.
Embedding normalize(const Embedding& a);

}  // namespace adpipe
