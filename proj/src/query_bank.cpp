#include "adpipe/query_bank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {
namespace {

// Decorrelates per-character RNG streams drawn from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t lane) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (lane + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void check_uniform_dim(const PortraitSet& portraits) {
  const std::size_t dim = portraits.embeddings.front().dim();
  for (const Embedding& e : portraits.embeddings) {
    if (e.dim() != dim) {
      throw InvariantError("portrait set '" + portraits.character_name +
                           "' mixes dimensions " + std::to_string(dim) +
                           " and " + std::to_string(e.dim()));
    }
  }
}

Embedding cluster_mean(const std::vector<Embedding>& points,
                       const std::vector<int>& assignment, int cluster,
                       std::size_t dim) {
  Embedding mean;
  mean.values.assign(dim, 0.0);
  int count = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (assignment[p] != cluster) continue;
    ++count;
    for (std::size_t d = 0; d < dim; ++d) mean.values[d] += points[p][d];
  }
  for (std::size_t d = 0; d < dim; ++d) mean.values[d] /= count;
  return mean;
}

}  // namespace

double intra_class_distance(const Embedding& q, const PortraitSet& portraits) {
  if (portraits.embeddings.empty()) {
    throw InvariantError("intra_class_distance: empty portrait set '" +
                         portraits.character_name + "'");
  }
  long double acc = 0.0L;
  for (const Embedding& e : portraits.embeddings) acc += l2_distance(e, q);
  return static_cast<double>(acc / portraits.embeddings.size());
}

double inter_class_distance(std::size_t j, const std::vector<Embedding>& queries) {
  if (j >= queries.size()) {
    throw InvariantError("inter_class_distance: index " + std::to_string(j) +
                         " out of range for " + std::to_string(queries.size()) +
                         " queries");
  }
  if (queries.size() < 2) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t other = 0; other < queries.size(); ++other) {
    if (other == j) continue;
    best = std::min(best, l2_distance(queries[j], queries[other]));
  }
  return best;
}

double bank_objective(const std::vector<Embedding>& queries,
                      const std::vector<PortraitSet>& portrait_sets,
                      double epsilon) {
  if (queries.empty() || queries.size() != portrait_sets.size()) {
    throw InvariantError("bank_objective: " + std::to_string(queries.size()) +
                         " queries vs " + std::to_string(portrait_sets.size()) +
                         " portrait sets");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < queries.size(); ++j) {
    const double intra = intra_class_distance(queries[j], portrait_sets[j]);
    const double inter =
        queries.size() == 1 ? 1.0 : inter_class_distance(j, queries);
    total += inter / (intra + epsilon);
  }
  return total;
}

CharacterCandidates cluster_portraits(const PortraitSet& portraits, int k,
                                      std::uint64_t seed) {
  if (portraits.embeddings.empty()) {
    throw InvariantError("cluster_portraits: empty portrait set '" +
                         portraits.character_name + "'");
  }
  if (k < 1) {
    throw InvariantError("cluster_portraits: k must be positive, got " +
                         std::to_string(k));
  }
  check_uniform_dim(portraits);

  const std::vector<Embedding>& points = portraits.embeddings;
  const int n = static_cast<int>(points.size());
  const std::size_t dim = points.front().dim();
  k = std::min(k, n);

  // Farthest-point init from a seeded start; ties keep the lowest index.
  std::mt19937_64 rng(seed);
  std::vector<int> centers{static_cast<int>(rng() % n)};
  std::set<int> taken(centers.begin(), centers.end());
  while (static_cast<int>(centers.size()) < k) {
    int best = -1;
    double best_dist = -1.0;
    for (int p = 0; p < n; ++p) {
      if (taken.count(p)) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (int c : centers) nearest = std::min(nearest, l2_distance(points[p], points[c]));
      if (nearest > best_dist) {
        best_dist = nearest;
        best = p;
      }
    }
    centers.push_back(best);
    taken.insert(best);
  }

  std::vector<Embedding> centroids;
  centroids.reserve(k);
  for (int c : centers) centroids.push_back(points[c]);

  std::vector<int> assignment(n, 0);
  constexpr int kMaxIterations = 100;
  constexpr double kMoveTolerance = 1e-6;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    for (int p = 0; p < n; ++p) {
      int best = 0;
      double best_dist = l2_distance_sq(points[p], centroids[0]);
      for (int c = 1; c < k; ++c) {
        const double d = l2_distance_sq(points[p], centroids[c]);
        if (d < best_dist) {
          best_dist = d;
          best = c;
        }
      }
      assignment[p] = best;
    }

    // Revive emptied clusters with the point farthest from their centroid.
    std::vector<int> sizes(k, 0);
    for (int a : assignment) ++sizes[a];
    std::set<int> reseeded;
    for (int c = 0; c < k; ++c) {
      while (sizes[c] == 0) {
        int farthest = -1;
        double far_dist = -1.0;
        for (int p = 0; p < n; ++p) {
          if (reseeded.count(p)) continue;
          if (sizes[assignment[p]] <= 1) continue;  // would empty another cluster
          const double d = l2_distance(points[p], centroids[c]);
          if (d > far_dist) {
            far_dist = d;
            farthest = p;
          }
        }
        if (farthest < 0) break;  // fewer distinct points than clusters
        --sizes[assignment[farthest]];
        assignment[farthest] = c;
        ++sizes[c];
        reseeded.insert(farthest);
      }
    }

    double movement = 0.0;
    for (int c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      Embedding next = cluster_mean(points, assignment, c, dim);
      movement = std::max(movement, l2_distance(centroids[c], next));
      centroids[c] = std::move(next);
    }
    if (movement <= kMoveTolerance) break;
  }

  CharacterCandidates out;
  out.centroids = std::move(centroids);
  out.cluster_sizes.assign(k, 0);
  for (int a : assignment) ++out.cluster_sizes[a];
  out.largest_cluster = 0;
  for (int c = 1; c < k; ++c) {
    if (out.cluster_sizes[c] > out.cluster_sizes[out.largest_cluster]) {
      out.largest_cluster = c;
    }
  }
  return out;
}

std::vector<CharacterCandidates> bank_candidates(
    const std::vector<PortraitSet>& portrait_sets, int k_clusters,
    std::uint64_t seed) {
  std::vector<CharacterCandidates> out;
  out.reserve(portrait_sets.size());
  for (std::size_t j = 0; j < portrait_sets.size(); ++j) {
    out.push_back(cluster_portraits(portrait_sets[j], k_clusters, mix_seed(seed, j)));
  }
  return out;
}

namespace {

double combo_objective(const std::vector<CharacterCandidates>& candidates,
                       const std::vector<int>& chosen,
                       const std::vector<PortraitSet>& portrait_sets,
                       double epsilon) {
  std::vector<Embedding> queries;
  queries.reserve(chosen.size());
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    queries.push_back(candidates[j].centroids[chosen[j]]);
  }
  return bank_objective(queries, portrait_sets, epsilon);
}

QuerySelection select_exhaustive(const std::vector<CharacterCandidates>& candidates,
                                 const std::vector<PortraitSet>& portrait_sets,
                                 double epsilon) {
  const std::size_t n = candidates.size();
  std::vector<int> current(n, 0);
  QuerySelection best;
  best.exhaustive = true;
  best.objective = -std::numeric_limits<double>::infinity();
  while (true) {
    const double value = combo_objective(candidates, current, portrait_sets, epsilon);
    // Lexicographic enumeration plus strict improvement keeps the first, and
    // therefore lexicographically smallest, maximizer.
    if (value > best.objective) {
      best.objective = value;
      best.chosen = current;
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++current[pos] < static_cast<int>(candidates[pos].centroids.size())) break;
      current[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

QuerySelection select_coordinate_ascent(
    const std::vector<CharacterCandidates>& candidates,
    const std::vector<PortraitSet>& portrait_sets, double epsilon) {
  const std::size_t n = candidates.size();
  QuerySelection sel;
  sel.exhaustive = false;
  sel.chosen.resize(n);
  for (std::size_t j = 0; j < n; ++j) sel.chosen[j] = candidates[j].largest_cluster;
  sel.objective = combo_objective(candidates, sel.chosen, portrait_sets, epsilon);

  constexpr int kMaxSweeps = 50;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> probe = sel.chosen;
      int best_idx = sel.chosen[j];
      double best_value = sel.objective;
      for (int c = 0; c < static_cast<int>(candidates[j].centroids.size()); ++c) {
        probe[j] = c;
        const double value = combo_objective(candidates, probe, portrait_sets, epsilon);
        if (value > best_value || (value == best_value && c < best_idx)) {
          best_value = value;
          best_idx = c;
        }
      }
      if (best_idx != sel.chosen[j]) {
        sel.chosen[j] = best_idx;
        sel.objective = best_value;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return sel;
}

}  // namespace

QuerySelection select_queries(const std::vector<CharacterCandidates>& candidates,
                              const std::vector<PortraitSet>& portrait_sets,
                              double epsilon, SelectionMode mode) {
  if (candidates.empty() || candidates.size() != portrait_sets.size()) {
    throw InvariantError("select_queries: " + std::to_string(candidates.size()) +
                         " candidate sets vs " +
                         std::to_string(portrait_sets.size()) + " portrait sets");
  }
  if (mode == SelectionMode::kAuto) {
    std::uint64_t combos = 1;
    for (const CharacterCandidates& c : candidates) {
      combos *= c.centroids.size();
      if (combos > kExhaustiveBudget) break;
    }
    mode = combos <= kExhaustiveBudget ? SelectionMode::kExhaustive
                                       : SelectionMode::kCoordinateAscent;
  }
  return mode == SelectionMode::kExhaustive
             ? select_exhaustive(candidates, portrait_sets, epsilon)
             : select_coordinate_ascent(candidates, portrait_sets, epsilon);
}

QueryBank build_bank(const std::string& movie_id,
                     const std::vector<PortraitSet>& portrait_sets,
                     int k_clusters, std::uint64_t seed, double epsilon) {
  if (portrait_sets.empty()) {
    throw InvariantError("build_bank: no portrait sets");
  }
  std::set<std::string> names;
  for (const PortraitSet& ps : portrait_sets) {
    if (!names.insert(ps.character_name).second) {
      throw InvariantError("build_bank: duplicate character name '" +
                           ps.character_name + "'");
    }
    if (ps.embeddings.empty()) {
      throw InvariantError("build_bank: character '" + ps.character_name +
                           "' has no portraits");
    }
  }
  const std::size_t dim = portrait_sets.front().embeddings.front().dim();
  for (const PortraitSet& ps : portrait_sets) {
    for (const Embedding& e : ps.embeddings) {
      if (e.dim() != dim) {
        throw InvariantError("build_bank: character '" + ps.character_name +
                             "' has dimension " + std::to_string(e.dim()) +
                             ", expected " + std::to_string(dim));
      }
    }
  }

  const std::vector<CharacterCandidates> candidates =
      bank_candidates(portrait_sets, k_clusters, seed);
  const QuerySelection selection =
      select_queries(candidates, portrait_sets, epsilon, SelectionMode::kAuto);

  QueryBank bank;
  bank.movie_id = movie_id;
  bank.dim = dim;
  bank.epsilon = epsilon;
  bank.objective_value = selection.objective;
  bank.entries.reserve(portrait_sets.size());
  for (std::size_t j = 0; j < portrait_sets.size(); ++j) {
    bank.entries.push_back({portrait_sets[j].character_name,
                            candidates[j].centroids[selection.chosen[j]]});
  }
  return bank;
}

}  // namespace adpipe
