#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adpipe/embedding.hpp"

namespace adpipe {

// Every portrait embedding collected for one character.
struct PortraitSet {
  std::string character_name;
  std::vector<Embedding> embeddings;
  std::vector<std::string> source_ids;  // parallel to embeddings, may be empty
};

struct BankEntry {
  std::string name;
  Embedding query;
  bool operator==(const BankEntry&) const = default;
};

// One representative query vector per character of a movie.
struct QueryBank {
  std::string movie_id;
  std::size_t dim = 0;
  double epsilon = 1e-6;
  double objective_value = 0.0;
  std::vector<BankEntry> entries;
  bool operator==(const QueryBank&) const = default;
};

inline constexpr double kDefaultEpsilon = 1e-6;

// Mean L2 distance from q to every portrait embedding of one character.
double intra_class_distance(const Embedding& q, const PortraitSet& portraits);

// L2 distance from queries[j] to the nearest other query. A single-entry
// query list yields +infinity; callers must handle the sentinel.
double inter_class_distance(std::size_t j, const std::vector<Embedding>& queries);

// Sum over characters of separation / (compactness + epsilon). A
// single-character bank scores 1 / (compactness + epsilon) so the value stays
// finite and still rewards tight portrait fit.
double bank_objective(const std::vector<Embedding>& queries,
                      const std::vector<PortraitSet>& portrait_sets,
                      double epsilon = kDefaultEpsilon);

// Output of the per-character candidate clustering stage.
struct CharacterCandidates {
  std::vector<Embedding> centroids;  // candidate queries, cluster order
  std::vector<int> cluster_sizes;    // members per centroid
  int largest_cluster = 0;           // most populated cluster, lowest index on ties
};

// Seeded k-means over one character's portraits. k is clamped to the portrait
// count; init picks a seeded start point then farthest-point extensions; runs
// at most 100 iterations or until centroids move less than 1e-6; an emptied
// cluster is re-seeded with the point farthest from its centroid.
CharacterCandidates cluster_portraits(const PortraitSet& portraits, int k,
                                      std::uint64_t seed);

// Candidate centroids for every character. Per-character RNG streams are
// derived from the single seed, so results do not depend on evaluation order.
std::vector<CharacterCandidates> bank_candidates(
    const std::vector<PortraitSet>& portrait_sets, int k_clusters,
    std::uint64_t seed);

enum class SelectionMode { kAuto, kExhaustive, kCoordinateAscent };

// Combinations up to this count are searched exhaustively; larger spaces fall
// back to coordinate ascent.
inline constexpr std::uint64_t kExhaustiveBudget = 4096;

struct QuerySelection {
  std::vector<int> chosen;  // candidate index per character
  double objective = 0.0;
  bool exhaustive = false;
};

// Picks one candidate per character maximizing bank_objective. Exhaustive
// search enumerates index tuples lexicographically and keeps the first
// maximum; coordinate ascent starts from each character's largest cluster and
// sweeps until stable (at most 50 sweeps), preferring lower candidate indices
// on ties.
QuerySelection select_queries(const std::vector<CharacterCandidates>& candidates,
                              const std::vector<PortraitSet>& portrait_sets,
                              double epsilon = kDefaultEpsilon,
                              SelectionMode mode = SelectionMode::kAuto);

// Full bank construction: cluster every character's portraits, then select
// the query combination with the best objective. Deterministic given the
// seed. Character names must be unique and dimensions consistent.
QueryBank build_bank(const std::string& movie_id,
                     const std::vector<PortraitSet>& portrait_sets,
                     int k_clusters, std::uint64_t seed,
                     double epsilon = kDefaultEpsilon);

}  // namespace adpipe
