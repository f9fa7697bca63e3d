#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "semind/colored_graph.hpp"
#include "semind/counting.hpp"

namespace semind {

struct SearchResult {
  Count best_count = 0;
  /// Canonical codes of the maximizers, smallest first. Empty for hill_climb
  /// beyond the canonical-form size limit.
  std::vector<CanonicalCode> witnesses;
  std::vector<HostGraph> witness_hosts;
  /// Best count per red-pair count m.
  std::map<int, Count> per_edge_count;
};

/// Maximum of count_injections(h, .) over all colourings of K_n (n <= 8),
/// optionally restricted to exactly m red pairs.
SearchResult exact_max(const PatternGraph& h, int n, std::optional<int> m = std::nullopt, int threads = 1);

/// exact_max for every m at once; per_edge_count covers 0..C(n,2).
SearchResult full_profile(const PatternGraph& h, int n, int threads = 1);

struct HillClimbOptions {
  /// Red density. When set, random starts have round(beta C(n,2)) red pairs
  /// and moves swap a red and a blue pair; otherwise moves flip single pairs.
  std::optional<double> beta;
  /// Number of climbs. Climb i starts from seeds[i] while seeds remain, then
  /// from random colourings. With 0 the seeds are only evaluated.
  int restarts = 4;
  std::uint64_t seed = 1;
  std::vector<HostGraph> seeds;
  /// Proposals per climb; 0 picks 40 n.
  int max_proposals = 0;
  int threads = 1;
};

SearchResult hill_climb(const PatternGraph& h, int n, const HillClimbOptions& opts);

}  // namespace semind
