#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semind/colored_graph.hpp"

namespace semind {

/// Exact counts. n <= 10^4 with patterns on <= 6 vertices stays in range.
using Count = __int128;

std::string to_string(Count c);
double to_double(Count c);

/// Number of injections V(h) -> V(g) sending red pairs of h to red pairs and
/// blue pairs to blue pairs; free pairs are unconstrained. Zero if h.h() > g.n().
Count count_injections(const PatternGraph& h, const HostGraph& g, int threads = 1);

struct DegreeStats {
  std::vector<int> degrees;
  std::int64_t m = 0;
  Count t = 0;       // triples spanning exactly two red pairs
  Count s_open = 0;  // red 3-edge paths with blue endpoint pair
  Count sum_red_dd = 0;   // sum over red uv of d_u d_v
  Count sum_blue_dd = 0;  // sum over blue uv of d_u d_v
};

DegreeStats degree_stats(const HostGraph& g);
std::int64_t triangle_count(const HostGraph& g);

/// Labelled AP4 count, 2 (sum_{uv blue} d_u d_v - t).
Count count_ap4_fast(const HostGraph& g);
/// sum_v (d_v)_a (n-1-d_v)_b.
Count count_star_fast(const HostGraph& g, int a, int b);
/// 2 sum_{uv blue} d_u^s d_v^s. Throws std::overflow_error if it does not fit.
Count ds_upper_bound(const HostGraph& g, int s);

struct InducedProfile {
  int k = 0;
  std::map<CanonicalCode, Count> counts;
};

/// Number of k-subsets inducing each class, k <= 5. Throws UnsupportedSize if
/// C(n,k) exceeds `budget`.
InducedProfile induced_profile(const HostGraph& g, int k, std::int64_t budget = 20'000'000);

/// count / n^h.
double normalized_density(Count count, int n, int h);
/// count / (n)_h.
double falling_density(Count count, int n, int h);

Count falling_factorial(std::int64_t x, int k);
Count binomial(std::int64_t n, int k);

// Builtin patterns.
PatternGraph ap4_pattern();
PatternGraph ac4_pattern();
PatternGraph peenn_pattern();
/// Two blue-joined centres, each with s red leaves.
PatternGraph ds_pattern(int s);
/// Centre 0 with a red and b blue leaves.
PatternGraph star_pattern(int a, int b);
/// All-red tree from an edge list such as "0-1,1-2,1-3".
PatternGraph tree_pattern(std::string_view edges);
PatternGraph red_clique_pattern(int k);

/// ap4, ac4, peenn, ds:<s>, s:<a>,<b>, tree:<edges>. Throws std::invalid_argument.
PatternGraph pattern_by_name(std::string_view name);

/// Size of the colour-preserving automorphism group.
int automorphism_count(const PatternGraph& h);

}  // namespace semind
