#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "oracles.hpp"
#include "semind/construction.hpp"
#include "semind/profiles.hpp"
#include "semind/search.hpp"

using namespace semind;

namespace {

/// Maximum over all 2^C(n,2) colourings, per red-pair count.
std::map<int, Count> brute_profile(const PatternGraph& h, int n) {
  std::map<int, Count> best;
  for (std::uint64_t mask = 0; mask < (1ull << pair_count(n)); ++mask) {
    const int m = std::popcount(mask);
    const Count c = oracle::count(h, oracle::from_mask(n, mask));
    auto [it, fresh] = best.emplace(m, c);
    if (!fresh && c > it->second) it->second = c;
  }
  return best;
}

Count max_of(const std::map<int, Count>& m) {
  Count b = 0;
  for (const auto& [k, v] : m) b = std::max(b, v);
  return b;
}

}  // namespace

TEST_CASE("exact_max examples") {
  const auto ap4 = brute_profile(ap4_pattern(), 4);
  const SearchResult r = exact_max(ap4_pattern(), 4);
  CHECK(r.best_count == max_of(ap4));
  CHECK_FALSE(r.witnesses.empty());

  CHECK(exact_max(red_clique_pattern(3), 5, 10).best_count == 60);

  const auto ac4 = brute_profile(ac4_pattern(), 4);
  CHECK(exact_max(ac4_pattern(), 4, 2).best_count == ac4.at(2));
  CHECK_THROWS_AS(exact_max(ap4_pattern(), 9), UnsupportedSize);
}

TEST_CASE("witnesses attain the maximum and are sorted") {
  for (int n = 4; n <= 6; ++n) {
    const SearchResult r = exact_max(ac4_pattern(), n);
    REQUIRE(r.witnesses.size() == r.witness_hosts.size());
    CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      CHECK(canonical_form(r.witness_hosts[i]) == r.witnesses[i]);
      CHECK(count_injections(ac4_pattern(), r.witness_hosts[i]) == r.best_count);
    }
  }
}

TEST_CASE("full_profile matches brute force") {
  for (const char* name : {"ap4", "ac4", "s:2,1", "peenn"}) {
    const PatternGraph h = pattern_by_name(name);
    for (int n = 3; n <= 5; ++n) {
      const SearchResult r = full_profile(h, n);
      CHECK(r.per_edge_count == brute_profile(h, n));
    }
  }
  const SearchResult p5 = full_profile(ap4_pattern(), 5);
  CHECK(p5.per_edge_count.at(0) == 0);
  CHECK(p5.per_edge_count.at(10) == 0);
}

TEST_CASE("full_profile complement symmetry") {
  for (const char* name : {"ap4", "ac4", "s:2,1", "tree:0-1,1-2,1-3"}) {
    const PatternGraph h = pattern_by_name(name);
    for (int n = 3; n <= 6; ++n) {
      const auto a = full_profile(h, n).per_edge_count;
      const auto b = full_profile(swap_colors(h), n).per_edge_count;
      const int pairs = static_cast<int>(pair_count(n));
      for (int m = 0; m <= pairs; ++m) REQUIRE(a.at(m) == b.at(pairs - m));
    }
  }
}

TEST_CASE("full_profile at n = 7") {
  const auto ap4 = full_profile(ap4_pattern(), 7).per_edge_count;
  const double beta = 2.0 / 3.0;
  CHECK(normalized_density(ap4.at(14), 7, 4) <= beta * beta * (1 - beta) + 0.15);

  // S_{2,1}: the continuous profile peaks at beta = 2/3, i.e. m = 14 of 21.
  const auto s21 = full_profile(star_pattern(2, 1), 7).per_edge_count;
  int arg = 0;
  for (const auto& [m, c] : s21)
    if (c > s21.at(arg)) arg = m;
  CHECK(std::abs(arg - 14) <= 1);
}

TEST_CASE("threaded exact search is deterministic") {
  const SearchResult a = full_profile(ac4_pattern(), 7, 1);
  const SearchResult b = full_profile(ac4_pattern(), 7, 4);
  CHECK(a.per_edge_count == b.per_edge_count);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("hill_climb with restarts = 0 evaluates the seeds") {
  const HostGraph seed = make_construction(parse_construction("cliques:1/3,1/3,1/3"), 30);
  HillClimbOptions opts;
  opts.restarts = 0;
  opts.seeds = {seed};
  const SearchResult r = hill_climb(ac4_pattern(), 30, opts);
  CHECK(r.best_count == count_injections(ac4_pattern(), seed));
}

TEST_CASE("hill_climb never loses to its seeds and is deterministic") {
  HillClimbOptions opts;
  opts.beta = 0.5;
  opts.restarts = 3;
  opts.seed = 42;
  opts.seeds = {make_construction(parse_construction("circulant:1/2"), 20),
                make_construction(parse_construction("clique_iso:0.7"), 20)};
  Count best_seed = 0;
  for (const auto& s : opts.seeds) best_seed = std::max(best_seed, count_injections(ap4_pattern(), s));
  const SearchResult a = hill_climb(ap4_pattern(), 20, opts);
  const SearchResult b = hill_climb(ap4_pattern(), 20, opts);
  CHECK(a.best_count >= best_seed);
  CHECK(a.best_count == b.best_count);
  CHECK(a.witnesses == b.witnesses);
  REQUIRE_FALSE(a.witness_hosts.empty());
  CHECK(count_injections(ap4_pattern(), a.witness_hosts.front()) == a.best_count);

  HillClimbOptions free_opts;
  free_opts.restarts = 2;
  const SearchResult f = hill_climb(ap4_pattern(), 8, free_opts);
  CHECK(f.best_count <= exact_max(ap4_pattern(), 8).best_count);
}

TEST_CASE("hill_climb on AC4 from clique seeds") {
  // Falling-factorial normalization; see the finite-n discussion in the README.
  HillClimbOptions opts;
  opts.restarts = 1;
  opts.beta = 1.0 / 3;
  opts.seeds = {make_construction(parse_construction("cliques:1/3,1/3,1/3"), 60)};
  const SearchResult third = hill_climb(ac4_pattern(), 60, opts);
  const double b3 = 1.0 / 3;
  CHECK(falling_density(third.best_count, 60, 4) >= 0.95 * b3 * b3 * (1 - b3));

  opts.beta = 0.4;
  const auto part = ac4_clique_value(0.4);
  opts.seeds = {make_construction(DisjointCliques{{part.u, part.u, part.w}}, 60)};
  const SearchResult two_fifths = hill_climb(ac4_pattern(), 60, opts);
  CHECK(falling_density(two_fifths.best_count, 60, 4) >= 0.080);
}
