#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "semind/counting.hpp"

namespace semind {
namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

}  // namespace

PatternGraph ap4_pattern() { return PatternGraph(4, {{0, 1}, {2, 3}}, {{1, 2}}); }

PatternGraph ac4_pattern() { return PatternGraph(4, {{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}); }

PatternGraph peenn_pattern() { return PatternGraph(5, {{0, 1}, {1, 2}}, {{2, 3}, {3, 4}}); }

PatternGraph ds_pattern(int s) {
  if (s < 1) throw std::invalid_argument("ds pattern needs s >= 1");
  std::vector<std::pair<int, int>> red;
  for (int i = 0; i < s; ++i) {
    red.emplace_back(0, 2 + i);
    red.emplace_back(1, 2 + s + i);
  }
  return PatternGraph(2 + 2 * s, red, {{0, 1}});
}

PatternGraph star_pattern(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("star pattern needs a, b >= 0");
  std::vector<std::pair<int, int>> red, blue;
  for (int i = 1; i <= a; ++i) red.emplace_back(0, i);
  for (int i = a + 1; i <= a + b; ++i) blue.emplace_back(0, i);
  return PatternGraph(1 + a + b, red, blue);
}

PatternGraph tree_pattern(std::string_view edges) {
  std::vector<std::pair<int, int>> red;
  int h = 0;
  while (!edges.empty()) {
    auto comma = edges.find(',');
    auto item = edges.substr(0, comma);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw std::invalid_argument("tree edge needs 'u-v'");
    const int u = parse_int(item.substr(0, dash), "tree edge");
    const int v = parse_int(item.substr(dash + 1), "tree edge");
    if (u < 0 || v < 0 || u == v) throw std::invalid_argument("bad tree edge");
    red.emplace_back(u, v);
    h = std::max({h, u + 1, v + 1});
    if (comma == std::string_view::npos) break;
    edges.remove_prefix(comma + 1);
  }
  if (red.empty()) throw std::invalid_argument("empty tree");
  if (static_cast<int>(red.size()) != h - 1) throw std::invalid_argument("edge list is not a tree on 0..h-1");
  // Connectivity via union-find.
  std::vector<int> parent(h);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : red) {
    const int a = find(u), b = find(v);
    if (a == b) throw std::invalid_argument("edge list contains a cycle");
    parent[a] = b;
  }
  return PatternGraph(h, red, {});
}

PatternGraph red_clique_pattern(int k) {
  std::vector<std::pair<int, int>> red;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) red.emplace_back(i, j);
  return PatternGraph(k, red, {});
}

PatternGraph pattern_by_name(std::string_view name) {
  if (name == "ap4") return ap4_pattern();
  if (name == "ac4") return ac4_pattern();
  if (name == "peenn") return peenn_pattern();
  if (name.starts_with("ds:")) return ds_pattern(parse_int(name.substr(3), "ds:<s>"));
  if (name.starts_with("s:")) {
    auto rest = name.substr(2);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("star needs s:<a>,<b>");
    return star_pattern(parse_int(rest.substr(0, comma), "s:<a>,<b>"),
                        parse_int(rest.substr(comma + 1), "s:<a>,<b>"));
  }
  if (name.starts_with("tree:")) return tree_pattern(name.substr(5));
  throw std::invalid_argument("unknown builtin pattern '" + std::string(name) + "'");
}

int automorphism_count(const PatternGraph& h) {
  std::vector<int> perm(h.h());
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < h.h() && ok; ++i)
      for (int j = i + 1; j < h.h() && ok; ++j) ok = h.color(perm[i], perm[j]) == h.color(i, j);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace semind
