// Canonical labelling of red/blue complete graphs on at most 16 vertices.
//
// The canonical code is the minimum, over all vertex orders whose degree
// sequence is non-decreasing, of the pair-colour string read in colex order
// (0,1),(0,2),(1,2),(0,3),... with blue < red. Column k of that string only
// depends on the vertices at positions 0..k, so the search fixes one
// position at a time and discards every candidate whose column is not the
// smallest available. Twins (vertices whose transposition is an
// automorphism fixing the placed prefix) are explored once.

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>

#include "semind/colored_graph.hpp"

namespace semind {
namespace {

using Code = unsigned __int128;

struct Search {
  int n = 0;
  std::array<std::uint32_t, kMaxCanonicalOrder> adj{};
  std::array<int, kMaxCanonicalOrder> deg{};
  std::array<int, kMaxCanonicalOrder> order{};
  std::uint32_t placed = 0;

  Code best = 0;
  bool have_best = false;
  std::array<int, kMaxCanonicalOrder> best_order{};

  static int column_shift(int k) {
    // Bits for column k occupy colex indices k(k-1)/2 .. k(k+1)/2-1; index
    // idx lives at bit 127-idx so earlier pairs are more significant.
    return 128 - k * (k + 1) / 2;
  }

  std::uint32_t signature(int v, int k) const {
    std::uint32_t s = 0;
    for (int i = 0; i < k; ++i) s = (s << 1) | ((adj[order[i]] >> v) & 1u);
    return s;
  }

  void extend(int k, Code code) {
    if (k == n) {
      if (!have_best || code < best) {
        best = code;
        best_order = order;
        have_best = true;
      }
      return;
    }
    int dmin = 1 << 30;
    for (int v = 0; v < n; ++v)
      if (!(placed >> v & 1u)) dmin = std::min(dmin, deg[v]);

    std::uint32_t smin = ~0u;
    std::array<int, kMaxCanonicalOrder> cand{};
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v & 1u) || deg[v] != dmin) continue;
      const std::uint32_t s = signature(v, k);
      if (s < smin) {
        smin = s;
        nc = 0;
      }
      if (s == smin) cand[nc++] = v;
    }

    Code next = code;
    if (k > 0) {
      const int shift = column_shift(k);
      next |= Code{smin} << shift;
      if (have_best && next > (best >> shift) << shift) return;
    }

    std::uint32_t explored = 0;
    for (int c = 0; c < nc; ++c) {
      const int v = cand[c];
      bool twin = false;
      for (int e = 0; e < c && !twin; ++e) {
        const int w = cand[e];
        if (!(explored >> w & 1u)) continue;
        const std::uint32_t mask = ~((1u << v) | (1u << w));
        twin = ((adj[v] ^ adj[w]) & mask) == 0;
      }
      if (twin) continue;
      explored |= 1u << v;
      order[k] = v;
      placed |= 1u << v;
      extend(k + 1, next);
      placed &= ~(1u << v);
    }
  }
};

std::string code_text(const HostGraph& canon) {
  std::string s = format_host(canon);
  s[s.find(' ')] = ':';
  return s;
}

}  // namespace

std::pair<HostGraph, std::vector<int>> canonical_labeling(const HostGraph& g) {
  if (g.n() > kMaxCanonicalOrder)
    throw UnsupportedSize("canonical form supports at most 16 vertices, got " + std::to_string(g.n()));
  Search s;
  s.n = g.n();
  for (int v = 0; v < s.n; ++v) {
    s.adj[v] = static_cast<std::uint32_t>(g.row(v)[0]);
    s.deg[v] = std::popcount(s.adj[v]);
  }
  s.extend(0, 0);
  std::vector<int> perm(s.n);
  for (int pos = 0; pos < s.n; ++pos) perm[s.best_order[pos]] = pos;
  return {permute(g, perm), std::move(perm)};
}

CanonicalCode canonical_form(const HostGraph& g) {
  return CanonicalCode(code_text(canonical_labeling(g).first));
}

namespace {

std::vector<HostGraph> build_classes(int k) {
  if (k < 1) throw UnsupportedSize("enumeration needs k >= 1");
  if (k == 1) return {HostGraph(1)};
  const auto& smaller = detail::classes_of_order(k - 1);
  std::map<std::string, HostGraph> found;
  for (const auto& base : smaller) {
    for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
      HostGraph g(k);
      for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k - 1; ++j)
          if (base.red(i, j)) g.set_red(i, j, true);
      for (int i = 0; i < k - 1; ++i)
        if (mask >> i & 1u) g.set_red(i, k - 1, true);
      auto canon = canonical_labeling(g).first;
      found.try_emplace(code_text(canon), std::move(canon));
    }
  }
  std::vector<HostGraph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

namespace detail {

const std::vector<HostGraph>& classes_of_order(int k) {
  if (k > 8) throw UnsupportedSize("class enumeration supports at most 8 vertices");
  static std::mutex mu;
  static std::map<int, std::vector<HostGraph>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // Built outside the lock: the recursive call for k-1 takes it again.
  auto built = build_classes(k);
  std::lock_guard lock(mu);
  return cache.try_emplace(k, std::move(built)).first->second;
}

}  // namespace detail

std::vector<HostGraph> enumerate_colored_graphs(int k) {
  if (k > 7) throw UnsupportedSize("enumerate_colored_graphs supports k <= 7, got " + std::to_string(k));
  return detail::classes_of_order(k);
}

}  // namespace semind
