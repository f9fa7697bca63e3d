#include "semind/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace semind {
namespace {

std::vector<Count> count_all(const PatternGraph& h, const std::vector<HostGraph>& hosts, int threads) {
  std::vector<Count> counts(hosts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < hosts.size();) counts[i] = count_injections(h, hosts[i]);
  };
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return counts;
}

const std::vector<HostGraph>& classes_for_search(int n) {
  if (n < 1) throw UnsupportedSize("exact search needs n >= 1");
  if (n > 8) throw UnsupportedSize("exact search supports n <= 8; use hill_climb for larger n");
  return detail::classes_of_order(n);
}

}  // namespace

SearchResult exact_max(const PatternGraph& h, int n, std::optional<int> m, int threads) {
  const auto& classes = classes_for_search(n);
  const int pairs = static_cast<int>(pair_count(n));
  if (m && (*m < 0 || *m > pairs)) throw std::invalid_argument("m out of range [0, C(n,2)]");

  std::vector<HostGraph> pool;
  for (const auto& g : classes)
    if (!m || g.red_pairs() == *m) pool.push_back(g);
  const auto counts = count_all(h, pool, threads);

  SearchResult r;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const int e = static_cast<int>(pool[i].red_pairs());
    auto [it, fresh] = r.per_edge_count.try_emplace(e, counts[i]);
    if (!fresh) it->second = std::max(it->second, counts[i]);
    r.best_count = std::max(r.best_count, counts[i]);
  }
  // Classes are sorted by canonical code, so witnesses come out sorted too.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (counts[i] != r.best_count) continue;
    r.witnesses.push_back(canonical_form(pool[i]));
    r.witness_hosts.push_back(pool[i]);
  }
  return r;
}

SearchResult full_profile(const PatternGraph& h, int n, int threads) {
  auto r = exact_max(h, n, std::nullopt, threads);
  for (int e = 0; e <= static_cast<int>(pair_count(n)); ++e) r.per_edge_count.try_emplace(e, 0);
  return r;
}

namespace {

struct Climber {
  const PatternGraph& h;
  int n;
  const HillClimbOptions& opts;
  std::mt19937_64 rng;
  SearchResult& out;
  HostGraph best_host;
  Count best = -1;

  Count evaluate(const HostGraph& g) {
    const Count c = count_injections(h, g, opts.threads);
    const int e = static_cast<int>(g.red_pairs());
    auto [it, fresh] = out.per_edge_count.try_emplace(e, c);
    if (!fresh) it->second = std::max(it->second, c);
    if (c > best) {
      best = c;
      best_host = g;
    }
    return c;
  }

  std::pair<int, int> random_pair() {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    return {std::min(i, j), std::max(i, j)};
  }

  // A random pair of the requested colour, or {-1,-1} if none exists.
  std::pair<int, int> random_pair_of(const HostGraph& g, bool red) {
    const auto e = g.red_pairs();
    const auto total = static_cast<std::int64_t>(pair_count(n));
    if ((red && e == 0) || (!red && e == total)) return {-1, -1};
    for (;;) {
      auto p = random_pair();
      if (g.red(p.first, p.second) == red) return p;
    }
  }

  HostGraph random_start() {
    HostGraph g(n);
    const auto total = static_cast<std::int64_t>(pair_count(n));
    if (opts.beta) {
      const auto target = std::clamp<std::int64_t>(std::llround(*opts.beta * total), 0, total);
      std::vector<std::int64_t> idx(total);
      for (std::int64_t i = 0; i < total; ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<char> red(total, 0);
      for (std::int64_t i = 0; i < target; ++i) red[idx[i]] = 1;
      std::int64_t k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
          if (red[k]) g.set_red(i, j, true);
    } else {
      std::bernoulli_distribution coin(0.5);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng)) g.set_red(i, j, true);
    }
    return g;
  }

  void climb(HostGraph g) {
    Count cur = evaluate(g);
    const int proposals = opts.max_proposals > 0 ? opts.max_proposals : 40 * n;
    const int plateau = 2 * n;
    int sideways = 0;
    for (int it = 0; it < proposals; ++it) {
      std::vector<std::pair<int, int>> flips;
      if (opts.beta) {
        auto r = random_pair_of(g, true);
        auto b = random_pair_of(g, false);
        if (r.first < 0 || b.first < 0) break;
        flips = {r, b};
      } else {
        flips = {random_pair()};
      }
      for (auto [i, j] : flips) g.flip(i, j);
      const Count c = evaluate(g);
      if (c > cur) {
        cur = c;
        sideways = 0;
      } else if (c == cur && sideways < plateau) {
        ++sideways;
      } else {
        for (auto [i, j] : flips) g.flip(i, j);
      }
    }
  }
};

}  // namespace

SearchResult hill_climb(const PatternGraph& h, int n, const HillClimbOptions& opts) {
  if (n > 200) throw UnsupportedSize("hill_climb supports n <= 200");
  if (n < 2) throw UnsupportedSize("hill_climb needs n >= 2");
  if (opts.beta && (*opts.beta < 0 || *opts.beta > 1)) throw std::invalid_argument("beta must lie in [0,1]");
  for (const auto& s : opts.seeds)
    if (s.n() != n) throw std::invalid_argument("seed host has the wrong order");

  SearchResult out;
  Climber c{h, n, opts, std::mt19937_64(opts.seed), out, HostGraph(n), -1};
  for (const auto& s : opts.seeds) c.evaluate(s);
  if (opts.seeds.empty() && opts.restarts == 0) c.evaluate(c.random_start());

  for (int r = 0; r < opts.restarts; ++r) {
    if (r < static_cast<int>(opts.seeds.size()))
      c.climb(opts.seeds[r]);
    else
      c.climb(c.random_start());
  }
  out.best_count = c.best;
  out.witness_hosts.push_back(c.best_host);
  if (n <= kMaxCanonicalOrder) out.witnesses.push_back(canonical_form(c.best_host));
  return out;
}

}  // namespace semind
