#include "semind/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace semind {

std::string to_string(Count c) {
  if (c == 0) return "0";
  const bool neg = c < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(c) : static_cast<unsigned __int128>(c);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

double to_double(Count c) { return static_cast<double>(c); }

Count falling_factorial(std::int64_t x, int k) {
  if (k < 0) throw std::invalid_argument("negative falling factorial order");
  if (x < k) return 0;
  Count r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

Count binomial(std::int64_t n, int k) {
  if (k < 0 || n < k) return 0;
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double normalized_density(Count count, int n, int h) {
  return to_double(count) / std::pow(static_cast<double>(n), h);
}

double falling_density(Count count, int n, int h) {
  return to_double(count) / to_double(falling_factorial(n, h));
}

namespace {

using Word = std::uint64_t;

// Red rows and blue rows (self excluded) as word arrays.
struct Rows {
  int n;
  std::size_t w;
  std::vector<Word> red, blue;
  std::vector<Word> all;

  explicit Rows(const HostGraph& g) : n(g.n()), w(g.words()), red(n * w), blue(n * w), all(w, 0) {
    for (int v = 0; v < n; ++v) all[v >> 6] |= Word{1} << (v & 63);
    for (int v = 0; v < n; ++v) {
      auto r = g.row(v);
      for (std::size_t k = 0; k < w; ++k) {
        red[v * w + k] = r[k];
        blue[v * w + k] = ~r[k] & all[k];
      }
      blue[v * w + (v >> 6)] &= ~(Word{1} << (v & 63));
    }
  }
  const Word* row(int v, PairColor c) const { return (c == PairColor::Red ? red.data() : blue.data()) + v * w; }
};

struct Partition {
  std::vector<std::uint32_t> blocks;
  Count mu;
};

std::vector<Partition> set_partitions(int m) {
  std::vector<Partition> out;
  std::vector<int> rgs(m, 0);
  auto emit = [&](int nblocks) {
    Partition p;
    p.blocks.assign(nblocks, 0);
    for (int i = 0; i < m; ++i) p.blocks[rgs[i]] |= 1u << i;
    p.mu = 1;
    for (auto b : p.blocks) {
      const int sz = std::popcount(b);
      for (int i = 2; i < sz; ++i) p.mu *= i;
      if (sz % 2 == 0) p.mu = -p.mu;
    }
    out.push_back(std::move(p));
  };
  if (m == 0) {
    out.push_back({{}, 1});
    return out;
  }
  // Restricted growth strings.
  auto rec = [&](auto&& self, int i, int maxb) -> void {
    if (i == m) {
      emit(maxb + 1);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

struct Plan {
  int h = 0;
  std::vector<int> cover;  // backtracking order
  // For cover position i: constraints to earlier cover positions.
  std::vector<std::vector<std::pair<int, PairColor>>> cover_cons;
  // For each leaf: constraints to cover positions.
  std::vector<std::vector<std::pair<int, PairColor>>> leaf_cons;
  std::vector<Partition> partitions;
};

Plan make_plan(const PatternGraph& h) {
  Plan p;
  p.h = h.h();
  std::vector<std::uint32_t> adj(p.h, 0);
  for (int i = 0; i < p.h; ++i)
    for (int j = 0; j < p.h; ++j)
      if (i != j && h.color(i, j) != PairColor::Free) adj[i] |= 1u << j;

  std::uint32_t best = (1u << p.h) - 1;
  for (std::uint32_t s = 0; s < (1u << p.h); ++s) {
    if (std::popcount(s) >= std::popcount(best)) continue;
    bool ok = true;
    for (int i = 0; i < p.h && ok; ++i)
      if (!(s >> i & 1u)) ok = (adj[i] & ~s) == 0;
    if (ok) best = s;
  }

  // Most-constrained-first ordering inside the cover.
  std::uint32_t left = best, placed = 0;
  while (left) {
    int pick = -1, score = -1;
    for (int i = 0; i < p.h; ++i) {
      if (!(left >> i & 1u)) continue;
      const int sc = std::popcount(adj[i] & placed) * 64 + std::popcount(adj[i]);
      if (sc > score) score = sc, pick = i;
    }
    p.cover.push_back(pick);
    left &= ~(1u << pick);
    placed |= 1u << pick;
  }
  for (std::size_t i = 0; i < p.cover.size(); ++i) {
    std::vector<std::pair<int, PairColor>> cons;
    for (std::size_t j = 0; j < i; ++j) {
      auto c = h.color(p.cover[i], p.cover[j]);
      if (c != PairColor::Free) cons.emplace_back(static_cast<int>(j), c);
    }
    p.cover_cons.push_back(std::move(cons));
  }
  for (int v = 0; v < p.h; ++v) {
    if (best >> v & 1u) continue;
    std::vector<std::pair<int, PairColor>> cons;
    for (std::size_t j = 0; j < p.cover.size(); ++j) {
      auto c = h.color(v, p.cover[j]);
      if (c != PairColor::Free) cons.emplace_back(static_cast<int>(j), c);
    }
    p.leaf_cons.push_back(std::move(cons));
  }
  p.partitions = set_partitions(static_cast<int>(p.leaf_cons.size()));
  return p;
}

class Counter {
 public:
  Counter(const Plan& plan, const Rows& rows)
      : plan_(plan),
        rows_(rows),
        image_(plan.cover.size()),
        used_(rows.w, 0),
        cand_((plan.cover.size() + 1) * rows.w),
        inter_((std::size_t{1} << plan.leaf_cons.size()) * rows.w),
        sizes_(std::size_t{1} << plan.leaf_cons.size()) {}

  Count run_first(int v0) {
    total_ = 0;
    if (plan_.cover.empty()) {
      leaf();
      return total_;
    }
    place(0, v0);
    return total_;
  }

  Count run_all() {
    total_ = 0;
    if (plan_.cover.empty()) {
      leaf();
      return total_;
    }
    for (int v = 0; v < rows_.n; ++v) place(0, v);
    return total_;
  }

 private:
  void place(std::size_t i, int v) {
    image_[i] = v;
    used_[v >> 6] |= Word{1} << (v & 63);
    if (i + 1 == plan_.cover.size()) {
      leaf();
    } else {
      const std::size_t w = rows_.w;
      Word* c = cand_.data() + (i + 1) * w;
      for (std::size_t k = 0; k < w; ++k) c[k] = rows_.all[k] & ~used_[k];
      for (auto [j, col] : plan_.cover_cons[i + 1]) {
        const Word* r = rows_.row(image_[j], col);
        for (std::size_t k = 0; k < w; ++k) c[k] &= r[k];
      }
      for (std::size_t k = 0; k < w; ++k) {
        Word bits = c[k];
        while (bits) {
          const int b = std::countr_zero(bits);
          bits &= bits - 1;
          place(i + 1, static_cast<int>(k * 64 + b));
        }
      }
    }
    used_[v >> 6] &= ~(Word{1} << (v & 63));
  }

  void leaf() {
    const std::size_t w = rows_.w;
    const std::size_t m = plan_.leaf_cons.size();
    if (m == 0) {
      ++total_;
      return;
    }
    const std::size_t full = std::size_t{1} << m;
    for (std::size_t l = 0; l < m; ++l) {
      Word* dst = inter_.data() + (std::size_t{1} << l) * w;
      for (std::size_t k = 0; k < w; ++k) dst[k] = rows_.all[k] & ~used_[k];
      for (auto [j, col] : plan_.leaf_cons[l]) {
        const Word* r = rows_.row(image_[j], col);
        for (std::size_t k = 0; k < w; ++k) dst[k] &= r[k];
      }
    }
    for (std::size_t mask = 1; mask < full; ++mask) {
      Word* dst = inter_.data() + mask * w;
      const std::size_t low = mask & (~mask + 1);
      if (mask != low) {
        const Word* a = inter_.data() + (mask ^ low) * w;
        const Word* b = inter_.data() + low * w;
        for (std::size_t k = 0; k < w; ++k) dst[k] = a[k] & b[k];
      }
      std::int64_t pc = 0;
      for (std::size_t k = 0; k < w; ++k) pc += std::popcount(dst[k]);
      sizes_[mask] = pc;
    }
    Count sum = 0;
    for (const auto& p : plan_.partitions) {
      Count term = p.mu;
      for (auto b : p.blocks) {
        term *= sizes_[b];
        if (term == 0) break;
      }
      sum += term;
    }
    total_ += sum;
  }

  const Plan& plan_;
  const Rows& rows_;
  std::vector<int> image_;
  std::vector<Word> used_;
  std::vector<Word> cand_;
  std::vector<Word> inter_;
  std::vector<std::int64_t> sizes_;
  Count total_ = 0;
};

}  // namespace

Count count_injections(const PatternGraph& h, const HostGraph& g, int threads) {
  if (h.h() > g.n()) return 0;
  if (h.h() > 20) throw UnsupportedSize("patterns are limited to 20 vertices");
  const Plan plan = make_plan(h);
  if (plan.leaf_cons.size() > 12) throw UnsupportedSize("pattern has too many cover leaves");
  const Rows rows(g);
  if (threads <= 1 || plan.cover.empty() || g.n() < 64) return Counter(plan, rows).run_all();

  std::atomic<int> next{0};
  std::mutex mu;
  Count total = 0;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      Counter c(plan, rows);
      Count local = 0;
      for (int v; (v = next.fetch_add(1)) < g.n();) local += c.run_first(v);
      std::lock_guard lock(mu);
      total += local;
    });
  }
  for (auto& th : pool) th.join();
  return total;
}

std::int64_t triangle_count(const HostGraph& g) {
  std::int64_t s = 0;
  for (int u = 0; u < g.n(); ++u) {
    auto ru = g.row(u);
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.red(u, v)) continue;
      auto rv = g.row(v);
      for (std::size_t k = 0; k < g.words(); ++k) s += std::popcount(ru[k] & rv[k]);
    }
  }
  return s / 3;
}

DegreeStats degree_stats(const HostGraph& g) {
  DegreeStats st;
  const int n = g.n();
  st.degrees = g.degrees();
  Count sum_d = 0, sum_d2 = 0, cherries = 0;
  for (int d : st.degrees) {
    sum_d += d;
    sum_d2 += Count{d} * d;
    cherries += Count{d} * (d - 1) / 2;
  }
  st.m = static_cast<std::int64_t>(sum_d / 2);

  // Codegrees give triangles (over red pairs) and tr(A^4).
  Count tri3 = 0, codeg_sq = 0;
  for (int u = 0; u < n; ++u) {
    auto ru = g.row(u);
    for (int v = u + 1; v < n; ++v) {
      auto rv = g.row(v);
      std::int64_t c = 0;
      for (std::size_t k = 0; k < g.words(); ++k) c += std::popcount(ru[k] & rv[k]);
      codeg_sq += Count{c} * c;
      if (g.red(u, v)) {
        tri3 += c;
        st.sum_red_dd += Count{st.degrees[u]} * st.degrees[v];
      }
    }
  }
  const Count triangles = tri3 / 3;
  st.t = cherries - 3 * triangles;
  st.sum_blue_dd = (sum_d * sum_d - sum_d2) / 2 - st.sum_red_dd;
  const Count trace_a4 = sum_d2 + 2 * codeg_sq;
  // sum over ordered blue pairs of (A^3)_uv = 1'A^3 1 - tr(A^3) - tr(A^4).
  st.s_open = (2 * st.sum_red_dd - 6 * triangles - trace_a4) / 2;
  return st;
}

Count count_ap4_fast(const HostGraph& g) {
  const auto st = degree_stats(g);
  return 2 * (st.sum_blue_dd - st.t);
}

Count count_star_fast(const HostGraph& g, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative leaf count");
  Count total = 0;
  for (int d : g.degrees()) total += falling_factorial(d, a) * falling_factorial(g.n() - 1 - d, b);
  return total;
}

Count ds_upper_bound(const HostGraph& g, int s) {
  if (s < 1) throw std::invalid_argument("ds_upper_bound needs s >= 1");
  const auto deg = g.degrees();
  std::vector<Count> pw(deg.size());
  for (std::size_t v = 0; v < deg.size(); ++v) {
    Count p = 1;
    for (int i = 0; i < s; ++i)
      if (__builtin_mul_overflow(p, Count{deg[v]}, &p)) throw std::overflow_error("ds_upper_bound overflow");
    pw[v] = p;
  }
  Count total = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.red(u, v)) continue;
      Count term;
      if (__builtin_mul_overflow(pw[u], pw[v], &term) || __builtin_add_overflow(total, term, &total))
        throw std::overflow_error("ds_upper_bound overflow");
    }
  if (__builtin_mul_overflow(total, Count{2}, &total)) throw std::overflow_error("ds_upper_bound overflow");
  return total;
}

namespace {

// Class index for every labelled k-vertex colouring, keyed by its pair bits
// in lexicographic order (bit i = pair i red).
struct ClassTable {
  std::vector<int> index;
  std::vector<CanonicalCode> codes;
};

const ClassTable& class_table(int k) {
  static std::mutex mu;
  static std::map<int, ClassTable> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  ClassTable t;
  const int pairs = static_cast<int>(pair_count(k));
  t.index.assign(std::size_t{1} << pairs, -1);
  std::map<CanonicalCode, int> seen;
  for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
    HostGraph g(k);
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j, ++idx)
        if (bits >> idx & 1u) g.set_red(i, j, true);
    auto code = canonical_form(g);
    auto [it, fresh] = seen.try_emplace(code, static_cast<int>(t.codes.size()));
    if (fresh) t.codes.push_back(code);
    t.index[bits] = it->second;
  }
  return cache.emplace(k, std::move(t)).first->second;
}

}  // namespace

InducedProfile induced_profile(const HostGraph& g, int k, std::int64_t budget) {
  if (k < 1 || k > 5) throw UnsupportedSize("induced_profile supports 1 <= k <= 5");
  if (binomial(g.n(), k) > budget)
    throw UnsupportedSize("induced_profile: C(n,k) exceeds the enumeration budget");
  const auto& table = class_table(k);
  std::vector<Count> counts(table.codes.size(), 0);
  const int n = g.n();
  std::vector<int> chosen(k);

  // Bit position of pair (a,b), a<b<k, in lexicographic order.
  std::vector<std::vector<int>> bitpos(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) bitpos[a][b] = static_cast<int>(pair_index(k, a, b));

  auto rec = [&](auto&& self, int depth, int start, std::uint32_t bits) -> void {
    if (depth == k) {
      ++counts[table.index[bits]];
      return;
    }
    for (int v = start; v <= n - (k - depth); ++v) {
      std::uint32_t b = bits;
      for (int a = 0; a < depth; ++a)
        if (g.red(chosen[a], v)) b |= 1u << bitpos[a][depth];
      chosen[depth] = v;
      self(self, depth + 1, v + 1, b);
    }
  };
  if (n >= k) rec(rec, 0, 0, 0);

  InducedProfile p;
  p.k = k;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != 0) p.counts.emplace(table.codes[i], counts[i]);
  return p;
}

}  // namespace semind
