#include "semind/flags.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "semind/counting.hpp"

namespace semind {

namespace {

std::string pair_string(const HostGraph& g) {
  std::string s;
  s.reserve(pair_count(g.n()));
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) s += g.red(i, j) ? 'R' : 'B';
  return s;
}

CoeffPoly ratio(long num, long den) { return CoeffPoly(QSqrt2(mpq_class(num, den))); }

std::vector<std::vector<int>> subsets(const std::vector<int>& from, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < from.size(); ++i) {
      cur.push_back(from[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::mutex cache_mutex;

// Rooted classes on K vertices whose root-induced graph has pair string `type`.
const std::vector<std::string>& rooted_classes(int K, int r, const std::string& type) {
  static std::map<std::tuple<int, int, std::string>, std::vector<std::string>> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_tuple(K, r, type);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::pair<int, int>> free_pairs;
  HostGraph base(K);
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j) {
      if (j < r)
        base.set_red(i, j, type[pair_index(r, i, j)] == 'R');
      else
        free_pairs.emplace_back(i, j);
    }
  std::vector<std::string> codes;
  for (std::uint32_t mask = 0; mask < (1u << free_pairs.size()); ++mask) {
    HostGraph g = base;
    for (std::size_t b = 0; b < free_pairs.size(); ++b)
      g.set_red(free_pairs[b].first, free_pairs[b].second, (mask >> b) & 1u);
    codes.push_back(RootedFlag{g, r}.code());
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return cache.emplace(key, std::move(codes)).first->second;
}

// For a rooted class H on K vertices: how many splits of the non-roots into
// parts of sizes k1 - r and K - k1 induce each pair of flags.
using SplitTable = std::map<std::pair<std::string, std::string>, long>;

const SplitTable& split_table(const std::string& h_code, int k1) {
  static std::map<std::pair<std::string, int>, SplitTable> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({h_code, k1}); it != cache.end()) return it->second;
  }
  const RootedFlag h = flag_from_code(h_code);
  const int K = h.graph.n(), r = h.roots;
  std::vector<int> rest(K - r);
  std::iota(rest.begin(), rest.end(), r);
  SplitTable table;
  for (const auto& part : subsets(rest, k1 - r)) {
    std::vector<int> left(r), right(r);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), 0);
    for (int v : rest) (std::find(part.begin(), part.end(), v) != part.end() ? left : right).push_back(v);
    const std::string c1 = RootedFlag{induced_subgraph(h.graph, left), r}.code();
    const std::string c2 = RootedFlag{induced_subgraph(h.graph, right), r}.code();
    ++table[{c1, c2}];
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(std::make_pair(h_code, k1), std::move(table)).first->second;
}

// Number of k-subsets of each K-vertex class inducing each k-vertex class.
const std::map<CanonicalCode, std::map<CanonicalCode, long>>& subset_table(int k, int K) {
  static std::map<std::pair<int, int>, std::map<CanonicalCode, std::map<CanonicalCode, long>>> cache;
  std::lock_guard lock(cache_mutex);
  if (auto it = cache.find({k, K}); it != cache.end()) return it->second;
  std::map<CanonicalCode, std::map<CanonicalCode, long>> table;
  std::vector<int> all(K);
  std::iota(all.begin(), all.end(), 0);
  const auto sets = subsets(all, k);
  for (const auto& H : detail::classes_of_order(K)) {
    auto& row = table[canonical_form(H)];
    for (const auto& s : sets) ++row[canonical_form(induced_subgraph(H, s))];
  }
  return cache.emplace(std::make_pair(k, K), std::move(table)).first->second;
}

}  // namespace

RootedFlag RootedFlag::make(const HostGraph& g, const std::vector<int>& roots) {
  const int k = g.n();
  std::vector<int> order = roots;
  for (int v = 0; v < k; ++v)
    if (std::find(roots.begin(), roots.end(), v) == roots.end()) order.push_back(v);
  if (static_cast<int>(order.size()) != k) throw std::invalid_argument("roots must be distinct vertices");
  return {induced_subgraph(g, order), static_cast<int>(roots.size())};
}

std::string RootedFlag::code() const {
  const int k = graph.n();
  if (roots < 0 || roots > k) throw std::invalid_argument("root count out of range");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = pair_string(permute(graph, perm));
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin() + roots, perm.end()));
  return std::to_string(k) + "/" + std::to_string(roots) + ":" + best;
}

std::string RootedFlag::type() const {
  std::vector<int> r(roots);
  std::iota(r.begin(), r.end(), 0);
  return pair_string(induced_subgraph(graph, r));
}

RootedFlag flag_from_code(std::string_view code) {
  const auto slash = code.find('/'), colon = code.find(':');
  if (slash == std::string_view::npos || colon == std::string_view::npos || colon < slash)
    throw ParseError("malformed flag code", 0);
  const std::string k(code.substr(0, slash));
  const int r = std::stoi(std::string(code.substr(slash + 1, colon - slash - 1)));
  return {parse_host(k + " " + std::string(code.substr(colon + 1))), r};
}

FlagCombo FlagCombo::single(const RootedFlag& f, const CoeffPoly& coeff) {
  FlagCombo c{f.graph.n(), f.roots, {}};
  c.add(f.code(), coeff);
  return c;
}

void FlagCombo::add(const std::string& code, const CoeffPoly& coeff) {
  auto& slot = terms[code];
  slot += coeff;
  if (slot.is_zero()) terms.erase(code);
}

FlagCombo& FlagCombo::operator+=(const FlagCombo& o) {
  if (terms.empty() && k == 0) {
    k = o.k;
    roots = o.roots;
  }
  if (o.k != k || o.roots != roots) throw TypeError("adding flag combinations of different shape");
  for (const auto& [c, v] : o.terms) add(c, v);
  return *this;
}

FlagCombo FlagCombo::scaled(const CoeffPoly& c) const {
  FlagCombo r{k, roots, {}};
  for (const auto& [code, v] : terms) r.add(code, v * c);
  return r;
}

void GraphCombo::add(const CanonicalCode& code, const CoeffPoly& coeff) {
  auto& slot = terms[code];
  slot += coeff;
  if (slot.is_zero()) terms.erase(code);
}

CoeffPoly GraphCombo::at(const CanonicalCode& code) const {
  auto it = terms.find(code);
  return it == terms.end() ? CoeffPoly() : it->second;
}

GraphCombo& GraphCombo::operator+=(const GraphCombo& o) {
  if (terms.empty() && k == 0) k = o.k;
  if (o.k != k && !o.terms.empty()) throw std::invalid_argument("adding combinations on different bases");
  for (const auto& [c, v] : o.terms) add(c, v);
  return *this;
}

GraphCombo& GraphCombo::operator-=(const GraphCombo& o) { return *this += o.scaled(CoeffPoly(-1L)); }

GraphCombo GraphCombo::scaled(const CoeffPoly& c) const {
  GraphCombo r{k, {}};
  for (const auto& [code, v] : terms) r.add(code, v * c);
  return r;
}

GraphCombo unit_combo(int k) {
  GraphCombo r{k, {}};
  for (const auto& g : detail::classes_of_order(k)) r.add(canonical_form(g), CoeffPoly(1L));
  return r;
}

FlagCombo flag_product(const FlagCombo& a, const FlagCombo& b) {
  if (a.roots != b.roots) throw TypeError("flag types have different sizes");
  const int r = a.roots, K = a.k + b.k - r;
  if (K > kMaxFlagOrder) throw UnsupportedSize("flag product would need " + std::to_string(K) + " vertices");
  std::string type;
  for (const auto* side : {&a, &b})
    for (const auto& [code, v] : side->terms) {
      const std::string t = flag_from_code(code).type();
      if (type.empty() && r > 1) type = t;
      if (t != type) throw TypeError("flag types differ: " + type + " vs " + t);
    }
  FlagCombo out{K, r, {}};
  if (a.terms.empty() || b.terms.empty()) return out;
  const long total = static_cast<long>(binomial(K - r, a.k - r));
  for (const auto& h : rooted_classes(K, r, type)) {
    const auto& table = split_table(h, a.k);
    CoeffPoly sum;
    for (const auto& [c1, v1] : a.terms)
      for (const auto& [c2, v2] : b.terms)
        if (auto it = table.find({c1, c2}); it != table.end()) sum += v1 * v2 * ratio(it->second, total);
    if (!sum.is_zero()) out.terms.emplace(h, std::move(sum));
  }
  return out;
}

GraphCombo unlabel(const FlagCombo& f) {
  GraphCombo out{f.k, {}};
  for (const auto& [code, v] : f.terms) {
    const RootedFlag h = flag_from_code(code);
    const int k = h.graph.n(), r = h.roots;
    long good = 0, total = 0;
    std::vector<int> theta(r);
    std::vector<bool> used(k, false);
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == r) {
        ++total;
        if (RootedFlag::make(h.graph, theta).code() == code) ++good;
        return;
      }
      for (int v = 0; v < k; ++v) {
        if (used[v]) continue;
        used[v] = true;
        theta[depth] = v;
        self(self, depth + 1);
        used[v] = false;
      }
    };
    rec(rec, 0);
    out.add(canonical_form(h.graph), v * ratio(good, total));
  }
  return out;
}

GraphCombo lift(const GraphCombo& g, int target_k) {
  if (target_k < g.k) throw std::invalid_argument("cannot lift to a smaller basis");
  if (target_k > kMaxFlagOrder + 2) throw UnsupportedSize("lift target too large");
  if (target_k == g.k) return g;
  GraphCombo out{target_k, {}};
  const long total = static_cast<long>(binomial(target_k, g.k));
  for (const auto& [H, row] : subset_table(g.k, target_k)) {
    CoeffPoly sum;
    for (const auto& [F, cnt] : row)
      if (auto it = g.terms.find(F); it != g.terms.end()) sum += it->second * ratio(cnt, total);
    if (!sum.is_zero()) out.terms.emplace(H, std::move(sum));
  }
  return out;
}

GraphCombo expand_pattern(const PatternGraph& h, int k) {
  if (h.h() != k) throw UnsupportedSize("pattern has " + std::to_string(h.h()) + " vertices, basis " + std::to_string(k));
  if (k > kMaxFlagOrder) throw UnsupportedSize("basis size above 5");
  GraphCombo out{k, {}};
  for (const auto& F : detail::classes_of_order(k)) {
    const Count c = count_injections(h, F);
    if (c != 0) out.add(canonical_form(F), CoeffPoly(static_cast<long>(c)));
  }
  return out;
}

FlagCombo swap_colors(const FlagCombo& f) {
  FlagCombo out{f.k, f.roots, {}};
  for (const auto& [code, v] : f.terms) {
    const RootedFlag h = flag_from_code(code);
    out.add(RootedFlag{complement(h.graph), h.roots}.code(), v);
  }
  return out;
}

GraphCombo swap_colors(const GraphCombo& g) {
  GraphCombo out{g.k, {}};
  for (const auto& [code, v] : g.terms) out.add(canonical_form(complement(code.host())), v);
  return out;
}

HostGraph host_from_digits(std::string_view digits) {
  int k = 1;
  while (pair_count(k) < digits.size()) ++k;
  if (pair_count(k) != digits.size()) throw ParseError("digit string length is not a pair count", 0);
  HostGraph g(k);
  std::size_t pos = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++pos) {
      if (digits[pos] != '1' && digits[pos] != '2') throw ParseError("expected digit 1 or 2", pos);
      g.set_red(i, j, digits[pos] == '2');
    }
  return g;
}

std::string digits_of(const HostGraph& g) {
  std::string s = pair_string(g);
  for (auto& ch : s) ch = ch == 'R' ? '2' : '1';
  return s;
}

double evaluate(const GraphCombo& combo, const HostGraph& g) {
  if (g.n() < combo.k) throw std::invalid_argument("host smaller than basis");
  const InducedProfile prof = induced_profile(g, combo.k);
  const double total = to_double(binomial(g.n(), combo.k));
  double sum = 0;
  for (const auto& [code, v] : combo.terms) {
    if (!v.is_constant()) throw std::invalid_argument("evaluate needs constant coefficients");
    auto it = prof.counts.find(code);
    if (it != prof.counts.end()) sum += v.constant().to_double() * to_double(it->second) / total;
  }
  return sum;
}

}  // namespace semind
