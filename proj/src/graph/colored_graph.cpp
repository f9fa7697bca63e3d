#include "semind/colored_graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace semind {

HostGraph::HostGraph(int n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void HostGraph::set_red(int i, int j, bool is_red) {
  if (i == j) throw std::invalid_argument("self-pairs are not stored");
  const std::uint64_t bi = std::uint64_t{1} << (i & 63);
  const std::uint64_t bj = std::uint64_t{1} << (j & 63);
  auto& wij = rows_[i * words_ + (j >> 6)];
  auto& wji = rows_[j * words_ + (i >> 6)];
  if (is_red) {
    wij |= bj;
    wji |= bi;
  } else {
    wij &= ~bj;
    wji &= ~bi;
  }
}

int HostGraph::degree(int v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> HostGraph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::int64_t HostGraph::red_pairs() const {
  std::int64_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

double HostGraph::red_density() const {
  const auto pairs = pair_count(n_);
  return pairs == 0 ? 0.0 : static_cast<double>(red_pairs()) / static_cast<double>(pairs);
}

PatternGraph::PatternGraph(int h) : h_(h), pairs_(pair_count(h), PairColor::Free) {
  if (h < 0) throw std::invalid_argument("negative vertex count");
}

PatternGraph::PatternGraph(int h, const std::vector<std::pair<int, int>>& red_pairs,
                           const std::vector<std::pair<int, int>>& blue_pairs)
    : PatternGraph(h) {
  for (auto [i, j] : red_pairs) set(i, j, PairColor::Red);
  for (auto [i, j] : blue_pairs) {
    if (color(i, j) == PairColor::Red)
      throw std::invalid_argument("pair constrained both red and blue");
    set(i, j, PairColor::Blue);
  }
}

void PatternGraph::set(int i, int j, PairColor c) {
  if (i == j || i < 0 || j < 0 || i >= h_ || j >= h_)
    throw std::out_of_range("pattern pair out of range");
  pairs_[pair_index(h_, i, j)] = c;
}

std::vector<std::pair<int, int>> PatternGraph::red_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < h_; ++i)
    for (int j = i + 1; j < h_; ++j)
      if (color(i, j) == PairColor::Red) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> PatternGraph::blue_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < h_; ++i)
    for (int j = i + 1; j < h_; ++j)
      if (color(i, j) == PairColor::Blue) out.emplace_back(i, j);
  return out;
}

PatternGraph PatternGraph::induced(const HostGraph& g) {
  PatternGraph p(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      p.set(i, j, g.red(i, j) ? PairColor::Red : PairColor::Blue);
  return p;
}

int CanonicalCode::order() const {
  int n = 0;
  auto colon = text_.find(':');
  std::from_chars(text_.data(), text_.data() + colon, n);
  return n;
}

HostGraph CanonicalCode::host() const {
  std::string t = text_;
  auto colon = t.find(':');
  if (colon == std::string::npos) throw ParseError("canonical code without ':'", 0);
  t[colon] = ' ';
  return parse_host(t);
}

namespace {

struct Header {
  int n;
  std::size_t body;  // offset of the pair string
};

Header parse_header(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  const std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) throw ParseError("expected vertex count", start);
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, n);
  if (ec != std::errc{} || n > 100000) throw ParseError("vertex count out of range", start);
  if (n < 1) throw ParseError("vertex count must be positive", start);
  if (pos < text.size() && text[pos] != ' ') throw ParseError("expected space after vertex count", pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  return {n, pos};
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

}  // namespace

HostGraph parse_host(std::string_view text) {
  text = trim_right(text);
  const auto [n, body] = parse_header(text);
  const std::size_t expected = pair_count(n);
  const std::size_t got = text.size() - body;
  if (got != expected)
    throw ParseError("pair string has length " + std::to_string(got) + ", expected " +
                         std::to_string(expected),
                     body + std::min(got, expected));
  HostGraph g(n);
  std::size_t k = body;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      switch (text[k]) {
        case 'R': g.set_red(i, j, true); break;
        case 'B': break;
        default: throw ParseError(std::string("illegal pair colour '") + text[k] + "'", k);
      }
    }
  return g;
}

std::string format_host(const HostGraph& g) {
  std::string out = std::to_string(g.n());
  out.push_back(' ');
  out.reserve(out.size() + pair_count(g.n()));
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) out.push_back(g.red(i, j) ? 'R' : 'B');
  return out;
}

PatternGraph parse_pattern(std::string_view text) {
  text = trim_right(text);
  const auto [h, body] = parse_header(text);
  const std::size_t expected = pair_count(h);
  const std::size_t got = text.size() - body;
  if (got != expected)
    throw ParseError("pair string has length " + std::to_string(got) + ", expected " +
                         std::to_string(expected),
                     body + std::min(got, expected));
  PatternGraph p(h);
  std::size_t k = body;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j, ++k) {
      switch (text[k]) {
        case 'R': p.set(i, j, PairColor::Red); break;
        case 'B': p.set(i, j, PairColor::Blue); break;
        case 'F': break;
        default: throw ParseError(std::string("illegal pair colour '") + text[k] + "'", k);
      }
    }
  return p;
}

std::string format_pattern(const PatternGraph& h) {
  std::string out = std::to_string(h.h());
  out.push_back(' ');
  for (int i = 0; i < h.h(); ++i)
    for (int j = i + 1; j < h.h(); ++j) {
      switch (h.color(i, j)) {
        case PairColor::Red: out.push_back('R'); break;
        case PairColor::Blue: out.push_back('B'); break;
        case PairColor::Free: out.push_back('F'); break;
      }
    }
  return out;
}

HostGraph permute(const HostGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
  HostGraph out(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.red(i, j)) out.set_red(perm[i], perm[j], true);
  return out;
}

HostGraph induced_subgraph(const HostGraph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  HostGraph out(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.red(vertices[a], vertices[b])) out.set_red(a, b, true);
  return out;
}

HostGraph complement(const HostGraph& g) {
  HostGraph out(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.red(i, j)) out.set_red(i, j, true);
  return out;
}

PatternGraph swap_colors(const PatternGraph& h) {
  PatternGraph out(h.h());
  for (int i = 0; i < h.h(); ++i)
    for (int j = i + 1; j < h.h(); ++j) {
      auto c = h.color(i, j);
      out.set(i, j, c == PairColor::Red ? PairColor::Blue
                    : c == PairColor::Blue ? PairColor::Red
                                           : PairColor::Free);
    }
  return out;
}

namespace {

// Backtracking embedding search; candidates for small-vertex k are the big
// vertices whose colours towards the images of 0..k-1 all match.
bool embed_from(const HostGraph& small, const HostGraph& big, std::vector<int>& image,
                std::vector<char>& used, int k) {
  if (k == small.n()) return true;
  for (int v = 0; v < big.n(); ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (int p = 0; p < k && ok; ++p) ok = small.red(p, k) == big.red(image[p], v);
    if (!ok) continue;
    used[v] = 1;
    image[k] = v;
    if (embed_from(small, big, image, used, k + 1)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

bool is_induced_subgraph(const HostGraph& small, const HostGraph& big) {
  if (small.n() > big.n()) return false;
  std::vector<int> image(small.n());
  std::vector<char> used(big.n(), 0);
  return embed_from(small, big, image, used, 0);
}

std::string format_basis_file(int k, const std::vector<HostGraph>& hosts) {
  std::ostringstream os;
  os << "# semind-basis k=" << k << " count=" << hosts.size() << "\n";
  for (const auto& g : hosts) os << format_host(g) << "\n";
  return os.str();
}

std::vector<HostGraph> parse_basis_file(std::string_view text) {
  std::vector<HostGraph> out;
  std::size_t pos = 0;
  long declared = -1;
  int k = -1;
  bool first = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (first) {
      first = false;
      constexpr std::string_view prefix = "# semind-basis k=";
      if (line.substr(0, prefix.size()) != prefix) throw ParseError("missing basis header", pos);
      if (std::sscanf(std::string(line).c_str(), "# semind-basis k=%d count=%ld", &k, &declared) != 2)
        throw ParseError("malformed basis header", pos);
    } else if (!line.empty()) {
      try {
        out.push_back(parse_host(line));
      } catch (const ParseError& e) {
        throw ParseError("bad host line", pos + e.offset());
      }
      if (out.back().n() != k) throw ParseError("host order differs from header k", pos);
    }
    pos = eol + 1;
  }
  if (first) throw ParseError("empty basis file", 0);
  if (static_cast<long>(out.size()) != declared)
    throw ParseError("basis count does not match header", text.size());
  return out;
}

}  // namespace semind
