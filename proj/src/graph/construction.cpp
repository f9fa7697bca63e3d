#include "semind/construction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace semind {
namespace {

double parse_fraction(std::string_view s) {
  const std::string t(s);
  try {
    std::size_t used = 0;
    if (auto slash = t.find('/'); slash != std::string::npos) {
      const double p = std::stod(t.substr(0, slash), &used);
      if (used != slash) throw SpecError("bad fraction '" + t + "'");
      const double q = std::stod(t.substr(slash + 1), &used);
      if (used != t.size() - slash - 1 || q == 0) throw SpecError("bad fraction '" + t + "'");
      return p / q;
    }
    const double v = std::stod(t, &used);
    if (used != t.size()) throw SpecError("bad number '" + t + "'");
    return v;
  } catch (const std::logic_error&) {
    throw SpecError("bad number '" + t + "'");
  }
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_fraction(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void check_unit(double f, const char* what) {
  if (!(f >= 0.0 && f <= 1.0)) throw SpecError(std::string(what) + " must lie in [0,1]");
}

void fill_clique(HostGraph& g, int begin, int end) {
  for (int i = begin; i < end; ++i)
    for (int j = i + 1; j < end; ++j) g.set_red(i, j, true);
}

struct Builder {
  int n;

  HostGraph operator()(const CliquePlusIsolated& c) const {
    check_unit(c.fraction, "clique fraction");
    HostGraph g(n);
    fill_clique(g, 0, apportion({c.fraction}, n)[0]);
    return g;
  }

  HostGraph operator()(const DisjointCliques& c) const {
    if (c.fractions.empty()) throw SpecError("disjoint_cliques needs at least one part");
    for (double f : c.fractions) check_unit(f, "clique fraction");
    HostGraph g(n);
    int start = 0;
    for (int size : apportion(c.fractions, n)) {
      fill_clique(g, start, start + size);
      start += size;
    }
    return g;
  }

  HostGraph operator()(const Circulant& c) const {
    check_unit(c.fraction, "circulant fraction");
    int d = static_cast<int>(std::lround(c.fraction * (n - 1)));
    if ((static_cast<long>(n) * d) % 2 != 0) --d;
    if (d >= n) throw SpecError("circulant degree must be below n");
    HostGraph g(n);
    for (int v = 0; v < n; ++v) {
      for (int k = 1; k <= d / 2; ++k) g.set_red(v, (v + k) % n, true);
      if (d % 2 == 1) g.set_red(v, (v + n / 2) % n, true);
    }
    return g;
  }

  HostGraph operator()(const ThreePartXYZ& c) const {
    check_unit(c.x, "x");
    check_unit(c.y, "y");
    const auto sizes = apportion({c.x, c.y}, n);
    const int xs = sizes[0], ys = sizes[1];
    HostGraph g(n);
    for (int i = 0; i < xs; ++i)
      for (int j = xs; j < xs + ys; ++j) g.set_red(i, j, true);
    fill_clique(g, xs, xs + ys);
    return g;
  }

  HostGraph operator()(const ComplementOf& c) const {
    if (!c.inner) throw SpecError("empty complement spec");
    return complement(std::visit(*this, *c.inner));
  }
};

// Shortest text that parses back to v.
std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<int> apportion(const std::vector<double>& fractions, int n) {
  const double total = std::accumulate(fractions.begin(), fractions.end(), 0.0);
  if (total > 1.0 + 1e-12) throw SpecError("part fractions sum to more than 1");
  std::vector<double> parts = fractions;
  parts.push_back(std::max(0.0, 1.0 - total));

  std::vector<int> sizes(parts.size());
  std::vector<std::pair<double, std::size_t>> rem;
  int assigned = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const double q = parts[i] * n;
    sizes[i] = static_cast<int>(std::floor(q + 1e-9));
    assigned += sizes[i];
    rem.emplace_back(q - sizes[i], i);
  }
  std::stable_sort(rem.begin(), rem.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n && k < rem.size(); ++k, ++assigned) ++sizes[rem[k].second];
  sizes.pop_back();
  return sizes;
}

ConstructionSpec parse_construction(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw SpecError("construction spec needs '<kind>:<params>'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "clique_iso") return CliquePlusIsolated{parse_fraction(rest)};
  if (kind == "cliques") return DisjointCliques{parse_list(rest)};
  if (kind == "circulant") return Circulant{parse_fraction(rest)};
  if (kind == "xyz") {
    auto v = parse_list(rest);
    if (v.size() != 2) throw SpecError("xyz needs two fractions x,y");
    if (v[0] + v[1] > 1.0 + 1e-12) throw SpecError("xyz needs x + y <= 1");
    return ThreePartXYZ{v[0], v[1]};
  }
  if (kind == "complement")
    return ComplementOf{std::make_shared<const ConstructionSpec>(parse_construction(rest))};
  throw SpecError("unknown construction '" + std::string(kind) + "'");
}

std::string format_construction(const ConstructionSpec& spec) {
  struct Fmt {
    std::string operator()(const CliquePlusIsolated& c) const { return "clique_iso:" + fmt(c.fraction); }
    std::string operator()(const DisjointCliques& c) const {
      std::string s = "cliques:";
      for (std::size_t i = 0; i < c.fractions.size(); ++i) s += (i ? "," : "") + fmt(c.fractions[i]);
      return s;
    }
    std::string operator()(const Circulant& c) const { return "circulant:" + fmt(c.fraction); }
    std::string operator()(const ThreePartXYZ& c) const { return "xyz:" + fmt(c.x) + "," + fmt(c.y); }
    std::string operator()(const ComplementOf& c) const {
      return "complement:" + format_construction(*c.inner);
    }
  };
  return std::visit(Fmt{}, spec);
}

HostGraph make_construction(const ConstructionSpec& spec, int n) {
  if (n < 2) throw SpecError("construction needs n >= 2");
  return std::visit(Builder{n}, spec);
}

}  // namespace semind
