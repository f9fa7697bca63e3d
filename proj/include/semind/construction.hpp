#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semind/colored_graph.hpp"

namespace semind {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CliquePlusIsolated {
  double fraction;  // clique size / n
};

struct DisjointCliques {
  std::vector<double> fractions;
};

/// Regular host of degree round(fraction * (n-1)).
struct Circulant {
  double fraction;
};

/// Parts X, Y, Z of sizes x n, y n, (1-x-y) n; X-Y complete, Y a clique,
/// nothing else red.
struct ThreePartXYZ {
  double x;
  double y;
};

struct ComplementOf;

using ConstructionSpec =
    std::variant<CliquePlusIsolated, DisjointCliques, Circulant, ThreePartXYZ, ComplementOf>;

struct ComplementOf {
  std::shared_ptr<const ConstructionSpec> inner;
};

/// Forms: clique_iso:<a>  cliques:<f1>,<f2>,...  circulant:<f>  xyz:<x>,<y>
/// complement:<spec>. Fractions accept decimals or p/q.
ConstructionSpec parse_construction(std::string_view text);
std::string format_construction(const ConstructionSpec& spec);

HostGraph make_construction(const ConstructionSpec& spec, int n);

/// Largest-remainder rounding of fractions * n; parts sum to round(sum * n).
std::vector<int> apportion(const std::vector<double>& fractions, int n);

}  // namespace semind
