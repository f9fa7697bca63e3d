#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semind/coeff_poly.hpp"
#include "semind/colored_graph.hpp"

namespace semind {

/// Flag operands with different types.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxFlagOrder = 5;

/// Colored graph with its first r vertices labelled as roots 0..r-1.
struct RootedFlag {
  HostGraph graph;
  int roots = 0;

  /// Moves `roots` (in the given order) to the front.
  static RootedFlag make(const HostGraph& g, const std::vector<int>& roots);
  /// Canonical form under relabelling of the non-root vertices:
  /// "<k>/<r>:<pairstring>".
  std::string code() const;
  /// Pair string of the graph induced on the roots.
  std::string type() const;
};

RootedFlag flag_from_code(std::string_view code);

/// Linear combination of rooted flags sharing k and r, keyed by RootedFlag::code().
struct FlagCombo {
  int k = 0;
  int roots = 0;
  std::map<std::string, CoeffPoly> terms;

  static FlagCombo single(const RootedFlag& f, const CoeffPoly& coeff = CoeffPoly(1L));
  void add(const std::string& code, const CoeffPoly& coeff);
  FlagCombo& operator+=(const FlagCombo& o);
  FlagCombo scaled(const CoeffPoly& c) const;
};

/// Linear combination of unrooted k-vertex classes.
struct GraphCombo {
  int k = 0;
  std::map<CanonicalCode, CoeffPoly> terms;

  void add(const CanonicalCode& code, const CoeffPoly& coeff);
  CoeffPoly at(const CanonicalCode& code) const;
  GraphCombo& operator+=(const GraphCombo& o);
  GraphCombo& operator-=(const GraphCombo& o);
  GraphCombo scaled(const CoeffPoly& c) const;
};

/// Sum of all k-vertex classes with coefficient 1 (the constant 1).
GraphCombo unit_combo(int k);

/// Product of two combos of the same type, expanded over flags on
/// k1 + k2 - r vertices. Throws TypeError or UnsupportedSize.
FlagCombo flag_product(const FlagCombo& a, const FlagCombo& b);

/// Average over random root placements.
GraphCombo unlabel(const FlagCombo& f);

/// Re-expresses a k-vertex combination on the K-vertex basis (K >= k).
GraphCombo lift(const GraphCombo& g, int target_k);

/// Coefficient of F = number of colour-respecting bijections V(h) -> V(F).
GraphCombo expand_pattern(const PatternGraph& h, int k);

FlagCombo swap_colors(const FlagCombo& f);
GraphCombo swap_colors(const GraphCombo& g);

/// Host from a digit string over pairs in lexicographic order, 2 = red,
/// 1 = blue (the convention of the shipped data tables).
HostGraph host_from_digits(std::string_view digits);
std::string digits_of(const HostGraph& g);

/// Value of the combination on a host: sum_F coeff(F) * P(random k-set
/// induces F). Coefficients must be constants.
double evaluate(const GraphCombo& combo, const HostGraph& g);

}  // namespace semind
