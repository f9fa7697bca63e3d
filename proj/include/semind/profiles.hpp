#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace semind {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CurveTag {
  Ap4,        // beta^2 (1-beta)
  Ds,         // beta^{2s} (1-beta), p = s
  Ac4,        // min(beta^2 (1-beta), beta (1-beta)^2)
  Peenn,      // max of the two branches below
  PeennK,     // beta^{3/2} - beta^2 (clique plus isolated)
  PeennKc,    // (1-beta)^{3/2} - (1-beta)^2 (complement)
  S21,        // beta/4 on [1/4,1/2], beta^2 (1-beta) on [1/2,1]
  RwStar,     // max(beta^{(k+1)/2}, eta + (1-eta) eta^k), p = k
  Ell,        // regular plus isolated, p,q = a,b
  Ellc,
  R,
  C,
  Cc,
  ProgS,
  ProgCs,
  Ac4Cliques,
  ConjS21,    // conjectured upper bound for S_{2,1}
  ConjS21Lower,
};

struct CurveId {
  CurveTag tag = CurveTag::Ap4;
  int p = 0;
  int q = 0;

  /// Names: ap4 ds:<s> ac4 peenn peenn_k peenn_kc s21 rw:<k> ell:<a>,<b>
  /// ellc:<a>,<b> r:<a>,<b> c:<a>,<b> cc:<a>,<b> prog_s:<a>,<b>
  /// prog_cs:<a>,<b> ac4_cliques conj_s21 conj_s21_lower.
  static CurveId parse(std::string_view name);
  std::string name() const;
};

/// Closed interval of beta on which the curve is defined.
std::pair<double, double> validity_interval(const CurveId& id);

struct CurveValue {
  double value = 0;
  bool in_range = true;
};

enum class RangePolicy { Throw, Flag };

/// Outside the validity interval: Throw raises DomainError, Flag evaluates
/// the formula anyway and clears in_range.
CurveValue eval_curve(const CurveId& id, double beta, RangePolicy policy = RangePolicy::Throw);

template <class Scalar>
struct CliquePartition {
  int k;
  Scalar u, w, value;
};

/// k = ceil(1/beta) disjoint cliques, k-1 of relative size u and one of size
/// w <= u, (k-1)u + w = 1 and (k-1)u^2 + w^2 = beta; value is the limiting
/// labelled AC4 density beta^2 - (k-1)u^4 - w^4. Requires 0 < beta <= 1/2.
/// For an exact Scalar the square root must be rational, else InfeasibleError.
template <class Scalar>
CliquePartition<Scalar> ac4_clique_value(const Scalar& beta);

struct OptStructure {
  double alpha = 0;
  int m = 0;
  double remainder = 0;
  double objective = 0;
};

/// Maximizes sum_i f(x_i) over x in [0,1]^n with sum x_i = D among
/// structures with m coordinates at alpha >= gamma, one remainder in
/// [0, gamma), and zeros elsewhere. f must be convex on [0,gamma] and concave
/// on [gamma,1].
OptStructure opt_structure_max(const std::function<double(double)>& f, double gamma, double D, int n);
/// f(x) = (1-x) x^{2s}, gamma = (2s-1)/(2s+1).
OptStructure opt_structure_max_ds(int s, double D, int n);

struct ProgSolution {
  double x = 0, y = 0, value = 0;
};

/// max x y^a (1-y)^b + y (x+y)^a (1-x-y)^b  s.t.  2xy + y^2 = beta,
/// x + y <= 1, x, y >= 0.
ProgSolution solve_prog_s(double beta, int a, int b);
/// Same program for the complement: beta -> 1-beta and a <-> b.
ProgSolution solve_prog_cs(double beta, int a, int b);

/// Root of c1 - c2 in [lo, hi]; BracketError without a sign change.
double find_crossover(const CurveId& c1, const CurveId& c2, double lo, double hi);

/// Threshold y in (0, 1/4) below which the prog_s(2,1) maximizer has x > 0.
double s21_threshold();
/// Crossover x of cc(2,1) and c(2,1) in (1/2, 1).
double s21_lower_crossover();

}  // namespace semind
