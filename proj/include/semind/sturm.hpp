#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semind/polynomial.hpp"
#include "semind/qsqrt2.hpp"

namespace semind {

struct Endpoint {
  QSqrt2 value;
  bool closed = true;
};

/// A real root of the polynomial. Exact roots have lo == hi; otherwise the
/// root is the unique one strictly inside (lo, hi).
struct RootLocation {
  QSqrt2 lo, hi;
  bool exact = false;
  double approx() const { return exact ? lo.to_double() : 0.5 * (lo.to_double() + hi.to_double()); }
};

enum class SignVerdict { IdenticallyZero, Nonpositive, Violation };

struct SignReport {
  SignVerdict verdict = SignVerdict::Nonpositive;
  /// Zeros inside the (possibly half-open) interval, increasing.
  std::vector<RootLocation> zeros;
  /// Root-free sub-interval on which the polynomial is positive, with a
  /// witness point where it is positive.
  std::optional<std::pair<QSqrt2, QSqrt2>> violation;
  std::optional<QSqrt2> witness;
};

/// Number of sign changes of the Sturm sequence at x.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial<QSqrt2>& squarefree);
  int variations(const QSqrt2& x) const;
  /// Distinct roots in (a, b].
  int roots_in(const QSqrt2& a, const QSqrt2& b) const { return variations(a) - variations(b); }

 private:
  std::vector<Polynomial<QSqrt2>> seq_;
};

/// Real roots of p in [lo, hi], isolated exactly. Intervals are refined until
/// narrower than `width`.
std::vector<RootLocation> isolate_roots(const Polynomial<QSqrt2>& p, const QSqrt2& lo, const QSqrt2& hi,
                                        double width = 1e-12);

/// Decides p <= 0 on the interval with exact arithmetic.
SignReport certify_nonpositive(const Polynomial<QSqrt2>& p, const Endpoint& lo, const Endpoint& hi);

}  // namespace semind
