#include "semind/sturm.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace semind {

namespace {

const QSqrt2 kHalf(mpq_class(1, 2));

QSqrt2 midpoint(const QSqrt2& a, const QSqrt2& b) { return (a + b) * kHalf; }

double width_of(const QSqrt2& a, const QSqrt2& b) { return (b - a).to_double(); }

// Rational with the smallest denominator in [a, b], via continued fractions.
std::optional<mpq_class> simplest_rational(long double a, long double b, int depth = 0) {
  if (depth > 40 || !(a <= b)) return std::nullopt;
  const long double fl = std::floor(a);
  if (fl == a) return mpq_class(static_cast<long>(fl));
  if (fl + 1 <= b) return mpq_class(static_cast<long>(fl) + 1);
  const auto rest = simplest_rational(1 / (b - fl), 1 / (a - fl), depth + 1);
  if (!rest || *rest == 0) return std::nullopt;
  mpq_class r = mpq_class(static_cast<long>(fl)) + 1 / *rest;
  r.canonicalize();
  return r;
}

// Looks for an element s + t*sqrt2 with small denominators inside (lo, hi)
// that is an exact root. Candidates are checked exactly.
std::optional<QSqrt2> exact_root_near(const Polynomial<QSqrt2>& p, const QSqrt2& lo, const QSqrt2& hi) {
  const long double sqrt2 = std::sqrt(2.0L);
  const long double a = lo.to_double(), b = hi.to_double(), slack = 1e-15L;
  for (int den = 1; den <= 12; ++den)
    for (int num = -4 * den; num <= 4 * den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const mpq_class t(num, den);
      const long double shift = sqrt2 * num / den;
      const auto s = simplest_rational(a - shift - slack, b - shift + slack);
      if (!s || abs(s->get_den()) > 1000000) continue;
      const QSqrt2 r(*s, t);
      if (lo < r && r < hi && p(r).sign() == 0) return r;
    }
  return std::nullopt;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial<QSqrt2>& s) {
  if (s.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  seq_.push_back(s);
  seq_.push_back(s.derivative());
  while (!seq_.back().is_zero()) {
    auto r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
    seq_.push_back(-r);
  }
  seq_.pop_back();
}

int SturmSequence::variations(const QSqrt2& x) const {
  int changes = 0, last = 0;
  for (const auto& f : seq_) {
    const int s = f(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<RootLocation> isolate_roots(const Polynomial<QSqrt2>& p, const QSqrt2& lo, const QSqrt2& hi,
                                        double width) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  std::vector<RootLocation> out;
  if (hi < lo || p.degree() == 0) return out;
  const Polynomial<QSqrt2> s = p.squarefree();
  const SturmSequence sturm(s);
  auto is_root = [&](const QSqrt2& x) { return s(x).sign() == 0; };

  if (is_root(lo)) out.push_back({lo, lo, true});
  if (lo == hi) return out;

  // Bisection on (a, b] holding `count` roots.
  std::vector<RootLocation> raw;
  auto split = [&](auto&& self, const QSqrt2& a, const QSqrt2& b, int count) -> void {
    if (count == 0) return;
    if (count == 1) {
      if (is_root(b))
        raw.push_back({b, b, true});
      else
        raw.push_back({a, b, false});
      return;
    }
    const QSqrt2 m = midpoint(a, b);
    const int left = sturm.roots_in(a, m);
    self(self, a, m, left);
    self(self, m, b, count - left);
  };
  split(split, lo, hi, sturm.roots_in(lo, hi));

  for (auto r : raw) {
    if (r.exact) {
      out.push_back(r);
      continue;
    }
    // Push the left end off a root (it may coincide with an exact root) and
    // shrink to the requested width.
    while (!r.exact && (is_root(r.lo) || width_of(r.lo, r.hi) > width)) {
      const QSqrt2 m = midpoint(r.lo, r.hi);
      if (is_root(m)) {
        r = {m, m, true};
      } else if (sturm.roots_in(r.lo, m) == 1) {
        r.hi = m;
      } else {
        r.lo = m;
      }
    }
    if (!r.exact)
      if (auto e = exact_root_near(s, r.lo, r.hi)) r = {*e, *e, true};
    out.push_back(r);
  }
  return out;
}

SignReport certify_nonpositive(const Polynomial<QSqrt2>& p, const Endpoint& lo, const Endpoint& hi) {
  SignReport rep;
  if (p.is_zero()) {
    rep.verdict = SignVerdict::IdenticallyZero;
    return rep;
  }
  if (hi.value < lo.value) throw std::invalid_argument("empty interval");
  const auto roots = isolate_roots(p, lo.value, hi.value);

  // Every root-free piece of [lo, hi] contains one of these points.
  std::vector<QSqrt2> probes;
  if (p(lo.value).sign() != 0) probes.push_back(lo.value);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& r = roots[i];
    if (!r.exact) {
      probes.push_back(r.lo);
      probes.push_back(r.hi);
    } else if (i + 1 < roots.size() && roots[i + 1].exact) {
      probes.push_back(midpoint(r.lo, roots[i + 1].lo));
    }
  }
  if (p(hi.value).sign() != 0) probes.push_back(hi.value);

  for (const auto& x : probes) {
    if (p(x).sign() <= 0) continue;
    QSqrt2 left = lo.value, right = hi.value;
    for (const auto& r : roots) {
      if (r.exact ? r.lo < x : r.hi <= x) left = r.hi;
      if ((r.exact ? x < r.lo : x <= r.lo) && r.lo < right) right = r.lo;
    }
    rep.verdict = SignVerdict::Violation;
    rep.violation = std::make_pair(left, right);
    rep.witness = x;
    break;
  }

  for (const auto& r : roots) {
    if (r.exact && r.lo == lo.value && !lo.closed) continue;
    if (r.exact && r.lo == hi.value && !hi.closed) continue;
    rep.zeros.push_back(r);
  }
  return rep;
}

}  // namespace semind
