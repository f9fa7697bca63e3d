#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "semind/profiles.hpp"

namespace semind {
namespace {

struct Peak {
  double arg, value;
};

// Maximum of g on [lo, hi]: scan, then Brent refinement around every local
// maximum of the scan. Endpoints are always candidates.
Peak maximize(const std::function<double(double)>& g, double lo, double hi, int samples) {
  if (hi <= lo) return {lo, g(lo)};
  std::vector<double> xs(samples + 1), vs(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    xs[i] = i == samples ? hi : lo + (hi - lo) * i / samples;
    vs[i] = g(xs[i]);
  }
  Peak best{xs[0], vs[0]};
  if (vs[samples] > best.value) best = {xs[samples], vs[samples]};
  for (int i = 1; i < samples; ++i) {
    if (!(vs[i] > vs[i - 1] && vs[i] >= vs[i + 1])) continue;
    auto neg = [&](double x) { return -g(x); };
    auto [x, v] = boost::math::tools::brent_find_minima(neg, xs[i - 1], xs[i + 1], 52);
    if (-v > best.value) best = {x, -v};
    if (vs[i] > best.value) best = {xs[i], vs[i]};
  }
  return best;
}

double ipow(double x, int e) { return e == 0 ? 1.0 : std::pow(x, e); }

}  // namespace

OptStructure opt_structure_max(const std::function<double(double)>& f, double gamma, double D, int n) {
  if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("gamma must lie in (0,1)");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(D >= 0 && D <= n)) throw std::invalid_argument("D must lie in [0,n]");
  const double f0 = f(0.0);

  OptStructure best;
  best.objective = -INFINITY;
  auto consider = [&](double alpha, int m, double r) {
    if (r < 0) r = 0;
    const int used = m + (r > 0 ? 1 : 0);
    if (used > n) return;
    const double obj = m * f(alpha) + f(r) + (n - m - 1) * f0;
    if (obj > best.objective) best = {alpha, m, r, obj};
  };

  // m = 0: all mass in the remainder coordinate.
  if (D < gamma) consider(gamma, 0, D);

  const int m_lo = std::max(1, static_cast<int>(std::ceil(D - 1e-12)));
  const int m_hi = std::min(n, static_cast<int>(std::floor(D / gamma + 1e-12)));
  for (int m = m_lo; m <= m_hi; ++m) {
    // alpha in (D/(m+1), D/m] keeps floor(D/alpha) = m; the remainder
    // D - m alpha stays below gamma for alpha > (D - gamma)/m.
    double lo = std::max({gamma, D / n, D / (m + 1), (D - gamma) / m});
    double hi = std::min(1.0, D / m);
    if (lo > hi) continue;
    auto g = [&](double a) { return m * f(a) + f(std::max(0.0, D - m * a)); };
    auto peak = maximize(g, lo, hi, 64);
    const double r = D - m * peak.arg;
    if (r >= gamma) continue;
    consider(peak.arg, m, r);
  }
  if (best.objective == -INFINITY) throw InfeasibleError("no feasible X_alpha structure");
  return best;
}

OptStructure opt_structure_max_ds(int s, double D, int n) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  auto f = [s](double x) { return (1 - x) * std::pow(x, 2 * s); };
  return opt_structure_max(f, (2.0 * s - 1) / (2.0 * s + 1), D, n);
}

ProgSolution solve_prog_s(double beta, int a, int b) {
  if (!(beta >= 0 && beta <= 1)) throw DomainError("beta must lie in [0,1]");
  if (a < 0 || b < 0) throw std::invalid_argument("a, b must be >= 0");
  if (beta == 0) return {0, 0, 0};
  const double lo = 1 - std::sqrt(1 - beta);
  const double hi = std::sqrt(beta);
  auto xof = [beta](double y) { return std::max(0.0, (beta - y * y) / (2 * y)); };
  auto g = [&](double y) {
    const double x = xof(y);
    const double z = std::max(0.0, 1 - x - y);
    return x * ipow(y, a) * ipow(1 - y, b) + y * ipow(x + y, a) * ipow(z, b);
  };
  const auto peak = maximize(g, lo, hi, 20000);
  return {xof(peak.arg), peak.arg, peak.value};
}

ProgSolution solve_prog_cs(double beta, int a, int b) {
  if (!(beta >= 0 && beta <= 1)) throw DomainError("beta must lie in [0,1]");
  return solve_prog_s(1 - beta, b, a);
}

double find_crossover(const CurveId& c1, const CurveId& c2, double lo, double hi) {
  if (!(lo < hi)) throw BracketError("empty bracket");
  auto f = [&](double x) { return eval_curve(c1, x).value - eval_curve(c2, x).value; };
  // Curves often touch at a bracket end, so look for an interior sign change first.
  constexpr int kGrid = 256;
  double prev_x = lo, prev_f = f(lo), zero_at = -1;
  for (int i = 1; i <= kGrid; ++i) {
    const double x = i == kGrid ? hi : lo + (hi - lo) * i / kGrid;
    const double fx = f(x);
    if (fx == 0) {
      if (zero_at < 0) zero_at = x;
      continue;
    }
    if (prev_f != 0 && (prev_f < 0) != (fx < 0)) {
      if (zero_at >= 0) return zero_at;
      std::uintmax_t iters = 200;
      auto [a, b] = boost::math::tools::toms748_solve(f, prev_x, x, prev_f, fx,
                                                      boost::math::tools::eps_tolerance<double>(52), iters);
      const double root = std::abs(f(a)) <= std::abs(f(b)) ? a : b;
      if (std::abs(f(root)) > 1e-10) throw BracketError("root refinement did not converge");
      return root;
    }
    prev_x = x;
    prev_f = fx;
    zero_at = -1;
  }
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0 && fhi == 0) throw BracketError(c1.name() + " - " + c2.name() + " vanishes at both ends");
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  throw BracketError(c1.name() + " - " + c2.name() + " has no sign change on the bracket");
}

double s21_threshold() {
  static const double y = [] {
    auto interior = [](double beta) { return solve_prog_s(beta, 2, 1).x > 1e-9; };
    double lo = 1e-3, hi = 0.25;
    if (!interior(lo) || interior(hi)) throw std::logic_error("prog_s(2,1) threshold not bracketed");
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      (interior(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return y;
}

double s21_lower_crossover() {
  static const double x = find_crossover(CurveId{CurveTag::Cc, 2, 1}, CurveId{CurveTag::C, 2, 1}, 0.5, 0.99);
  return x;
}

}  // namespace semind
