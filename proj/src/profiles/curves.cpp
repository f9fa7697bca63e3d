#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <type_traits>

#include "semind/profiles.hpp"

namespace semind {
namespace {

struct TagName {
  CurveTag tag;
  const char* name;
  int params;
};

constexpr TagName kTags[] = {
    {CurveTag::Ap4, "ap4", 0},          {CurveTag::Ds, "ds", 1},
    {CurveTag::Ac4, "ac4", 0},          {CurveTag::Peenn, "peenn", 0},
    {CurveTag::PeennK, "peenn_k", 0},   {CurveTag::PeennKc, "peenn_kc", 0},
    {CurveTag::S21, "s21", 0},          {CurveTag::RwStar, "rw", 1},
    {CurveTag::Ell, "ell", 2},          {CurveTag::Ellc, "ellc", 2},
    {CurveTag::R, "r", 2},              {CurveTag::C, "c", 2},
    {CurveTag::Cc, "cc", 2},            {CurveTag::ProgS, "prog_s", 2},
    {CurveTag::ProgCs, "prog_cs", 2},   {CurveTag::Ac4Cliques, "ac4_cliques", 0},
    {CurveTag::ConjS21, "conj_s21", 0}, {CurveTag::ConjS21Lower, "conj_s21_lower", 0},
};

const TagName& info(CurveTag t) {
  for (const auto& e : kTags)
    if (e.tag == t) return e;
  throw std::logic_error("unknown curve tag");
}

int parse_param(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad curve parameter '" + std::string(s) + "'");
  return v;
}

void check_params(const CurveId& id) {
  switch (id.tag) {
    case CurveTag::Ds:
    case CurveTag::RwStar:
      if (id.p < 1) throw std::invalid_argument("curve parameter must be >= 1");
      break;
    case CurveTag::Ell:
      if (id.p < 2 || id.q < 1) throw std::invalid_argument("ell needs a >= 2, b >= 1");
      break;
    case CurveTag::Ellc:
      if (id.p < 1 || id.q < 1) throw std::invalid_argument("ellc needs a, b >= 1");
      break;
    case CurveTag::R:
    case CurveTag::C:
    case CurveTag::Cc:
    case CurveTag::ProgS:
    case CurveTag::ProgCs:
      if (id.p < 0 || id.q < 0) throw std::invalid_argument("star curve needs a, b >= 0");
      break;
    default:
      break;
  }
}

double pw(double x, double e) { return std::pow(x, e); }

double ell_value(int a, int b, double beta) {
  return beta * pw(a - 1, a - 1) * pw(b, b) / pw(a - 1 + b, a - 1 + b);
}

double ellc_value(int a, int b, double beta) {
  return (1 - beta) * pw(a, a) * pw(b - 1, b - 1) / pw(a + b - 1, a + b - 1);
}

double c_value(int a, int b, double beta) {
  const double r = std::sqrt(beta);
  return r * pw(r, a) * pw(1 - r, b);
}

double cc_value(int a, int b, double beta) {
  const double r = std::sqrt(1 - beta);
  return r * pw(1 - r, a) * pw(r, b);
}

double raw_value(const CurveId& id, double beta) {
  const double al = 1 - beta;
  switch (id.tag) {
    case CurveTag::Ap4: return beta * beta * al;
    case CurveTag::Ds: return pw(beta, 2 * id.p) * al;
    case CurveTag::Ac4: return std::min(beta * beta * al, beta * al * al);
    case CurveTag::PeennK: return pw(beta, 1.5) - beta * beta;
    case CurveTag::PeennKc: return pw(al, 1.5) - al * al;
    case CurveTag::Peenn: return std::max(pw(beta, 1.5) - beta * beta, pw(al, 1.5) - al * al);
    case CurveTag::S21: return beta <= 0.5 ? beta / 4 : beta * beta * al;
    case CurveTag::RwStar: {
      const double eta = 1 - std::sqrt(al);
      return std::max(pw(beta, (id.p + 1) / 2.0), eta + (1 - eta) * pw(eta, id.p));
    }
    case CurveTag::Ell: return ell_value(id.p, id.q, beta);
    case CurveTag::Ellc: return ellc_value(id.p, id.q, beta);
    case CurveTag::R: return pw(beta, id.p) * pw(al, id.q);
    case CurveTag::C: return c_value(id.p, id.q, beta);
    case CurveTag::Cc: return cc_value(id.p, id.q, beta);
    case CurveTag::ProgS: return solve_prog_s(beta, id.p, id.q).value;
    case CurveTag::ProgCs: return solve_prog_cs(beta, id.p, id.q).value;
    case CurveTag::Ac4Cliques: return beta <= 0 ? 0.0 : ac4_clique_value(beta).value;
    case CurveTag::ConjS21: {
      if (beta >= 0.5) return beta * beta * al;
      if (beta >= 0.25) return beta / 4;
      if (beta >= s21_threshold()) return c_value(2, 1, beta);
      return solve_prog_s(beta, 2, 1).value;
    }
    case CurveTag::ConjS21Lower:
      return beta <= s21_lower_crossover() ? cc_value(2, 1, beta) : c_value(2, 1, beta);
  }
  throw std::logic_error("unhandled curve tag");
}

// Exact helpers for the clique-partition solver.
int ceil_inverse(double beta) { return static_cast<int>(std::ceil(1.0 / beta - 1e-12)); }

int ceil_inverse(const mpq_class& beta) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), beta.get_den_mpz_t(), beta.get_num_mpz_t());
  return static_cast<int>(q.get_si());
}

double root_of(double x) { return std::sqrt(std::max(0.0, x)); }

mpq_class root_of(const mpq_class& x) {
  if (sgn(x) < 0) throw InfeasibleError("negative discriminant");
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    throw InfeasibleError("clique sizes are irrational for this beta; use the double overload");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return mpq_class(n, d);
}

}  // namespace

CurveId CurveId::parse(std::string_view name) {
  auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  for (const auto& e : kTags) {
    if (head != e.name) continue;
    CurveId id{e.tag, 0, 0};
    if (e.params == 0) {
      if (colon != std::string_view::npos) throw std::invalid_argument("curve '" + std::string(head) + "' takes no parameters");
    } else {
      if (colon == std::string_view::npos) throw std::invalid_argument("curve '" + std::string(head) + "' needs parameters");
      auto rest = name.substr(colon + 1);
      auto comma = rest.find(',');
      if (e.params == 1) {
        id.p = parse_param(rest);
      } else {
        if (comma == std::string_view::npos) throw std::invalid_argument("curve '" + std::string(head) + "' needs <a>,<b>");
        id.p = parse_param(rest.substr(0, comma));
        id.q = parse_param(rest.substr(comma + 1));
      }
    }
    check_params(id);
    return id;
  }
  throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

std::string CurveId::name() const {
  const auto& e = info(tag);
  std::string s = e.name;
  if (e.params == 1) s += ":" + std::to_string(p);
  if (e.params == 2) s += ":" + std::to_string(p) + "," + std::to_string(q);
  return s;
}

std::pair<double, double> validity_interval(const CurveId& id) {
  check_params(id);
  switch (id.tag) {
    case CurveTag::Ds: return {1 - 1.0 / (2 * id.p), 1.0};
    case CurveTag::S21: return {0.25, 1.0};
    case CurveTag::Ell: {
      const double a = id.p, b = id.q;
      return {(a - 1) * (a - 1) / ((a + b - 1) * (a + b - 1)), (a - 1) / (a + b - 1)};
    }
    case CurveTag::Ellc: {
      const double a = id.p, b = id.q;
      return {1 - (b - 1) / (a + b - 1), 1 - (b - 1) * (b - 1) / ((a + b - 1) * (a + b - 1))};
    }
    case CurveTag::Ac4Cliques: return {0.0, 0.5};
    default: return {0.0, 1.0};
  }
}

CurveValue eval_curve(const CurveId& id, double beta, RangePolicy policy) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0,1]");
  const auto [lo, hi] = validity_interval(id);
  const bool in_range = beta >= lo - 1e-12 && beta <= hi + 1e-12;
  if (!in_range && policy == RangePolicy::Throw)
    throw DomainError(id.name() + " is defined on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "], got beta = " + std::to_string(beta));
  if (!in_range && id.tag == CurveTag::Ac4Cliques) return {std::nan(""), false};
  return {raw_value(id, beta), in_range};
}

template <class Scalar>
CliquePartition<Scalar> ac4_clique_value(const Scalar& beta) {
  if (!(beta > 0) || beta > Scalar(1) / 2) throw InfeasibleError("ac4_clique_value needs 0 < beta <= 1/2");
  const int k = ceil_inverse(beta);
  const Scalar km1 = k - 1;
  // k(k-1) u^2 - 2(k-1) u + (1 - beta) = 0, larger root.
  const Scalar disc = km1 * (Scalar(k) * beta - 1);
  const Scalar u = (km1 + root_of(disc)) / (Scalar(k) * km1);
  Scalar w = 1 - km1 * u;
  // At beta = 1/k the discriminant vanishes and rounding can leave w a hair above u.
  if constexpr (std::is_floating_point_v<Scalar>)
    if (w > u && w - u < 1e-12) w = u;
  if (w < 0 || w > u) throw InfeasibleError("no clique partition with 0 <= w <= u");
  const Scalar u2 = u * u, w2 = w * w;
  const Scalar value = beta * beta - (km1 * u2 * u2 + w2 * w2);
  return {k, u, w, value};
}

template CliquePartition<double> ac4_clique_value<double>(const double&);
template CliquePartition<mpq_class> ac4_clique_value<mpq_class>(const mpq_class&);

}  // namespace semind
