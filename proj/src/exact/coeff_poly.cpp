#include "semind/coeff_poly.hpp"

#include <algorithm>
#include <cmath>

#include "expr_parser.hpp"

namespace semind {

CoeffPoly::CoeffPoly(const QSqrt2& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

CoeffPoly CoeffPoly::var(int index) {
  if (index < 0 || index >= kVars) throw std::out_of_range("variable index");
  CoeffPoly p;
  Monomial m{};
  m[index] = 1;
  p.terms_.emplace(m, QSqrt2(1));
  return p;
}

CoeffPoly CoeffPoly::parse(std::string_view text, const std::vector<std::string>& names) {
  detail::ExprParser<CoeffPoly> parser(
      text,
      [&names](std::string_view name, std::size_t at) -> CoeffPoly {
        if (name == "sqrt2") return CoeffPoly(QSqrt2::sqrt2());
        for (std::size_t i = 0; i < names.size() && i < kVars; ++i)
          if (name == names[i]) return var(static_cast<int>(i));
        throw ParseError("unknown variable '" + std::string(name) + "'", at);
      },
      [](const CoeffPoly& a, const CoeffPoly& b, std::size_t at) -> CoeffPoly {
        if (!b.is_constant() || b.is_zero()) throw ParseError("division only by nonzero constants", at);
        return a * CoeffPoly(b.constant().inverse());
      });
  return parser.parse();
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

QSqrt2 CoeffPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? QSqrt2() : it->second;
}

int CoeffPoly::degree(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

void CoeffPoly::add_term(const Monomial& m, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      CoeffPoly::Monomial m;
      for (int i = 0; i < CoeffPoly::kVars; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  return r;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CoeffPoly pow(const CoeffPoly& base, int exponent) {
  CoeffPoly r(1L);
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}

CoeffPoly CoeffPoly::substitute(int var, const QSqrt2& value) const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) {
    QSqrt2 f = c;
    for (int i = 0; i < m[var]; ++i) f *= value;
    Monomial k = m;
    k[var] = 0;
    r.add_term(k, f);
  }
  return r;
}

Polynomial<QSqrt2> CoeffPoly::univariate(int var) const {
  std::vector<QSqrt2> coeffs(std::max(0, degree(var) + 1), QSqrt2());
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kVars; ++i)
      if (i != var && m[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    coeffs[m[var]] += c;
  }
  return Polynomial<QSqrt2>(std::move(coeffs));
}

double CoeffPoly::eval(const std::array<double, kVars>& point) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < kVars; ++i) t *= std::pow(point[i], m[i]);
    s += t;
  }
  return s;
}

std::string CoeffPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, QSqrt2>> items(terms_.begin(), terms_.end());
  // Main variable first, highest power first; then B, C.
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::string out;
  for (const auto& [m, c] : items) {
    std::string mono;
    for (int i = 0; i < kVars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    QSqrt2 coef = c;
    bool negative = false;
    if (c.is_rational() && c.sign() < 0) {
      negative = true;
      coef = -c;
    }
    std::string cs = coef.is_rational() ? coef.str() : "(" + coef.str() + ")";
    std::string term;
    if (mono.empty())
      term = cs;
    else if (coef == QSqrt2(1))
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace semind
