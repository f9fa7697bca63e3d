#include "semind/qsqrt2.hpp"

#include <cmath>
#include <sstream>

#include "expr_parser.hpp"

namespace semind {

mpq_class parse_rational(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty number");
  bool neg = false;
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') {
    neg = t[0] == '-';
    i = 1;
  }
  std::string body = t.substr(i);
  mpq_class r;
  auto digits_only = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw std::invalid_argument("bad fraction '" + t + "'");
    r = mpq_class(mpz_class(num, 10), mpz_class(den, 10));
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator");
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || (!frac.empty() && !digits_only(frac)))
      throw std::invalid_argument("bad decimal '" + t + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    r = mpq_class(mpz_class(whole + frac, 10), scale);
  } else {
    if (!digits_only(body)) throw std::invalid_argument("bad integer '" + t + "'");
    r = mpq_class(mpz_class(body, 10));
  }
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

QSqrt2 QSqrt2::parse(std::string_view text) {
  detail::ExprParser<QSqrt2> parser(
      text,
      [](std::string_view name, std::size_t at) -> QSqrt2 {
        if (name == "sqrt2") return sqrt2();
        throw ParseError("unknown symbol '" + std::string(name) + "'", at);
      },
      [](const QSqrt2& a, const QSqrt2& b, std::size_t at) -> QSqrt2 {
        if (b.is_zero()) throw ParseError("division by zero", at);
        return a / b;
      });
  return parser.parse();
}

int QSqrt2::sign() const {
  const int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with 2 q^2.
  const int c = cmp(mpq_class(p_ * p_), mpq_class(2 * q_ * q_));
  return c > 0 ? sp : c < 0 ? sq : 0;
}

double QSqrt2::to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(2.0); }

std::string QSqrt2::str() const {
  if (is_rational()) return p_.get_str();
  const mpq_class mag = abs(q_);
  const std::string qs = (mag == 1 ? std::string() : mag.get_str() + "*") + "sqrt2";
  const char* op = sgn(q_) < 0 ? "-" : "+";
  if (sgn(p_) == 0) return (sgn(q_) < 0 ? "-" : "") + qs;
  return p_.get_str() + op + qs;
}

QSqrt2 QSqrt2::inverse() const {
  const mpq_class norm = p_ * p_ - 2 * q_ * q_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(sqrt2)");
  return {p_ / norm, -q_ / norm};
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  mpq_class p = p_ * o.p_ + 2 * q_ * o.q_;
  mpq_class q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

}  // namespace semind
