#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace semind {

/// Element p + q sqrt(2) of Q(sqrt 2) with exact rational p, q.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(mpq_class p) : p_(std::move(p)) { p_.canonicalize(); }  // NOLINT
  QSqrt2(mpq_class p, mpq_class q) : p_(std::move(p)), q_(std::move(q)) {
    p_.canonicalize();
    q_.canonicalize();
  }

  static QSqrt2 sqrt2() { return {0, 1}; }

  /// Accepts integers, decimals ("0.361", exact), fractions ("361/1000") and
  /// forms "sqrt2", "sqrt2-1", "<r>+<r>*sqrt2", "1/sqrt2".
  static QSqrt2 parse(std::string_view text);

  const mpq_class& rational() const { return p_; }
  const mpq_class& irrational() const { return q_; }
  bool is_rational() const { return sgn(q_) == 0; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }

  /// Exact sign.
  int sign() const;
  double to_double() const;
  std::string str() const;

  QSqrt2 conjugate() const { return {p_, -q_}; }
  QSqrt2 inverse() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
  friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
  friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
  friend QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }
  QSqrt2 operator-() const { return {-p_, -q_}; }

  friend bool operator==(const QSqrt2& a, const QSqrt2& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }
  friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QSqrt2& a, const QSqrt2& b) { return b < a; }
  friend bool operator<=(const QSqrt2& a, const QSqrt2& b) { return !(b < a); }
  friend bool operator>=(const QSqrt2& a, const QSqrt2& b) { return !(a < b); }

 private:
  mpq_class p_{0};
  mpq_class q_{0};
};

/// Exact rational from a decimal or fraction literal ("1.5", "-3/4", "2").
mpq_class parse_rational(std::string_view text);

}  // namespace semind
