#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semind/polynomial.hpp"
#include "semind/qsqrt2.hpp"

namespace semind {

/// Sparse polynomial in up to three formal variables with Q(sqrt 2)
/// coefficients. Variable names are supplied when parsing or printing;
/// index 0 is the main variable (a or alpha), 1 and 2 are B and C.
class CoeffPoly {
 public:
  static constexpr int kVars = 3;
  using Monomial = std::array<std::uint8_t, kVars>;

  CoeffPoly() = default;
  CoeffPoly(const QSqrt2& c);  // NOLINT(google-explicit-constructor)
  CoeffPoly(long c) : CoeffPoly(QSqrt2(c)) {}  // NOLINT
  static CoeffPoly var(int index);

  /// Parses +, -, *, /, ^, parentheses, decimals (exact), fractions, the
  /// given variable names and the constant sqrt2. Division only by constants.
  static CoeffPoly parse(std::string_view text, const std::vector<std::string>& names);

  const std::map<Monomial, QSqrt2>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  QSqrt2 constant() const;
  /// Degree in one variable.
  int degree(int var) const;

  CoeffPoly substitute(int var, const QSqrt2& value) const;
  /// Univariate polynomial in `var`; throws if other variables remain.
  Polynomial<QSqrt2> univariate(int var) const;
  double eval(const std::array<double, kVars>& point) const;

  std::string str(const std::vector<std::string>& names) const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly operator-() const;
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const QSqrt2& c);
  std::map<Monomial, QSqrt2> terms_;
};

CoeffPoly pow(const CoeffPoly& base, int exponent);

}  // namespace semind
