#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semind {

/// Dense univariate polynomial over a field, coefficients low degree first.
template <class Field>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Field> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const Field& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)

  static Polynomial x() { return Polynomial(std::vector<Field>{Field(0), Field(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Field>& coeffs() const { return c_; }
  Field coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Field(0); }
  const Field& leading() const { return c_.back(); }

  Field operator()(const Field& x) const {
    Field r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Polynomial derivative() const {
    std::vector<Field> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Field(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> r(a.c_.size() + b.c_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Field> rem = c_;
    const int dd = d.degree();
    std::vector<Field> quo(std::max(0, degree() - dd + 1), Field(0));
    const Field inv = Field(1) / d.leading();
    for (int k = degree(); k >= dd; --k) {
      const Field f = rem[k] * inv;
      if (f == Field(0)) continue;
      quo[k - dd] = f;
      for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    rem.resize(std::max(0, dd));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    const Field inv = Field(1) / leading();
    for (auto& v : r.c_) v = v * inv;
    return r;
  }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// p / gcd(p, p'): same roots, all simple.
  Polynomial squarefree() const {
    if (degree() < 1) return *this;
    return divmod(gcd(*this, derivative())).first;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Field(0)) c_.pop_back();
  }
  std::vector<Field> c_;
};

}  // namespace semind
