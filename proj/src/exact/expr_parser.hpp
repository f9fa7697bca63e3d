#pragma once

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "semind/colored_graph.hpp"
#include "semind/qsqrt2.hpp"

namespace semind::detail {

// Recursive-descent parser for + - * / ^ and parentheses over a ring T.
// `atom` maps an identifier to a value; `divide` handles a / b.
template <class T>
class ExprParser {
 public:
  ExprParser(std::string_view text, std::function<T(std::string_view, std::size_t)> atom,
             std::function<T(const T&, const T&, std::size_t)> divide)
      : s_(text), atom_(std::move(atom)), divide_(std::move(divide)) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character in expression", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v;
    if (eat('-'))
      v = -term();
    else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  T term() {
    T v = power();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (eat('*'))
        v = v * power();
      else if (eat('/'))
        v = divide_(v, power(), at);
      else
        return v;
    }
  }

  T power() {
    T base = primary();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    bool braces = eat('{');
    skip();
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("expected integer exponent", start);
    const int e = std::stoi(std::string(s_.substr(digits, pos_ - digits)));
    if (braces && !eat('}')) throw ParseError("expected '}'", pos_);
    T r = T(1L);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  T primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    if (eat('(')) {
      T v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (eat('-')) return -primary();
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      try {
        return T(QSqrt2(parse_rational(s_.substr(start, pos_ - start))));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad number", start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return atom_(s_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::function<T(std::string_view, std::size_t)> atom_;
  std::function<T(const T&, const T&, std::size_t)> divide_;
};

}  // namespace semind::detail
