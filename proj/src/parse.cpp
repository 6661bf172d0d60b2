// Recursive-descent reader for the polynomial input language:
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := coeff? ('*'? factor)*
//   factor     := var ('^' uint)? | '(' expression ')' ('^' uint)?
//   coeff      := int | int '/' uint
#include <cctype>

#include "milnor/poly.hpp"

namespace milnor {
namespace {

constexpr long long kMaxExponent = 1LL << 20;

class Reader {
 public:
  Reader(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPolynomial run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    MultiPolynomial p = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string digits() {
    skip();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return s_.substr(b, pos_ - b);
  }

  long long exponent() {
    std::string d = digits();
    if (d.size() > 9 || std::stoll(d) > kMaxExponent) fail("exponent overflow");
    return std::stoll(d);
  }

  MultiPolynomial expression() {
    MultiPolynomial acc(vars_);
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    MultiPolynomial t = term();
    acc += neg ? -t : t;
    while (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
      t = term();
      acc += neg ? -t : t;
    }
    return acc;
  }

  MultiPolynomial term() {
    skip();
    MultiPolynomial acc = MultiPolynomial::constant(vars_, Scalar(1));
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      Rational c{BigInt(num)};
      if (peek('/')) {
        ++pos_;
        std::string den = digits();
        if (BigInt(den) == 0) fail("zero denominator");
        c = Rational(BigInt(num), BigInt(den));
      }
      acc = acc.scaled(Scalar(c));
      any = true;
    }
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!at_factor_start()) fail("expected a factor after '*'");
      }
      if (!at_factor_start()) break;
      acc = acc * factor();
      any = true;
    }
    if (!any) fail("expected a term");
    return acc;
  }

  MultiPolynomial factor() {
    skip();
    MultiPolynomial base(vars_);
    if (s_[pos_] == '(') {
      ++pos_;
      base = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else {
      size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(b, pos_ - b);
      int idx = -1;
      for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) idx = static_cast<int>(i);
      if (idx < 0) {
        pos_ = b;
        fail("unknown variable '" + name + "'");
      }
      base = MultiPolynomial::variable(vars_, idx);
    }
    if (peek('^')) {
      ++pos_;
      long long k = exponent();
      if (base.total_degree() > 0 && checked_mul(base.total_degree(), k) > kMaxExponent)
        fail("exponent overflow");
      base = base.pow(k);
    }
    return base;
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

MultiPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw ParseError("invalid variable name '" + v + "'");
  }
  return Reader(text, vars).run();
}

}  // namespace milnor
