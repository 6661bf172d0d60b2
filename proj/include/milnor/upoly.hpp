#ifndef MILNOR_UPOLY_HPP
#define MILNOR_UPOLY_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "milnor/scalar.hpp"

namespace milnor {

// Dense univariate polynomial over a field K (Rational or Scalar),
// coefficients low to high, no trailing zeros.
template <typename K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
  static UPoly x() { return UPoly(std::vector<K>{K(0), K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const K& operator[](int i) const { return c_[i]; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }

  K eval(const K& x) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UPoly derivative() const {
    std::vector<K> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K(static_cast<long long>(i)));
    return UPoly(d);
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead();
    std::vector<K> d(c_);
    for (auto& v : d) v = v * inv;
    return UPoly(d);
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(r);
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return UPoly(r);
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UPoly(r);
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // a = q*b + r
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<K> r(a.c_);
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<K> q(a.degree() - db + 1, K(0));
    K inv = K(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
      if (milnor::is_zero(r[i])) continue;
      K f = r[i] * inv;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {UPoly(q), UPoly(r)};
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // a*s + b*t = g (monic)
  static UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
    UPoly r0 = a, r1 = b, s0 = constant(K(1)), s1, t0, t1 = constant(K(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) {
      s = UPoly();
      t = UPoly();
      return r0;
    }
    K inv = K(1) / r0.lead();
    s = s0 * constant(inv);
    t = t0 * constant(inv);
    return r0 * constant(inv);
  }

  UPoly squarefree_part() const {
    if (degree() <= 0) return *this;
    return divmod(*this, gcd(*this, derivative())).first.monic();
  }

  // removes the factor x^k
  UPoly strip_zero_roots() const {
    size_t k = 0;
    while (k < c_.size() && milnor::is_zero(c_[k])) ++k;
    return UPoly(std::vector<K>(c_.begin() + static_cast<long>(k), c_.end()));
  }

 private:
  void trim() {
    while (!c_.empty() && milnor::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using QPoly = UPoly<Rational>;
using KPoly = UPoly<Scalar>;

// Primitive integer polynomial with positive leading coefficient, same roots.
std::vector<BigInt> primitive_integer(const QPoly& p);
QPoly from_integer(const std::vector<BigInt>& c);

// Complex roots via the companion matrix, Newton-polished.
std::vector<std::complex<double>> numeric_roots(const std::vector<BigInt>& c);

struct QFactor {
  std::vector<BigInt> poly;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

// Factorization over Q into irreducible primitive integer polynomials.
// Rational roots are exact; higher-degree factors are found from numerical
// root clusters and confirmed by exact division. Throws DomainError when
// coefficients leave the range where rounding is reliable.
std::vector<QFactor> factor_over_q(const QPoly& p);
bool is_irreducible_over_q(const std::vector<BigInt>& c);

std::string render_upoly(const QPoly& p, const std::string& var = "t");

}  // namespace milnor

#endif  // MILNOR_UPOLY_HPP
