#ifndef MILNOR_SCALAR_HPP
#define MILNOR_SCALAR_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

// Q(alpha) for an algebraic integer alpha given by its monic minimal
// polynomial. Construction rejects reducible or non-squarefree input.
class NumberField {
 public:
  // coeffs low to high, leading coefficient must be 1
  explicit NumberField(std::vector<BigInt> monic_coeffs);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<BigInt>& minpoly() const { return minpoly_; }
  // Complex roots sorted by (real, imag); root index k refers to roots()[k].
  const std::vector<std::complex<double>>& roots() const { return roots_; }
  std::string minpoly_string(const std::string& var = "t") const;
  bool same_as(const NumberField& other) const { return minpoly_ == other.minpoly_; }

 private:
  std::vector<BigInt> minpoly_;
  std::vector<std::complex<double>> roots_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<BigInt> monic_coeffs);

// Element of Q or of a single simple extension Q(alpha).
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const BigInt& v) : q_(v) {}  // NOLINT
  Scalar(const Rational& v) : q_(v) {}  // NOLINT
  // sum_k coeffs[k] alpha^k, reduced
  Scalar(FieldPtr field, std::vector<Rational> coeffs);

  static Scalar generator(FieldPtr field);

  bool is_rational() const { return !field_; }
  bool is_zero() const;
  bool is_one() const;
  const FieldPtr& field() const { return field_; }
  // throws DomainError unless the value lies in Q
  Rational to_rational() const;
  // coefficients in the power basis; size 1 for rationals
  std::vector<Rational> coefficients() const;
  // value under the embedding alpha -> roots()[root_index]
  std::complex<double> approx(int root_index = 0) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "3/2" for rationals, "(1/2+3*alpha)" style otherwise
  std::string to_string(const std::string& gen = "alpha") const;
  bool needs_parens() const;

 private:
  void promote(const FieldPtr& f);
  void reduce();
  void demote();

  FieldPtr field_;
  Rational q_;                 // used when field_ is null
  std::vector<Rational> v_;    // used otherwise, size == degree
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Shared field of a list of scalars (null when all are rational); throws on
// two distinct extensions.
FieldPtr common_field(const std::vector<Scalar>& values);
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

}  // namespace milnor

namespace Eigen {
template <>
struct NumTraits<milnor::Scalar> : GenericNumTraits<milnor::Scalar> {
  typedef milnor::Scalar Real;
  typedef milnor::Scalar NonInteger;
  typedef milnor::Scalar Literal;
  typedef milnor::Scalar Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // MILNOR_SCALAR_HPP
