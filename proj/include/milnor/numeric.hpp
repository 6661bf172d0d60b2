#ifndef MILNOR_NUMERIC_HPP
#define MILNOR_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace milnor {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using IntMat = MatX<long long>;
using BigMat = MatX<BigInt>;

// Malformed input text or configuration.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A precondition of an operation does not hold.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Exact data that should agree does not.
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const BigInt& z) { return z == 0; }
inline bool is_zero(long long z) { return z == 0; }

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
Rational parse_rational(const std::string& text);

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
long long gcd_ll(long long a, long long b);

// Divides out the gcd of the entries; the zero vector is returned unchanged.
std::vector<long long> primitive(std::vector<long long> v);

// Fraction-free Gaussian elimination (Bareiss); exact for integral scalars.
template <typename T>
T det_bareiss(MatX<T> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return T(1);
  T sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

long long det_ll(const IntMat& m);

// Vector orthogonal to the rows of an (n-1) x n integer matrix: entry i is
// (-1)^i times the minor with column i removed.
std::vector<long long> cross_product(const IntMat& rows);

// Rank over the rationals.
int rank_ll(const IntMat& m);

}  // namespace milnor

#endif  // MILNOR_NUMERIC_HPP
