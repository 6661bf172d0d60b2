#ifndef MILNOR_CYCLOTOMIC_HPP
#define MILNOR_CYCLOTOMIC_HPP

#include <map>
#include <string>
#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

// prod_m (1 - t^m)^{e_m}; zero exponents are never stored.
class CyclotomicProduct {
 public:
  CyclotomicProduct() = default;
  CyclotomicProduct(std::initializer_list<std::pair<const long long, long long>> init);

  static CyclotomicProduct factor(long long m, long long e);

  const std::map<long long, long long>& exponents() const { return e_; }
  long long exponent(long long m) const;
  bool is_one() const { return e_.empty(); }
  void multiply_factor(long long m, long long e);

  friend bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b) { return a.e_ == b.e_; }
  friend bool operator!=(const CyclotomicProduct& a, const CyclotomicProduct& b) { return a.e_ != b.e_; }

 private:
  std::map<long long, long long> e_;
};

CyclotomicProduct zp_mul(const CyclotomicProduct& a, const CyclotomicProduct& b);
CyclotomicProduct zp_inv(const CyclotomicProduct& a);
CyclotomicProduct zp_pow(const CyclotomicProduct& a, long long k);

long long degree(const CyclotomicProduct& z);

// (-1)^n (deg + 1); throws InconsistencyError when negative
long long milnor_from_zeta(const CyclotomicProduct& z, int n);

std::string render_zeta(const CyclotomicProduct& z);
CyclotomicProduct parse_zeta(const std::string& text);

// Power series coefficients of the product up to t^order (golden tests only).
std::vector<BigInt> zeta_series(const CyclotomicProduct& z, int order);

}  // namespace milnor

#endif  // MILNOR_CYCLOTOMIC_HPP
