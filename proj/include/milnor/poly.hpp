#ifndef MILNOR_POLY_HPP
#define MILNOR_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "milnor/scalar.hpp"
#include "milnor/upoly.hpp"

namespace milnor {

using Exponent = std::vector<long long>;

// Graded order: higher total degree first, then lexicographic with the first
// declared variable largest.
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPolynomial {
 public:
  using Terms = std::map<Exponent, Scalar, GradedOrder>;

  MultiPolynomial() = default;
  explicit MultiPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPolynomial constant(std::vector<std::string> vars, const Scalar& c);
  static MultiPolynomial variable(std::vector<std::string> vars, int index);
  static MultiPolynomial monomial(std::vector<std::string> vars, const Exponent& e, const Scalar& c);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  std::vector<Exponent> support() const;
  Scalar coeff(const Exponent& e) const;
  long long total_degree() const;
  long long degree_in(int var) const;
  FieldPtr field() const;

  // adds c*x^e, dropping the term when it cancels
  void add_term(const Exponent& e, const Scalar& c);

  MultiPolynomial operator-() const;
  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  MultiPolynomial scaled(const Scalar& c) const;
  MultiPolynomial pow(long long k) const;
  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b);
  friend bool operator!=(const MultiPolynomial& a, const MultiPolynomial& b) { return !(a == b); }

  MultiPolynomial derivative(int var) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  // substitutes value for one variable; the variable stays with degree 0
  MultiPolynomial substitute(int var, const Scalar& value) const;
  // drops listed variables, which must not occur
  MultiPolynomial drop_vars(const std::vector<int>& which) const;
  MultiPolynomial with_vars(std::vector<std::string> vars) const;
  // univariate view in one variable, other exponents must vanish
  KPoly as_univariate(int var) const;

  std::string render(const std::string& gen = "alpha") const;

 private:
  void check_compatible(const MultiPolynomial& o) const;
  std::vector<std::string> vars_;
  Terms terms_;
};

using IndexSet = std::vector<int>;  // sorted 0-based variable indices

// ---- exact_poly operations

MultiPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// terms with positive exponent outside keep are removed
MultiPolynomial restrict_to(const MultiPolynomial& f, const IndexSet& keep);

long long weighted_degree(const Exponent& e, const std::vector<long long>& w);
MultiPolynomial face_part(const MultiPolynomial& f, const std::vector<long long>& weight);

// z_i = prod_j u_j^{sigma(i,j)}; columns are the weight vectors of the chart
MultiPolynomial monomial_substitute(const MultiPolynomial& f, const IntMat& sigma,
                                    std::vector<std::string> new_vars = {});

std::pair<Exponent, MultiPolynomial> factor_monomial_content(const MultiPolynomial& f);

// f(w + q); entries of q at fixed indices must be zero
MultiPolynomial translate(const MultiPolynomial& f, const std::vector<Scalar>& q,
                          const IndexSet& fixed = {});

// old variable subset[i] becomes sum_j L(i,j) * new variable subset[j]
MultiPolynomial linear_change(const MultiPolynomial& f, const MatX<Scalar>& L,
                              const IndexSet& subset);

std::vector<std::string> default_vars(const std::string& stem, int n);

}  // namespace milnor

#endif  // MILNOR_POLY_HPP
