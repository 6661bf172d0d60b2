#ifndef MILNOR_ELIMINATION_HPP
#define MILNOR_ELIMINATION_HPP

#include <string>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

// A point with coordinates in Q or in one simple extension; root_index picks
// the complex embedding of the generator.
struct AlgebraicPoint {
  std::vector<Scalar> coords;
  FieldPtr field;
  int root_index = 0;

  bool in_torus() const;
  std::vector<std::complex<double>> approx() const;
  std::string describe(const std::string& gen = "alpha") const;
};

// Res_var(a, b) as a polynomial in the remaining variable of a bivariate
// pair, computed from Sylvester determinants at sample points.
KPoly resultant(const MultiPolynomial& a, const MultiPolynomial& b, int var);

// Singular points of the curve (or point set) g = 0 for g in one or two
// variables with rational coefficients. Throws InconsistencyError when the
// singular locus has positive dimension.
std::vector<AlgebraicPoint> singular_points(const MultiPolynomial& g);

// Roots of a rational univariate polynomial, one entry per complex root.
std::vector<AlgebraicPoint> rational_roots_as_points(const QPoly& p);

// Converts an exactly rational KPoly; throws if a coefficient is irrational.
QPoly to_qpoly(const KPoly& p);

}  // namespace milnor

#endif  // MILNOR_ELIMINATION_HPP
