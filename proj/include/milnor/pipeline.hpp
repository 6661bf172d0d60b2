#ifndef MILNOR_PIPELINE_HPP
#define MILNOR_PIPELINE_HPP

#include <string>
#include <vector>

#include "milnor/almost_nd.hpp"
#include "milnor/elimination.hpp"
#include "milnor/nondegeneracy.hpp"
#include "milnor/toric.hpp"

namespace milnor {

// Chart of the fan whose first generator is P.
UnimodularCone chart_for_ray(const RegularFan& fan, const Weight& P);

// If the lowest homogeneous part of f in the two variables vars[0], vars[1]
// is a power of a linear form that is not a coordinate, makes that form a
// coordinate. Returns the changed polynomial and sets note when changed.
MultiPolynomial straighten_tangent_cone(const MultiPolynomial& f, const IndexSet& vars, std::string& note);

struct ExceptionalPoint {
  AlgebraicPoint where;           // coordinates on the exceptional divisor
  MultiPolynomial strict_local;   // strict transform centred at the point
  MultiPolynomial germ;           // restriction to the divisor
  MultiPolynomial local_form;     // w1^d * strict_local
  std::string change;             // coordinate change applied, if any
};

struct DegenerateFaceData {
  Weight weight;
  PullbackFactorization chart;
  MultiPolynomial divisor_equation;
  std::vector<ExceptionalPoint> points;
};

// Local analysis at the torus singular points of the exceptional curve of
// one degenerate maximal face (n <= 3).
DegenerateFaceData analyze_degenerate_face(const MultiPolynomial& f, const RegularFan& fan, const Weight& P);

struct DetectionResult {
  NondegeneracyReport nondegeneracy;
  std::vector<DegenerateFaceData> faces;
  std::vector<DegenerateFaceSpec> specs;
  std::vector<std::string> warnings;
  int unknown = 0;  // non-degeneracy verdicts left open
};

// Finds the degenerate maximal faces and builds local data for each torus
// singular point; conjugate algebraic points are grouped with a count.
DetectionResult detect_degenerate_faces(const MultiPolynomial& f);

}  // namespace milnor

#endif  // MILNOR_PIPELINE_HPP
