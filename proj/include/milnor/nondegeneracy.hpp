#ifndef MILNOR_NONDEGENERACY_HPP
#define MILNOR_NONDEGENERACY_HPP

#include <string>
#include <vector>

#include "milnor/newton.hpp"

namespace milnor {

enum class Verdict { verified, refuted, unknown };
std::string to_string(Verdict v);

struct FaceVerdict {
  Weight weight;              // empty for faces of a polytope
  std::vector<Point> points;
  int dim = 0;
  Verdict verdict = Verdict::unknown;
  std::string method;
  std::string witness;
};

struct NondegeneracyReport {
  Verdict overall = Verdict::verified;
  std::vector<FaceVerdict> faces;
};

// Laurent reduction of a sum of monomials to k = dim essential variables:
// the returned polynomial has the same torus critical points on its zero set.
MultiPolynomial reduce_face_function(const MultiPolynomial& face_fn);

// Whether h_face = 0 has a singular point in the torus.
FaceVerdict face_verdict(const MultiPolynomial& face_fn);

// Compact faces of the Newton boundary, dimension >= 1.
NondegeneracyReport nondegeneracy_check(const MultiPolynomial& h);

// Every face of the Newton polytope conv(supp h), including the polytope.
NondegeneracyReport nondegeneracy_check_polytope(const MultiPolynomial& h);

}  // namespace milnor

#endif  // MILNOR_NONDEGENERACY_HPP
