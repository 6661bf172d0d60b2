#ifndef MILNOR_NEWTON_HPP
#define MILNOR_NEWTON_HPP

#include <vector>

#include "milnor/poly.hpp"
#include "milnor/polytope.hpp"

namespace milnor {

using Weight = std::vector<long long>;

struct Face {
  std::vector<Point> points;  // support points on the face, sorted
  Weight weight;              // a strictly positive weight selecting the face
  long long d = 0;            // minimal value of weight on the support
  int dim = 0;
  std::vector<int> facets;    // indices into NewtonBoundary::facets
};

struct Facet {
  Weight normal;                 // primitive, non-negative
  long long d = 0;
  std::vector<Point> points;     // support points on the facet
  bool compact = false;
};

struct NewtonBoundary {
  int n = 0;
  std::vector<Point> support;
  std::vector<Facet> facets;     // every facet of the Newton polyhedron
  std::vector<Face> faces;       // compact faces of all dimensions

  std::vector<const Face*> maximal_faces() const;
  std::vector<const Face*> faces_of_dim(int k) const;
};

struct DualCone {
  std::vector<Weight> generators;  // sorted facet normals
  std::vector<Point> face_points;  // the face selected by the relative interior
  bool compact = false;
};

struct DualDiagram {
  int n = 0;
  std::vector<Weight> rays;            // all facet normals, sorted
  std::vector<DualCone> maximal_cones; // one per vertex of the polyhedron
  std::vector<DualCone> cones;         // one per face, all dimensions
};

NewtonBoundary newton_boundary(const std::vector<Point>& support);
NewtonBoundary newton_boundary(const MultiPolynomial& f);

// Support points of f with positive exponents only inside I, in R^I coordinates.
std::vector<Point> restricted_support(const MultiPolynomial& f, const IndexSet& I);

struct SupportMin {
  long long d = 0;
  Face face;
};
SupportMin support_min(const std::vector<Point>& support, const Weight& P);
SupportMin support_min(const MultiPolynomial& f, const Weight& P);
// No precondition on zero entries of P; used for non-compact faces.
SupportMin raw_support_min(const std::vector<Point>& support, const Weight& P);

// Primitive strictly positive normals (in R^I coordinates) of the
// (|I|-1)-dimensional compact faces of the restriction, lexicographic.
std::vector<Weight> maximal_face_weights(const MultiPolynomial& f, const IndexSet& I);
std::vector<Weight> maximal_face_weights(const std::vector<Point>& support);

DualDiagram dual_diagram(const MultiPolynomial& f);
DualDiagram dual_diagram(const std::vector<Point>& support);

bool is_convenient(const MultiPolynomial& f);
bool is_pseudo_convenient(const MultiPolynomial& f);

// |I|! Vol of the cone over a face lying in R^I (points in R^I coordinates).
long long cone_lattice_volume(const std::vector<Point>& face_points);

// chi(Q) for the restriction to I; Q is given in R^I coordinates.
long long chi_weight(const MultiPolynomial& f, const IndexSet& I, const Weight& Q);
long long chi_weight(const std::vector<Point>& support, const Weight& Q);

// Euler characteristic of the hypersurface in the torus by the volume of the
// full Newton polytope of h.
long long torus_hypersurface_euler(const MultiPolynomial& h);
long long torus_hypersurface_euler(const std::vector<Point>& support);

// All nonempty subsets of {0..n-1} in increasing size, then lexicographic.
std::vector<IndexSet> nonempty_subsets(int n);

}  // namespace milnor

#endif  // MILNOR_NEWTON_HPP
