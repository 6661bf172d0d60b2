#ifndef MILNOR_POLYTOPE_HPP
#define MILNOR_POLYTOPE_HPP

#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

using Point = std::vector<long long>;
using Simplex = std::vector<int>;  // indices into a point list

int affine_dim(const std::vector<Point>& pts);

// Integer basis of the orthogonal complement of the row space.
std::vector<Point> nullspace_int(const IntMat& rows);

// Facets of conv(pts) inside its affine hull, each as the sorted indices of
// all points lying on it. Empty for dimension 0.
std::vector<std::vector<int>> hull_facets(const std::vector<Point>& pts);

// Triangulation of conv(pts) by pulling the lexicographically smallest
// point, or the largest when pull_largest is set.
std::vector<Simplex> triangulate(const std::vector<Point>& pts, bool pull_largest = false);
// Same, pulling the given point first at the top level.
std::vector<Simplex> triangulate_from(const std::vector<Point>& pts, int apex);

// Normalized volume of a simplex in the lattice of its own affine span:
// gcd of the maximal minors of its edge matrix.
long long simplex_volume(const std::vector<Point>& verts);

// Normalized volume k!Vol_k of conv(pts) in the lattice of its affine span,
// where k is the affine dimension.
long long normalized_volume(const std::vector<Point>& pts, bool pull_largest = false);

// Normalized volume of conv(0, pts) for pts spanning a hyperplane that avoids
// the origin; zero when the affine dimension is below n-1.
long long cone_volume(const std::vector<Point>& pts, bool pull_largest = false);

std::vector<long long> lex_min(const std::vector<Point>& pts);

}  // namespace milnor

#endif  // MILNOR_POLYTOPE_HPP
