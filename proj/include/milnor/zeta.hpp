#ifndef MILNOR_ZETA_HPP
#define MILNOR_ZETA_HPP

#include "milnor/cyclotomic.hpp"
#include "milnor/newton.hpp"

namespace milnor {

// Product over nonempty I with f^I != 0 of the face factors of f^I.
CyclotomicProduct varchenko_zeta(const MultiPolynomial& f);
CyclotomicProduct varchenko_zeta(const std::vector<Point>& support);

// Single factor prod_{Q} (1 - t^{d(Q)})^{-chi(Q)} for the restriction to I.
CyclotomicProduct zeta_subset(const MultiPolynomial& f, const IndexSet& I);
CyclotomicProduct zeta_subset(const std::vector<Point>& support, const IndexSet& I);

struct NodalConeData {
  CyclotomicProduct zeta;
  CyclotomicProduct top_char_poly;
};

// Cone over a degree d plane curve with k nodes.
NodalConeData char_poly_top_nodal(long long d, long long k);

}  // namespace milnor

#endif  // MILNOR_ZETA_HPP
