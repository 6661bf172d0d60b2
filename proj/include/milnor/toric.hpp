#ifndef MILNOR_TORIC_HPP
#define MILNOR_TORIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "milnor/cyclotomic.hpp"
#include "milnor/newton.hpp"

namespace milnor {

// Columns are the generators.
struct UnimodularCone {
  IntMat generators;
  Weight column(int j) const;
};

struct RegularFan {
  int n = 0;
  std::vector<Weight> rays;              // sorted
  std::vector<std::vector<int>> cones;   // maximal cones as sorted ray indices

  std::vector<Weight> positive_vertices() const;
  UnimodularCone cone(size_t i) const;
  std::vector<Weight> cone_rays(size_t i) const;
};

// Regular simplicial subdivision of the dual diagram (n <= 3).
RegularFan regularize(const DualDiagram& dd);
RegularFan ordinary_blowup_fan(int n);
// Stellar subdivision of every cone containing v (v strictly positive).
RegularFan subdivide_at(const RegularFan& fan, const Weight& v);

bool fan_is_unimodular(const RegularFan& fan);
// Cones meet face to face and cover the orthant.
bool fan_covers_orthant(const RegularFan& fan);
// Every cone lies inside one cone of the normal fan of the support.
bool fan_refines(const RegularFan& fan, const std::vector<Point>& support);

std::string fan_to_text(const RegularFan& fan);
RegularFan fan_from_text(const std::string& text);

struct PullbackFactorization {
  UnimodularCone chart;
  std::vector<long long> multiplicities;
  MultiPolynomial strict_transform;
};

PullbackFactorization chart_pullback(const MultiPolynomial& f, const UnimodularCone& sigma,
                                     std::vector<std::string> new_vars = {});

// Strict transform restricted to the divisor u_which = 0, that variable dropped.
MultiPolynomial exceptional_equation(const PullbackFactorization& pb, int which);

struct DivisorAdjacency {
  std::vector<std::pair<Weight, Weight>> hat;     // rays sharing a cone
  std::vector<std::pair<Weight, Weight>> strict;  // also meeting along the strict transform
  std::vector<std::pair<Weight, bool>> meets_strict_transform;  // positive vertices
};

DivisorAdjacency divisor_adjacency(const RegularFan& fan, const MultiPolynomial& f);

// A'Campo formula by orbit decomposition of the exceptional divisors.
CyclotomicProduct zeta_acampo(const MultiPolynomial& f, const RegularFan& fan);
CyclotomicProduct zeta_acampo(const std::vector<Point>& support, const RegularFan& fan);

// Euler characteristic of the exceptional divisor of P minus the other
// divisors of the total transform, for a ray P of the fan.
long long acampo_divisor_euler(const std::vector<Point>& support, const RegularFan& fan,
                               const Weight& P);

// Euler characteristic of the generic strict transform restricted to the
// exceptional divisor of the positive ray P.
long long strict_divisor_euler(const std::vector<Point>& support, const RegularFan& fan,
                               const Weight& P);

}  // namespace milnor

#endif  // MILNOR_TORIC_HPP
