#include "milnor/zeta.hpp"

#include <algorithm>

namespace milnor {
namespace {

std::vector<Point> restrict_points(const std::vector<Point>& support, const IndexSet& I) {
  std::vector<Point> out;
  const int n = support.empty() ? 0 : static_cast<int>(support[0].size());
  for (const auto& p : support) {
    bool inside = true;
    for (int j = 0; j < n && inside; ++j)
      if (p[j] != 0 && std::find(I.begin(), I.end(), j) == I.end()) inside = false;
    if (!inside) continue;
    Point q;
    for (int j : I) q.push_back(p[j]);
    out.push_back(q);
  }
  return out;
}

void require_isolated_shape(const std::vector<Point>& support) {
  if (support.empty()) throw DomainError("zeta function of the zero polynomial");
  const size_t n = support[0].size();
  Point lo = support[0];
  for (const auto& p : support)
    for (size_t j = 0; j < n; ++j) lo[j] = std::min(lo[j], p[j]);
  for (size_t j = 0; j < n; ++j) {
    bool axis = false;
    for (const auto& p : support) {
      bool on = true;
      for (size_t k = 0; k < n && on; ++k)
        if (k != j && p[k] != lo[k]) on = false;
      if (on) axis = true;
    }
    if (!axis) throw DomainError("polynomial is neither convenient nor pseudo-convenient");
  }
}

}  // namespace

CyclotomicProduct zeta_subset(const std::vector<Point>& support, const IndexSet& I) {
  std::vector<Point> sub = restrict_points(support, I);
  if (sub.empty()) throw DomainError("restriction to the coordinate subspace vanishes");
  CyclotomicProduct z;
  for (const auto& Q : maximal_face_weights(sub)) {
    long long chi = chi_weight(sub, Q);
    long long d = support_min(sub, Q).d;
    z.multiply_factor(d, -chi);
  }
  return z;
}

CyclotomicProduct zeta_subset(const MultiPolynomial& f, const IndexSet& I) {
  return zeta_subset(f.support(), I);
}

CyclotomicProduct varchenko_zeta(const std::vector<Point>& support) {
  require_isolated_shape(support);
  const int n = static_cast<int>(support[0].size());
  CyclotomicProduct z;
  for (const auto& I : nonempty_subsets(n)) {
    if (restrict_points(support, I).empty()) continue;
    z = zp_mul(z, zeta_subset(support, I));
  }
  return z;
}

CyclotomicProduct varchenko_zeta(const MultiPolynomial& f) { return varchenko_zeta(f.support()); }

NodalConeData char_poly_top_nodal(long long d, long long k) {
  if (d < 3) throw DomainError("nodal cone needs degree at least 3");
  if (k < 0 || k > (d - 1) * (d - 2) / 2) throw DomainError("node count out of range");
  long long e = d * d - 3 * d + 3 - k;
  NodalConeData out;
  out.zeta = CyclotomicProduct::factor(d, -e);
  out.top_char_poly = CyclotomicProduct::factor(d, e);
  out.top_char_poly.multiply_factor(1, -1);
  return out;
}

}  // namespace milnor
