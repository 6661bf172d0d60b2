#include "milnor/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace milnor {
namespace {

IntMat difference_matrix(const std::vector<Point>& pts) {
  const Eigen::Index n = pts.empty() ? 0 : static_cast<Eigen::Index>(pts[0].size());
  IntMat d(std::max<Eigen::Index>(static_cast<Eigen::Index>(pts.size()) - 1, 0), n);
  for (size_t i = 1; i < pts.size(); ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i - 1, j) = pts[i][j] - pts[0][j];
  return d;
}

}  // namespace

int affine_dim(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  return rank_ll(difference_matrix(pts));
}

std::vector<Point> nullspace_int(const IntMat& rows) {
  const Eigen::Index r = rows.rows(), n = rows.cols();
  MatX<Rational> a = rows.cast<Rational>();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < n && row < r; ++c) {
    Eigen::Index p = row;
    while (p < r && a(p, c) == 0) ++p;
    if (p == r) continue;
    a.row(row).swap(a.row(p));
    Rational inv = Rational(1) / a(row, c);
    for (Eigen::Index k = 0; k < n; ++k) a(row, k) *= inv;
    for (Eigen::Index i = 0; i < r; ++i) {
      if (i == row || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (Eigen::Index k = 0; k < n; ++k) a(i, k) -= f * a(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<Point> out;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(static_cast<Eigen::Index>(i), free);
    BigInt l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
    Point p;
    for (const auto& x : v) p.push_back((x * Rational(l)).convert_to<long long>());
    out.push_back(primitive(p));
  }
  return out;
}

std::vector<std::vector<int>> hull_facets(const std::vector<Point>& pts) {
  const int k = affine_dim(pts);
  if (k == 0) return {};
  const int n = static_cast<int>(pts[0].size());
  const int N = static_cast<int>(pts.size());
  std::vector<Point> normals = nullspace_int(difference_matrix(pts));
  std::set<std::vector<int>> found;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      IntMat m(n - 1, n);
      for (int i = 1; i < k; ++i)
        for (int j = 0; j < n; ++j) m(i - 1, j) = pts[pick[i]][j] - pts[pick[0]][j];
      for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < n; ++j) m(k - 1 + i, j) = normals[i][j];
      Point c = cross_product(m);
      if (std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; })) return;
      std::vector<long long> val(N);
      for (int i = 0; i < N; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += c[j] * pts[i][j];
        val[i] = s;
      }
      long long v0 = val[pick[0]];
      long long lo = *std::min_element(val.begin(), val.end());
      long long hi = *std::max_element(val.begin(), val.end());
      if (v0 != lo && v0 != hi) return;
      std::vector<int> face;
      for (int i = 0; i < N; ++i)
        if (val[i] == v0) face.push_back(i);
      found.insert(face);
      return;
    }
    for (int i = start; i < N; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return {found.begin(), found.end()};
}

std::vector<long long> lex_min(const std::vector<Point>& pts) {
  return *std::min_element(pts.begin(), pts.end());
}

namespace {

std::vector<Simplex> pull(const std::vector<Point>& pts, int apex, bool pull_largest) {
  const int k = affine_dim(pts);
  if (k == 0) return {{apex}};
  std::vector<Simplex> out;
  for (const auto& facet : hull_facets(pts)) {
    if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
    std::vector<Point> sub;
    for (int i : facet) sub.push_back(pts[i]);
    for (const auto& s : triangulate(sub, pull_largest)) {
      Simplex t;
      for (int i : s) t.push_back(facet[i]);
      t.push_back(apex);
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

std::vector<Simplex> triangulate(const std::vector<Point>& pts, bool pull_largest) {
  if (pts.empty()) return {};
  int apex = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (pull_largest ? pts[i] > pts[apex] : pts[i] < pts[apex]) apex = i;
  return pull(pts, apex, pull_largest);
}

std::vector<Simplex> triangulate_from(const std::vector<Point>& pts, int apex) {
  if (pts.empty()) return {};
  return pull(pts, apex, false);
}

long long simplex_volume(const std::vector<Point>& verts) {
  const int k = static_cast<int>(verts.size()) - 1;
  if (k <= 0) return 1;
  const int n = static_cast<int>(verts[0].size());
  IntMat d = difference_matrix(verts);
  long long g = 0;
  std::vector<int> cols;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cols.size()) == k) {
      IntMat m(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = d(i, cols[j]);
      g = gcd_ll(g, det_ll(m));
      return;
    }
    for (int c = start; c < n; ++c) {
      cols.push_back(c);
      rec(c + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return g;
}

long long normalized_volume(const std::vector<Point>& pts, bool pull_largest) {
  long long total = 0;
  for (const auto& s : triangulate(pts, pull_largest)) {
    std::vector<Point> v;
    for (int i : s) v.push_back(pts[i]);
    total = checked_add(total, simplex_volume(v));
  }
  return total;
}

long long cone_volume(const std::vector<Point>& pts, bool pull_largest) {
  if (pts.empty()) return 0;
  const int n = static_cast<int>(pts[0].size());
  if (affine_dim(pts) < n - 1) return 0;
  long long total = 0;
  for (const auto& s : triangulate(pts, pull_largest)) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = pts[s[i]][j];
    long long d = det_ll(m);
    total = checked_add(total, d < 0 ? -d : d);
  }
  return total;
}

}  // namespace milnor
