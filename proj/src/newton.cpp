#include "milnor/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace milnor {
namespace {

long long dot(const Weight& w, const Point& p) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s = checked_add(s, checked_mul(w[i], p[i]));
  return s;
}

int face_rank(const std::vector<Point>& pts, const std::vector<int>& dirs, int n) {
  IntMat m(static_cast<Eigen::Index>(pts.size() - 1 + dirs.size()), n);
  Eigen::Index r = 0;
  for (size_t i = 1; i < pts.size(); ++i, ++r)
    for (int j = 0; j < n; ++j) m(r, j) = pts[i][j] - pts[0][j];
  for (int d : dirs) {
    for (int j = 0; j < n; ++j) m(r, j) = j == d ? 1 : 0;
    ++r;
  }
  return m.rows() == 0 ? 0 : rank_ll(m);
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

std::vector<const Face*> NewtonBoundary::maximal_faces() const { return faces_of_dim(n - 1); }

std::vector<const Face*> NewtonBoundary::faces_of_dim(int k) const {
  std::vector<const Face*> out;
  for (const auto& f : faces)
    if (f.dim == k) out.push_back(&f);
  return out;
}

NewtonBoundary newton_boundary(const std::vector<Point>& support_in) {
  NewtonBoundary nb;
  if (support_in.empty()) throw DomainError("Newton boundary of the zero polynomial");
  nb.support = sorted_unique(support_in);
  const auto& S = nb.support;
  const int n = static_cast<int>(S[0].size());
  const int N = static_cast<int>(S.size());
  nb.n = n;

  std::set<Weight> normals;
  std::vector<int> pts, dirs;
  auto consider = [&]() {
    IntMat m(n - 1, n);
    Eigen::Index r = 0;
    for (size_t i = 1; i < pts.size(); ++i, ++r)
      for (int j = 0; j < n; ++j) m(r, j) = S[pts[i]][j] - S[pts[0]][j];
    for (int d : dirs) {
      for (int j = 0; j < n; ++j) m(r, j) = j == d ? 1 : 0;
      ++r;
    }
    Weight c = cross_product(m);
    bool pos = false, neg = false;
    for (long long x : c) {
      pos |= x > 0;
      neg |= x < 0;
    }
    if (pos == neg) return;  // zero or mixed signs
    if (neg)
      for (auto& x : c) x = -x;
    normals.insert(primitive(c));
  };
  std::function<void(int, int)> pick_dirs = [&](int start, int need) {
    if (need == 0) {
      consider();
      return;
    }
    for (int j = start; j < n; ++j) {
      dirs.push_back(j);
      pick_dirs(j + 1, need - 1);
      dirs.pop_back();
    }
  };
  std::function<void(int, int)> pick_pts = [&](int start, int need) {
    if (need == 0) {
      pick_dirs(0, n - static_cast<int>(pts.size()));
      return;
    }
    for (int i = start; i < N; ++i) {
      pts.push_back(i);
      pick_pts(i + 1, need - 1);
      pts.pop_back();
    }
  };
  for (int s = 1; s <= std::min(n, N); ++s) pick_pts(0, s);

  for (const auto& c : normals) {
    long long d = dot(c, S[0]);
    for (const auto& p : S) d = std::min(d, dot(c, p));
    Facet f;
    f.normal = c;
    f.d = d;
    for (const auto& p : S)
      if (dot(c, p) == d) f.points.push_back(p);
    std::vector<int> zd;
    for (int j = 0; j < n; ++j)
      if (c[j] == 0) zd.push_back(j);
    if (face_rank(f.points, zd, n) != n - 1) continue;
    f.compact = zd.empty();
    nb.facets.push_back(f);
  }

  // faces as intersections of facets, keyed by (points, recession directions)
  using Key = std::pair<std::vector<Point>, std::vector<int>>;
  auto facet_key = [&](const Facet& f) {
    std::vector<int> zd;
    for (int j = 0; j < n; ++j)
      if (f.normal[j] == 0) zd.push_back(j);
    return Key{f.points, zd};
  };
  std::set<Key> seen;
  std::vector<Key> queue;
  for (const auto& f : nb.facets) {
    Key k = facet_key(f);
    if (seen.insert(k).second) queue.push_back(k);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& f : nb.facets) {
      Key fk = facet_key(f);
      Key cur = queue[qi];
      Key k;
      std::set_intersection(cur.first.begin(), cur.first.end(), fk.first.begin(), fk.first.end(),
                            std::back_inserter(k.first));
      std::set_intersection(cur.second.begin(), cur.second.end(), fk.second.begin(),
                            fk.second.end(), std::back_inserter(k.second));
      if (k.first.empty()) continue;
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  for (const auto& k : seen) {
    if (!k.second.empty()) continue;
    Face face;
    face.points = k.first;
    face.weight.assign(n, 0);
    for (size_t fi = 0; fi < nb.facets.size(); ++fi) {
      const auto& f = nb.facets[fi];
      bool contains = std::includes(f.points.begin(), f.points.end(), k.first.begin(), k.first.end());
      if (!contains) continue;
      face.facets.push_back(static_cast<int>(fi));
      for (int j = 0; j < n; ++j) face.weight[j] += f.normal[j];
    }
    face.weight = primitive(face.weight);
    face.d = dot(face.weight, face.points[0]);
    face.dim = affine_dim(face.points);
    nb.faces.push_back(face);
  }
  std::sort(nb.faces.begin(), nb.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.points < b.points;
  });
  return nb;
}

NewtonBoundary newton_boundary(const MultiPolynomial& f) { return newton_boundary(f.support()); }

std::vector<Point> restricted_support(const MultiPolynomial& f, const IndexSet& I) {
  std::vector<Point> out;
  for (const auto& [e, c] : f.terms()) {
    bool inside = true;
    for (int i = 0; i < f.nvars() && inside; ++i)
      if (e[i] > 0 && std::find(I.begin(), I.end(), i) == I.end()) inside = false;
    if (!inside) continue;
    Point p;
    for (int i : I) p.push_back(e[i]);
    out.push_back(p);
  }
  return sorted_unique(out);
}

SupportMin raw_support_min(const std::vector<Point>& support, const Weight& P) {
  SupportMin r;
  r.d = dot(P, support[0]);
  for (const auto& p : support) r.d = std::min(r.d, dot(P, p));
  for (const auto& p : support)
    if (dot(P, p) == r.d) r.face.points.push_back(p);
  std::sort(r.face.points.begin(), r.face.points.end());
  r.face.weight = P;
  r.face.d = r.d;
  r.face.dim = affine_dim(r.face.points);
  return r;
}

SupportMin support_min(const std::vector<Point>& support, const Weight& P) {
  if (support.empty()) throw DomainError("support minimum on the zero polynomial");
  bool any_pos = false;
  for (long long w : P) {
    if (w < 0) throw DomainError("weight vectors are non-negative");
    any_pos |= w > 0;
  }
  if (!any_pos) throw DomainError("weight vector is zero");
  // restriction to the coordinates where P is positive must be nonzero
  bool nonzero = false;
  for (const auto& p : support) {
    bool inside = true;
    for (size_t i = 0; i < P.size(); ++i)
      if (P[i] == 0 && p[i] > 0) inside = false;
    nonzero |= inside;
  }
  if (!nonzero) throw DomainError("restriction selected by the weight is identically zero");
  return raw_support_min(support, P);
}

SupportMin support_min(const MultiPolynomial& f, const Weight& P) {
  return support_min(f.support(), P);
}

std::vector<Weight> maximal_face_weights(const std::vector<Point>& support) {
  NewtonBoundary nb = newton_boundary(support);
  std::vector<Weight> out;
  for (const auto& f : nb.facets)
    if (f.compact) out.push_back(f.normal);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> maximal_face_weights(const MultiPolynomial& f, const IndexSet& I) {
  auto s = restricted_support(f, I);
  if (s.empty()) throw DomainError("restriction is identically zero");
  return maximal_face_weights(s);
}

DualDiagram dual_diagram(const std::vector<Point>& support) {
  NewtonBoundary nb = newton_boundary(support);
  DualDiagram dd;
  dd.n = nb.n;
  for (const auto& f : nb.facets) dd.rays.push_back(f.normal);
  std::sort(dd.rays.begin(), dd.rays.end());
  // every face of the polyhedron: intersections of facets, recomputed here
  // with directions so that non-compact cones appear too
  const int n = nb.n;
  const int F = static_cast<int>(nb.facets.size());
  // a face is determined by the set of facets containing it; enumerate all
  // points and all facet-intersections via the vertices
  std::set<std::vector<int>> facet_sets;
  for (const auto& p : nb.support) {
    std::vector<int> fs;
    for (int i = 0; i < F; ++i)
      if (std::binary_search(nb.facets[i].points.begin(), nb.facets[i].points.end(), p))
        fs.push_back(i);
    if (static_cast<int>(fs.size()) == 0) continue;
    // p is a vertex iff the normals of facets through it span R^n
    IntMat m(static_cast<Eigen::Index>(fs.size()), n);
    for (size_t r = 0; r < fs.size(); ++r)
      for (int j = 0; j < n; ++j) m(static_cast<Eigen::Index>(r), j) = nb.facets[fs[r]].normal[j];
    if (rank_ll(m) == n) facet_sets.insert(fs);
  }
  for (const auto& fs : facet_sets) {
    DualCone c;
    for (int i : fs) c.generators.push_back(nb.facets[i].normal);
    std::sort(c.generators.begin(), c.generators.end());
    Weight s(n, 0);
    for (const auto& g : c.generators)
      for (int j = 0; j < n; ++j) s[j] += g[j];
    auto sm = raw_support_min(nb.support, s);
    c.face_points = sm.face.points;
    c.compact = std::all_of(s.begin(), s.end(), [](long long x) { return x > 0; });
    dd.maximal_cones.push_back(c);
  }
  // lower-dimensional cones: subsets of facets through a common face
  std::set<std::vector<Weight>> seen;
  for (const auto& mc : dd.maximal_cones) {
    const int k = static_cast<int>(mc.generators.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<Weight> gens;
      Weight s(n, 0);
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) {
          gens.push_back(mc.generators[i]);
          for (int j = 0; j < n; ++j) s[j] += mc.generators[i][j];
        }
      auto sm = raw_support_min(nb.support, s);
      // keep only genuine faces of the normal fan: the generators must be
      // exactly the facet normals containing the selected face
      std::vector<Weight> exact;
      for (const auto& f : nb.facets) {
        bool all_on = true;
        for (const auto& p : sm.face.points)
          if (!std::binary_search(f.points.begin(), f.points.end(), p)) all_on = false;
        bool dirs_ok = true;
        for (int j = 0; j < n; ++j)
          if (s[j] == 0 && f.normal[j] != 0) dirs_ok = false;
        if (all_on && dirs_ok) exact.push_back(f.normal);
      }
      std::sort(exact.begin(), exact.end());
      if (exact != gens) continue;
      if (!seen.insert(gens).second) continue;
      DualCone c;
      c.generators = gens;
      c.face_points = sm.face.points;
      c.compact = std::all_of(s.begin(), s.end(), [](long long x) { return x > 0; });
      dd.cones.push_back(c);
    }
  }
  std::sort(dd.cones.begin(), dd.cones.end(),
            [](const DualCone& a, const DualCone& b) { return a.generators < b.generators; });
  std::sort(dd.maximal_cones.begin(), dd.maximal_cones.end(),
            [](const DualCone& a, const DualCone& b) { return a.generators < b.generators; });
  return dd;
}

DualDiagram dual_diagram(const MultiPolynomial& f) { return dual_diagram(f.support()); }

bool is_convenient(const MultiPolynomial& f) {
  if (f.is_zero()) throw DomainError("convenience of the zero polynomial");
  const int n = f.nvars();
  for (int i = 0; i < n; ++i) {
    bool hit = false;
    for (const auto& [e, c] : f.terms()) {
      bool axis = e[i] > 0;
      for (int j = 0; j < n && axis; ++j)
        if (j != i && e[j] != 0) axis = false;
      hit |= axis;
    }
    if (!hit) return false;
  }
  return true;
}

bool is_pseudo_convenient(const MultiPolynomial& f) {
  return is_convenient(factor_monomial_content(f).second);
}

long long cone_lattice_volume(const std::vector<Point>& face_points) {
  return cone_volume(face_points);
}

long long chi_weight(const std::vector<Point>& support, const Weight& Q) {
  for (long long q : Q)
    if (q <= 0) throw DomainError("chi needs a strictly positive weight");
  auto sm = support_min(support, Q);
  const long long vol = cone_volume(sm.face.points);
  if (vol % sm.d != 0)
    throw InconsistencyError("cone volume " + std::to_string(vol) + " not divisible by d=" +
                             std::to_string(sm.d));
  const long long k = static_cast<long long>(Q.size());
  return ((k - 1) % 2 == 0 ? 1 : -1) * (vol / sm.d);
}

long long chi_weight(const MultiPolynomial& f, const IndexSet& I, const Weight& Q) {
  auto s = restricted_support(f, I);
  if (s.empty()) throw DomainError("restriction is identically zero");
  if (Q.size() != I.size()) throw DomainError("weight length differs from the index set");
  return chi_weight(s, Q);
}

long long torus_hypersurface_euler(const std::vector<Point>& support) {
  if (support.empty()) throw DomainError("Euler characteristic of the zero polynomial");
  const int m = static_cast<int>(support[0].size());
  auto pts = sorted_unique(support);
  if (affine_dim(pts) < m) return 0;
  const long long v = normalized_volume(pts);
  return ((m - 1) % 2 == 0 ? 1 : -1) * v;
}

long long torus_hypersurface_euler(const MultiPolynomial& h) {
  return torus_hypersurface_euler(h.support());
}

std::vector<IndexSet> nonempty_subsets(int n) {
  std::vector<IndexSet> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace milnor
