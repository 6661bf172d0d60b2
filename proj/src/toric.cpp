#include "milnor/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace milnor {
namespace {

using ConeList = std::vector<std::vector<Weight>>;

long long dot(const Weight& a, const Point& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntMat columns(const std::vector<Weight>& gens) {
  const int n = static_cast<int>(gens.size());
  IntMat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = gens[j][i];
  return m;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

long long det2(const Weight& a, const Weight& b) { return a[0] * b[1] - a[1] * b[0]; }

// Hirzebruch-Jung subdivision of a two-dimensional cone.
void hj_cones(Weight a, const Weight& b, ConeList& out) {
  while (true) {
    long long D = det2(a, b);
    if (D == 0) throw DomainError("degenerate two-dimensional cone");
    long long N = D < 0 ? -D : D;
    if (N == 1) {
      std::vector<Weight> c{a, b};
      std::sort(c.begin(), c.end());
      out.push_back(c);
      return;
    }
    // c with det(a, c) = sign(D)
    long long x = 0, y = 0;
    {
      long long r0 = a[0], r1 = a[1], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (r1 != 0) {
        long long q = floor_div(r0, r1);
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
      }
      if (r0 < 0) {
        s0 = -s0;
        t0 = -t0;
      }
      x = s0;
      y = t0;
    }
    Weight c{-y, x};
    long long dac = det2(a, c);
    if ((dac > 0) != (D > 0)) c = {y, -x};
    dac = det2(a, c);
    long long beta = det2(b, c) / dac;
    long long k = ceil_div(beta, N);
    Weight r{c[0] + k * a[0], c[1] + k * a[1]};
    std::vector<Weight> cone{a, r};
    std::sort(cone.begin(), cone.end());
    out.push_back(cone);
    a = r;
  }
}

IntMat adjugate(const IntMat& g) {
  const Eigen::Index n = g.rows();
  IntMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = g(r, c);
        }
        ++rr;
      }
      long long d = det_ll(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

// Coefficients of v in the generator basis, scaled by det (returned separately).
std::vector<long long> scaled_coords(const IntMat& adj, const Point& v) {
  std::vector<long long> a(adj.rows(), 0);
  for (Eigen::Index i = 0; i < adj.rows(); ++i)
    for (Eigen::Index j = 0; j < adj.cols(); ++j) a[i] = checked_add(a[i], checked_mul(adj(i, j), v[j]));
  return a;
}

Point parallelepiped_point(const std::vector<Weight>& gens) {
  IntMat g = columns(gens);
  const long long D = det_ll(g);
  IntMat adj = adjugate(g);
  const int n = static_cast<int>(gens.size());
  Point hi(n, 0);
  for (const auto& w : gens)
    for (int i = 0; i < n; ++i) hi[i] += w[i];
  Point v(n, 0);
  // lexicographic sweep of the bounding box, so the first hit is the smallest
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == n) {
      if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) return false;
      auto a = scaled_coords(adj, v);
      for (long long ai : a) {
        if (D > 0 && (ai < 0 || ai >= D)) return false;
        if (D < 0 && (ai > 0 || ai <= D)) return false;
      }
      return true;
    }
    for (long long x = 0; x < hi[k]; ++x) {
      v[k] = x;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) throw InconsistencyError("no lattice point in a non-unimodular cone");
  return v;
}

bool l1_before(const Point& a, const Point& b) {
  const long long sa = std::accumulate(a.begin(), a.end(), 0LL), sb = std::accumulate(b.begin(), b.end(), 0LL);
  return sa != sb ? sa < sb : a < b;
}

// Smallest nonzero lattice point a*u + b*v with 0 <= a, b < 1, or nothing when
// the pair spans a saturated lattice plane.
std::optional<Point> wall_point(const Weight& u, const Weight& v) {
  const long long m01 = u[0] * v[1] - u[1] * v[0], m02 = u[0] * v[2] - u[2] * v[0], m12 = u[1] * v[2] - u[2] * v[1];
  const long long g = std::gcd(std::gcd(m01, m02), m12);
  if (g <= 1) return std::nullopt;
  // coordinates in the plane from the minor with the largest absolute value
  int r = 0, s = 1;
  long long D = m01;
  if (std::llabs(m02) > std::llabs(D)) r = 0, s = 2, D = m02;
  if (std::llabs(m12) > std::llabs(D)) r = 1, s = 2, D = m12;
  std::optional<Point> best;
  for (long long x = 0; x <= u[0] + v[0]; ++x)
    for (long long y = 0; y <= u[1] + v[1]; ++y)
      for (long long z = 0; z <= u[2] + v[2]; ++z) {
        const Point p{x, y, z};
        // p in the plane of u, v
        if (x * m12 - y * m02 + z * m01 != 0) continue;
        // p = (A u + B v) / D
        const long long A = p[r] * v[s] - p[s] * v[r], B = u[r] * p[s] - u[s] * p[r];
        const bool inside = D > 0 ? (A >= 0 && A < D && B >= 0 && B < D) : (A <= 0 && A > D && B <= 0 && B > D);
        if (!inside || (A == 0 && B == 0)) continue;
        if (!best || l1_before(p, *best)) best = p;
      }
  return best;
}

ConeList stellar(const ConeList& cones, const Weight& v) {
  ConeList out;
  for (const auto& gens : cones) {
    IntMat g = columns(gens);
    const long long D = det_ll(g);
    auto a = scaled_coords(adjugate(g), v);
    bool inside = std::all_of(a.begin(), a.end(), [&](long long x) { return D > 0 ? x >= 0 : x <= 0; });
    if (!inside) {
      out.push_back(gens);
      continue;
    }
    for (size_t i = 0; i < gens.size(); ++i) {
      if (a[i] == 0) continue;
      auto c = gens;
      c[i] = v;
      std::sort(c.begin(), c.end());
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RegularFan finalize(int n, ConeList cones) {
  RegularFan fan;
  fan.n = n;
  std::set<Weight> rays;
  for (auto& c : cones) {
    std::sort(c.begin(), c.end());
    rays.insert(c.begin(), c.end());
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  fan.rays.assign(rays.begin(), rays.end());
  for (const auto& c : cones) {
    std::vector<int> idx;
    for (const auto& w : c)
      idx.push_back(static_cast<int>(std::lower_bound(fan.rays.begin(), fan.rays.end(), w) - fan.rays.begin()));
    fan.cones.push_back(idx);
  }
  return fan;
}

ConeList as_cone_list(const RegularFan& fan) {
  ConeList out;
  for (size_t i = 0; i < fan.cones.size(); ++i) out.push_back(fan.cone_rays(i));
  return out;
}

bool strictly_positive(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](long long x) { return x > 0; });
}

}  // namespace

Weight UnimodularCone::column(int j) const {
  Weight w(generators.rows());
  for (Eigen::Index i = 0; i < generators.rows(); ++i) w[i] = generators(i, j);
  return w;
}

std::vector<Weight> RegularFan::positive_vertices() const {
  std::vector<Weight> out;
  for (const auto& r : rays)
    if (strictly_positive(r)) out.push_back(r);
  return out;
}

std::vector<Weight> RegularFan::cone_rays(size_t i) const {
  std::vector<Weight> out;
  for (int k : cones[i]) out.push_back(rays[k]);
  return out;
}

UnimodularCone RegularFan::cone(size_t i) const { return UnimodularCone{columns(cone_rays(i))}; }

RegularFan regularize(const DualDiagram& dd) {
  const int n = dd.n;
  if (n < 1) throw DomainError("empty ambient space");
  if (n > 3) throw DomainError("regular subdivision is implemented for at most 3 variables");
  ConeList cones;
  if (n == 1) {
    cones.push_back({Weight{1}});
    return finalize(n, cones);
  }
  for (const auto& mc : dd.maximal_cones) {
    const auto& g = mc.generators;
    if (static_cast<int>(g.size()) < n) throw DomainError("dual diagram cone is not full dimensional");
    if (n == 2) {
      if (g.size() != 2) throw InconsistencyError("two-dimensional cone with more than two rays");
      hj_cones(g[0], g[1], cones);
      continue;
    }
    if (g.size() == 3) {
      cones.push_back(g);
      continue;
    }
    long long L = 1;
    for (const auto& w : g) L = std::lcm(L, std::accumulate(w.begin(), w.end(), 0LL));
    std::vector<Point> section;
    for (const auto& w : g) {
      long long s = L / std::accumulate(w.begin(), w.end(), 0LL);
      Point p;
      for (long long x : w) p.push_back(checked_mul(x, s));
      section.push_back(p);
    }
    for (const auto& simplex : triangulate_from(section, 0)) {
      std::vector<Weight> c;
      for (int i : simplex) c.push_back(g[i]);
      std::sort(c.begin(), c.end());
      cones.push_back(c);
    }
  }
  if (n == 3) {
    while (true) {
      std::sort(cones.begin(), cones.end());
      // walls first: the smallest lattice point of a non-unimodular 2-face,
      // then an interior point of the first remaining bad cone
      std::optional<Point> v;
      for (const auto& c : cones)
        for (size_t i = 0; i < c.size(); ++i)
          for (size_t j = i + 1; j < c.size(); ++j) {
            auto p = wall_point(c[i], c[j]);
            if (p && (!v || l1_before(*p, *v))) v = p;
          }
      if (!v) {
        auto bad = std::find_if(cones.begin(), cones.end(), [](const std::vector<Weight>& c) {
          long long d = det_ll(columns(c));
          return d != 1 && d != -1;
        });
        if (bad == cones.end()) break;
        v = parallelepiped_point(*bad);
      }
      if (!strictly_positive(*v)) {
        std::ostringstream os;
        os << "regular subdivision would need the boundary ray (";
        for (size_t i = 0; i < v->size(); ++i) os << (i ? "," : "") << (*v)[i];
        os << ")";
        throw DomainError(os.str());
      }
      cones = stellar(cones, *v);
    }
  }
  return finalize(n, cones);
}

RegularFan ordinary_blowup_fan(int n) {
  if (n < 2) throw DomainError("blowing up needs at least 2 variables");
  ConeList cones;
  Weight ones(n, 1);
  for (int skip = 0; skip < n; ++skip) {
    std::vector<Weight> c{ones};
    for (int j = 0; j < n; ++j)
      if (j != skip) {
        Weight e(n, 0);
        e[j] = 1;
        c.push_back(e);
      }
    cones.push_back(c);
  }
  return finalize(n, cones);
}

RegularFan subdivide_at(const RegularFan& fan, const Weight& v) {
  if (static_cast<int>(v.size()) != fan.n || !strictly_positive(v))
    throw DomainError("stellar subdivision needs a strictly positive vector");
  if (std::binary_search(fan.rays.begin(), fan.rays.end(), v)) return fan;
  return finalize(fan.n, stellar(as_cone_list(fan), v));
}

bool fan_is_unimodular(const RegularFan& fan) {
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    long long d = det_ll(fan.cone(i).generators);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool fan_covers_orthant(const RegularFan& fan) {
  const int n = fan.n;
  std::map<std::vector<int>, int> facet_count;
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i];
    if (static_cast<int>(c.size()) != n) return false;
    if (det_ll(fan.cone(i).generators) == 0) return false;
    for (int skip = 0; skip < n; ++skip) {
      std::vector<int> f;
      for (int k = 0; k < n; ++k)
        if (k != skip) f.push_back(c[k]);
      ++facet_count[f];
    }
  }
  for (const auto& [f, cnt] : facet_count) {
    bool boundary = false;
    for (int j = 0; j < n && !boundary; ++j) {
      bool all_zero = true;
      for (int r : f) all_zero &= fan.rays[r][j] == 0;
      boundary = all_zero;
    }
    if (cnt != (boundary ? 1 : 2)) return false;
  }
  // a generic interior point lies in exactly one cone
  Point probe;
  const long long primes[] = {100003, 100019, 100043, 100049};
  for (int j = 0; j < n; ++j) probe.push_back(primes[j % 4] + 7 * j);
  int hits = 0;
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    IntMat g = fan.cone(i).generators;
    const long long D = det_ll(g);
    auto a = scaled_coords(adjugate(g), probe);
    if (std::all_of(a.begin(), a.end(), [&](long long x) { return D > 0 ? x > 0 : x < 0; })) ++hits;
  }
  return hits == 1;
}

bool fan_refines(const RegularFan& fan, const std::vector<Point>& support) {
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    auto gens = fan.cone_rays(i);
    Weight s(fan.n, 0);
    for (const auto& g : gens)
      for (int j = 0; j < fan.n; ++j) s[j] += g[j];
    auto inner = raw_support_min(support, s).face.points;
    for (const auto& g : gens) {
      auto face = raw_support_min(support, g).face.points;
      if (!std::includes(face.begin(), face.end(), inner.begin(), inner.end())) return false;
    }
  }
  return true;
}

std::string fan_to_text(const RegularFan& fan) {
  std::ostringstream os;
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    bool first = true;
    for (const auto& w : fan.cone_rays(i)) {
      os << (first ? "" : " ") << "(";
      for (size_t j = 0; j < w.size(); ++j) os << (j ? "," : "") << w[j];
      os << ")";
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

RegularFan fan_from_text(const std::string& text) {
  ConeList cones;
  std::istringstream is(text);
  std::string line;
  int n = -1;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::vector<Weight> cone;
    size_t pos = 0;
    while ((pos = line.find('(', pos)) != std::string::npos) {
      size_t end = line.find(')', pos);
      if (end == std::string::npos) throw ParseError("fan line " + std::to_string(lineno) + ": missing ')'");
      Weight w;
      std::stringstream tuple(line.substr(pos + 1, end - pos - 1));
      std::string tok;
      while (std::getline(tuple, tok, ',')) {
        try {
          w.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          throw ParseError("fan line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
      }
      cone.push_back(w);
      pos = end + 1;
    }
    if (n < 0) n = static_cast<int>(cone.size());
    if (static_cast<int>(cone.size()) != n)
      throw ParseError("fan line " + std::to_string(lineno) + ": wrong number of generators");
    for (const auto& w : cone)
      if (static_cast<int>(w.size()) != n)
        throw ParseError("fan line " + std::to_string(lineno) + ": wrong tuple length");
    cones.push_back(cone);
  }
  if (n <= 0) throw ParseError("empty fan");
  return finalize(n, cones);
}

PullbackFactorization chart_pullback(const MultiPolynomial& f, const UnimodularCone& sigma,
                                     std::vector<std::string> new_vars) {
  for (Eigen::Index i = 0; i < sigma.generators.size(); ++i)
    if (sigma.generators.data()[i] < 0) throw DomainError("chart matrix has a negative entry");
  MultiPolynomial pulled = monomial_substitute(f, sigma.generators, std::move(new_vars));
  auto [nu, strict] = factor_monomial_content(pulled);
  return PullbackFactorization{sigma, nu, strict};
}

MultiPolynomial exceptional_equation(const PullbackFactorization& pb, int which) {
  if (which < 0 || which >= pb.strict_transform.nvars()) throw DomainError("divisor index out of range");
  Weight P = pb.chart.column(which);
  if (!strictly_positive(P)) throw DomainError("exceptional divisor needs a strictly positive weight");
  MultiPolynomial g = pb.strict_transform.substitute(which, Scalar(0)).drop_vars({which});
  if (g.is_zero()) throw InconsistencyError("strict transform vanishes on the exceptional divisor");
  return g;
}

DivisorAdjacency divisor_adjacency(const RegularFan& fan, const MultiPolynomial& f) {
  const auto support = f.support();
  DivisorAdjacency out;
  std::set<std::pair<int, int>> pairs;
  for (const auto& c : fan.cones)
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) pairs.insert({c[i], c[j]});
  for (const auto& [a, b] : pairs) {
    const Weight& P = fan.rays[a];
    const Weight& Q = fan.rays[b];
    out.hat.push_back({P, Q});
    Weight s(fan.n);
    for (int j = 0; j < fan.n; ++j) s[j] = P[j] + Q[j];
    if (raw_support_min(support, s).face.dim >= 1) out.strict.push_back({P, Q});
  }
  for (const auto& P : fan.positive_vertices())
    out.meets_strict_transform.push_back({P, raw_support_min(support, P).face.dim >= 1});
  return out;
}

namespace {

// Sum over cones tau containing the ray of [orbit term - hypersurface term];
// only_free restricts to tau whose other rays have d = 0.
long long orbit_sum(const std::vector<Point>& support, const RegularFan& fan, const Weight& P,
                    bool only_free, bool with_orbits) {
  const int n = fan.n;
  auto it = std::lower_bound(fan.rays.begin(), fan.rays.end(), P);
  if (it == fan.rays.end() || *it != P) throw DomainError("weight is not a ray of the fan");
  const int ip = static_cast<int>(it - fan.rays.begin());
  std::vector<long long> dval;
  for (const auto& r : fan.rays) dval.push_back(raw_support_min(support, r).d);
  std::set<std::vector<int>> seen;
  long long chi = 0;
  for (const auto& c : fan.cones) {
    if (std::find(c.begin(), c.end(), ip) == c.end()) continue;
    std::vector<int> others;
    for (int r : c)
      if (r != ip) others.push_back(r);
    const int k = static_cast<int>(others.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> tau{ip};
      bool ok = true;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) {
          if (only_free && dval[others[i]] != 0) ok = false;
          tau.push_back(others[i]);
        }
      if (!ok) continue;
      std::sort(tau.begin(), tau.end());
      if (!seen.insert(tau).second) continue;
      const int m = n - static_cast<int>(tau.size());
      if (m == 0) {
        if (with_orbits) chi += 1;
        continue;
      }
      Weight s(n, 0);
      for (int r : tau)
        for (int j = 0; j < n; ++j) s[j] += fan.rays[r][j];
      auto face = raw_support_min(support, s).face.points;
      std::vector<Point> projected;
      for (const auto& nu : face) {
        Point q;
        for (int r : c)
          if (std::find(tau.begin(), tau.end(), r) == tau.end()) q.push_back(dot(fan.rays[r], nu));
        projected.push_back(q);
      }
      long long e = torus_hypersurface_euler(projected);
      chi += with_orbits ? -e : e;
    }
  }
  return chi;
}

}  // namespace

long long acampo_divisor_euler(const std::vector<Point>& support, const RegularFan& fan,
                               const Weight& P) {
  return orbit_sum(support, fan, P, true, true);
}

long long strict_divisor_euler(const std::vector<Point>& support, const RegularFan& fan,
                               const Weight& P) {
  return orbit_sum(support, fan, P, false, false);
}

CyclotomicProduct zeta_acampo(const std::vector<Point>& support, const RegularFan& fan) {
  if (support.empty()) throw DomainError("zeta function of the zero polynomial");
  if (!fan_refines(fan, support)) throw DomainError("fan is not admissible for the Newton diagram");
  CyclotomicProduct z;
  for (const auto& P : fan.positive_vertices()) {
    long long d = raw_support_min(support, P).d;
    if (d == 0) throw DomainError("polynomial does not vanish at the origin");
    z.multiply_factor(d, -acampo_divisor_euler(support, fan, P));
  }
  return z;
}

CyclotomicProduct zeta_acampo(const MultiPolynomial& f, const RegularFan& fan) {
  return zeta_acampo(f.support(), fan);
}

}  // namespace milnor
