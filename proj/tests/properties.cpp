#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "milnor/almost_nd.hpp"
#include "milnor/nondegeneracy.hpp"
#include "milnor/plumbing.hpp"
#include "milnor/polytope.hpp"
#include "milnor/toric.hpp"
#include "milnor/zeta.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace props {

std::string Result::summary() const {
  std::ostringstream os;
  os << name << ": " << cases - failures << "/" << cases << " cases";
  if (failures) os << " (first failure: " << first_failure << ")";
  return os.str();
}

namespace {

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

long long nonzero(Rng& rng, long long r) {
  long long c = 0;
  while (c == 0) c = uniform(rng, -r, r);
  return c;
}

void fail(Result& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

// Convenient germ: an axis monomial per variable plus random interior terms.
MultiPolynomial random_convenient(Rng& rng, int n, int max_terms) {
  const auto vars = default_vars("x", n);
  MultiPolynomial f(vars);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = uniform(rng, 2, 6);
    f.add_term(e, Scalar(nonzero(rng, 3)));
  }
  const int extra = static_cast<int>(uniform(rng, 0, max_terms - n));
  for (int k = 0; k < extra; ++k) {
    Exponent e(n);
    long long s = 0;
    for (auto& x : e) s += (x = uniform(rng, 0, 4));
    if (s < 2) continue;
    f.add_term(e, Scalar(nonzero(rng, 3)));
  }
  return f;
}

bool verified(const MultiPolynomial& f) { return nondegeneracy_check(f).overall == Verdict::verified; }

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// Ray r projected to the simplex x1+...+xn = 1 has denominator |r|_1; a
// unimodular simplicial cone covers |det| / prod |r_i|_1 of the simplex.
Rational covered_fraction(const RegularFan& fan) {
  Rational sum = 0;
  for (const auto& c : fan.cones) {
    std::vector<std::vector<long long>> m;
    Rational denom = 1;
    for (int i : c) {
      m.push_back(fan.rays[i]);
      long long s = 0;
      for (long long x : fan.rays[i]) s += x;
      denom *= s;
    }
    sum += Rational(std::llabs(oracle::det_ll(m))) / denom;
  }
  return sum;
}

// A cone lies in one cone of the normal fan iff some support point attains
// the minimum at every generator.
bool cone_refines(const std::vector<Weight>& gens, const std::vector<Point>& support) {
  std::vector<std::set<size_t>> argmins;
  for (const auto& g : gens) {
    long long best = 0;
    std::set<size_t> at;
    for (size_t i = 0; i < support.size(); ++i) {
      const long long v = weighted_degree(support[i], g);
      if (at.empty() || v < best) {
        best = v;
        at = {i};
      } else if (v == best) {
        at.insert(i);
      }
    }
    argmins.push_back(at);
  }
  for (size_t i : argmins[0]) {
    bool all = true;
    for (const auto& a : argmins) all = all && a.count(i);
    if (all) return true;
  }
  return false;
}

}  // namespace

Result acampo_matches_varchenko(std::uint64_t seed, int count) {
  Result r{"A'Campo formula equals Varchenko formula"};
  Rng rng(seed);
  int attempts = 0;
  while (r.cases < count && attempts++ < 50 * count) {
    const int n = static_cast<int>(uniform(rng, 2, 3));
    MultiPolynomial f = random_convenient(rng, n, 8);
    if (f.size() > 8 || !verified(f)) continue;
    ++r.cases;
    try {
      const RegularFan fan = regularize(dual_diagram(f));
      const auto a = zeta_acampo(f, fan), v = varchenko_zeta(f);
      if (a != v) fail(r, f.render() + ": " + render_zeta(a) + " vs " + render_zeta(v));
    } catch (const std::exception& e) {
      fail(r, f.render() + ": " + e.what());
    }
  }
  return r;
}

Result varchenko_matches_milnor_orlik(std::uint64_t seed, int count) {
  Result r{"Varchenko formula equals Milnor-Orlik eigenvalues"};
  Rng rng(seed);
  // Weighted homogeneous families with known weights u_i / N.
  struct Family {
    std::string text;
    std::vector<std::string> vars;
    std::vector<long long> u;
    long long N;
  };
  std::vector<Family> fams{
      {"x^3+y^4", {"x", "y"}, {4, 3}, 12},                 // E6
      {"x^3+x*y^3", {"x", "y"}, {6, 4}, 18},               // E7
      {"x^3+y^5", {"x", "y"}, {5, 3}, 15},                 // E8
      // D5 and D6 made convenient by a monomial far above the determinacy order
      {"x^2*y+y^4+x^10", {"x", "y"}, {3, 2}, 8},
      {"x^2*y+y^5+z^2+x^12", {"x", "y", "z"}, {4, 2, 5}, 10},
      {"x^3+x*y^3+z^4+y^30", {"x", "y", "z"}, {12, 8, 9}, 36},
  };
  for (const auto& fam : fams) {
    ++r.cases;
    try {
      auto f = parse_polynomial(fam.text, fam.vars);
      auto got = oracle::eigenvalues_from_zeta(varchenko_zeta(f), static_cast<int>(fam.vars.size()));
      if (got != oracle::milnor_orlik(fam.u, fam.N)) fail(r, fam.text);
    } catch (const std::exception& e) {
      fail(r, fam.text + ": " + e.what());
    }
  }
  // Brieskorn-Pham sums with random exponents.
  while (r.cases < count) {
    const int n = static_cast<int>(uniform(rng, 2, 3));
    std::vector<long long> a(n);
    long long N = 1;
    std::string text;
    const auto vars = default_vars("x", n);
    for (int i = 0; i < n; ++i) {
      a[i] = uniform(rng, 2, 7);
      N = std::lcm(N, a[i]);
      text += (i ? "+" : "") + vars[i] + "^" + std::to_string(a[i]);
    }
    std::vector<long long> u;
    for (long long ai : a) u.push_back(N / ai);
    ++r.cases;
    try {
      auto z = varchenko_zeta(parse_polynomial(text, vars));
      auto got = oracle::eigenvalues_from_zeta(z, n);
      auto want = oracle::milnor_orlik(u, N);
      long long mu = 1;
      for (long long ai : a) mu *= ai - 1;
      if (got != want || oracle::total(want) != mu || milnor_from_zeta(z, n) != mu) fail(r, text);
    } catch (const std::exception& e) {
      fail(r, text + ": " + e.what());
    }
  }
  return r;
}

Result chi_integrality(std::uint64_t seed, int count) {
  Result r{"chi(Q) is an exact integer"};
  Rng rng(seed);
  while (r.cases < count) {
    const int n = static_cast<int>(uniform(rng, 2, 3));
    MultiPolynomial f = random_convenient(rng, n, 8);
    for (const auto& I : nonempty_subsets(n)) {
      const auto s = restricted_support(f, I);
      if (s.empty()) continue;
      for (const auto& Q : maximal_face_weights(f, I)) {
        ++r.cases;
        try {
          const long long chi = chi_weight(f, I, Q);
          const auto sm = support_min(s, Q);
          const long long vol = cone_volume(sm.face.points);
          if (std::llabs(chi) * sm.d != vol) fail(r, f.render() + " Q=" + weight_text(Q));
        } catch (const std::exception& e) {
          fail(r, f.render() + " Q=" + weight_text(Q) + ": " + e.what());
        }
      }
    }
  }
  return r;
}

Result suspension_identities(std::uint64_t seed, int count) {
  Result r{"suspension keeps the normalized volume and flips chi"};
  Rng rng(seed);
  while (r.cases < count) {
    const int m = static_cast<int>(uniform(rng, 1, 2));
    const int k = static_cast<int>(uniform(rng, m + 1, 6));
    std::vector<Point> s;
    for (int i = 0; i < k; ++i) {
      Point p(m);
      for (auto& x : p) x = uniform(rng, 0, 4);
      s.push_back(p);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (affine_dim(s) < m) continue;
    std::vector<Point> t;
    for (const auto& p : s) {
      Point q = p;
      q.push_back(0);
      t.push_back(q);
    }
    Point w(m + 1, 0);
    w[m] = 1;
    t.push_back(w);
    ++r.cases;
    try {
      const long long vh = normalized_volume(s), vhw = normalized_volume(t);
      const long long eh = torus_hypersurface_euler(s), ehw = torus_hypersurface_euler(t);
      bool ok = vh == vhw && ehw == -eh;
      if (m == 2) {
        std::vector<std::pair<long long, long long>> planar;
        for (const auto& p : s) planar.push_back({p[0], p[1]});
        ok = ok && oracle::hull_area2(planar) == vh;
      } else {
        const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
        ok = ok && (*hi)[0] - (*lo)[0] == vh;
      }
      if (!ok) fail(r, "support of size " + std::to_string(s.size()) + " in dimension " + std::to_string(m));
    } catch (const std::exception& e) {
      fail(r, e.what());
    }
  }
  return r;
}

Result hat_weight_identities(std::uint64_t seed, int count) {
  Result r{"hat weight degree and chi identities"};
  Rng rng(seed);
  while (r.cases < count) {
    MultiPolynomial g = random_convenient(rng, 2, 6);
    if (!verified(g)) continue;
    const long long d = uniform(rng, 1, 4);
    for (const auto& Q : maximal_face_weights(g, {0, 1})) {
      ++r.cases;
      try {
        const long long dQ = support_min(g, Q).d;
        const HatWeight H = hat_weight(Q, dQ);
        const std::vector<std::string> v3{"x1", "x2", "w"};
        MultiPolynomial lifted(v3);
        const MultiPolynomial gQ = face_part(g, Q);
        for (const auto& [e, c] : gQ.terms()) lifted.add_term({e[0], e[1], d}, c);
        lifted.add_term({0, 0, d + 1}, Scalar(1));
        const long long dhat = support_min(lifted, H.weight).d;
        const long long chi_hat = chi_weight(lifted.support(), primitive(H.weight));
        const long long chi = chi_weight(g, {0, 1}, Q);
        if (dhat != dQ * (1 + d) || chi_hat != -chi)
          fail(r, g.render() + " Q=" + weight_text(Q) + " d=" + std::to_string(d) + ": d^=" + std::to_string(dhat) +
                      " chi^=" + std::to_string(chi_hat) + " chi=" + std::to_string(chi));
      } catch (const std::exception& e) {
        fail(r, g.render() + ": " + e.what());
      }
    }
  }
  return r;
}

Result regularize_is_regular(std::uint64_t seed, int count) {
  Result r{"regular subdivisions are unimodular, cover the orthant and refine"};
  Rng rng(seed);
  while (r.cases < count) {
    const int n = static_cast<int>(uniform(rng, 2, 3));
    MultiPolynomial f = random_convenient(rng, n, 7);
    ++r.cases;
    try {
      const RegularFan fan = regularize(dual_diagram(f));
      bool ok = covered_fraction(fan) == 1;
      for (size_t i = 0; i < fan.cones.size() && ok; ++i) {
        std::vector<std::vector<long long>> m;
        for (int j : fan.cones[i]) m.push_back(fan.rays[j]);
        ok = std::llabs(oracle::det_ll(m)) == 1 && cone_refines(fan.cone_rays(i), f.support());
      }
      ok = ok && fan_is_unimodular(fan) && fan_covers_orthant(fan) && fan_refines(fan, f.support());
      if (!ok) fail(r, f.render());
    } catch (const std::exception& e) {
      fail(r, f.render() + ": " + e.what());
    }
  }
  return r;
}

namespace {

ResolutionGraph random_tree(Rng& rng, int nodes) {
  ResolutionGraph g;
  for (int i = 0; i < nodes; ++i) {
    GraphNode v;
    v.id = "v" + std::to_string(i);
    v.genus = uniform(rng, 0, 3) == 0 ? static_cast<int>(uniform(rng, 1, 2)) : 0;
    v.self_intersection = -uniform(rng, 1, 5);
    g.nodes.push_back(v);
    if (i > 0) g.edges.push_back({static_cast<int>(uniform(rng, 0, i - 1)), i, 1});
  }
  return g;
}

std::vector<std::vector<long long>> to_rows(const IntMat& m) {
  std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

Result mumford_matches_smith(std::uint64_t seed, int count) {
  Result r{"Mumford presentation agrees with the Smith form"};
  Rng rng(seed);
  while (r.cases < count) {
    const int nodes = static_cast<int>(uniform(rng, 1, 12));
    ResolutionGraph g = random_tree(rng, nodes);
    ++r.cases;
    try {
      const AbelianGroup a = h1_plumbed(g);
      const AbelianGroup b = cokernel_hermite(mumford_presentation(g).relations);
      bool ok = a == b;
      if (nodes <= 6) {
        long long genus = 0;
        for (const auto& v : g.nodes) genus += v.genus;
        std::vector<long long> inv = oracle::invariant_factors(to_rows(intersection_matrix(g)));
        std::vector<BigInt> torsion;
        long long free = 2 * genus + nodes - static_cast<long long>(inv.size());
        for (long long x : inv)
          if (x > 1) torsion.push_back(x);
        ok = ok && a.free_rank == free && a.torsion == torsion;
      }
      if (!ok) fail(r, graph_to_text(g));
    } catch (const std::exception& e) {
      fail(r, e.what());
    }
  }
  return r;
}

Result smith_certificates(std::uint64_t seed, int count) {
  Result r{"Smith normal form certificates"};
  Rng rng(seed);
  while (r.cases < count) {
    const int rows = static_cast<int>(uniform(rng, 1, 8)), cols = static_cast<int>(uniform(rng, 1, 8));
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = uniform(rng, 0, 3) == 0 ? 0 : uniform(rng, -9, 9);
    ++r.cases;
    try {
      const SmithForm s = smith_normal_form(m);
      bool ok = verify_smith(m, s);
      for (size_t k = 1; k < s.invariant_factors.size(); ++k)
        ok = ok && s.invariant_factors[k] % s.invariant_factors[k - 1] == 0;
      if (rows <= 5 && cols <= 5) {
        const auto want = oracle::invariant_factors(to_rows(m));
        ok = ok && want.size() == s.invariant_factors.size();
        for (size_t k = 0; ok && k < want.size(); ++k) ok = s.invariant_factors[k] == want[k];
      }
      if (!ok) {
        std::ostringstream os;
        os << m;
        fail(r, os.str());
      }
    } catch (const std::exception& e) {
      fail(r, e.what());
    }
  }
  return r;
}

namespace {

// a(x) + y b(x) [+ z c(x)] with every univariate factor split over Z, so the
// number of torus points over F_p is a polynomial in p.
struct SplitCase {
  int m = 2;
  std::vector<std::vector<long long>> roots;  // of a, b and c
  std::vector<long long> lead;
  std::vector<long long> shift;               // power of x multiplying each
};

std::vector<long long> expand(const std::vector<long long>& roots, long long lead) {
  std::vector<long long> c{lead};
  for (long long r : roots) {
    std::vector<long long> next(c.size() + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

MultiPolynomial split_polynomial(const SplitCase& sc) {
  const auto vars = default_vars("x", sc.m);
  MultiPolynomial h(vars);
  for (int k = 0; k < sc.m; ++k) {
    const auto c = expand(sc.roots[k], sc.lead[k]);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Exponent e(sc.m, 0);
      e[0] = static_cast<long long>(i) + sc.shift[k];
      if (k > 0) e[k] = 1;
      h.add_term(e, Scalar(c[i]));
    }
  }
  return h;
}

// h is linear in its last variable: enumerate the others over F_p^*, then
// the last one is determined unless both of its parts vanish.
long long count_torus_points(const MultiPolynomial& h, long long p) {
  const int m = h.nvars();
  long long top = 0;
  for (const auto& [e, c] : h.terms())
    for (long long x : e) top = std::max(top, x);
  std::vector<std::vector<long long>> pw(p, std::vector<long long>(top + 1, 1));
  for (long long x = 1; x < p; ++x)
    for (long long k = 1; k <= top; ++k) pw[x][k] = pw[x][k - 1] * x % p;
  struct T {
    long long c;
    Exponent e;
  };
  std::vector<T> rest, lin;
  for (const auto& [e, c] : h.terms()) {
    long long v = static_cast<long long>(numerator(c.to_rational()) % p);
    if (v < 0) v += p;
    (e[m - 1] == 0 ? rest : lin).push_back({v, e});
  }
  auto eval = [&](const std::vector<T>& ts, const std::vector<long long>& x) {
    long long s = 0;
    for (const auto& t : ts) {
      long long v = t.c;
      for (int i = 0; i + 1 < m; ++i) v = v * pw[x[i]][t.e[i]] % p;
      s += v;
    }
    return s % p;
  };
  long long n = 0;
  std::vector<long long> x(m - 1, 1);
  while (true) {
    const long long a = eval(rest, x), b = eval(lin, x);
    if (b != 0) n += a != 0;
    else if (a == 0) n += p - 1;
    int i = 0;
    while (i < m - 1 && ++x[i] == p) x[i++] = 1;
    if (i == m - 1) break;
  }
  return n;
}

}  // namespace

Result torus_euler_matches_point_count(std::uint64_t seed, int count) {
  Result r{"torus Euler characteristic matches point counts over F_p"};
  Rng rng(seed);
  const std::vector<long long> primes{1009, 1013, 1019, 1021, 1031};
  int attempts = 0;
  while (r.cases < count && attempts++ < 100 * count) {
    SplitCase sc;
    sc.m = r.cases % 4 == 3 ? 3 : 2;
    std::set<long long> used;
    for (int k = 0; k < sc.m; ++k) {
      std::vector<long long> roots;
      const int deg = static_cast<int>(uniform(rng, 0, 2));
      for (int i = 0; i < deg; ++i) {
        long long x = 0;
        while (x == 0 || used.count(x)) x = uniform(rng, -6, 6);
        used.insert(x);
        roots.push_back(x);
      }
      sc.roots.push_back(roots);
      sc.lead.push_back(nonzero(rng, 3));
      sc.shift.push_back(uniform(rng, 0, 2));
    }
    MultiPolynomial h = split_polynomial(sc);
    if (affine_dim(h.support()) < sc.m) continue;
    if (nondegeneracy_check_polytope(h).overall != Verdict::verified) continue;
    ++r.cases;
    try {
      // Count over m+1 primes, interpolate a degree m-1 polynomial in p from
      // the first m values, require the last to agree, then evaluate at 1.
      const auto& ps = primes;
      std::vector<long long> xs, ys;
      for (int i = 0; i <= sc.m; ++i) {
        xs.push_back(ps[i]);
        ys.push_back(count_torus_points(h, ps[i]));
      }
      std::vector<long long> fx(xs.begin(), xs.end() - 1), fy(ys.begin(), ys.end() - 1);
      const Rational check = oracle::interpolate(fx, fy, xs.back());
      const Rational chi = oracle::interpolate(fx, fy, 1);
      if (check != ys.back()) {
        fail(r, h.render() + ": counts are not polynomial in p");
      } else if (chi != torus_hypersurface_euler(h)) {
        fail(r, h.render() + ": point count gives " + to_string(chi) + ", volume gives " +
                    std::to_string(torus_hypersurface_euler(h)));
      }
    } catch (const std::exception& e) {
      fail(r, h.render() + ": " + e.what());
    }
  }
  return r;
}

}  // namespace props
