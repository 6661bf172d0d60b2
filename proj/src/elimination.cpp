#include "milnor/elimination.hpp"

#include <algorithm>
#include <sstream>

namespace milnor {
namespace {

// Field and generator value for one irreducible factor c of degree >= 2:
// with alpha = a*x the minimal polynomial becomes monic.
std::pair<FieldPtr, Scalar> root_of_factor(const std::vector<BigInt>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  const BigInt& a = c.back();
  std::vector<BigInt> m(d + 1);
  for (int k = d; k >= 0; --k) {
    // coefficient of t^k is c_k * a^{d-1-k}
    if (k == d) {
      m[k] = 1;
      continue;
    }
    BigInt p = 1;
    for (int j = 0; j < d - 1 - k; ++j) p *= a;
    m[k] = c[k] * p;
  }
  FieldPtr K = make_field(m);
  Scalar x = Scalar::generator(K) / Scalar(Rational(a));
  return {K, x};
}

KPoly eval_to_univariate(const MultiPolynomial& f, int keep, int drop, const Scalar& value) {
  return f.substitute(drop, value).as_univariate(keep);
}

Scalar sylvester(const KPoly& a, int da, const KPoly& b, int db) {
  if (da == 0 && db == 0) return Scalar(1);
  const int N = da + db;
  MatX<Scalar> m = MatX<Scalar>::Constant(N, N, Scalar(0));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m(r, r + k) = a.coeff(da - k);
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m(db + r, r + k) = b.coeff(db - k);
  return det_bareiss<Scalar>(m);
}

KPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  // Newton divided differences
  const size_t n = xs.size();
  std::vector<Scalar> c(ys);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  KPoly p = KPoly::constant(c[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    p = p * KPoly(std::vector<Scalar>{-xs[i], Scalar(1)}) + KPoly::constant(c[i]);
  }
  return p;
}

std::vector<AlgebraicPoint> points_over_factor(const std::vector<BigInt>& factor) {
  std::vector<AlgebraicPoint> out;
  if (factor.size() == 2) {
    AlgebraicPoint p;
    p.coords = {Scalar(Rational(-factor[0], factor[1]))};
    out.push_back(p);
    return out;
  }
  auto [K, x] = root_of_factor(factor);
  for (int k = 0; k < K->degree(); ++k) {
    AlgebraicPoint p;
    p.coords = {x};
    p.field = K;
    p.root_index = k;
    out.push_back(p);
  }
  return out;
}

bool point_less(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  const bool ra = !a.field, rb = !b.field;
  if (ra != rb) return ra;
  if (ra) {
    for (size_t i = 0; i < a.coords.size(); ++i) {
      Rational x = a.coords[i].to_rational(), y = b.coords[i].to_rational();
      if (x != y) return x < y;
    }
    return false;
  }
  if (a.field->minpoly() != b.field->minpoly()) return a.field->minpoly() < b.field->minpoly();
  if (a.root_index != b.root_index) return a.root_index < b.root_index;
  return false;
}

std::vector<AlgebraicPoint> singular_univariate(const MultiPolynomial& g) {
  QPoly p = to_qpoly(g.as_univariate(0));
  if (p.is_zero()) throw InconsistencyError("zero polynomial has a non-isolated singular locus");
  QPoly G = QPoly::gcd(p, p.derivative());
  if (G.degree() <= 0) return {};
  return rational_roots_as_points(G);
}

std::vector<AlgebraicPoint> singular_bivariate(const MultiPolynomial& g, int depth);

std::vector<AlgebraicPoint> sheared(const MultiPolynomial& g, int depth) {
  if (depth > 6) throw InconsistencyError("could not separate singular points by shearing");
  // x = x' - lambda*y
  for (long long lambda = 1; lambda <= 7; ++lambda) {
    MatX<Scalar> L(2, 2);
    L << Scalar(1), Scalar(-lambda), Scalar(0), Scalar(1);
    MultiPolynomial h = linear_change(g, L, {0, 1});
    std::vector<AlgebraicPoint> pts;
    try {
      pts = singular_bivariate(h, depth + 1);
    } catch (const DomainError&) {
      continue;
    }
    for (auto& p : pts) p.coords[0] = p.coords[0] - Scalar(lambda) * p.coords[1];
    return pts;
  }
  throw InconsistencyError("could not separate singular points by shearing");
}

std::vector<AlgebraicPoint> singular_bivariate(const MultiPolynomial& g, int depth) {
  const MultiPolynomial gx = g.derivative(0), gy = g.derivative(1);
  if (g.degree_in(1) <= 0) {
    // g depends on x only: singular set is a union of vertical lines
    QPoly p = to_qpoly(g.as_univariate(0));
    if (QPoly::gcd(p, p.derivative()).degree() > 0)
      throw InconsistencyError("singular locus contains a line");
    return {};
  }
  KPoly r1 = resultant(g, gx, 1), r2 = resultant(g, gy, 1);
  KPoly r = r1.is_zero() ? r2 : (r2.is_zero() ? r1 : KPoly::gcd(r1, r2));
  if (r.is_zero()) throw InconsistencyError("singular locus has positive dimension");
  if (r.degree() <= 0) return {};
  std::vector<AlgebraicPoint> out;
  for (const auto& fac : factor_over_q(to_qpoly(r))) {
    for (const auto& xp : points_over_factor(fac.poly)) {
      if (xp.field && xp.root_index > 0) continue;  // handled with index 0
      const Scalar& x0 = xp.coords[0];
      KPoly G = KPoly::gcd(eval_to_univariate(g, 1, 0, x0), eval_to_univariate(gx, 1, 0, x0));
      G = KPoly::gcd(G, eval_to_univariate(gy, 1, 0, x0));
      if (G.is_zero()) throw InconsistencyError("singular locus contains a line");
      if (G.degree() <= 0) continue;
      if (!xp.field) {
        for (const auto& yp : rational_roots_as_points(to_qpoly(G))) {
          AlgebraicPoint p = yp;
          p.coords = {x0, yp.coords[0]};
          out.push_back(p);
        }
        continue;
      }
      if (G.degree() > 1) return sheared(g, depth);
      Scalar y0 = -G.coeff(0) / G.coeff(1);
      for (int k = 0; k < xp.field->degree(); ++k) {
        AlgebraicPoint p;
        p.coords = {x0, y0};
        p.field = xp.field;
        p.root_index = k;
        out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

bool AlgebraicPoint::in_torus() const {
  return std::none_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::complex<double>> AlgebraicPoint::approx() const {
  std::vector<std::complex<double>> out;
  for (const auto& c : coords) out.push_back(c.approx(root_index));
  return out;
}

std::string AlgebraicPoint::describe(const std::string& gen) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) os << (i ? ", " : "") << coords[i].to_string(gen);
  os << ")";
  if (field) os << " where " << gen << " is root " << root_index << " of " << field->minpoly_string(gen);
  return os.str();
}

QPoly to_qpoly(const KPoly& p) {
  std::vector<Rational> c;
  for (const auto& s : p.coeffs()) c.push_back(s.to_rational());
  return QPoly(c);
}

std::vector<AlgebraicPoint> rational_roots_as_points(const QPoly& p) {
  std::vector<AlgebraicPoint> out;
  for (const auto& f : factor_over_q(p))
    for (const auto& pt : points_over_factor(f.poly)) out.push_back(pt);
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

KPoly resultant(const MultiPolynomial& a, const MultiPolynomial& b, int var) {
  if (a.nvars() != 2 || b.nvars() != 2) throw DomainError("resultant needs bivariate input");
  const int other = 1 - var;
  const long long da = a.degree_in(var), db = b.degree_in(var);
  if (a.is_zero() || b.is_zero()) return KPoly();
  if (da == 0 && db == 0) return KPoly::constant(Scalar(1));
  const long long bound = da * std::max(b.degree_in(other), 0LL) + db * std::max(a.degree_in(other), 0LL);
  std::vector<Scalar> xs, ys;
  for (long long i = 0; i <= bound; ++i) {
    Scalar x0(i);
    xs.push_back(x0);
    ys.push_back(sylvester(eval_to_univariate(a, var, other, x0), static_cast<int>(da),
                           eval_to_univariate(b, var, other, x0), static_cast<int>(db)));
  }
  return interpolate(xs, ys);
}

std::vector<AlgebraicPoint> singular_points(const MultiPolynomial& g) {
  if (g.field()) throw DomainError("singular point search needs rational coefficients");
  if (g.is_zero()) throw InconsistencyError("zero polynomial has a non-isolated singular locus");
  std::vector<AlgebraicPoint> out;
  if (g.nvars() == 1) {
    out = singular_univariate(g);
  } else if (g.nvars() == 2) {
    out = singular_bivariate(g, 0);
  } else {
    throw DomainError("singular point search supports at most two variables");
  }
  std::sort(out.begin(), out.end(), point_less);
  for (const auto& p : out) {
    if (!g.evaluate(p.coords).is_zero()) throw InconsistencyError("singular point check failed");
    for (int v = 0; v < g.nvars(); ++v)
      if (!g.derivative(v).evaluate(p.coords).is_zero())
        throw InconsistencyError("singular point check failed");
  }
  return out;
}

}  // namespace milnor
