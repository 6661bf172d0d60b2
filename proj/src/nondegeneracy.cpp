#include "milnor/nondegeneracy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "milnor/elimination.hpp"

namespace milnor {
namespace {

// Integer column operations bringing the rows of m into the first k columns.
IntMat column_reduce(IntMat m, int& rank) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index col = 0;
  for (Eigen::Index r = 0; r < rows && col < cols; ++r) {
    while (true) {
      Eigen::Index piv = -1;
      for (Eigen::Index c = col; c < cols; ++c)
        if (m(r, c) != 0 && (piv < 0 || std::llabs(m(r, c)) < std::llabs(m(r, piv)))) piv = c;
      if (piv < 0) break;
      m.col(col).swap(m.col(piv));
      bool done = true;
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        long long q = m(r, c) / m(r, col);
        for (Eigen::Index i = 0; i < rows; ++i) m(i, c) = checked_add(m(i, c), -checked_mul(q, m(i, col)));
        if (m(r, c) != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }
  rank = static_cast<int>(col);
  return m.leftCols(col);
}

long long fp_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
    b = static_cast<long long>(static_cast<__int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

long long fp_value(const Rational& q, long long p) {
  long long num = static_cast<long long>(BigInt(numerator(q) % p).convert_to<long long>());
  long long den = static_cast<long long>(BigInt(denominator(q) % p).convert_to<long long>());
  if (den == 0) return -1;
  if (num < 0) num += p;
  return static_cast<long long>(static_cast<__int128>(num) * fp_pow(den, p - 2, p) % p);
}

// Exhaustive search for a torus point of h = dh = 0 over F_p.
bool fp_witness(const MultiPolynomial& h, long long p, std::vector<long long>& point) {
  const int k = h.nvars();
  struct Term {
    std::vector<long long> e;
    long long c;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : h.terms()) {
    long long v = fp_value(c.to_rational(), p);
    if (v < 0) return false;
    terms.push_back({e, v});
  }
  point.assign(k, 1);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) {
      std::vector<long long> grad(k, 0);
      long long val = 0;
      for (const auto& t : terms) {
        long long m = t.c;
        for (int j = 0; j < k; ++j) m = static_cast<long long>(static_cast<__int128>(m) * fp_pow(point[j], t.e[j], p) % p);
        val = (val + m) % p;
        for (int j = 0; j < k; ++j) grad[j] = (grad[j] + m * (t.e[j] % p)) % p;
      }
      if (val != 0) return false;
      return std::all_of(grad.begin(), grad.end(), [](long long g) { return g == 0; });
    }
    for (long long x = 1; x < p; ++x) {
      point[i] = x;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::refuted || b == Verdict::refuted) return Verdict::refuted;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::verified;
}

MultiPolynomial face_function(const MultiPolynomial& h, const std::vector<Point>& pts) {
  MultiPolynomial out(h.vars());
  for (const auto& p : pts) out.add_term(p, h.coeff(p));
  return out;
}

// All faces of conv(pts) of dimension >= 1, as sorted point lists.
void polytope_faces(const std::vector<Point>& pts, std::set<std::vector<Point>>& out) {
  if (affine_dim(pts) < 1) return;
  if (!out.insert(pts).second) return;
  for (const auto& f : hull_facets(pts)) {
    std::vector<Point> sub;
    for (int i : f) sub.push_back(pts[i]);
    polytope_faces(sub, out);
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::refuted:
      return "refuted";
    default:
      return "unknown";
  }
}

MultiPolynomial reduce_face_function(const MultiPolynomial& face_fn) {
  if (face_fn.is_zero()) throw DomainError("face function is zero");
  auto support = face_fn.support();
  std::sort(support.begin(), support.end());
  const int n = face_fn.nvars();
  IntMat diffs(static_cast<Eigen::Index>(support.size()), n);
  for (size_t i = 0; i < support.size(); ++i)
    for (int j = 0; j < n; ++j) diffs(static_cast<Eigen::Index>(i), j) = support[i][j] - support[0][j];
  int k = 0;
  IntMat reduced = column_reduce(diffs, k);
  std::vector<long long> lo(k, 0);
  for (Eigen::Index i = 0; i < reduced.rows(); ++i)
    for (int j = 0; j < k; ++j) lo[j] = std::min(lo[j], reduced(i, j));
  MultiPolynomial h(default_vars("w", k));
  for (size_t i = 0; i < support.size(); ++i) {
    Exponent e(k);
    for (int j = 0; j < k; ++j) e[j] = reduced(static_cast<Eigen::Index>(i), j) - lo[j];
    h.add_term(e, face_fn.coeff(support[i]));
  }
  return h;
}

FaceVerdict face_verdict(const MultiPolynomial& face_fn) {
  FaceVerdict fv;
  fv.points = face_fn.support();
  std::sort(fv.points.begin(), fv.points.end());
  fv.dim = affine_dim(fv.points);
  if (fv.dim + 1 == static_cast<int>(fv.points.size())) {
    fv.verdict = Verdict::verified;
    fv.method = "affinely independent support";
    return fv;
  }
  MultiPolynomial h = reduce_face_function(face_fn);
  const int k = h.nvars();
  if (k == 1) {
    KPoly p = h.as_univariate(0).strip_zero_roots();
    KPoly g = KPoly::gcd(p, p.derivative());
    fv.method = "squarefree test in one variable";
    if (g.degree() <= 0) {
      fv.verdict = Verdict::verified;
    } else {
      fv.verdict = Verdict::refuted;
      fv.witness = "repeated root of " + MultiPolynomial(h).render();
    }
    return fv;
  }
  if (k == 2) {
    fv.method = "resultant elimination in two variables";
    KPoly r1 = resultant(h, h.derivative(0), 1), r2 = resultant(h, h.derivative(1), 1);
    KPoly r = r1.is_zero() ? r2 : (r2.is_zero() ? r1 : KPoly::gcd(r1, r2));
    if (!r.is_zero() && r.strip_zero_roots().degree() <= 0) {
      fv.verdict = Verdict::verified;
      return fv;
    }
    if (h.field()) {
      fv.verdict = Verdict::unknown;
      fv.witness = "nonconstant resultant over an extension field";
      return fv;
    }
    try {
      for (const auto& pt : singular_points(h))
        if (pt.in_torus()) {
          fv.verdict = Verdict::refuted;
          fv.witness = pt.describe();
          return fv;
        }
      fv.verdict = Verdict::verified;
    } catch (const InconsistencyError& e) {
      fv.verdict = Verdict::refuted;
      fv.witness = e.what();
    }
    return fv;
  }
  fv.method = "finite field probe";
  if (h.field()) {
    fv.verdict = Verdict::unknown;
    return fv;
  }
  std::vector<long long> w1, w2;
  if (fp_witness(h, 31, w1) && fp_witness(h, 37, w2)) {
    fv.verdict = Verdict::refuted;
    std::ostringstream os;
    os << "critical point mod 31 at (";
    for (size_t i = 0; i < w1.size(); ++i) os << (i ? "," : "") << w1[i];
    os << ") and mod 37";
    fv.witness = os.str();
  } else {
    fv.verdict = Verdict::unknown;
  }
  return fv;
}

NondegeneracyReport nondegeneracy_check(const MultiPolynomial& h) {
  NondegeneracyReport rep;
  NewtonBoundary nb = newton_boundary(h);
  for (const auto& face : nb.faces) {
    if (face.dim < 1) continue;
    FaceVerdict fv = face_verdict(face_function(h, face.points));
    fv.weight = face.weight;
    rep.overall = combine(rep.overall, fv.verdict);
    rep.faces.push_back(fv);
  }
  return rep;
}

NondegeneracyReport nondegeneracy_check_polytope(const MultiPolynomial& h) {
  NondegeneracyReport rep;
  auto support = h.support();
  std::sort(support.begin(), support.end());
  std::set<std::vector<Point>> faces;
  polytope_faces(support, faces);
  for (const auto& pts : faces) {
    FaceVerdict fv = face_verdict(face_function(h, pts));
    rep.overall = combine(rep.overall, fv.verdict);
    rep.faces.push_back(fv);
  }
  return rep;
}

}  // namespace milnor
