#include "milnor/almost_nd.hpp"

#include <algorithm>
#include <numeric>

#include "milnor/toric.hpp"
#include "milnor/zeta.hpp"

namespace milnor {
namespace {

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

bool is_homogeneous(const MultiPolynomial& f, long long& d) {
  d = -1;
  for (const auto& [e, c] : f.terms()) {
    long long s = std::accumulate(e.begin(), e.end(), 0LL);
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return d > 0;
}

// w1^d * (w1 + g(w2..wn))
MultiPolynomial synthesized_local_form(const MultiPolynomial& germ, long long d) {
  const int n = germ.nvars() + 1;
  auto vars = default_vars("w", n);
  MultiPolynomial out(vars);
  Exponent e(n, 0);
  e[0] = d + 1;
  out.add_term(e, Scalar(1));
  for (const auto& [ge, c] : germ.terms()) {
    Exponent x(n, 0);
    x[0] = d;
    for (int j = 0; j < germ.nvars(); ++j) x[j + 1] = ge[j];
    out.add_term(x, c);
  }
  return out;
}

long long sign_pow(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

long long DegenerateFaceSpec::total_points() const {
  long long s = 0;
  for (const auto& q : points) s += q.count;
  return s;
}

long long DegenerateFaceSpec::milnor_sum() const {
  long long s = 0;
  for (const auto& q : points) s = checked_add(s, checked_mul(q.count, q.mu_value));
  return s;
}

CyclotomicProduct zeta_generic(const MultiPolynomial& f) { return varchenko_zeta(f); }

CyclotomicProduct zeta_er(const std::vector<DegenerateFaceSpec>& specs, int n) {
  if (n < 2) throw DomainError("correction factor needs at least 2 variables");
  CyclotomicProduct z;
  for (const auto& s : specs) z.multiply_factor(s.d, sign_pow(n - 1) * s.milnor_sum());
  return z;
}

CyclotomicProduct local_zeta(const MultiPolynomial& local_form) {
  if (local_form.is_zero() || !is_pseudo_convenient(local_form))
    throw DomainError("local form is not pseudo-convenient");
  return varchenko_zeta(local_form);
}

LocalMilnor local_milnor(const MultiPolynomial& germ) {
  if (germ.nvars() < 1) throw DomainError("germ needs at least one variable");
  if (germ.is_zero()) throw DomainError("germ is identically zero");
  if (!germ.coeff(Exponent(germ.nvars(), 0)).is_zero())
    throw DomainError("germ does not vanish at the point");
  LocalMilnor out;
  out.used = germ;
  if (!is_convenient(germ)) {
    long long N = germ.total_degree() + 1;
    for (const auto& facet : newton_boundary(germ).facets) {
      if (!facet.compact) continue;
      for (long long p : facet.normal) N = std::max(N, facet.d / p + 1);
    }
    const int m = germ.nvars();
    for (int i = 0; i < m; ++i) {
      bool has_axis = false;
      for (const auto& [e, c] : germ.terms()) {
        bool axis = e[i] > 0;
        for (int j = 0; j < m && axis; ++j)
          if (j != i && e[j] != 0) axis = false;
        has_axis |= axis;
      }
      if (has_axis) continue;
      Exponent e(m, 0);
      e[i] = N;
      out.used.add_term(e, Scalar(1));
    }
    out.completed = true;
    out.completion_power = N;
  }
  out.mu = milnor_from_zeta(varchenko_zeta(out.used), germ.nvars());
  return out;
}

void resolve_local(LocalSingularity& q, long long d, int n) {
  if (q.count < 1) throw DomainError("point count must be positive");
  q.notes.clear();
  q.zeta_known = false;
  if (q.local_form) {
    if (q.local_form->nvars() != n)
      throw DomainError("local form of " + q.label + " has the wrong number of variables");
    q.zeta = local_zeta(*q.local_form);
    q.zeta_known = true;
  }
  std::optional<long long> from_germ, from_zeta;
  if (q.germ) {
    if (q.germ->nvars() != n - 1)
      throw DomainError("germ of " + q.label + " must have " + std::to_string(n - 1) + " variables");
    LocalMilnor lm = local_milnor(*q.germ);
    from_germ = lm.mu;
    if (lm.completed)
      q.notes.push_back("germ completed by axis monomials of degree " + std::to_string(lm.completion_power));
    if (!q.zeta_known) {
      q.zeta = local_zeta(synthesized_local_form(lm.used, d));
      q.zeta_known = true;
      q.notes.push_back("local zeta from the germ");
    }
  }
  // The degree relation holds for forms w_k^d (g + c w_k + ...).
  bool shift_shape = true;
  if (q.local_form) {
    shift_shape = false;
    for (int k = 0; k < n && !shift_shape; ++k) {
      Exponent e(n, 0);
      e[k] = d + 1;
      if (q.local_form->coeff(e).is_zero()) continue;
      shift_shape = true;
      for (const auto& [t, c] : q.local_form->terms()) shift_shape = shift_shape && t[k] >= d;
    }
  }
  if (q.zeta_known && shift_shape) {
    const long long deg = degree(q.zeta) * sign_pow(n);
    if (deg % (1 + d) != 0)
      throw InconsistencyError("local zeta degree of " + q.label + " is not a multiple of 1+d");
    from_zeta = deg / (1 + d);
  }
  std::optional<long long> chosen = q.mu ? q.mu : (from_germ ? from_germ : from_zeta);
  if (!chosen) throw DomainError("no Milnor number available for " + q.label);
  for (const auto& other : {q.mu, from_germ, from_zeta})
    if (other && *other != *chosen)
      throw InconsistencyError("conflicting Milnor numbers for " + q.label + ": " +
                               std::to_string(*chosen) + " vs " + std::to_string(*other));
  if (*chosen < 0) throw InconsistencyError("negative Milnor number for " + q.label);
  q.mu_value = *chosen;
}

AlmostNDReport assemble(const MultiPolynomial& f, std::vector<DegenerateFaceSpec> specs) {
  AlmostNDReport rep;
  rep.n = f.nvars();
  rep.generic = zeta_generic(f);
  const auto weights = maximal_face_weights(f, nonempty_subsets(rep.n).back());
  std::optional<RegularFan> fan;
  if (rep.n <= 3 && !specs.empty()) {
    try {
      fan = regularize(dual_diagram(f));
    } catch (const DomainError& e) {
      rep.warnings.push_back(std::string("no regular fan for divisor Euler characteristics: ") + e.what());
    }
  }
  for (auto& s : specs) {
    if (!std::binary_search(weights.begin(), weights.end(), s.weight))
      throw DomainError("weight " + weight_string(s.weight) + " is not a maximal face normal");
    const long long d = support_min(f, s.weight).d;
    if (s.d != 0 && s.d != d)
      throw InconsistencyError("declared d=" + std::to_string(s.d) + " for " + weight_string(s.weight) +
                               " but the support gives " + std::to_string(d));
    s.d = d;
    if (s.points.empty()) throw DomainError("degenerate face " + weight_string(s.weight) + " has no points");
    CyclotomicProduct fz;
    for (auto& q : s.points) {
      resolve_local(q, d, rep.n);
      if (!q.zeta_known) throw DomainError("local zeta of " + q.label + " is unknown");
      fz = zp_mul(fz, zp_pow(q.zeta, q.count));
    }
    rep.face_zetas.push_back(fz);
    FaceCorrection fc;
    fc.weight = s.weight;
    fc.d = d;
    fc.milnor_sum = s.milnor_sum();
    if (fan) {
      fc.chi_generic = strict_divisor_euler(f.support(), *fan, s.weight);
      fc.chi_corrected = divisor_euler_correction(*fc.chi_generic, fc.milnor_sum, rep.n);
    }
    rep.corrections.push_back(fc);
  }
  rep.erratum = zeta_er(specs, rep.n);
  rep.total = zp_mul(rep.generic, rep.erratum);
  for (const auto& z : rep.face_zetas) rep.total = zp_mul(rep.total, z);
  rep.specs = std::move(specs);
  rep.milnor = milnor_from_zeta(rep.total, rep.n);
  return rep;
}

long long divisor_euler_correction(long long chi_generic, long long milnor_sum, int n) {
  return chi_generic + sign_pow(n - 1) * milnor_sum;
}

HatWeight hat_weight(const Weight& Q, long long dQ) {
  HatWeight h;
  h.weight = Q;
  h.weight.push_back(dQ);
  long long g = 0;
  for (long long x : h.weight) g = gcd_ll(g, x);
  h.primitive = g == 1;
  return h;
}

CyclotomicProduct hat_local_zeta(const MultiPolynomial& germ, long long d) {
  LocalMilnor lm = local_milnor(germ);
  CyclotomicProduct zg = varchenko_zeta(lm.used);
  CyclotomicProduct z = CyclotomicProduct::factor(d + 1, -1);
  for (const auto& [m, e] : zg.exponents()) z.multiply_factor(checked_mul(m, d + 1), -e);
  return z;
}

ShiftResult shift_zeta(const MultiPolynomial& f_d, std::vector<LocalSingularity> points) {
  long long d = 0;
  if (!is_homogeneous(f_d, d)) throw DomainError("shift formula needs a homogeneous polynomial");
  if (!is_convenient(f_d)) throw DomainError("shift formula needs a convenient polynomial");
  const int n = f_d.nvars();
  ShiftResult r;
  r.homogeneous = varchenko_zeta(f_d);
  for (auto& q : points) {
    CyclotomicProduct z;
    if (q.local_form) {
      z = local_zeta(*q.local_form);
    } else if (q.germ) {
      z = hat_local_zeta(*q.germ, d);
    } else {
      throw DomainError("point " + q.label + " needs a local form or a germ");
    }
    std::optional<long long> mu = q.mu;
    if (q.germ) {
      long long m = local_milnor(*q.germ).mu;
      if (mu && *mu != m) throw InconsistencyError("conflicting Milnor numbers for " + q.label);
      mu = m;
    }
    const long long deg = degree(z) * sign_pow(n);
    if (deg % (1 + d) != 0)
      throw InconsistencyError("local zeta degree of " + q.label + " is not a multiple of 1+d");
    if (mu && *mu != deg / (1 + d))
      throw InconsistencyError("local zeta of " + q.label + " disagrees with its Milnor number");
    q.mu_value = deg / (1 + d);
    q.zeta = z;
    q.zeta_known = true;
    r.local.push_back(zp_pow(z, q.count));
    r.milnor_total = checked_add(r.milnor_total, checked_mul(q.count, q.mu_value));
  }
  r.points = std::move(points);
  r.shifted = zp_mul(r.homogeneous, CyclotomicProduct::factor(d, sign_pow(n - 1) * r.milnor_total));
  r.total = r.shifted;
  for (const auto& z : r.local) r.total = zp_mul(r.total, z);
  r.milnor = milnor_from_zeta(r.total, n);
  long long closed = 1;
  for (int i = 0; i < n; ++i) closed = checked_mul(closed, d - 1);
  closed = checked_add(closed, r.milnor_total);
  if (closed != r.milnor)
    throw InconsistencyError("shift formula gives " + std::to_string(closed) + " but the zeta degree gives " +
                             std::to_string(r.milnor));
  return r;
}

TorusCurveResult torus_curve_zeta(long long p, long long q) {
  if (p < 2 || q < 2) throw DomainError("torus curve needs p, q >= 2");
  if (gcd_ll(p, q) != 1) throw DomainError("torus curve needs coprime p and q");
  const long long d = checked_mul(p, q);
  auto xyz = std::vector<std::string>{"x", "y", "z"};
  MultiPolynomial fd(xyz);
  for (int i = 0; i < 3; ++i) {
    Exponent e(3, 0);
    e[i] = d;
    fd.add_term(e, Scalar(1));
  }
  MultiPolynomial germ(default_vars("w", 2));
  germ.add_term({q, 0}, Scalar(1));
  germ.add_term({0, p}, Scalar(1));
  LocalSingularity rho;
  rho.label = "rho";
  rho.germ = germ;
  rho.count = d;
  ShiftResult s = shift_zeta(fd, {rho});
  TorusCurveResult r;
  r.p = p;
  r.q = q;
  r.shifted = s.shifted;
  r.local = hat_local_zeta(germ, d);
  r.points = d;
  r.total = s.total;
  r.milnor = s.milnor;
  const long long closed = checked_add(checked_mul(checked_mul(d - 1, d - 1), d - 1),
                                       checked_mul(d, checked_mul(p - 1, q - 1)));
  if (closed != r.milnor) throw InconsistencyError("torus curve closed form disagrees with the zeta degree");
  return r;
}

}  // namespace milnor
