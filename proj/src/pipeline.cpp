#include "milnor/pipeline.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {
namespace {

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

MultiPolynomial lowest_part(const MultiPolynomial& f, const IndexSet& vars) {
  long long low = -1;
  for (const auto& [e, c] : f.terms()) {
    long long s = 0;
    for (int v : vars) s += e[v];
    bool others = false;
    for (int i = 0; i < f.nvars(); ++i)
      if (std::find(vars.begin(), vars.end(), i) == vars.end() && e[i] != 0) others = true;
    if (others) continue;
    if (low < 0 || s < low) low = s;
  }
  MultiPolynomial out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    long long s = 0;
    for (int v : vars) s += e[v];
    bool others = false;
    for (int i = 0; i < f.nvars(); ++i)
      if (std::find(vars.begin(), vars.end(), i) == vars.end() && e[i] != 0) others = true;
    if (!others && s == low) out.add_term(e, c);
  }
  return out;
}

bool on_coordinate_hyperplane(const std::vector<Point>& pts) {
  if (pts.empty()) return false;
  for (size_t i = 0; i < pts[0].size(); ++i)
    if (std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return p[i] == 0; })) return true;
  return false;
}

bool is_unit_vector(const Weight& w) {
  return std::count(w.begin(), w.end(), 0) == static_cast<long>(w.size()) - 1 &&
         std::count(w.begin(), w.end(), 1) == 1;
}

bool contains_all(const std::vector<Point>& big, const std::vector<Point>& small) {
  return std::all_of(small.begin(), small.end(),
                     [&](const Point& p) { return std::find(big.begin(), big.end(), p) != big.end(); });
}

// Singular points of the exceptional curve of P off the torus, over every
// chart containing P.
bool boundary_singularities(const MultiPolynomial& f, const RegularFan& fan, const Weight& P) {
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    auto rays = fan.cone_rays(i);
    auto it = std::find(rays.begin(), rays.end(), P);
    if (it == rays.end()) continue;
    rays.erase(it);
    rays.insert(rays.begin(), P);
    UnimodularCone cone;
    cone.generators.resize(fan.n, fan.n);
    for (int j = 0; j < fan.n; ++j)
      for (int r = 0; r < fan.n; ++r) cone.generators(r, j) = rays[j][r];
    MultiPolynomial e = exceptional_equation(chart_pullback(f, cone), 0);
    for (const auto& pt : singular_points(e))
      if (!pt.in_torus()) return true;
  }
  return false;
}

}  // namespace

UnimodularCone chart_for_ray(const RegularFan& fan, const Weight& P) {
  const std::vector<Weight>* best_others = nullptr;
  std::vector<Weight> best;
  std::vector<std::vector<Weight>> candidates;
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    auto rays = fan.cone_rays(i);
    auto it = std::find(rays.begin(), rays.end(), P);
    if (it == rays.end()) continue;
    rays.erase(it);
    std::sort(rays.rbegin(), rays.rend());
    candidates.push_back(rays);
  }
  if (candidates.empty()) throw DomainError("weight " + weight_string(P) + " is not a ray of the fan");
  for (const auto& c : candidates)
    if (!best_others || c > *best_others) best_others = &c;
  best.push_back(P);
  best.insert(best.end(), best_others->begin(), best_others->end());
  UnimodularCone cone;
  cone.generators.resize(fan.n, fan.n);
  for (int j = 0; j < fan.n; ++j)
    for (int i = 0; i < fan.n; ++i) cone.generators(i, j) = best[j][i];
  return cone;
}

MultiPolynomial straighten_tangent_cone(const MultiPolynomial& f, const IndexSet& vars, std::string& note) {
  note.clear();
  if (vars.size() != 2) return f;
  const int a = vars[0], b = vars[1];
  MultiPolynomial L = lowest_part(f, vars);
  if (L.is_zero()) return f;
  long long k = 0;
  for (const auto& [e, c] : L.terms()) k = e[a] + e[b];
  if (k < 2) return f;
  Exponent ea(f.nvars(), 0);
  ea[a] = k;
  Scalar lead = L.coeff(ea);
  if (lead.is_zero()) return f;  // a power of the second coordinate at most
  Exponent e1(f.nvars(), 0);
  e1[a] = k - 1;
  e1[b] = 1;
  // L = lead * (x_a - r x_b)^k would have x_a^{k-1} x_b coefficient -k r lead
  Scalar r = -L.coeff(e1) / (lead * Scalar(k));
  if (r.is_zero()) return f;
  MultiPolynomial xa = MultiPolynomial::variable(f.vars(), a), xb = MultiPolynomial::variable(f.vars(), b);
  MultiPolynomial power = (xa - xb.scaled(r)).pow(k).scaled(lead);
  if (power != L) return f;
  // old x_a = v_a + r v_b, old x_b = v_b
  MatX<Scalar> M(2, 2);
  M << Scalar(1), r, Scalar(0), Scalar(1);
  note = f.vars()[a] + " -> " + f.vars()[a] + "+(" + r.to_string() + ")*" + f.vars()[b];
  return linear_change(f, M, vars);
}

DegenerateFaceData analyze_degenerate_face(const MultiPolynomial& f, const RegularFan& fan, const Weight& P) {
  const int n = f.nvars();
  if (n > 3 || n < 2) throw DomainError("automatic local analysis supports 2 or 3 variables");
  DegenerateFaceData data;
  data.weight = P;
  data.chart = chart_pullback(f, chart_for_ray(fan, P));
  data.divisor_equation = exceptional_equation(data.chart, 0);
  const long long d = data.chart.multiplicities[0];
  const MultiPolynomial& strict = data.chart.strict_transform;
  for (const auto& pt : singular_points(data.divisor_equation)) {
    if (!pt.in_torus()) continue;
    ExceptionalPoint ep;
    ep.where = pt;
    std::vector<Scalar> q{Scalar(0)};
    q.insert(q.end(), pt.coords.begin(), pt.coords.end());
    MultiPolynomial local = translate(strict, q, {0}).with_vars(default_vars("w", n));
    IndexSet rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);
    local = straighten_tangent_cone(local, rest, ep.change);
    ep.strict_local = local;
    ep.germ = local.substitute(0, Scalar(0)).drop_vars({0});
    Exponent shift(n, 0);
    shift[0] = d;
    ep.local_form = local * MultiPolynomial::monomial(local.vars(), shift, Scalar(1));
    data.points.push_back(ep);
  }
  return data;
}

DetectionResult detect_degenerate_faces(const MultiPolynomial& f) {
  DetectionResult res;
  const int n = f.nvars();
  res.nondegeneracy = nondegeneracy_check(f);
  std::vector<Weight> degenerate;
  std::vector<const FaceVerdict*> boundary;
  for (const auto& fv : res.nondegeneracy.faces) {
    if (fv.verdict == Verdict::verified) continue;
    if (fv.verdict == Verdict::unknown) {
      res.warnings.push_back("non-degeneracy of face " + weight_string(fv.weight) + " is unknown");
      ++res.unknown;
      continue;
    }
    if (fv.dim != n - 1 && on_coordinate_hyperplane(fv.points)) {
      boundary.push_back(&fv);
      continue;
    }
    if (fv.dim != n - 1)
      throw DomainError("degenerate face " + weight_string(fv.weight) +
                        " is not maximal; the function is not almost non-degenerate");
    degenerate.push_back(fv.weight);
  }
  if (degenerate.empty() && !boundary.empty())
    throw DomainError("degenerate face " + weight_string(boundary.front()->weight) +
                      " lies on no degenerate maximal face");
  if (degenerate.empty()) return res;
  RegularFan fan = regularize(dual_diagram(f));
  // A degenerate face inside a coordinate hyperplane is tolerated when it only
  // records contact of E(P) with a multiplicity-zero coordinate divisor.
  std::vector<Point> support = f.support();
  std::vector<Weight> checked;
  for (const FaceVerdict* b : boundary) {
    bool covered = false;
    for (const auto& P : degenerate) {
      if (!contains_all(support_min(support, P).face.points, b->points)) continue;
      covered = true;
      if (std::find(checked.begin(), checked.end(), P) == checked.end()) {
        if (boundary_singularities(f, fan, P))
          throw DomainError("exceptional curve of " + weight_string(P) + " is singular off the torus");
        checked.push_back(P);
      }
    }
    if (!covered)
      throw DomainError("degenerate face " + weight_string(b->weight) + " lies on no degenerate maximal face");
    for (const auto& R : fan.rays)
      if (!is_unit_vector(R) && raw_support_min(support, R).face.points == b->points)
        throw DomainError("degenerate face " + weight_string(b->weight) + " carries an exceptional divisor");
    res.warnings.push_back("face " + weight_string(b->weight) +
                           " is degenerate through tangency with a coordinate divisor of multiplicity zero");
  }
  for (const auto& P : degenerate) {
    DegenerateFaceData data = analyze_degenerate_face(f, fan, P);
    DegenerateFaceSpec spec;
    spec.weight = P;
    spec.d = data.chart.multiplicities[0];
    int label = 0;
    for (const auto& ep : data.points) {
      if (ep.where.field && ep.where.root_index > 0) continue;  // grouped with root 0
      LocalSingularity q;
      q.label = "q" + std::to_string(++label);
      q.location = "chart " + weight_string(P) + " at " + ep.where.describe();
      q.count = ep.where.field ? ep.where.field->degree() : 1;
      q.germ = ep.germ;
      if (is_pseudo_convenient(ep.local_form)) q.local_form = ep.local_form;
      if (!ep.change.empty()) q.location += " after " + ep.change;
      NondegeneracyReport local_nd = nondegeneracy_check(ep.strict_local);
      if (local_nd.overall == Verdict::refuted)
        throw DomainError("local form at " + ep.where.describe() +
                          " is degenerate in linear admissible coordinates; supply a local form");
      if (local_nd.overall == Verdict::unknown) {
        res.warnings.push_back("non-degeneracy of the local form at " + ep.where.describe() + " is unknown");
        ++res.unknown;
      }
      spec.points.push_back(q);
    }
    if (spec.points.empty())
      throw DomainError("degenerate face " + weight_string(P) + " has no singular point in the torus");
    res.faces.push_back(std::move(data));
    res.specs.push_back(std::move(spec));
  }
  return res;
}

}  // namespace milnor
