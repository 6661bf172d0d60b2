#include "milnor/report.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/nondegeneracy.hpp"
#include "milnor/pipeline.hpp"
#include "milnor/zeta.hpp"

namespace milnor {
namespace {

using nlohmann::json;

std::string render_point(const Point& p) { return render_weight(p); }

json weight_json(const Weight& w) { return json(w); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

MultiPolynomial job_polynomial(const JobConfig& job) {
  if (job.vars.empty()) throw ParseError("no variables given");
  return parse_with_field(job.polynomial, job.vars, job.field, job.generator);
}

std::string compact_input(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == '\n' || c == '\t' || c == ' ') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

void fill_newton(ZetaReport& r, const MultiPolynomial& f, const NondegeneracyReport* nd) {
  NewtonBoundary nb = newton_boundary(f);
  for (const auto& face : nb.faces) {
    if (face.dim < 1) continue;
    NewtonFaceEntry e;
    e.weight = face.weight;
    e.d = face.d;
    e.dim = face.dim;
    e.points = face.points;
    if (nd)
      for (const auto& fv : nd->faces)
        if (fv.points == face.points) e.verdict = to_string(fv.verdict);
    r.faces.push_back(e);
  }
  std::vector<int> all(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) all[i] = i;
  r.weights = maximal_face_weights(f, all);
}

LocalEntry local_entry(const LocalSingularity& q, const Weight& w) {
  LocalEntry e;
  e.label = q.label;
  e.location = q.location;
  e.weight = w;
  e.count = q.count;
  e.mu = q.mu_value;
  e.zeta = q.zeta;
  e.notes = q.notes;
  return e;
}

void check_declared(const NondegeneracyReport& nd, const std::vector<DegenerateFaceSpec>& specs, int n,
                    ZetaReport& r) {
  for (const auto& fv : nd.faces) {
    const bool declared = std::any_of(specs.begin(), specs.end(), [&](const DegenerateFaceSpec& s) { return s.weight == fv.weight; });
    if (fv.verdict == Verdict::refuted && fv.dim == n - 1 && !declared)
      throw DomainError("maximal face " + render_weight(fv.weight) + " is degenerate but not declared");
    if (fv.verdict == Verdict::verified && declared)
      r.warnings.push_back("declared face " + render_weight(fv.weight) + " is non-degenerate");
    if (fv.verdict == Verdict::refuted && fv.dim < n - 1)
      r.warnings.push_back("face " + render_weight(fv.weight) + " is degenerate below maximal dimension; its singular locus is taken to be isolated");
    if (fv.verdict == Verdict::unknown) {
      r.warnings.push_back("non-degeneracy of face " + render_weight(fv.weight) + " is unknown");
      ++r.unknown;
    }
  }
}

json algebraic_point_json(const AlgebraicPoint& p) {
  json j;
  j["point"] = p.describe();
  j["in_torus"] = p.in_torus();
  j["field_degree"] = p.field ? p.field->degree() : 1;
  json approx = json::array();
  for (const auto& c : p.approx()) approx.push_back({c.real(), c.imag()});
  j["approx"] = approx;
  return j;
}

}  // namespace

std::string render_weight(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

ZetaReport run_zeta(const JobConfig& job) {
  ZetaReport r;
  r.input = compact_input(job.polynomial);
  r.vars = job.vars;
  r.mode = job.mode;
  const MultiPolynomial f = job_polynomial(job);
  const int n = f.nvars();
  switch (job.mode) {
    case Mode::nondegenerate: {
      NondegeneracyReport nd = nondegeneracy_check(f);
      fill_newton(r, f, &nd);
      for (const auto& fv : nd.faces) {
        if (fv.verdict == Verdict::refuted)
          throw DomainError("Newton degenerate on face " + render_weight(fv.weight) + " (" + fv.witness +
                            "); use mode almost-nd");
        if (fv.verdict == Verdict::unknown) {
          r.warnings.push_back("non-degeneracy of face " + render_weight(fv.weight) + " is unknown");
          ++r.unknown;
        }
      }
      r.generic = varchenko_zeta(f);
      r.total = r.generic;
      r.milnor = milnor_from_zeta(r.total, n);
      break;
    }
    case Mode::almost_nd: {
      std::vector<DegenerateFaceSpec> specs;
      NondegeneracyReport nd;
      if (job.faces.empty()) {
        DetectionResult det = detect_degenerate_faces(f);
        nd = det.nondegeneracy;
        specs = det.specs;
        r.warnings = det.warnings;
        r.unknown = det.unknown;
        if (specs.empty()) r.warnings.push_back("no degenerate maximal face; the generic formula applies");
      } else {
        specs = build_specs(job);
        nd = nondegeneracy_check(f);
        check_declared(nd, specs, n, r);
      }
      fill_newton(r, f, &nd);
      AlmostNDReport rep = assemble(f, specs);
      r.generic = rep.generic;
      r.erratum = rep.erratum;
      r.total = rep.total;
      r.milnor = rep.milnor;
      r.corrections = rep.corrections;
      for (const auto& s : rep.specs)
        for (const auto& q : s.points) r.local.push_back(local_entry(q, s.weight));
      r.warnings.insert(r.warnings.end(), rep.warnings.begin(), rep.warnings.end());
      break;
    }
    case Mode::shift: {
      std::vector<PointConfig> pcs = job.points;
      if (pcs.empty() && !job.faces.empty()) pcs = job.faces.front().points;
      fill_newton(r, f, nullptr);
      ShiftResult s = shift_zeta(f, build_points(job, pcs));
      r.generic = s.homogeneous;
      r.erratum = zp_mul(s.shifted, zp_inv(s.homogeneous));
      r.total = s.total;
      r.milnor = s.milnor;
      Weight ones(n, 1);
      for (const auto& q : s.points) r.local.push_back(local_entry(q, ones));
      break;
    }
    case Mode::local: {
      fill_newton(r, f, nullptr);
      r.generic = local_zeta(f);
      r.total = r.generic;
      r.milnor = milnor_from_zeta(r.total, n);
      break;
    }
    case Mode::plumbing:
      throw DomainError("plumbing mode has no zeta function; use the plumbing command");
  }
  return r;
}

ResolveReport run_resolve(const JobConfig& job) {
  ResolveReport r;
  r.input = compact_input(job.polynomial);
  r.vars = job.vars;
  const MultiPolynomial f = job_polynomial(job);
  if (f.nvars() > 3) throw DomainError("resolution is implemented for at most 3 variables");
  r.fan = regularize(dual_diagram(f));
  for (size_t i = 0; i < r.fan.cones.size(); ++i) {
    PullbackFactorization pb = chart_pullback(f, r.fan.cone(i));
    r.charts.push_back({pb.chart.generators, pb.multiplicities, pb.strict_transform});
  }
  for (const auto& P : r.fan.positive_vertices()) {
    PullbackFactorization pb = chart_pullback(f, chart_for_ray(r.fan, P));
    ExceptionalEntry e;
    e.ray = P;
    e.d = pb.multiplicities[0];
    e.equation = exceptional_equation(pb, 0);
    if (e.equation.total_degree() == 0) {
      e.note = "strict transform misses this divisor";
    } else {
      try {
        e.singular_points = singular_points(e.equation);
      } catch (const std::exception& ex) {
        e.note = ex.what();
      }
    }
    r.exceptional.push_back(e);
  }
  return r;
}

PlumbingReport run_plumbing(const std::string& graph_path, const std::string& reference) {
  PlumbingReport r;
  r.source = graph_path;
  r.graph = read_graph_file(graph_path);
  if (!r.graph.solved()) {
    if (r.graph.references.empty()) throw DomainError("unknown self-intersections and no reference function");
    r.graph = solve_self_intersections(r.graph, reference.empty() ? r.graph.references.front() : reference);
  }
  r.matrix = intersection_matrix(r.graph);
  r.det = determinant(r.matrix);
  SmithForm s = smith_normal_form(r.matrix);
  if (!verify_smith(r.matrix, s)) throw InconsistencyError("Smith normal form certificate failed");
  r.invariant_factors = s.invariant_factors;
  r.h1 = h1_plumbed(r.graph);
  r.presentation = mumford_presentation(r.graph);
  r.h1_presentation = cokernel_hermite(r.presentation.relations);
  if (!(r.h1 == r.h1_presentation))
    throw InconsistencyError("Mumford presentation gives " + r.h1_presentation.to_string() + " but the Smith form gives " +
                             r.h1.to_string());
  if (r.graph.is_tree()) r.canonical = canonical_form(r.graph);
  r.dot = to_dot(r.graph);
  return r;
}

std::string render_text(const ZetaReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << '\n';
  out << "vars: " << join(r.vars, ",") << '\n';
  out << "mode: " << to_string(r.mode) << '\n';
  for (const auto& f : r.faces) {
    out << "face: " << render_weight(f.weight) << " d=" << f.d << " dim=" << f.dim;
    if (!f.verdict.empty()) out << " " << f.verdict;
    out << " points";
    for (const auto& p : f.points) out << ' ' << render_point(p);
    out << '\n';
  }
  std::vector<std::string> ws;
  for (const auto& w : r.weights) ws.push_back(render_weight(w));
  out << "weights: " << join(ws, " ") << '\n';
  out << "zeta generic: " << render_zeta(r.generic) << '\n';
  out << "zeta erratum: " << render_zeta(r.erratum) << '\n';
  for (const auto& l : r.local) {
    out << "local " << l.label << ": weight " << render_weight(l.weight) << " count " << l.count << " mu " << l.mu
        << " zeta " << render_zeta(l.zeta) << " at " << l.location << '\n';
    for (const auto& n : l.notes) out << "  note: " << n << '\n';
  }
  for (const auto& c : r.corrections) {
    out << "correction: " << render_weight(c.weight) << " d=" << c.d << " milnor_sum=" << c.milnor_sum;
    if (c.chi_generic) out << " chi_generic=" << *c.chi_generic << " chi_corrected=" << *c.chi_corrected;
    out << '\n';
  }
  out << "zeta total: " << render_zeta(r.total) << '\n';
  out << "milnor: " << r.milnor << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

json to_json(const ZetaReport& r) {
  json j;
  j["input"] = r.input;
  j["vars"] = r.vars;
  j["mode"] = to_string(r.mode);
  json faces = json::array();
  for (const auto& f : r.faces) {
    json e{{"weight", weight_json(f.weight)}, {"d", f.d}, {"dim", f.dim}, {"points", f.points}};
    if (!f.verdict.empty()) e["verdict"] = f.verdict;
    faces.push_back(e);
  }
  json weights = json::array();
  for (const auto& w : r.weights) weights.push_back(weight_json(w));
  j["newton"] = {{"faces", faces}, {"weights", weights}};
  json local = json::array();
  for (const auto& l : r.local)
    local.push_back({{"label", l.label},
                     {"location", l.location},
                     {"weight", weight_json(l.weight)},
                     {"count", l.count},
                     {"mu", l.mu},
                     {"zeta", render_zeta(l.zeta)},
                     {"notes", l.notes}});
  j["zeta"] = {{"generic", render_zeta(r.generic)},
               {"erratum", render_zeta(r.erratum)},
               {"local", local},
               {"total", render_zeta(r.total)}};
  json corr = json::array();
  for (const auto& c : r.corrections) {
    json e{{"weight", weight_json(c.weight)}, {"d", c.d}, {"milnor_sum", c.milnor_sum}};
    if (c.chi_generic) {
      e["chi_generic"] = *c.chi_generic;
      e["chi_corrected"] = *c.chi_corrected;
    }
    corr.push_back(e);
  }
  j["corrections"] = corr;
  j["milnor"] = r.milnor;
  j["warnings"] = r.warnings;
  return j;
}

std::string render_text(const ResolveReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << '\n';
  out << "vars: " << join(r.vars, ",") << '\n';
  out << "fan rays:";
  for (const auto& ray : r.fan.rays) out << ' ' << render_weight(ray);
  out << '\n';
  out << "fan cones:\n" << fan_to_text(r.fan);
  for (const auto& c : r.charts) {
    out << "chart:";
    for (Eigen::Index j = 0; j < c.generators.cols(); ++j) {
      Weight col(c.generators.rows());
      for (Eigen::Index i = 0; i < c.generators.rows(); ++i) col[i] = c.generators(i, j);
      out << ' ' << render_weight(col);
    }
    out << " multiplicities " << render_weight(c.multiplicities) << " strict " << c.strict_transform.render() << '\n';
  }
  for (const auto& e : r.exceptional) {
    out << "exceptional " << render_weight(e.ray) << " d=" << e.d << ": " << e.equation.render() << " = 0\n";
    for (const auto& p : e.singular_points)
      out << "  singular point " << p.describe() << (p.in_torus() ? " in torus" : " on boundary") << '\n';
    if (!e.note.empty()) out << "  note: " << e.note << '\n';
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

json to_json(const ResolveReport& r) {
  json j;
  j["input"] = r.input;
  j["vars"] = r.vars;
  json cones = json::array();
  for (size_t i = 0; i < r.fan.cones.size(); ++i) cones.push_back(r.fan.cone_rays(i));
  j["fan"] = {{"rays", r.fan.rays}, {"cones", cones}};
  json charts = json::array();
  for (const auto& c : r.charts) {
    json cols = json::array();
    for (Eigen::Index k = 0; k < c.generators.cols(); ++k) {
      Weight col(c.generators.rows());
      for (Eigen::Index i = 0; i < c.generators.rows(); ++i) col[i] = c.generators(i, k);
      cols.push_back(col);
    }
    charts.push_back({{"generators", cols}, {"multiplicities", c.multiplicities}, {"strict", c.strict_transform.render()}});
  }
  j["charts"] = charts;
  json ex = json::array();
  for (const auto& e : r.exceptional) {
    json pts = json::array();
    for (const auto& p : e.singular_points) pts.push_back(algebraic_point_json(p));
    json item{{"ray", e.ray}, {"d", e.d}, {"equation", e.equation.render()}, {"singular_points", pts}};
    if (!e.note.empty()) item["note"] = e.note;
    ex.push_back(item);
  }
  j["exceptional"] = ex;
  j["warnings"] = r.warnings;
  return j;
}

std::string render_text(const PlumbingReport& r) {
  std::ostringstream out;
  out << "graph: " << r.source << '\n';
  for (const auto& n : r.graph.nodes)
    out << "node " << n.id << " genus " << n.genus << " self " << *n.self_intersection << '\n';
  out << "matrix:\n";
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    out << ' ';
    for (Eigen::Index j = 0; j < r.matrix.cols(); ++j) out << ' ' << r.matrix(i, j);
    out << '\n';
  }
  out << "det: " << to_string(r.det) << '\n';
  std::vector<std::string> inv;
  for (const auto& d : r.invariant_factors) inv.push_back(to_string(d));
  out << "invariant factors: " << join(inv, " ") << '\n';
  out << "H1: " << r.h1.to_string() << '\n';
  out << "H1 (presentation): " << r.h1_presentation.to_string() << '\n';
  if (!r.canonical.empty()) out << "canonical: " << r.canonical << '\n';
  out << "presentation:\n" << render_presentation(r.presentation);
  return out.str();
}

json to_json(const PlumbingReport& r) {
  json j;
  j["graph"] = r.source;
  json nodes = json::array();
  for (const auto& n : r.graph.nodes)
    nodes.push_back({{"id", n.id}, {"genus", n.genus}, {"self", *n.self_intersection}});
  j["nodes"] = nodes;
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    std::vector<long long> row;
    for (Eigen::Index k = 0; k < r.matrix.cols(); ++k) row.push_back(r.matrix(i, k));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["det"] = to_string(r.det);
  std::vector<std::string> inv;
  for (const auto& d : r.invariant_factors) inv.push_back(to_string(d));
  j["invariant_factors"] = inv;
  std::vector<std::string> tors;
  for (const auto& t : r.h1.torsion) tors.push_back(to_string(t));
  j["h1"] = {{"free_rank", r.h1.free_rank}, {"torsion", tors}, {"text", r.h1.to_string()}};
  j["h1_presentation"] = r.h1_presentation.to_string();
  j["canonical"] = r.canonical;
  j["presentation"] = render_presentation(r.presentation);
  j["dot"] = r.dot;
  return j;
}

}  // namespace milnor
