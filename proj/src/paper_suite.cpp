#include "milnor/paper_suite.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "milnor/pipeline.hpp"
#include "milnor/plumbing.hpp"
#include "milnor/zeta.hpp"

namespace milnor {
namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

// Expansion of the sextic g6 in the chart of the exceptional divisor, as
// printed, scaled by 1728.
const char* kChartG6 =
    "1728*u^6+5184*u^5+(-1728*v^2-6912*v-3888)*u^4-2592*u^3"
    "+(576*v^4+4608*v^3+13536*v^2+17280*v+6804)*u^2"
    "+(576*v^4+4608*v^3+12672*v^2+13824*v+5508)*u"
    "-64*v^6-768*v^5-4080*v^4-12160*v^3-20556*v^2-17712*v-5805";

const char* kNodalCubic = "-x^3-x^2*y-x*y*z+y^3-y*z^2-z^3";

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read fixture '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string canon(const std::string& zeta) { return render_zeta(parse_zeta(zeta)); }

struct Suite {
  std::vector<PaperCase> cases;
  void check(const std::string& name, const std::string& expected, const std::function<std::string()>& actual) {
    PaperCase c;
    c.name = name;
    c.expected = expected;
    try {
      c.actual = actual();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.pass = c.actual == c.expected;
    cases.push_back(c);
  }
};

struct Assembled {
  DetectionResult detection;
  AlmostNDReport report;
};

Assembled run_auto(const MultiPolynomial& f) {
  Assembled a;
  a.detection = detect_degenerate_faces(f);
  a.report = assemble(f, a.detection.specs);
  return a;
}

MultiPolynomial sextic_germ(const std::string& degree_six) {
  return parse_polynomial(degree_six + " + z^7", kXYZ);
}

std::string self_intersections(const ResolutionGraph& g) {
  std::string s;
  for (const std::string id : {"P1", "T1", "S1", "E0"}) {
    const int i = g.index_of(id);
    if (i < 0) throw DomainError("graph has no node " + id);
    s += (s.empty() ? "" : ",") + std::to_string(*g.nodes[i].self_intersection);
  }
  return s;
}

}  // namespace

PaperFixtures default_fixtures(const std::string& data_dir) {
  namespace fs = std::filesystem;
  PaperFixtures f;
  f.f6 = read_text((fs::path(data_dir) / "f6.txt").string());
  f.g6 = read_text((fs::path(data_dir) / "g6.txt").string());
  f.f_graph = (fs::path(data_dir) / "sextic_f.graph").string();
  f.g_graph = (fs::path(data_dir) / "sextic_g.graph").string();
  return f;
}

std::vector<PaperCase> verify_paper(const PaperFixtures& fx) {
  Suite s;

  // Example 1
  {
    Assembled a;
    std::string err;
    try {
      a = run_auto(parse_polynomial("(x-y)^2+y^3", {"x", "y"}));
    } catch (const std::exception& e) {
      err = e.what();
    }
    auto get = [&](const std::function<std::string()>& fn) {
      return [&, fn]() -> std::string {
        if (!err.empty()) throw DomainError(err);
        return fn();
      };
    };
    s.check("plane cusp generic zeta", canon("1"), get([&] { return render_zeta(a.report.generic); }));
    s.check("plane cusp erratum", canon("(1-t^2)^-1"), get([&] { return render_zeta(a.report.erratum); }));
    s.check("plane cusp local zeta", canon("(1-t^6)(1-t^3)^-1"),
            get([&] { return render_zeta(a.report.face_zetas.at(0)); }));
    s.check("plane cusp total zeta", canon("(1-t^6)(1-t^2)^-1(1-t^3)^-1"),
            get([&] { return render_zeta(a.report.total); }));
    s.check("plane cusp milnor", "2", get([&] { return std::to_string(a.report.milnor); }));
  }

  // Example 2 and the family f_n
  {
    s.check("three-line cubic zeta and milnor", canon("(1-t^4)^-3") + " mu=11", [] {
      Assembled a = run_auto(parse_polynomial("x^3+y^3+z^3-3*x*y*z+z^4", kXYZ));
      return render_zeta(a.report.total) + " mu=" + std::to_string(a.report.milnor);
    });
    s.check("three-line cubic singular points", "(1, 1); (alpha, -1-alpha) over alpha^2+alpha+1 x2", [] {
      auto det = detect_degenerate_faces(parse_polynomial("x^3+y^3+z^3-3*x*y*z+z^4", kXYZ));
      std::string out;
      int conjugates = 0;
      for (const auto& ep : det.faces.at(0).points) {
        if (ep.where.field) ++conjugates;
        if (ep.where.field && ep.where.root_index > 0) continue;
        if (!out.empty()) out += "; ";
        const auto& c = ep.where.coords;
        if (!ep.where.field) {
          out += "(" + to_string(c.at(0).to_rational()) + ", " + to_string(c.at(1).to_rational()) + ")";
          continue;
        }
        const Scalar a = Scalar::generator(ep.where.field);
        const bool ok = ep.where.field->minpoly() == std::vector<BigInt>{1, 1, 1} &&
                        ((c.at(0) == a && c.at(1) == Scalar(-1) - a) || (c.at(1) == a && c.at(0) == Scalar(-1) - a));
        out += ok ? "(alpha, -1-alpha) over alpha^2+alpha+1" : ep.where.describe();
      }
      return out + " x" + std::to_string(conjugates);
    });
    for (int n = 4; n <= 10; ++n) {
      const std::string zn = "(1-t^" + std::to_string(n) + ")^-3";
      s.check("f_" + std::to_string(n), canon(zn) + " mu=" + std::to_string(3 * n - 1), [n] {
        Assembled a = run_auto(parse_polynomial("x^3+y^3+z^3-3*x*y*z+z^" + std::to_string(n), kXYZ));
        return render_zeta(a.report.total) + " mu=" + std::to_string(a.report.milnor);
      });
    }
  }

  // Torus sextic
  const std::string rho_zeta = canon("(1-t^21)(1-t^14)(1-t^42)^-1(1-t^7)^-1");
  const std::string sextic_total_canon = render_zeta(zp_mul(parse_zeta("(1-t^6)^-9"),
                                                            zp_pow(parse_zeta(rho_zeta), 6)));
  {
    Assembled a;
    std::string err;
    try {
      a = run_auto(sextic_germ(fx.f6));
    } catch (const std::exception& e) {
      err = e.what();
    }
    auto get = [&](const std::function<std::string()>& fn) {
      return [&, fn]() -> std::string {
        if (!err.empty()) throw DomainError(err);
        return fn();
      };
    };
    s.check("torus sextic generic zeta", canon("(1-t^6)^-21"), get([&] { return render_zeta(a.report.generic); }));
    s.check("torus sextic erratum", canon("(1-t^6)^12"), get([&] { return render_zeta(a.report.erratum); }));
    s.check("torus sextic zeta prime", canon("(1-t^6)^-9"),
            get([&] { return render_zeta(zp_mul(a.report.generic, a.report.erratum)); }));
    s.check("torus sextic cusp zeta", rho_zeta + " x6", get([&] {
              const auto& q = a.report.specs.at(0).points.at(0);
              return render_zeta(q.zeta) + " x" + std::to_string(a.report.specs.at(0).total_points());
            }));
    s.check("torus sextic total zeta", sextic_total_canon, get([&] { return render_zeta(a.report.total); }));
    s.check("torus sextic milnor", "137", get([&] { return std::to_string(a.report.milnor); }));
    s.check("torus sextic genus of E0", "chi -18+12 genus 4", get([&] {
              const auto& c = a.report.corrections.at(0);
              return "chi " + std::to_string(*c.chi_generic) + "+" + std::to_string(c.milnor_sum) + " genus " +
                     std::to_string(genus_from_euler(*c.chi_corrected));
            }));
  }

  // Non-torus sextic
  {
    s.check("g6 chart expansion", "equal", [&] {
      MultiPolynomial g6 = parse_polynomial(fx.g6, kXYZ);
      MultiPolynomial chart = g6.substitute(2, Scalar(1)).drop_vars({2}).with_vars({"u", "v"});
      MultiPolynomial printed = parse_polynomial(kChartG6, {"u", "v"});
      return chart.scaled(Scalar(1728)) == printed ? std::string("equal") : std::string("different");
    });
    Assembled a;
    std::string err;
    try {
      a = run_auto(sextic_germ(fx.g6));
    } catch (const std::exception& e) {
      err = e.what();
    }
    auto get = [&](const std::function<std::string()>& fn) {
      return [&, fn]() -> std::string {
        if (!err.empty()) throw DomainError(err);
        return fn();
      };
    };
    s.check("non-torus sextic total zeta", sextic_total_canon, get([&] { return render_zeta(a.report.total); }));
    s.check("non-torus sextic milnor", "137", get([&] { return std::to_string(a.report.milnor); }));
    s.check("non-torus sextic rational cusps", "(-1/2, -3) (-1/2, -1) (1/2, -3) (1/2, -1)", get([&] {
              std::string out;
              for (const auto& ep : a.detection.faces.at(0).points)
                if (!ep.where.field)
                  out += (out.empty() ? "(" : " (") + to_string(ep.where.coords.at(0).to_rational()) + ", " +
                         to_string(ep.where.coords.at(1).to_rational()) + ")";
              return out;
            }));
    s.check("non-torus sextic quadratic cusps", "2 conjugates, (x+1/2)^2=2/3, y=-2", get([&] {
              int k = 0;
              bool ok = true;
              for (const auto& ep : a.detection.faces.at(0).points) {
                if (!ep.where.field) continue;
                ++k;
                Scalar x = ep.where.coords[0] + Scalar(Rational(1, 2));
                ok = ok && ep.where.field->degree() == 2 && x * x == Scalar(Rational(2, 3)) &&
                     ep.where.coords[1] == Scalar(-2);
              }
              return std::to_string(k) + " conjugates, " + (ok ? "(x+1/2)^2=2/3, y=-2" : "other");
            }));
  }

  // Plumbing graphs
  for (const auto& [label, path] : {std::pair{"f", fx.f_graph}, std::pair{"g", fx.g_graph}}) {
    const std::string tag = std::string(label) + "-graph";
    ResolutionGraph g;
    std::string err;
    try {
      ResolutionGraph raw = read_graph_file(path);
      g = solve_self_intersections(raw, raw.references.at(0));
    } catch (const std::exception& e) {
      err = e.what();
    }
    auto get = [&](const std::function<std::string()>& fn) {
      return [&, fn]() -> std::string {
        if (!err.empty()) throw DomainError(err);
        return fn();
      };
    };
    s.check(tag + " self-intersections", "-1,-2,-3,-42", get([&] { return self_intersections(g); }));
    s.check(tag + " determinant", "-6", get([&] { return to_string(determinant(intersection_matrix(g))); }));
    s.check(tag + " H1", "Z^8 + Z/6", get([&] { return h1_plumbed(g).to_string(); }));
    s.check(tag + " H1 by presentation", "Z^8 + Z/6",
            get([&] { return cokernel_hermite(mumford_presentation(g).relations).to_string(); }));
  }
  s.check("f-graph and g-graph agree", "same", [&] {
    ResolutionGraph f = read_graph_file(fx.f_graph), g = read_graph_file(fx.g_graph);
    f = solve_self_intersections(f, f.references.at(0));
    g = solve_self_intersections(g, g.references.at(0));
    return canonical_form(f) == canonical_form(g) ? std::string("same") : std::string("different");
  });

  // Shift formula
  s.check("shift formula sextic", "137 = 125 + 12", [&] {
    MultiPolynomial f6 = parse_polynomial(fx.f6, kXYZ);
    LocalSingularity cusp;
    cusp.label = "cusp";
    cusp.germ = parse_polynomial("w2^2+w3^3", {"w2", "w3"});
    cusp.count = 6;
    ShiftResult r = shift_zeta(f6, {cusp});
    return std::to_string(r.milnor) + " = 125 + " + std::to_string(r.milnor_total);
  });
  s.check("shift formula nodal cubic", canon("(1-t^3)^-2(1-t^4)^-1") + " mu=9", [] {
    LocalSingularity node;
    node.label = "node";
    node.germ = parse_polynomial("w2^2+w3^2", {"w2", "w3"});
    ShiftResult r = shift_zeta(parse_polynomial(kNodalCubic, kXYZ), {node});
    return render_zeta(r.total) + " mu=" + std::to_string(r.milnor);
  });
  s.check("nodal cubic closed formula", canon("(1-t^3)^-2(1-t^4)^-1") + " mu=9", [] {
    Assembled a = run_auto(parse_polynomial(std::string(kNodalCubic) + "+z^4", kXYZ));
    NodalConeData nc = char_poly_top_nodal(3, 1);
    CyclotomicProduct formula = zp_mul(nc.zeta, parse_zeta("(1-t^4)^-1"));
    if (!(formula == a.report.total)) return std::string("pipeline ") + render_zeta(a.report.total);
    return render_zeta(formula) + " mu=" + std::to_string(a.report.milnor);
  });

  // (p,q) torus curves
  s.check("torus curve (2,3) equals the torus sextic", sextic_total_canon,
          [] { return render_zeta(torus_curve_zeta(2, 3).total); });
  s.check("torus curve (2,5)", "769", [] { return std::to_string(torus_curve_zeta(2, 5).milnor); });
  s.check("torus curve (3,4)", "1403", [] { return std::to_string(torus_curve_zeta(3, 4).milnor); });

  // Homogeneous baseline
  for (long long d = 2; d <= 9; ++d) {
    const long long e = d * d - 3 * d + 3;
    s.check("homogeneous degree " + std::to_string(d),
            canon("(1-t^" + std::to_string(d) + ")^-" + std::to_string(e)) + " mu=" + std::to_string((d - 1) * (d - 1) * (d - 1)),
            [d] {
              const std::string p = "x^" + std::to_string(d) + "+y^" + std::to_string(d) + "+z^" + std::to_string(d);
              CyclotomicProduct z = varchenko_zeta(parse_polynomial(p, kXYZ));
              return render_zeta(z) + " mu=" + std::to_string(milnor_from_zeta(z, 3));
            });
  }
  return s.cases;
}

}  // namespace milnor
