#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "milnor/newton.hpp"
#include "milnor/polytope.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace milnor;

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> W{"w1", "w2", "w3"};
MultiPolynomial P(const std::string& s, const std::vector<std::string>& v = XYZ) { return parse_polynomial(s, v); }
const char* kLocalSextic = "w3^6*(w1^3+w2^2+w3)";

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("Newton boundary of the cusp with a tangent line") {
  auto nb = newton_boundary(P("(x-y)^2+y^3", XY));
  auto maxf = nb.maximal_faces();
  REQUIRE(maxf.size() == 1);
  CHECK(as_set(maxf[0]->points) == std::set<Point>{{2, 0}, {1, 1}, {0, 2}});
  for (const auto& f : nb.faces)
    for (const auto& p : f.points) CHECK(p != Point{0, 3});
}

TEST_CASE("Newton boundary of a monomial") {
  auto nb = newton_boundary(P("x^2*y*z^3"));
  CHECK(nb.faces_of_dim(0).size() == 1);
  CHECK(nb.maximal_faces().empty());
}

TEST_CASE("Newton boundary of the local sextic form") {
  auto nb = newton_boundary(P(kLocalSextic, W));
  auto maxf = nb.maximal_faces();
  REQUIRE(maxf.size() == 1);
  CHECK(maxf[0]->dim == 2);
  CHECK(as_set(maxf[0]->points) == std::set<Point>{{3, 0, 6}, {0, 2, 6}, {0, 0, 7}});
}

TEST_CASE("support minimum") {
  auto sm = support_min(P(kLocalSextic, W), {2, 3, 6});
  CHECK(sm.d == 42);
  CHECK(sm.face.points.size() == 3);
  CHECK(support_min(P("x^4+y^4+z^4+x*y*z^2"), {1, 1, 1}).d == 4);
  auto cusp = support_min(P("(x-y)^2+y^3", XY), {1, 1});
  CHECK(cusp.d == 2);
  CHECK(as_set(cusp.face.points) == std::set<Point>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("maximal face weights") {
  CHECK(maximal_face_weights(P("(x-y)^2+y^3", XY), {0, 1}) == std::vector<Weight>{{1, 1}});
  CHECK(maximal_face_weights(P("u1^3+u1^2*u2^2", {"u1", "u2"}), {0, 1}) == std::vector<Weight>{{2, 1}});
  CHECK(maximal_face_weights(P(kLocalSextic, W), {0, 1, 2}) == std::vector<Weight>{{2, 3, 6}});
}

TEST_CASE("dual diagram") {
  auto dd = dual_diagram(P("x^3+y^3+z^3-3*x*y*z+z^4"));
  std::vector<Weight> positive;
  for (const auto& r : dd.rays)
    if (std::all_of(r.begin(), r.end(), [](long long x) { return x > 0; })) positive.push_back(r);
  CHECK(positive == std::vector<Weight>{{1, 1, 1}});

  auto local = dual_diagram(P(kLocalSextic, W));
  CHECK(as_set(local.rays) == std::set<Point>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 3, 6}});

  auto mono = dual_diagram(P("x*y^2*z"));
  CHECK(mono.maximal_cones.size() == 1);
}

TEST_CASE("convenience") {
  CHECK(is_convenient(P("x^2+y^2+z^2")));
  CHECK(is_convenient(P("(x-y)^2+y^3", XY)));
  auto pulled = P("u1^2*((u2-1)^2+u1)", {"u1", "u2"});
  CHECK_FALSE(is_convenient(pulled));
  CHECK(is_pseudo_convenient(pulled));
  CHECK_FALSE(is_convenient(P("x^3+y^3")));
  CHECK_FALSE(is_pseudo_convenient(P("x^3+y^3")));
}

TEST_CASE("cone volumes") {
  CHECK(cone_lattice_volume({{3, 0}, {2, 2}}) == 6);
  CHECK(cone_lattice_volume({{4, 0, 0}, {3, 2, 0}, {3, 0, 2}}) == 16);
  CHECK(cone_lattice_volume({{1, 0}, {0, 1}}) == 1);
}

TEST_CASE("chi of weights") {
  auto f = P("x^6+y^6+z^6");
  CHECK(chi_weight(f, {0, 1, 2}, {1, 1, 1}) == 36);
  CHECK(chi_weight(P("(x-y)^2+y^3", XY), {0, 1}, {1, 1}) == -2);
  CHECK(chi_weight(P("z^5"), {2}, {1}) == 1);
}

TEST_CASE("torus hypersurface Euler characteristic") {
  CHECK(torus_hypersurface_euler(P("x+y+x*y", XY)) == -1);
  CHECK(torus_hypersurface_euler(P("x+1", {"x"})) == 1);
  CHECK(torus_hypersurface_euler(P("x+y+1", XY)) == -1);
}

TEST_CASE("faces are supporting and complete on random supports") {
  std::mt19937_64 rng(20261015);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + round % 2;
    std::vector<Point> s;
    const int k = 3 + static_cast<int>(rng() % 10);
    for (int i = 0; i < k; ++i) {
      Point p(n);
      for (auto& x : p) x = static_cast<long long>(rng() % 6);
      if (std::accumulate(p.begin(), p.end(), 0LL) > 0) s.push_back(p);
    }
    for (int i = 0; i < n; ++i) {
      Point axis(n, 0);
      axis[i] = 2 + static_cast<long long>(rng() % 5);
      s.push_back(axis);
    }
    auto nb = newton_boundary(s);
    for (const auto* f : nb.maximal_faces()) {
      long long lo = -1;
      std::set<Point> on;
      for (const auto& p : s) {
        const long long v = std::inner_product(p.begin(), p.end(), f->weight.begin(), 0LL);
        if (lo < 0 || v < lo) {
          lo = v;
          on = {p};
        } else if (v == lo) {
          on.insert(p);
        }
      }
      CHECK(lo == f->d);
      CHECK(on == as_set(f->points));
    }
    // Every positive weight selects a compact face of the boundary.
    for (int t = 0; t < 10; ++t) {
      Weight w(n);
      for (auto& x : w) x = 1 + static_cast<long long>(rng() % 9);
      auto sm = support_min(s, w);
      bool found = false;
      for (const auto& face : nb.faces) found = found || as_set(face.points) == as_set(sm.face.points);
      CHECK(found);
    }
    auto pts = s;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CHECK(normalized_volume(pts, false) == normalized_volume(pts, true));
  }
}

TEST_CASE("normalized area agrees with the shoelace formula") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 100; ++round) {
    std::vector<Point> s;
    std::vector<std::pair<long long, long long>> planar;
    for (int i = 0; i < 3 + static_cast<int>(rng() % 6); ++i) {
      Point p{static_cast<long long>(rng() % 7), static_cast<long long>(rng() % 7)};
      s.push_back(p);
      planar.push_back({p[0], p[1]});
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (affine_dim(s) < 2) continue;
    CHECK(normalized_volume(s) == oracle::hull_area2(planar));
  }
}

TEST_CASE("chi is always an exact integer") {
  auto r = props::chi_integrality(11, 200);
  INFO(r.summary());
  CHECK(r.ok(200));
}

TEST_CASE("suspension identities") {
  auto r = props::suspension_identities(12, 150);
  INFO(r.summary());
  CHECK(r.ok(100));
}
