#include <doctest.h>

#include "milnor/plumbing.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace milnor;

namespace {
ResolutionGraph solved(const std::string& file) {
  auto g = read_graph_file(std::string(MILNOR_DATA_DIR "/") + file);
  return solve_self_intersections(g, g.references.at(0));
}

long long self(const ResolutionGraph& g, const std::string& id) { return *g.nodes.at(g.index_of(id)).self_intersection; }
}  // namespace

TEST_CASE("self-intersections of both sextic graphs") {
  for (const char* file : {"sextic_f.graph", "sextic_g.graph"}) {
    auto g = solved(file);
    for (int i = 1; i <= 6; ++i) {
      const std::string k = std::to_string(i);
      CHECK(self(g, "P" + k) == -1);
      CHECK(self(g, "T" + k) == -2);
      CHECK(self(g, "S" + k) == -3);
    }
    CHECK(self(g, "E0") == -42);
    CHECK(g.is_tree());
    for (long long r : divisor_residuals(g, 0)) CHECK(r == 0);
  }
}

TEST_CASE("single node with a non-compact branch") {
  for (long long k = 1; k <= 4; ++k) {
    auto g = parse_graph("refs h\nnode A 0 ? 1\nnoncompact A " + std::to_string(k) + " 1\n");
    CHECK(self(solve_self_intersections(g, "h"), "A") == -k);
  }
}

TEST_CASE("solving rejects inconsistent data") {
  CHECK_THROWS_AS(solve_self_intersections(parse_graph("refs h\nnode A 0 ? 2\nnoncompact A 1 1\n"), "h"),
                  InconsistencyError);
  CHECK_THROWS_AS(solve_self_intersections(parse_graph("refs h\nnode A 0 -3 1\nnoncompact A 1 1\n"), "h"),
                  InconsistencyError);
}

TEST_CASE("graph parse errors name the line") {
  try {
    parse_graph("refs h\nnode A 0 ? 1\nedge A B\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("vertex A\n"), ParseError);
}

TEST_CASE("intersection matrices and determinants") {
  auto g = solved("sextic_f.graph");
  auto m = intersection_matrix(g);
  CHECK(m.rows() == 19);
  CHECK(determinant(m) == -6);
  CHECK(determinant(intersection_matrix(solved("sextic_g.graph"))) == -6);
  CHECK(determinant(intersection_matrix(parse_graph("node A 0 -1\n"))) == -1);
  CHECK(determinant(intersection_matrix(parse_graph("node A 0 -2\nnode B 0 -2\nedge A B\n"))) == 3);
}

TEST_CASE("Smith normal forms") {
  IntMat a(2, 2);
  a << 2, 0, 0, 3;
  auto s = smith_normal_form(a);
  CHECK(s.invariant_factors == std::vector<BigInt>{1, 6});
  CHECK(verify_smith(a, s));

  auto f = smith_normal_form(intersection_matrix(solved("sextic_f.graph")));
  REQUIRE(f.invariant_factors.size() == 19);
  for (size_t i = 0; i + 1 < 19; ++i) CHECK(f.invariant_factors[i] == 1);
  CHECK(f.invariant_factors.back() == 6);

  auto id = smith_normal_form(IntMat::Identity(4, 4));
  CHECK(id.invariant_factors == std::vector<BigInt>(4, 1));
}

TEST_CASE("Mumford presentation of the sextic graph") {
  auto g = solved("sextic_f.graph");
  auto p = mumford_presentation(g);
  CHECK(p.generators.size() == 19 + 8);
  CHECK(p.relations.rows() == 19);
  // relations for one branch solve to p = 6 e0, t = 3 e0, s = 2 e0, and 6 e0 = 0
  const AbelianGroup h = cokernel_hermite(p.relations);
  CHECK(h.to_string() == "Z^8 + Z/6");
  CHECK(render_presentation(p).find("R_E0") != std::string::npos);

  auto single = mumford_presentation(parse_graph("node A 0 -1\n"));
  CHECK(single.relations.rows() == 1);
  CHECK(single.relations(0, 0) == -1);
}

TEST_CASE("first homology of plumbed manifolds") {
  CHECK(h1_plumbed(solved("sextic_f.graph")).to_string() == "Z^8 + Z/6");
  CHECK(h1_plumbed(solved("sextic_g.graph")).to_string() == "Z^8 + Z/6");
  for (int genus = 0; genus <= 3; ++genus) {
    auto h = h1_plumbed(parse_graph("node A " + std::to_string(genus) + " -1\n"));
    CHECK(h.free_rank == 2 * genus);
    CHECK(h.torsion.empty());
  }
  auto e8 = read_graph_file(MILNOR_DATA_DIR "/e8.graph");
  auto h = h1_plumbed(e8);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion.empty());
  CHECK(std::llabs(oracle::det_ll([&] {
          auto m = intersection_matrix(e8);
          std::vector<std::vector<long long>> r(m.rows(), std::vector<long long>(m.cols()));
          for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
          return r;
        }())) == 1);
}

TEST_CASE("genus from Euler characteristic") {
  CHECK(genus_from_euler(-6) == 4);
  CHECK(genus_from_euler(2) == 0);
  CHECK(genus_from_euler(-18) == 10);
  CHECK_THROWS(genus_from_euler(3));
}

TEST_CASE("both graphs are isomorphic") {
  CHECK(canonical_form(solved("sextic_f.graph")) == canonical_form(solved("sextic_g.graph")));
  CHECK(canonical_form(parse_graph("node A 0 -2\nnode B 0 -3\nedge A B\n")) ==
        canonical_form(parse_graph("node X 0 -3\nnode Y 0 -2\nedge Y X\n")));
  CHECK(canonical_form(parse_graph("node A 0 -2\nnode B 0 -3\nedge A B\n")) !=
        canonical_form(parse_graph("node A 0 -2\nnode B 0 -2\nedge A B\n")));
}

TEST_CASE("graph text and DOT output") {
  auto g = solved("sextic_f.graph");
  auto back = parse_graph(graph_to_text(g));
  CHECK(canonical_form(back) == canonical_form(g));
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("-42") != std::string::npos);
}

TEST_CASE("Mumford presentation agrees with the Smith form on random trees") {
  auto r = props::mumford_matches_smith(4, 150);
  INFO(r.summary());
  CHECK(r.ok(150));
}

TEST_CASE("Smith certificates on random matrices") {
  auto r = props::smith_certificates(6, 300);
  INFO(r.summary());
  CHECK(r.ok(300));
}
