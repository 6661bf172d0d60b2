#ifndef MILNOR_PLUMBING_HPP
#define MILNOR_PLUMBING_HPP

#include <optional>
#include <string>
#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

struct GraphNode {
  std::string id;
  int genus = 0;
  std::optional<long long> self_intersection;  // unset until solved
  std::vector<long long> multiplicities;       // one per reference function
};

struct GraphEdge {
  int a = 0, b = 0;  // a < b
  long long count = 1;
};

// A non-compact divisor (strict transform of a reference function) meeting
// a compact node.
struct NoncompactAttachment {
  int node = 0;
  long long count = 0;
  long long multiplicity = 1;
  int reference = 0;
};

// Graph file, one record per line, '#' starts a comment:
//   refs NAME...
//   node ID GENUS SELF|? MULT...
//   edge ID ID
//   noncompact ID COUNT MULT [REF]
struct ResolutionGraph {
  std::vector<std::string> references;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<NoncompactAttachment> noncompact;

  int index_of(const std::string& id) const;  // -1 when absent
  int reference_index(const std::string& name) const;
  long long edge_count(int a, int b) const;
  int components() const;
  long long first_betti() const;
  bool is_tree() const { return components() == 1 && first_betti() == 0; }
  bool solved() const;
};

ResolutionGraph parse_graph(const std::string& text);
ResolutionGraph read_graph_file(const std::string& path);
std::string graph_to_text(const ResolutionGraph& g);

// Unknown self-intersections from (pullback of the reference) . C = 0.
ResolutionGraph solve_self_intersections(ResolutionGraph g, const std::string& reference);
// (pullback of the reference) . C for every node; all zero on solved data.
std::vector<long long> divisor_residuals(const ResolutionGraph& g, int reference);

IntMat intersection_matrix(const ResolutionGraph& g);
BigInt determinant(const IntMat& m);

struct SmithForm {
  BigMat U, V, D;  // U * M * V = D
  std::vector<BigInt> invariant_factors;  // nonzero diagonal, positive, dividing chain
  int rank = 0;
};
SmithForm smith_normal_form(const IntMat& m);
bool verify_smith(const IntMat& m, const SmithForm& s);

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above a pivot reduced into [0, pivot).
BigMat hermite_normal_form(BigMat m);

struct AbelianGroup {
  long long free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  BigInt torsion_order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel Z^cols / rowspace(relations).
AbelianGroup cokernel_smith(const IntMat& relations);
// Same group by alternating Hermite reductions, independent of the Smith code.
AbelianGroup cokernel_hermite(const BigMat& relations);

struct Presentation {
  std::vector<std::string> generators;
  BigMat relations;  // one row per relation, abelianized
  std::vector<std::string> relation_names;
};

// Fiber generator per node, two surface generators per genus, one generator
// per independent cycle of the graph; relation sum_i s_ij g_i = 0 per node.
Presentation mumford_presentation(const ResolutionGraph& g);
std::string render_presentation(const Presentation& p);

AbelianGroup h1_plumbed(const ResolutionGraph& g);

long long genus_from_euler(long long chi);

// Isomorphism-invariant string for trees (genus and self-intersection labels).
std::string canonical_form(const ResolutionGraph& g);

std::string to_dot(const ResolutionGraph& g, const std::string& name = "plumbing");

}  // namespace milnor

#endif  // MILNOR_PLUMBING_HPP
