#include "milnor/plumbing.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace milnor {
namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigMat identity(Eigen::Index n) {
  BigMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = i == j ? 1 : 0;
  return m;
}

BigMat product(const BigMat& a, const BigMat& b) {
  BigMat c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt s = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

void add_row(BigMat& m, Eigen::Index dst, Eigen::Index src, const BigInt& f) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(BigMat& m, Eigen::Index dst, Eigen::Index src, const BigInt& f) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

std::vector<BigInt> divisibility_chain(std::vector<BigInt> d) {
  for (auto& x : d) x = abs_big(x);
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      if (g == d[i]) continue;
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

std::string fail_line(int line, const std::string& what) {
  return "graph line " + std::to_string(line) + ": " + what;
}

long long parse_ll(const std::string& tok, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(fail_line(line, "expected an integer, got '" + tok + "'"));
  }
}

}  // namespace

int ResolutionGraph::index_of(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return static_cast<int>(i);
  return -1;
}

int ResolutionGraph::reference_index(const std::string& name) const {
  for (size_t i = 0; i < references.size(); ++i)
    if (references[i] == name) return static_cast<int>(i);
  return -1;
}

long long ResolutionGraph::edge_count(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges)
    if (e.a == a && e.b == b) return e.count;
  return 0;
}

int ResolutionGraph::components() const {
  std::vector<int> parent(nodes.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges) parent[find(e.a)] = find(e.b);
  int c = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
  return c;
}

long long ResolutionGraph::first_betti() const {
  long long e = 0;
  for (const auto& x : edges) e += x.count;
  return e - static_cast<long long>(nodes.size()) + components();
}

bool ResolutionGraph::solved() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const GraphNode& n) { return n.self_intersection.has_value(); });
}

ResolutionGraph parse_graph(const std::string& text) {
  ResolutionGraph g;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool refs_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "refs") {
      if (refs_seen || !g.nodes.empty()) throw ParseError(fail_line(line, "refs must come first and only once"));
      refs_seen = true;
      g.references.assign(tok.begin() + 1, tok.end());
    } else if (kw == "node") {
      if (tok.size() != 4 + g.references.size())
        throw ParseError(fail_line(line, "node needs id, genus, self-intersection and " +
                                             std::to_string(g.references.size()) + " multiplicities"));
      if (g.index_of(tok[1]) >= 0) throw ParseError(fail_line(line, "duplicate node '" + tok[1] + "'"));
      GraphNode n;
      n.id = tok[1];
      long long genus = parse_ll(tok[2], line);
      if (genus < 0) throw ParseError(fail_line(line, "negative genus"));
      n.genus = static_cast<int>(genus);
      if (tok[3] != "?") n.self_intersection = parse_ll(tok[3], line);
      for (size_t i = 4; i < tok.size(); ++i) n.multiplicities.push_back(parse_ll(tok[i], line));
      g.nodes.push_back(n);
    } else if (kw == "edge") {
      if (tok.size() != 3) throw ParseError(fail_line(line, "edge needs two node ids"));
      int a = g.index_of(tok[1]), b = g.index_of(tok[2]);
      if (a < 0 || b < 0) throw ParseError(fail_line(line, "edge refers to an unknown node"));
      if (a == b) throw ParseError(fail_line(line, "self-loop on '" + tok[1] + "'"));
      if (a > b) std::swap(a, b);
      auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) { return e.a == a && e.b == b; });
      if (it != g.edges.end())
        ++it->count;
      else
        g.edges.push_back({a, b, 1});
    } else if (kw == "noncompact") {
      if (tok.size() != 4 && tok.size() != 5) throw ParseError(fail_line(line, "noncompact needs id, count, multiplicity"));
      NoncompactAttachment nc;
      nc.node = g.index_of(tok[1]);
      if (nc.node < 0) throw ParseError(fail_line(line, "unknown node '" + tok[1] + "'"));
      nc.count = parse_ll(tok[2], line);
      nc.multiplicity = parse_ll(tok[3], line);
      if (nc.count < 0) throw ParseError(fail_line(line, "negative intersection count"));
      if (tok.size() == 5) {
        nc.reference = g.reference_index(tok[4]);
        if (nc.reference < 0) throw ParseError(fail_line(line, "unknown reference '" + tok[4] + "'"));
      } else if (g.references.size() > 1) {
        throw ParseError(fail_line(line, "noncompact must name its reference"));
      }
      g.noncompact.push_back(nc);
    } else {
      throw ParseError(fail_line(line, "unknown record '" + kw + "'"));
    }
  }
  if (g.nodes.empty()) throw ParseError("graph has no nodes");
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return g;
}

ResolutionGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_to_text(const ResolutionGraph& g) {
  std::ostringstream out;
  if (!g.references.empty()) {
    out << "refs";
    for (const auto& r : g.references) out << ' ' << r;
    out << '\n';
  }
  for (const auto& n : g.nodes) {
    out << "node " << n.id << ' ' << n.genus << ' ';
    if (n.self_intersection)
      out << *n.self_intersection;
    else
      out << '?';
    for (long long m : n.multiplicities) out << ' ' << m;
    out << '\n';
  }
  for (const auto& e : g.edges)
    for (long long k = 0; k < e.count; ++k) out << "edge " << g.nodes[e.a].id << ' ' << g.nodes[e.b].id << '\n';
  for (const auto& nc : g.noncompact) {
    out << "noncompact " << g.nodes[nc.node].id << ' ' << nc.count << ' ' << nc.multiplicity;
    if (!g.references.empty()) out << ' ' << g.references[nc.reference];
    out << '\n';
  }
  return out.str();
}

std::vector<long long> divisor_residuals(const ResolutionGraph& g, int reference) {
  std::vector<long long> r(g.nodes.size(), 0);
  for (size_t c = 0; c < g.nodes.size(); ++c) {
    const auto& n = g.nodes[c];
    if (!n.self_intersection) throw DomainError("node '" + n.id + "' has no self-intersection");
    r[c] = checked_mul(n.multiplicities.at(reference), *n.self_intersection);
  }
  for (const auto& e : g.edges) {
    r[e.a] = checked_add(r[e.a], checked_mul(e.count, g.nodes[e.b].multiplicities.at(reference)));
    r[e.b] = checked_add(r[e.b], checked_mul(e.count, g.nodes[e.a].multiplicities.at(reference)));
  }
  for (const auto& nc : g.noncompact)
    if (nc.reference == reference) r[nc.node] = checked_add(r[nc.node], checked_mul(nc.count, nc.multiplicity));
  return r;
}

ResolutionGraph solve_self_intersections(ResolutionGraph g, const std::string& reference) {
  const int ref = g.reference_index(reference);
  if (ref < 0) throw DomainError("unknown reference function '" + reference + "'");
  std::vector<long long> rest(g.nodes.size(), 0);
  for (const auto& e : g.edges) {
    rest[e.a] = checked_add(rest[e.a], checked_mul(e.count, g.nodes[e.b].multiplicities[ref]));
    rest[e.b] = checked_add(rest[e.b], checked_mul(e.count, g.nodes[e.a].multiplicities[ref]));
  }
  for (const auto& nc : g.noncompact)
    if (nc.reference == ref) rest[nc.node] = checked_add(rest[nc.node], checked_mul(nc.count, nc.multiplicity));
  for (size_t c = 0; c < g.nodes.size(); ++c) {
    auto& n = g.nodes[c];
    const long long m = n.multiplicities[ref];
    if (n.self_intersection) {
      if (checked_add(checked_mul(m, *n.self_intersection), rest[c]) != 0)
        throw InconsistencyError("given self-intersection of '" + n.id + "' contradicts " + reference);
      continue;
    }
    if (m == 0) throw DomainError("node '" + n.id + "' has multiplicity zero in " + reference);
    if (rest[c] % m != 0)
      throw InconsistencyError("self-intersection of '" + n.id + "' is not an integer: " +
                               std::to_string(-rest[c]) + "/" + std::to_string(m));
    n.self_intersection = -rest[c] / m;
  }
  for (long long r : divisor_residuals(g, ref))
    if (r != 0) throw InconsistencyError("solved graph does not satisfy the divisor relation");
  return g;
}

IntMat intersection_matrix(const ResolutionGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.nodes.size());
  IntMat m = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!g.nodes[i].self_intersection)
      throw DomainError("node '" + g.nodes[i].id + "' has no self-intersection");
    m(i, i) = *g.nodes[i].self_intersection;
  }
  for (const auto& e : g.edges) {
    m(e.a, e.b) += e.count;
    m(e.b, e.a) += e.count;
  }
  return m;
}

BigInt determinant(const IntMat& m) { return det_bareiss<BigInt>(m.cast<BigInt>()); }

SmithForm smith_normal_form(const IntMat& m) {
  SmithForm s;
  const Eigen::Index r = m.rows(), c = m.cols();
  BigMat A = m.cast<BigInt>();
  s.U = identity(r);
  s.V = identity(c);
  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    A.row(i).swap(A.row(j));
    s.U.row(i).swap(s.U.row(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    A.col(i).swap(A.col(j));
    s.V.col(i).swap(s.V.col(j));
  };
  for (Eigen::Index t = 0; t < std::min(r, c); ++t) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < r; ++i)
      for (Eigen::Index j = t; j < c; ++j)
        if (A(i, j) != 0 && (pi < 0 || abs_big(A(i, j)) < abs_big(A(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < r; ++i) {
        if (A(i, t) == 0) continue;
        BigInt q = A(i, t) / A(t, t);
        add_row(A, i, t, -q);
        add_row(s.U, i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < c; ++j) {
        if (A(t, j) == 0) continue;
        BigInt q = A(t, j) / A(t, t);
        add_col(A, j, t, -q);
        add_col(s.V, j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        Eigen::Index bi = t, bj = t;
        for (Eigen::Index i = t + 1; i < r; ++i)
          if (A(i, t) != 0 && abs_big(A(i, t)) < abs_big(A(bi, bj))) bi = i, bj = t;
        for (Eigen::Index j = t + 1; j < c; ++j)
          if (A(t, j) != 0 && abs_big(A(t, j)) < abs_big(A(bi, bj))) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < r && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < c; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(A, t, bad, BigInt(1));
      add_row(s.U, t, bad, BigInt(1));
    }
    if (A(t, t) < 0) {
      A.row(t) = -A.row(t);
      s.U.row(t) = -s.U.row(t);
    }
    s.invariant_factors.push_back(A(t, t));
    ++s.rank;
  }
  s.D = A;
  return s;
}

bool verify_smith(const IntMat& m, const SmithForm& s) {
  if (product(product(s.U, m.cast<BigInt>()), s.V) != s.D) return false;
  if (abs_big(det_bareiss<BigInt>(s.U)) != 1 || abs_big(det_bareiss<BigInt>(s.V)) != 1) return false;
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return false;
  for (size_t k = 0; k < s.invariant_factors.size(); ++k) {
    if (s.invariant_factors[k] <= 0) return false;
    if (k + 1 < s.invariant_factors.size() && s.invariant_factors[k + 1] % s.invariant_factors[k] != 0) return false;
  }
  return true;
}

BigMat hermite_normal_form(BigMat m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < c && row < r; ++col) {
    while (true) {
      Eigen::Index p = -1;
      for (Eigen::Index i = row; i < r; ++i)
        if (m(i, col) != 0 && (p < 0 || abs_big(m(i, col)) < abs_big(m(p, col)))) p = i;
      if (p < 0) break;
      m.row(row).swap(m.row(p));
      bool done = true;
      for (Eigen::Index i = row + 1; i < r; ++i) {
        if (m(i, col) == 0) continue;
        add_row(m, i, row, -(m(i, col) / m(row, col)));
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) m.row(row) = -m.row(row);
    for (Eigen::Index i = 0; i < row; ++i) add_row(m, i, row, -floor_div(m(i, col), m(row, col)));
    ++row;
  }
  return m;
}

BigInt AbelianGroup::torsion_order() const {
  BigInt o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + milnor::to_string(t));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

AbelianGroup cokernel_smith(const IntMat& relations) {
  SmithForm s = smith_normal_form(relations);
  if (!verify_smith(relations, s)) throw InconsistencyError("Smith normal form certificate failed");
  AbelianGroup g;
  g.free_rank = relations.cols() - s.rank;
  for (const auto& d : s.invariant_factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup cokernel_hermite(const BigMat& relations) {
  const Eigen::Index n = relations.cols();
  auto nonzero_rows = [](const BigMat& h) {
    Eigen::Index k = 0;
    while (k < h.rows() && !h.row(k).isZero()) ++k;
    return BigMat(h.topRows(k));
  };
  auto is_diagonal = [](const BigMat& h) {
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j)
        if (i != j && h(i, j) != 0) return false;
    return true;
  };
  // Row reductions keep the cokernel; reductions of the transpose are column
  // changes of basis. Alternating them reaches a diagonal matrix.
  BigMat h = nonzero_rows(hermite_normal_form(relations));
  while (!is_diagonal(h)) {
    h = nonzero_rows(hermite_normal_form(BigMat(h.transpose())));
  }
  std::vector<BigInt> d;
  for (Eigen::Index i = 0; i < std::min(h.rows(), h.cols()); ++i)
    if (h(i, i) != 0) d.push_back(h(i, i));
  AbelianGroup g;
  g.free_rank = n - static_cast<long long>(d.size());
  for (const auto& x : divisibility_chain(d))
    if (x != 1) g.torsion.push_back(x);
  return g;
}

Presentation mumford_presentation(const ResolutionGraph& g) {
  Presentation p;
  const size_t n = g.nodes.size();
  for (const auto& node : g.nodes) p.generators.push_back("g_" + node.id);
  for (const auto& node : g.nodes)
    for (int k = 1; k <= node.genus; ++k) {
      p.generators.push_back("a_" + node.id + "_" + std::to_string(k));
      p.generators.push_back("b_" + node.id + "_" + std::to_string(k));
    }
  for (long long k = 1; k <= g.first_betti(); ++k) p.generators.push_back("c_" + std::to_string(k));
  p.relations = BigMat(n, p.generators.size());
  for (Eigen::Index i = 0; i < p.relations.rows(); ++i)
    for (Eigen::Index j = 0; j < p.relations.cols(); ++j) p.relations(i, j) = 0;
  for (size_t j = 0; j < n; ++j) {
    const auto& node = g.nodes[j];
    if (!node.self_intersection) throw DomainError("node '" + node.id + "' has no self-intersection");
    p.relations(j, j) = *node.self_intersection;
    p.relation_names.push_back("R_" + node.id);
  }
  for (const auto& e : g.edges) {
    p.relations(e.a, e.b) += e.count;
    p.relations(e.b, e.a) += e.count;
  }
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (Eigen::Index i = 0; i < p.relations.rows(); ++i) {
    out << p.relation_names[i] << ":";
    bool first = true;
    for (Eigen::Index j = 0; j < p.relations.cols(); ++j) {
      const BigInt& c = p.relations(i, j);
      if (c == 0) continue;
      out << (first ? " " : (c < 0 ? " - " : " + "));
      if (first && c < 0) out << '-';
      first = false;
      BigInt a = abs_big(c);
      if (a != 1) out << to_string(a) << '*';
      out << p.generators[j];
    }
    out << " = 0\n";
  }
  return out.str();
}

AbelianGroup h1_plumbed(const ResolutionGraph& g) {
  AbelianGroup h = cokernel_smith(intersection_matrix(g));
  long long surface = 0;
  for (const auto& n : g.nodes) surface += 2LL * n.genus;
  h.free_rank += surface + g.first_betti();
  return h;
}

long long genus_from_euler(long long chi) {
  if (chi > 2 || chi % 2 != 0) throw DomainError("Euler characteristic " + std::to_string(chi) +
                                                 " is not that of a closed orientable surface");
  return (2 - chi) / 2;
}

std::string canonical_form(const ResolutionGraph& g) {
  if (!g.is_tree()) throw DomainError("canonical form is defined for trees only");
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::function<std::string(int, int)> label = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
      if (w != parent) kids.push_back(label(w, v));
    std::sort(kids.begin(), kids.end());
    const auto& node = g.nodes[v];
    std::string s = "(" + std::to_string(node.genus) + "," +
                    (node.self_intersection ? std::to_string(*node.self_intersection) : std::string("?"));
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  // tree centres by leaf stripping
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    std::string s = label(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::string to_dot(const ResolutionGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [shape=circle];\n";
  for (const auto& n : g.nodes) {
    out << "  \"" << n.id << "\" [label=\"" << n.id << "\\n";
    if (n.self_intersection)
      out << *n.self_intersection;
    else
      out << '?';
    if (n.genus > 0) out << "\\n[" << n.genus << "]";
    out << "\"];\n";
  }
  for (const auto& e : g.edges)
    for (long long k = 0; k < e.count; ++k)
      out << "  \"" << g.nodes[e.a].id << "\" -- \"" << g.nodes[e.b].id << "\";\n";
  int k = 0;
  for (const auto& nc : g.noncompact) {
    const std::string ref = g.references.empty() ? "strict" : g.references[nc.reference];
    const std::string id = ref + "_" + std::to_string(++k);
    out << "  \"" << id << "\" [shape=point];\n";
    out << "  \"" << g.nodes[nc.node].id << "\" -- \"" << id << "\" [style=dashed, label=\"" << nc.count << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace milnor
