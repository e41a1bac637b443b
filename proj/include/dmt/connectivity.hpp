#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"
#include "dmt/persistence.hpp"

namespace dmt {

/// View of a complex of dimension <= 1. Strong-connection analysis between
/// two Morse functions is defined for graphs only.
class GraphView {
 public:
  static GraphView of(const SimplicialComplex& K) {
    if (K.dim() > 1)
      throw Error(ErrorKind::not_a_graph,
                  "complex has dimension " + std::to_string(K.dim()) +
                      "; this operation is restricted to graphs");
    GraphView G;
    G.K_ = &K;
    const auto [vf, vl] = K.ids_of_dim(0);
    const auto [ef, el] = K.ids_of_dim(1);
    G.vertex_first_ = vf;
    G.vertex_count_ = static_cast<size_t>(vl - vf);
    G.edge_first_ = ef;
    G.edge_count_ = static_cast<size_t>(el - ef);
    return G;
  }

  const SimplicialComplex& complex() const { return *K_; }
  size_t vertex_count() const { return vertex_count_; }
  size_t edge_count() const { return edge_count_; }
  SimplexId vertex_first() const { return vertex_first_; }
  SimplexId edge_first() const { return edge_first_; }
  bool is_vertex(SimplexId s) const { return K_->dim_of(s) == 0; }
  bool is_edge(SimplexId s) const { return K_->dim_of(s) == 1; }
  size_t edge_index(SimplexId e) const { return static_cast<size_t>(e - edge_first_); }

  std::pair<SimplexId, SimplexId> endpoints(SimplexId e) const {
    const auto fs = K_->faces(e);
    return {fs[0], fs[1]};
  }

  int64_t euler() const {
    return static_cast<int64_t>(vertex_count_) - static_cast<int64_t>(edge_count_);
  }

 private:
  const SimplicialComplex* K_ = nullptr;
  SimplexId vertex_first_ = 0, edge_first_ = 0;
  size_t vertex_count_ = 0, edge_count_ = 0;
};

/// Flow structure of a gradient field on a graph: every matched vertex has a
/// unique outgoing edge, so each vertex walks a unique chain to the critical
/// vertex of its tree.
struct FieldFlow {
  std::vector<SimplexId> up_edge;   // by vertex: matched edge or kNoSimplex
  std::vector<SimplexId> next;      // by vertex: following vertex on the walk
  std::vector<SimplexId> root;      // by vertex: terminal critical vertex
  std::vector<int32_t> depth;       // by vertex: walk length to the root
  std::vector<SimplexId> edge_down; // by edge index: matched vertex or kNoSimplex
  std::vector<SimplexId> critical_vertices, critical_edges;  // ascending ids
};

inline FieldFlow analyze_flow(const GraphView& G, const GradientVectorField& V) {
  require_valid_gvf(G.complex(), V);
  const size_t nv = G.vertex_count();
  FieldFlow flow;
  flow.up_edge.assign(nv, kNoSimplex);
  flow.next.assign(nv, kNoSimplex);
  flow.root.assign(nv, kNoSimplex);
  flow.depth.assign(nv, 0);
  flow.edge_down.assign(G.edge_count(), kNoSimplex);

  for (const auto& [lo, hi] : V.pairs()) {
    flow.up_edge[lo] = hi;
    flow.edge_down[G.edge_index(hi)] = lo;
    const auto [a, b] = G.endpoints(hi);
    flow.next[lo] = (a == lo) ? b : a;
  }

  std::vector<SimplexId> chain;
  for (SimplexId v = 0; v < static_cast<SimplexId>(nv); ++v) {
    if (flow.root[v] != kNoSimplex) continue;
    chain.clear();
    SimplexId w = v;
    while (flow.root[w] == kNoSimplex && flow.next[w] != kNoSimplex) {
      chain.push_back(w);
      w = flow.next[w];
    }
    SimplexId root = flow.root[w] != kNoSimplex ? flow.root[w] : w;
    int32_t depth = flow.root[w] != kNoSimplex ? flow.depth[w] : 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      flow.root[*it] = root;
      flow.depth[*it] = ++depth;
    }
    if (flow.root[w] == kNoSimplex) {
      flow.root[w] = w;
      flow.depth[w] = 0;
    }
  }

  for (SimplexId v = 0; v < static_cast<SimplexId>(nv); ++v)
    if (flow.up_edge[v] == kNoSimplex) flow.critical_vertices.push_back(v);
  for (size_t e = 0; e < G.edge_count(); ++e)
    if (flow.edge_down[e] == kNoSimplex)
      flow.critical_edges.push_back(G.edge_first() + static_cast<SimplexId>(e));
  return flow;
}

namespace detail {

/// Whether c lies on the walk from u to its root (inclusive).
inline bool on_root_path(const FieldFlow& flow, SimplexId c, SimplexId u) {
  if (flow.root[c] != flow.root[u] || flow.depth[c] > flow.depth[u]) return false;
  while (flow.depth[u] > flow.depth[c]) u = flow.next[u];
  return u == c;
}

/// Number of gradient paths between two vertices in the flow; the target must
/// be critical in the flow's field. Either 0 or 1 on any graph.
inline size_t flow_path_count_vertices(const FieldFlow& flow, SimplexId from, SimplexId to) {
  return flow.root[from] == to ? 1 : 0;
}

/// Number of gradient paths between two edges in the flow; the source must be
/// unmatched in the flow's field. At most one path per source endpoint.
inline size_t flow_path_count_edges(const GraphView& G, const FieldFlow& flow, SimplexId from,
                                    SimplexId to) {
  if (from == to) return 1;  // trivial path
  const SimplexId c = flow.edge_down[G.edge_index(to)];
  if (c == kNoSimplex) return 0;
  const auto [u1, u2] = G.endpoints(from);
  return (on_root_path(flow, c, u1) ? 1 : 0) + (on_root_path(flow, c, u2) ? 1 : 0);
}

}  // namespace detail

/// Strong-pair counts between two fields, dimension by dimension.
struct StrongCounts {
  int64_t a0 = 0;
  int64_t a1 = 0;
};

/// Counts the strongly connected pairs between the critical simplices of two
/// fields: a pair of critical vertices connects through the other field's
/// flow, a pair of critical edges through its own field's flow.
inline StrongCounts strong_pair_counts(const GraphView& G, const FieldFlow& flow1,
                                       const FieldFlow& flow2) {
  StrongCounts counts;
  for (SimplexId v : flow1.critical_vertices) {
    const SimplexId partner = flow2.root[v];
    if (flow1.root[partner] == v) counts.a0 += 1;
  }
  for (SimplexId e1 : flow1.critical_edges) {
    for (SimplexId e2 : flow2.critical_edges) {
      if (detail::flow_path_count_edges(G, flow1, e1, e2) > 0 &&
          detail::flow_path_count_edges(G, flow2, e2, e1) > 0)
        counts.a1 += 1;
    }
  }
  return counts;
}

struct EulerCheck {
  int64_t a0 = 0;
  int64_t a1 = 0;
  int64_t chi = 0;
  bool ok = false;
};

inline EulerCheck euler_check_fields(const GraphView& G, const FieldFlow& flow1,
                                     const FieldFlow& flow2) {
  const StrongCounts counts = strong_pair_counts(G, flow1, flow2);
  EulerCheck check;
  check.a0 = counts.a0;
  check.a1 = counts.a1;
  check.chi = G.euler();
  check.ok = check.a0 - check.a1 == check.chi;
  return check;
}

struct ConnectionResult {
  bool connected = false;
  std::optional<GradientPath> witness;
};

namespace detail {

inline void require_critical_argument(const SimplicialComplex& K, const CriticalInfo& info,
                                      SimplexId s, int q, const char* role) {
  if (K.dim_of(s) != q)
    throw Error(ErrorKind::dimension, std::string(role) + " '" + K.name(s) +
                                          "' does not have dimension " + std::to_string(q));
  if (!info.is_critical[s])
    throw Error(ErrorKind::invalid_function,
                std::string(role) + " '" + K.name(s) + "' is not critical");
}

}  // namespace detail

/// Directed connection between a critical simplex of f1 and one of f2. In
/// dimension 0 the witness path runs in the field of the target's function;
/// in dimension 1 it runs in the field of the source's function.
inline ConnectionResult connected(const SimplicialComplex& K, const MorseFunction& f1,
                                  SimplexId alpha, const MorseFunction& f2, SimplexId beta,
                                  int q) {
  GraphView::of(K);
  if (q != 0 && q != 1)
    throw Error(ErrorKind::dimension, "connections are defined for dimensions 0 and 1");
  const CriticalInfo info1 = critical_simplices(K, f1);
  const CriticalInfo info2 = critical_simplices(K, f2);
  detail::require_critical_argument(K, info1, alpha, q, "source");
  detail::require_critical_argument(K, info2, beta, q, "target");
  const GradientVectorField field = q == 0 ? gradient_field(K, f2) : gradient_field(K, f1);
  std::vector<GradientPath> paths = v_paths(K, field, alpha, beta, 0);
  ConnectionResult result;
  result.connected = !paths.empty();
  if (result.connected) result.witness = std::move(paths.front());
  return result;
}

inline bool strongly_connected(const SimplicialComplex& K, const MorseFunction& f1,
                               SimplexId alpha, const MorseFunction& f2, SimplexId beta, int q) {
  return connected(K, f1, alpha, f2, beta, q).connected &&
         connected(K, f2, beta, f1, alpha, q).connected;
}

struct ConnectionEntry {
  SimplexId alpha = kNoSimplex;  // critical for the first function
  SimplexId beta = kNoSimplex;   // critical for the second function
  std::vector<GradientPath> forward, backward;

  bool strong() const { return !forward.empty() && !backward.empty(); }
};

struct ConnectionReport {
  int q = 0;
  int64_t strong_pairs = 0;
  std::vector<ConnectionEntry> entries;  // pairs connected in at least one direction
};

/// Full connection table between the dimension-q critical simplices of two
/// fields, with every witness path listed for both directions.
inline ConnectionReport connection_matrix(const SimplicialComplex& K,
                                          const GradientVectorField& V1,
                                          const GradientVectorField& V2, int q) {
  GraphView::of(K);
  if (q != 0 && q != 1)
    throw Error(ErrorKind::dimension, "connections are defined for dimensions 0 and 1");
  require_valid_gvf(K, V1);
  require_valid_gvf(K, V2);

  const auto critical_of = [&](const GradientVectorField& V) {
    std::vector<SimplexId> out;
    const auto [first, last] = K.ids_of_dim(q);
    for (SimplexId s = first; s < last; ++s)
      if (!V.paired(s)) out.push_back(s);
    return out;
  };

  ConnectionReport report;
  report.q = q;
  const std::vector<SimplexId> crit1 = critical_of(V1);
  const std::vector<SimplexId> crit2 = critical_of(V2);
  const GradientVectorField& forward_field = q == 0 ? V2 : V1;
  const GradientVectorField& backward_field = q == 0 ? V1 : V2;
  for (SimplexId alpha : crit1) {
    for (SimplexId beta : crit2) {
      ConnectionEntry entry;
      entry.alpha = alpha;
      entry.beta = beta;
      entry.forward = v_paths(K, forward_field, alpha, beta, 0);
      entry.backward = v_paths(K, backward_field, beta, alpha, 0);
      if (entry.forward.empty() && entry.backward.empty()) continue;
      if (entry.strong()) report.strong_pairs += 1;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

inline ConnectionReport connection_matrix(const SimplicialComplex& K, const MorseFunction& f1,
                                          const MorseFunction& f2, int q) {
  return connection_matrix(K, gradient_field(K, f1), gradient_field(K, f2), q);
}

/// Checks the identity (strong vertex pairs) - (strong edge pairs) == Euler
/// characteristic for two Morse functions on a graph.
inline EulerCheck verify_euler_theorem(const SimplicialComplex& K, const MorseFunction& f1,
                                       const MorseFunction& f2) {
  const GraphView G = GraphView::of(K);
  const ConnectionReport r0 = connection_matrix(K, f1, f2, 0);
  const ConnectionReport r1 = connection_matrix(K, f1, f2, 1);
  EulerCheck check;
  check.a0 = r0.strong_pairs;
  check.a1 = r1.strong_pairs;
  check.chi = G.euler();
  check.ok = check.a0 - check.a1 == check.chi;
  return check;
}

struct RootedTree {
  SimplexId root = kNoSimplex;
  std::vector<SimplexId> vertices, edges;  // ascending ids, root included
};

struct RootedForest {
  std::vector<RootedTree> trees;       // ordered by root id
  std::vector<int32_t> tree_of_vertex; // by vertex id
};

/// Components of the graph after removing all critical edges, each rooted at
/// its unique critical vertex; every non-root vertex is matched with its first
/// edge on the walk to the root.
inline RootedForest rooted_forest_field(const GraphView& G, const GradientVectorField& V) {
  const FieldFlow flow = analyze_flow(G, V);
  RootedForest forest;
  forest.tree_of_vertex.assign(G.vertex_count(), -1);
  for (size_t i = 0; i < flow.critical_vertices.size(); ++i) {
    RootedTree tree;
    tree.root = flow.critical_vertices[i];
    forest.trees.push_back(std::move(tree));
  }
  const auto tree_index_of_root = [&](SimplexId root) {
    const auto it = std::lower_bound(flow.critical_vertices.begin(),
                                     flow.critical_vertices.end(), root);
    return static_cast<int32_t>(it - flow.critical_vertices.begin());
  };
  for (SimplexId v = 0; v < static_cast<SimplexId>(G.vertex_count()); ++v) {
    const int32_t t = tree_index_of_root(flow.root[v]);
    forest.tree_of_vertex[v] = t;
    forest.trees[t].vertices.push_back(v);
    if (flow.up_edge[v] != kNoSimplex) forest.trees[t].edges.push_back(flow.up_edge[v]);
  }
  for (RootedTree& tree : forest.trees) std::sort(tree.edges.begin(), tree.edges.end());
  return forest;
}

inline RootedForest rooted_forest(const SimplicialComplex& K, const MorseFunction& f) {
  const GraphView G = GraphView::of(K);
  return rooted_forest_field(G, gradient_field(K, f));
}

struct Subgraph {
  std::vector<SimplexId> vertices, edges;
  std::string note;

  bool empty() const { return vertices.empty() && edges.empty(); }
};

/// The subgraph of the tree rooted at v spanned by the gradient walks from
/// the faces of the critical edge e, together with the branches of the tree
/// that do not originate at a face of any critical edge.
inline Subgraph tree_of_edge(const SimplicialComplex& K, const MorseFunction& f, SimplexId e,
                             SimplexId v) {
  const GraphView G = GraphView::of(K);
  if (K.dim_of(e) != 1)
    throw Error(ErrorKind::dimension, "'" + K.name(e) + "' is not an edge");
  if (K.dim_of(v) != 0)
    throw Error(ErrorKind::dimension, "'" + K.name(v) + "' is not a vertex");
  const CriticalInfo info = critical_simplices(K, f);

  Subgraph out;
  if (!info.is_critical[e]) {
    out.note = "edge '" + K.name(e) + "' is not critical";
    return out;
  }
  if (!info.is_critical[v]) {
    out.note = "vertex '" + K.name(v) + "' is not critical";
    return out;
  }
  const FieldFlow flow = analyze_flow(G, gradient_field(K, f));

  const auto add_walk = [&](SimplexId from) {
    SimplexId w = from;
    out.vertices.push_back(w);
    while (w != flow.root[w]) {
      out.edges.push_back(flow.up_edge[w]);
      w = flow.next[w];
      out.vertices.push_back(w);
    }
  };

  const auto [u1, u2] = G.endpoints(e);
  bool any_face_flows_in = false;
  for (SimplexId u : {u1, u2}) {
    if (flow.root[u] == v) {
      any_face_flows_in = true;
      add_walk(u);
    }
  }
  if (!any_face_flows_in) {
    out.note = "no face of '" + K.name(e) + "' flows into the tree rooted at '" +
               K.name(v) + "'";
    return out;
  }

  // Branches: walks from childless tree vertices that are not a face of any
  // critical edge.
  std::vector<int32_t> children(G.vertex_count(), 0);
  for (SimplexId w = 0; w < static_cast<SimplexId>(G.vertex_count()); ++w)
    if (flow.next[w] != kNoSimplex && flow.root[w] == v) children[flow.next[w]] += 1;
  std::vector<char> touches_critical_edge(G.vertex_count(), 0);
  for (SimplexId ce : flow.critical_edges) {
    const auto [a, b] = G.endpoints(ce);
    touches_critical_edge[a] = 1;
    touches_critical_edge[b] = 1;
  }
  for (SimplexId w = 0; w < static_cast<SimplexId>(G.vertex_count()); ++w) {
    if (flow.root[w] != v || children[w] != 0) continue;
    if (touches_critical_edge[w]) continue;
    add_walk(w);
  }

  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

/// Whether the number of critical simplices matches the Betti number in every
/// dimension.
inline bool is_optimal(const SimplicialComplex& K, const MorseFunction& f) {
  const CriticalInfo info = critical_simplices(K, f);
  const std::vector<int64_t> betti = K.betti_numbers();
  for (int q = 0; q <= K.dim(); ++q)
    if (info.counts_by_dim[q] != betti[q]) return false;
  return true;
}

}  // namespace dmt
