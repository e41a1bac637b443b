#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/connectivity.hpp"
#include "dmt/morse.hpp"

namespace dmt {

namespace detail {

/// Deterministic bounded draw, independent of standard-library distribution
/// internals.
template <typename Rng>
uint64_t bounded(Rng& rng, uint64_t n) {
  // Rejection sampling on the top range keeps the draw unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

struct RootChoiceTree {
  std::vector<SimplexId> vertices;              // of this tree, ascending
  std::vector<SimplexId> edges;                 // chosen edges of this tree
};

inline std::vector<std::pair<SimplexId, SimplexId>> pairs_for_rooted_tree(
    const GraphView& G, const RootChoiceTree& tree, SimplexId root) {
  // Each edge is matched with its endpoint farther from the root; a breadth
  // first sweep from the root assigns every other vertex its parent edge.
  std::map<SimplexId, std::vector<SimplexId>> incident;
  for (SimplexId e : tree.edges) {
    const auto [a, b] = G.endpoints(e);
    incident[a].push_back(e);
    incident[b].push_back(e);
  }
  std::vector<std::pair<SimplexId, SimplexId>> pairs;
  std::vector<SimplexId> frontier{root};
  std::map<SimplexId, char> seen{{root, 1}};
  while (!frontier.empty()) {
    const SimplexId at = frontier.back();
    frontier.pop_back();
    for (SimplexId e : incident[at]) {
      const auto [a, b] = G.endpoints(e);
      const SimplexId other = a == at ? b : a;
      if (seen.contains(other)) continue;
      seen[other] = 1;
      pairs.emplace_back(other, e);
      frontier.push_back(other);
    }
  }
  return pairs;
}

struct ForestScratch {
  std::vector<int32_t> parent;

  int32_t find(int32_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

}  // namespace detail

inline constexpr size_t kEnumerationEdgeGuard = 14;

/// Exhaustive, duplicate-free enumeration of all gradient vector fields on a
/// graph: one field per (forest of matched edges, choice of one root per
/// tree). Guarded to at most 14 edges.
inline std::vector<GradientVectorField> enumerate_gvfs(const SimplicialComplex& K) {
  const GraphView G = GraphView::of(K);
  if (G.edge_count() > kEnumerationEdgeGuard)
    throw Error(ErrorKind::size_guard,
                "exhaustive enumeration is limited to " +
                    std::to_string(kEnumerationEdgeGuard) + " edges");

  std::vector<GradientVectorField> fields;
  std::vector<SimplexId> chosen;
  detail::ForestScratch uf;
  uf.parent.resize(G.vertex_count());

  const auto emit = [&] {
    // Group the chosen edges into trees.
    std::map<int32_t, detail::RootChoiceTree> trees;
    for (SimplexId v = 0; v < static_cast<SimplexId>(G.vertex_count()); ++v) uf.parent[v] = v;
    for (SimplexId e : chosen) {
      const auto [a, b] = G.endpoints(e);
      uf.parent[uf.find(a)] = uf.find(b);
    }
    for (SimplexId e : chosen) trees[uf.find(G.endpoints(e).first)].edges.push_back(e);
    for (SimplexId v = 0; v < static_cast<SimplexId>(G.vertex_count()); ++v) {
      const auto it = trees.find(uf.find(v));
      if (it != trees.end()) it->second.vertices.push_back(v);
    }

    std::vector<const detail::RootChoiceTree*> list;
    list.reserve(trees.size());
    for (const auto& [_, tree] : trees) list.push_back(&tree);

    // Odometer over one root choice per tree.
    std::vector<size_t> pick(list.size(), 0);
    while (true) {
      std::vector<std::pair<SimplexId, SimplexId>> pairs;
      for (size_t t = 0; t < list.size(); ++t) {
        const auto tree_pairs =
            detail::pairs_for_rooted_tree(G, *list[t], list[t]->vertices[pick[t]]);
        pairs.insert(pairs.end(), tree_pairs.begin(), tree_pairs.end());
      }
      fields.push_back(GradientVectorField::trusted(K.size(), std::move(pairs)));
      size_t t = 0;
      while (t < list.size() && ++pick[t] == list[t]->vertices.size()) pick[t++] = 0;
      if (t == list.size()) break;
    }
  };

  // Depth-first sweep over all acyclic edge subsets, skip branch first so the
  // empty field comes out first.
  std::vector<int32_t> parents_backup;
  auto recurse = [&](auto&& self, size_t index) -> void {
    if (index == G.edge_count()) {
      emit();
      return;
    }
    self(self, index + 1);
    const SimplexId e = G.edge_first() + static_cast<SimplexId>(index);
    for (SimplexId v = 0; v < static_cast<SimplexId>(G.vertex_count()); ++v) uf.parent[v] = v;
    for (SimplexId c : chosen) {
      const auto [a, b] = G.endpoints(c);
      uf.parent[uf.find(a)] = uf.find(b);
    }
    const auto [a, b] = G.endpoints(e);
    if (uf.find(a) == uf.find(b)) return;  // would close a cycle
    chosen.push_back(e);
    self(self, index + 1);
    chosen.pop_back();
  };
  recurse(recurse, 0);
  return fields;
}

/// A Morse function realizing the given field exactly: integer values along a
/// canonical linear extension of the walk order, so matched pairs fail to
/// increase and every other face relation strictly increases.
inline MorseFunction realize_dmf(const SimplicialComplex& K, const GradientVectorField& V) {
  if (!V.is_matching())
    throw Error(ErrorKind::invalid_field, "gradient field is not a matching");
  const size_t n = K.size();

  // Value order: matched relations descend (coface first), all other
  // codimension-1 relations ascend.
  std::vector<std::vector<SimplexId>> succ(n);
  std::vector<int32_t> indegree(n, 0);
  for (SimplexId s = 0; s < static_cast<SimplexId>(n); ++s) {
    for (SimplexId face : K.faces(s)) {
      if (V.up(face) == s) {
        succ[s].push_back(face);
        indegree[face] += 1;
      } else {
        succ[face].push_back(s);
        indegree[s] += 1;
      }
    }
  }

  std::priority_queue<SimplexId, std::vector<SimplexId>, std::greater<>> ready;
  for (SimplexId s = 0; s < static_cast<SimplexId>(n); ++s)
    if (indegree[s] == 0) ready.push(s);
  std::vector<Rational> values(n);
  int64_t assigned = 0;
  while (!ready.empty()) {
    const SimplexId s = ready.top();
    ready.pop();
    values[s] = Rational(assigned++);
    for (SimplexId t : succ[s])
      if (--indegree[t] == 0) ready.push(t);
  }
  if (assigned != static_cast<int64_t>(n))
    throw Error(ErrorKind::invalid_field, "gradient field has a closed walk");
  return MorseFunction::from_values(K, std::move(values));
}

/// Seed-deterministic random Morse function. Graphs draw a uniform field from
/// the exhaustive enumeration when the edge guard admits it and a random
/// forest with random roots otherwise; other complexes fall back to rejection
/// sampling over value assignments.
inline MorseFunction random_dmf(const SimplicialComplex& K, uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (K.dim() <= 1) {
    const GraphView G = GraphView::of(K);
    if (G.edge_count() <= kEnumerationEdgeGuard) {
      const std::vector<GradientVectorField> fields = enumerate_gvfs(K);
      return realize_dmf(K, fields[detail::bounded(rng, fields.size())]);
    }
    // Random forest: shuffle the edges, toss a coin per edge, skip closures.
    std::vector<SimplexId> edges(G.edge_count());
    std::iota(edges.begin(), edges.end(), G.edge_first());
    for (size_t i = edges.size(); i > 1; --i)
      std::swap(edges[i - 1], edges[detail::bounded(rng, i)]);
    detail::ForestScratch uf;
    uf.parent.resize(G.vertex_count());
    for (SimplexId v = 0; v < static_cast<SimplexId>(G.vertex_count()); ++v) uf.parent[v] = v;
    std::vector<SimplexId> chosen;
    for (SimplexId e : edges) {
      if (rng() & 1) continue;
      const auto [a, b] = G.endpoints(e);
      const int32_t ra = uf.find(a), rb = uf.find(b);
      if (ra == rb) continue;
      uf.parent[ra] = rb;
      chosen.push_back(e);
    }
    std::map<int32_t, detail::RootChoiceTree> trees;
    for (SimplexId e : chosen) trees[uf.find(G.endpoints(e).first)].edges.push_back(e);
    for (SimplexId v = 0; v < static_cast<SimplexId>(G.vertex_count()); ++v) {
      const auto it = trees.find(uf.find(v));
      if (it != trees.end()) it->second.vertices.push_back(v);
    }
    std::vector<std::pair<SimplexId, SimplexId>> pairs;
    for (const auto& [_, tree] : trees) {
      const SimplexId root = tree.vertices[detail::bounded(rng, tree.vertices.size())];
      const auto tree_pairs = detail::pairs_for_rooted_tree(G, tree, root);
      pairs.insert(pairs.end(), tree_pairs.begin(), tree_pairs.end());
    }
    return realize_dmf(K, GradientVectorField::trusted(K.size(), std::move(pairs)));
  }

  // Rejection sampling: shuffle integer values over the simplices until the
  // assignment satisfies the Morse axioms.
  std::vector<SimplexId> order(K.size());
  std::iota(order.begin(), order.end(), 0);
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 50'000'000)
      throw Error(ErrorKind::size_guard, "rejection sampling did not terminate");
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[detail::bounded(rng, i)]);
    std::vector<Rational> values(K.size());
    for (size_t i = 0; i < order.size(); ++i) values[order[i]] = Rational(static_cast<int64_t>(i));
    MorseFunction f = MorseFunction::from_values(K, std::move(values));
    if (validate_dmf(K, f).ok) return f;
  }
}

/// Named builtin graph, optionally bundled with named Morse functions.
struct CorpusEntry {
  std::string name;
  SimplicialComplex complex;
  std::vector<std::pair<std::string, MorseFunction>> functions;

  const MorseFunction* function(std::string_view fname) const {
    for (const auto& [n, f] : functions)
      if (n == fname) return &f;
    return nullptr;
  }
};

namespace detail {

inline SimplicialComplex path_graph(int vertices) {
  std::vector<std::vector<std::string>> tuples;
  for (int i = 0; i + 1 < vertices; ++i)
    tuples.push_back({std::string(1, char('a' + i)), std::string(1, char('a' + i + 1))});
  if (vertices == 1) tuples.push_back({"a"});
  return SimplicialComplex::build_from_tuples(tuples);
}

inline SimplicialComplex cycle_graph(int vertices) {
  std::vector<std::vector<std::string>> tuples;
  for (int i = 0; i < vertices; ++i)
    tuples.push_back({std::string(1, char('a' + i)), std::string(1, char('a' + (i + 1) % vertices))});
  return SimplicialComplex::build_from_tuples(tuples);
}

/// Canonical code of a rooted tree: "(" + sorted child codes + ")".
inline std::string ahu_code(int root, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> child_codes;
  for (int c : adj[root])
    if (c != parent) child_codes.push_back(ahu_code(c, root, adj));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

inline std::vector<int> tree_centers(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 1) return {0};
  std::vector<int> degree(n), layer, next_layer;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    next_layer.clear();
    for (int v : layer)
      for (int w : adj[v])
        if (--degree[w] == 1) next_layer.push_back(w);
    layer.swap(next_layer);
  }
  return layer;
}

/// Relabels a tree into canonical form and renders it as vertex tuples with
/// letters a, b, c, ... assigned in canonical preorder.
inline std::vector<std::vector<std::string>> canonical_tree_tuples(
    int n, const std::vector<std::vector<int>>& adj, int root) {
  std::vector<std::vector<std::string>> tuples;
  if (n == 1) return {{"a"}};
  int next_label = 0;
  std::vector<std::string> label(n);
  auto assign = [&](auto&& self, int at, int parent) -> void {
    label[at] = std::string(1, char('a' + next_label++));
    std::vector<std::pair<std::string, int>> children;
    for (int c : adj[at])
      if (c != parent) children.emplace_back(ahu_code(c, at, adj), c);
    std::sort(children.begin(), children.end());
    for (const auto& [_, c] : children) {
      self(self, c, at);
      tuples.push_back({label[at], label[c]});
    }
  };
  assign(assign, root, -1);
  return tuples;
}

/// All trees on up to max_vertices vertices, one representative per
/// isomorphism class (labeled trees by Pruefer sequence, deduplicated by
/// canonical code).
inline std::vector<std::pair<std::string, SimplicialComplex>> all_trees(int max_vertices) {
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::map<std::string, SimplicialComplex> classes;
    const auto consider = [&](const std::vector<std::vector<int>>& adj) {
      const std::vector<int> centers = tree_centers(n, adj);
      std::string best_code = ahu_code(centers[0], -1, adj);
      int best_root = centers[0];
      if (centers.size() == 2) {
        const std::string other = ahu_code(centers[1], -1, adj);
        if (other < best_code) {
          best_code = other;
          best_root = centers[1];
        }
      }
      if (!classes.contains(best_code))
        classes.emplace(best_code, SimplicialComplex::build_from_tuples(
                                       canonical_tree_tuples(n, adj, best_root)));
    };

    if (n == 1) {
      consider({{}});
    } else if (n == 2) {
      consider({{1}, {0}});
    } else {
      std::vector<int> seq(n - 2, 0);
      while (true) {
        // Decode the Pruefer sequence.
        std::vector<int> degree(n, 1);
        for (int s : seq) degree[s] += 1;
        std::vector<std::vector<int>> adj(n);
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
          if (degree[v] == 1) leaves.push(v);
        std::vector<int> local_degree = degree;
        for (int s : seq) {
          const int leaf = leaves.top();
          leaves.pop();
          adj[leaf].push_back(s);
          adj[s].push_back(leaf);
          if (--local_degree[s] == 1) leaves.push(s);
          local_degree[leaf] = 0;
        }
        const int u = leaves.top();
        leaves.pop();
        const int w = leaves.top();
        adj[u].push_back(w);
        adj[w].push_back(u);
        consider(adj);

        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        seq[i] += 1;
      }
    }

    int index = 1;
    for (auto& [_, tree] : classes) {
      out.emplace_back("T" + std::to_string(n) + "_" + std::to_string(index++), std::move(tree));
    }
  }
  return out;
}

/// The 15-vertex, 15-edge benchmark graph: a hexagon u1..u6 with three
/// three-vertex tails, attached at u2 (tail p), u4 (tail q) and u5 (tail r).
/// Ships with two reference functions f1 and f2.
inline CorpusEntry fig4_entry() {
  CorpusEntry entry;
  entry.name = "fig4";
  entry.complex = SimplicialComplex::build_from_tuples({
      {"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u5"}, {"u5", "u6"}, {"u1", "u6"},
      {"p1", "p2"}, {"p2", "p3"}, {"p3", "u2"},
      {"q1", "q2"}, {"q2", "q3"}, {"q3", "u4"},
      {"r1", "r2"}, {"r2", "r3"}, {"r1", "u5"},
  });
  const SimplicialComplex& K = entry.complex;

  const auto field = [&](const std::vector<std::pair<std::string, std::string>>& named) {
    std::vector<std::pair<SimplexId, SimplexId>> pairs;
    pairs.reserve(named.size());
    for (const auto& [lo, hi] : named)
      pairs.emplace_back(K.id_of_name(lo), K.id_of_name(hi));
    return GradientVectorField::from_pairs(K, std::move(pairs));
  };

  // f1: critical vertices p1, q3, r3; critical edges p1-p2, u4-u5, u5-u6.
  const GradientVectorField v1 = field({
      {"u6", "u1-u6"}, {"u1", "u1-u2"}, {"u2", "u2-u3"}, {"u3", "u3-u4"},
      {"p2", "p2-p3"}, {"p3", "p3-u2"},
      {"q1", "q1-q2"}, {"q2", "q2-q3"}, {"u4", "q3-u4"},
      {"r2", "r2-r3"}, {"r1", "r1-r2"}, {"u5", "r1-u5"},
  });
  // f2: critical vertices p1, u1, q1, r3; critical edges p1-p2, u3-u4,
  // q1-q2, r2-r3.
  const GradientVectorField v2 = field({
      {"u6", "u1-u6"}, {"u2", "u1-u2"}, {"u3", "u2-u3"}, {"u4", "u4-u5"}, {"u5", "u5-u6"},
      {"p2", "p2-p3"}, {"p3", "p3-u2"},
      {"q2", "q2-q3"}, {"q3", "q3-u4"},
      {"r2", "r1-r2"}, {"r1", "r1-u5"},
  });
  entry.functions.emplace_back("f1", realize_dmf(K, v1));
  entry.functions.emplace_back("f2", realize_dmf(K, v2));
  return entry;
}

}  // namespace detail

/// The builtin graph corpus: paths P2..P6, cycles C3..C8, all trees on up to
/// seven vertices, the theta graph, the K4 skeleton, the disjoint union
/// P3_C3, and the fig4 benchmark with its bundled functions f1 and f2.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (int n = 2; n <= 6; ++n)
      out.push_back({"P" + std::to_string(n), detail::path_graph(n), {}});
    for (int n = 3; n <= 8; ++n)
      out.push_back({"C" + std::to_string(n), detail::cycle_graph(n), {}});
    for (auto& [name, tree] : detail::all_trees(7))
      out.push_back({name, std::move(tree), {}});
    out.push_back({"theta",
                   SimplicialComplex::build_from_tuples({{"x", "m1"}, {"m1", "y"},
                                                         {"x", "m2"}, {"m2", "y"},
                                                         {"x", "m3"}, {"m3", "y"}}),
                   {}});
    out.push_back({"K4",
                   SimplicialComplex::build_from_tuples({{"a", "b"}, {"a", "c"}, {"a", "d"},
                                                         {"b", "c"}, {"b", "d"}, {"c", "d"}}),
                   {}});
    out.push_back({"P3_C3",
                   SimplicialComplex::build_from_tuples(
                       {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}}),
                   {}});
    out.push_back(detail::fig4_entry());
    return out;
  }();
  return entries;
}

inline const CorpusEntry* find_corpus_entry(std::string_view name) {
  for (const CorpusEntry& entry : corpus())
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace dmt
