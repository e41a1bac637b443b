#include <set>

#include "doctest.h"
#include "dmt/connectivity.hpp"
#include "dmt/generate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dmt;
using fixtures::named_function;
using fixtures::names_of;

namespace {

// The two path functions used throughout: f1 flows everything to a, f2
// everything to c.
MorseFunction p3_f1(const SimplicialComplex& K) {
  return named_function(K, {{"a", 0}, {"a-b", 2}, {"b", 3}, {"b-c", 4}, {"c", 5}});
}
MorseFunction p3_f2(const SimplicialComplex& K) {
  return named_function(K, {{"a", 5}, {"a-b", 4}, {"b", 3}, {"b-c", 2}, {"c", 0}});
}

std::set<std::pair<std::string, std::string>> strong_pair_names(const SimplicialComplex& K,
                                                                const ConnectionReport& report) {
  std::set<std::pair<std::string, std::string>> out;
  for (const ConnectionEntry& entry : report.entries)
    if (entry.strong()) out.emplace(K.name(entry.alpha), K.name(entry.beta));
  return out;
}

}  // namespace

TEST_CASE("graph view accepts graphs and rejects higher complexes") {
  CHECK_NOTHROW(GraphView::of(fixtures::c3()));
  CHECK_NOTHROW(GraphView::of(SimplicialComplex::build_from_tuples({{"a"}, {"b"}})));
  CHECK_THROWS_AS(GraphView::of(fixtures::filled_triangle()), Error);
}

TEST_CASE("connection between the two path functions") {
  const SimplicialComplex K = fixtures::p3();
  const MorseFunction f1 = p3_f1(K), f2 = p3_f2(K);
  const SimplexId a = K.id_of_name("a"), c = K.id_of_name("c");

  const ConnectionResult fwd = connected(K, f1, a, f2, c, 0);
  REQUIRE(fwd.connected);
  CHECK(names_of(K, fwd.witness->sequence) ==
        std::vector<std::string>{"a", "a-b", "b", "b-c", "c"});

  const ConnectionResult bwd = connected(K, f2, c, f1, a, 0);
  REQUIRE(bwd.connected);
  CHECK(names_of(K, bwd.witness->sequence) ==
        std::vector<std::string>{"c", "b-c", "b", "a-b", "a"});

  CHECK(strongly_connected(K, f1, a, f2, c, 0));
}

TEST_CASE("a simplex critical for both functions connects to itself") {
  const SimplicialComplex K = fixtures::p2();
  const MorseFunction f = named_function(K, {{"a", 0}, {"b", 1}, {"a-b", 2}});
  for (const char* name : {"a", "b"})
    CHECK(strongly_connected(K, f, K.id_of_name(name), f, K.id_of_name(name), 0));
  CHECK(strongly_connected(K, f, K.id_of_name("a-b"), f, K.id_of_name("a-b"), 1));
  CHECK_FALSE(strongly_connected(K, f, K.id_of_name("a"), f, K.id_of_name("b"), 0));
}

TEST_CASE("connection rejects non-critical or mismatched arguments") {
  const SimplicialComplex K = fixtures::p3();
  const MorseFunction f1 = p3_f1(K), f2 = p3_f2(K);
  CHECK_THROWS_AS(connected(K, f1, K.id_of_name("b"), f2, K.id_of_name("c"), 0), Error);
  CHECK_THROWS_AS(connected(K, f1, K.id_of_name("a"), f2, K.id_of_name("c"), 1), Error);
  CHECK_THROWS_AS(connected(K, f1, K.id_of_name("a"), f2, K.id_of_name("c"), 2), Error);
}

TEST_CASE("connection matrix on the path pair") {
  const SimplicialComplex K = fixtures::p3();
  const MorseFunction f1 = p3_f1(K), f2 = p3_f2(K);
  const ConnectionReport r0 = connection_matrix(K, f1, f2, 0);
  CHECK(r0.strong_pairs == 1);
  CHECK(strong_pair_names(K, r0) ==
        std::set<std::pair<std::string, std::string>>{{"a", "c"}});
  const ConnectionReport r1 = connection_matrix(K, f1, f2, 1);
  CHECK(r1.strong_pairs == 0);
  CHECK(r1.entries.empty());

  const EulerCheck check = verify_euler_theorem(K, f1, f2);
  CHECK(check.a0 == 1);
  CHECK(check.a1 == 0);
  CHECK(check.chi == 1);
  CHECK(check.ok);
}

TEST_CASE("connection matrix with identical all-critical functions") {
  const SimplicialComplex K = fixtures::p2();
  const MorseFunction f = named_function(K, {{"a", 0}, {"b", 1}, {"a-b", 2}});
  const ConnectionReport r0 = connection_matrix(K, f, f, 0);
  CHECK(r0.strong_pairs == 2);
  const ConnectionReport r1 = connection_matrix(K, f, f, 1);
  CHECK(r1.strong_pairs == 1);
  const EulerCheck check = verify_euler_theorem(K, f, f);
  CHECK(check.ok);
  CHECK(check.chi == 1);
}

TEST_CASE("strong connections of the benchmark graph") {
  const CorpusEntry* fig4 = find_corpus_entry("fig4");
  REQUIRE(fig4 != nullptr);
  const SimplicialComplex& K = fig4->complex;
  CHECK(K.count(0) == 15);
  CHECK(K.count(1) == 15);
  CHECK(K.betti_numbers() == std::vector<int64_t>{1, 1});

  const MorseFunction& f1 = *fig4->function("f1");
  const MorseFunction& f2 = *fig4->function("f2");
  CHECK(names_of(K, critical_simplices(K, f1).critical) ==
        std::vector<std::string>{"p1", "q3", "r3", "p1-p2", "u4-u5", "u5-u6"});
  CHECK(names_of(K, critical_simplices(K, f2).critical) ==
        std::vector<std::string>{"p1", "q1", "r3", "u1", "p1-p2", "q1-q2", "r2-r3", "u3-u4"});

  const ConnectionReport r0 = connection_matrix(K, f1, f2, 0);
  CHECK(strong_pair_names(K, r0) == std::set<std::pair<std::string, std::string>>{
                                        {"p1", "p1"}, {"q3", "u1"}, {"r3", "r3"}});
  const ConnectionReport r1 = connection_matrix(K, f1, f2, 1);
  CHECK(strong_pair_names(K, r1) == std::set<std::pair<std::string, std::string>>{
                                        {"p1-p2", "p1-p2"},
                                        {"u5-u6", "u3-u4"},
                                        {"u5-u6", "r2-r3"}});
  // One critical edge strongly connected to two distinct partners.
  CHECK(strongly_connected(K, f1, K.id_of_name("u5-u6"), f2, K.id_of_name("u3-u4"), 1));
  CHECK(strongly_connected(K, f1, K.id_of_name("u5-u6"), f2, K.id_of_name("r2-r3"), 1));
  CHECK_FALSE(strongly_connected(K, f1, K.id_of_name("u4-u5"), f2, K.id_of_name("r2-r3"), 1));
  const EulerCheck check = verify_euler_theorem(K, f1, f2);
  CHECK(check.a0 == 3);
  CHECK(check.a1 == 3);
  CHECK(check.chi == 0);
  CHECK(check.ok);
}

TEST_CASE("flow analysis agrees with exhaustive path search") {
  // Cross-check the flow-based path counts against the path enumerator, over
  // every field pair on small graphs.
  for (const char* name : {"P3", "C3", "C4", "T4_2"}) {
    const CorpusEntry* entry = find_corpus_entry(name);
    REQUIRE(entry != nullptr);
    const SimplicialComplex& K = entry->complex;
    const GraphView G = GraphView::of(K);
    const std::vector<GradientVectorField> fields = enumerate_gvfs(K);
    std::vector<FieldFlow> flows;
    flows.reserve(fields.size());
    for (const auto& V : fields) flows.push_back(analyze_flow(G, V));

    for (size_t i = 0; i < fields.size(); ++i) {
      for (size_t j = 0; j < fields.size(); ++j) {
        for (SimplexId alpha : flows[i].critical_vertices) {
          for (SimplexId beta : flows[j].critical_vertices) {
            const size_t fast = detail::flow_path_count_vertices(flows[j], alpha, beta);
            const size_t slow = count_v_paths(K, fields[j], alpha, beta, 0);
            REQUIRE(fast == slow);
          }
        }
        for (SimplexId alpha : flows[i].critical_edges) {
          for (SimplexId beta : flows[j].critical_edges) {
            const size_t fast = detail::flow_path_count_edges(G, flows[i], alpha, beta);
            const size_t slow = count_v_paths(K, fields[i], alpha, beta, 0);
            REQUIRE(fast == slow);
          }
        }
        const StrongCounts counts = strong_pair_counts(G, flows[i], flows[j]);
        CHECK(counts.a0 == connection_matrix(K, fields[i], fields[j], 0).strong_pairs);
        CHECK(counts.a1 == connection_matrix(K, fields[i], fields[j], 1).strong_pairs);
      }
    }
  }
}

TEST_CASE("witness lists are complete against the brute-force enumerator") {
  const std::vector<std::pair<const char*, size_t>> samples{
      {"C4", 3}, {"theta", 17}, {"K4", 11}, {"T7_3", 29}};
  for (const auto& [name, stride] : samples) {
    const CorpusEntry* entry = find_corpus_entry(name);
    REQUIRE(entry != nullptr);
    const SimplicialComplex& K = entry->complex;
    const std::vector<GradientVectorField> fields = enumerate_gvfs(K);
    for (size_t i = 0; i < fields.size(); i += stride) {
      for (size_t j = 0; j < fields.size(); j += stride) {
        for (int q : {0, 1}) {
          const ConnectionReport report = connection_matrix(K, fields[i], fields[j], q);
          const GradientVectorField& fwd_field = q == 0 ? fields[j] : fields[i];
          const GradientVectorField& bwd_field = q == 0 ? fields[i] : fields[j];
          for (const ConnectionEntry& e : report.entries) {
            const auto fwd = oracles::all_v_paths(K, fwd_field, e.alpha, e.beta, 0);
            const auto bwd = oracles::all_v_paths(K, bwd_field, e.beta, e.alpha, 0);
            REQUIRE(e.forward.size() == fwd.size());
            REQUIRE(e.backward.size() == bwd.size());
            for (size_t p = 0; p < fwd.size(); ++p)
              CHECK(e.forward[p].sequence == fwd[p]);
          }
        }
      }
    }
  }
}

TEST_CASE("strong vertex partners are unique on any graph") {
  // Sampled field pairs on the cyclic graphs with branching, where edge-level
  // uniqueness may fail: vertex-level strong partners stay unique in both
  // directions, with at most one witness path per direction.
  for (const char* name : {"theta", "K4"}) {
    const CorpusEntry* entry = find_corpus_entry(name);
    const SimplicialComplex& K = entry->complex;
    const GraphView G = GraphView::of(K);
    const std::vector<GradientVectorField> fields = enumerate_gvfs(K);
    for (size_t i = 0; i < fields.size(); i += 17) {
      for (size_t j = 0; j < fields.size(); j += 13) {
        const FieldFlow fi = analyze_flow(G, fields[i]);
        const FieldFlow fj = analyze_flow(G, fields[j]);
        std::set<SimplexId> taken;
        for (SimplexId v : fi.critical_vertices) {
          size_t partners = 0;
          for (SimplexId w : fj.critical_vertices) {
            const size_t fwd = count_v_paths(K, fields[j], v, w, 0);
            const size_t bwd = count_v_paths(K, fields[i], w, v, 0);
            REQUIRE(fwd <= 1);
            REQUIRE(bwd <= 1);
            if (fwd == 1 && bwd == 1) {
              ++partners;
              CHECK(taken.insert(w).second);
            }
          }
          CHECK(partners <= 1);
        }
      }
    }
  }
}

TEST_CASE("rooted forest of the path functions") {
  const SimplicialComplex K = fixtures::p3();
  const RootedForest forest = rooted_forest(K, p3_f1(K));
  REQUIRE(forest.trees.size() == 1);
  CHECK(K.name(forest.trees[0].root) == "a");
  CHECK(forest.trees[0].vertices.size() == 3);
  CHECK(forest.trees[0].edges.size() == 2);
}

TEST_CASE("rooted forest of an all-critical function") {
  const SimplicialComplex K = fixtures::c3();
  const MorseFunction f = named_function(
      K, {{"a", 0}, {"b", 1}, {"c", 2}, {"a-b", 3}, {"b-c", 4}, {"a-c", 5}});
  const RootedForest forest = rooted_forest(K, f);
  REQUIRE(forest.trees.size() == 3);
  for (const RootedTree& tree : forest.trees) {
    CHECK(tree.vertices == std::vector<SimplexId>{tree.root});
    CHECK(tree.edges.empty());
  }
}

TEST_CASE("rooted forest of the benchmark graph") {
  const CorpusEntry* fig4 = find_corpus_entry("fig4");
  const SimplicialComplex& K = fig4->complex;
  const RootedForest forest = rooted_forest(K, *fig4->function("f1"));
  REQUIRE(forest.trees.size() == 3);
  CHECK(names_of(K, {forest.trees[0].root, forest.trees[1].root, forest.trees[2].root}) ==
        std::vector<std::string>{"p1", "q3", "r3"});
  CHECK(forest.trees[0].vertices.size() == 1);   // p1 alone
  CHECK(forest.trees[1].vertices.size() == 10);  // hexagon minus u5, p2..p3, tail q
  CHECK(forest.trees[2].vertices.size() == 4);   // u5 and tail r

  const CriticalInfo info = critical_simplices(K, *fig4->function("f1"));
  size_t total = 0;
  for (const RootedTree& tree : forest.trees) {
    total += tree.vertices.size();
    int critical_here = 0;
    for (SimplexId v : tree.vertices)
      if (info.is_critical[v]) ++critical_here;
    CHECK(critical_here == 1);
    CHECK(std::binary_search(tree.vertices.begin(), tree.vertices.end(), tree.root));
  }
  CHECK(total == K.count(0));
}

TEST_CASE("tree of an edge rooted at a vertex") {
  const CorpusEntry* fig4 = find_corpus_entry("fig4");
  const SimplicialComplex& K = fig4->complex;
  const MorseFunction& f1 = *fig4->function("f1");

  // Walks from the faces of p1-p2 into the tree at q3, plus the one branch
  // from q1 that meets no critical edge.
  const Subgraph sub = tree_of_edge(K, f1, K.id_of_name("p1-p2"), K.id_of_name("q3"));
  CHECK(names_of(K, sub.vertices) ==
        std::vector<std::string>{"p2", "p3", "q1", "q2", "q3", "u2", "u3", "u4"});
  CHECK(names_of(K, sub.edges) ==
        std::vector<std::string>{"p2-p3", "p3-u2", "q1-q2", "q2-q3", "q3-u4", "u2-u3",
                                 "u3-u4"});
}

TEST_CASE("tree of an edge with no inflow is empty") {
  const SimplicialComplex K = fixtures::p3();
  const MorseFunction f1 = p3_f1(K);
  // f1 has no critical edges at all, so the operation cannot apply.
  const Subgraph inapplicable = tree_of_edge(K, f1, K.id_of_name("a-b"), K.id_of_name("a"));
  CHECK(inapplicable.empty());
  CHECK_FALSE(inapplicable.note.empty());
  CHECK_THROWS_AS(tree_of_edge(K, f1, K.id_of_name("a"), K.id_of_name("a")), Error);

  const SimplicialComplex C = fixtures::c3();
  const MorseFunction g = named_function(
      C, {{"a", 0}, {"b", 1}, {"c", 2}, {"a-b", 3}, {"b-c", 4}, {"a-c", 5}});
  // Faces of b-c stay in their own singleton trees; nothing flows to a.
  const Subgraph none = tree_of_edge(C, g, C.id_of_name("b-c"), C.id_of_name("a"));
  CHECK(none.empty());
  CHECK_FALSE(none.note.empty());
  // The face a of a-b reaches a through the trivial walk.
  const Subgraph just_a = tree_of_edge(C, g, C.id_of_name("a-b"), C.id_of_name("a"));
  CHECK(names_of(C, just_a.vertices) == std::vector<std::string>{"a"});
  CHECK(just_a.edges.empty());
}

TEST_CASE("optimality check") {
  const SimplicialComplex K = fixtures::p3();
  CHECK(is_optimal(K, p3_f1(K)));

  const SimplicialComplex C = fixtures::c3();
  const MorseFunction g = named_function(
      C, {{"a", 0}, {"b", 1}, {"c", 2}, {"a-b", 3}, {"b-c", 4}, {"a-c", 5}});
  CHECK_FALSE(is_optimal(C, g));

  const SimplicialComplex V = SimplicialComplex::build_from_tuples({{"v"}});
  CHECK(is_optimal(V, named_function(V, {{"v", 0}})));
}

TEST_CASE("single vertex satisfies the Euler identity") {
  const SimplicialComplex K = SimplicialComplex::build_from_tuples({{"v"}});
  const MorseFunction f = named_function(K, {{"v", 0}});
  const EulerCheck check = verify_euler_theorem(K, f, f);
  CHECK(check.a0 == 1);
  CHECK(check.a1 == 0);
  CHECK(check.chi == 1);
  CHECK(check.ok);
}

TEST_CASE("the Euler identity holds across field pairs on forests and cycles") {
  for (const char* name : {"P4", "C5", "T5_2", "P3_C3"}) {
    const CorpusEntry* entry = find_corpus_entry(name);
    const SimplicialComplex& K = entry->complex;
    const GraphView G = GraphView::of(K);
    std::vector<FieldFlow> flows;
    for (const GradientVectorField& V : enumerate_gvfs(K)) flows.push_back(analyze_flow(G, V));
    for (const FieldFlow& f1 : flows)
      for (const FieldFlow& f2 : flows)
        REQUIRE(euler_check_fields(G, f1, f2).ok);
  }
}

TEST_CASE("the Euler identity can fail when critical-edge flows share a channel") {
  // Documented counterexample on the theta graph: every step below has been
  // verified against the raw definitions. f1 pairs only (y, m3-y); f2 routes
  // everything to m1. Three strong edge pairs arise against one strong
  // vertex pair, so a0 - a1 = -2 while chi = -1. The same mechanism (two
  // critical edges of one function flowing through a single channel that
  // carries a critical edge of the other) also occurs on graphs with
  // pendant trees attached to a cycle; it cannot occur on forests or bare
  // cycles, where witness routes are unique.
  const CorpusEntry* entry = find_corpus_entry("theta");
  const SimplicialComplex& K = entry->complex;
  const GradientVectorField V1 =
      GradientVectorField::from_pairs(K, {{K.id_of_name("y"), K.id_of_name("m3-y")}});
  const GradientVectorField V2 = GradientVectorField::from_pairs(
      K, {{K.id_of_name("m2"), K.id_of_name("m2-y")},
          {K.id_of_name("m3"), K.id_of_name("m3-x")},
          {K.id_of_name("x"), K.id_of_name("m2-x")},
          {K.id_of_name("y"), K.id_of_name("m1-y")}});
  const MorseFunction f1 = realize_dmf(K, V1);
  const MorseFunction f2 = realize_dmf(K, V2);
  REQUIRE(validate_dmf(K, f1).ok);
  REQUIRE(validate_dmf(K, f2).ok);

  CHECK(strongly_connected(K, f1, K.id_of_name("m1-x"), f2, K.id_of_name("m1-x"), 1));
  CHECK(strongly_connected(K, f1, K.id_of_name("m1-y"), f2, K.id_of_name("m3-y"), 1));
  CHECK(strongly_connected(K, f1, K.id_of_name("m2-y"), f2, K.id_of_name("m3-y"), 1));

  const EulerCheck check = verify_euler_theorem(K, f1, f2);
  CHECK(check.a0 == 1);
  CHECK(check.a1 == 3);
  CHECK(check.chi == -1);
  CHECK_FALSE(check.ok);
}
