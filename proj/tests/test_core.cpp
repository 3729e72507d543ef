#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sigcolor/core.hpp"
#include "sigcolor/solver.hpp"

using namespace sigcolor;

static std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GraphError& e) {
    return e.kind();
  }
  return "";
}

TEST_CASE("build_signed_graph validates simplicity") {
  auto g = SignedGraph::build({"v1"}, {});
  CHECK(g.n() == 1);
  CHECK(g.edge_count() == 0);

  auto k2 = SignedGraph::build({"a", "b"}, {{"a", "b", -1}});
  CHECK(k2.edge_count() == 1);
  CHECK(k2.sign(0, 1) == -1);

  CHECK(kind_of([] {
          SignedGraph::build({"a", "b"}, {{"a", "b", 1}, {"a", "b", -1}});
        }) == "DuplicateEdge");
  CHECK(kind_of([] { SignedGraph::build({"a"}, {{"a", "a", 1}}); }) == "Loop");
  CHECK(kind_of([] { SignedGraph::build({"a"}, {{"a", "b", 1}}); }) == "UnknownVertex");
}

TEST_CASE("circuit balance is the parity of negative edges") {
  auto tri = SignedGraph::build({"a", "b", "c"},
                                {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  CHECK(circuit_balance(tri, {0, 1, 2}) == Balance::Balanced);

  auto c4 = SignedGraph::build({"a", "b", "c", "d"},
                               {{"a", "b", -1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}});
  CHECK(circuit_balance(c4, {0, 1, 2, 3}) == Balance::Unbalanced);

  auto c5 = SignedGraph::build({"a", "b", "c", "d", "e"},
                               {{"a", "b", -1}, {"b", "c", -1}, {"c", "d", 1}, {"d", "e", 1},
                                {"e", "a", 1}});
  CHECK(circuit_balance(c5, {0, 1, 2, 3, 4}) == Balance::Balanced);

  CHECK(kind_of([&] { circuit_balance(c4, {0, 1, 2}); }) == "NotACircuit");
  CHECK(kind_of([&] { circuit_balance(c4, {0, 1, 0, 1}); }) == "NotACircuit");
}

TEST_CASE("switch flips boundary signs and negates inside data") {
  auto k2 = SignedGraph::build({"a", "b"}, {{"a", "b", 1}});
  ListAssignment L;
  L.lists = {{1, 2}, {3, 4}};
  Coloring c = {1, 3};

  SUBCASE("empty switch set is the identity") {
    auto r = switch_at(k2, L, c, {});
    CHECK(r.graph.sign(0, 1) == 1);
    CHECK(r.lists->lists == L.lists);
    CHECK(*r.coloring == c);
  }
  SUBCASE("switch at one endpoint") {
    auto r = switch_at(k2, L, c, {0});
    CHECK(r.graph.sign(0, 1) == -1);
    CHECK(r.lists->lists[0] == std::vector<int>{-2, -1});
    CHECK(r.lists->lists[1] == std::vector<int>{3, 4});
    CHECK((*r.coloring)[0] == -1);
  }
  SUBCASE("switching twice restores everything") {
    auto r1 = switch_at(k2, L, c, {0});
    auto r2 = switch_at(r1.graph, r1.lists, r1.coloring, {0});
    CHECK(r2.graph.sign(0, 1) == 1);
    CHECK(r2.lists->lists == L.lists);
    CHECK(*r2.coloring == c);
  }
}

TEST_CASE("verify_coloring implements the signed constraint") {
  auto pos = SignedGraph::build({"u", "v"}, {{"u", "v", 1}});
  CHECK_FALSE(verify_coloring(pos, std::nullopt, {1, 1}).valid);
  CHECK(verify_coloring(pos, std::nullopt, {1, -1}).valid);

  auto neg = SignedGraph::build({"u", "v"}, {{"u", "v", -1}});
  CHECK_FALSE(verify_coloring(neg, std::nullopt, {1, -1}).valid);
  CHECK(verify_coloring(neg, std::nullopt, {1, 1}).valid);

  ListAssignment L;
  L.lists = {{5}, {1}};
  auto r = verify_coloring(neg, L, {1, 1});
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::ColorNotInList);
}

TEST_CASE("mrs color sets") {
  CHECK(mrs_color_set(1) == std::vector<int>{0});
  CHECK(mrs_color_set(2) == std::vector<int>{-1, 1});
  CHECK(mrs_color_set(5) == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK(kind_of([] { mrs_color_set(0); }) == "NonPositiveK");
  for (int k = 1; k <= 100; ++k) {
    auto s = mrs_color_set(k);
    CHECK(static_cast<int>(s.size()) == k);
    bool hasZero = std::find(s.begin(), s.end(), 0) != s.end();
    CHECK(hasZero == (k % 2 == 1));
    if (k % 2 == 0)
      for (int c : s) CHECK(std::find(s.begin(), s.end(), -c) != s.end());
  }
}

TEST_CASE("equivalent_to_all_positive with certificates") {
  auto allpos = fixtures::cycle(6);
  auto r = equivalent_to_all_positive(allpos);
  CHECK(r.yes);
  CHECK(r.switch_set.empty());

  auto c4neg = SignedGraph::build({"a", "b", "c", "d"},
                                  {{"a", "b", -1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}});
  auto r2 = equivalent_to_all_positive(c4neg);
  CHECK_FALSE(r2.yes);
  CHECK(circuit_balance(c4neg, r2.unbalanced_circuit) == Balance::Unbalanced);

  // two negative edges sharing no vertex: switchable to all-positive
  auto c4two = SignedGraph::build({"a", "b", "c", "d"},
                                  {{"a", "b", -1}, {"b", "c", 1}, {"c", "d", -1}, {"d", "a", 1}});
  auto r3 = equivalent_to_all_positive(c4two);
  CHECK(r3.yes);
  auto switched = switch_at(c4two, std::nullopt, std::nullopt, r3.switch_set);
  for (const auto& [u, v, s] : switched.graph.edges()) {
    (void)u;
    (void)v;
    CHECK(s == 1);
  }
}

// exhaustive oracle: no switch of the one-negative C4 removes all negatives
TEST_CASE("one-negative C4 is not switch-equivalent to all-positive") {
  auto c4 = SignedGraph::build({"a", "b", "c", "d"},
                               {{"a", "b", -1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}});
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> X;
    for (int v = 0; v < 4; ++v)
      if (mask & (1 << v)) X.push_back(v);
    auto sw = switch_at(c4, std::nullopt, std::nullopt, X);
    bool allPositive = true;
    for (const auto& [u, v, s] : sw.graph.edges()) {
      (void)u;
      (void)v;
      allPositive = allPositive && s == 1;
    }
    CHECK_FALSE(allPositive);
  }
  CHECK_FALSE(equivalent_to_all_positive(c4).yes);
}

TEST_CASE("switch soundness over random instances") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    std::vector<VertexId> ids;
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
    std::vector<std::tuple<VertexId, VertexId, int>> es;
    for (auto [u, v] : edges) es.emplace_back(ids[u], ids[v], rng() % 2 ? 1 : -1);
    auto g = SignedGraph::build(ids, es);

    ListAssignment L;
    L.lists.resize(n);
    Coloring c(n);
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < 3; ++i) L.lists[v].push_back(static_cast<int>(rng() % 9) - 4);
      std::sort(L.lists[v].begin(), L.lists[v].end());
      L.lists[v].erase(std::unique(L.lists[v].begin(), L.lists[v].end()), L.lists[v].end());
      c[v] = L.lists[v][rng() % L.lists[v].size()];
    }
    std::vector<int> X;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) X.push_back(v);

    auto sw = switch_at(g, L, c, X);
    CHECK(verify_coloring(g, L, c).valid == verify_coloring(sw.graph, sw.lists, *sw.coloring).valid);
    CHECK(solve(g, L).sat == solve(sw.graph, *sw.lists).sat);

    // balance of every circuit is switch-invariant; spot-check triangles
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int d = b + 1; d < n; ++d)
          if (g.has_edge(a, b) && g.has_edge(b, d) && g.has_edge(d, a))
            CHECK(circuit_balance(g, {a, b, d}) == circuit_balance(sw.graph, {a, b, d}));
  }
}
