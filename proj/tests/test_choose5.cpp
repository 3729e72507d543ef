#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "sigcolor/choose5.hpp"
#include "sigcolor/random_graphs.hpp"
#include "sigcolor/solver.hpp"

using namespace sigcolor;

static RotationEmbedding triangle_embedding(int s12, int s13, int s23) {
  RotationEmbedding emb;
  emb.graph = SignedGraph::build({"v1", "v2", "v3"},
                                 {{"v1", "v2", s12}, {"v1", "v3", s13}, {"v2", "v3", s23}});
  emb.rot = {{1, 2}, {2, 0}, {0, 1}};
  emb.outer_edge = {0, 1};
  return emb;
}

TEST_CASE("base case: a triangle with two forced colors") {
  ListAssignment L;
  L.lists = {{1}, {2}, {1, 2, 3}};
  auto emb = triangle_embedding(1, 1, 1);
  auto c = extend_two_precolored(emb, L, 0, 1);
  CHECK(c == Coloring{1, 2, 3});

  ListAssignment L2;
  L2.lists = {{1}, {2}, {-1, 2, 5}};
  auto emb2 = triangle_embedding(1, -1, 1);
  auto c2 = extend_two_precolored(emb2, L2, 0, 1);
  CHECK(c2 == Coloring{1, 2, 5});
}

TEST_CASE("precondition violations are named") {
  ListAssignment L;
  L.lists = {{1}, {1}, {1, 2, 3}};
  auto emb = triangle_embedding(1, 1, 1);
  CHECK_THROWS_WITH_AS(extend_two_precolored(emb, L, 0, 1),
                       doctest::Contains("PreconditionViolated"), GraphError);
  ListAssignment L3;
  L3.lists = {{1}, {2}, {1, 2}};
  CHECK_THROWS_WITH_AS(extend_two_precolored(emb, L3, 0, 1),
                       doctest::Contains("PreconditionViolated"), GraphError);
}

TEST_CASE("extension succeeds on random signed near-triangulations and matches the solver") {
  std::mt19937_64 rng(20240813);
  for (int trial = 0; trial < 200; ++trial) {
    int outerLen = 3 + static_cast<int>(rng() % 5);
    int n = outerLen + static_cast<int>(rng() % (13 - outerLen));
    auto emb = with_random_signs(random_near_triangulation(n, outerLen, rng), rng);
    const auto& g = emb.graph;
    auto faces = trace_faces(emb);
    const FaceWalk& outer = faces[outer_face_index(emb, faces)];

    int pick = static_cast<int>(rng() % outer.size());
    int v1 = outer[pick], v2 = outer[(pick + 1) % outer.size()];
    auto full = random_lists(g.n(), 7, -7, 7, rng);
    ListAssignment L;
    L.lists.resize(g.n());
    std::set<int> outerSet(outer.begin(), outer.end());
    int alpha = full.lists[v1][0];
    int beta = full.lists[v2][0] == alpha * g.sign(v1, v2) ? full.lists[v2][1]
                                                           : full.lists[v2][0];
    for (int v = 0; v < g.n(); ++v) {
      if (v == v1)
        L.lists[v] = {alpha};
      else if (v == v2)
        L.lists[v] = {beta};
      else if (outerSet.count(v))
        L.lists[v].assign(full.lists[v].begin(), full.lists[v].begin() + 3);
      else
        L.lists[v].assign(full.lists[v].begin(), full.lists[v].begin() + 5);
    }
    auto c = extend_two_precolored(emb, L, v1, v2);
    CHECK(verify_coloring(g, L, c).valid);
    CHECK(solve(g, L).sat);  // the theorem says these instances are satisfiable
  }
}

TEST_CASE("color_planar_5lists on the fixture graphs") {
  auto k4 = fixtures::complete(4);
  auto c = color_planar_5lists(k4, ListAssignment::uniform(4, {1, 2, 3, 4, 5}));
  CHECK(verify_coloring(k4, std::nullopt, c).valid);

  std::mt19937_64 rng(5);
  auto ico = fixtures::icosahedron();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::tuple<VertexId, VertexId, int>> es;
    for (const auto& [u, v, s] : ico.edges()) {
      (void)s;
      es.emplace_back(ico.id(u), ico.id(v), rng() % 2 ? 1 : -1);
    }
    auto g = SignedGraph::build(ico.ids(), es);
    auto L = random_lists(g.n(), 5, -7, 7, rng);
    auto col = color_planar_5lists(g, L);
    CHECK(verify_coloring(g, L, col).valid);
  }

  auto tree = fixtures::from_edges(9, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {5, 7},
                                       {5, 8}});
  auto L = random_lists(9, 5, -7, 7, rng);
  auto col = color_planar_5lists(tree, L);
  CHECK(verify_coloring(tree, L, col).valid);

  CHECK_THROWS_WITH_AS(color_planar_5lists(fixtures::complete(5),
                                           ListAssignment::uniform(5, {1, 2, 3, 4, 5})),
                       doctest::Contains("NotPlanar"), GraphError);
}

TEST_CASE("switch equivariance of the 5-list algorithm") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto emb = with_random_signs(random_planar(6 + static_cast<int>(rng() % 20), 0.75, rng), rng);
    const auto& g = emb.graph;
    auto L = random_lists(g.n(), 5, -7, 7, rng);
    std::vector<int> X;
    for (int v = 0; v < g.n(); ++v)
      if (rng() % 2) X.push_back(v);
    auto sw = switch_at(g, L, std::nullopt, X);
    auto cSwitched = color_planar_5lists(sw.graph, *sw.lists);
    // switching the result back colors the original instance
    Coloring back = cSwitched;
    for (int v : X) back[v] = -back[v];
    CHECK(verify_coloring(g, L, back).valid);
  }
}
