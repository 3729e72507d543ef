#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "sigcolor/planar.hpp"
#include "sigcolor/random_graphs.hpp"

using namespace sigcolor;

TEST_CASE("face tracing on K4, cube, single edge") {
  auto k4 = embed(fixtures::complete(4));
  REQUIRE(k4.planar);
  auto faces = trace_faces(k4.embedding);
  CHECK(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.size() == 3);

  auto q3 = embed(fixtures::cube());
  REQUIRE(q3.planar);
  auto cubeFaces = trace_faces(q3.embedding);
  CHECK(cubeFaces.size() == 6);
  for (const auto& f : cubeFaces) CHECK(f.size() == 4);

  auto k2 = embed(SignedGraph::build({"a", "b"}, {{"a", "b", 1}}));
  REQUIRE(k2.planar);
  auto e = trace_faces(k2.embedding);
  REQUIRE(e.size() == 1);
  CHECK(e[0].size() == 2);
}

TEST_CASE("face sizes sum to twice the edge count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto emb = random_planar(4 + static_cast<int>(rng() % 30), 0.7, rng);
    auto faces = trace_faces(emb);
    size_t total = 0;
    for (const auto& f : faces) total += f.size();
    CHECK(total == 2 * static_cast<size_t>(emb.graph.edge_count()));
    CHECK(validate_embedding(emb).planar);
  }
}

TEST_CASE("validate_embedding catches a bad rotation") {
  // K5 has no planar rotation; any rotation must fail the Euler check
  auto k5 = fixtures::complete(5);
  RotationEmbedding emb;
  emb.graph = k5;
  emb.rot.resize(5);
  for (int v = 0; v < 5; ++v)
    for (int w = 0; w < 5; ++w)
      if (w != v) emb.rot[v].push_back(w);
  auto check = validate_embedding(emb);
  CHECK_FALSE(check.planar);
  CHECK(check.euler_defect > 0);
}

TEST_CASE("embed: planar graphs get embeddings, K5/K3,3/Petersen certificates") {
  CHECK(embed(fixtures::cube()).planar);
  CHECK(validate_embedding(embed(fixtures::cube()).embedding).planar);
  CHECK(validate_embedding(embed(fixtures::dodecahedron()).embedding).planar);
  CHECK(validate_embedding(embed(fixtures::icosahedron()).embedding).planar);

  auto k5 = embed(fixtures::complete(5));
  CHECK_FALSE(k5.planar);
  CHECK(k5.kuratowski.size() >= 9);  // K3,3 subdivision needs >= 9 edges
  CHECK_FALSE(embed(fixtures::k33()).planar);
  CHECK_FALSE(embed(fixtures::petersen()).planar);

  // a disconnected forest is planar component-wise
  auto forest = fixtures::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  auto f = embed(forest);
  REQUIRE(f.planar);
  CHECK(validate_embedding(f.embedding).planar);
}

TEST_CASE("has_circuit_of_length") {
  auto cube = fixtures::cube();
  CHECK_FALSE(has_circuit_of_length(cube, 3).has_value());
  auto c4 = has_circuit_of_length(cube, 4);
  REQUIRE(c4.has_value());
  CHECK(c4->size() == 4);

  auto dode = fixtures::dodecahedron();
  CHECK_FALSE(has_circuit_of_length(dode, 3).has_value());
  CHECK_FALSE(has_circuit_of_length(dode, 4).has_value());
  CHECK(has_circuit_of_length(dode, 5).has_value());
}

// brute-force cycle oracle: every k-subset, every cyclic order
static bool brute_has_k_circuit(const SignedGraph& g, int k) {
  int n = g.n();
  std::vector<int> pick(k);
  std::function<bool(int, int)> choose = [&](int start, int depth) -> bool {
    if (depth == k) {
      std::vector<int> perm(pick.begin() + 1, pick.end());
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = g.has_edge(pick[0], perm[0]) && g.has_edge(perm[k - 2], pick[0]);
        for (int i = 0; ok && i + 1 < k - 1; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      if (choose(v + 1, depth + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

TEST_CASE("has_circuit_of_length agrees with brute force on small graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.push_back({u, v});
    auto g = fixtures::from_edges(n, edges);
    for (int k = 3; k <= std::min(n, 6); ++k) {
      auto found = has_circuit_of_length(g, k);
      CHECK(found.has_value() == brute_has_k_circuit(g, k));
      if (found) CHECK(circuit_balance(g, *found) == Balance::Balanced);  // all-positive signs
    }
  }
}

TEST_CASE("degeneracy") {
  auto tree = fixtures::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  CHECK(degeneracy_order(tree).degeneracy == 1);
  CHECK(degeneracy_order(fixtures::complete(4)).degeneracy == 3);
  // removal order respects min-degree-then-lowest-index
  auto path = fixtures::from_edges(3, {{0, 1}, {1, 2}});
  auto r = degeneracy_order(path);
  CHECK(r.order == std::vector<int>{0, 1, 2});
}

TEST_CASE("triangulate_interior") {
  std::mt19937_64 rng(5);

  SUBCASE("pentagon becomes a fan") {
    auto circ = fixtures::cycle(5);
    auto embedded = embed(circ);
    REQUIRE(embedded.planar);
    auto tri = triangulate_interior(embedded.embedding);
    CHECK(validate_embedding(tri).planar);
    auto faces = trace_faces(tri);
    int outer = outer_face_index(tri, faces);
    int bounded = 0;
    for (size_t f = 0; f < faces.size(); ++f)
      if (static_cast<int>(f) != outer) {
        CHECK(faces[f].size() == 3);
        ++bounded;
      }
    CHECK(bounded == 3);
    CHECK(tri.graph.edge_count() == 7);
  }

  SUBCASE("near-triangulations are unchanged") {
    auto emb = random_near_triangulation(9, 5, rng);
    auto tri = triangulate_interior(emb);
    CHECK(tri.graph.edge_count() == emb.graph.edge_count());
  }

  SUBCASE("cube interior gains one diagonal per bounded face") {
    auto embedded = embed(fixtures::cube());
    REQUIRE(embedded.planar);
    auto tri = triangulate_interior(embedded.embedding);
    CHECK(validate_embedding(tri).planar);
    CHECK(tri.graph.edge_count() == 17);
    // signs of original edges untouched, added edges positive
    for (const auto& [u, v, s] : tri.graph.edges()) {
      (void)u;
      (void)v;
      CHECK(s == 1);
    }
    auto faces = trace_faces(tri);
    int outer = outer_face_index(tri, faces);
    for (size_t f = 0; f < faces.size(); ++f)
      if (static_cast<int>(f) != outer) CHECK(faces[f].size() == 3);
  }
}

TEST_CASE("make_two_connected removes cutvertices, planarity intact") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto emb = random_planar(5 + static_cast<int>(rng() % 25), 0.55, rng);
    auto comps = components(emb.graph);
    if (comps.size() != 1) continue;
    auto fixed = make_two_connected(emb);
    CHECK(cutvertices(fixed.graph).empty());
    CHECK(validate_embedding(fixed).planar);
    // original edges still present with original signs
    for (const auto& [u, v, s] : emb.graph.edges()) CHECK(fixed.graph.sign(u, v) == s);
  }
}
