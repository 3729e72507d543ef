#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sigcolor/planar.hpp"
#include "sigcolor/random_graphs.hpp"

using namespace sigcolor;

TEST_CASE("random triangulations are maximal plane graphs") {
  std::mt19937_64 rng(1);
  for (int n : {3, 5, 12, 30}) {
    auto emb = random_triangulation(n, rng);
    CHECK(emb.graph.n() == n);
    CHECK(emb.graph.edge_count() == 3 * n - 6);
    CHECK(validate_embedding(emb).planar);
  }
}

TEST_CASE("near-triangulations have a designated outer circuit") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    int outerLen = 3 + static_cast<int>(rng() % 6);
    int n = outerLen + static_cast<int>(rng() % 8);
    auto emb = random_near_triangulation(n, outerLen, rng);
    CHECK(validate_embedding(emb).planar);
    auto faces = trace_faces(emb);
    int outer = outer_face_index(emb, faces);
    CHECK(static_cast<int>(faces[outer].size()) == outerLen);
    for (size_t f = 0; f < faces.size(); ++f)
      if (static_cast<int>(f) != outer) CHECK(faces[f].size() == 3);
  }
}

TEST_CASE("class generators meet their constraints") {
  std::mt19937_64 rng(3);
  for (int k : {3, 5, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto emb = random_no_k_circuit(20, k, rng);
      CHECK_FALSE(has_circuit_of_length(emb.graph, k).has_value());
      CHECK(validate_embedding(emb).planar);
      CHECK(components(emb.graph).size() == 1);
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    auto emb = random_girth5(25, rng);
    CHECK_FALSE(has_circuit_of_length(emb.graph, 3).has_value());
    CHECK_FALSE(has_circuit_of_length(emb.graph, 4).has_value());
    CHECK(validate_embedding(emb).planar);
  }
}

TEST_CASE("generators are deterministic under a fixed seed") {
  std::mt19937_64 a(42), b(42);
  auto e1 = random_planar(18, 0.7, a);
  auto e2 = random_planar(18, 0.7, b);
  CHECK(e1.graph.edges() == e2.graph.edges());
  CHECK(e1.rot == e2.rot);
}

TEST_CASE("random lists honor size and range") {
  std::mt19937_64 rng(4);
  auto L = random_lists(30, 5, -7, 7, rng);
  for (const auto& lst : L.lists) {
    CHECK(lst.size() == 5);
    for (int c : lst) {
      CHECK(c >= -7);
      CHECK(c <= 7);
    }
  }
}
