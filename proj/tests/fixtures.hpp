#pragma once

#include <string>
#include <vector>

#include "sigcolor/core.hpp"

namespace fixtures {

using sigcolor::SignedGraph;
using sigcolor::VertexId;

inline SignedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexId> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<std::tuple<VertexId, VertexId, int>> es;
  for (auto [u, v] : edges) es.emplace_back(ids[u], ids[v], 1);
  return SignedGraph::build(ids, es);
}

inline SignedGraph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return from_edges(n, es);
}

inline SignedGraph k33() {
  return from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline SignedGraph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return from_edges(n, es);
}

inline SignedGraph cube() {
  return from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                        {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline SignedGraph octahedron() {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u == 0 && v == 1) && !(u == 2 && v == 3) && !(u == 4 && v == 5)) es.push_back({u, v});
  return from_edges(6, es);
}

// generalized Petersen GP(n, k): outer n-cycle, spokes, inner step-k cycle
inline SignedGraph petersen_general(int n, int k) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    es.push_back({i, (i + 1) % n});
    es.push_back({i, n + i});
    es.push_back({n + i, n + (i + k) % n});
  }
  return from_edges(2 * n, es);
}

inline SignedGraph petersen() { return petersen_general(5, 2); }
inline SignedGraph dodecahedron() { return petersen_general(10, 2); }

inline SignedGraph icosahedron() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({0, 1 + i});                          // north pole to upper ring
    es.push_back({11, 6 + i});                         // south pole to lower ring
    es.push_back({1 + i, 1 + (i + 1) % 5});            // upper ring
    es.push_back({6 + i, 6 + (i + 1) % 5});            // lower ring
    es.push_back({1 + i, 6 + i});                      // rings, straight
    es.push_back({1 + (i + 1) % 5, 6 + i});            // rings, slanted
  }
  return from_edges(12, es);
}

}  // namespace fixtures
