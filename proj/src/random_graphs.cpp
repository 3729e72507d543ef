#include "sigcolor/random_graphs.hpp"

#include <algorithm>
#include <set>

namespace sigcolor {

static std::vector<VertexId> numbered_ids(int n) {
  std::vector<VertexId> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

void remove_edge_from_embedding(RotationEmbedding& emb, int u, int v) {
  emb.graph.remove_edge(u, v);
  auto strip = [&](int a, int b) {
    auto& r = emb.rot[a];
    r.erase(std::remove(r.begin(), r.end(), b), r.end());
  };
  strip(u, v);
  strip(v, u);
  if ((emb.outer_edge.first == u && emb.outer_edge.second == v) ||
      (emb.outer_edge.first == v && emb.outer_edge.second == u))
    emb.outer_edge = {-1, -1};
}

RotationEmbedding random_near_triangulation(int n, int outer_len, std::mt19937_64& rng) {
  if (n < 3 || outer_len < 3 || outer_len > n)
    fail("BadArguments", "need n >= 3 and 3 <= outer_len <= n");
  RotationEmbedding emb;
  emb.graph = SignedGraph::build(numbered_ids(outer_len), {});
  emb.rot.resize(outer_len);
  for (int i = 0; i < outer_len; ++i) {
    int a = i, b = (i + 1) % outer_len;
    emb.graph.add_edge(a, b, 1);
  }
  for (int i = 0; i < outer_len; ++i)
    emb.rot[i] = {(i + 1) % outer_len, (i + outer_len - 1) % outer_len};
  emb.outer_edge = {1, 0};  // the orbit 1->0->k-1->... walks the circuit once

  // ear-cut the bounded polygon at random until all bounded faces are
  // triangles, then grow by inserting vertices into random bounded faces
  auto bounded_faces = [&]() {
    auto faces = trace_faces(emb);
    int outer = outer_face_index(emb, faces);
    std::vector<FaceWalk> out;
    for (size_t f = 0; f < faces.size(); ++f)
      if (static_cast<int>(f) != outer) out.push_back(faces[f]);
    return out;
  };
  for (;;) {
    auto faces = bounded_faces();
    std::vector<int> big;
    for (size_t f = 0; f < faces.size(); ++f)
      if (faces[f].size() > 3) big.push_back(static_cast<int>(f));
    if (big.empty()) break;
    const FaceWalk& w = faces[big[rng() % big.size()]];
    int m = static_cast<int>(w.size());
    // random ear chord
    std::vector<std::pair<int, int>> options;
    for (int i = 0; i < m; ++i) {
      int j = (i + 2) % m;
      if (w[i] != w[j] && !emb.graph.has_edge(w[i], w[j])) options.push_back({i, j});
    }
    if (options.empty()) fail("InternalInvariantBroken", "polygon without an ear");
    auto [i, j] = options[rng() % options.size()];
    add_chord_in_face(emb, w, i, j, 1);
  }
  while (emb.graph.n() < n) {
    auto faces = bounded_faces();
    const FaceWalk& w = faces[rng() % faces.size()];
    insert_vertex_in_face(emb, w, "v" + std::to_string(emb.graph.n()), 1);
  }
  return emb;
}

RotationEmbedding random_triangulation(int n, std::mt19937_64& rng) {
  return random_near_triangulation(n, 3, rng);
}

static bool connected_after_removal(const SignedGraph& g, int u, int v) {
  // BFS from u avoiding the edge (u,v)
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (const auto& [b, s] : g.neighbors(a)) {
      (void)s;
      if ((a == u && b == v) || (a == v && b == u)) continue;
      if (!seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return seen[v];
}

RotationEmbedding random_planar(int n, double keep_fraction, std::mt19937_64& rng) {
  RotationEmbedding emb = random_triangulation(std::max(n, 3), rng);
  int target = std::max(n - 1, static_cast<int>(keep_fraction * emb.graph.edge_count()));
  int attempts = 8 * emb.graph.edge_count();
  while (emb.graph.edge_count() > target && attempts-- > 0) {
    auto edges = emb.graph.edges();
    auto [u, v, s] = edges[rng() % edges.size()];
    (void)s;
    if (connected_after_removal(emb.graph, u, v)) remove_edge_from_embedding(emb, u, v);
  }
  return emb;
}

RotationEmbedding random_no_k_circuit(int n, int k, std::mt19937_64& rng) {
  RotationEmbedding emb = random_triangulation(std::max(n, 3), rng);
  for (;;) {
    auto c = has_circuit_of_length(emb.graph, k);
    if (!c) return emb;
    int i = static_cast<int>(rng() % c->size());
    // circuit edges stay in a cycle, removal keeps the component connected
    remove_edge_from_embedding(emb, (*c)[i], (*c)[(i + 1) % c->size()]);
  }
}

RotationEmbedding random_girth5(int n, std::mt19937_64& rng) {
  RotationEmbedding emb = random_triangulation(std::max(n, 3), rng);
  for (;;) {
    auto c3 = has_circuit_of_length(emb.graph, 3);
    auto c = c3 ? c3 : has_circuit_of_length(emb.graph, 4);
    if (!c) return emb;
    int i = static_cast<int>(rng() % c->size());
    remove_edge_from_embedding(emb, (*c)[i], (*c)[(i + 1) % c->size()]);
  }
}

RotationEmbedding with_random_signs(const RotationEmbedding& emb, std::mt19937_64& rng) {
  RotationEmbedding out = emb;
  std::vector<std::tuple<VertexId, VertexId, int>> edges;
  for (const auto& [u, v, s] : emb.graph.edges()) {
    (void)s;
    edges.emplace_back(emb.graph.id(u), emb.graph.id(v), rng() % 2 == 0 ? 1 : -1);
  }
  out.graph = SignedGraph::build(emb.graph.ids(), edges);
  return out;
}

ListAssignment random_lists(int n, int k, int lo, int hi, std::mt19937_64& rng) {
  std::vector<int> universe;
  for (int c = lo; c <= hi; ++c) universe.push_back(c);
  if (k > static_cast<int>(universe.size())) fail("BadArguments", "universe too small");
  ListAssignment L;
  L.lists.resize(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> u = universe;
    std::shuffle(u.begin(), u.end(), rng);
    L.lists[v].assign(u.begin(), u.begin() + k);
    std::sort(L.lists[v].begin(), L.lists[v].end());
  }
  return L;
}

}  // namespace sigcolor
