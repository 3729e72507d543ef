#include "sigcolor/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace sigcolor {

int RotationEmbedding::succ(int v, int after) const {
  const auto& r = rot.at(v);
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == after) return r[(i + 1) % r.size()];
  fail("InvalidRotation", "vertex " + graph.id(after) + " not in rotation of " + graph.id(v));
}

int RotationEmbedding::pred(int v, int before) const {
  const auto& r = rot.at(v);
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == before) return r[(i + r.size() - 1) % r.size()];
  fail("InvalidRotation", "vertex " + graph.id(before) + " not in rotation of " + graph.id(v));
}

static void check_rotation(const RotationEmbedding& emb) {
  const SignedGraph& g = emb.graph;
  if (static_cast<int>(emb.rot.size()) != g.n())
    fail("InvalidRotation", "rotation covers wrong vertex count");
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> a;
    for (const auto& [w, s] : g.neighbors(v)) {
      (void)s;
      a.push_back(w);
    }
    std::vector<int> b = emb.rot[v];
    std::sort(b.begin(), b.end());
    if (a != b)
      fail("InvalidRotation", "rotation at '" + g.id(v) + "' is not a permutation of neighbors");
  }
}

std::vector<FaceWalk> trace_faces(const RotationEmbedding& emb) {
  check_rotation(emb);
  const SignedGraph& g = emb.graph;
  // position of each neighbor in rot[v], for O(1) successor lookup
  std::vector<std::map<int, int>> pos(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (size_t i = 0; i < emb.rot[v].size(); ++i) pos[v][emb.rot[v][i]] = static_cast<int>(i);

  std::vector<FaceWalk> faces;
  std::set<std::pair<int, int>> seen;
  for (int u = 0; u < g.n(); ++u) {
    for (int v : emb.rot[u]) {
      if (seen.count({u, v})) continue;
      FaceWalk walk;
      int a = u, b = v;
      do {
        seen.insert({a, b});
        walk.push_back(a);
        int i = pos[b][a];
        int c = emb.rot[b][(i + 1) % emb.rot[b].size()];
        a = b;
        b = c;
      } while (!(a == u && b == v));
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

int outer_face_index(const RotationEmbedding& emb, const std::vector<FaceWalk>& faces) {
  if (emb.outer_edge.first < 0) return faces.empty() ? -1 : 0;
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f];
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] == emb.outer_edge.first && w[(i + 1) % w.size()] == emb.outer_edge.second)
        return static_cast<int>(f);
  }
  fail("InvalidRotation", "designated outer edge not found in any face");
}

std::vector<std::vector<int>> components(const SignedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  int nc = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, sg] : g.neighbors(u)) {
        (void)sg;
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

EmbeddingCheck validate_embedding(const RotationEmbedding& emb) {
  const SignedGraph& g = emb.graph;
  auto faces = trace_faces(emb);
  auto comps = components(g);
  std::vector<int> compOf(g.n());
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) compOf[v] = static_cast<int>(c);
  std::vector<int> fcount(comps.size(), 0), ecount(comps.size(), 0);
  for (const auto& w : faces) fcount[compOf[w[0]]]++;
  for (const auto& [u, v, s] : g.edges()) {
    (void)v;
    (void)s;
    ecount[compOf[u]]++;
  }
  EmbeddingCheck res;
  res.planar = true;
  for (size_t c = 0; c < comps.size(); ++c) {
    int V = static_cast<int>(comps[c].size());
    int E = ecount[c];
    int F = E == 0 ? 1 : fcount[c];
    int defect = V - E + F - 2;
    if (defect != 0) {
      res.planar = false;
      res.euler_defect += defect < 0 ? -defect : defect;
    }
  }
  return res;
}

EmbedResult embed(const SignedGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(g.n());
  for (const auto& [u, v, s] : g.edges()) {
    (void)s;
    boost::add_edge(u, v, bg);
  }
  int ei = 0;
  for (auto e : boost::make_iterator_range(boost::edges(bg)))
    boost::put(boost::edge_index, bg, e, ei++);

  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> storage(g.n());
  std::vector<Edge> kur;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = storage.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));

  EmbedResult res;
  res.planar = planar;
  if (!planar) {
    for (auto e : kur)
      res.kuratowski.emplace_back(static_cast<int>(boost::source(e, bg)),
                                  static_cast<int>(boost::target(e, bg)));
    std::sort(res.kuratowski.begin(), res.kuratowski.end());
    return res;
  }
  RotationEmbedding emb;
  emb.graph = g;
  emb.rot.resize(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (auto e : storage[v]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      emb.rot[v].push_back(a == v ? b : a);
    }
  // default outer face: the first traced face
  for (int v = 0; v < g.n() && emb.outer_edge.first < 0; ++v)
    if (!emb.rot[v].empty()) emb.outer_edge = {v, emb.rot[v][0]};
  res.embedding = std::move(emb);
  return res;
}

std::optional<std::vector<int>> has_circuit_of_length(const SignedGraph& g, int k) {
  if (k < 3) fail("BadK", "circuit length must be >= 3");
  // DFS from each start s over vertices > s; close back to s at depth k.
  std::vector<int> path;
  std::vector<char> used(g.n(), 0);
  std::optional<std::vector<int>> found;
  auto dfs = [&](auto&& self, int s, int u, int depth) -> bool {
    if (depth == k - 1) {
      if (g.has_edge(u, s)) {
        found = path;
        return true;
      }
      return false;
    }
    for (const auto& [w, sg] : g.neighbors(u)) {
      (void)sg;
      if (w <= s || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self, s, w, depth + 1)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    if (dfs(dfs, s, s, 0)) return found;
  }
  return std::nullopt;
}

DegeneracyResult degeneracy_order(const SignedGraph& g) {
  DegeneracyResult res;
  std::vector<int> deg(g.n());
  std::vector<char> removed(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  for (int step = 0; step < g.n(); ++step) {
    int best = -1;
    for (int v = 0; v < g.n(); ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    res.degeneracy = std::max(res.degeneracy, deg[best]);
    res.order.push_back(best);
    removed[best] = 1;
    for (const auto& [w, s] : g.neighbors(best)) {
      (void)s;
      if (!removed[w]) --deg[w];
    }
  }
  return res;
}

std::vector<int> cutvertices(const SignedGraph& g) {
  std::vector<int> disc(g.n(), -1), low(g.n(), 0), parent(g.n(), -1);
  std::vector<char> art(g.n(), 0);
  int timer = 0;
  auto dfs = [&](auto&& self, int u) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (const auto& [w, s] : g.neighbors(u)) {
      (void)s;
      if (disc[w] == -1) {
        parent[w] = u;
        ++children;
        self(self, w);
        low[u] = std::min(low[u], low[w]);
        if (parent[u] != -1 && low[w] >= disc[u]) art[u] = 1;
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent[u] == -1 && children > 1) art[u] = 1;
  };
  for (int v = 0; v < g.n(); ++v)
    if (disc[v] == -1) dfs(dfs, v);
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (art[v]) out.push_back(v);
  return out;
}

void add_chord_in_face(RotationEmbedding& emb, const FaceWalk& walk, int i, int j, int sign) {
  int m = static_cast<int>(walk.size());
  int fi = walk[i], fj = walk[j];
  int fiPrev = walk[(i + m - 1) % m];
  int fjPrev = walk[(j + m - 1) % m];
  emb.graph.add_edge(fi, fj, sign);
  auto insert_after = [&](int v, int after, int nb) {
    auto& r = emb.rot[v];
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) fail("InvalidRotation", "corner vertex missing from rotation");
    r.insert(it + 1, nb);
  };
  insert_after(fi, fiPrev, fj);
  insert_after(fj, fjPrev, fi);
}

int insert_vertex_in_face(RotationEmbedding& emb, const FaceWalk& walk, const VertexId& id,
                          int sign) {
  int m = static_cast<int>(walk.size());
  int w = emb.graph.add_vertex(id);
  emb.rot.emplace_back();
  for (int t = 0; t < m; ++t) emb.graph.add_edge(w, walk[t], sign);
  // rot[w] is the reversed walk; at each walk vertex, w slots in after the
  // walk predecessor, which keeps all new corner faces consistent.
  for (int t = m - 1; t >= 0; --t) emb.rot[w].push_back(walk[t]);
  for (int t = 0; t < m; ++t) {
    int v = walk[t], prev = walk[(t + m - 1) % m];
    auto& r = emb.rot[v];
    auto it = std::find(r.begin(), r.end(), prev);
    if (it == r.end()) fail("InvalidRotation", "face walk inconsistent with rotation");
    r.insert(it + 1, w);
  }
  return w;
}

RotationEmbedding make_two_connected(const RotationEmbedding& emb_in) {
  RotationEmbedding emb = emb_in;
  if (components(emb.graph).size() != 1) fail("Disconnected", "graph must be connected");
  if (emb.graph.n() <= 2) return emb;
  for (;;) {
    auto cuts = cutvertices(emb.graph);
    if (cuts.empty()) return emb;
    int u = cuts.front();
    // label edges at u by biconnected component
    const SignedGraph& g = emb.graph;
    std::vector<int> disc(g.n(), -1), low(g.n(), 0);
    std::map<std::pair<int, int>, int> edgeBlock;
    std::vector<std::pair<int, int>> stack;
    int timer = 0, blockId = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
      disc[v] = low[v] = timer++;
      for (const auto& [w, s] : g.neighbors(v)) {
        (void)s;
        if (w == parent) continue;
        if (disc[w] == -1) {
          stack.push_back({v, w});
          self(self, w, v);
          low[v] = std::min(low[v], low[w]);
          if (low[w] >= disc[v]) {
            while (true) {
              auto e = stack.back();
              stack.pop_back();
              edgeBlock[{std::min(e.first, e.second), std::max(e.first, e.second)}] = blockId;
              if (e == std::make_pair(v, w)) break;
            }
            ++blockId;
          }
        } else if (disc[w] < disc[v]) {
          stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      }
    };
    for (int v = 0; v < g.n(); ++v)
      if (disc[v] == -1) dfs(dfs, v, -1);

    auto block_of = [&](int a, int b) {
      return edgeBlock.at({std::min(a, b), std::max(a, b)});
    };
    const auto& r = emb.rot[u];
    bool added = false;
    for (size_t i = 0; i < r.size() && !added; ++i) {
      int a = r[i], b = r[(i + 1) % r.size()];
      if (block_of(u, a) != block_of(u, b)) {
        // chord a-b inside the face holding the corner a->u->b
        emb.graph.add_edge(a, b, 1);
        auto& ra = emb.rot[a];
        auto itu = std::find(ra.begin(), ra.end(), u);
        ra.insert(itu, b);  // b immediately before u at a
        auto& rb = emb.rot[b];
        itu = std::find(rb.begin(), rb.end(), u);
        rb.insert(itu + 1, a);  // a immediately after u at b
        added = true;
      }
    }
    if (!added) fail("InternalInvariantBroken", "cutvertex with single block");
  }
}

RotationEmbedding triangulate_interior(const RotationEmbedding& emb_in) {
  RotationEmbedding emb = emb_in;
  auto check = validate_embedding(emb);
  if (!check.planar) fail("NotPlanar", "embedding fails the Euler check");
  if (!cutvertices(emb.graph).empty()) fail("NotTwoConnected", "graph has a cutvertex");
  if (emb.graph.n() < 3) return emb;

  for (;;) {
    auto faces = trace_faces(emb);
    int outer = outer_face_index(emb, faces);
    int target = -1;
    for (size_t f = 0; f < faces.size(); ++f)
      if (static_cast<int>(f) != outer && faces[f].size() > 3) {
        target = static_cast<int>(f);
        break;
      }
    if (target == -1) return emb;

    FaceWalk walk = faces[target];
    int m = static_cast<int>(walk.size());
    // apex candidates in vertex order; an apex works when no fan chord
    // duplicates an existing edge
    std::vector<int> order = walk;
    std::sort(order.begin(), order.end());
    int apexPos = -1;
    for (int cand : order) {
      int t = static_cast<int>(std::find(walk.begin(), walk.end(), cand) - walk.begin());
      bool ok = true;
      for (int d = 2; d <= m - 2 && ok; ++d)
        if (emb.graph.has_edge(walk[t], walk[(t + d) % m])) ok = false;
      if (ok) {
        apexPos = t;
        break;
      }
    }
    if (apexPos >= 0) {
      // fan: repeatedly cut the triangle next to the apex
      FaceWalk cur(walk.begin() + apexPos, walk.end());
      cur.insert(cur.end(), walk.begin(), walk.begin() + apexPos);
      while (cur.size() > 3) {
        add_chord_in_face(emb, cur, 0, 2, 1);
        cur.erase(cur.begin() + 1);
      }
    } else {
      // no full fan possible; fall back to any single admissible chord
      bool added = false;
      for (int i = 0; i < m && !added; ++i)
        for (int d = 2; d <= m - 2 && !added; ++d) {
          int j = (i + d) % m;
          if (walk[i] != walk[j] && !emb.graph.has_edge(walk[i], walk[j])) {
            add_chord_in_face(emb, walk, i, j, 1);
            added = true;
          }
        }
      if (!added)
        fail("WouldCreateParallelEdge", "face admits no chord without a parallel edge");
    }
  }
}

}  // namespace sigcolor
