#include "region.hpp"

#include <algorithm>
#include <set>

namespace sigcolor::detail {

std::vector<std::vector<int>> sub_components(const Rot& rot) {
  std::map<int, int> comp;
  int nc = 0;
  for (const auto& [v, nbrs] : rot) {
    (void)nbrs;
    if (comp.count(v)) continue;
    std::vector<int> stack{v};
    comp[v] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : rot.at(u))
        if (!comp.count(w)) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (const auto& [v, c] : comp) out[c].push_back(v);
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

std::vector<int> sub_cutvertices(const Rot& rot) {
  std::map<int, int> disc, low;
  std::set<int> art;
  int timer = 0;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : rot.at(u)) {
      if (w == parent) continue;
      if (!disc.count(w)) {
        ++children;
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent != -1 && low[w] >= disc[u]) art.insert(u);
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent == -1 && children > 1) art.insert(u);
  };
  for (const auto& [v, nbrs] : rot) {
    (void)nbrs;
    if (!disc.count(v)) dfs(dfs, v, -1);
  }
  return std::vector<int>(art.begin(), art.end());
}

std::vector<FaceWalk> sub_faces(const Rot& rot) {
  std::map<std::pair<int, int>, int> pos;
  for (const auto& [v, nbrs] : rot)
    for (size_t i = 0; i < nbrs.size(); ++i) pos[{v, nbrs[i]}] = static_cast<int>(i);
  std::vector<FaceWalk> faces;
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, nbrs] : rot) {
    for (int v : nbrs) {
      if (seen.count({u, v})) continue;
      FaceWalk walk;
      int a = u, b = v;
      do {
        seen.insert({a, b});
        walk.push_back(a);
        const auto& rb = rot.at(b);
        int i = pos.at({b, a});
        int c = rb[(i + 1) % rb.size()];
        a = b;
        b = c;
      } while (!(a == u && b == v));
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

namespace {

std::map<std::pair<int, int>, std::vector<int>> edge_faces(const std::vector<FaceWalk>& faces) {
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f];
    for (size_t i = 0; i < w.size(); ++i) {
      int a = w[i], b = w[(i + 1) % w.size()];
      out[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
    }
  }
  return out;
}

std::vector<char> grow(const std::vector<FaceWalk>& faces,
                       const std::map<std::pair<int, int>, std::vector<int>>& ef, int outerIdx,
                       const std::set<std::pair<int, int>>& blocked, int seed) {
  std::vector<char> in(faces.size(), 0);
  if (seed == outerIdx) return in;
  std::vector<int> stack{seed};
  in[seed] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    const auto& w = faces[f];
    for (size_t i = 0; i < w.size(); ++i) {
      int a = w[i], b = w[(i + 1) % w.size()];
      std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      if (blocked.count(key)) continue;
      for (int g : ef.at(key))
        if (g != outerIdx && !in[g]) {
          in[g] = 1;
          stack.push_back(g);
        }
    }
  }
  return in;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> split_by_separator(const Rot& rot,
                                                                 const std::vector<FaceWalk>& faces,
                                                                 int outerIdx,
                                                                 const std::vector<int>& sepPath) {
  (void)rot;
  auto ef = edge_faces(faces);
  std::set<std::pair<int, int>> sepEdges;
  for (size_t i = 0; i + 1 < sepPath.size(); ++i)
    sepEdges.insert({std::min(sepPath[i], sepPath[i + 1]), std::max(sepPath[i], sepPath[i + 1])});
  auto firstEdge = *sepEdges.begin();
  const auto& incident = ef.at(firstEdge);
  if (incident.size() != 2 || incident[0] == incident[1])
    fail("InternalInvariantBroken", "separator edge not on two distinct faces");
  if (incident[0] == outerIdx || incident[1] == outerIdx)
    fail("InternalInvariantBroken", "separator edge lies on the outer face");

  auto r1 = grow(faces, ef, outerIdx, sepEdges, incident[0]);
  auto r2 = grow(faces, ef, outerIdx, sepEdges, incident[1]);
  std::set<int> v1(sepPath.begin(), sepPath.end()), v2(sepPath.begin(), sepPath.end());
  for (size_t f = 0; f < faces.size(); ++f) {
    if (r1[f] && r2[f]) fail("InternalInvariantBroken", "separator regions overlap");
    if (static_cast<int>(f) != outerIdx && !r1[f] && !r2[f])
      fail("InternalInvariantBroken", "face outside both separator regions");
    for (int v : faces[f]) {
      if (r1[f]) v1.insert(v);
      if (r2[f]) v2.insert(v);
    }
  }
  std::vector<int> side1(v1.begin(), v1.end()), side2(v2.begin(), v2.end());
  return {side1, side2};
}

std::vector<int> interior_of_cycle(const Rot& rot, const std::vector<FaceWalk>& faces,
                                   int outerIdx, const std::vector<int>& cycle) {
  (void)rot;
  auto ef = edge_faces(faces);
  std::set<std::pair<int, int>> blocked;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    blocked.insert({std::min(a, b), std::max(a, b)});
  }
  // exterior = faces reachable from the outer walk without crossing the cycle
  std::vector<char> ext(faces.size(), 0);
  std::vector<int> stack{outerIdx};
  ext[outerIdx] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    const auto& w = faces[f];
    for (size_t i = 0; i < w.size(); ++i) {
      int a = w[i], b = w[(i + 1) % w.size()];
      std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      if (blocked.count(key)) continue;
      for (int g : ef.at(key))
        if (!ext[g]) {
          ext[g] = 1;
          stack.push_back(g);
        }
    }
  }
  std::set<int> cyc(cycle.begin(), cycle.end()), inside;
  for (size_t f = 0; f < faces.size(); ++f)
    if (!ext[f])
      for (int v : faces[f])
        if (!cyc.count(v)) inside.insert(v);
  return std::vector<int>(inside.begin(), inside.end());
}

Rot restrict_rot(const Rot& rot, const std::vector<int>& keep) {
  std::set<int> in(keep.begin(), keep.end());
  Rot out;
  for (int v : keep) {
    auto& r = out[v];
    for (int w : rot.at(v))
      if (in.count(w)) r.push_back(w);
  }
  return out;
}

}  // namespace sigcolor::detail
