#include "sigcolor/choose5.hpp"

#include <algorithm>
#include <set>

#include "region.hpp"

namespace sigcolor {

namespace {

using detail::Rot;

// Working state of the extension recursion. Instances are vertex subsets of
// the completed host graph; `outer` keeps the boundary circuit with the two
// precolored vertices at positions 0 and 1.
struct Extender {
  const SignedGraph& g;
  std::map<int, int> col;

  int product(int u, int v) const { return g.sign(u, v) * col.at(v); }

  int pick_smallest(const std::vector<int>& lst, const std::vector<int>& forbidden) const {
    std::vector<int> sorted = lst;
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted)
      if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end()) return c;
    fail("InternalInvariantBroken", "no color available where the argument guarantees one");
  }

  struct Inst {
    Rot rot;
    std::vector<int> outer;  // circuit; outer[0], outer[1] are precolored
    std::map<int, std::vector<int>> lists;
  };

  void run(Inst nt) {
    int p = static_cast<int>(nt.outer.size());
    int v1 = nt.outer[0], v2 = nt.outer[1];

    if (nt.rot.size() == 3 && p == 3) {
      int v3 = nt.outer[2];
      col[v3] = pick_smallest(nt.lists.at(v3), {product(v3, v1), product(v3, v2)});
      return;
    }

    // chord of the outer circuit: split, color the side with v1v2 first
    std::map<int, int> posOf;
    for (int i = 0; i < p; ++i) posOf[nt.outer[i]] = i;
    int ci = -1, cj = -1;
    for (int i = 0; i < p && ci < 0; ++i)
      for (int w : nt.rot.at(nt.outer[i])) {
        auto it = posOf.find(w);
        if (it == posOf.end()) continue;
        int j = it->second;
        if (j > i + 1 && !(i == 0 && j == p - 1)) {
          ci = i;
          cj = j;
          break;
        }
      }
    if (ci >= 0) {
      int a = nt.outer[ci], b = nt.outer[cj];
      auto faces = detail::sub_faces(nt.rot);
      int outerIdx = find_outer(faces, nt.outer);
      auto [s1, s2] = detail::split_by_separator(nt.rot, faces, outerIdx, {a, b});
      // the side through positions 0,1 is G1 and gets colored first; G2 opens
      // with the chord endpoints as its precolored pair
      std::vector<int> g1outer, g2outer;
      if (ci == 0) {
        for (int t = 0; t <= cj; ++t) g1outer.push_back(nt.outer[t]);
        g2outer.push_back(a);
        for (int t = cj; t < p; ++t) g2outer.push_back(nt.outer[t]);
      } else {
        for (int t = 0; t <= ci; ++t) g1outer.push_back(nt.outer[t]);
        for (int t = cj; t < p; ++t) g1outer.push_back(nt.outer[t]);
        g2outer.push_back(b);
        for (int t = ci; t < cj; ++t) g2outer.push_back(nt.outer[t]);
      }
      auto side_with = [&](const std::vector<int>& outerWanted) -> std::vector<int>& {
        std::set<int> w1(s1.begin(), s1.end());
        for (int v : outerWanted)
          if (!w1.count(v)) return s2;
        return s1;
      };
      Inst G1{detail::restrict_rot(nt.rot, side_with(g1outer)), g1outer, {}};
      Inst G2{detail::restrict_rot(nt.rot, side_with(g2outer)), g2outer, {}};
      for (const auto& [v, lst] : nt.lists) {
        if (G1.rot.count(v)) G1.lists[v] = lst;
        if (G2.rot.count(v)) G2.lists[v] = lst;
      }
      run(std::move(G1));
      run(std::move(G2));  // chord endpoints were colored by G1
      return;
    }

    // fan case at vp, the outer neighbor of v1 opposite v2
    int vp = nt.outer[p - 1];
    int vprev = nt.outer[p - 2];
    const auto& rp = nt.rot.at(vp);
    int deg = static_cast<int>(rp.size());
    auto fan_from = [&](bool forward) {
      std::vector<int> fan;
      int start = static_cast<int>(std::find(rp.begin(), rp.end(), v1) - rp.begin());
      for (int step = 1; step < deg; ++step) {
        int w = rp[(start + (forward ? step : deg - step)) % deg];
        if (w == vprev) return fan;
        fan.push_back(w);
      }
      return fan;  // vprev never reached: wrong direction
    };
    std::vector<int> fan = fan_from(true);
    if (static_cast<int>(fan.size()) != deg - 2) fan = fan_from(false);
    if (static_cast<int>(fan.size()) != deg - 2)
      fail("InternalInvariantBroken", "fan neighbors of the removed vertex are not consecutive");

    std::vector<int> lp = nt.lists.at(vp);
    std::sort(lp.begin(), lp.end());
    std::vector<int> gammas;
    int alphaProduct = product(vp, v1);
    for (int c : lp)
      if (c != alphaProduct && static_cast<int>(gammas.size()) < 2) gammas.push_back(c);
    if (gammas.size() < 2)
      fail("InternalInvariantBroken", "outer vertex lost its two spare colors");

    Inst next;
    next.outer.assign(nt.outer.begin(), nt.outer.end() - 1);
    for (auto it = fan.rbegin(); it != fan.rend(); ++it) next.outer.push_back(*it);
    std::vector<int> keep;
    for (const auto& [v, nbrs] : nt.rot) {
      (void)nbrs;
      if (v != vp) keep.push_back(v);
    }
    next.rot = detail::restrict_rot(nt.rot, keep);
    next.lists = nt.lists;
    next.lists.erase(vp);
    for (int u : fan) {
      auto& lst = next.lists.at(u);
      for (int gamma : gammas)
        lst.erase(std::remove(lst.begin(), lst.end(), gamma * g.sign(vp, u)), lst.end());
    }
    run(std::move(next));
    col[vp] = gammas[0] == product(vp, vprev) ? gammas[1] : gammas[0];
  }

  static int find_outer(const std::vector<FaceWalk>& faces, const std::vector<int>& outer) {
    std::set<int> want(outer.begin(), outer.end());
    for (size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].size() != outer.size()) continue;
      std::set<int> got(faces[f].begin(), faces[f].end());
      if (got == want) return static_cast<int>(f);
    }
    fail("InternalInvariantBroken", "outer circuit is not a face of the instance");
  }
};

}  // namespace

Coloring extend_two_precolored(const RotationEmbedding& emb, const ListAssignment& L, int v1,
                               int v2) {
  const SignedGraph& g = emb.graph;
  L.validate(g);
  auto faces = trace_faces(emb);
  int outerIdx = outer_face_index(emb, faces);
  for (size_t f = 0; f < faces.size(); ++f)
    if (static_cast<int>(f) != outerIdx && faces[f].size() != 3)
      fail("PreconditionViolated", "bounded face of size " + std::to_string(faces[f].size()));
  const FaceWalk& outer = faces[outerIdx];
  std::set<int> seen(outer.begin(), outer.end());
  if (seen.size() != outer.size())
    fail("PreconditionViolated", "outer boundary is not a circuit");
  if (!g.has_edge(v1, v2)) fail("PreconditionViolated", "precolored vertices not adjacent");
  if (!seen.count(v1) || !seen.count(v2))
    fail("PreconditionViolated", "precolored vertices not on the outer circuit");
  if (L.size(v1) != 1 || L.size(v2) != 1)
    fail("PreconditionViolated", "precolored vertices need singleton lists");
  int alpha = L.lists[v1][0], beta = L.lists[v2][0];
  if (alpha == beta * g.sign(v1, v2))
    fail("PreconditionViolated", "precolored pair conflicts on its edge");
  for (int v : outer)
    if (v != v1 && v != v2 && L.size(v) < 3)
      fail("PreconditionViolated", "outer vertex '" + g.id(v) + "' needs 3 colors");
  for (int v = 0; v < g.n(); ++v)
    if (!seen.count(v) && L.size(v) < 5)
      fail("PreconditionViolated", "interior vertex '" + g.id(v) + "' needs 5 colors");

  Extender ext{g, {}};
  Extender::Inst root;
  for (int v = 0; v < g.n(); ++v) root.rot[v] = emb.rot[v];
  // orient the circuit so that v1 sits at 0 and v2 at 1
  int pos1 = static_cast<int>(std::find(outer.begin(), outer.end(), v1) - outer.begin());
  int p = static_cast<int>(outer.size());
  std::vector<int> oriented;
  for (int i = 0; i < p; ++i) oriented.push_back(outer[(pos1 + i) % p]);
  if (oriented[1] != v2) {
    std::reverse(oriented.begin() + 1, oriented.end());
    if (oriented[1] != v2) fail("PreconditionViolated", "precolored edge not on the circuit");
  }
  root.outer = oriented;
  for (int v = 0; v < g.n(); ++v) root.lists[v] = L.lists[v];
  ext.col[v1] = alpha;
  ext.col[v2] = beta;
  ext.run(std::move(root));

  Coloring c(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto it = ext.col.find(v);
    if (it == ext.col.end()) fail("InternalInvariantBroken", "vertex left uncolored");
    c[v] = it->second;
  }
  auto check = verify_coloring(g, L, c);
  if (!check.valid) fail("InternalInvariantBroken", "extension produced an invalid coloring");
  return c;
}

Coloring color_planar_5lists(const SignedGraph& g, const ListAssignment& L) {
  L.validate(g);
  for (int v = 0; v < g.n(); ++v)
    if (L.size(v) < 5) fail("PreconditionViolated", "vertex '" + g.id(v) + "' needs 5 colors");
  auto embedded = embed(g);
  if (!embedded.planar) fail("NotPlanar", "input graph is not planar");

  Coloring out(g.n(), 0);
  for (const auto& comp : components(g)) {
    SignedGraph sub = g.induced(comp);
    ListAssignment subL;
    subL.lists.resize(sub.n());
    for (int v = 0; v < sub.n(); ++v) subL.lists[v] = L.lists[g.index(sub.id(v))];

    Coloring subC(sub.n(), 0);
    if (sub.n() == 1) {
      subC[0] = *std::min_element(subL.lists[0].begin(), subL.lists[0].end());
    } else if (sub.n() == 2) {
      subC[0] = *std::min_element(subL.lists[0].begin(), subL.lists[0].end());
      std::sort(subL.lists[1].begin(), subL.lists[1].end());
      for (int c : subL.lists[1])
        if (c != subC[0] * sub.sign(0, 1)) {
          subC[1] = c;
          break;
        }
    } else {
      auto emb = embed(sub);
      if (!emb.planar) fail("InternalInvariantBroken", "component of a planar graph not planar");
      auto completed = triangulate_interior(make_two_connected(emb.embedding));
      auto faces = trace_faces(completed);
      const FaceWalk& outer = faces[outer_face_index(completed, faces)];
      // lexicographically smallest outer edge carries the precolored pair
      int best = 0;
      auto key = [&](int i) {
        int a = outer[i], b = outer[(i + 1) % outer.size()];
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      for (int i = 1; i < static_cast<int>(outer.size()); ++i)
        if (key(i) < key(best)) best = i;
      int v1 = std::min(outer[best], outer[(best + 1) % outer.size()]);
      int v2 = v1 == outer[best] ? outer[(best + 1) % outer.size()] : outer[best];

      ListAssignment shrunk;
      shrunk.lists.resize(sub.n());
      std::set<int> outerSet(outer.begin(), outer.end());
      for (int v = 0; v < sub.n(); ++v) {
        std::vector<int> lst = subL.lists[v];
        std::sort(lst.begin(), lst.end());
        if (v == v1) {
          shrunk.lists[v] = {lst[0]};
        } else if (v == v2) {
          int alpha = *std::min_element(subL.lists[v1].begin(), subL.lists[v1].end());
          for (int c : lst)
            if (c != alpha * completed.graph.sign(v1, v2)) {
              shrunk.lists[v] = {c};
              break;
            }
        } else if (outerSet.count(v)) {
          shrunk.lists[v].assign(lst.begin(), lst.begin() + 3);
        } else {
          shrunk.lists[v] = lst;
        }
      }
      subC = extend_two_precolored(completed, shrunk, v1, v2);
    }
    for (int v = 0; v < sub.n(); ++v) out[g.index(sub.id(v))] = subC[v];
  }
  auto check = verify_coloring(g, L, out);
  if (!check.valid) fail("InternalInvariantBroken", "5-list coloring failed verification");
  return out;
}

}  // namespace sigcolor
