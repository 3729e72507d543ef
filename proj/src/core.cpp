#include "sigcolor/core.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sigcolor {

SignedGraph SignedGraph::build(const std::vector<VertexId>& ids,
                               const std::vector<std::tuple<VertexId, VertexId, int>>& edges) {
  SignedGraph g;
  for (const auto& id : ids) {
    if (g.index_.count(id)) fail("DuplicateVertex", "vertex '" + id + "' declared twice");
    g.index_[id] = static_cast<int>(g.ids_.size());
    g.ids_.push_back(id);
  }
  g.adj_.resize(g.ids_.size());
  for (const auto& [a, b, s] : edges) {
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(b);
    if (ia == g.index_.end()) fail("UnknownVertex", "edge endpoint '" + a + "' not declared");
    if (ib == g.index_.end()) fail("UnknownVertex", "edge endpoint '" + b + "' not declared");
    if (s != 1 && s != -1) fail("BadSign", "edge (" + a + "," + b + ") sign must be +1 or -1");
    if (ia->second == ib->second) fail("Loop", "loop at vertex '" + a + "'");
    if (g.has_edge(ia->second, ib->second))
      fail("DuplicateEdge", "edge (" + a + "," + b + ") appears twice");
    g.add_edge(ia->second, ib->second, s);
  }
  return g;
}

int SignedGraph::index(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail("UnknownVertex", "vertex '" + id + "' not in graph");
  return it->second;
}

bool SignedGraph::has_edge(int u, int v) const {
  const auto& a = adj_.at(u);
  auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, -2));
  return it != a.end() && it->first == v;
}

int SignedGraph::sign(int u, int v) const {
  const auto& a = adj_.at(u);
  auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, -2));
  if (it == a.end() || it->first != v)
    fail("UnknownEdge", "no edge (" + id(u) + "," + id(v) + ")");
  return it->second;
}

std::vector<std::tuple<int, int, int>> SignedGraph::edges() const {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n(); ++u)
    for (const auto& [v, s] : adj_[u])
      if (u < v) out.emplace_back(u, v, s);
  return out;
}

int SignedGraph::add_vertex(const VertexId& id) {
  if (index_.count(id)) fail("DuplicateVertex", "vertex '" + id + "' already present");
  int v = static_cast<int>(ids_.size());
  index_[id] = v;
  ids_.push_back(id);
  adj_.emplace_back();
  return v;
}

void SignedGraph::add_edge(int u, int v, int sign) {
  if (u == v) fail("Loop", "loop at vertex '" + id(u) + "'");
  if (has_edge(u, v)) fail("DuplicateEdge", "edge (" + id(u) + "," + id(v) + ") already present");
  auto ins = [](std::vector<std::pair<int, int>>& a, int w, int s) {
    a.insert(std::lower_bound(a.begin(), a.end(), std::make_pair(w, -2)), {w, s});
  };
  ins(adj_[u], v, sign);
  ins(adj_[v], u, sign);
  ++edge_count_;
}

void SignedGraph::remove_edge(int u, int v) {
  auto rem = [](std::vector<std::pair<int, int>>& a, int w) {
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(w, -2));
    if (it == a.end() || it->first != w) return false;
    a.erase(it);
    return true;
  };
  if (!rem(adj_[u], v)) fail("UnknownEdge", "no edge (" + id(u) + "," + id(v) + ")");
  rem(adj_[v], u);
  --edge_count_;
}

SignedGraph SignedGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> old2new(n(), -1);
  SignedGraph g;
  for (int v : keep) {
    if (old2new[v] != -1) fail("DuplicateVertex", "vertex kept twice");
    old2new[v] = static_cast<int>(g.ids_.size());
    g.index_[ids_[v]] = old2new[v];
    g.ids_.push_back(ids_[v]);
  }
  g.adj_.resize(g.ids_.size());
  for (int v : keep)
    for (const auto& [w, s] : adj_[v])
      if (old2new[w] != -1 && v < w) g.add_edge(old2new[v], old2new[w], s);
  return g;
}

SignedGraph SignedGraph::unsigned_version() const {
  SignedGraph g = *this;
  for (auto& a : g.adj_)
    for (auto& p : a) p.second = 1;
  return g;
}

ListAssignment ListAssignment::uniform(int n, std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  ListAssignment L;
  L.lists.assign(n, colors);
  return L;
}

void ListAssignment::validate(const SignedGraph& g) const {
  if (static_cast<int>(lists.size()) != g.n())
    fail("SizeMismatch", "list assignment covers " + std::to_string(lists.size()) +
                             " vertices, graph has " + std::to_string(g.n()));
  for (int v = 0; v < g.n(); ++v)
    if (lists[v].empty()) fail("EmptyList", "empty list at vertex '" + g.id(v) + "'");
}

Coloring coloring_from_map(const SignedGraph& g, const std::map<VertexId, int>& m) {
  for (const auto& [id, c] : m) {
    (void)c;
    g.index(id);  // UnknownVertex on stray ids
  }
  Coloring c(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto it = m.find(g.id(v));
    if (it == m.end()) fail("PartialColoring", "vertex '" + g.id(v) + "' has no color");
    c[v] = it->second;
  }
  return c;
}

Balance circuit_balance(const SignedGraph& g, const std::vector<int>& cycle) {
  int k = static_cast<int>(cycle.size());
  if (k < 3) fail("NotACircuit", "circuit needs at least 3 vertices");
  std::set<int> seen(cycle.begin(), cycle.end());
  if (static_cast<int>(seen.size()) != k) fail("NotACircuit", "repeated vertex in circuit");
  int negatives = 0;
  for (int i = 0; i < k; ++i) {
    int u = cycle[i], v = cycle[(i + 1) % k];
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) fail("NotACircuit", "vertex out of range");
    if (!g.has_edge(u, v))
      fail("NotACircuit", "missing edge (" + g.id(u) + "," + g.id(v) + ")");
    if (g.sign(u, v) == -1) ++negatives;
  }
  return negatives % 2 == 0 ? Balance::Balanced : Balance::Unbalanced;
}

SwitchResult switch_at(const SignedGraph& g, const std::optional<ListAssignment>& L,
                       const std::optional<Coloring>& c, const std::vector<int>& X) {
  std::vector<char> in(g.n(), 0);
  for (int v : X) {
    if (v < 0 || v >= g.n()) fail("UnknownVertex", "switch set vertex out of range");
    in[v] = 1;
  }
  SwitchResult r;
  std::vector<std::tuple<VertexId, VertexId, int>> edges;
  for (const auto& [u, v, s] : g.edges())
    edges.emplace_back(g.id(u), g.id(v), in[u] != in[v] ? -s : s);
  r.graph = SignedGraph::build(g.ids(), edges);
  if (L) {
    ListAssignment l2 = *L;
    for (int v = 0; v < g.n(); ++v)
      if (in[v]) {
        for (int& a : l2.lists[v]) a = -a;
        std::sort(l2.lists[v].begin(), l2.lists[v].end());
      }
    r.lists = std::move(l2);
  }
  if (c) {
    Coloring c2 = *c;
    for (int v = 0; v < g.n(); ++v)
      if (in[v]) c2[v] = -c2[v];
    r.coloring = std::move(c2);
  }
  return r;
}

AllPositiveResult equivalent_to_all_positive(const SignedGraph& g) {
  // 2-color every component treating negative edges as "sides differ".
  // The side-1 vertices form the switch set; a parity conflict yields an
  // unbalanced circuit through the BFS tree.
  AllPositiveResult res;
  std::vector<int> side(g.n(), -1), parent(g.n(), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const auto& [v, s] : g.neighbors(u)) {
        int want = s == 1 ? side[u] : 1 - side[u];
        if (side[v] == -1) {
          side[v] = want;
          parent[v] = u;
          q.push_back(v);
        } else if (side[v] != want) {
          // Tree paths u->root and v->root plus edge uv close an odd cycle.
          std::vector<int> pu{u}, pv{v};
          for (int x = u; parent[x] != -1; x = parent[x]) pu.push_back(parent[x]);
          for (int x = v; parent[x] != -1; x = parent[x]) pv.push_back(parent[x]);
          // Strip the common tail above the lowest common ancestor.
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          // pu: u .. lca, pv: v .. lca; combine u..lca + reverse(v .. below lca)
          res.yes = false;
          for (int x : pu) res.unbalanced_circuit.push_back(x);
          for (int i = static_cast<int>(pv.size()) - 2; i >= 0; --i)
            res.unbalanced_circuit.push_back(pv[i]);
          return res;
        }
      }
    }
  }
  res.yes = true;
  for (int v = 0; v < g.n(); ++v)
    if (side[v] == 1) res.switch_set.push_back(v);
  return res;
}

VerifyResult verify_coloring(const SignedGraph& g, const std::optional<ListAssignment>& L,
                             const Coloring& c) {
  if (static_cast<int>(c.size()) != g.n()) fail("PartialColoring", "coloring not total");
  VerifyResult r;
  for (const auto& [u, v, s] : g.edges())
    if (c[u] == s * c[v]) r.violations.push_back({Violation::EdgeConflict, u, v});
  if (L) {
    for (int v = 0; v < g.n(); ++v) {
      const auto& lst = L->lists.at(v);
      if (std::find(lst.begin(), lst.end(), c[v]) == lst.end())
        r.violations.push_back({Violation::ColorNotInList, v, -1});
    }
  }
  r.valid = r.violations.empty();
  return r;
}

std::vector<int> mrs_color_set(int k) {
  if (k < 1) fail("NonPositiveK", "k must be positive, got " + std::to_string(k));
  std::vector<int> out;
  if (k % 2 == 0) {
    for (int i = k / 2; i >= 1; --i) out.push_back(-i);
    for (int i = 1; i <= k / 2; ++i) out.push_back(i);
  } else {
    for (int i = (k - 1) / 2; i >= 1; --i) out.push_back(-i);
    out.push_back(0);
    for (int i = 1; i <= (k - 1) / 2; ++i) out.push_back(i);
  }
  return out;
}

}  // namespace sigcolor
