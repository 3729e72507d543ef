#include "sigcolor/solver.hpp"

#include <algorithm>

namespace sigcolor {

namespace {

// Shared DFS core. Domains are per-vertex color vectors with an active mask;
// assignment propagates the forbidden product color to uncolored neighbors
// and records removals on a trail for backtracking.
struct Search {
  const SignedGraph& g;
  std::vector<std::vector<int>> colors;     // sorted candidate colors
  std::vector<std::vector<char>> active;
  std::vector<int> active_count;
  std::vector<int> chosen;                  // index into colors, -1 if unassigned
  std::vector<std::pair<int, int>> trail;   // (vertex, color position)
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;

  explicit Search(const SignedGraph& graph, const ListAssignment& L) : g(graph) {
    L.validate(g);
    int n = g.n();
    colors.resize(n);
    active.resize(n);
    active_count.resize(n);
    chosen.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      colors[v] = L.lists[v];
      std::sort(colors[v].begin(), colors[v].end());
      colors[v].erase(std::unique(colors[v].begin(), colors[v].end()), colors[v].end());
      active[v].assign(colors[v].size(), 1);
      active_count[v] = static_cast<int>(colors[v].size());
    }
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < g.n(); ++v)
      if (chosen[v] == -1 && (best == -1 || active_count[v] < active_count[best])) best = v;
    return best;
  }

  bool forbid(int v, int color) {
    const auto& cv = colors[v];
    auto it = std::lower_bound(cv.begin(), cv.end(), color);
    if (it == cv.end() || *it != color) return true;
    int pos = static_cast<int>(it - cv.begin());
    if (!active[v][pos]) return true;
    active[v][pos] = 0;
    --active_count[v];
    trail.emplace_back(v, pos);
    return active_count[v] > 0;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      auto [v, pos] = trail.back();
      trail.pop_back();
      active[v][pos] = 1;
      ++active_count[v];
    }
  }

  // Enumerates solutions; cb returns false to abort the whole search.
  bool dfs(const std::function<bool(const std::vector<int>&)>& cb) {
    int v = pick();
    if (v == -1) {
      std::vector<int> sol(g.n());
      for (int u = 0; u < g.n(); ++u) sol[u] = colors[u][chosen[u]];
      return cb(sol);
    }
    for (size_t pos = 0; pos < colors[v].size(); ++pos) {
      if (!active[v][pos]) continue;
      ++nodes;
      if (budget && nodes > budget) fail("BudgetExceeded", "search node budget exhausted");
      chosen[v] = static_cast<int>(pos);
      size_t mark = trail.size();
      bool ok = true;
      for (const auto& [w, s] : g.neighbors(v))
        if (chosen[w] == -1 && !forbid(w, s * colors[v][pos])) {
          ok = false;
          break;
        }
      if (ok && !dfs(cb)) return false;
      undo_to(mark);
      chosen[v] = -1;
    }
    return true;
  }
};

}  // namespace

SolveResult solve(const SignedGraph& g, const ListAssignment& L, std::uint64_t budget) {
  Search s(g, L);
  s.budget = budget;
  SolveResult res;
  s.dfs([&](const std::vector<int>& sol) {
    res.sat = true;
    res.coloring = sol;
    return false;  // stop at the first solution
  });
  res.nodes = s.nodes;
  return res;
}

std::uint64_t count_colorings(const SignedGraph& g, const ListAssignment& L) {
  Search s(g, L);
  std::uint64_t count = 0;
  s.dfs([&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

void enumerate_colorings(const SignedGraph& g, const ListAssignment& L,
                         const std::function<bool(const Coloring&)>& cb) {
  Search s(g, L);
  s.dfs(cb);
}

GreedyResult greedy_by_degeneracy(const SignedGraph& g, const ListAssignment& L,
                                  const std::vector<int>& order) {
  L.validate(g);
  if (static_cast<int>(order.size()) != g.n())
    fail("PreconditionViolated", "order must list every vertex once");
  std::vector<char> seen(g.n(), 0);
  for (int v : order) {
    if (v < 0 || v >= g.n() || seen[v])
      fail("PreconditionViolated", "order must list every vertex once");
    seen[v] = 1;
  }
  GreedyResult res;
  res.coloring.assign(g.n(), 0);
  std::vector<char> colored(g.n(), 0);
  for (int i = g.n() - 1; i >= 0; --i) {
    int v = order[i];
    std::vector<int> lst = L.lists[v];
    std::sort(lst.begin(), lst.end());
    int pick = 0;
    bool found = false;
    for (int c : lst) {
      bool ok = true;
      for (const auto& [w, s] : g.neighbors(v))
        if (colored[w] && res.coloring[w] * s == c) {
          ok = false;
          break;
        }
      if (ok) {
        pick = c;
        found = true;
        break;
      }
    }
    if (!found) {
      res.sat = false;
      res.stuck = v;
      return res;
    }
    res.coloring[v] = pick;
    colored[v] = 1;
  }
  res.sat = true;
  return res;
}

ChoosableResult choosable_exhaustive(const SignedGraph& g, int k, std::vector<int> universe,
                                     std::uint64_t budget) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  int m = static_cast<int>(universe.size());
  if (k < 1 || k > m) fail("BadK", "list size must be between 1 and the universe size");

  // number of k-subsets of the universe
  std::uint64_t subsets = 1;
  for (int i = 0; i < k; ++i) subsets = subsets * (m - i) / (i + 1);
  long double total = 1;
  for (int v = 0; v < g.n(); ++v) {
    total *= subsets;
    if (total > static_cast<long double>(budget))
      fail("BudgetExceeded", "assignment space larger than the budget");
  }

  // odometer over per-vertex k-subsets in lexicographic order
  std::vector<std::vector<int>> idx(g.n());
  for (auto& s : idx) {
    s.resize(k);
    for (int i = 0; i < k; ++i) s[i] = i;
  }
  auto next_subset = [&](std::vector<int>& s) {
    int i = k - 1;
    while (i >= 0 && s[i] == m - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    return true;
  };

  ChoosableResult res;
  for (;;) {
    ListAssignment L;
    L.lists.resize(g.n());
    for (int v = 0; v < g.n(); ++v)
      for (int i : idx[v]) L.lists[v].push_back(universe[i]);
    ++res.assignments_checked;
    if (!solve(g, L).sat) {
      res.choosable = false;
      res.counterexample = L;
      return res;
    }
    int v = g.n() - 1;
    while (v >= 0 && !next_subset(idx[v])) {
      for (int i = 0; i < k; ++i) idx[v][i] = i;
      --v;
    }
    if (v < 0) break;
  }
  return res;
}

}  // namespace sigcolor
