#pragma once

#include <cstdint>
#include <functional>

#include "sigcolor/core.hpp"

namespace sigcolor {

struct SolveResult {
  bool sat = false;
  Coloring coloring;    // valid when sat
  std::uint64_t nodes = 0;
};

// Exact search for an L-coloring: MRV vertex order, ascending colors, forward
// propagation of the forbidden product color. Deterministic. Unsat only after
// the search space is exhausted. budget=0 means unlimited; a positive budget
// throws BudgetExceeded when the node count would pass it.
SolveResult solve(const SignedGraph& g, const ListAssignment& L, std::uint64_t budget = 0);

std::uint64_t count_colorings(const SignedGraph& g, const ListAssignment& L);

// Calls cb for every L-coloring; cb returns false to stop early.
void enumerate_colorings(const SignedGraph& g, const ListAssignment& L,
                         const std::function<bool(const Coloring&)>& cb);

struct GreedyResult {
  bool sat = false;
  Coloring coloring;
  int stuck = -1;  // first vertex with empty residual list when !sat
};

// Colors in reverse removal order, at each vertex avoiding the product colors
// of already-colored neighbors; smallest available color wins.
GreedyResult greedy_by_degeneracy(const SignedGraph& g, const ListAssignment& L,
                                  const std::vector<int>& order);

struct ChoosableResult {
  bool choosable = true;
  ListAssignment counterexample;  // first failing assignment when !choosable
  std::uint64_t assignments_checked = 0;
};

// Enumerates every k-list assignment with colors from `universe` and solves
// each. Results are relative to the universe. Throws BudgetExceeded when the
// number of assignments would exceed `budget`.
ChoosableResult choosable_exhaustive(const SignedGraph& g, int k, std::vector<int> universe,
                                     std::uint64_t budget = 50'000'000ULL);

}  // namespace sigcolor
