#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sigcolor {

// Reducibility sweeps for the two configuration templates. The per-instance
// kernels are branch-light bitmask searches; the sweep loops exist in a
// serial reference version and an OpenMP version that must produce identical
// reports (the benchmark tool compares them).

// One chorded-6-circuit instance: residual lists for u0..u5 (|L(u2)| = 3,
// others 2) and the four free edge signs; u0u2, u1u2, u2u3 are positive by
// switching normalization. Returns true when a proper assignment exists.
bool claim2_instance_colorable(const std::array<std::vector<int>, 6>& lists, int s01, int s34,
                               int s45, int s50);

struct Claim2Report {
  std::string mode;  // "exhaustive" or "randomized"
  int universe_radius = 0;
  std::uint64_t instances_total = 0;    // full instance space
  std::uint64_t instances_checked = 0;  // after the negation-symmetry quotient
  std::uint64_t counterexamples = 0;
  std::vector<std::string> first_counterexamples;
  double seconds = 0;
  bool parallel = true;
};

// All residual lists over {0,+-1,+-2,+-3}, quotiented by simultaneous list
// negation (the only switch that fixes the normalized signs), times all 16
// free-sign patterns.
Claim2Report check_claim2_exhaustive(bool parallel = true);

// Random residual lists over {0,+-1,...,+-6}, all sign patterns sampled.
Claim2Report check_claim2_randomized(std::uint64_t seed, std::uint64_t samples,
                                     bool parallel = true);

// One chorded-10-circuit instance. Edge order: circuit edges (u_i, u_{i+1})
// for i = 0..9, then chords u0u8, u2u6, u2u7.
struct Claim3Outcome {
  bool strategy_ok = false;    // the sequential coloring recipe completed
  bool exhaustive_ok = false;  // only evaluated when the strategy failed
};

Claim3Outcome claim3_run_instance(const std::array<std::vector<int>, 10>& lists,
                                  const std::array<int, 13>& signs);

struct Claim3Report {
  std::uint64_t samples = 0;
  std::uint64_t strategy_failures = 0;           // recipe failed, exhaustive succeeded
  std::uint64_t reducibility_counterexamples = 0;  // both failed
  std::vector<std::string> details;
  double seconds = 0;
  bool parallel = true;
};

// Seeded random residual-list/sign instances matching the degree pattern;
// sample i is derived from (seed, i) only, so thread count cannot change the
// report.
Claim3Report check_claim3(std::uint64_t seed, std::uint64_t samples, bool parallel = true);

}  // namespace sigcolor
