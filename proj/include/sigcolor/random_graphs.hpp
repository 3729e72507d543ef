#pragma once

#include <random>

#include "sigcolor/planar.hpp"

namespace sigcolor {

// Seeded generators used by the CLI `random` subcommand and the test sweeps.
// All of them return a plane graph with its rotation system; distributions
// are documented in the README. Vertices are named v0, v1, ...

// Triangle plus repeated insertion of a vertex into a random bounded face:
// a maximal plane graph with all-positive signs. n >= 3.
RotationEmbedding random_triangulation(int n, std::mt19937_64& rng);

// Outer circuit of length `outer_len`, ear-cut at random, then random
// interior insertions: every bounded face a triangle. 3 <= outer_len <= n.
RotationEmbedding random_near_triangulation(int n, int outer_len, std::mt19937_64& rng);

// Triangulation with random edges deleted (connectivity preserved) until
// about keep_fraction of them remain.
RotationEmbedding random_planar(int n, double keep_fraction, std::mt19937_64& rng);

// Deletes an edge of some k-circuit until none remains.
RotationEmbedding random_no_k_circuit(int n, int k, std::mt19937_64& rng);

// Deletes edges of 3- and 4-circuits until girth >= 5.
RotationEmbedding random_girth5(int n, std::mt19937_64& rng);

// Each edge negative with probability 1/2.
RotationEmbedding with_random_signs(const RotationEmbedding& emb, std::mt19937_64& rng);

// k-subsets of {lo..hi} \ {0 if exclude_zero}, one per vertex.
ListAssignment random_lists(int n, int k, int lo, int hi, std::mt19937_64& rng);

void remove_edge_from_embedding(RotationEmbedding& emb, int u, int v);

}  // namespace sigcolor
