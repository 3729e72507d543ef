#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sigcolor/core.hpp"

namespace sigcolor {

// A face is its boundary walk: walk[i] -> walk[i+1] (cyclically) are the
// directed edges of the orbit. Walk length = face size d(f); a bridge is
// walked twice, so sizes sum to 2|E|.
using FaceWalk = std::vector<int>;

// Combinatorial plane embedding: cyclic neighbor order per vertex.
// Face tracing convention: the directed edge after (a,b) is (b,c) where c
// follows a in rot[b]. The outer face is designated by one of its directed
// edges; (-1,-1) means "first traced face" (the default for edgeless graphs).
struct RotationEmbedding {
  SignedGraph graph;
  std::vector<std::vector<int>> rot;
  std::pair<int, int> outer_edge{-1, -1};

  int succ(int v, int after) const;  // neighbor following `after` in rot[v]
  int pred(int v, int before) const;
};

// Traces all faces, deterministically (vertices ascending, rotation order).
// Throws InvalidRotation when rot[v] is not a permutation of v's neighbors.
std::vector<FaceWalk> trace_faces(const RotationEmbedding& emb);

// Index into trace_faces(emb) of the designated outer face.
int outer_face_index(const RotationEmbedding& emb, const std::vector<FaceWalk>& faces);

struct EmbeddingCheck {
  bool planar = false;
  int euler_defect = 0;  // sum over components of |2 - (V - E + F)|
};

// Per-component Euler test of the rotation system.
EmbeddingCheck validate_embedding(const RotationEmbedding& emb);

struct EmbedResult {
  bool planar = false;
  RotationEmbedding embedding;                      // valid when planar
  std::vector<std::pair<int, int>> kuratowski;      // K5/K3,3 subdivision edges otherwise
};

// Planarity test + combinatorial embedding (Boyer-Myrvold, via Boost.Graph).
// Deterministic for a fixed input graph.
EmbedResult embed(const SignedGraph& g);

// Finds a circuit of exactly k vertices if one exists. k >= 3 (throws BadK).
std::optional<std::vector<int>> has_circuit_of_length(const SignedGraph& g, int k);

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> order;  // removal sequence
};

// Repeated minimum-degree removal, lowest index first on ties.
DegeneracyResult degeneracy_order(const SignedGraph& g);

// Connected components, each sorted ascending; components ordered by minimum.
std::vector<std::vector<int>> components(const SignedGraph& g);

std::vector<int> cutvertices(const SignedGraph& g);

// Adds +1 edges inside faces until no cutvertex remains. Requires connected.
RotationEmbedding make_two_connected(const RotationEmbedding& emb);

// Splits every bounded face into triangles with +1 chords; the outer face and
// all original edges/signs are untouched. Requires planar and 2-connected.
RotationEmbedding triangulate_interior(const RotationEmbedding& emb);

// Rotation surgery helpers (used by builders and generators).
// Adds chord walk[i]-walk[j] inside the face, splitting it. Caller guarantees
// the positions are non-consecutive and the edge is absent.
void add_chord_in_face(RotationEmbedding& emb, const FaceWalk& walk, int i, int j, int sign);
// Adds a new vertex inside the face, adjacent to every walk vertex (a claw
// when the face is a triangle). Returns its index.
int insert_vertex_in_face(RotationEmbedding& emb, const FaceWalk& walk, const VertexId& id,
                          int sign);

}  // namespace sigcolor
