#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sigcolor/planar.hpp"

namespace sigcolor {

// A constructed instance: graph + embedding + lists + role tags per vertex
// (initial/solid/hollow for the iterated-claw graph; the boundary and inner
// labels for the replacement gadgets).
struct GadgetInstance {
  RotationEmbedding embedding;
  ListAssignment lists;
  std::map<VertexId, std::string> roles;

  const SignedGraph& graph() const { return embedding.graph; }
};

// K4 with a claw inserted into every face, twice iterated. Vertices are
// i0..i3 (initial), s0..s3 (solid), h0..h11 (hollow); constant lists
// {1,2,3,4}. Has 24 special 3-faces (one initial + one solid + one hollow).
GadgetInstance build_G3();

// Returns the special faces of a G3 instance as (initial, solid, hollow)
// vertex triples, in deterministic order.
std::vector<std::array<int, 3>> special_faces_G3(const GadgetInstance& g3);

// The 11-vertex replacement gadget: boundary triangle [x y z], inner vertices
// A,B,C,D and the 4-circuit M,N,Q,P with sign(PQ) = -1; lists from the
// 4-choosability construction.
GadgetInstance build_H();

// G3 with every special face replaced by a copy of H (x->solid, y->hollow,
// z->initial). 212 vertices; 24 negative edges P_i Q_i; 4-lists.
GadgetInstance build_theorem4_instance();

// The cube with circuits [ABCD], [MNPQ] and spokes AM, BN, CP, DQ.
GadgetInstance build_T();

// Nine cube copies sharing A' and C'; sign(M_i N_i) = -1; the 3-list
// assignment with a_i = i, b_j = j + 3.
GadgetInstance build_theorem10_instance();

// Signed circuit fixture with the given negative edge positions and lists.
GadgetInstance build_circuit(int n, const std::vector<int>& negative_positions,
                             const std::vector<std::vector<int>>& lists);

struct VerifyStage {
  std::string name;
  std::string paper_claim;
  bool pass = false;
  std::map<std::string, std::int64_t> counts;
  std::string detail;
};

struct VerifyReport {
  bool pass = false;
  std::vector<VerifyStage> stages;
};

// Machine check of the 4-choosability counterexample:
// (a) exactly 24 proper colorings of G3 from {1,2,3,4}, each hitting exactly
//     one special face with (solid,hollow,initial) = (1,2,3);
// (b) signed H admits no extension of boundary colors (1,2,3);
// (c) unsigned sanity: greedy 4-lists on G3 and the ordered extension inside
//     unsigned H always succeed on seeded random trials.
VerifyReport verify_theorem4(std::uint64_t seed = 1, int trials = 10000);

// Machine check of the girth-4 non-3-choosable construction: all nine
// (c(A'), c(C')) cases leave the copy T_{3p+q} without an extension (with B
// and D forced to color 6), the 56-vertex instance is unsat as a whole, and
// unsigned random trials always extend.
VerifyReport verify_theorem10(std::uint64_t seed = 1, int trials = 1000);

}  // namespace sigcolor
