#pragma once

#include <string>

#include "sigcolor/planar.hpp"
#include "sigcolor/rational.hpp"

namespace sigcolor {

struct Element {
  enum Kind { Vertex, Face } kind = Vertex;
  int idx = -1;
  friend bool operator<(const Element& a, const Element& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.idx < b.idx;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.kind == b.kind && a.idx == b.idx;
  }
};

struct Transfer {
  std::string rule;
  Element from;
  Element to;
  Rat amount;
};

// Exact charge bookkeeping over the vertices and faces of a plane graph.
struct ChargeLedger {
  std::vector<FaceWalk> faces;
  std::vector<Rat> vertex_initial, vertex_final;
  std::vector<Rat> face_initial, face_final;
  std::vector<Transfer> transfers;

  Rat total_initial() const;
  Rat total_final() const;
};

// ch(v) = 3 d(v) - 10, ch(f) = 2 d(f) - 10. Total is exactly -20 on a
// connected plane graph. Throws Disconnected.
ChargeLedger initial_charges(const RotationEmbedding& emb);

struct FaceAdjacency {
  int f1 = -1, f2 = -1;
  int shared_edges = 0;
  bool normal = false;  // share an edge and no third vertex
};

struct Classification {
  std::vector<FaceWalk> faces;
  std::vector<char> bad_vertex;   // degree 4, on two nonadjacent 3-faces
  std::vector<char> bad_3face;    // 3-face whose three vertices are all bad
  std::vector<char> magic_5face;
  std::vector<FaceAdjacency> adjacency;
};

Classification classify(const RotationEmbedding& emb);

// Runs rules R1..R6 and logs every transfer. The total charge is conserved
// exactly.
ChargeLedger apply_rules(const RotationEmbedding& emb);

struct ClaimConfig {
  int claim = 0;             // 2 or 3
  std::vector<int> circuit;  // u0.. in template order
};

// Occurrences of the two reducible-configuration templates: a chorded
// 6-circuit (u0u2 chord, d(u0) <= 5, the rest degree 4) and a triple-chorded
// 10-circuit (u0u8, u2u6, u2u7; d(u2) = 6, the rest degree 4).
std::vector<ClaimConfig> find_claim_configs(const SignedGraph& g);

struct AuditReport {
  bool min_degree_ok = false;
  int small_degree_vertex = -1;
  bool no_4circuit = false;
  std::vector<int> circuit4;
  int claim2_occurrences = 0;
  int claim3_occurrences = 0;
  Rat total_initial, total_final;
  std::vector<std::pair<std::string, Rat>> negative_final;  // element label -> charge
  std::string verdict;
};

// Checks the checkable minimal-counterexample conditions and reports every
// element with negative final charge. If all conditions held and nothing were
// negative, the charge count would contradict the theorem; the verdict names
// which side failed.
AuditReport audit_minimal_counterexample(const RotationEmbedding& emb);

}  // namespace sigcolor
