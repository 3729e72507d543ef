#pragma once

#include "sigcolor/planar.hpp"

namespace sigcolor {

// Extends a precolored path/circuit P on the outer face of a signed plane
// graph of girth >= 5 to the whole graph. Preconditions (PreconditionViolated
// otherwise): no 3- or 4-circuit; |V(P)| <= 6; V(P) on the outer face; cP a
// valid coloring of (P, sigma|P); 2-lists allowed only on the outer face,
// 3-lists elsewhere; no edge joins two vertices with <=2-color lists except
// inside P.
//
// The recursion follows the inductive argument exactly: component/cutvertex
// decomposition, chord splits, separating 2- and 3-paths, emptying short
// circuits, then the three-vertex boundary step with its exceptional
// configurations. Situations the argument claims impossible raise
// InternalInvariantBroken; near-miss configurations are appended to *flags.
Coloring extend_path_girth5(const RotationEmbedding& emb, const ListAssignment& L,
                            const std::vector<int>& P, const std::vector<int>& cP,
                            std::vector<std::string>* flags = nullptr);

// 3-list coloring of signed planar graphs with neither 3- nor 4-circuits.
// Throws NotPlanar / GirthTooSmall (message names a witness circuit).
Coloring color_girth5_3lists(const SignedGraph& g, const ListAssignment& L,
                             std::vector<std::string>* flags = nullptr);

}  // namespace sigcolor
