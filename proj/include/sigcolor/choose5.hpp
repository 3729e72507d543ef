#pragma once

#include "sigcolor/planar.hpp"

namespace sigcolor {

// Extends the forced colors of two adjacent outer vertices to the whole
// near-triangulation. Preconditions (PreconditionViolated otherwise):
// every bounded face a triangle; the outer face a circuit through edge v1v2;
// L(v1)={alpha}, L(v2)={beta} with alpha != beta*sign(v1v2); 3-lists on the
// remaining outer circuit; 5-lists inside.
Coloring extend_two_precolored(const RotationEmbedding& emb, const ListAssignment& L, int v1,
                               int v2);

// 5-list coloring of an arbitrary signed planar graph: embeds, completes to a
// 2-connected near-triangulation with +1 edges, shrinks boundary lists and
// runs the extension. Throws NotPlanar.
Coloring color_planar_5lists(const SignedGraph& g, const ListAssignment& L);

}  // namespace sigcolor
