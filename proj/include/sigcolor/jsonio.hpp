#pragma once

#include <optional>
#include <string>

#include "sigcolor/planar.hpp"

namespace sigcolor {

struct GraphBundle {
  SignedGraph graph;
  std::optional<ListAssignment> lists;
  std::optional<RotationEmbedding> embedding;  // present when "rotation" given
};

// Canonical JSON graph format:
//   {"vertices": [...], "edges": [{"u":..,"v":..,"sign":..}, ...],
//    "lists": {...}, "rotation": {...}}
// Emission is canonical (sorted edges, rotations starting at the lowest-id
// neighbor, 2-space indent), so emit(parse(emit(x))) == emit(x) byte for
// byte. Throws BadJson / the usual graph construction errors.
GraphBundle graph_from_json(const std::string& text);

std::string graph_to_json(const SignedGraph& g, const ListAssignment* lists = nullptr,
                          const RotationEmbedding* emb = nullptr);

std::string coloring_to_json(const SignedGraph& g, const Coloring& c);

// DOT export: negative edges dashed and labeled, positive solid.
std::string to_dot(const SignedGraph& g);

}  // namespace sigcolor
