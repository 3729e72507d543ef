#pragma once

// Internal face/region machinery shared by the two constructive coloring
// recursions. Instances there are vertex-subsets of one host graph, carried
// as rotation maps keyed by host vertex index.

#include <map>
#include <utility>
#include <vector>

#include "sigcolor/planar.hpp"

namespace sigcolor::detail {

using Rot = std::map<int, std::vector<int>>;

std::vector<std::vector<int>> sub_components(const Rot& rot);

std::vector<int> sub_cutvertices(const Rot& rot);

// Face tracing with the same next-edge convention as trace_faces.
std::vector<FaceWalk> sub_faces(const Rot& rot);

// Splits the disk along a separator path (consecutive vertices adjacent; a
// chord is a 2-vertex path). faces[outerIdx] is the unbounded walk. Returns
// the two closed sides, each containing the separator; sorted ascending.
std::pair<std::vector<int>, std::vector<int>> split_by_separator(const Rot& rot,
                                                                 const std::vector<FaceWalk>& faces,
                                                                 int outerIdx,
                                                                 const std::vector<int>& sepPath);

// Vertices strictly inside the cycle (faces not reachable from the outer walk
// without crossing a cycle edge).
std::vector<int> interior_of_cycle(const Rot& rot, const std::vector<FaceWalk>& faces,
                                   int outerIdx, const std::vector<int>& cycle);

// Restriction of a rotation map to a vertex subset, cyclic order preserved.
Rot restrict_rot(const Rot& rot, const std::vector<int>& keep);

}  // namespace sigcolor::detail
