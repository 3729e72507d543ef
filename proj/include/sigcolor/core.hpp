#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sigcolor {

using VertexId = std::string;

// Error with a stable machine-readable kind ("DuplicateEdge", "Loop", ...).
class GraphError : public std::runtime_error {
 public:
  GraphError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw GraphError(kind, msg);
}

// Simple undirected graph with an edge signature in {+1,-1}.
// Vertices carry external string ids; all algorithms work on the index of a
// vertex in the id vector, and that position order is the tie-breaking order
// everywhere ("lowest vertex id" = smallest index).
class SignedGraph {
 public:
  SignedGraph() = default;

  // Validates simplicity. Throws DuplicateEdge/Loop/UnknownVertex/BadSign.
  static SignedGraph build(const std::vector<VertexId>& ids,
                           const std::vector<std::tuple<VertexId, VertexId, int>>& edges);

  int n() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return edge_count_; }
  const VertexId& id(int v) const { return ids_.at(v); }
  const std::vector<VertexId>& ids() const { return ids_; }
  bool has_vertex(const VertexId& id) const { return index_.count(id) > 0; }
  int index(const VertexId& id) const;  // throws UnknownVertex
  bool has_edge(int u, int v) const;
  int sign(int u, int v) const;  // throws UnknownEdge if absent
  // (neighbor, sign) pairs sorted by neighbor index.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  // All edges as (u, v, sign) with u < v, sorted.
  std::vector<std::tuple<int, int, int>> edges() const;

  // Mutators used by builders; keep the graph simple or throw.
  int add_vertex(const VertexId& id);
  void add_edge(int u, int v, int sign);
  void remove_edge(int u, int v);

  // Subgraph induced by `keep` (indices into this graph). Ids are preserved,
  // relative order too.
  SignedGraph induced(const std::vector<int>& keep) const;

  // Same graph with every edge positive.
  SignedGraph unsigned_version() const;

 private:
  std::vector<VertexId> ids_;
  std::map<VertexId, int> index_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  int edge_count_ = 0;
};

// Per-vertex finite color lists, indexed like the host graph's vertices.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  static ListAssignment uniform(int n, std::vector<int> colors);
  // Throws EmptyList if some list is empty, SizeMismatch on wrong length.
  void validate(const SignedGraph& g) const;
  int size(int v) const { return static_cast<int>(lists.at(v).size()); }
};

// Total coloring, indexed by vertex.
using Coloring = std::vector<int>;

// Builds a total coloring from an id->color map; throws PartialColoring if a
// vertex is missing, UnknownVertex on stray ids.
Coloring coloring_from_map(const SignedGraph& g, const std::map<VertexId, int>& m);

enum class Balance { Balanced, Unbalanced };

// `cycle` lists distinct vertices in circuit order (closing edge implied).
// Throws NotACircuit if the sequence is not a circuit of g.
Balance circuit_balance(const SignedGraph& g, const std::vector<int>& cycle);

struct SwitchResult {
  SignedGraph graph;
  std::optional<ListAssignment> lists;
  std::optional<Coloring> coloring;
};

// Switch at X: flip signs on edges leaving X, negate lists and colors inside X.
SwitchResult switch_at(const SignedGraph& g, const std::optional<ListAssignment>& L,
                       const std::optional<Coloring>& c, const std::vector<int>& X);

struct AllPositiveResult {
  bool yes = false;
  std::vector<int> switch_set;          // X with switch(g, X) all-positive, when yes
  std::vector<int> unbalanced_circuit;  // witness circuit otherwise
};

// Decides whether g is switching-equivalent to the all-positive signature.
AllPositiveResult equivalent_to_all_positive(const SignedGraph& g);

struct Violation {
  enum Kind { EdgeConflict, ColorNotInList } kind;
  int u = -1;
  int v = -1;  // meaningful for EdgeConflict
};

struct VerifyResult {
  bool valid = true;
  std::vector<Violation> violations;
};

// Checks the signed constraint c(u) != sign(uv) * c(v) on every edge, and
// list membership when L is given.
VerifyResult verify_coloring(const SignedGraph& g, const std::optional<ListAssignment>& L,
                             const Coloring& c);

// The k-element canonical color set: {+-1,...,+-k/2} for even k,
// {0,+-1,...,+-(k-1)/2} for odd k. Throws NonPositiveK.
std::vector<int> mrs_color_set(int k);

}  // namespace sigcolor
