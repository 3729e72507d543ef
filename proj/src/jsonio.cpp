#include "sigcolor/jsonio.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace sigcolor {

using nlohmann::ordered_json;

GraphBundle graph_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail("BadJson", e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    fail("BadJson", "expected an object with 'vertices' and 'edges'");

  std::vector<VertexId> ids;
  for (const auto& v : j["vertices"]) ids.push_back(v.get<std::string>());
  std::vector<std::tuple<VertexId, VertexId, int>> edges;
  for (const auto& e : j["edges"])
    edges.emplace_back(e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                       e.at("sign").get<int>());

  GraphBundle b;
  b.graph = SignedGraph::build(ids, edges);

  if (j.contains("lists")) {
    ListAssignment L;
    L.lists.resize(b.graph.n());
    for (const auto& [key, arr] : j["lists"].items()) {
      int v = b.graph.index(key);
      for (const auto& c : arr) L.lists[v].push_back(c.get<int>());
      std::sort(L.lists[v].begin(), L.lists[v].end());
    }
    L.validate(b.graph);
    b.lists = std::move(L);
  }
  if (j.contains("rotation")) {
    RotationEmbedding emb;
    emb.graph = b.graph;
    emb.rot.resize(b.graph.n());
    for (const auto& [key, arr] : j["rotation"].items()) {
      int v = b.graph.index(key);
      for (const auto& w : arr) emb.rot[v].push_back(b.graph.index(w.get<std::string>()));
    }
    for (int v = 0; v < b.graph.n(); ++v)
      if (emb.rot[v].size() != static_cast<size_t>(b.graph.degree(v)))
        fail("InvalidRotation", "rotation at '" + b.graph.id(v) + "' has wrong length");
    b.embedding = std::move(emb);
  }
  return b;
}

// Rotations are emitted starting at the lowest-index neighbor, which makes
// the cyclic order canonical without changing the embedding.
static std::vector<int> canonical_rotation(const std::vector<int>& r) {
  if (r.empty()) return r;
  size_t best = 0;
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] < r[best]) best = i;
  std::vector<int> out;
  for (size_t i = 0; i < r.size(); ++i) out.push_back(r[(best + i) % r.size()]);
  return out;
}

std::string graph_to_json(const SignedGraph& g, const ListAssignment* lists,
                          const RotationEmbedding* emb) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < g.n(); ++v) j["vertices"].push_back(g.id(v));
  j["edges"] = ordered_json::array();
  for (const auto& [u, v, s] : g.edges()) {
    ordered_json e;
    e["u"] = g.id(u);
    e["v"] = g.id(v);
    e["sign"] = s;
    j["edges"].push_back(e);
  }
  if (lists) {
    ordered_json l = ordered_json::object();
    for (int v = 0; v < g.n(); ++v) {
      auto sorted = lists->lists.at(v);
      std::sort(sorted.begin(), sorted.end());
      l[g.id(v)] = sorted;
    }
    j["lists"] = l;
  }
  if (emb) {
    ordered_json r = ordered_json::object();
    for (int v = 0; v < g.n(); ++v) {
      ordered_json arr = ordered_json::array();
      for (int w : canonical_rotation(emb->rot.at(v))) arr.push_back(g.id(w));
      r[g.id(v)] = arr;
    }
    j["rotation"] = r;
  }
  return j.dump(2) + "\n";
}

std::string coloring_to_json(const SignedGraph& g, const Coloring& c) {
  ordered_json j = ordered_json::object();
  for (int v = 0; v < g.n(); ++v) j[g.id(v)] = c.at(v);
  return j.dump(2) + "\n";
}

std::string to_dot(const SignedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  \"" << g.id(v) << "\";\n";
  for (const auto& [u, v, s] : g.edges()) {
    out << "  \"" << g.id(u) << "\" -- \"" << g.id(v) << "\"";
    if (s < 0) out << " [style=dashed, label=\"−\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sigcolor
