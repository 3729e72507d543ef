#include "sigcolor/gadgets.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "sigcolor/solver.hpp"

namespace sigcolor {

namespace {

// H's combinatorial embedding, counterclockwise rotations. The boundary
// triangle is [x y z]; the inner 4-circuit is [M N Q P] with PQ negative.
const std::vector<std::pair<std::string, std::vector<std::string>>> kHRotation = {
    {"x", {"z", "Q", "N", "D", "C", "A", "y"}},
    {"y", {"A", "B", "D", "M", "P", "z", "x"}},
    {"z", {"y", "P", "Q", "x"}},
    {"A", {"C", "B", "y", "x"}},
    {"B", {"D", "y", "A", "C"}},
    {"C", {"D", "B", "A", "x"}},
    {"D", {"N", "M", "y", "B", "C", "x"}},
    {"M", {"P", "y", "D", "N"}},
    {"N", {"Q", "M", "D", "x"}},
    {"P", {"z", "y", "M", "Q"}},
    {"Q", {"z", "P", "N", "x"}},
};

const char* kHInterior[] = {"A", "B", "C", "D", "M", "N", "P", "Q"};

std::vector<int> h_list(const std::string& name) {
  if (name == "A") return {1, 2, 6, 7};
  if (name == "B") return {2, 4, 6, 7};
  if (name == "C") return {1, 4, 6, 7};
  if (name == "D") return {1, 2, 4, 5};
  if (name == "M") return {-6, 2, 5, 6};
  if (name == "N") return {-6, 1, 5, 6};
  if (name == "P") return {-6, 2, 3, 6};
  if (name == "Q") return {-6, 1, 3, 6};
  return {1, 2, 3, 4};
}

int h_edge_sign(const std::string& a, const std::string& b) {
  return ((a == "P" && b == "Q") || (a == "Q" && b == "P")) ? -1 : 1;
}

// Edges of H implied by the rotation table (each unordered pair once).
std::vector<std::pair<std::string, std::string>> h_edges() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [v, nbrs] : kHRotation)
    for (const auto& w : nbrs)
      if (v < w) out.push_back({v, w});
  return out;
}

}  // namespace

GadgetInstance build_H() {
  GadgetInstance inst;
  std::vector<VertexId> ids;
  for (const auto& [v, nbrs] : kHRotation) {
    (void)nbrs;
    ids.push_back(v);
  }
  std::vector<std::tuple<VertexId, VertexId, int>> edges;
  for (const auto& [a, b] : h_edges()) edges.emplace_back(a, b, h_edge_sign(a, b));
  inst.embedding.graph = SignedGraph::build(ids, edges);
  const SignedGraph& g = inst.embedding.graph;
  inst.embedding.rot.resize(g.n());
  for (const auto& [v, nbrs] : kHRotation) {
    auto& r = inst.embedding.rot[g.index(v)];
    for (const auto& w : nbrs) r.push_back(g.index(w));
  }
  inst.embedding.outer_edge = {g.index("y"), g.index("x")};
  inst.lists.lists.resize(g.n());
  for (const auto& id : ids) inst.lists.lists[g.index(id)] = h_list(id);
  for (const auto& id : ids) inst.roles[id] = id;
  return inst;
}

GadgetInstance build_G3() {
  GadgetInstance inst;
  // plane K4: i3 sits inside triangle [i0 i1 i2]
  inst.embedding.graph = SignedGraph::build(
      {"i0", "i1", "i2", "i3"},
      {{"i0", "i1", 1}, {"i0", "i2", 1}, {"i0", "i3", 1}, {"i1", "i2", 1}, {"i1", "i3", 1},
       {"i2", "i3", 1}});
  inst.embedding.rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
  for (int i = 0; i < 4; ++i) inst.roles["i" + std::to_string(i)] = "initial";

  auto insert_round = [&](const std::string& prefix, const std::string& role) {
    auto faces = trace_faces(inst.embedding);
    int counter = 0;
    for (const auto& walk : faces) {
      VertexId id = prefix + std::to_string(counter++);
      insert_vertex_in_face(inst.embedding, walk, id, 1);
      inst.roles[id] = role;
    }
  };
  insert_round("s", "solid");   // one claw per K4 face, sphere face included
  insert_round("h", "hollow");  // again for each of the 12 faces
  inst.lists = ListAssignment::uniform(inst.embedding.graph.n(), {1, 2, 3, 4});
  return inst;
}

static std::vector<FaceWalk> special_face_walks(const GadgetInstance& g3) {
  std::vector<FaceWalk> out;
  auto faces = trace_faces(g3.embedding);
  for (const auto& walk : faces) {
    if (walk.size() != 3) continue;
    std::set<std::string> roles;
    for (int v : walk) roles.insert(g3.roles.at(g3.graph().id(v)));
    if (roles == std::set<std::string>{"initial", "solid", "hollow"}) out.push_back(walk);
  }
  return out;
}

std::vector<std::array<int, 3>> special_faces_G3(const GadgetInstance& g3) {
  std::vector<std::array<int, 3>> out;
  for (const auto& walk : special_face_walks(g3)) {
    std::array<int, 3> t{-1, -1, -1};
    for (int v : walk) {
      const std::string& role = g3.roles.at(g3.graph().id(v));
      t[role == "initial" ? 0 : role == "solid" ? 1 : 2] = v;
    }
    out.push_back(t);
  }
  return out;
}

GadgetInstance build_theorem4_instance() {
  GadgetInstance g3 = build_G3();
  GadgetInstance inst = g3;  // grows in place
  RotationEmbedding& emb = inst.embedding;

  auto walks = special_face_walks(g3);
  if (walks.size() != 24) fail("InternalInvariantBroken", "expected 24 special faces");

  // H rotation lookup by name, plus the mirrored version
  std::map<std::string, std::vector<std::string>> rotH, rotHrev;
  for (const auto& [v, nbrs] : kHRotation) {
    rotH[v] = nbrs;
    rotHrev[v] = std::vector<std::string>(nbrs.rbegin(), nbrs.rend());
  }
  std::set<std::string> interior(std::begin(kHInterior), std::end(kHInterior));

  for (size_t copy = 0; copy < walks.size(); ++copy) {
    const FaceWalk& walk = walks[copy];
    std::string prefix = "T" + std::string(copy + 1 < 10 ? "0" : "") + std::to_string(copy + 1) +
                         ".";
    auto role_of = [&](int v) { return inst.roles.at(emb.graph.id(v)); };
    int jSolid = role_of(walk[0]) == "solid" ? 0 : role_of(walk[1]) == "solid" ? 1 : 2;
    bool mirrored = role_of(walk[(jSolid + 1) % 3]) != "hollow";
    const auto& table = mirrored ? rotHrev : rotH;

    // x -> solid, y -> hollow, z -> initial, interior -> fresh copies
    std::map<std::string, int> host;
    for (int v : walk) {
      const std::string& role = role_of(v);
      host[role == "solid" ? "x" : role == "hollow" ? "y" : "z"] = v;
    }
    for (const auto& name : interior) {
      int v = emb.graph.add_vertex(prefix + name);
      emb.rot.emplace_back();
      host[name] = v;
      inst.roles[prefix + name] = name;
      inst.lists.lists.push_back(h_list(name));
    }
    for (const auto& [a, b] : h_edges()) {
      if (interior.count(a) || interior.count(b))
        emb.graph.add_edge(host[a], host[b], h_edge_sign(a, b));
    }
    for (const auto& name : interior) {
      for (const auto& w : table.at(name)) emb.rot[host[name]].push_back(host[w]);
    }
    // splice the interior fans into the three boundary corners
    for (int t = 0; t < 3; ++t) {
      int v = walk[t];
      int prevHost = walk[(t + 2) % 3];
      std::string myRole = role_of(v) == "solid" ? "x" : role_of(v) == "hollow" ? "y" : "z";
      auto to_role = [&](int hostV) {
        const std::string& r = inst.roles.at(emb.graph.id(hostV));
        return r == "solid" ? std::string("x") : r == "hollow" ? std::string("y") : std::string("z");
      };
      std::string prevRole = to_role(prevHost);
      const auto& cyc = table.at(myRole);
      size_t start = std::find(cyc.begin(), cyc.end(), prevRole) - cyc.begin();
      std::vector<int> fan;
      for (size_t i = 1; i < cyc.size(); ++i) {
        const std::string& name = cyc[(start + i) % cyc.size()];
        if (!interior.count(name)) break;
        fan.push_back(host[name]);
      }
      auto& r = emb.rot[v];
      auto it = std::find(r.begin(), r.end(), prevHost);
      if (it == r.end()) fail("InternalInvariantBroken", "corner vertex missing");
      r.insert(it + 1, fan.begin(), fan.end());
    }
  }
  return inst;
}

GadgetInstance build_T() {
  GadgetInstance inst;
  inst.embedding.graph = SignedGraph::build(
      {"A", "B", "C", "D", "M", "N", "P", "Q"},
      {{"A", "B", 1}, {"B", "C", 1}, {"C", "D", 1}, {"D", "A", 1},
       {"M", "N", 1}, {"N", "P", 1}, {"P", "Q", 1}, {"Q", "M", 1},
       {"A", "M", 1}, {"B", "N", 1}, {"C", "P", 1}, {"D", "Q", 1}});
  const SignedGraph& g = inst.embedding.graph;
  auto rot = [&](const std::string& v, std::vector<std::string> nbrs) {
    auto& r = inst.embedding.rot[g.index(v)];
    for (const auto& w : nbrs) r.push_back(g.index(w));
  };
  inst.embedding.rot.resize(8);
  rot("A", {"D", "M", "B"});
  rot("B", {"N", "C", "A"});
  rot("C", {"B", "P", "D"});
  rot("D", {"C", "Q", "A"});
  rot("M", {"Q", "N", "A"});
  rot("N", {"P", "B", "M"});
  rot("P", {"C", "N", "Q"});
  rot("Q", {"D", "P", "M"});
  inst.embedding.outer_edge = {g.index("D"), g.index("C")};
  inst.lists = ListAssignment::uniform(8, {1, 2, 3});
  for (const auto& id : g.ids()) inst.roles[id] = id;
  return inst;
}

GadgetInstance build_theorem10_instance() {
  GadgetInstance inst;
  std::vector<VertexId> ids = {"A'", "C'"};
  for (int t = 0; t < 9; ++t)
    for (const char* s : {"B", "D", "M", "N", "P", "Q"})
      ids.push_back(s + std::to_string(t));
  std::vector<std::tuple<VertexId, VertexId, int>> edges;
  auto nm = [](const char* s, int t) { return s + std::to_string(t); };
  for (int t = 0; t < 9; ++t) {
    edges.emplace_back("A'", nm("B", t), 1);
    edges.emplace_back(nm("B", t), "C'", 1);
    edges.emplace_back("C'", nm("D", t), 1);
    edges.emplace_back(nm("D", t), "A'", 1);
    edges.emplace_back(nm("M", t), nm("N", t), -1);
    edges.emplace_back(nm("N", t), nm("P", t), 1);
    edges.emplace_back(nm("P", t), nm("Q", t), 1);
    edges.emplace_back(nm("Q", t), nm("M", t), 1);
    edges.emplace_back("A'", nm("M", t), 1);
    edges.emplace_back(nm("B", t), nm("N", t), 1);
    edges.emplace_back("C'", nm("P", t), 1);
    edges.emplace_back(nm("D", t), nm("Q", t), 1);
  }
  inst.embedding.graph = SignedGraph::build(ids, edges);
  const SignedGraph& g = inst.embedding.graph;
  inst.embedding.rot.resize(g.n());
  auto idx = [&](const std::string& s) { return g.index(s); };
  // nine leaves fanned around the two shared corners
  for (int t = 0; t < 9; ++t) {
    auto& ra = inst.embedding.rot[idx("A'")];
    ra.push_back(idx(nm("D", t)));
    ra.push_back(idx(nm("M", t)));
    ra.push_back(idx(nm("B", t)));
  }
  for (int t = 8; t >= 0; --t) {
    auto& rc = inst.embedding.rot[idx("C'")];
    rc.push_back(idx(nm("B", t)));
    rc.push_back(idx(nm("P", t)));
    rc.push_back(idx(nm("D", t)));
  }
  for (int t = 0; t < 9; ++t) {
    inst.embedding.rot[idx(nm("B", t))] = {idx(nm("N", t)), idx("C'"), idx("A'")};
    inst.embedding.rot[idx(nm("D", t))] = {idx("C'"), idx(nm("Q", t)), idx("A'")};
    inst.embedding.rot[idx(nm("M", t))] = {idx(nm("Q", t)), idx(nm("N", t)), idx("A'")};
    inst.embedding.rot[idx(nm("N", t))] = {idx(nm("P", t)), idx(nm("B", t)), idx(nm("M", t))};
    inst.embedding.rot[idx(nm("P", t))] = {idx("C'"), idx(nm("N", t)), idx(nm("Q", t))};
    inst.embedding.rot[idx(nm("Q", t))] = {idx(nm("D", t)), idx(nm("P", t)), idx(nm("M", t))};
  }
  inst.embedding.outer_edge = {idx("B8"), idx("A'")};

  inst.lists.lists.resize(g.n());
  inst.lists.lists[idx("A'")] = {0, 1, 2};
  inst.lists.lists[idx("C'")] = {3, 4, 5};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int t = 3 * i + j;
      int a = i, b = j + 3;
      inst.lists.lists[idx(nm("B", t))] = {a, b, 6};
      inst.lists.lists[idx(nm("D", t))] = {a, b, 6};
      inst.lists.lists[idx(nm("M", t))] = {-7, a, 7};
      inst.lists.lists[idx(nm("P", t))] = {-7, b, 7};
      inst.lists.lists[idx(nm("N", t))] = {-7, 6, 7};
      inst.lists.lists[idx(nm("Q", t))] = {-7, 6, 7};
    }
  for (const auto& id : g.ids()) inst.roles[id] = id.substr(0, 1) == "A" || id.substr(0, 1) == "C"
                                                      ? id
                                                      : id.substr(0, 1);
  return inst;
}

GadgetInstance build_circuit(int n, const std::vector<int>& negative_positions,
                             const std::vector<std::vector<int>>& lists) {
  if (n < 3) fail("BadArguments", "circuit needs n >= 3");
  for (int p : negative_positions)
    if (p < 0 || p >= n) fail("BadPosition", "edge position " + std::to_string(p));
  std::set<int> neg(negative_positions.begin(), negative_positions.end());
  GadgetInstance inst;
  std::vector<VertexId> ids;
  std::vector<std::tuple<VertexId, VertexId, int>> edges;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.emplace_back(ids[i], ids[(i + 1) % n], neg.count(i) ? -1 : 1);
  inst.embedding.graph = SignedGraph::build(ids, edges);
  inst.embedding.rot.resize(n);
  for (int i = 0; i < n; ++i)
    inst.embedding.rot[i] = {(i + 1) % n, (i + n - 1) % n};
  inst.embedding.outer_edge = {1, 0};
  if (static_cast<int>(lists.size()) != n) fail("SizeMismatch", "need one list per vertex");
  inst.lists.lists = lists;
  for (const auto& id : ids) inst.roles[id] = "circuit";
  return inst;
}

// ---------------------------------------------------------------------------
// verification

namespace {

// k distinct colors from {-7..7}
std::vector<int> random_list(int k, std::mt19937_64& rng) {
  std::vector<int> u;
  for (int c = -7; c <= 7; ++c) u.push_back(c);
  std::shuffle(u.begin(), u.end(), rng);
  u.resize(k);
  std::sort(u.begin(), u.end());
  return u;
}

ListAssignment random_lists_for(int n, int k, std::mt19937_64& rng) {
  ListAssignment L;
  L.lists.resize(n);
  for (int v = 0; v < n; ++v) L.lists[v] = random_list(k, rng);
  return L;
}

// unsigned even 4-circuit M-N-Q-P from 2-color residual lists, brute force
bool color_even_cycle4(const std::array<std::vector<int>, 4>& lists,
                       std::array<int, 4>* out) {
  for (int a : lists[0])
    for (int b : lists[1])
      for (int c : lists[2])
        for (int d : lists[3])
          if (a != b && b != c && c != d && d != a) {
            if (out) *out = {a, b, c, d};
            return true;
          }
  return false;
}

// proof-order extension of unsigned H from arbitrary boundary colors
bool extend_H_unsigned(const std::map<std::string, std::vector<int>>& L, int cx, int cy, int cz) {
  auto pick = [](std::vector<int> lst, std::vector<int> forbidden) -> std::optional<int> {
    std::sort(lst.begin(), lst.end());
    for (int c : lst)
      if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end()) return c;
    return std::nullopt;
  };
  std::vector<int> dAvail;
  for (int c : L.at("D"))
    if (c != cx && c != cy) dAvail.push_back(c);
  if (dAvail.size() < 2) return false;
  std::sort(dAvail.begin(), dAvail.end());
  int alpha = dAvail[0], beta = dAvail[1];
  auto cC = pick(L.at("C"), {alpha, beta, cx});
  if (!cC) return false;
  auto cA = pick(L.at("A"), {cx, cy, *cC});
  if (!cA) return false;
  auto cB = pick(L.at("B"), {cy, *cA, *cC});
  if (!cB) return false;
  int cD = alpha == *cB ? beta : alpha;
  // circuit [M N Q P]: M-N, N-Q, Q-P, P-M
  std::array<std::vector<int>, 4> cyc;
  for (int c : L.at("M"))
    if (c != cy && c != cD) cyc[0].push_back(c);
  for (int c : L.at("N"))
    if (c != cx && c != cD) cyc[1].push_back(c);
  for (int c : L.at("Q"))
    if (c != cx && c != cz) cyc[2].push_back(c);
  for (int c : L.at("P"))
    if (c != cy && c != cz) cyc[3].push_back(c);
  return color_even_cycle4(cyc, nullptr);
}

}  // namespace

VerifyReport verify_theorem4(std::uint64_t seed, int trials) {
  VerifyReport report;
  GadgetInstance g3 = build_G3();
  const SignedGraph& g = g3.graph();

  // (a) all proper colorings of G3 from {1,2,3,4}: exactly 24, each with
  // exactly one special face colored (solid,hollow,initial) = (1,2,3)
  {
    VerifyStage st;
    st.name = "a.g3_colorings";
    st.paper_claim = "Theorem 4: G3 has 24 proper 4-colorings, each hitting exactly one special "
                     "face with the (1,2,3) pattern";
    auto specials = special_faces_G3(g3);
    std::int64_t count = 0;
    bool patternOk = true;
    enumerate_colorings(g, g3.lists, [&](const Coloring& c) {
      ++count;
      int hits = 0;
      for (const auto& [ini, sol, hol] : specials)
        if (c[sol] == 1 && c[hol] == 2 && c[ini] == 3) ++hits;
      if (hits != 1) patternOk = false;
      return true;
    });
    st.counts["colorings"] = count;
    st.counts["special_faces"] = static_cast<std::int64_t>(specials.size());
    st.pass = count == 24 && specials.size() == 24 && patternOk;
    report.stages.push_back(st);
  }

  // (b) signed H: boundary (1,2,3) admits no extension; the two branches of
  // the forced vertex D both die
  {
    VerifyStage st;
    st.name = "b.h_no_extension";
    st.paper_claim = "Theorem 4: signed H admits no extension of boundary colors (1,2,3)";
    GadgetInstance h = build_H();
    const SignedGraph& hg = h.graph();
    auto fix = [&](const std::string& v, int c) { h.lists.lists[hg.index(v)] = {c}; };
    fix("x", 1);
    fix("y", 2);
    fix("z", 3);
    st.counts["extensions"] = static_cast<std::int64_t>(count_colorings(hg, h.lists));
    ListAssignment d4 = h.lists;
    d4.lists[hg.index("D")] = {4};
    st.counts["extensions_D4"] = static_cast<std::int64_t>(count_colorings(hg, d4));
    ListAssignment d5 = h.lists;
    d5.lists[hg.index("D")] = {5};
    st.counts["extensions_D5"] = static_cast<std::int64_t>(count_colorings(hg, d5));
    // D's own residual list under the boundary colors
    std::vector<int> dAllowed;
    for (int c : h_list("D"))
      if (c != 1 * hg.sign(hg.index("D"), hg.index("x")) &&
          c != 2 * hg.sign(hg.index("D"), hg.index("y")))
        dAllowed.push_back(c);
    st.pass = st.counts["extensions"] == 0 && st.counts["extensions_D4"] == 0 &&
              st.counts["extensions_D5"] == 0 && dAllowed == std::vector<int>{4, 5};
    report.stages.push_back(st);
  }

  // (c) unsigned sanity: greedy on G3 and the ordered extension in H succeed
  // on random 4-lists
  {
    VerifyStage st;
    st.name = "c.unsigned_sanity";
    st.paper_claim = "Theorem 4: the unsigned graph stays 4-choosable";
    std::mt19937_64 rng(seed);
    auto order = degeneracy_order(g);
    bool ok = order.degeneracy <= 3;
    int g3Trials = std::max(1, trials / 20);
    for (int i = 0; i < g3Trials && ok; ++i) {
      ListAssignment L = random_lists_for(g.n(), 4, rng);
      ok = greedy_by_degeneracy(g, L, order.order).sat;
    }
    st.counts["g3_trials"] = g3Trials;
    int hOk = 0;
    for (int i = 0; i < trials; ++i) {
      std::map<std::string, std::vector<int>> L;
      for (const char* v : kHInterior) L[v] = random_list(4, rng);
      // boundary colors: any pairwise-distinct triple
      std::vector<int> b = random_list(3, rng);
      if (extend_H_unsigned(L, b[0], b[1], b[2])) ++hOk;
    }
    st.counts["h_trials"] = trials;
    st.counts["h_extended"] = hOk;
    st.pass = ok && hOk == trials;
    report.stages.push_back(st);
  }

  report.pass = true;
  for (const auto& st : report.stages) report.pass = report.pass && st.pass;
  if (!report.pass) {
    for (const auto& st : report.stages)
      if (!st.pass) fail("VerificationFailed", "stage " + st.name + " refuted: " + st.paper_claim);
  }
  return report;
}

VerifyReport verify_theorem10(std::uint64_t seed, int trials) {
  VerifyReport report;
  GadgetInstance inst = build_theorem10_instance();
  const SignedGraph& g = inst.graph();
  auto idx = [&](const std::string& s) { return g.index(s); };

  // per-copy exhaustive cases
  {
    VerifyStage st;
    st.name = "cases";
    st.paper_claim =
        "Theorem 10: every boundary choice (a_p, b_q) kills copy T_{3p+q}, with B and D forced "
        "to 6";
    bool ok = true;
    std::int64_t totalExt = 0;
    #pragma omp parallel for reduction(&&:ok) reduction(+:totalExt) schedule(static)
    for (int t = 0; t < 9; ++t) {
      int p = t / 3, q = t % 3;
      int cA = p, cC = q + 3;
      std::vector<int> keep = {idx("A'"), idx("C'"), idx("B" + std::to_string(t)),
                               idx("D" + std::to_string(t)), idx("M" + std::to_string(t)),
                               idx("N" + std::to_string(t)), idx("P" + std::to_string(t)),
                               idx("Q" + std::to_string(t))};
      std::sort(keep.begin(), keep.end());
      SignedGraph copy = g.induced(keep);
      ListAssignment L;
      L.lists.resize(copy.n());
      for (int v = 0; v < copy.n(); ++v) {
        const VertexId& id = copy.id(v);
        if (id == "A'")
          L.lists[v] = {cA};
        else if (id == "C'")
          L.lists[v] = {cC};
        else
          L.lists[v] = inst.lists.lists[g.index(id)];
      }
      std::uint64_t ext = count_colorings(copy, L);
      totalExt += static_cast<std::int64_t>(ext);
      // B and D forced to 6 in every consistent partial assignment
      bool forced = true;
      for (const char* s : {"B", "D"})
        for (int c : inst.lists.lists[idx(s + std::to_string(t))]) {
          int su = g.sign(idx(s + std::to_string(t)), idx("A'"));
          int sv = g.sign(idx(s + std::to_string(t)), idx("C'"));
          bool allowed = c != su * cA && c != sv * cC;
          if (allowed && c != 6) forced = false;
          if (c == 6 && !allowed) forced = false;
        }
      ok = ok && ext == 0 && forced;
    }
    st.counts["cases"] = 9;
    st.counts["extensions_total"] = totalExt;
    st.pass = ok && totalExt == 0;
    report.stages.push_back(st);
  }

  // whole-graph unsat
  {
    VerifyStage st;
    st.name = "whole";
    st.paper_claim = "Theorem 10: the 56-vertex instance has no coloring from the lists";
    auto res = solve(g, inst.lists);
    st.counts["nodes"] = static_cast<std::int64_t>(res.nodes);
    st.pass = !res.sat;
    report.stages.push_back(st);
  }

  // unsigned sanity
  {
    VerifyStage st;
    st.name = "unsigned";
    st.paper_claim = "Theorem 10: the unsigned graph stays 3-choosable";
    std::mt19937_64 rng(seed);
    SignedGraph ug = g.unsigned_version();
    int okCount = 0;
    for (int trial = 0; trial < trials; ++trial) {
      ListAssignment L;
      L.lists.resize(g.n());
      for (int v = 0; v < g.n(); ++v) L.lists[v] = random_list(3, rng);
      Coloring c(g.n(), 0);
      c[idx("A'")] = L.lists[idx("A'")][0];
      c[idx("C'")] = L.lists[idx("C'")][0];
      bool all = true;
      for (int t = 0; t < 9 && all; ++t) {
        auto vid = [&](const char* s) { return idx(s + std::to_string(t)); };
        auto pick = [&](int v, std::vector<int> forbidden) -> std::optional<int> {
          for (int col : L.lists[v])
            if (std::find(forbidden.begin(), forbidden.end(), col) == forbidden.end()) return col;
          return std::nullopt;
        };
        auto cB = pick(vid("B"), {c[idx("A'")], c[idx("C'")]});
        auto cD = pick(vid("D"), {c[idx("A'")], c[idx("C'")]});
        if (!cB || !cD) {
          all = false;
          break;
        }
        c[vid("B")] = *cB;
        c[vid("D")] = *cD;
        // circuit [M N P Q]: M-N, N-P, P-Q, Q-M
        std::array<std::vector<int>, 4> cyc;
        for (int col : L.lists[vid("M")])
          if (col != c[idx("A'")]) cyc[0].push_back(col);
        for (int col : L.lists[vid("N")])
          if (col != *cB) cyc[1].push_back(col);
        for (int col : L.lists[vid("P")])
          if (col != c[idx("C'")]) cyc[2].push_back(col);
        for (int col : L.lists[vid("Q")])
          if (col != *cD) cyc[3].push_back(col);
        std::array<int, 4> got{};
        if (!color_even_cycle4(cyc, &got)) {
          all = false;
          break;
        }
        c[vid("M")] = got[0];
        c[vid("N")] = got[1];
        c[vid("P")] = got[2];
        c[vid("Q")] = got[3];
      }
      if (all && verify_coloring(ug, std::nullopt, c).valid) ++okCount;
    }
    st.counts["trials"] = trials;
    st.counts["extended"] = okCount;
    st.pass = okCount == trials;
    report.stages.push_back(st);
  }

  report.pass = true;
  for (const auto& st : report.stages) report.pass = report.pass && st.pass;
  if (!report.pass) {
    for (const auto& st : report.stages)
      if (!st.pass) fail("VerificationFailed", "stage " + st.name + " refuted: " + st.paper_claim);
  }
  return report;
}

}  // namespace sigcolor
