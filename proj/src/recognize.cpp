#include "trisep/recognize.hpp"

namespace trisep {

namespace {

// DFS over canonical induced cyclic sequences: the start vertex h_1 is the
// smallest in the hole; every appended vertex is adjacent to its predecessor
// and antiadjacent to all earlier vertices except h_1. The constraint
// against h_1 is deferred: an interior vertex must be antiadjacent to h_1
// (checked once its successor exists), while the closing vertex must be
// adjacent to h_1.
struct HoleSearch {
  const Trigraph& t;
  std::vector<int> seq;
  std::optional<std::vector<int>> found;

  explicit HoleSearch(const Trigraph& tg) : t(tg) {}

  // forbidden: vertices strongly adjacent to some seq[1..len-2].
  bool extend(VertexSet used, VertexSet forbidden) {
    const int h1 = seq.front();
    const int last = seq.back();
    const size_t len = seq.size();
    if (len >= 4 && !t.antiadjacent(seq[len - 2], h1)) return true;
    if (len >= 5 && (len & 1) && t.adjacent(last, h1)) {
      found = seq;
      return false;
    }
    if (len >= static_cast<size_t>(t.n())) return true;
    VertexSet candidates = t.adj(last) & ~used & ~forbidden & ~(vuniverse(h1 + 1));
    VertexSet next_forbidden = forbidden | (len >= 2 ? t.strong_adj(last) : 0);
    bool keep_going = true;
    for_each_vertex(candidates, [&](int v) {
      if (!keep_going) return;
      seq.push_back(v);
      keep_going = extend(used | vbit(v), next_forbidden);
      seq.pop_back();
    });
    return keep_going;
  }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Trigraph& t, int vertex_cap) {
  if (t.n() > vertex_cap)
    throw CapExceededError("find_odd_hole: n=" + std::to_string(t.n()) + " exceeds cap " +
                           std::to_string(vertex_cap));
  if (t.n() < 5) return std::nullopt;
  HoleSearch search(t);
  for (int start = 0; start + 5 <= t.n(); ++start) {
    search.seq.assign(1, start);
    if (!search.extend(vbit(start), 0)) return search.found;
  }
  return std::nullopt;
}

BergeResult is_berge(const Trigraph& t, int vertex_cap) {
  BergeResult r;
  if (auto hole = find_odd_hole(t, vertex_cap)) {
    r.berge = false;
    r.witness = HoleWitness{*hole, false};
    return r;
  }
  if (auto antihole = find_odd_hole(complement(t), vertex_cap)) {
    r.berge = false;
    r.witness = HoleWitness{*antihole, true};
  }
  return r;
}

ClassFResult is_in_class_f(const Trigraph& t, int berge_cap) {
  ClassFResult r;
  auto fail = [&](std::string why) {
    r.in_class = false;
    r.violation = std::move(why);
    return r;
  };

  for (VertexSet comp : switchable_components(t)) {
    int edges = 0;
    for_each_vertex(comp, [&](int v) { edges += vcount(t.switch_adj(v)); });
    edges /= 2;
    if (edges > 2)
      return fail("switchable component {" + set_to_string(comp) + "} has " +
                  std::to_string(edges) + " edges");
  }
  for (int v = 0; v < t.n(); ++v) {
    VertexSet nb = t.switch_adj(v);
    if (vcount(nb) != 2) continue;
    int x = vfirst(nb);
    int y = vfirst(nb & (nb - 1));
    VertexSet rest = t.vertices() & ~(vbit(v) | vbit(x) | vbit(y));
    bool complete_side = t.theta(x, y) == 1 && t.strongly_complete(vbit(v), rest);
    bool anticomplete_side = t.theta(x, y) == -1 && t.strongly_anticomplete(vbit(v), rest);
    if (!complete_side && !anticomplete_side)
      return fail("switchable-degree-2 vertex " + std::to_string(v) +
                  " satisfies neither completeness alternative");
  }
  auto berge = is_berge(t, berge_cap);
  if (!berge.berge) {
    const auto& w = *berge.witness;
    std::string cyc;
    for (int v : w.cycle) cyc += std::to_string(v) + " ";
    return fail(std::string("not Berge: odd ") + (w.antihole ? "antihole" : "hole") + " [" + cyc +
                "]");
  }
  return r;
}

}  // namespace trisep
