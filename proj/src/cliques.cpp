#include "trisep/cliques.hpp"

namespace trisep {

namespace {

bool enumerate_all(const Trigraph& t, VertexSet current, VertexSet candidates,
                   const std::function<bool(VertexSet)>& fn) {
  VertexSet rest = candidates;
  bool keep = true;
  for_each_vertex(rest, [&](int v) {
    if (!keep) return;
    VertexSet next = current | vbit(v);
    if (!fn(next)) {
      keep = false;
      return;
    }
    // only vertices above v, to emit each clique once
    VertexSet above = ~vuniverse(v + 1);
    keep = enumerate_all(t, next, candidates & t.adj(v) & above, fn);
  });
  return keep;
}

// Bron-Kerbosch with pivoting; deterministic (pivot = max |P & adj|, lowest
// index on ties; candidates visited in ascending order).
bool bron_kerbosch(const Trigraph& t, VertexSet r, VertexSet p, VertexSet x,
                   const std::function<bool(VertexSet)>& fn) {
  if (p == 0 && x == 0) return fn(r);
  int pivot = -1, best = -1;
  for_each_vertex(p | x, [&](int u) {
    int deg = vcount(p & t.adj(u));
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  });
  VertexSet ext = p & ~t.adj(pivot);
  bool keep = true;
  for_each_vertex(ext, [&](int v) {
    if (!keep) return;
    keep = bron_kerbosch(t, r | vbit(v), p & t.adj(v), x & t.adj(v), fn);
    p &= ~vbit(v);
    x |= vbit(v);
  });
  return keep;
}

}  // namespace

void for_each_clique(const Trigraph& t, bool maximal_only,
                     const std::function<bool(VertexSet)>& fn, int vertex_cap) {
  if (t.n() > vertex_cap)
    throw CapExceededError("for_each_clique: n=" + std::to_string(t.n()) + " exceeds cap " +
                           std::to_string(vertex_cap));
  if (maximal_only) {
    if (t.n() == 0) {
      fn(0);
      return;
    }
    bron_kerbosch(t, 0, t.vertices(), 0, fn);
  } else {
    if (!fn(0)) return;
    enumerate_all(t, 0, t.vertices(), fn);
  }
}

namespace {
std::vector<VertexSet> collect(const Trigraph& t, bool maximal, int cap) {
  std::vector<VertexSet> out;
  for_each_clique(
      t, maximal,
      [&](VertexSet s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}
}  // namespace

std::vector<VertexSet> all_cliques(const Trigraph& t, int cap) { return collect(t, false, cap); }
std::vector<VertexSet> maximal_cliques(const Trigraph& t, int cap) {
  return collect(t, true, cap);
}
std::vector<VertexSet> all_stable_sets(const Trigraph& t, int cap) {
  return collect(complement(t), false, cap);
}
std::vector<VertexSet> maximal_stable_sets(const Trigraph& t, int cap) {
  return collect(complement(t), true, cap);
}

bool is_clique(const Trigraph& t, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & ~t.closed_adj(v)) != 0) ok = false;
  });
  return ok;
}

bool is_stable_set(const Trigraph& t, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & t.strong_adj(v)) != 0) ok = false;
  });
  return ok;
}

bool is_strong_clique(const Trigraph& t, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & ~(t.strong_adj(v) | vbit(v))) != 0) ok = false;
  });
  return ok;
}

bool is_strong_stable_set(const Trigraph& t, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & t.adj(v)) != 0) ok = false;
  });
  return ok;
}

}  // namespace trisep
