#include "trisep/trigraph.hpp"

#include <string>

namespace trisep {

Trigraph::Trigraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("trigraph size out of range: " + std::to_string(n));
  theta_.assign(static_cast<size_t>(n) * n, -1);
  adj_.assign(n, 0);
  strong_.assign(n, 0);
  sw_.assign(n, 0);
  for (int v = 0; v < n; ++v) theta_[idx(v, v)] = 0;
}

void Trigraph::set_theta(int u, int v, int value) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw PreconditionError("set_theta: bad pair");
  if (value < -1 || value > 1) throw PreconditionError("set_theta: bad value");
  theta_[idx(u, v)] = static_cast<std::int8_t>(value);
  theta_[idx(v, u)] = static_cast<std::int8_t>(value);
  auto fix = [&](int a, int b) {
    VertexSet m = vbit(b);
    adj_[a] &= ~m;
    strong_[a] &= ~m;
    sw_[a] &= ~m;
    if (value >= 0) adj_[a] |= m;
    if (value == 1) strong_[a] |= m;
    if (value == 0) sw_[a] |= m;
  };
  fix(u, v);
  fix(v, u);
}

std::vector<std::pair<int, int>> Trigraph::switchable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (theta(u, v) == 0) out.emplace_back(u, v);
  return out;
}

int Trigraph::switchable_pair_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += vcount(sw_[u]);
  return c / 2;
}

bool Trigraph::strongly_complete(VertexSet a, VertexSet b) const {
  if (a & b) return false;
  bool ok = true;
  for_each_vertex(a, [&](int v) {
    if ((b & ~strong_[v]) != 0) ok = false;
  });
  return ok;
}

bool Trigraph::strongly_anticomplete(VertexSet a, VertexSet b) const {
  if (a & b) return false;
  bool ok = true;
  for_each_vertex(a, [&](int v) {
    if ((b & (adj_[v] | vbit(v))) != 0) ok = false;
  });
  return ok;
}

std::uint64_t Trigraph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) mix(static_cast<std::uint64_t>(theta(u, v) + 2));
  return h;
}

Trigraph complement(const Trigraph& t) {
  Trigraph out(t.n());
  for (int u = 0; u < t.n(); ++u)
    for (int v = u + 1; v < t.n(); ++v) out.set_theta(u, v, -t.theta(u, v));
  return out;
}

InducedResult induced(const Trigraph& t, VertexSet x) {
  if ((x & ~t.vertices()) != 0) throw PreconditionError("induced: subset out of range");
  InducedResult r;
  r.old_of_new = to_vertices(x);
  r.t = Trigraph(static_cast<int>(r.old_of_new.size()));
  for (size_t i = 0; i < r.old_of_new.size(); ++i)
    for (size_t j = i + 1; j < r.old_of_new.size(); ++j)
      r.t.set_theta(static_cast<int>(i), static_cast<int>(j),
                    t.theta(r.old_of_new[i], r.old_of_new[j]));
  return r;
}

Trigraph full_realization(const Trigraph& t) {
  Trigraph out = t;
  for (auto [u, v] : t.switchable_pairs()) out.set_theta(u, v, 1);
  return out;
}

namespace {

std::vector<VertexSet> mask_components(VertexSet x, const std::function<VertexSet(int)>& nbrs) {
  std::vector<VertexSet> out;
  VertexSet left = x;
  while (left) {
    int s = vfirst(left);
    VertexSet comp = vbit(s), frontier = vbit(s);
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= nbrs(v) & x & ~comp; });
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> switchable_components(const Trigraph& t) {
  return mask_components(t.vertices(), [&](int v) { return t.switch_adj(v); });
}

std::vector<VertexSet> components(const Trigraph& t, VertexSet x) {
  return mask_components(x, [&](int v) { return t.adj(v); });
}

bool is_connected(const Trigraph& t, VertexSet x) {
  return components(t, x).size() <= 1;
}

bool is_anticonnected(const Trigraph& t, VertexSet x) {
  return mask_components(x, [&](int v) { return t.antiadj(v); }).size() <= 1;
}

void for_each_realization(const Trigraph& t, const std::function<bool(const Trigraph&)>& fn,
                          int sigma_cap) {
  auto pairs = t.switchable_pairs();
  if (static_cast<int>(pairs.size()) > sigma_cap)
    throw CapExceededError("for_each_realization: " + std::to_string(pairs.size()) +
                           " switchable pairs exceed cap " + std::to_string(sigma_cap));
  std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    Trigraph r = t;
    for (size_t i = 0; i < pairs.size(); ++i)
      r.set_theta(pairs[i].first, pairs[i].second, ((m >> i) & 1) ? 1 : -1);
    if (!fn(r)) return;
  }
}

Trigraph make_cycle(int n) {
  Trigraph t(n);
  for (int i = 0; i < n; ++i) t.set_theta(i, (i + 1) % n, 1);
  return t;
}

Trigraph make_path(int n) {
  Trigraph t(n);
  for (int i = 0; i + 1 < n; ++i) t.set_theta(i, i + 1, 1);
  return t;
}

Trigraph make_complete(int n) {
  Trigraph t(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) t.set_theta(u, v, 1);
  return t;
}

Trigraph make_empty(int n) { return Trigraph(n); }

}  // namespace trisep
