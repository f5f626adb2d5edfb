#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "trisep/bitset.hpp"
#include "trisep/errors.hpp"

namespace trisep {

/// A trigraph: vertices 0..n-1 and a symmetric three-valued adjacency
/// function theta taking values -1 (strong antiedge), 0 (switchable pair)
/// and +1 (strong edge). A freshly constructed trigraph has every pair at -1.
///
/// Pairs with theta == 0 are "switchable"; u and v count as adjacent when
/// theta(uv) >= 0 and antiadjacent when theta(uv) <= 0.
class Trigraph {
 public:
  Trigraph() = default;
  explicit Trigraph(int n);

  int n() const { return n_; }
  VertexSet vertices() const { return vuniverse(n_); }

  int theta(int u, int v) const { return theta_[idx(u, v)]; }
  void set_theta(int u, int v, int value);

  /// Neighbors under theta >= 0 (semiadjacent counts as adjacent).
  VertexSet adj(int v) const { return adj_[v]; }
  VertexSet closed_adj(int v) const { return adj_[v] | vbit(v); }
  /// Strong neighbors only (theta == +1).
  VertexSet strong_adj(int v) const { return strong_[v]; }
  /// Switchable partners (theta == 0).
  VertexSet switch_adj(int v) const { return sw_[v]; }
  /// Antineighbors under theta <= 0.
  VertexSet antiadj(int v) const { return vertices() & ~(strong_[v] | vbit(v)); }

  bool adjacent(int u, int v) const { return theta(u, v) >= 0; }
  bool antiadjacent(int u, int v) const { return theta(u, v) <= 0; }

  /// Switchable pairs (u < v), in lexicographic order.
  std::vector<std::pair<int, int>> switchable_pairs() const;
  int switchable_pair_count() const;

  bool strongly_complete(VertexSet a, VertexSet b) const;
  bool strongly_anticomplete(VertexSet a, VertexSet b) const;

  std::uint64_t fingerprint() const;

  bool operator==(const Trigraph& other) const {
    return n_ == other.n_ && theta_ == other.theta_;
  }

 private:
  size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<std::int8_t> theta_;
  std::vector<VertexSet> adj_, strong_, sw_;
};

Trigraph complement(const Trigraph& t);

/// Induced subtrigraph on X plus the map from new indices to old ones.
struct InducedResult {
  Trigraph t;
  std::vector<int> old_of_new;
};
InducedResult induced(const Trigraph& t, VertexSet x);

/// All switchable pairs become strong edges.
Trigraph full_realization(const Trigraph& t);

/// Connected components of the graph of switchable pairs.
std::vector<VertexSet> switchable_components(const Trigraph& t);

/// Components of the full realization of T[x] (theta >= 0 connectivity).
std::vector<VertexSet> components(const Trigraph& t, VertexSet x);
bool is_connected(const Trigraph& t, VertexSet x);
/// X is anticonnected when the full realization of complement(T)[x] is connected.
bool is_anticonnected(const Trigraph& t, VertexSet x);

/// Enumerates all 2^{|sigma|} realizations; throws CapExceededError when
/// |sigma| exceeds the cap. The callback may return false to stop early.
void for_each_realization(const Trigraph& t, const std::function<bool(const Trigraph&)>& fn,
                          int sigma_cap = 20);

/// Small named fixtures.
Trigraph make_cycle(int n);
Trigraph make_path(int n);
Trigraph make_complete(int n);
Trigraph make_empty(int n);

}  // namespace trisep
