#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trisep/trigraph.hpp"

namespace trisep {

using Weight = std::uint64_t;

/// Per-vertex weight triple: real weight plus extra-complete and
/// extra-anticomplete weight. Switchable pairs carry the two extra weights.
struct VertexWeight {
  Weight real = 0, extra_c = 0, extra_ac = 0;
};
struct PairWeight {
  Weight extra_c = 0, extra_ac = 0;
};

struct WeightTriple {
  Weight real = 0, extra_c = 0, extra_ac = 0;
  Weight total() const { return real + extra_c + extra_ac; }
};

class WeightedTrigraph {
 public:
  WeightedTrigraph() = default;
  explicit WeightedTrigraph(Trigraph t) : t_(std::move(t)), vw_(t_.n()) {}

  const Trigraph& trigraph() const { return t_; }
  int n() const { return t_.n(); }

  VertexWeight& vertex_weight(int v) { return vw_[v]; }
  const VertexWeight& vertex_weight(int v) const { return vw_[v]; }

  /// Pair weights are meaningful only on switchable pairs.
  void set_pair_weight(int u, int v, PairWeight w);
  PairWeight pair_weight(int u, int v) const;
  const std::map<std::pair<int, int>, PairWeight>& pair_weights() const { return pw_; }

  Weight real_weight(VertexSet u) const;
  /// Extra weights of U count pair weights with both endpoints in U.
  Weight extra_c_weight(VertexSet u) const;
  Weight extra_ac_weight(VertexSet u) const;
  WeightTriple weight(VertexSet u) const;
  Weight total_weight() const { return weight(t_.vertices()).total(); }

  /// Crossing weight: switchable pairs with one endpoint in A, one in B.
  PairWeight crossing_weight(VertexSet a, VertexSet b) const;

  /// Pair weights sit on switchable pairs and nothing else.
  void validate() const;

 private:
  Trigraph t_;
  std::vector<VertexWeight> vw_;
  std::map<std::pair<int, int>, PairWeight> pw_;
};

WeightedTrigraph uniform_unit_weights(const Trigraph& t);

struct BalanceResult {
  bool balanced = true;
  std::string violation;
};

/// Balanced: every real vertex weight and every extra weight is at most a
/// 1/55 fraction of the total, and all extra weight together at most 7/55.
/// Comparisons are exact integer cross-multiplications.
BalanceResult is_balanced_weight(const WeightedTrigraph& wt);

bool is_virgin(const WeightedTrigraph& wt);

/// Partition map certifying that a weighted trigraph models an original
/// (T0, w0):每 vertex owns three disjoint vertex teams of T0 and every
/// switchable pair two.
struct VertexTeams {
  VertexSet real = 0, extra_c = 0, extra_ac = 0;
};
struct PairTeams {
  VertexSet extra_c = 0, extra_ac = 0;
};

struct PartitionMap {
  int n0 = 0;  // |V(T0)|
  std::vector<VertexTeams> vertex_teams;
  std::map<std::pair<int, int>, PairTeams> pair_teams;

  VertexSet real_team(VertexSet u) const;
  VertexSet extra_c_team(VertexSet u) const;   // vertices of U plus pairs inside U
  VertexSet extra_ac_team(VertexSet u) const;
  /// Teams of switchable pairs with one endpoint in A and one in B.
  PairTeams crossing_teams(VertexSet a, VertexSet b) const;
};

PartitionMap identity_partition_map(const Trigraph& t0);

struct ModelCheckResult {
  bool ok = true;
  std::string violation;
};

/// The four model conditions: partition, weight, strong adjacency, and the
/// extra-team completeness condition. w0 must be virgin.
ModelCheckResult verify_model(const Trigraph& t0, const WeightedTrigraph& w0,
                              const WeightedTrigraph& wt, const PartitionMap& beta);

}  // namespace trisep
