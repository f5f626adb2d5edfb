#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisep/trigraph.hpp"

namespace trisep {

struct HoleWitness {
  std::vector<int> cycle;  // vertex sequence h_1..h_k
  bool antihole = false;   // witness lives in the complement
};

/// Searches T for an odd hole (length >= 5): a cyclic vertex sequence with
/// consecutive pairs adjacent and all other pairs antiadjacent. Switchable
/// pairs satisfy both, so no realization enumeration is needed.
std::optional<std::vector<int>> find_odd_hole(const Trigraph& t, int vertex_cap = 14);

struct BergeResult {
  bool berge = true;
  std::optional<HoleWitness> witness;
};

/// Berge = no odd hole in T and none in complement(T).
BergeResult is_berge(const Trigraph& t, int vertex_cap = 14);

struct ClassFResult {
  bool in_class = true;
  std::string violation;  // empty when in_class
};

/// Membership in the working class: Berge, switchable components with at
/// most two edges, and the completeness alternative for vertices of
/// switchable degree two.
ClassFResult is_in_class_f(const Trigraph& t, int berge_cap = 14);

}  // namespace trisep
