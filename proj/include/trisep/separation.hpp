#pragma once

#include <optional>
#include <vector>

#include "trisep/cliques.hpp"
#include "trisep/trigraph.hpp"

namespace trisep {

/// A cut is a bipartition of the host's vertices; we store the clique side,
/// the stable side is its complement within the host universe.
struct Cut {
  VertexSet clique_side = 0;
};

struct CSSeparator {
  int n = 0;
  std::uint64_t host_fingerprint = 0;
  std::vector<Cut> cuts;

  size_t size() const { return cuts.size(); }
};

CSSeparator make_separator(const Trigraph& host);

inline VertexSet stable_side(const Cut& c, int n) { return vuniverse(n) & ~c.clique_side; }

/// K goes entirely to the clique side, S entirely to the stable side.
inline bool separates(const Cut& c, VertexSet k, VertexSet s) {
  return (k & ~c.clique_side) == 0 && (s & c.clique_side) == 0;
}

/// Maps every cut (B,W) to (W,B); a separator of T becomes one of complement(T).
CSSeparator flip(const CSSeparator& f, const Trigraph& new_host);

/// The trivial family of all 2^n cuts.
CSSeparator all_cuts(const Trigraph& host);

struct VerifyResult {
  bool ok = true;
  VertexSet clique = 0, stable = 0;  // counterexample when !ok
};

struct VerifyOptions {
  int clique_cap = 20;
  bool check_host = true;  // compare n/fingerprint before verifying
};

/// Exhaustive check that every disjoint (clique, stable set) pair of the host
/// is separated by some cut. On failure reports the counterexample minimizing
/// |K|+|S|, then (K,S) lexicographically by mask value.
VerifyResult verify_cs_separator(const Trigraph& t, const CSSeparator& f,
                                 const VerifyOptions& opts = {});

/// Given a family separating all disjoint pairs of inclusion-wise maximal
/// cliques and maximal stable sets of a class member, appends the 2n
/// neighborhood cuts and the four switchable-pair cuts that make it a full
/// CS-separator. Adds exactly 2n + 4|sigma(T)| cuts.
CSSeparator extend_maximal_separator(const Trigraph& t, const CSSeparator& f);

}  // namespace trisep
