#pragma once

#include <functional>
#include <vector>

#include "trisep/trigraph.hpp"

namespace trisep {

/// Enumerates cliques of T under theta >= 0 adjacency. With maximal_only the
/// stream holds the inclusion-wise maximal cliques (Bron-Kerbosch); otherwise
/// every clique including the empty set and singletons. Deterministic order.
/// The callback may return false to stop. Throws when n exceeds the cap.
void for_each_clique(const Trigraph& t, bool maximal_only,
                     const std::function<bool(VertexSet)>& fn, int vertex_cap = 20);

std::vector<VertexSet> all_cliques(const Trigraph& t, int vertex_cap = 20);
std::vector<VertexSet> maximal_cliques(const Trigraph& t, int vertex_cap = 20);

/// Stable sets are cliques of the complement.
std::vector<VertexSet> all_stable_sets(const Trigraph& t, int vertex_cap = 20);
std::vector<VertexSet> maximal_stable_sets(const Trigraph& t, int vertex_cap = 20);

bool is_clique(const Trigraph& t, VertexSet s);
bool is_stable_set(const Trigraph& t, VertexSet s);
bool is_strong_clique(const Trigraph& t, VertexSet s);
bool is_strong_stable_set(const Trigraph& t, VertexSet s);

}  // namespace trisep
