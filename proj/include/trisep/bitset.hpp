#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace trisep {

/// Vertex subsets are 64-bit masks; every trigraph in this library has at
/// most kMaxVertices vertices (enough for the desk-scale searches we run).
using VertexSet = std::uint64_t;
constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr bool vhas(VertexSet s, int v) { return (s >> v) & 1; }
constexpr int vcount(VertexSet s) { return std::popcount(s); }
constexpr VertexSet vuniverse(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
constexpr int vfirst(VertexSet s) { return std::countr_zero(s); }  // s != 0

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

inline std::vector<int> to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(vcount(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet from_vertices(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

inline std::string set_to_string(VertexSet s) {
  std::string out;
  for_each_vertex(s, [&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

}  // namespace trisep
