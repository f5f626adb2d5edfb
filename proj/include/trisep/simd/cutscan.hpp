#pragma once

#include <cstddef>
#include <cstdint>

namespace trisep::simd {

// The hot inner loop of separator verification: given the clique sides
// B[0..count) of a cut family, find the first index i such that
//   (k & ~B[i]) == 0  &&  (s & B[i]) == 0
// i.e. the cut puts the whole clique k on the clique side and none of the
// stable set s there. Returns -1 when no cut separates the pair.
//
// The scalar kernel is the reference; the AVX2/NEON variants must return
// bit-identical results (first matching index) and are equivalence-tested.

std::ptrdiff_t find_separating_cut_scalar(const std::uint64_t* cliques_sides,
                                          std::size_t count, std::uint64_t k,
                                          std::uint64_t s);

std::ptrdiff_t find_separating_cut_avx2(const std::uint64_t* cliques_sides,
                                        std::size_t count, std::uint64_t k,
                                        std::uint64_t s);

std::ptrdiff_t find_separating_cut_neon(const std::uint64_t* cliques_sides,
                                        std::size_t count, std::uint64_t k,
                                        std::uint64_t s);

/// Dispatched entry point; picks the widest kernel the CPU supports.
std::ptrdiff_t find_separating_cut(const std::uint64_t* cliques_sides,
                                   std::size_t count, std::uint64_t k,
                                   std::uint64_t s);

enum class Backend { Scalar, Avx2, Neon };
Backend active_backend();
const char* backend_name(Backend b);
/// Test hook: force a specific backend (throws if unsupported on this CPU).
void force_backend(Backend b);
bool backend_supported(Backend b);

}  // namespace trisep::simd
