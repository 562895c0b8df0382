#pragma once

// Dense box-ball kernels. One BBS step on a window of sites is a prefix sum
// (the lattice path S) followed by a prefix max (M) and a pointwise test on
// the increments of 2M - S. The scalar kernel is the reference; the AVX2
// kernel computes the same scans eight sites at a time and is selected at
// runtime when the CPU supports it.

#include <cstdint>
#include <span>
#include <string_view>

#include "udtoda/state.hpp"

namespace udtoda::lattice {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
/// Best kernel available on this CPU.
Isa detect_isa();

/// Given occupancy eta[0..n) of a window whose left neighbour is at the
/// past maximum of the path (e.g. the site before the first ball), writes
/// the occupancy after one step into out[0..n). Sites to the right of the
/// window are assumed empty; the window must be long enough to hold every
/// dropped ball.
void reflect_window(std::span<const std::uint8_t> eta, std::span<std::uint8_t> out, Isa isa);

void reflect_window_scalar(std::span<const std::uint8_t> eta, std::span<std::uint8_t> out);
#if defined(__x86_64__) || defined(_M_X64)
void reflect_window_avx2(std::span<const std::uint8_t> eta, std::span<std::uint8_t> out);
#endif

/// Largest window reflect_step will materialize.
inline constexpr std::int64_t kMaxWindow = std::int64_t{1} << 28;

/// One BBS step through the dense kernel. Throws std::length_error when the
/// ball configuration spans more than kMaxWindow sites.
BbsState reflect_step(const BbsState& b, Isa isa);
inline BbsState reflect_step(const BbsState& b) { return reflect_step(b, detect_isa()); }

}  // namespace udtoda::lattice
