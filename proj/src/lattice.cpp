#include "udtoda/lattice.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define UDTODA_X86 1
#else
#define UDTODA_X86 0
#endif

namespace udtoda::lattice {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if UDTODA_X86 && defined(__GNUC__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() { return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

void reflect_window_scalar(std::span<const std::uint8_t> eta, std::span<std::uint8_t> out) {
  std::int32_t s = 0;
  std::int32_t m = 0;
  std::int32_t ts_prev = 0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    s += 1 - 2 * static_cast<std::int32_t>(eta[i]);
    m = std::max(m, s);
    const std::int32_t ts = 2 * m - s;
    out[i] = static_cast<std::uint8_t>(ts_prev - ts == 1);
    ts_prev = ts;
  }
}

#if UDTODA_X86

namespace {

__attribute__((target("avx2"))) inline __m256i scan_add(__m256i x) {
  x = _mm256_add_epi32(x, _mm256_slli_si256(x, 4));
  x = _mm256_add_epi32(x, _mm256_slli_si256(x, 8));
  // Carry the low 128-bit half's total into the high half.
  __m256i t = _mm256_permutevar8x32_epi32(x, _mm256_set1_epi32(3));
  t = _mm256_blend_epi32(_mm256_setzero_si256(), t, 0xF0);
  return _mm256_add_epi32(x, t);
}

__attribute__((target("avx2"))) inline __m256i scan_max(__m256i x) {
  const __m256i lowest = _mm256_set1_epi32(INT_MIN);
  x = _mm256_max_epi32(x, _mm256_alignr_epi8(x, lowest, 12));
  x = _mm256_max_epi32(x, _mm256_alignr_epi8(x, lowest, 8));
  __m256i t = _mm256_permutevar8x32_epi32(x, _mm256_set1_epi32(3));
  t = _mm256_blend_epi32(lowest, t, 0xF0);
  return _mm256_max_epi32(x, t);
}

}  // namespace

__attribute__((target("avx2"))) void reflect_window_avx2(std::span<const std::uint8_t> eta,
                                                         std::span<std::uint8_t> out) {
  const std::size_t n = eta.size();
  const std::size_t blocks = n / 8;
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i rotate = _mm256_setr_epi32(7, 0, 1, 2, 3, 4, 5, 6);

  std::int32_t s_carry = 0;
  std::int32_t m_carry = 0;
  std::int32_t ts_carry = 0;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    const std::size_t i = blk * 8;
    const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(eta.data() + i));
    const __m256i occ = _mm256_cvtepu8_epi32(bytes);
    const __m256i step = _mm256_sub_epi32(one, _mm256_slli_epi32(occ, 1));

    const __m256i s = _mm256_add_epi32(scan_add(step), _mm256_set1_epi32(s_carry));
    const __m256i m = _mm256_max_epi32(scan_max(s), _mm256_set1_epi32(m_carry));
    const __m256i ts = _mm256_sub_epi32(_mm256_slli_epi32(m, 1), s);

    __m256i prev = _mm256_permutevar8x32_epi32(ts, rotate);
    prev = _mm256_blend_epi32(prev, _mm256_set1_epi32(ts_carry), 0x01);
    const __m256i hit = _mm256_cmpeq_epi32(_mm256_sub_epi32(prev, ts), one);
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
    for (int j = 0; j < 8; ++j) out[i + j] = static_cast<std::uint8_t>((bits >> j) & 1);

    s_carry = _mm256_extract_epi32(s, 7);
    m_carry = _mm256_extract_epi32(m, 7);
    ts_carry = _mm256_extract_epi32(ts, 7);
  }

  // Remainder, continuing the scalar recurrence from the carried state.
  for (std::size_t i = blocks * 8; i < n; ++i) {
    s_carry += 1 - 2 * static_cast<std::int32_t>(eta[i]);
    m_carry = std::max(m_carry, s_carry);
    const std::int32_t ts = 2 * m_carry - s_carry;
    out[i] = static_cast<std::uint8_t>(ts_carry - ts == 1);
    ts_carry = ts;
  }
}

#endif  // UDTODA_X86

void reflect_window(std::span<const std::uint8_t> eta, std::span<std::uint8_t> out, Isa isa) {
  if (out.size() < eta.size()) throw std::invalid_argument("reflect_window: output too small");
  switch (isa) {
    case Isa::kScalar:
      reflect_window_scalar(eta, out);
      return;
    case Isa::kAvx2:
#if UDTODA_X86
      if (!isa_available(Isa::kAvx2)) throw std::runtime_error("avx2 not supported on this CPU");
      reflect_window_avx2(eta, out);
      return;
#else
      throw std::runtime_error("avx2 kernel not built for this target");
#endif
  }
}

BbsState reflect_step(const BbsState& b, Isa isa) {
  if (b.empty()) return b;
  const auto& balls = b.balls();
  const std::int64_t lo = balls.front();
  // Every dropped ball lands within `count` sites of the last ball.
  const std::int64_t span = balls.back() - lo + 1 + static_cast<std::int64_t>(balls.size());
  if (span > kMaxWindow) throw std::length_error("reflect_step: configuration too wide");

  std::vector<std::uint8_t> eta(static_cast<std::size_t>(span), 0);
  for (const auto site : balls) eta[static_cast<std::size_t>(site - lo)] = 1;
  std::vector<std::uint8_t> out(eta.size());
  reflect_window(eta, out, isa);

  std::vector<std::int64_t> next;
  next.reserve(balls.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i]) next.push_back(lo + static_cast<std::int64_t>(i));
  }
  return BbsState(std::move(next));
}

}  // namespace udtoda::lattice
