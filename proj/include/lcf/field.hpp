#pragma once

#include <cstdint>

namespace lcf {

// Arithmetic is done in GF(p) for a fixed 62-bit prime. Rank of an
// integer matrix over Q equals its rank mod p for all but finitely
// many p, so evaluating the generic rigidity matrix at uniform random
// field points gives the generic rank except with probability at most
// deg/p per trial (Schwartz-Zippel); no floating-point tolerances.
inline constexpr std::uint64_t kFieldPrime = 4611686018427387847ULL;  // 2^62 - 57
inline constexpr int kFieldBits = 62;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % kFieldPrime);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kFieldPrime) s -= kFieldPrime;
  return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kFieldPrime - b;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return acc;
}

inline std::uint64_t inv_mod(std::uint64_t a) {
  return pow_mod(a, kFieldPrime - 2);
}

}  // namespace lcf
