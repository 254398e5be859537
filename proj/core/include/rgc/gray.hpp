#ifndef RGC_GRAY_HPP
#define RGC_GRAY_HPP

#include <cstdint>

#include "rgc/bitword.hpp"

namespace rgc {

// Ruler sequence: the largest r such that 2^r divides 2j, i.e.
// 1 + (number of trailing zero bits of j). Defined for j >= 1.
int ruler(std::uint64_t j);

// min(ruler(j), k): the bit that flips between the j-th and (j+1)-th
// word of the k-bit reflected Gray code.
int ruler_capped(std::uint64_t j, int k);

// j-th word of the k-bit reflected Gray code, 1 <= j <= 2^k. The first
// word is all-zeros and word j+1 differs from word j exactly at bit
// index ruler_capped(j, k) - 1. Bit 0 is the fastest-flipping bit.
BitWord gray_word(std::uint64_t j, int k);

// Inverse of gray_word: the unique j in [2^k] mapping to g.
std::uint64_t gray_index(const BitWord& g);

}  // namespace rgc

#endif
