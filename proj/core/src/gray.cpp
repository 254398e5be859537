#include "rgc/gray.hpp"

#include <bit>
#include <stdexcept>

namespace rgc {

int ruler(std::uint64_t j) {
  if (j == 0) throw std::out_of_range("ruler: j must be >= 1");
  return 1 + std::countr_zero(j);
}

int ruler_capped(std::uint64_t j, int k) {
  if (k < 1) throw std::out_of_range("ruler_capped: k must be >= 1");
  int r = ruler(j);
  return r < k ? r : k;
}

BitWord gray_word(std::uint64_t j, int k) {
  if (k < 1 || k > 63) throw std::out_of_range("gray_word: k must be in [1, 63]");
  if (j < 1 || j > (std::uint64_t{1} << k)) throw std::out_of_range("gray_word: j out of [1, 2^k]");
  std::uint64_t b = j - 1;
  return BitWord::from_uint(b ^ (b >> 1), static_cast<std::size_t>(k));
}

std::uint64_t gray_index(const BitWord& g) {
  std::size_t k = g.size();
  if (k < 1 || k > 63) throw std::out_of_range("gray_index: word length must be in [1, 63]");
  // b_i = g_i xor g_{i+1} xor ... xor g_{k-1}
  std::uint64_t b = 0;
  bool acc = false;
  for (std::size_t i = k; i-- > 0;) {
    acc ^= g.get(i);
    if (acc) b |= std::uint64_t{1} << i;
  }
  return b + 1;
}

}  // namespace rgc
