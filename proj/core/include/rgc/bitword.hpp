#ifndef RGC_BITWORD_HPP
#define RGC_BITWORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rgc {

// Fixed-length binary word. Bit 0 is the leftmost bit: it is the first
// character of the string form, the first bit on the wire, and the
// most significant digit when a word is read as a binary numeral.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t n) : size_(n), limbs_((n + 63) / 64, 0) {}

  static BitWord from_string(std::string_view s);
  // Low-order `n` bits of `value`; bit i of value becomes bit i of the word.
  static BitWord from_uint(std::uint64_t value, std::size_t n);
  static BitWord from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t n);
  static BitWord ones(std::size_t n);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (limbs_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      limbs_[i >> 6] |= mask;
    else
      limbs_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { limbs_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // Word value with bit i weighted 2^i. Requires size() <= 64.
  std::uint64_t to_uint() const;
  // Word read as a binary numeral: bit 0 is the most significant digit.
  std::uint64_t to_numeral() const;

  BitWord slice(std::size_t pos, std::size_t len) const;
  void paste(std::size_t pos, const BitWord& src);
  void append(const BitWord& other);

  BitWord& operator^=(const BitWord& other);
  friend BitWord operator^(BitWord lhs, const BitWord& rhs) { return lhs ^= rhs; }
  BitWord complemented() const;

  std::size_t popcount() const;
  friend std::size_t hamming_distance(const BitWord& a, const BitWord& b);

  bool operator==(const BitWord& other) const = default;

  std::string to_string() const;
  // Packed bytes, most significant bit first within each byte.
  std::vector<std::uint8_t> to_bytes() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> limbs_;

  void clear_padding();
};

std::size_t hamming_distance(const BitWord& a, const BitWord& b);

}  // namespace rgc

#endif
