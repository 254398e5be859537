#include "rgc/bitword.hpp"

#include <bit>
#include <stdexcept>

namespace rgc {

BitWord BitWord::from_string(std::string_view s) {
  BitWord w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w.set(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("BitWord::from_string: expected only '0'/'1'");
  }
  return w;
}

BitWord BitWord::from_uint(std::uint64_t value, std::size_t n) {
  if (n > 64) throw std::invalid_argument("BitWord::from_uint: n > 64");
  BitWord w(n);
  if (n > 0) {
    w.limbs_[0] = (n == 64) ? value : (value & ((std::uint64_t{1} << n) - 1));
  }
  return w;
}

BitWord BitWord::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t n) {
  if (bytes.size() * 8 < n) throw std::invalid_argument("BitWord::from_bytes: too few bytes");
  BitWord w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((bytes[i >> 3] >> (7 - (i & 7))) & 1u) w.set(i, true);
  }
  return w;
}

BitWord BitWord::ones(std::size_t n) {
  BitWord w(n);
  for (auto& limb : w.limbs_) limb = ~std::uint64_t{0};
  w.clear_padding();
  return w;
}

std::uint64_t BitWord::to_uint() const {
  if (size_ > 64) throw std::logic_error("BitWord::to_uint: word wider than 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::uint64_t BitWord::to_numeral() const {
  if (size_ > 64) throw std::logic_error("BitWord::to_numeral: word wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < size_; ++i) v = (v << 1) | std::uint64_t{get(i)};
  return v;
}

BitWord BitWord::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > size_) throw std::out_of_range("BitWord::slice: range past end");
  BitWord out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(pos + i)) out.set(i, true);
  }
  return out;
}

void BitWord::paste(std::size_t pos, const BitWord& src) {
  if (pos + src.size() > size_) throw std::out_of_range("BitWord::paste: range past end");
  for (std::size_t i = 0; i < src.size(); ++i) set(pos + i, src.get(i));
}

void BitWord::append(const BitWord& other) {
  std::size_t old = size_;
  size_ += other.size();
  limbs_.resize((size_ + 63) / 64, 0);
  for (std::size_t i = 0; i < other.size(); ++i) {
    if (other.get(i)) set(old + i, true);
  }
}

BitWord& BitWord::operator^=(const BitWord& other) {
  if (size_ != other.size_) throw std::invalid_argument("BitWord::operator^=: size mismatch");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

BitWord BitWord::complemented() const {
  BitWord out = *this;
  for (auto& limb : out.limbs_) limb = ~limb;
  out.clear_padding();
  return out;
}

std::size_t BitWord::popcount() const {
  std::size_t n = 0;
  for (auto limb : limbs_) n += static_cast<std::size_t>(std::popcount(limb));
  return n;
}

std::size_t hamming_distance(const BitWord& a, const BitWord& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("hamming_distance: size mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(a.limbs_[i] ^ b.limbs_[i]));
  }
  return n;
}

std::string BitWord::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::vector<std::uint8_t> BitWord::to_bytes() const {
  std::vector<std::uint8_t> bytes((size_ + 7) / 8, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) bytes[i >> 3] |= std::uint8_t(1u << (7 - (i & 7)));
  }
  return bytes;
}

void BitWord::clear_padding() {
  std::size_t used = size_ & 63;
  if (used != 0 && !limbs_.empty()) {
    limbs_.back() &= (std::uint64_t{1} << used) - 1;
  }
}

}  // namespace rgc
