#include "rgc/staircase.hpp"

#include <bit>
#include <stdexcept>

namespace rgc {

StaircaseCode::StaircaseCode(InnerCode inner, int s)
    : inner_(std::move(inner)),
      s_(s),
      k_(s * inner_.dimension()),
      nc_((s + 1) * inner_.block_length()) {
  if (s < 1) throw std::invalid_argument("StaircaseCode: s must be >= 1");

  int kb = inner_.dimension();
  int nb = inner_.block_length();
  std::uint32_t mask = (std::uint32_t{1} << nb) - 1;
  rows_a_.reserve(k_);
  support_.reserve(k_);
  for (int block = 0; block < s_; ++block) {
    for (int t = 0; t < kb; ++t) {
      BitWord row(static_cast<std::size_t>(nc_));
      std::uint32_t b = inner_.generator_rows()[t];
      row.paste(static_cast<std::size_t>(block) * nb, BitWord::from_uint(b, nb));
      row.paste(static_cast<std::size_t>(block + 1) * nb, BitWord::from_uint(~b & mask, nb));
      if (row.popcount() != static_cast<std::size_t>(nb))
        throw std::logic_error("StaircaseCode: row weight != nb");
      std::vector<std::uint32_t> sup;
      sup.reserve(nb);
      for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(nc_); ++i) {
        if (row.get(i)) sup.push_back(i);
      }
      rows_a_.push_back(std::move(row));
      support_.push_back(std::move(sup));
    }
  }
}

const BitWord& StaircaseCode::row(int rho) const {
  if (rho < 1 || rho > k_) throw std::out_of_range("StaircaseCode::row: rho out of [1, k]");
  return rows_a_[static_cast<std::size_t>(rho) - 1];
}

const std::vector<std::uint32_t>& StaircaseCode::row_support(int rho) const {
  if (rho < 1 || rho > k_) throw std::out_of_range("StaircaseCode::row_support: rho out of [1, k]");
  return support_[static_cast<std::size_t>(rho) - 1];
}

BitWord StaircaseCode::encode(const BitWord& msg) const {
  if (msg.size() != static_cast<std::size_t>(k_))
    throw std::invalid_argument("StaircaseCode::encode: message length mismatch");
  BitWord cw(static_cast<std::size_t>(nc_));
  for (int r = 0; r < k_; ++r) {
    if (msg.get(r)) cw ^= rows_a_[r];
  }
  return cw;
}

BitWord StaircaseCode::decode(const BitWord& word) const {
  if (word.size() != static_cast<std::size_t>(nc_))
    throw std::invalid_argument("StaircaseCode::decode: word length mismatch");
  int kb = inner_.dimension();
  int nb = inner_.block_length();
  std::uint32_t mask = (std::uint32_t{1} << nb) - 1;

  BitWord msg(static_cast<std::size_t>(k_));
  std::uint32_t prev = 0;  // previous chunk, feeds the ~B band of the next block
  for (int block = 0; block < s_; ++block) {
    std::uint32_t y =
        static_cast<std::uint32_t>(word.slice(static_cast<std::size_t>(block) * nb, nb).to_uint());
    // chunk * ~B  ==  chunk * B  xor  parity(chunk) * all-ones
    std::uint32_t carry = inner_.encode_bits(prev);
    if (std::popcount(prev) & 1) carry ^= mask;
    std::uint32_t chunk = inner_.decode_bits(y ^ carry).message;
    msg.paste(static_cast<std::size_t>(block) * kb, BitWord::from_uint(chunk, kb));
    prev = chunk;
  }
  return msg;
}

}  // namespace rgc
