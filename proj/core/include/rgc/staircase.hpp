#ifndef RGC_STAIRCASE_HPP
#define RGC_STAIRCASE_HPP

#include <cstdint>
#include <vector>

#include "rgc/bitword.hpp"
#include "rgc/inner_code.hpp"

namespace rgc {

// Code generated by stacking the inner generator B and its bitwise
// complement in a banded block matrix:
//
//     A = [ B  ~B            ]
//         [     B  ~B        ]
//         [         ...  ... ]
//         [             B  ~B ]
//
// with s block-rows, so A is (s*kb) x ((s+1)*nb). Every row of A has
// Hamming weight exactly nb. Decoding runs block by block: decode block
// i, subtract its ~B contribution from block i+1, continue. The final
// block is pure redundancy of the last chunk and never influences the
// returned message.
class StaircaseCode {
 public:
  StaircaseCode(InnerCode inner, int s);

  const InnerCode& inner() const { return inner_; }
  int block_rows() const { return s_; }
  int rows() const { return k_; }                 // message length
  int codeword_length() const { return nc_; }     // (s+1)*nb

  // Row of A, 1-based to match the ruler sequence range [1, k].
  const BitWord& row(int rho) const;
  // Positions where row rho has a 1, ascending. Always exactly nb of them.
  const std::vector<std::uint32_t>& row_support(int rho) const;

  BitWord encode(const BitWord& msg) const;
  BitWord decode(const BitWord& word) const;

 private:
  InnerCode inner_;
  int s_;
  int k_;
  int nc_;
  std::vector<BitWord> rows_a_;
  std::vector<std::vector<std::uint32_t>> support_;
};

}  // namespace rgc

#endif
