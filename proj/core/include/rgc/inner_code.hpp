#ifndef RGC_INNER_CODE_HPP
#define RGC_INNER_CODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rgc/bitword.hpp"

namespace rgc {

struct InnerDecodeResult {
  std::uint32_t message;
  int distance;  // Hamming distance from the received word to the chosen codeword
};

// Small binary linear code [nb, kb] given by a full-row-rank generator
// matrix. Words and messages are packed in uint32 with bit t holding
// position t. Decoding is exact nearest-codeword; ties go to the lowest
// message value, where a message bit string b_0 b_1 ... is valued as the
// binary numeral b_0*2^(kb-1) + ... + b_{kb-1} (same reading order used
// when indices are serialized elsewhere in the library).
class InnerCode {
 public:
  // Deterministically samples full-rank generator matrices from the seed
  // and keeps the first one attaining the largest minimum distance among
  // 64 such samples. Requires 1 <= kb < nb <= 24.
  static InnerCode make(int kb, int nb, std::uint64_t seed);

  // Builds the code from explicit generator rows (must be full rank).
  static InnerCode from_rows(int kb, int nb, std::vector<std::uint32_t> rows);

  int dimension() const { return kb_; }
  int block_length() const { return nb_; }
  int min_distance() const { return dmin_; }
  const std::vector<std::uint32_t>& generator_rows() const { return rows_; }

  std::uint32_t encode_bits(std::uint32_t msg) const;
  InnerDecodeResult decode_bits(std::uint32_t word) const;

  BitWord encode(const BitWord& msg) const;
  BitWord decode(const BitWord& word) const;

  // Generator matrix as plain-text 0/1 rows, one row per line.
  std::string generator_text() const;

 private:
  InnerCode(int kb, int nb, std::vector<std::uint32_t> rows);

  int kb_ = 0;
  int nb_ = 0;
  int dmin_ = 0;
  std::vector<std::uint32_t> rows_;
  // Exact decode table, built when 2^nb is small enough to hold.
  std::vector<std::uint16_t> table_msg_;
  std::vector<std::uint8_t> table_dist_;

  void build_table();
  InnerDecodeResult decode_by_search(std::uint32_t word) const;
};

// True if the rows span all of {0,1}^kb-images, i.e. have full row rank.
bool gf2_full_row_rank(const std::vector<std::uint32_t>& rows);

}  // namespace rgc

#endif
