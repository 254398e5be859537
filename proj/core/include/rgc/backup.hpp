#ifndef RGC_BACKUP_HPP
#define RGC_BACKUP_HPP

#include <cstdint>

#include "rgc/bitword.hpp"
#include "rgc/inner_code.hpp"

namespace rgc {

enum class DecodeConfidence { clean, forced };

struct BackupData {
  int rho;
  BitWord beta;
  DecodeConfidence confidence;
};

// Protects a row index rho in [1, k] together with the nb backed-up
// bits beta. The payload (rho - 1 serialized most-significant bit
// first, then beta, then zero padding) is split into kb-bit chunks and
// each chunk is encoded with the inner code.
class BackupCodec {
 public:
  BackupCodec(InnerCode inner, int k);

  const InnerCode& inner() const { return inner_; }
  int row_range() const { return k_; }
  int index_bits() const { return idx_bits_; }
  int payload_bits() const { return payload_bits_; }
  int block_count() const { return n_blocks_; }
  int encoded_length() const { return len_; }

  BitWord encode(int rho, const BitWord& beta) const;

  // Confidence is `clean` when every block's nearest codeword lies
  // within floor((dmin-1)/2) of the received block and the parsed index
  // falls inside [1, k]; otherwise the result is `forced` (an index out
  // of range is clamped to the nearest valid value).
  BackupData decode(const BitWord& word) const;

 private:
  InnerCode inner_;
  int k_;
  int idx_bits_;
  int payload_bits_;
  int n_blocks_;
  int len_;
};

}  // namespace rgc

#endif
