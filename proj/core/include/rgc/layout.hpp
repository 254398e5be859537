#ifndef RGC_LAYOUT_HPP
#define RGC_LAYOUT_HPP

#include <cstdint>
#include <vector>

#include "rgc/backup.hpp"
#include "rgc/bitword.hpp"
#include "rgc/staircase.hpp"

namespace rgc {

// Start offsets of the six segments of an encoded word:
//   [ c-part | buf1 | backup1 | buf2 | backup2 | buf3 ]
struct SegmentOffsets {
  std::size_t c_part;
  std::size_t buf1;
  std::size_t backup1;
  std::size_t buf2;
  std::size_t backup2;
  std::size_t buf3;
};

// Geometry of the coded Gray word. With nb the inner block length,
// every buffer is nb bits, the backup copies are `len` bits each, the
// whole word is N = (s+1)*nb + 3*nb + 2*len bits, consecutive
// milestones are exactly M = nb + 3*nb + len apart in Hamming
// distance, and the code enumerates m = (2^k - 1)*M + 1 integers.
class CodeLayout {
 public:
  CodeLayout(StaircaseCode code, BackupCodec codec);

  const StaircaseCode& code() const { return code_; }
  const BackupCodec& backup_codec() const { return codec_; }

  int gray_bits() const { return k_; }              // k
  std::size_t buffer_length() const { return buf_len_; }
  const SegmentOffsets& segments() const { return seg_; }
  std::size_t word_length() const { return n_; }    // N
  std::uint64_t milestone_step() const { return step_; }   // M
  std::uint64_t milestone_count() const { return std::uint64_t{1} << k_; }  // 2^k
  std::uint64_t code_size() const { return size_; }        // m

  // Integer encoded by the j-th milestone word: (j-1)*M + 1.
  std::uint64_t milestone_value(std::uint64_t j) const;

  // Row index backed up at milestone j (ruler sequence capped at k)
  // and the bits of the j-th codeword at that row's support.
  int backup_row(std::uint64_t j) const;
  BitWord backup_bits(std::uint64_t j) const;
  // The j-th codeword of the staircase code in Gray order.
  BitWord codeword(std::uint64_t j) const;

 private:
  StaircaseCode code_;
  BackupCodec codec_;
  int k_;
  std::size_t buf_len_;
  SegmentOffsets seg_;
  std::size_t n_;
  std::uint64_t step_;
  std::uint64_t size_;
};

struct MilestoneWord {
  std::uint64_t j;
  BitWord word;
  bool odd;  // parity of j; odd milestones use all-ones buffers
};

// Ordered bit positions flipped between milestone j and milestone j+1.
// Positions advance segment by segment, ascending within each segment:
// nb flips in the c-part (the support of the backed-up row), the first
// buffer, the positions where the two backup-1 contents differ, the
// second buffer, the backup-2 differences, the third buffer.
struct FlipSchedule {
  std::uint64_t j;
  std::vector<std::uint32_t> positions;
};

MilestoneWord milestone(const CodeLayout& layout, std::uint64_t j);
FlipSchedule flip_schedule(const CodeLayout& layout, std::uint64_t j);

}  // namespace rgc

#endif
