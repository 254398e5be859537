#include "rgc/layout.hpp"

#include <stdexcept>

#include "rgc/gray.hpp"

namespace rgc {

CodeLayout::CodeLayout(StaircaseCode code, BackupCodec codec)
    : code_(std::move(code)), codec_(std::move(codec)) {
  if (codec_.row_range() != code_.rows())
    throw std::invalid_argument("CodeLayout: backup codec row range != staircase rows");
  if (codec_.inner().block_length() != code_.inner().block_length())
    throw std::invalid_argument("CodeLayout: inner block length mismatch");

  k_ = code_.rows();
  if (k_ > 63) throw std::invalid_argument("CodeLayout: k must be <= 63");
  buf_len_ = static_cast<std::size_t>(code_.inner().block_length());
  std::size_t nc = static_cast<std::size_t>(code_.codeword_length());
  std::size_t len = static_cast<std::size_t>(codec_.encoded_length());

  seg_.c_part = 0;
  seg_.buf1 = nc;
  seg_.backup1 = seg_.buf1 + buf_len_;
  seg_.buf2 = seg_.backup1 + len;
  seg_.backup2 = seg_.buf2 + buf_len_;
  seg_.buf3 = seg_.backup2 + len;
  n_ = seg_.buf3 + buf_len_;

  std::size_t nb = static_cast<std::size_t>(code_.inner().block_length());
  step_ = static_cast<std::uint64_t>(nb + 3 * buf_len_ + len);
  std::uint64_t milestones = std::uint64_t{1} << k_;
  if (step_ > (~std::uint64_t{0} - 1) / (milestones - 1))
    throw std::invalid_argument("CodeLayout: code size overflows 64 bits");
  size_ = (milestones - 1) * step_ + 1;
}

std::uint64_t CodeLayout::milestone_value(std::uint64_t j) const {
  if (j < 1 || j > milestone_count())
    throw std::out_of_range("CodeLayout::milestone_value: j out of [1, 2^k]");
  return (j - 1) * step_ + 1;
}

int CodeLayout::backup_row(std::uint64_t j) const {
  return ruler_capped(j, k_);
}

BitWord CodeLayout::codeword(std::uint64_t j) const {
  return code_.encode(gray_word(j, k_));
}

BitWord CodeLayout::backup_bits(std::uint64_t j) const {
  BitWord c = codeword(j);
  const auto& support = code_.row_support(backup_row(j));
  BitWord beta(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) beta.set(i, c.get(support[i]));
  return beta;
}

MilestoneWord milestone(const CodeLayout& layout, std::uint64_t j) {
  if (j < 1 || j > layout.milestone_count())
    throw std::out_of_range("milestone: j out of [1, 2^k]");
  bool odd = (j % 2) == 1;

  BitWord c = layout.codeword(j);
  BitWord bu = layout.backup_codec().encode(layout.backup_row(j), layout.backup_bits(j));
  BitWord buf = odd ? BitWord::ones(layout.buffer_length()) : BitWord(layout.buffer_length());

  const SegmentOffsets& seg = layout.segments();
  BitWord w(layout.word_length());
  w.paste(seg.c_part, c);
  w.paste(seg.buf1, buf);
  w.paste(seg.backup1, bu);
  w.paste(seg.buf2, buf);
  w.paste(seg.backup2, odd ? bu.complemented() : bu);
  w.paste(seg.buf3, buf);
  return {j, std::move(w), odd};
}

FlipSchedule flip_schedule(const CodeLayout& layout, std::uint64_t j) {
  if (j < 1 || j + 1 > layout.milestone_count())
    throw std::out_of_range("flip_schedule: j out of [1, 2^k - 1]");
  BitWord from = milestone(layout, j).word;
  BitWord to = milestone(layout, j + 1).word;

  // Segment order equals position order, so the phase-by-phase schedule
  // is the ascending list of differing positions.
  FlipSchedule sched{j, {}};
  sched.positions.reserve(layout.milestone_step());
  for (std::uint32_t i = 0; i < layout.word_length(); ++i) {
    if (from.get(i) != to.get(i)) sched.positions.push_back(i);
  }
  return sched;
}

}  // namespace rgc
