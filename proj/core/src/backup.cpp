#include "rgc/backup.hpp"

#include <bit>
#include <stdexcept>

namespace rgc {

BackupCodec::BackupCodec(InnerCode inner, int k) : inner_(std::move(inner)), k_(k) {
  if (k < 1) throw std::invalid_argument("BackupCodec: k must be >= 1");
  int kb = inner_.dimension();
  int nb = inner_.block_length();
  idx_bits_ = std::bit_width(static_cast<unsigned>(k_ - 1));
  payload_bits_ = idx_bits_ + nb;
  n_blocks_ = (payload_bits_ + kb - 1) / kb;
  len_ = n_blocks_ * nb;
}

BitWord BackupCodec::encode(int rho, const BitWord& beta) const {
  if (rho < 1 || rho > k_) throw std::out_of_range("BackupCodec::encode: rho out of [1, k]");
  if (beta.size() != static_cast<std::size_t>(inner_.block_length()))
    throw std::invalid_argument("BackupCodec::encode: beta length mismatch");

  int kb = inner_.dimension();
  int nb = inner_.block_length();
  BitWord payload(static_cast<std::size_t>(n_blocks_) * kb);
  std::uint32_t idx = static_cast<std::uint32_t>(rho - 1);
  for (int t = 0; t < idx_bits_; ++t) {
    payload.set(t, (idx >> (idx_bits_ - 1 - t)) & 1u);
  }
  payload.paste(static_cast<std::size_t>(idx_bits_), beta);

  BitWord out(static_cast<std::size_t>(len_));
  for (int b = 0; b < n_blocks_; ++b) {
    std::uint32_t chunk =
        static_cast<std::uint32_t>(payload.slice(static_cast<std::size_t>(b) * kb, kb).to_uint());
    out.paste(static_cast<std::size_t>(b) * nb,
              BitWord::from_uint(inner_.encode_bits(chunk), nb));
  }
  return out;
}

BackupData BackupCodec::decode(const BitWord& word) const {
  if (word.size() != static_cast<std::size_t>(len_))
    throw std::invalid_argument("BackupCodec::decode: word length mismatch");

  int kb = inner_.dimension();
  int nb = inner_.block_length();
  int half = (inner_.min_distance() - 1) / 2;

  BitWord payload(static_cast<std::size_t>(n_blocks_) * kb);
  bool clean = true;
  for (int b = 0; b < n_blocks_; ++b) {
    std::uint32_t y =
        static_cast<std::uint32_t>(word.slice(static_cast<std::size_t>(b) * nb, nb).to_uint());
    InnerDecodeResult r = inner_.decode_bits(y);
    if (r.distance > half) clean = false;
    payload.paste(static_cast<std::size_t>(b) * kb, BitWord::from_uint(r.message, kb));
  }

  std::uint32_t idx = 0;
  for (int t = 0; t < idx_bits_; ++t) idx = (idx << 1) | std::uint32_t{payload.get(t)};
  int rho = static_cast<int>(idx) + 1;
  if (rho < 1) {
    rho = 1;
    clean = false;
  } else if (rho > k_) {
    rho = k_;
    clean = false;
  }
  BitWord beta = payload.slice(static_cast<std::size_t>(idx_bits_), nb);
  return {rho, beta, clean ? DecodeConfidence::clean : DecodeConfidence::forced};
}

}  // namespace rgc
