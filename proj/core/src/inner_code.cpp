#include "rgc/inner_code.hpp"

#include <bit>
#include <stdexcept>

#include "rgc/rng.hpp"

namespace rgc {
namespace {

constexpr int kTableMaxBits = 16;
constexpr int kCandidates = 64;
constexpr int kMaxDraws = 64 * 1024;

// Message bit string read as a binary numeral (bit 0 most significant).
std::uint32_t numeral_of(std::uint32_t msg, int kb) {
  std::uint32_t v = 0;
  for (int t = 0; t < kb; ++t) v = (v << 1) | ((msg >> t) & 1u);
  return v;
}

}  // namespace

bool gf2_full_row_rank(const std::vector<std::uint32_t>& rows) {
  std::vector<std::uint32_t> work = rows;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::size_t pivot = rank;
    while (pivot < work.size() && work[pivot] == 0) ++pivot;
    if (pivot == work.size()) break;
    std::swap(work[rank], work[pivot]);
    std::uint32_t lead = std::uint32_t{1} << (31 - std::countl_zero(work[rank]));
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != rank && (work[r] & lead)) work[r] ^= work[rank];
    }
    ++rank;
  }
  return rank == rows.size();
}

InnerCode::InnerCode(int kb, int nb, std::vector<std::uint32_t> rows)
    : kb_(kb), nb_(nb), rows_(std::move(rows)) {
  // dmin of a linear code = minimum weight over nonzero codewords.
  dmin_ = nb_;
  for (std::uint32_t msg = 1; msg < (std::uint32_t{1} << kb_); ++msg) {
    int w = std::popcount(encode_bits(msg));
    if (w < dmin_) dmin_ = w;
  }
  if (nb_ <= kTableMaxBits) build_table();
}

InnerCode InnerCode::make(int kb, int nb, std::uint64_t seed) {
  if (kb < 1 || kb >= nb || nb > 24)
    throw std::invalid_argument("InnerCode::make: need 1 <= kb < nb <= 24");
  KeyedRng rng(seed, 0x1c0deULL + (std::uint64_t(kb) << 32) + (std::uint64_t(nb) << 16));
  std::uint32_t mask = (nb == 32) ? ~0u : ((std::uint32_t{1} << nb) - 1);

  std::vector<std::uint32_t> best;
  int best_dmin = -1;
  int found = 0;
  for (int draws = 0; found < kCandidates; ++draws) {
    if (draws >= kMaxDraws)
      throw std::runtime_error("InnerCode::make: no full-rank generator found");
    std::vector<std::uint32_t> rows(kb);
    for (auto& r : rows) r = static_cast<std::uint32_t>(rng.next()) & mask;
    if (!gf2_full_row_rank(rows)) continue;
    ++found;
    InnerCode cand(kb, nb, rows);
    if (cand.min_distance() > best_dmin) {
      best_dmin = cand.min_distance();
      best = rows;
    }
  }
  return InnerCode(kb, nb, std::move(best));
}

InnerCode InnerCode::from_rows(int kb, int nb, std::vector<std::uint32_t> rows) {
  if (kb < 1 || nb < kb || nb > 24)
    throw std::invalid_argument("InnerCode::from_rows: need 1 <= kb <= nb <= 24");
  if (static_cast<int>(rows.size()) != kb)
    throw std::invalid_argument("InnerCode::from_rows: wrong number of rows");
  std::uint32_t mask = (std::uint32_t{1} << nb) - 1;
  for (auto r : rows) {
    if (r & ~mask) throw std::invalid_argument("InnerCode::from_rows: row wider than nb");
  }
  if (!gf2_full_row_rank(rows))
    throw std::invalid_argument("InnerCode::from_rows: generator is not full rank");
  return InnerCode(kb, nb, std::move(rows));
}

std::uint32_t InnerCode::encode_bits(std::uint32_t msg) const {
  std::uint32_t cw = 0;
  for (int t = 0; t < kb_; ++t) {
    if ((msg >> t) & 1u) cw ^= rows_[t];
  }
  return cw;
}

InnerDecodeResult InnerCode::decode_bits(std::uint32_t word) const {
  if (!table_msg_.empty()) {
    return {table_msg_[word], table_dist_[word]};
  }
  return decode_by_search(word);
}

InnerDecodeResult InnerCode::decode_by_search(std::uint32_t word) const {
  std::uint32_t best_msg = 0;
  int best_dist = std::popcount(word);
  std::uint32_t best_key = numeral_of(0, kb_);
  for (std::uint32_t msg = 1; msg < (std::uint32_t{1} << kb_); ++msg) {
    int d = std::popcount(word ^ encode_bits(msg));
    std::uint32_t key = numeral_of(msg, kb_);
    if (d < best_dist || (d == best_dist && key < best_key)) {
      best_dist = d;
      best_msg = msg;
      best_key = key;
    }
  }
  return {best_msg, best_dist};
}

void InnerCode::build_table() {
  std::size_t n_words = std::size_t{1} << nb_;
  table_msg_.assign(n_words, 0);
  table_dist_.assign(n_words, 0xff);

  // Multi-source BFS over the hypercube, seeded at the codewords. When a
  // word is reachable from several codewords at the same distance the
  // lowest message numeral wins.
  std::vector<std::uint32_t> frontier;
  frontier.reserve(std::size_t{1} << kb_);
  for (std::uint32_t msg = 0; msg < (std::uint32_t{1} << kb_); ++msg) {
    std::uint32_t cw = encode_bits(msg);
    table_msg_[cw] = static_cast<std::uint16_t>(msg);
    table_dist_[cw] = 0;
    frontier.push_back(cw);
  }
  std::uint8_t d = 0;
  std::vector<std::uint32_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (std::uint32_t w : frontier) {
      for (int bit = 0; bit < nb_; ++bit) {
        std::uint32_t v = w ^ (std::uint32_t{1} << bit);
        if (table_dist_[v] == 0xff) {
          table_dist_[v] = d + 1;
          table_msg_[v] = table_msg_[w];
          next.push_back(v);
        } else if (table_dist_[v] == d + 1) {
          if (numeral_of(table_msg_[w], kb_) < numeral_of(table_msg_[v], kb_)) {
            table_msg_[v] = table_msg_[w];
          }
        }
      }
    }
    frontier.swap(next);
    ++d;
  }
}

BitWord InnerCode::encode(const BitWord& msg) const {
  if (msg.size() != static_cast<std::size_t>(kb_))
    throw std::invalid_argument("InnerCode::encode: message length mismatch");
  return BitWord::from_uint(encode_bits(static_cast<std::uint32_t>(msg.to_uint())),
                            static_cast<std::size_t>(nb_));
}

BitWord InnerCode::decode(const BitWord& word) const {
  if (word.size() != static_cast<std::size_t>(nb_))
    throw std::invalid_argument("InnerCode::decode: word length mismatch");
  InnerDecodeResult r = decode_bits(static_cast<std::uint32_t>(word.to_uint()));
  return BitWord::from_uint(r.message, static_cast<std::size_t>(kb_));
}

std::string InnerCode::generator_text() const {
  std::string out;
  for (auto row : rows_) {
    for (int i = 0; i < nb_; ++i) out += ((row >> i) & 1u) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace rgc
