#include "compcodec/ballot.hpp"

#include "compcodec/error.hpp"

#include <mutex>

namespace compcodec {

std::pair<std::uint8_t, std::uint8_t> pair_bits(PairSymbol sym) noexcept {
  switch (sym) {
    case PairSymbol::Sym0: return {0, 0};
    case PairSymbol::Sym1: return {1, 1};
    case PairSymbol::Anti0: return {0, 1};
    case PairSymbol::Anti1: return {1, 0};
  }
  return {0, 0};
}

PairSymbol symbol_of_bits(std::uint8_t left, std::uint8_t right) noexcept {
  if (left == right) return left ? PairSymbol::Sym1 : PairSymbol::Sym0;
  return left ? PairSymbol::Anti1 : PairSymbol::Anti0;
}

int height_step(PairSymbol sym) noexcept {
  switch (sym) {
    case PairSymbol::Anti0: return 1;
    case PairSymbol::Anti1: return -1;
    default: return 0;
  }
}

bool is_valid_sequence(std::span<const PairSymbol> seq) noexcept {
  long height = 0;
  for (auto sym : seq) {
    height += height_step(sym);
    if (height < 0) return false;
  }
  return true;
}

BallotTable::BallotTable(std::size_t max_length)
    : max_length_(max_length), table_(max_length + 1) {
  table_[0].assign(max_length + 1, BigUint(1));
  for (std::size_t len = 1; len <= max_length; ++len) {
    const auto& prev = table_[len - 1];
    auto& row = table_[len];
    row.resize(max_length - len + 1);
    for (std::size_t h = 0; h < row.size(); ++h) {
      BigUint v = prev[h];
      v *= 2;
      v += prev[h + 1];
      if (h > 0) v += prev[h - 1];
      row[h] = std::move(v);
    }
  }
}

const BigUint& BallotTable::completions(std::size_t remaining, std::size_t height) const {
  if (remaining > max_length_ || height > max_length_ - remaining) {
    throw CodecError(ErrorCode::InvalidArgument,
                     "ballot table lookup (" + std::to_string(remaining) + ", " +
                         std::to_string(height) + ") outside table of size " +
                         std::to_string(max_length_));
  }
  return table_[remaining][height];
}

std::shared_ptr<const BallotTable> shared_ballot_table(std::size_t max_length) {
  static std::mutex mutex;
  static std::shared_ptr<const BallotTable> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->max_length() < max_length) {
    std::size_t size = cached ? std::max(max_length, 2 * cached->max_length()) : max_length;
    size = std::max<std::size_t>(size, 16);
    cached = std::make_shared<const BallotTable>(size);
  }
  return cached;
}

BigUint ballot_count(std::size_t m) {
  static std::mutex mutex;
  static std::vector<BigUint> counts{BigUint(1)};
  static std::vector<BigUint> row{BigUint(1)};  // f(t, h) for the last computed t

  std::lock_guard lock(mutex);
  while (counts.size() <= m) {
    std::vector<BigUint> next(row.size() + 1);
    for (std::size_t h = 0; h < next.size(); ++h) {
      BigUint v = 0;
      if (h < row.size()) v += 2 * row[h];
      if (h >= 1 && h - 1 < row.size()) v += row[h - 1];
      if (h + 1 < row.size()) v += row[h + 1];
      next[h] = std::move(v);
    }
    BigUint total = 0;
    for (const auto& v : next) total += v;
    counts.push_back(std::move(total));
    row = std::move(next);
  }
  return counts[m];
}

std::vector<PairSymbol> unrank(std::size_t m, const BigUint& r) {
  auto table = shared_ballot_table(m);
  if (r < 0 || r >= table->count(m)) {
    throw CodecError(ErrorCode::RankOutOfRange,
                     "rank " + r.str() + " not below N(" + std::to_string(m) + ") = " +
                         table->count(m).str());
  }
  std::vector<PairSymbol> seq;
  seq.reserve(m);
  BigUint remaining_rank = r;
  std::size_t height = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const std::size_t rest = m - pos - 1;
    for (auto sym : kPairSymbols) {
      int step = height_step(sym);
      if (step < 0 && height == 0) continue;
      std::size_t next_height = height + step;
      const BigUint& block = table->completions(rest, next_height);
      if (remaining_rank < block) {
        seq.push_back(sym);
        height = next_height;
        break;
      }
      remaining_rank -= block;
    }
  }
  return seq;
}

BigUint rank(std::span<const PairSymbol> seq) {
  if (!is_valid_sequence(seq)) {
    throw CodecError(ErrorCode::InvalidSequence, "ballot condition violated");
  }
  const std::size_t m = seq.size();
  auto table = shared_ballot_table(m);
  BigUint r = 0;
  std::size_t height = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const std::size_t rest = m - pos - 1;
    for (auto sym : kPairSymbols) {
      if (sym == seq[pos]) break;
      int step = height_step(sym);
      if (step < 0 && height == 0) continue;
      r += table->completions(rest, height + step);
    }
    height += height_step(seq[pos]);
  }
  return r;
}

}  // namespace compcodec
