#pragma once

// Ballot sequences over the mirrored-pair alphabet. A pair (s_i, s_{n+1-i})
// is symmetric (sym0/sym1) or anti-symmetric (anti0 = (0,1), anti1 = (1,0)).
// Reading pairs outward-in, anti0 raises a running height by one and anti1
// lowers it; a sequence is valid when the height never goes negative.

#include "compcodec/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace compcodec {

enum class PairSymbol : std::uint8_t { Sym0 = 0, Sym1 = 1, Anti0 = 2, Anti1 = 3 };

inline constexpr PairSymbol kPairSymbols[] = {PairSymbol::Sym0, PairSymbol::Sym1,
                                              PairSymbol::Anti0, PairSymbol::Anti1};

/// Bits at (i, n+1-i).
std::pair<std::uint8_t, std::uint8_t> pair_bits(PairSymbol sym) noexcept;
PairSymbol symbol_of_bits(std::uint8_t left, std::uint8_t right) noexcept;
int height_step(PairSymbol sym) noexcept;

bool is_valid_sequence(std::span<const PairSymbol> seq) noexcept;

/// Completion counts for sequences of up to `max_length` pairs.
///
/// completions(L, h) is the number of symbol strings of length L that keep a
/// running height starting at h non-negative:
///   completions(0, h) = 1
///   completions(L, h) = 2 completions(L-1, h) + completions(L-1, h+1)
///                       + [h > 0] completions(L-1, h-1)
/// Only h <= max_length - L is stored, which is all that ranking touches.
class BallotTable {
 public:
  explicit BallotTable(std::size_t max_length);

  std::size_t max_length() const noexcept { return max_length_; }
  const BigUint& completions(std::size_t remaining, std::size_t height) const;
  /// N(m) = completions(m, 0).
  const BigUint& count(std::size_t m) const { return completions(m, 0); }

 private:
  std::size_t max_length_;
  std::vector<std::vector<BigUint>> table_;
};

/// Shared read-only table covering at least `max_length` pairs.
std::shared_ptr<const BallotTable> shared_ballot_table(std::size_t max_length);

/// N(m) by the forward recurrence f(t,h) = 2f(t-1,h) + f(t-1,h-1) + f(t-1,h+1),
/// summed over the final heights. Memoized; safe to call concurrently.
BigUint ballot_count(std::size_t m);

/// Lexicographic rank under sym0 < sym1 < anti0 < anti1.
std::vector<PairSymbol> unrank(std::size_t m, const BigUint& rank);
BigUint rank(std::span<const PairSymbol> seq);

}  // namespace compcodec
