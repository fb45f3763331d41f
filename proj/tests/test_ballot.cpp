#include "compcodec/ballot.hpp"
#include "compcodec/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace compcodec;

namespace {

std::vector<PairSymbol> word(std::initializer_list<int> syms) {
  std::vector<PairSymbol> out;
  for (int s : syms) out.push_back(static_cast<PairSymbol>(s));
  return out;
}

std::vector<int> ints(const std::vector<PairSymbol>& seq) {
  std::vector<int> out;
  for (auto s : seq) out.push_back(static_cast<int>(s));
  return out;
}

constexpr int S0 = 0, S1 = 1, A0 = 2, A1 = 3;

}  // namespace

TEST_CASE("pair symbol bits") {
  CHECK(pair_bits(PairSymbol::Anti0) == std::pair<std::uint8_t, std::uint8_t>{0, 1});
  CHECK(pair_bits(PairSymbol::Anti1) == std::pair<std::uint8_t, std::uint8_t>{1, 0});
  for (auto sym : kPairSymbols) {
    auto [a, b] = pair_bits(sym);
    CHECK(symbol_of_bits(a, b) == sym);
  }
  CHECK(height_step(PairSymbol::Anti0) == 1);
  CHECK(height_step(PairSymbol::Anti1) == -1);
  CHECK(height_step(PairSymbol::Sym1) == 0);
}

TEST_CASE("is_valid_sequence") {
  CHECK(is_valid_sequence(word({A0, A1})));
  CHECK_FALSE(is_valid_sequence(word({A1})));
  CHECK(is_valid_sequence(word({S1, A0, S0, A1})));
  CHECK(is_valid_sequence(word({})));
  CHECK_FALSE(is_valid_sequence(word({A0, A1, A1, A0})));
}

TEST_CASE("ballot counts") {
  CHECK(ballot_count(0) == 1);
  CHECK(ballot_count(1) == 3);
  CHECK(ballot_count(3) == 35);
  CHECK(ballot_count(3) == oracle::binomial(7, 3));
  CHECK(oracle::ballot_words(1).size() == 3);
  CHECK(oracle::ballot_words(3).size() == 35);
}

TEST_CASE("count equals the closed-form binomial up to m = 64") {
  auto table = shared_ballot_table(64);
  for (int m = 0; m <= 64; ++m) {
    CHECK(ballot_count(m) == oracle::binomial(2 * m + 1, m));
    CHECK(table->count(m) == oracle::binomial(2 * m + 1, m));
  }
}

TEST_CASE("count exceeds 64 bits") {
  CHECK(ballot_count(40) > BigUint(std::numeric_limits<std::uint64_t>::max()));
  CHECK(ballot_count(200) == oracle::binomial(401, 200));
}

TEST_CASE("completion table matches brute force") {
  BallotTable table(6);
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::size_t h = 0; h + len <= 6; ++h) {
      // every word of this length that never dips below -h
      long long count = 0;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * len)); ++code) {
        long long height = static_cast<long long>(h);
        bool ok = true;
        for (std::size_t i = 0; i < len; ++i) {
          int sym = static_cast<int>((code >> (2 * i)) & 3);
          height += sym == A0 ? 1 : sym == A1 ? -1 : 0;
          if (height < 0) ok = false;
        }
        count += ok;
      }
      CHECK(table.completions(len, h) == count);
    }
  }
}

TEST_CASE("unrank examples") {
  CHECK(ints(unrank(1, 0)) == std::vector<int>{S0});
  CHECK(ints(unrank(1, 1)) == std::vector<int>{S1});
  CHECK(ints(unrank(1, 2)) == std::vector<int>{A0});
  CHECK(ints(unrank(3, 34)) == oracle::ballot_words(3).back());
  CHECK(ints(unrank(0, 0)).empty());
  CHECK_THROWS_AS(unrank(2, ballot_count(2)), CodecError);
  try {
    unrank(2, ballot_count(2));
  } catch (const CodecError& e) {
    CHECK(e.code() == ErrorCode::RankOutOfRange);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(word({S0})) == 0);
  CHECK(rank(word({})) == 0);
  try {
    rank(word({A1}));
    FAIL("expected InvalidSequence");
  } catch (const CodecError& e) {
    CHECK(e.code() == ErrorCode::InvalidSequence);
  }
}

TEST_CASE("unrank enumerates the brute-force set in order for m <= 8") {
  for (int m = 0; m <= 8; ++m) {
    auto expected = oracle::ballot_words(m);
    REQUIRE(BigUint(expected.size()) == ballot_count(m));
    for (std::size_t r = 0; r < expected.size(); ++r) {
      auto seq = unrank(m, r);
      REQUIRE(ints(seq) == expected[r]);
      REQUIRE(is_valid_sequence(seq));
      REQUIRE(rank(seq) == r);
    }
  }
}

TEST_CASE("unrank is monotone and keeps height non-negative for large m") {
  const std::size_t m = 120;
  const BigUint total = ballot_count(m);
  std::vector<BigUint> ranks;
  BigUint step = total / 997;
  for (BigUint r = 0; r < total; r += step) ranks.push_back(r);
  ranks.push_back(total - 1);
  std::vector<int> previous;
  for (auto& r : ranks) {
    auto seq = unrank(m, r);
    REQUIRE(seq.size() == m);
    int h = 0;
    for (auto s : seq) {
      h += height_step(s);
      REQUIRE(h >= 0);
    }
    REQUIRE(rank(seq) == r);
    auto current = ints(seq);
    if (!previous.empty()) REQUIRE(std::lexicographical_compare(previous.begin(), previous.end(),
                                                                current.begin(), current.end()));
    previous = current;
  }
}
