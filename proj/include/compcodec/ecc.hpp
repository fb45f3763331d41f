#pragma once

// Single-composition-error-correcting code S_C(n), n odd.
//
// A codeword is an S_R(n-2) string with two starred bits inserted at
// positions 2 and n-1 (s*_1 <= s*_n), an even total weight, and
//   sum_{i=1}^{ceil(n/2)} w_i = 0 (mod 3).
// Lengths are restricted to n = 5 (mod 6): ceil(n/2) is then a multiple of
// three, so flipping the middle bit leaves the checksum alone while each
// starred one-bit moves it by 2 ceil(n/2) - 1 = 2 (mod 3).

#include "compcodec/bigint.hpp"
#include "compcodec/composition.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace compcodec {

struct CodeParamsC {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;  // inner pair count (n - 5) / 2
  BigUint capacity;   // N(m)
};

/// Smallest n = 5 (mod 6), n >= 11, with N((n-5)/2) >= 2^k.
CodeParamsC params_c(std::size_t k);

/// sum_{i=1}^{ceil(n/2)} w_i mod 3.
int checksum3(const BinaryString& s);
int checksum3(std::span<const std::int64_t> w);

/// Drops positions 2 and n-1.
BinaryString inner_string(const BinaryString& s);

/// Codeword for pair-sequence index r over (n-5)/2 inner pairs.
BinaryString codeword_c(std::size_t n, const BigUint& r);
/// Inverse of codeword_c; throws NotACodeword.
BigUint rank_c(const BinaryString& s);

BinaryString encode_c(std::span<const std::uint8_t> message);
BinaryString encode_c(std::span<const std::uint8_t> message, const CodeParamsC& params);

bool is_codeword_c(const BinaryString& s);
std::vector<std::uint8_t> message_of_c(const BinaryString& s, std::size_t k);

struct RepairReport {
  std::vector<std::int64_t> observed;  // w' read from the corrupted multiset
  std::vector<std::int64_t> w;         // repaired, symmetric
  std::optional<std::size_t> corrupted_class;
  std::vector<int> sigma;
};

/// Restores the weight profile of a codeword multiset carrying at most one
/// composition error. Throws Uncorrectable when the observations are not
/// explainable by a single error; InvalidMultiset on bad cardinalities.
RepairReport repair_weights(const CompositionMultiset& corrupted);

struct Correction {
  std::size_t cls = 0;
  Composition observed;
  Composition corrected;
};

struct DecodeResult {
  std::vector<std::uint8_t> message;
  BinaryString codeword;
  RepairReport repair;
  std::optional<Correction> correction;
  std::size_t candidates = 0;  // completed strings examined
};

/// Throws Uncorrectable, AmbiguousDecode, NotACodeword or DimensionMismatch.
DecodeResult decode_c(const CompositionMultiset& corrupted, std::size_t k);
DecodeResult decode_c(const CompositionMultiset& corrupted, const CodeParamsC& params);

}  // namespace compcodec
