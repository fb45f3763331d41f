#pragma once

// Reconstruction codebook S_R(n): s_1 = 0, s_n = 1, every inner mirrored pair
// symmetric or anti-symmetric, and the anti-symmetric pairs (read outward-in)
// forming a ballot sequence. For odd n the middle bit is free.

#include "compcodec/ballot.hpp"
#include "compcodec/bigint.hpp"
#include "compcodec/composition.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace compcodec {

struct CodeParamsR {
  std::size_t k = 0;
  std::size_t n = 0;
  BigUint capacity;
};

/// |S_R(n)|: N(n/2 - 1) for even n, 2 N((n-3)/2) for odd n, 0 for n < 2.
BigUint capacity_r(std::size_t n);

/// Smallest n (either parity) with capacity_r(n) >= 2^k.
CodeParamsR params_r(std::size_t k);

/// Pair symbols for pairs 2..floor(n/2).
std::vector<PairSymbol> inner_pairs(const BinaryString& s);

/// Places pair 1 = (0,1), the given inner pairs and, for odd n, the middle bit.
BinaryString assemble_r(std::size_t n, std::span<const PairSymbol> pairs, std::uint8_t middle);

/// Codeword of rank r in S_R(n); odd n uses r = 2q + middle.
BinaryString codeword_r(std::size_t n, const BigUint& r);
/// Inverse of codeword_r; throws NotACodeword.
BigUint rank_r(const BinaryString& s);

BinaryString encode_r(std::span<const std::uint8_t> message);
BinaryString encode_r(std::span<const std::uint8_t> message, const CodeParamsR& params);

bool is_codeword_r(const BinaryString& s);

/// k is side information. Throws NotACodeword.
std::vector<std::uint8_t> message_of_r(const BinaryString& s, std::size_t k);

inline constexpr std::size_t kEnumerateLimit = 24;

/// All of S_R(n) in rank order; throws TooLarge above kEnumerateLimit.
std::vector<BinaryString> enumerate_r(std::size_t n);

}  // namespace compcodec
