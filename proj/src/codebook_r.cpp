#include "compcodec/codebook_r.hpp"

#include "compcodec/error.hpp"

namespace compcodec {

BigUint capacity_r(std::size_t n) {
  if (n < 2) return 0;
  if (n % 2 == 0) return ballot_count(n / 2 - 1);
  return 2 * ballot_count((n - 3) / 2);
}

CodeParamsR params_r(std::size_t k) {
  if (k == 0) throw CodecError(ErrorCode::InvalidArgument, "k must be at least 1");
  const BigUint target = pow2(k);
  for (std::size_t n = k + 1;; ++n) {
    BigUint cap = capacity_r(n);
    if (cap >= target) return CodeParamsR{k, n, std::move(cap)};
  }
}

std::vector<PairSymbol> inner_pairs(const BinaryString& s) {
  const std::size_t n = s.size();
  std::vector<PairSymbol> pairs;
  for (std::size_t i = 1; i < n / 2; ++i) pairs.push_back(symbol_of_bits(s[i], s[n - 1 - i]));
  return pairs;
}

BinaryString assemble_r(std::size_t n, std::span<const PairSymbol> pairs, std::uint8_t middle) {
  if (n < 2 || pairs.size() != n / 2 - 1) {
    throw CodecError(ErrorCode::InvalidArgument,
                     "pair count does not match length " + std::to_string(n));
  }
  std::vector<std::uint8_t> bits(n, 0);
  bits[n - 1] = 1;
  for (std::size_t i = 1; i < n / 2; ++i) {
    auto [left, right] = pair_bits(pairs[i - 1]);
    bits[i] = left;
    bits[n - 1 - i] = right;
  }
  if (n % 2 == 1) bits[n / 2] = middle;
  return BinaryString(std::move(bits));
}

BinaryString codeword_r(std::size_t n, const BigUint& r) {
  BigUint cap = capacity_r(n);
  if (r < 0 || r >= cap) {
    throw CodecError(ErrorCode::CapacityExceeded,
                     "index " + r.str() + " exceeds |S_R(" + std::to_string(n) + ")| = " +
                         cap.str());
  }
  if (n % 2 == 0) return assemble_r(n, unrank(n / 2 - 1, r), 0);
  std::uint8_t middle = static_cast<std::uint8_t>(r & 1);
  return assemble_r(n, unrank((n - 3) / 2, r >> 1), middle);
}

bool is_codeword_r(const BinaryString& s) {
  const std::size_t n = s.size();
  if (n < 2 || s[0] != 0 || s[n - 1] != 1) return false;
  auto pairs = inner_pairs(s);
  return is_valid_sequence(pairs);
}

BigUint rank_r(const BinaryString& s) {
  if (!is_codeword_r(s)) throw CodecError(ErrorCode::NotACodeword, s.to_string());
  BigUint q = rank(inner_pairs(s));
  if (s.size() % 2 == 0) return q;
  return 2 * q + s[s.size() / 2];
}

BinaryString encode_r(std::span<const std::uint8_t> message) {
  return encode_r(message, params_r(message.size()));
}

BinaryString encode_r(std::span<const std::uint8_t> message, const CodeParamsR& params) {
  if (message.size() != params.k) {
    throw CodecError(ErrorCode::InvalidArgument,
                     "message has " + std::to_string(message.size()) + " bits, expected " +
                         std::to_string(params.k));
  }
  return codeword_r(params.n, bits_to_integer(message));
}

std::vector<std::uint8_t> message_of_r(const BinaryString& s, std::size_t k) {
  auto params = params_r(k);
  if (s.size() != params.n) {
    throw CodecError(ErrorCode::NotACodeword,
                     "length " + std::to_string(s.size()) + " but k = " + std::to_string(k) +
                         " uses n = " + std::to_string(params.n));
  }
  BigUint r = rank_r(s);
  if (r >= pow2(k)) {
    throw CodecError(ErrorCode::NotACodeword, "codeword index " + r.str() + " is not a message");
  }
  return integer_to_bits(r, k);
}

std::vector<BinaryString> enumerate_r(std::size_t n) {
  if (n > kEnumerateLimit) {
    throw CodecError(ErrorCode::TooLarge, "enumeration limited to n <= " +
                                              std::to_string(kEnumerateLimit));
  }
  std::vector<BinaryString> out;
  BigUint cap = capacity_r(n);
  for (BigUint r = 0; r < cap; ++r) out.push_back(codeword_r(n, r));
  return out;
}

}  // namespace compcodec
