#include "compcodec/bigint.hpp"

namespace compcodec {

BigUint bits_to_integer(std::span<const std::uint8_t> bits) {
  BigUint value = 0;
  for (auto b : bits) {
    value <<= 1;
    if (b) value |= 1;
  }
  return value;
}

std::vector<std::uint8_t> integer_to_bits(const BigUint& value, std::size_t width) {
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t i = 0; i < width; ++i) {
    bits[width - 1 - i] = boost::multiprecision::bit_test(value, static_cast<unsigned>(i)) ? 1 : 0;
  }
  return bits;
}

BigUint pow2(std::size_t exponent) {
  BigUint value = 0;
  boost::multiprecision::bit_set(value, static_cast<unsigned>(exponent));
  return value;
}

std::size_t bit_length(const BigUint& value) {
  if (value == 0) return 0;
  return boost::multiprecision::msb(value) + 1;
}

}  // namespace compcodec
