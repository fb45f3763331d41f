#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace compcodec {

using BigUint = boost::multiprecision::cpp_int;

/// Reads bits most-significant first.
BigUint bits_to_integer(std::span<const std::uint8_t> bits);

/// Writes the low `width` bits of `value`, most-significant first.
std::vector<std::uint8_t> integer_to_bits(const BigUint& value, std::size_t width);

BigUint pow2(std::size_t exponent);

/// floor(log2(value)) + 1, with bit_length(0) == 0.
std::size_t bit_length(const BigUint& value);

}  // namespace compcodec
