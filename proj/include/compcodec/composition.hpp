#pragma once

// Strings, compositions, composition multisets and the weight profile
// (cumulative weights w_1..w_n and mirrored pair weights sigma).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compcodec {

/// A non-empty sequence of bits. Positions are 0-based in the API.
class BinaryString {
 public:
  BinaryString() = default;
  explicit BinaryString(std::vector<std::uint8_t> bits);

  /// Accepts ASCII '0'/'1' only; throws MalformedInput otherwise.
  static BinaryString parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  std::size_t weight() const noexcept;
  BinaryString reversed() const;
  std::string to_string() const;

  auto operator<=>(const BinaryString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Composition {
  std::uint32_t zeros = 0;
  std::uint32_t ones = 0;

  std::uint32_t length() const noexcept { return zeros + ones; }
  auto operator<=>(const Composition&) const = default;
};

using CompositionBag = std::map<Composition, std::size_t>;

/// Compositions of all substrings, partitioned into classes by substring
/// length. Class l holds a count per composition; a composition of length l
/// is identified by its number of ones, so each class is stored densely.
class CompositionMultiset {
 public:
  CompositionMultiset() = default;
  explicit CompositionMultiset(std::size_t n);

  std::size_t length() const noexcept { return n_; }

  /// Throws InvalidArgument when c.length() is outside [1, n].
  void add(Composition c, std::size_t count = 1);
  /// Removes one copy; returns false when absent.
  bool remove(Composition c);

  std::size_t count(Composition c) const;
  std::size_t class_size(std::size_t len) const;
  std::size_t total() const;
  /// Counts indexed by number of ones, for class `len` (1-based).
  std::span<const std::size_t> class_counts(std::size_t len) const;
  /// Distinct compositions of class `len` with their counts, zeros ascending.
  std::vector<std::pair<Composition, std::size_t>> entries(std::size_t len) const;
  CompositionBag class_bag(std::size_t len) const;

  /// Checks |class l| = n - l + 1 for every l; throws InvalidMultiset.
  void validate() const;

  bool operator==(const CompositionMultiset&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> classes_;
};

struct WeightProfile {
  std::size_t n = 0;
  std::vector<std::int64_t> w;  // w[l-1] = cumulative weight of class l
  std::vector<int> sigma;       // sigma[i-1], i = 1..ceil(n/2)
};

CompositionMultiset fragment(const BinaryString& s);

/// w_l = sum of ones over class l. Throws InvalidMultiset on bad cardinality.
std::vector<std::int64_t> cumulative_weights(const CompositionMultiset& c);

/// Pair weights from a symmetric weight vector via the second difference
/// sigma_i = 2 w_i - w_{i-1} - w_{i+1} (w_0 = 0); the last entry takes the
/// remainder of w_1. Throws SymmetryViolation or SigmaOutOfRange.
std::vector<int> sigma_from_weights(std::span<const std::int64_t> w);

/// sigma_i = s_i + s_{n+1-i}, and the middle bit for odd n.
std::vector<int> sigma_direct(const BinaryString& s);

WeightProfile weight_profile(const CompositionMultiset& c);

/// a - b with multiplicity; throws InconsistentMultiset when b is not in a.
CompositionBag multiset_subtract(const CompositionBag& a, const CompositionBag& b);

/// Number of compositions (with multiplicity) of c1 unmatched in c2.
std::size_t multiset_difference_size(const CompositionMultiset& c1,
                                     const CompositionMultiset& c2);

std::string serialize_text(const CompositionMultiset& c);
std::string serialize_json(const CompositionMultiset& c);
CompositionMultiset parse_text(std::string_view text);
CompositionMultiset parse_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' selects JSON).
CompositionMultiset parse_multiset(std::string_view text);

}  // namespace compcodec
