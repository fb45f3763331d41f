#pragma once

// Single composition errors: one composition of one class has a bit flipped,
// keeping its length (a single insertion-deletion pair in mass terms).

#include "compcodec/composition.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace compcodec {

enum class ErrorDirection : std::uint8_t { ZeroToOne, OneToZero };

struct ErrorSpec {
  std::size_t cls = 0;
  Composition target;
  ErrorDirection direction = ErrorDirection::ZeroToOne;

  bool admissible() const noexcept;
  /// The composition that replaces `target`.
  Composition result() const noexcept;
  /// "class=<l> from=<z>^0<w>^1 dir=<01|10>"
  std::string to_string() const;

  bool operator==(const ErrorSpec&) const = default;
};

/// Throws InvalidError when the target is absent or the direction inadmissible.
CompositionMultiset apply_error(const CompositionMultiset& c, const ErrorSpec& e);

/// Every admissible error once, ordered by (class, zeros, direction).
std::vector<ErrorSpec> enumerate_error_specs(const CompositionMultiset& c);
std::vector<std::pair<ErrorSpec, CompositionMultiset>> enumerate_errors(
    const CompositionMultiset& c);

/// Uniform over enumerate_error_specs(c); deterministic in `seed`.
/// Restricting to one class is optional (0 = any class).
std::pair<ErrorSpec, CompositionMultiset> random_error(const CompositionMultiset& c,
                                                       std::uint64_t seed,
                                                       std::size_t only_class = 0);

/// SplitMix64 finalizer over (master, index): per-trial seeds that do not
/// depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace compcodec
