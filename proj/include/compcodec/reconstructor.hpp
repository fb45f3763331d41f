#pragma once

// String reconstruction from composition multisets.
//
// Both decoders walk mirrored pairs outward-in. With the prefix s_1..s_i and
// suffix s_{n+1-i}..s_n known, class l = n-i-1 holds i interior compositions
// (every window spanning the unknown middle) plus the two boundary windows
// s_1..s_{n-i-1} and s_{i+2}..s_n. Removing the interior leaves the boundary
// weights, which pin the pair (s_{i+1}, s_{n-i}) unless the prefix and suffix
// weights tie.

#include "compcodec/composition.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace compcodec {

using ReconstructionSet = std::set<BinaryString>;

struct PairSearchConfig {
  /// Fix pair 1 to (0, 1) instead of trying both orientations.
  bool fix_orientation = true;
  /// Class whose contents are not trusted: steps reading it accept every
  /// pair allowed by sigma.
  std::optional<std::size_t> untrusted_class;
  /// Throw InconsistentMultiset as soon as a trusted step admits two pairs.
  bool stop_on_tie = false;
};

struct PairSearchStats {
  std::size_t steps = 0;
  std::size_t ties = 0;      // trusted steps with two consistent pairs
  std::size_t branches = 0;  // untrusted steps with two sigma-allowed pairs
  std::size_t dead_ends = 0;
};

/// Depth-first search over pair assignments consistent with `sigma` and with
/// every trusted class in [ceil(n/2), n-1]. Returns complete strings in
/// lexicographic branch order; the caller performs final verification.
std::vector<BinaryString> pair_search(const CompositionMultiset& c, std::span<const int> sigma,
                                      const PairSearchConfig& config,
                                      PairSearchStats* stats = nullptr);

/// Forced (non-backtracking) decoder for S_R codewords. Throws
/// InconsistentMultiset when a step cannot be matched, a tie appears, or the
/// result is not a codeword whose multiset equals `c`.
BinaryString reconstruct_codeword(const CompositionMultiset& c,
                                  PairSearchStats* stats = nullptr);

inline constexpr std::size_t kOracleLimit = 25;

/// E_s = { t : fragment(t) = c } by exhaustive backtracking.
ReconstructionSet backtrack_all(const CompositionMultiset& c,
                                std::size_t max_length = kOracleLimit);

bool is_unique_up_to_reversal(const BinaryString& s, std::size_t max_length = kOracleLimit);

}  // namespace compcodec
