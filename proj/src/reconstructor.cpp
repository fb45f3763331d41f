#include "compcodec/reconstructor.hpp"

#include "compcodec/codebook_r.hpp"
#include "compcodec/error.hpp"

#include <array>

namespace compcodec {

namespace {

struct Search {
  const CompositionMultiset& c;
  std::span<const int> sigma;
  const PairSearchConfig& config;
  PairSearchStats& stats;
  std::size_t n;
  std::int64_t total_weight;
  std::vector<std::uint8_t> bits;
  std::vector<BinaryString> out;

  // Boundary weights left in class n-1-i after removing the interior windows,
  // or nullopt when the interior is not contained in the class.
  std::optional<std::array<std::int64_t, 2>> boundary_weights(std::size_t i, std::int64_t pre,
                                                              std::int64_t suf) {
    const std::size_t len = n - 1 - i;
    auto counts = c.class_counts(len);
    std::vector<std::size_t> remaining(counts.begin(), counts.end());

    const std::int64_t core = total_weight - pre - suf;
    // Window starting at t (0-based, 1 <= t <= i) covers prefix positions
    // t..i-1, the whole unknown core and the first t-1 suffix positions.
    std::int64_t prefix_tail = pre;  // weight of positions t..i-1
    std::int64_t suffix_head = 0;    // weight of positions n-i..n-i+t-2
    for (std::size_t t = 1; t <= i; ++t) {
      prefix_tail -= bits[t - 1];
      if (t >= 2) suffix_head += bits[n - i + t - 2];
      std::int64_t weight = prefix_tail + core + suffix_head;
      if (weight < 0 || weight > static_cast<std::int64_t>(len) || remaining[weight] == 0) {
        return std::nullopt;
      }
      --remaining[weight];
    }

    std::array<std::int64_t, 2> rest{};
    std::size_t found = 0;
    for (std::size_t ones = 0; ones < remaining.size(); ++ones) {
      for (std::size_t k = 0; k < remaining[ones]; ++k) {
        if (found == 2) return std::nullopt;
        rest[found++] = static_cast<std::int64_t>(ones);
      }
    }
    if (found != 2) return std::nullopt;
    return rest;
  }

  void extend(std::size_t i, std::int64_t pre, std::int64_t suf) {
    const std::size_t pairs = n / 2;
    if (i == pairs) {
      std::int64_t core = total_weight - pre - suf;
      if (n % 2 == 1) {
        int middle = sigma[pairs];
        if (core != middle) {
          ++stats.dead_ends;
          return;
        }
        bits[pairs] = static_cast<std::uint8_t>(middle);
      } else if (core != 0) {
        ++stats.dead_ends;
        return;
      }
      out.emplace_back(bits);
      return;
    }

    ++stats.steps;
    std::array<std::pair<std::uint8_t, std::uint8_t>, 2> options{};
    std::size_t option_count = 0;
    switch (sigma[i]) {
      case 0: options[option_count++] = {0, 0}; break;
      case 2: options[option_count++] = {1, 1}; break;
      default:
        options[option_count++] = {0, 1};
        if (!(i == 0 && config.fix_orientation)) options[option_count++] = {1, 0};
        break;
    }
    if (i == 0 && config.fix_orientation && sigma[0] != 1) option_count = 0;

    const std::size_t len = n - 1 - i;
    const bool trusted = !config.untrusted_class || *config.untrusted_class != len;
    std::optional<std::array<std::int64_t, 2>> rest;
    if (trusted) {
      rest = boundary_weights(i, pre, suf);
      if (!rest) {
        ++stats.dead_ends;
        return;
      }
    }

    std::array<std::pair<std::uint8_t, std::uint8_t>, 2> viable{};
    std::size_t viable_count = 0;
    const std::int64_t core_len = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(i + 1);
    for (std::size_t o = 0; o < option_count; ++o) {
      auto [a, b] = options[o];
      std::int64_t core = total_weight - pre - suf - a - b;
      if (core < 0 || core > core_len) continue;
      if (trusted) {
        std::int64_t left = total_weight - suf - b;  // s_1..s_{n-i-1}
        std::int64_t right = total_weight - pre - a;  // s_{i+2}..s_n
        bool match = ((*rest)[0] == left && (*rest)[1] == right) ||
                     ((*rest)[0] == right && (*rest)[1] == left);
        if (!match) continue;
      }
      viable[viable_count++] = options[o];
    }

    if (viable_count == 0) {
      ++stats.dead_ends;
      return;
    }
    if (viable_count == 2) {
      if (trusted) {
        ++stats.ties;
        if (config.stop_on_tie) {
          throw CodecError(ErrorCode::InconsistentMultiset,
                           "prefix and suffix weights tie at depth " + std::to_string(i));
        }
      } else {
        ++stats.branches;
      }
    }

    for (std::size_t o = 0; o < viable_count; ++o) {
      auto [a, b] = viable[o];
      bits[i] = a;
      bits[n - 1 - i] = b;
      extend(i + 1, pre + a, suf + b);
    }
    bits[i] = 0;
    bits[n - 1 - i] = 0;
  }
};

}  // namespace

std::vector<BinaryString> pair_search(const CompositionMultiset& c, std::span<const int> sigma,
                                      const PairSearchConfig& config, PairSearchStats* stats) {
  c.validate();
  const std::size_t n = c.length();
  if (sigma.size() != (n + 1) / 2) {
    throw CodecError(ErrorCode::DimensionMismatch, "sigma length does not match n");
  }
  PairSearchStats local;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) total += sigma[i];

  Search search{c, sigma, config, stats ? *stats : local, n, total,
                std::vector<std::uint8_t>(n, 0), {}};
  search.extend(0, 0, 0);
  return std::move(search.out);
}

BinaryString reconstruct_codeword(const CompositionMultiset& c, PairSearchStats* stats) {
  auto profile = weight_profile(c);
  PairSearchConfig config;
  config.fix_orientation = true;
  config.stop_on_tie = true;
  auto found = pair_search(c, profile.sigma, config, stats);
  if (found.size() != 1) {
    throw CodecError(ErrorCode::InconsistentMultiset,
                     found.empty() ? "no pair assignment matches the multiset"
                                   : "multiple pair assignments match the multiset");
  }
  BinaryString s = std::move(found.front());
  if (!(fragment(s) == c)) {
    throw CodecError(ErrorCode::InconsistentMultiset,
                     "candidate " + s.to_string() + " does not reproduce the multiset");
  }
  if (!is_codeword_r(s)) {
    throw CodecError(ErrorCode::InconsistentMultiset,
                     "reconstructed string " + s.to_string() + " is not a codeword");
  }
  return s;
}

ReconstructionSet backtrack_all(const CompositionMultiset& c, std::size_t max_length) {
  if (c.length() > max_length) {
    throw CodecError(ErrorCode::TooLarge, "oracle limited to n <= " + std::to_string(max_length));
  }
  c.validate();
  std::vector<int> sigma;
  try {
    sigma = sigma_from_weights(cumulative_weights(c));
  } catch (const CodecError& e) {
    if (e.code() == ErrorCode::SigmaOutOfRange || e.code() == ErrorCode::SymmetryViolation) {
      return {};
    }
    throw;
  }
  PairSearchConfig config;
  config.fix_orientation = false;
  ReconstructionSet out;
  for (auto& t : pair_search(c, sigma, config)) {
    if (fragment(t) == c) out.insert(std::move(t));
  }
  return out;
}

bool is_unique_up_to_reversal(const BinaryString& s, std::size_t max_length) {
  auto found = backtrack_all(fragment(s), max_length);
  auto rev = s.reversed();
  for (const auto& t : found) {
    if (t != s && t != rev) return false;
  }
  return true;
}

}  // namespace compcodec
