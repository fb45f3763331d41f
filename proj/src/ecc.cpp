#include "compcodec/ecc.hpp"

#include "compcodec/ballot.hpp"
#include "compcodec/codebook_r.hpp"
#include "compcodec/error.hpp"
#include "compcodec/reconstructor.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace compcodec {

namespace {

int mod3(std::int64_t v) { return static_cast<int>(((v % 3) + 3) % 3); }

// Inserts the starred bits at positions 2 and n-1 of an S_R(n-2) string.
BinaryString with_stars(const BinaryString& inner, std::uint8_t left, std::uint8_t right) {
  const std::size_t n = inner.size() + 2;
  std::vector<std::uint8_t> bits;
  bits.reserve(n);
  bits.push_back(inner[0]);
  bits.push_back(left);
  for (std::size_t i = 1; i + 1 < inner.size(); ++i) bits.push_back(inner[i]);
  bits.push_back(right);
  bits.push_back(inner[inner.size() - 1]);
  return BinaryString(std::move(bits));
}

}  // namespace

CodeParamsC params_c(std::size_t k) {
  if (k == 0) throw CodecError(ErrorCode::InvalidArgument, "k must be at least 1");
  const BigUint target = pow2(k);
  for (std::size_t n = 11;; n += 6) {
    std::size_t m = (n - 5) / 2;
    BigUint cap = ballot_count(m);
    if (cap >= target) return CodeParamsC{k, n, m, std::move(cap)};
  }
}

int checksum3(const BinaryString& s) {
  // A one at position p lies in min(p, l, n+1-p, n+1-l) windows of length l.
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  const std::int64_t half = (n + 1) / 2;
  std::int64_t sum = 0;
  for (std::int64_t p = 1; p <= n; ++p) {
    if (!s[p - 1]) continue;
    for (std::int64_t l = 1; l <= half; ++l) {
      sum += std::min({p, l, n + 1 - p, n + 1 - l});
    }
  }
  return mod3(sum);
}

int checksum3(std::span<const std::int64_t> w) {
  const std::size_t half = (w.size() + 1) / 2;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < half; ++i) sum += w[i];
  return mod3(sum);
}

BinaryString inner_string(const BinaryString& s) {
  const std::size_t n = s.size();
  if (n < 4) throw CodecError(ErrorCode::NotACodeword, "too short for starred bits");
  std::vector<std::uint8_t> bits;
  bits.reserve(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 1 && i != n - 2) bits.push_back(s[i]);
  }
  return BinaryString(std::move(bits));
}

BinaryString codeword_c(std::size_t n, const BigUint& r) {
  if (n < 5 || n % 2 == 0) {
    throw CodecError(ErrorCode::InvalidArgument, "S_C length must be odd and at least 5");
  }
  const std::size_t m = (n - 5) / 2;
  if (r < 0 || r >= ballot_count(m)) {
    throw CodecError(ErrorCode::CapacityExceeded,
                     "index " + r.str() + " exceeds N(" + std::to_string(m) + ")");
  }
  const BinaryString inner = assemble_r(n - 2, unrank(m, r), 0);
  const std::size_t middle = n / 2;

  constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 3> kStars{{{0, 0}, {0, 1}, {1, 1}}};
  for (auto [left, right] : kStars) {
    BinaryString s = with_stars(inner, left, right);
    if (s.weight() % 2 == 1) {
      std::vector<std::uint8_t> bits(s.bits().begin(), s.bits().end());
      bits[middle] = 1;
      s = BinaryString(std::move(bits));
    }
    if (checksum3(s) == 0) return s;
  }
  throw CodecError(ErrorCode::NoValidPadding,
                   "no starred-bit choice zeroes the checksum at n = " + std::to_string(n));
}

bool is_codeword_c(const BinaryString& s) {
  const std::size_t n = s.size();
  if (n < 5 || n % 2 == 0) return false;
  if (s[1] > s[n - 2]) return false;
  if (s.weight() % 2 != 0) return false;
  if (!is_codeword_r(inner_string(s))) return false;
  return checksum3(s) == 0;
}

BigUint rank_c(const BinaryString& s) {
  if (!is_codeword_c(s)) throw CodecError(ErrorCode::NotACodeword, s.to_string());
  return rank(inner_pairs(inner_string(s)));
}

BinaryString encode_c(std::span<const std::uint8_t> message) {
  return encode_c(message, params_c(message.size()));
}

BinaryString encode_c(std::span<const std::uint8_t> message, const CodeParamsC& params) {
  if (message.size() != params.k) {
    throw CodecError(ErrorCode::InvalidArgument,
                     "message has " + std::to_string(message.size()) + " bits, expected " +
                         std::to_string(params.k));
  }
  return codeword_c(params.n, bits_to_integer(message));
}

std::vector<std::uint8_t> message_of_c(const BinaryString& s, std::size_t k) {
  auto params = params_c(k);
  if (s.size() != params.n) {
    throw CodecError(ErrorCode::NotACodeword,
                     "length " + std::to_string(s.size()) + " but k = " + std::to_string(k) +
                         " uses n = " + std::to_string(params.n));
  }
  BigUint r = rank_c(s);
  if (r >= pow2(k)) {
    throw CodecError(ErrorCode::NotACodeword, "codeword index " + r.str() + " is not a message");
  }
  return integer_to_bits(r, k);
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void uncorrectable(const std::string& why) {
  throw CodecError(ErrorCode::Uncorrectable, why);
}

// Recovers w_j (1-based, 2 <= j <= ceil(n/2)) from w_1..w_{j-1}, using
//   w_j = j w_1 - sum_{t<j} (j - t) sigma_t
// with sigma_{j-1} unknown in {0,1,2}, and the checksum residue. `others` is
// the checksum sum over the remaining indices i <= ceil(n/2), i != j.
std::int64_t recover_weight(const std::vector<std::int64_t>& w, std::size_t j,
                            std::int64_t others) {
  auto at = [&](std::size_t i) -> std::int64_t { return i == 0 ? 0 : w[i - 1]; };
  const std::int64_t jj = static_cast<std::int64_t>(j);
  std::int64_t top = jj * w[0];
  for (std::size_t t = 1; t + 2 <= j; ++t) {
    std::int64_t sigma = 2 * at(t) - at(t - 1) - at(t + 1);
    top -= (jj - static_cast<std::int64_t>(t)) * sigma;
  }
  for (std::int64_t candidate = top; candidate >= top - 2; --candidate) {
    if (mod3(others + candidate) == 0) return candidate;
  }
  uncorrectable("no weight in the window matches the checksum");  // unreachable
}

}  // namespace

RepairReport repair_weights(const CompositionMultiset& corrupted) {
  const std::size_t n = corrupted.length();
  if (n < 5 || n % 2 == 0) {
    throw CodecError(ErrorCode::InvalidArgument, "repair requires odd n >= 5");
  }
  RepairReport report;
  report.observed = cumulative_weights(corrupted);
  const auto& obs = report.observed;
  std::vector<std::int64_t> w = obs;
  const std::size_t half = (n + 1) / 2;

  std::vector<std::size_t> mismatched;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    if (obs[j - 1] != obs[n - j]) mismatched.push_back(j);
  }
  if (mismatched.size() > 1) uncorrectable("more than one mirrored class pair disagrees");

  std::size_t target = 0;  // class pair whose weight is re-derived
  if (!mismatched.empty()) {
    target = mismatched.front();
    std::int64_t a = obs[target - 1];
    std::int64_t b = obs[n - target];
    if (std::abs(a - b) != 1) uncorrectable("mirrored weights differ by more than one");
  }

  // Total weight: codewords have even weight.
  if (target == 1) {
    std::int64_t w1 = (obs[0] % 2 == 0) ? obs[0] : obs[n - 1];
    w[0] = w[n - 1] = w1;
  } else if (target >= 2) {
    std::int64_t others = 0;
    for (std::size_t i = 1; i <= half; ++i) {
      if (i != target) others += w[i - 1];
    }
    std::int64_t value = recover_weight(w, target, others);
    if (value != obs[target - 1] && value != obs[n - target]) {
      uncorrectable("recovered w_" + std::to_string(target) + " matches neither observation");
    }
    w[target - 1] = w[n - target] = value;
  } else if (checksum3(obs) != 0) {
    // Every mirror agrees, so the self-mirrored middle class was hit.
    target = half;
    std::int64_t others = 0;
    for (std::size_t i = 1; i < half; ++i) others += w[i - 1];
    std::int64_t value = recover_weight(w, half, others);
    if (std::abs(value - obs[half - 1]) != 1) {
      uncorrectable("middle class weight is off by more than one");
    }
    w[half - 1] = value;
  }

  if (target != 0) {
    if (w[target - 1] != obs[target - 1]) {
      report.corrupted_class = target;
    } else if (w[n - target] != obs[n - target]) {
      report.corrupted_class = n + 1 - target;
    }
  }
  if (checksum3(w) != 0) uncorrectable("repaired weights violate the checksum");

  try {
    report.sigma = sigma_from_weights(w);
  } catch (const CodecError& e) {
    uncorrectable(std::string("repaired weights are not a codeword profile: ") + e.what());
  }
  report.w = std::move(w);
  return report;
}

DecodeResult decode_c(const CompositionMultiset& corrupted, std::size_t k) {
  return decode_c(corrupted, params_c(k));
}

DecodeResult decode_c(const CompositionMultiset& corrupted, const CodeParamsC& params) {
  if (corrupted.length() != params.n) {
    throw CodecError(ErrorCode::DimensionMismatch,
                     "multiset has n = " + std::to_string(corrupted.length()) + ", k = " +
                         std::to_string(params.k) + " uses n = " + std::to_string(params.n));
  }
  DecodeResult result;
  result.repair = repair_weights(corrupted);
  const auto& bad = result.repair.corrupted_class;

  PairSearchConfig config;
  config.fix_orientation = true;
  config.untrusted_class = bad;
  auto candidates = pair_search(corrupted, result.repair.sigma, config);
  result.candidates = candidates.size();

  std::vector<BinaryString> survivors;
  for (auto& cand : candidates) {
    if (!is_codeword_c(cand)) continue;
    CompositionMultiset clean = fragment(cand);
    if (!bad) {
      if (clean == corrupted) survivors.push_back(std::move(cand));
      continue;
    }
    if (multiset_difference_size(clean, corrupted) != 1) continue;
    bool confined = true;
    for (std::size_t len = 1; len <= params.n && confined; ++len) {
      if (len == *bad) continue;
      auto x = clean.class_counts(len);
      auto y = corrupted.class_counts(len);
      confined = std::equal(x.begin(), x.end(), y.begin(), y.end());
    }
    if (confined) survivors.push_back(std::move(cand));
  }

  if (survivors.empty()) uncorrectable("no codeword explains the multiset with one error");
  if (survivors.size() > 1) {
    throw CodecError(ErrorCode::AmbiguousDecode,
                     survivors[0].to_string() + " and " + survivors[1].to_string() +
                         " both explain the multiset");
  }

  result.codeword = std::move(survivors.front());
  result.message = message_of_c(result.codeword, params.k);

  if (bad) {
    CompositionMultiset clean = fragment(result.codeword);
    Correction fix;
    fix.cls = *bad;
    auto x = clean.class_counts(*bad);
    auto y = corrupted.class_counts(*bad);
    for (std::size_t ones = 0; ones < x.size(); ++ones) {
      Composition c{static_cast<std::uint32_t>(*bad - ones), static_cast<std::uint32_t>(ones)};
      if (y[ones] > x[ones]) fix.observed = c;
      if (x[ones] > y[ones]) fix.corrected = c;
    }
    result.correction = fix;
  }
  return result;
}

}  // namespace compcodec
