#pragma once

// Exhaustive and randomized verification sweeps. Every kernel runs either as
// an OpenMP parallel loop or as the plain serial loop it is checked against;
// both produce identical results because each trial writes only its own slot
// and per-trial seeds come from derive_seed(master, trial).

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace compcodec {

enum class Execution { Serial, Parallel };

struct Failure {
  std::uint64_t trial = 0;
  std::string reproducer;

  bool operator==(const Failure&) const = default;
};

struct SweepResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::vector<Failure> failures;  // sorted by trial
  nlohmann::json metrics = nlohmann::json::object();

  std::uint64_t failure_count() const noexcept { return trials - successes; }
};

/// encode_r -> fragment -> reconstruct_codeword -> message_of_r for every
/// message of every k in [k_lo, k_hi].
SweepResult sweep_roundtrip(std::size_t k_lo, std::size_t k_hi, Execution exec);

/// Every message of every k in [k_lo, k_hi] under every admissible single
/// composition error; success = message recovered and corrupted class named.
SweepResult sweep_ecc_exhaustive(std::size_t k_lo, std::size_t k_hi, Execution exec);

/// Random messages and random single errors, `trials` in total.
SweepResult sweep_ecc_random(std::size_t k_lo, std::size_t k_hi, std::uint64_t trials,
                             std::uint64_t seed, Execution exec);

/// All 2^n strings; failures are the strings not unique up to reversal.
SweepResult sweep_uniqueness(std::size_t n, Execution exec);
SweepResult sweep_uniqueness_random(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                    Execution exec);

/// Pairs of distinct S_C(n) codewords sharing a sigma profile; failure when
/// their multisets differ in fewer than `min_distance` compositions.
SweepResult sweep_distance(std::size_t n, std::size_t min_distance, Execution exec);

/// Redundancy n - k of both codes for k in [k_lo, k_hi] against
/// 0.5 log2 k + bound_r (reconstruction) and 0.5 log2 k + bound_c (ecc).
SweepResult redundancy_table(std::size_t k_lo, std::size_t k_hi, int bound_r, int bound_c);

/// Applies COMPOSITION_CODEC_THREADS, when set, to the OpenMP pool.
void configure_threads_from_env();
int worker_count();

struct ExperimentReport {
  std::string mode;
  nlohmann::json parameters = nlohmann::json::object();
  SweepResult result;
  double wall_seconds = 0.0;

  /// Wall time is omitted unless requested so that reports are reproducible.
  nlohmann::json to_json(bool with_timing = false) const;
};

}  // namespace compcodec
