#include "compcodec/sweep.hpp"

#include "compcodec/channel.hpp"
#include "compcodec/codebook_r.hpp"
#include "compcodec/ecc.hpp"
#include "compcodec/error.hpp"
#include "compcodec/reconstructor.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

namespace compcodec {

namespace {

struct Slot {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::vector<std::pair<std::uint64_t, std::string>> failures;  // local trial index

  void record(bool ok, std::string reproducer = {}) {
    if (ok) {
      ++successes;
    } else {
      failures.emplace_back(trials, std::move(reproducer));
    }
    ++trials;
  }
};

template <class Body>
SweepResult run_slots(std::uint64_t count, Execution exec, Body&& body) {
  std::vector<Slot> slots(count);
  const auto n = static_cast<std::int64_t>(count);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::uint64_t>(i), slots[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::uint64_t>(i), slots[i]);
  }

  SweepResult out;
  for (auto& slot : slots) {
    for (auto& [local, text] : slot.failures) out.failures.push_back({out.trials + local, text});
    out.trials += slot.trials;
    out.successes += slot.successes;
  }
  return out;
}

std::string bits_text(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = static_cast<char>('0' + bits[i]);
  return s;
}

// (k, message index) pairs for every message of every k in [k_lo, k_hi].
std::vector<std::pair<std::size_t, std::uint64_t>> message_jobs(std::size_t k_lo,
                                                                std::size_t k_hi) {
  if (k_lo < 1 || k_hi < k_lo || k_hi > 24) {
    throw CodecError(ErrorCode::InvalidArgument, "exhaustive sweeps need 1 <= k_lo <= k_hi <= 24");
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) jobs.emplace_back(k, r);
  }
  return jobs;
}

std::vector<std::uint8_t> message_bits(std::uint64_t r, std::size_t k) {
  return integer_to_bits(BigUint(r), k);
}

// One decode against every admissible error of one codeword.
void ecc_trials(std::size_t k, const std::vector<std::uint8_t>& message, Slot& slot) {
  const std::string tag = "k=" + std::to_string(k) + " message=" + bits_text(message);
  BinaryString codeword;
  try {
    codeword = encode_c(message);
  } catch (const CodecError& e) {
    slot.record(false, tag + " encode: " + e.what());
    return;
  }
  const CompositionMultiset clean = fragment(codeword);
  for (const auto& e : enumerate_error_specs(clean)) {
    try {
      auto result = decode_c(apply_error(clean, e), k);
      bool ok = result.message == message && result.correction &&
                result.correction->cls == e.cls;
      slot.record(ok, tag + " " + e.to_string() + " decoded=" + bits_text(result.message));
    } catch (const CodecError& err) {
      slot.record(false, tag + " " + e.to_string() + " " + err.what());
    }
  }
}

}  // namespace

SweepResult sweep_roundtrip(std::size_t k_lo, std::size_t k_hi, Execution exec) {
  auto jobs = message_jobs(k_lo, k_hi);
  auto out = run_slots(jobs.size(), exec, [&](std::uint64_t i, Slot& slot) {
    auto [k, r] = jobs[i];
    auto message = message_bits(r, k);
    const std::string tag = "k=" + std::to_string(k) + " message=" + bits_text(message);
    try {
      auto decoded = message_of_r(reconstruct_codeword(fragment(encode_r(message))), k);
      slot.record(decoded == message, tag + " decoded=" + bits_text(decoded));
    } catch (const CodecError& e) {
      slot.record(false, tag + " " + e.what());
    }
  });
  return out;
}

SweepResult sweep_ecc_exhaustive(std::size_t k_lo, std::size_t k_hi, Execution exec) {
  auto jobs = message_jobs(k_lo, k_hi);
  return run_slots(jobs.size(), exec, [&](std::uint64_t i, Slot& slot) {
    auto [k, r] = jobs[i];
    ecc_trials(k, message_bits(r, k), slot);
  });
}

SweepResult sweep_ecc_random(std::size_t k_lo, std::size_t k_hi, std::uint64_t trials,
                             std::uint64_t seed, Execution exec) {
  if (k_lo < 1 || k_hi < k_lo) throw CodecError(ErrorCode::InvalidArgument, "bad k range");
  const std::uint64_t span = k_hi - k_lo + 1;
  return run_slots(trials, exec, [&](std::uint64_t t, Slot& slot) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const std::size_t k = k_lo + static_cast<std::size_t>(t % span);
    std::vector<std::uint8_t> message(k);
    for (std::size_t b = 0; b < k; ++b) message[b] = derive_seed(trial_seed, b + 1) & 1;
    const std::string tag = "seed=" + std::to_string(seed) + " trial=" + std::to_string(t) +
                            " k=" + std::to_string(k) + " message=" + bits_text(message);
    try {
      auto clean = fragment(encode_c(message));
      auto [e, corrupted] = random_error(clean, trial_seed);
      auto result = decode_c(corrupted, k);
      bool ok = result.message == message && result.correction && result.correction->cls == e.cls;
      slot.record(ok, tag + " " + e.to_string());
    } catch (const CodecError& err) {
      slot.record(false, tag + " " + err.what());
    }
  });
}

SweepResult sweep_uniqueness(std::size_t n, Execution exec) {
  if (n < 1 || n > kOracleLimit) throw CodecError(ErrorCode::TooLarge, "n outside oracle range");
  const std::uint64_t count = std::uint64_t{1} << n;
  auto out = run_slots(count, exec, [&](std::uint64_t i, Slot& slot) {
    BinaryString s(integer_to_bits(BigUint(i), n));
    slot.record(is_unique_up_to_reversal(s), s.to_string());
  });
  out.metrics["non_unique"] = out.failure_count();
  return out;
}

SweepResult sweep_uniqueness_random(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                    Execution exec) {
  if (n < 1 || n > kOracleLimit) throw CodecError(ErrorCode::TooLarge, "n outside oracle range");
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  auto out = run_slots(samples, exec, [&](std::uint64_t t, Slot& slot) {
    BinaryString s(integer_to_bits(BigUint(derive_seed(seed, t) & mask), n));
    slot.record(is_unique_up_to_reversal(s), s.to_string());
  });
  out.metrics["non_unique"] = out.failure_count();
  return out;
}

SweepResult sweep_distance(std::size_t n, std::size_t min_distance, Execution exec) {
  if (n < 5 || n % 2 == 0 || n > kEnumerateLimit) {
    throw CodecError(ErrorCode::InvalidArgument, "distance check needs odd 5 <= n <= 24");
  }
  const std::size_t m = (n - 5) / 2;
  const BigUint total = ballot_count(m);

  std::map<std::vector<int>, std::vector<BinaryString>> groups;
  for (BigUint r = 0; r < total; ++r) {
    BinaryString s = codeword_c(n, r);
    groups[sigma_direct(s)].push_back(std::move(s));
  }
  std::vector<std::pair<const BinaryString*, const BinaryString*>> pairs;
  for (const auto& [sigma, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(&members[a], &members[b]);
    }
  }

  std::vector<std::size_t> distances(pairs.size(), 0);
  auto out = run_slots(pairs.size(), exec, [&](std::uint64_t i, Slot& slot) {
    const auto& [x, y] = pairs[i];
    std::size_t d = multiset_difference_size(fragment(*x), fragment(*y));
    distances[i] = d;
    slot.record(d >= min_distance,
                x->to_string() + " " + y->to_string() + " distance=" + std::to_string(d));
  });
  out.metrics["codewords"] = total.convert_to<std::uint64_t>();
  out.metrics["groups"] = groups.size();
  out.metrics["pairs"] = pairs.size();
  if (!distances.empty()) {
    out.metrics["min_distance"] = *std::min_element(distances.begin(), distances.end());
  }
  return out;
}

SweepResult redundancy_table(std::size_t k_lo, std::size_t k_hi, int bound_r, int bound_c) {
  if (k_lo < 1 || k_hi < k_lo) throw CodecError(ErrorCode::InvalidArgument, "bad k range");
  // n - k <= 0.5 log2 k + b  <=>  e = n - k - b <= 0  or  4^e <= k, exactly.
  auto within = [](std::size_t n, std::size_t k, int bound) {
    long long e = static_cast<long long>(n) - static_cast<long long>(k) - bound;
    if (e <= 0) return true;
    return e < 31 && (std::uint64_t{1} << (2 * e)) <= k;
  };

  SweepResult out;
  double max_r = -1e300;
  double max_c = -1e300;
  std::size_t arg_r = 0;
  std::size_t arg_c = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const double half_log = 0.5 * std::log2(static_cast<double>(k));
    const auto pr = params_r(k);
    const auto pc = params_c(k);
    const double excess_r = static_cast<double>(pr.n - k) - half_log;
    const double excess_c = static_cast<double>(pc.n - k) - half_log;
    if (excess_r > max_r) {
      max_r = excess_r;
      arg_r = k;
    }
    if (excess_c > max_c) {
      max_c = excess_c;
      arg_c = k;
    }
    ++out.trials;
    if (within(pr.n, k, bound_r) && within(pc.n, k, bound_c)) {
      ++out.successes;
    } else {
      out.failures.push_back({out.trials - 1, "k=" + std::to_string(k) +
                                                  " n_r=" + std::to_string(pr.n) +
                                                  " n_c=" + std::to_string(pc.n)});
    }
    rows.push_back({k, pr.n, pc.n});
  }
  out.metrics["max_excess_r"] = max_r;
  out.metrics["argmax_excess_r"] = arg_r;
  out.metrics["max_excess_c"] = max_c;
  out.metrics["argmax_excess_c"] = arg_c;
  out.metrics["rows"] = std::move(rows);
  return out;
}

void configure_threads_from_env() {
  if (const char* env = std::getenv("COMPOSITION_CODEC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) omp_set_num_threads(static_cast<int>(v));
  }
}

int worker_count() { return omp_get_max_threads(); }

nlohmann::json ExperimentReport::to_json(bool with_timing) const {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : result.failures) {
    failures.push_back({{"trial", f.trial}, {"reproducer", f.reproducer}});
  }
  nlohmann::json doc = {
      {"mode", mode},
      {"parameters", parameters},
      {"counters",
       {{"trials", result.trials},
        {"successes", result.successes},
        {"failures", result.failure_count()}}},
      {"failures", failures},
      {"metrics", result.metrics},
  };
  if (with_timing) doc["wall_time_s"] = wall_seconds;
  return doc;
}

}  // namespace compcodec
