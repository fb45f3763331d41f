#include "compcodec/sweep.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace compcodec;

namespace {

void check_same(const SweepResult& a, const SweepResult& b) {
  CHECK(a.trials == b.trials);
  CHECK(a.successes == b.successes);
  CHECK(a.failures == b.failures);
  CHECK(a.metrics == b.metrics);
}

}  // namespace

TEST_CASE("parallel sweeps equal their serial reference") {
  // oversubscribe so the parallel path really interleaves
  setenv("COMPOSITION_CODEC_THREADS", "4", 1);
  configure_threads_from_env();
  CHECK(worker_count() == 4);
  check_same(sweep_roundtrip(1, 9, Execution::Serial), sweep_roundtrip(1, 9, Execution::Parallel));
  check_same(sweep_ecc_exhaustive(1, 5, Execution::Serial),
             sweep_ecc_exhaustive(1, 5, Execution::Parallel));
  check_same(sweep_ecc_random(6, 40, 500, 42, Execution::Serial),
             sweep_ecc_random(6, 40, 500, 42, Execution::Parallel));
  check_same(sweep_uniqueness(9, Execution::Serial), sweep_uniqueness(9, Execution::Parallel));
  check_same(sweep_uniqueness_random(10, 300, 0, Execution::Serial),
             sweep_uniqueness_random(10, 300, 0, Execution::Parallel));
  check_same(sweep_distance(11, 4, Execution::Serial), sweep_distance(11, 4, Execution::Parallel));
}

TEST_CASE("roundtrip sweep counts every message") {
  auto r = sweep_roundtrip(1, 8, Execution::Parallel);
  CHECK(r.trials == (1u << 9) - 2);
  CHECK(r.failure_count() == 0);
}

TEST_CASE("ecc exhaustive sweep has no failures") {
  auto r = sweep_ecc_exhaustive(1, 5, Execution::Parallel);
  CHECK(r.trials > 0);
  CHECK(r.failure_count() == 0);
  CHECK(r.failures.empty());
}

TEST_CASE("uniqueness sweep reports the non-unique strings") {
  auto seven = sweep_uniqueness(7, Execution::Parallel);
  CHECK(seven.trials == 128);
  CHECK(seven.failure_count() == 0);

  auto eight = sweep_uniqueness(8, Execution::Parallel);
  CHECK(eight.trials == 256);
  CHECK(eight.metrics["non_unique"] == 4);
  REQUIRE(eight.failures.size() == 4);
  for (auto& f : eight.failures) CHECK(!f.reproducer.empty());
}

TEST_CASE("distance sweep at n = 11") {
  auto r = sweep_distance(11, 4, Execution::Parallel);
  CHECK(r.metrics["codewords"] == 35);
  CHECK(r.failure_count() == 0);
  CHECK(r.metrics["min_distance"].get<int>() >= 4);
}

TEST_CASE("redundancy table against a direct computation") {
  auto r = redundancy_table(1, 200, 6, 12);
  CHECK(r.trials == 200);
  auto rows = r.metrics["rows"];
  REQUIRE(rows.size() == 200);
  double max_r = -1e9;
  for (std::size_t k = 1; k <= 200; ++k) {
    // smallest n with capacity >= 2^k, capacity from binomials
    std::size_t n = k + 1;
    auto cap = [](std::size_t len) -> oracle::Big {
      if (len % 2 == 0) return oracle::binomial(static_cast<int>(len) - 1, static_cast<int>(len) / 2 - 1);
      return 2 * oracle::binomial(static_cast<int>(len) - 2, static_cast<int>(len - 3) / 2);
    };
    while (cap(n) < (oracle::Big(1) << k)) ++n;
    REQUIRE(rows[k - 1][0] == k);
    REQUIRE(rows[k - 1][1] == n);
    max_r = std::max(max_r, static_cast<double>(n - k) - 0.5 * std::log2(static_cast<double>(k)));
  }
  CHECK(r.metrics["max_excess_r"].get<double>() == doctest::Approx(max_r).epsilon(1e-12));
  CHECK(r.failure_count() == 0);
}

TEST_CASE("reports are reproducible without timing") {
  ExperimentReport a{"uniqueness", {{"n", 8}}, sweep_uniqueness(8, Execution::Serial), 1.0};
  ExperimentReport b{"uniqueness", {{"n", 8}}, sweep_uniqueness(8, Execution::Parallel), 2.0};
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK_FALSE(a.to_json().contains("wall_time_s"));
  CHECK(a.to_json(true).contains("wall_time_s"));
}
