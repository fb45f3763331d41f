#include "compcodec/channel.hpp"
#include "compcodec/codebook_r.hpp"
#include "compcodec/ecc.hpp"
#include "compcodec/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <chrono>
#include <map>
#include <random>

using namespace compcodec;

namespace {

BinaryString bs(const std::string& text) { return BinaryString::parse(text); }

std::vector<std::uint8_t> bits(const std::string& s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

std::vector<std::int64_t> oracle_w(const std::string& s) {
  auto w = oracle::weights(s);
  return {w.begin(), w.end()};
}

// Cumulative weights read directly off a (possibly corrupted) multiset.
std::vector<std::int64_t> observed_w(const CompositionMultiset& c) {
  std::vector<std::int64_t> w(c.length());
  for (std::size_t len = 1; len <= c.length(); ++len) {
    for (auto& [comp, count] : c.entries(len)) w[len - 1] += comp.ones * count;
  }
  return w;
}

std::vector<std::string> filter_c(int n) {
  std::vector<std::string> out;
  for (auto& s : oracle::all_strings(n)) {
    if (oracle::in_ecc_code(s)) out.push_back(s);
  }
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const CodecError& e) {
    return e.code();
  }
  FAIL("expected a CodecError");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("params_c") {
  CHECK(params_c(2).n == 11);
  CHECK(params_c(5).n == 11);
  CHECK(params_c(5).capacity == 35);
  CHECK(params_c(5).m == 3);
  CHECK(params_c(6).n == 17);
  CHECK(params_c(6).capacity == oracle::binomial(13, 6));
  for (std::size_t k = 1; k <= 200; ++k) {
    auto p = params_c(k);
    REQUIRE(p.n % 6 == 5);
    REQUIRE(p.n >= 11);
    REQUIRE(p.capacity >= pow2(k));
    if (p.n > 11) REQUIRE(oracle::binomial(p.n - 10, (p.n - 11) / 2) < pow2(k));
  }
}

TEST_CASE("checksum3") {
  auto w = oracle::weights("00000100001");
  long long sum = 0;
  for (int i = 0; i < 6; ++i) sum += w[i];
  CHECK(sum == 27);
  CHECK(checksum3(bs("00000100001")) == 0);
  CHECK(checksum3(bs("00000000000")) == 0);
  for (auto& s : oracle::all_strings(11)) {
    auto flipped = s;
    flipped[5] = flipped[5] == '0' ? '1' : '0';
    REQUIRE(checksum3(bs(s)) == checksum3(bs(flipped)));
    auto ow = oracle::weights(s);
    long long total = 0;
    for (int i = 0; i < 6; ++i) total += ow[i];
    REQUIRE(checksum3(bs(s)) == total % 3);
  }
}

TEST_CASE("encode_c examples") {
  auto s = encode_c(bits("00"));
  CHECK(s.to_string() == "00000100001");
  CHECK(oracle::in_ecc_code(s.to_string()));
  CHECK(s.weight() % 2 == 0);
  CHECK(is_codeword_c(s));
  CHECK(message_of_c(s, 2) == bits("00"));
  CHECK_FALSE(is_codeword_c(bs("00000000001")));
}

TEST_CASE("S_C(11) equals the exhaustive filter and has |S_R(9)|/2 members") {
  auto expected = filter_c(11);
  CHECK(expected.size() == 35);
  CHECK(BigUint(expected.size()) * 2 == capacity_r(9));
  std::set<std::string> listed;
  for (std::uint64_t r = 0; r < 35; ++r) {
    auto c = codeword_c(11, r);
    REQUIRE(rank_c(c) == r);
    listed.insert(c.to_string());
  }
  CHECK(listed == std::set<std::string>(expected.begin(), expected.end()));
  for (auto& s : oracle::all_strings(11)) {
    REQUIRE(is_codeword_c(bs(s)) == oracle::in_ecc_code(s));
  }
  CHECK(code_of([] { codeword_c(11, 35); }) == ErrorCode::CapacityExceeded);
}

TEST_CASE("round trip and encoder totality") {
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      auto msg = bits(oracle::bits_of(v, static_cast<int>(k)));
      auto s = encode_c(msg);
      REQUIRE(oracle::in_ecc_code(s.to_string()));
      REQUIRE(message_of_c(s, k) == msg);
      auto d = decode_c(fragment(s), k);
      REQUIRE(d.message == msg);
      REQUIRE_FALSE(d.correction.has_value());
      REQUIRE_FALSE(d.repair.corrupted_class.has_value());
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t k = 1 + rng() % 32;
    std::vector<std::uint8_t> msg(k);
    for (auto& b : msg) b = rng() & 1;
    auto s = encode_c(msg);
    REQUIRE(is_codeword_c(s));
    REQUIRE(message_of_c(s, k) == msg);
  }
}

TEST_CASE("message_of_c rejects non-codewords") {
  CHECK(code_of([] { message_of_c(bs("00000000001"), 2); }) == ErrorCode::NotACodeword);
  CHECK(code_of([] { message_of_c(bs("00000100001"), 9); }) == ErrorCode::NotACodeword);
}

TEST_CASE("repair_weights hand example") {
  auto c = fragment(bs("00000100001"));
  auto corrupted = apply_error(c, {4, {4, 0}, ErrorDirection::ZeroToOne});
  CHECK(observed_w(corrupted) == std::vector<std::int64_t>{2, 3, 4, 6, 6, 7, 6, 5, 4, 3, 2});
  auto report = repair_weights(corrupted);
  CHECK(report.observed == observed_w(corrupted));
  CHECK(report.w == std::vector<std::int64_t>{2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 2});
  CHECK(report.w == oracle_w("00000100001"));
  REQUIRE(report.corrupted_class.has_value());
  CHECK(*report.corrupted_class == 4);

  auto clean = repair_weights(c);
  CHECK_FALSE(clean.corrupted_class.has_value());
  CHECK(clean.w == oracle_w("00000100001"));
}

TEST_CASE("repair_weights finds a middle-class corruption") {
  auto c = fragment(bs("00000100001"));
  for (auto& e : enumerate_error_specs(c)) {
    if (e.cls != 6) continue;
    auto report = repair_weights(apply_error(c, e));
    REQUIRE(report.corrupted_class.has_value());
    CHECK(*report.corrupted_class == 6);
    CHECK(report.w == oracle_w("00000100001"));
  }
}

TEST_CASE("decode_c hand example") {
  auto c = fragment(bs("00000100001"));
  auto corrupted = apply_error(c, {4, {4, 0}, ErrorDirection::ZeroToOne});
  auto d = decode_c(corrupted, 2);
  CHECK(d.message == bits("00"));
  CHECK(d.codeword.to_string() == "00000100001");
  REQUIRE(d.correction.has_value());
  CHECK(d.correction->cls == 4);
  CHECK(d.correction->observed == Composition{3, 1});
  CHECK(d.correction->corrected == Composition{4, 0});
}

TEST_CASE("exhaustive single errors at n = 11") {
  for (std::uint64_t r = 0; r < 35; ++r) {
    auto s = codeword_c(11, r);
    auto text = s.to_string();
    auto truth = oracle_w(text);
    auto msg = bits(oracle::bits_of(r, 5));
    auto c = fragment(s);
    for (auto& [e, corrupted] : enumerate_errors(c)) {
      auto ow = observed_w(corrupted);
      bool mirror_mismatch = false;
      for (std::size_t j = 0; j < 11; ++j) mirror_mismatch |= ow[j] != ow[10 - j];
      REQUIRE((mirror_mismatch || checksum3(ow) != 0));

      auto report = repair_weights(corrupted);
      REQUIRE(report.w == truth);
      REQUIRE(report.corrupted_class.has_value());

      if (r >= 32) continue;  // ranks past 2^5 - 1 carry no 5-bit message
      auto d = decode_c(corrupted, 5);
      REQUIRE(d.message == msg);
      REQUIRE(d.codeword == s);
      REQUIRE(d.correction.has_value());
      REQUIRE(d.correction->cls == e.cls);
      REQUIRE(d.correction->observed == e.result());
      REQUIRE(d.correction->corrected == e.target);
    }
  }
}

TEST_CASE("codewords sharing a sigma profile are at distance >= 4 at n = 11") {
  std::map<std::vector<int>, std::vector<std::string>> groups;
  for (auto& s : filter_c(11)) {
    std::vector<int> sigma;
    for (int i = 0; i < 5; ++i) sigma.push_back((s[i] - '0') + (s[10 - i] - '0'));
    sigma.push_back(s[5] - '0');
    groups[sigma].push_back(s);
  }
  int min_distance = 1 << 30;
  for (auto& [sigma, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        int d = oracle::spectrum_difference(oracle::spectrum(members[a]),
                                            oracle::spectrum(members[b]));
        min_distance = std::min(min_distance, d);
        CHECK(static_cast<int>(multiset_difference_size(fragment(bs(members[a])),
                                                        fragment(bs(members[b])))) == d);
      }
    }
  }
  CHECK(min_distance >= 4);
}

TEST_CASE("randomized single errors at larger n") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t k = 6 + rng() % 60;
    std::vector<std::uint8_t> msg(k);
    for (auto& b : msg) b = rng() & 1;
    auto s = encode_c(msg);
    auto [e, corrupted] = random_error(fragment(s), rng());
    auto d = decode_c(corrupted, k);
    REQUIRE(d.message == msg);
    REQUIRE(d.correction.has_value());
    REQUIRE(d.correction->cls == e.cls);
  }
}

TEST_CASE("decode_c failures") {
  auto c = fragment(bs("00000100001"));
  CHECK(code_of([&] { decode_c(c, 6); }) == ErrorCode::DimensionMismatch);

  // two errors in two mirrored pairs cannot be one error
  auto twice = apply_error(apply_error(c, {2, {2, 0}, ErrorDirection::ZeroToOne}), {3, {3, 0},
                                                                                   ErrorDirection::ZeroToOne});
  CHECK(code_of([&] { decode_c(twice, 2); }) == ErrorCode::Uncorrectable);
  CHECK(code_of([&] { repair_weights(twice); }) == ErrorCode::Uncorrectable);

  CHECK(code_of([&] { repair_weights(fragment(bs("0011"))); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("decode time grows no worse than cubically") {
  auto time_decode = [](std::size_t k) {
    std::mt19937_64 rng(k);
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<std::uint8_t> msg(k);
      for (auto& b : msg) b = rng() & 1;
      auto s = encode_c(msg);
      auto corrupted = random_error(fragment(s), rng()).second;
      auto start = std::chrono::steady_clock::now();
      auto d = decode_c(corrupted, k);
      auto stop = std::chrono::steady_clock::now();
      REQUIRE(d.message == msg);
      best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return std::pair{best, static_cast<double>(params_c(k).n)};
  };
  auto [t_small, n_small] = time_decode(80);
  auto [t_large, n_large] = time_decode(320);
  const double ratio = n_large / n_small;
  MESSAGE("n=" << n_small << " " << t_small << "s, n=" << n_large << " " << t_large << "s");
  CHECK(t_large <= 4.0 * ratio * ratio * ratio * t_small + 1e-3);
}
