#include "compcodec/channel.hpp"

#include "compcodec/error.hpp"

#include <random>

namespace compcodec {

bool ErrorSpec::admissible() const noexcept {
  if (target.length() != cls) return false;
  return direction == ErrorDirection::ZeroToOne ? target.zeros >= 1 : target.ones >= 1;
}

Composition ErrorSpec::result() const noexcept {
  if (direction == ErrorDirection::ZeroToOne) return {target.zeros - 1, target.ones + 1};
  return {target.zeros + 1, target.ones - 1};
}

std::string ErrorSpec::to_string() const {
  return "class=" + std::to_string(cls) + " from=" + std::to_string(target.zeros) + "^0" +
         std::to_string(target.ones) + "^1 dir=" +
         (direction == ErrorDirection::ZeroToOne ? "01" : "10");
}

CompositionMultiset apply_error(const CompositionMultiset& c, const ErrorSpec& e) {
  if (!e.admissible()) throw CodecError(ErrorCode::InvalidError, "inadmissible " + e.to_string());
  CompositionMultiset out = c;
  if (!out.remove(e.target)) {
    throw CodecError(ErrorCode::InvalidError, "target absent: " + e.to_string());
  }
  out.add(e.result());
  return out;
}

std::vector<ErrorSpec> enumerate_error_specs(const CompositionMultiset& c) {
  std::vector<ErrorSpec> out;
  for (std::size_t len = 1; len <= c.length(); ++len) {
    for (auto& [comp, count] : c.entries(len)) {
      for (auto dir : {ErrorDirection::ZeroToOne, ErrorDirection::OneToZero}) {
        ErrorSpec e{len, comp, dir};
        if (e.admissible()) out.push_back(e);
      }
    }
  }
  return out;
}

std::vector<std::pair<ErrorSpec, CompositionMultiset>> enumerate_errors(
    const CompositionMultiset& c) {
  std::vector<std::pair<ErrorSpec, CompositionMultiset>> out;
  for (const auto& e : enumerate_error_specs(c)) out.emplace_back(e, apply_error(c, e));
  return out;
}

std::pair<ErrorSpec, CompositionMultiset> random_error(const CompositionMultiset& c,
                                                       std::uint64_t seed,
                                                       std::size_t only_class) {
  auto specs = enumerate_error_specs(c);
  if (only_class != 0) {
    std::erase_if(specs, [&](const ErrorSpec& e) { return e.cls != only_class; });
  }
  if (specs.empty()) throw CodecError(ErrorCode::NoAdmissibleError, "no admissible error");

  // Rejection sampling keeps the draw identical across standard libraries.
  std::mt19937_64 rng(derive_seed(seed, 0));
  const std::uint64_t size = specs.size();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % size;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  const ErrorSpec& e = specs[draw % size];
  return {e, apply_error(c, e)};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace compcodec
