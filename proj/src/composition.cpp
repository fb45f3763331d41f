#include "compcodec/composition.hpp"

#include "compcodec/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace compcodec {

BinaryString::BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw CodecError(ErrorCode::MalformedInput, "empty bit string");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw CodecError(ErrorCode::MalformedInput,
                       "bit " + std::to_string(i) + " is not 0 or 1");
    }
  }
}

BinaryString BinaryString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw CodecError(ErrorCode::MalformedInput,
                       "character " + std::to_string(i + 1) + ": expected '0' or '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BinaryString(std::move(bits));
}

std::size_t BinaryString::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryString BinaryString::reversed() const {
  return BinaryString(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

std::string BinaryString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

// ---------------------------------------------------------------------------

CompositionMultiset::CompositionMultiset(std::size_t n) : n_(n), classes_(n) {
  for (std::size_t len = 1; len <= n; ++len) classes_[len - 1].assign(len + 1, 0);
}

void CompositionMultiset::add(Composition c, std::size_t count) {
  auto len = c.length();
  if (len < 1 || len > n_) {
    throw CodecError(ErrorCode::InvalidArgument,
                     "composition length " + std::to_string(len) + " outside [1, " +
                         std::to_string(n_) + "]");
  }
  classes_[len - 1][c.ones] += count;
}

bool CompositionMultiset::remove(Composition c) {
  auto len = c.length();
  if (len < 1 || len > n_) return false;
  auto& slot = classes_[len - 1][c.ones];
  if (slot == 0) return false;
  --slot;
  return true;
}

std::size_t CompositionMultiset::count(Composition c) const {
  auto len = c.length();
  if (len < 1 || len > n_) return 0;
  return classes_[len - 1][c.ones];
}

std::size_t CompositionMultiset::class_size(std::size_t len) const {
  if (len < 1 || len > n_) return 0;
  std::size_t total = 0;
  for (auto k : classes_[len - 1]) total += k;
  return total;
}

std::size_t CompositionMultiset::total() const {
  std::size_t sum = 0;
  for (std::size_t len = 1; len <= n_; ++len) sum += class_size(len);
  return sum;
}

std::span<const std::size_t> CompositionMultiset::class_counts(std::size_t len) const {
  return classes_.at(len - 1);
}

std::vector<std::pair<Composition, std::size_t>> CompositionMultiset::entries(
    std::size_t len) const {
  std::vector<std::pair<Composition, std::size_t>> out;
  const auto& cls = classes_.at(len - 1);
  // zeros ascending == ones descending
  for (std::size_t ones = cls.size(); ones-- > 0;) {
    if (cls[ones] == 0) continue;
    Composition c{static_cast<std::uint32_t>(len - ones), static_cast<std::uint32_t>(ones)};
    out.emplace_back(c, cls[ones]);
  }
  return out;
}

CompositionBag CompositionMultiset::class_bag(std::size_t len) const {
  CompositionBag bag;
  for (auto& [c, k] : entries(len)) bag.emplace(c, k);
  return bag;
}

void CompositionMultiset::validate() const {
  if (n_ == 0) throw CodecError(ErrorCode::InvalidMultiset, "empty multiset (n = 0)");
  for (std::size_t len = 1; len <= n_; ++len) {
    auto size = class_size(len);
    if (size != n_ - len + 1) {
      throw CodecError(ErrorCode::InvalidMultiset,
                       "class " + std::to_string(len) + " has " + std::to_string(size) +
                           " compositions, expected " + std::to_string(n_ - len + 1));
    }
  }
}

// ---------------------------------------------------------------------------

CompositionMultiset fragment(const BinaryString& s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + s[i];

  CompositionMultiset out(n);
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t start = 0; start + len <= n; ++start) {
      auto ones = prefix[start + len] - prefix[start];
      out.add(Composition{static_cast<std::uint32_t>(len) - ones, ones});
    }
  }
  return out;
}

std::vector<std::int64_t> cumulative_weights(const CompositionMultiset& c) {
  c.validate();
  std::vector<std::int64_t> w(c.length(), 0);
  for (std::size_t len = 1; len <= c.length(); ++len) {
    auto counts = c.class_counts(len);
    std::int64_t sum = 0;
    for (std::size_t ones = 0; ones < counts.size(); ++ones) {
      sum += static_cast<std::int64_t>(ones * counts[ones]);
    }
    w[len - 1] = sum;
  }
  return w;
}

std::vector<int> sigma_from_weights(std::span<const std::int64_t> w) {
  const std::size_t n = w.size();
  if (n == 0) throw CodecError(ErrorCode::InvalidArgument, "empty weight vector");
  for (std::size_t l = 0; l < n; ++l) {
    if (w[l] != w[n - 1 - l]) {
      throw CodecError(ErrorCode::SymmetryViolation,
                       "w_" + std::to_string(l + 1) + " != w_" + std::to_string(n - l));
    }
  }

  const std::size_t half = (n + 1) / 2;
  auto at = [&](std::size_t i) -> std::int64_t { return i == 0 ? 0 : w[i - 1]; };

  std::vector<int> sigma(half, 0);
  std::int64_t consumed = 0;
  for (std::size_t i = 1; i < half; ++i) {
    std::int64_t v = 2 * at(i) - at(i - 1) - at(i + 1);
    sigma[i - 1] = static_cast<int>(v);
    consumed += v;
    if (v < 0 || v > 2) {
      throw CodecError(ErrorCode::SigmaOutOfRange,
                       "sigma_" + std::to_string(i) + " = " + std::to_string(v));
    }
  }
  std::int64_t last = w[0] - consumed;
  std::int64_t upper = (n % 2 == 1) ? 1 : 2;
  if (last < 0 || last > upper) {
    throw CodecError(ErrorCode::SigmaOutOfRange,
                     "sigma_" + std::to_string(half) + " = " + std::to_string(last));
  }
  sigma[half - 1] = static_cast<int>(last);
  return sigma;
}

std::vector<int> sigma_direct(const BinaryString& s) {
  const std::size_t n = s.size();
  std::vector<int> sigma((n + 1) / 2);
  for (std::size_t i = 0; i < n / 2; ++i) sigma[i] = s[i] + s[n - 1 - i];
  if (n % 2 == 1) sigma[n / 2] = s[n / 2];
  return sigma;
}

WeightProfile weight_profile(const CompositionMultiset& c) {
  WeightProfile p;
  p.n = c.length();
  p.w = cumulative_weights(c);
  p.sigma = sigma_from_weights(p.w);
  return p;
}

CompositionBag multiset_subtract(const CompositionBag& a, const CompositionBag& b) {
  CompositionBag out = a;
  for (const auto& [c, k] : b) {
    auto it = out.find(c);
    if (it == out.end() || it->second < k) {
      throw CodecError(ErrorCode::InconsistentMultiset,
                       "composition (" + std::to_string(c.zeros) + "," +
                           std::to_string(c.ones) + ") x" + std::to_string(k) +
                           " not contained in the minuend");
    }
    it->second -= k;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

std::size_t multiset_difference_size(const CompositionMultiset& c1,
                                     const CompositionMultiset& c2) {
  if (c1.length() != c2.length()) {
    throw CodecError(ErrorCode::DimensionMismatch,
                     "n = " + std::to_string(c1.length()) + " vs " + std::to_string(c2.length()));
  }
  std::size_t diff = 0;
  for (std::size_t len = 1; len <= c1.length(); ++len) {
    auto a = c1.class_counts(len);
    auto b = c2.class_counts(len);
    for (std::size_t ones = 0; ones < a.size(); ++ones) {
      if (a[ones] > b[ones]) diff += a[ones] - b[ones];
    }
  }
  return diff;
}

// ---------------------------------------------------------------------------
// Canonical text: "n=<int>" then "<l> <zeros> <ones> <count>" sorted by (l, zeros).

std::string serialize_text(const CompositionMultiset& c) {
  std::ostringstream out;
  out << "n=" << c.length() << '\n';
  for (std::size_t len = 1; len <= c.length(); ++len) {
    for (auto& [comp, k] : c.entries(len)) {
      out << len << ' ' << comp.zeros << ' ' << comp.ones << ' ' << k << '\n';
    }
  }
  return out.str();
}

std::string serialize_json(const CompositionMultiset& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t len = 1; len <= c.length(); ++len) {
    nlohmann::json items = nlohmann::json::array();
    for (auto& [comp, k] : c.entries(len)) items.push_back({comp.zeros, comp.ones, k});
    if (!items.empty()) classes.push_back({len, items});
  }
  nlohmann::json doc = {{"version", 1}, {"n", c.length()}, {"classes", classes}};
  return doc.dump() + "\n";
}

namespace {

[[noreturn]] void malformed(std::size_t line, std::size_t col, const std::string& msg) {
  throw CodecError(ErrorCode::MalformedInput,
                   "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                       msg);
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split_fields(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_uint(const Token& tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    malformed(line, tok.column, "expected a non-negative integer, got '" +
                                    std::string(tok.text) + "'");
  }
  return value;
}

// Guards against absurd headers allocating O(n^2) memory.
constexpr std::uint64_t kMaxLength = 1u << 16;

}  // namespace

CompositionMultiset parse_text(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  CompositionMultiset out;

  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (fields.size() != 1 || !fields[0].text.starts_with("n=")) {
        malformed(line_no, fields[0].column, "expected header 'n=<int>'");
      }
      Token value{fields[0].text.substr(2), fields[0].column + 2};
      auto n = parse_uint(value, line_no);
      if (n == 0 || n > kMaxLength) malformed(line_no, value.column, "n out of range");
      out = CompositionMultiset(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }

    if (fields.size() != 4) {
      malformed(line_no, fields.front().column,
                "expected '<l> <zeros> <ones> <count>', got " + std::to_string(fields.size()) +
                    " fields");
    }
    auto len = parse_uint(fields[0], line_no);
    auto zeros = parse_uint(fields[1], line_no);
    auto ones = parse_uint(fields[2], line_no);
    auto count = parse_uint(fields[3], line_no);
    if (len < 1 || len > out.length()) {
      malformed(line_no, fields[0].column, "class length outside [1, n]");
    }
    if (zeros + ones != len) {
      malformed(line_no, fields[1].column, "zeros + ones does not equal the class length");
    }
    if (count == 0) malformed(line_no, fields[3].column, "count must be positive");
    out.add(Composition{static_cast<std::uint32_t>(zeros), static_cast<std::uint32_t>(ones)},
            static_cast<std::size_t>(count));
    if (end == text.size()) break;
  }

  if (!have_header) malformed(line_no == 0 ? 1 : line_no, 1, "missing header 'n=<int>'");
  return out;
}

CompositionMultiset parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CodecError(ErrorCode::MalformedInput, e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) {
      throw CodecError(ErrorCode::MalformedInput, "unsupported version");
    }
    auto n = doc.at("n").get<std::uint64_t>();
    if (n == 0 || n > kMaxLength) throw CodecError(ErrorCode::MalformedInput, "n out of range");
    CompositionMultiset out(static_cast<std::size_t>(n));
    for (const auto& cls : doc.at("classes")) {
      auto len = cls.at(0).get<std::uint64_t>();
      if (len < 1 || len > n) {
        throw CodecError(ErrorCode::MalformedInput,
                         "class " + std::to_string(len) + " outside [1, n]");
      }
      for (const auto& item : cls.at(1)) {
        auto zeros = item.at(0).get<std::uint64_t>();
        auto ones = item.at(1).get<std::uint64_t>();
        auto count = item.at(2).get<std::uint64_t>();
        if (zeros + ones != len || count == 0) {
          throw CodecError(ErrorCode::MalformedInput,
                           "bad composition entry in class " + std::to_string(len));
        }
        out.add(Composition{static_cast<std::uint32_t>(zeros), static_cast<std::uint32_t>(ones)},
                static_cast<std::size_t>(count));
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw CodecError(ErrorCode::MalformedInput, e.what());
  }
}

CompositionMultiset parse_multiset(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

}  // namespace compcodec
