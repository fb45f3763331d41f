#include "compcodec/cli.hpp"

#include "compcodec/channel.hpp"
#include "compcodec/codebook_r.hpp"
#include "compcodec/composition.hpp"
#include "compcodec/ecc.hpp"
#include "compcodec/error.hpp"
#include "compcodec/reconstructor.hpp"
#include "compcodec/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace compcodec::cli {

namespace {

struct Options {
  std::size_t k = 0;
  bool ecc = false;
  std::string message;
  std::string in_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t cls = 0;
  bool json = false;
  bool timing = false;
  std::string k_range;
  std::uint64_t trials = 0;
  std::size_t max_n = 0;
  std::string mode;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw CodecError(ErrorCode::InvalidArgument, "cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CodecError(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

std::string trim(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::string bits_text(std::span<const std::uint8_t> bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = static_cast<char>('0' + bits[i]);
  return s;
}

// BITS ("0110") or HEX ("0x1f"); with k given, hex keeps the low k bits.
std::vector<std::uint8_t> parse_message(const std::string& text, std::size_t k) {
  if (text.starts_with("0x") || text.starts_with("0X")) {
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 2; i < text.size(); ++i) {
      char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      int v;
      if (ch >= '0' && ch <= '9') {
        v = ch - '0';
      } else if (ch >= 'a' && ch <= 'f') {
        v = ch - 'a' + 10;
      } else {
        throw CodecError(ErrorCode::MalformedInput, "bad hex digit in message");
      }
      for (int b = 3; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
    if (bits.empty()) throw CodecError(ErrorCode::MalformedInput, "empty hex message");
    if (k == 0) return bits;
    if (k > bits.size()) bits.insert(bits.begin(), k - bits.size(), 0);
    std::size_t drop = bits.size() - k;
    if (std::any_of(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(drop),
                    [](std::uint8_t b) { return b != 0; })) {
      throw CodecError(ErrorCode::InvalidArgument, "hex message does not fit in k bits");
    }
    return {bits.begin() + static_cast<std::ptrdiff_t>(drop), bits.end()};
  }
  auto s = BinaryString::parse(text);
  if (k != 0 && s.size() != k) {
    throw CodecError(ErrorCode::InvalidArgument, "message has " + std::to_string(s.size()) +
                                                     " bits but --k is " + std::to_string(k));
  }
  return {s.bits().begin(), s.bits().end()};
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, std::size_t lo,
                                                std::size_t hi) {
  if (text.empty()) return {lo, hi};
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CodecError(ErrorCode::InvalidArgument, "--k-range expects A..B");
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentMultiset:
    case ErrorCode::NotACodeword:
    case ErrorCode::Uncorrectable:
    case ErrorCode::AmbiguousDecode:
      return kDecodeFailure;
    case ErrorCode::NoValidPadding:
      return kInternal;
    default:
      return kValidation;
  }
}

std::string multiset_text(const CompositionMultiset& c, bool json) {
  return json ? serialize_json(c) : serialize_text(c);
}

// ---------------------------------------------------------------------------

int cmd_params(const Options& o, std::ostream& out) {
  nlohmann::json doc;
  if (o.ecc) {
    auto p = params_c(o.k);
    doc = {{"code", "ecc"}, {"k", p.k}, {"n", p.n}, {"redundancy", p.n - p.k},
           {"capacity", p.capacity.str()}};
  } else {
    auto p = params_r(o.k);
    doc = {{"code", "reconstruction"}, {"k", p.k}, {"n", p.n}, {"redundancy", p.n - p.k},
           {"capacity", p.capacity.str()}};
  }
  if (o.json) {
    out << doc.dump() << '\n';
  } else {
    out << "k=" << doc["k"] << " n=" << doc["n"] << " redundancy=" << doc["redundancy"]
        << " capacity=" << doc["capacity"].get<std::string>() << '\n';
  }
  return kOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  auto message = parse_message(o.message, o.k);
  BinaryString codeword = o.ecc ? encode_c(message) : encode_r(message);
  write_output(o.out_path, codeword.to_string() + "\n", out);
  return kOk;
}

int cmd_fragment(const Options& o, std::istream& in, std::ostream& out) {
  std::string text = o.message.empty() ? trim(read_input(o.in_path, in)) : o.message;
  auto s = BinaryString::parse(text);
  write_output(o.out_path, multiset_text(fragment(s), o.json), out);
  return kOk;
}

int cmd_corrupt(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto c = parse_multiset(read_input(o.in_path, in));
  c.validate();
  auto [spec, corrupted] = random_error(c, o.seed, o.cls);
  err << spec.to_string() << '\n';
  write_output(o.out_path, multiset_text(corrupted, o.json), out);
  return kOk;
}

int cmd_decode(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto c = parse_multiset(read_input(o.in_path, in));
  c.validate();
  nlohmann::json doc;
  if (o.ecc) {
    auto result = decode_c(c, o.k);
    doc = {{"message", bits_text(result.message)}, {"codeword", result.codeword.to_string()}};
    if (result.correction) {
      const auto& fix = *result.correction;
      doc["corrected_class"] = fix.cls;
      doc["observed"] = {fix.observed.zeros, fix.observed.ones};
      doc["corrected"] = {fix.corrected.zeros, fix.corrected.ones};
      if (!o.json) {
        err << "corrected class " << fix.cls << ": (" << fix.observed.zeros << ","
            << fix.observed.ones << ") -> (" << fix.corrected.zeros << "," << fix.corrected.ones
            << ")\n";
      }
    } else {
      doc["corrected_class"] = nullptr;
      if (!o.json) err << "no error detected\n";
    }
  } else {
    auto s = reconstruct_codeword(c);
    doc = {{"message", bits_text(message_of_r(s, o.k))}, {"codeword", s.to_string()}};
  }
  if (o.json) {
    write_output(o.out_path, doc.dump() + "\n", out);
  } else {
    write_output(o.out_path, doc["message"].get<std::string>() + "\n", out);
  }
  return kOk;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out) {
  auto c = parse_multiset(read_input(o.in_path, in));
  auto found = backtrack_all(c, o.max_n == 0 ? kOracleLimit : o.max_n);
  std::string text;
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : found) list.push_back(s.to_string());
    text = nlohmann::json{{"n", c.length()}, {"strings", list}}.dump() + "\n";
  } else {
    for (const auto& s : found) text += s.to_string() + "\n";
  }
  write_output(o.out_path, text, out);
  return found.empty() ? kDecodeFailure : kOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentReport report;
  report.mode = o.mode;
  const auto start = std::chrono::steady_clock::now();
  const Execution exec = Execution::Parallel;

  if (o.mode == "roundtrip") {
    auto [lo, hi] = parse_range(o.k_range, 1, 10);
    report.parameters = {{"k_lo", lo}, {"k_hi", hi}};
    report.result = sweep_roundtrip(lo, hi, exec);
  } else if (o.mode == "ecc_sweep") {
    auto [lo, hi] = parse_range(o.k_range, 1, 5);
    report.parameters = {{"k_lo", lo}, {"k_hi", hi}};
    if (o.trials == 0) {
      report.parameters["exhaustive"] = true;
      report.result = sweep_ecc_exhaustive(lo, hi, exec);
    } else {
      report.parameters["trials"] = o.trials;
      report.parameters["seed"] = o.seed;
      report.result = sweep_ecc_random(lo, hi, o.trials, o.seed, exec);
    }
  } else if (o.mode == "redundancy_table") {
    auto [lo, hi] = parse_range(o.k_range, 1, 4096);
    report.parameters = {{"k_lo", lo}, {"k_hi", hi}, {"bound_r", 6}, {"bound_c", 12}};
    report.result = redundancy_table(lo, hi, 6, 12);
  } else if (o.mode == "distance_check") {
    std::size_t n = o.max_n == 0 ? 11 : o.max_n;
    report.parameters = {{"n", n}, {"min_distance", 4}};
    report.result = sweep_distance(n, 4, exec);
  } else if (o.mode == "uniqueness") {
    std::size_t n = o.max_n == 0 ? 7 : o.max_n;
    report.parameters = {{"n", n}};
    if (o.trials == 0) {
      report.result = sweep_uniqueness(n, exec);
    } else {
      report.parameters["samples"] = o.trials;
      report.parameters["seed"] = o.seed;
      report.result = sweep_uniqueness_random(n, o.trials, o.seed, exec);
    }
  } else {
    throw CodecError(ErrorCode::InvalidArgument, "unknown experiment mode '" + o.mode + "'");
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (o.json) {
    text = report.to_json(o.timing).dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "mode=" << report.mode << " trials=" << report.result.trials
      << " successes=" << report.result.successes
      << " failures=" << report.result.failure_count() << '\n';
    for (auto& [key, value] : report.result.metrics.items()) {
      if (key == "rows") continue;
      s << key << "=" << value.dump() << '\n';
    }
    for (std::size_t i = 0; i < report.result.failures.size() && i < 20; ++i) {
      const auto& f = report.result.failures[i];
      s << "failure trial=" << f.trial << " " << f.reproducer << '\n';
    }
    if (o.timing) s << "wall_time_s=" << report.wall_seconds << '\n';
    text = s.str();
  }
  write_output(o.out_path, text, out);
  return report.result.failure_count() == 0 ? kOk : kDecodeFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Composition-multiset reconstruction and error-correction codec",
               "composition-codec"};
  app.require_subcommand(1);

  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", o.k, "message length in bits")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", o.in_path, "input file (default stdin)");
    sub->add_option("--out", o.out_path, "output file (default stdout)");
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* params = app.add_subcommand("params", "code length and capacity for k bits");
  add_k(params, true);
  params->add_flag("--ecc", o.ecc, "single-error-correcting code");
  params->add_flag("--json", o.json, "JSON output");

  auto* encode = app.add_subcommand("encode", "encode a message into a codeword");
  add_k(encode, false);
  encode->add_flag("--ecc", o.ecc, "single-error-correcting code");
  encode->add_option("--message", o.message, "BITS or 0xHEX")->required();
  encode->add_option("--out", o.out_path, "output file (default stdout)");

  auto* frag = app.add_subcommand("fragment", "composition multiset of a bit string");
  add_io(frag);
  frag->add_option("--message", o.message, "bit string (instead of --in)");

  auto* corrupt = app.add_subcommand("corrupt", "inject one random composition error");
  add_io(corrupt);
  corrupt->add_option("--seed", o.seed, "random seed");
  corrupt->add_option("--class", o.cls, "restrict the error to this class");

  auto* decode = app.add_subcommand("decode", "recover the message from a multiset");
  add_k(decode, true);
  add_io(decode);
  decode->add_flag("--ecc", o.ecc, "single-error-correcting code");

  auto* recon = app.add_subcommand("reconstruct", "all strings with the given multiset");
  add_io(recon);
  recon->add_option("--max-n", o.max_n, "oracle length guard");

  auto* exp = app.add_subcommand("experiment", "verification sweeps");
  exp->add_option("mode", o.mode,
                  "roundtrip | ecc_sweep | redundancy_table | distance_check | uniqueness")
      ->required();
  exp->add_option("--k-range", o.k_range, "A..B");
  exp->add_option("--trials", o.trials, "random trials (0 = exhaustive)");
  exp->add_option("--seed", o.seed, "master seed");
  exp->add_option("--max-n", o.max_n, "string length for distance_check / uniqueness");
  exp->add_flag("--timing", o.timing, "include wall time");
  exp->add_option("--out", o.out_path, "output file (default stdout)");
  exp->add_flag("--json", o.json, "JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (params->parsed()) return cmd_params(o, out);
    if (encode->parsed()) return cmd_encode(o, out);
    if (frag->parsed()) return cmd_fragment(o, in, out);
    if (corrupt->parsed()) return cmd_corrupt(o, in, out, err);
    if (decode->parsed()) return cmd_decode(o, in, out, err);
    if (recon->parsed()) return cmd_reconstruct(o, in, out);
    if (exp->parsed()) return cmd_experiment(o, out);
  } catch (const CodecError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace compcodec::cli
