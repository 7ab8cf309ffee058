#include "lext/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

namespace lext::oeis {

namespace fs = std::filesystem;

std::string_view source_name(Source source) {
  switch (source) {
    case Source::network: return "network";
    case Source::cache: return "cache";
    case Source::fixture: return "fixture";
  }
  return "?";
}

bool is_valid_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

namespace {

void require_id(std::string_view id) {
  if (!is_valid_id(id))
    throw FormatError("malformed OEIS id '" + std::string(id) + "' (expected A + 6 digits)");
}

bool parse_integer(std::string_view token, BigInt& out) {
  std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  out = BigInt(std::string(token[0] == '+' ? token.substr(1) : token));
  return true;
}

}  // namespace

std::string bfile_name(std::string_view id) {
  require_id(id);
  return "b" + std::string(id.substr(1)) + ".txt";
}

Sequence parse_bfile(std::string_view id, std::string_view text, Source source) {
  require_id(id);
  Sequence seq;
  seq.id = std::string(id);
  seq.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_index = false;
  BigInt expected_index;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_token, value_token, extra;
    fields >> index_token >> value_token;
    if (value_token.empty()) throw ParseError("expected 'index value', got '" + line + "'", line_no);
    if (fields >> extra && extra[0] != '#')
      throw ParseError("trailing data in '" + line + "'", line_no);
    BigInt index, value;
    if (!parse_integer(index_token, index)) throw ParseError("bad index '" + index_token + "'", line_no);
    if (!parse_integer(value_token, value)) throw ParseError("bad value '" + value_token + "'", line_no);
    if (!have_index) {
      seq.offset = index.convert_to<long>();
      have_index = true;
    } else if (index != expected_index) {
      throw ParseError("index " + index.str() + " out of sequence, expected " + expected_index.str(),
                       line_no);
    }
    expected_index = index + 1;
    seq.terms.push_back(std::move(value));
  }
  if (seq.terms.empty()) throw ParseError("b-file for " + seq.id + " has no terms", line_no);
  return seq;
}

Fetcher https_fetcher(std::chrono::seconds timeout) {
  return [timeout](std::string_view id) -> std::optional<std::string> {
    httplib::SSLClient client("oeis.org");
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_follow_location(true);
    const std::string path = "/" + std::string(id) + "/" + bfile_name(id);
    auto response = client.Get(path);
    if (!response || response->status != 200) return std::nullopt;
    return response->body;
  };
}

ClientOptions default_options() {
  ClientOptions options;
  const char* env = std::getenv("OEIS_CACHE_DIR");
  options.cache_dir = env && *env ? fs::path(env) : fs::path(LEXT_DEFAULT_CACHE_DIR);
  options.fixture_dir = LEXT_FIXTURE_DIR;
  options.fetcher = https_fetcher();
  return options;
}

Client::Client(ClientOptions options) : options_(std::move(options)) {}

std::optional<Sequence> Client::load(const fs::path& path, std::string_view id,
                                     Source source) const {
  std::error_code ec;
  if (path.empty() || !fs::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  std::ostringstream body;
  body << in.rdbuf();
  try {
    return parse_bfile(id, body.str(), source);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

void Client::store(std::string_view id, const std::string& body) const {
  if (options_.cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(options_.cache_dir, ec);
  const fs::path target = options_.cache_dir / bfile_name(id);
  const fs::path temp = target.string() + ".part";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << body;
  }
  fs::rename(temp, target, ec);
}

namespace {

void compare_with_fixture(Sequence& seq, const std::optional<Sequence>& fixture) {
  if (!fixture) return;
  const long lo = std::max(seq.offset, fixture->offset);
  const long hi = std::min(seq.offset + static_cast<long>(seq.terms.size()),
                           fixture->offset + static_cast<long>(fixture->terms.size()));
  for (long index = lo; index < hi; ++index) {
    const auto& a = seq.terms[static_cast<std::size_t>(index - seq.offset)];
    const auto& b = fixture->terms[static_cast<std::size_t>(index - fixture->offset)];
    if (a != b) {
      seq.warnings.push_back(seq.id + " differs from the bundled fixture at index " +
                             std::to_string(index) + ": " + a.str() + " vs " + b.str());
      return;
    }
  }
}

}  // namespace

Sequence Client::fetch(std::string_view id) const {
  const std::string file = bfile_name(id);
  const fs::path fixture_path =
      options_.fixture_dir.empty() ? fs::path() : options_.fixture_dir / file;
  const fs::path cache_path = options_.cache_dir.empty() ? fs::path() : options_.cache_dir / file;

  if (auto cached = load(cache_path, id, Source::cache)) {
    compare_with_fixture(*cached, load(fixture_path, id, Source::fixture));
    return *cached;
  }
  if (!options_.offline && options_.fetcher) {
    if (auto body = options_.fetcher(id)) {
      Sequence seq = parse_bfile(id, *body, Source::network);
      store(id, *body);
      compare_with_fixture(seq, load(fixture_path, id, Source::fixture));
      return seq;
    }
  }
  if (auto fixture = load(fixture_path, id, Source::fixture)) return *fixture;
  throw UnavailableError(std::string(id) + " unavailable: no cached copy, " +
                         (options_.offline ? "offline mode" : "network unreachable") +
                         ", and no bundled fixture");
}

Alignment align_and_compare(std::span<const BigInt> computed, const Sequence& sequence,
                            std::size_t min_overlap, int max_shift) {
  if (computed.empty()) throw ParameterError("computed sequence is empty");
  if (min_overlap < 4) throw ParameterError("min_overlap must be >= 4");
  const auto c_len = static_cast<long>(computed.size());
  const auto t_len = static_cast<long>(sequence.terms.size());

  std::vector<Alignment> exact;
  Alignment best;
  bool have_best = false;
  for (int d = -max_shift; d <= max_shift; ++d) {
    const long lo = std::max(0L, -static_cast<long>(d));
    const long hi = std::min(c_len, t_len - d);
    if (hi - lo < static_cast<long>(min_overlap)) continue;
    Alignment a;
    a.shift = d;
    a.first_index = sequence.offset + d;
    a.overlap = static_cast<std::size_t>(hi - lo);
    long first_miss = -1;
    for (long i = lo; i < hi; ++i) {
      if (computed[static_cast<std::size_t>(i)] == sequence.terms[static_cast<std::size_t>(i + d)])
        ++a.matches;
      else if (first_miss < 0)
        first_miss = i;
    }
    if (a.matches == a.overlap) {
      exact.push_back(a);
    } else {
      a.detail = "first mismatch at computed[" + std::to_string(first_miss) + "]: " +
                 computed[static_cast<std::size_t>(first_miss)].str() + " vs a(" +
                 std::to_string(sequence.offset + first_miss + d) + ") = " +
                 sequence.terms[static_cast<std::size_t>(first_miss + d)].str();
    }
    if (!have_best || a.matches > best.matches) {
      best = a;
      have_best = true;
    }
  }

  if (exact.size() == 1) {
    Alignment a = exact.front();
    a.passed = true;
    a.detail = std::to_string(a.overlap) + " terms agree; computed[0] <-> a(" +
               std::to_string(a.first_index) + ")";
    return a;
  }
  if (exact.size() > 1) {
    Alignment a = exact.front();
    a.detail = "ambiguous: " + std::to_string(exact.size()) + " shifts match";
    return a;
  }
  if (!have_best) {
    best.detail = "no shift gives " + std::to_string(min_overlap) + " overlapping terms";
    return best;
  }
  best.detail = "no exact alignment; best shift " + std::to_string(best.shift) + " matches " +
                std::to_string(best.matches) + "/" + std::to_string(best.overlap) + ", " +
                best.detail;
  return best;
}

}  // namespace lext::oeis
