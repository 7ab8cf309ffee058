#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lext/bigint.hpp"
#include "lext/errors.hpp"

namespace lext::oeis {

/// An id that is not "A" followed by six digits.
class FormatError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A malformed b-file line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// No cached copy, no network (or offline mode), and no bundled fixture.
class UnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Source { network, cache, fixture };
std::string_view source_name(Source source);

struct Sequence {
  std::string id;
  long offset = 0;            // index of terms[0]
  std::vector<BigInt> terms;  // nonempty
  Source source = Source::fixture;
  /// Disagreements noticed while loading (e.g. fixture vs. fetched terms).
  std::vector<std::string> warnings;
};

bool is_valid_id(std::string_view id);
/// "A002054" -> "b002054.txt".
std::string bfile_name(std::string_view id);

/// Parses the b-file wire format: "index value" per line, '#' comments and
/// blank lines ignored, indices consecutive.
Sequence parse_bfile(std::string_view id, std::string_view text, Source source);

/// Returns the b-file body, or nullopt when the network is unreachable.
using Fetcher = std::function<std::optional<std::string>(std::string_view id)>;

/// Fetches https://oeis.org/Axxxxxx/bxxxxxx.txt.
Fetcher https_fetcher(std::chrono::seconds timeout = std::chrono::seconds(15));

struct ClientOptions {
  std::filesystem::path cache_dir;
  std::filesystem::path fixture_dir;
  bool offline = false;
  Fetcher fetcher;
};

/// Cache from $OEIS_CACHE_DIR (or the repository's data/oeis-cache), bundled
/// fixtures from data/oeis, https fetcher, online.
ClientOptions default_options();

/// Lookup order: cache, then network unless offline, then bundled fixture.
/// Network results are written to the cache verbatim.
class Client {
 public:
  explicit Client(ClientOptions options);

  Sequence fetch(std::string_view id) const;

  const ClientOptions& options() const { return options_; }

 private:
  std::optional<Sequence> load(const std::filesystem::path& path, std::string_view id,
                               Source source) const;
  void store(std::string_view id, const std::string& body) const;

  ClientOptions options_;
};

struct Alignment {
  bool passed = false;
  int shift = 0;              // computed[i] == terms[i + shift]
  long first_index = 0;       // OEIS index aligned with computed[0]
  std::size_t overlap = 0;
  std::size_t matches = 0;
  std::string detail;
};

/// Searches |shift| <= max_shift for the shift under which every overlapping
/// term agrees, with at least min_overlap overlapping terms. PASS needs
/// exactly one such shift; otherwise reports the best near miss.
Alignment align_and_compare(std::span<const BigInt> computed, const Sequence& sequence,
                            std::size_t min_overlap, int max_shift = 5);

}  // namespace lext::oeis
