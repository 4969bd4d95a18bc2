#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oseq/analysis.hpp"
#include "oseq/enumerator.hpp"

namespace oseq {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);

/// "1,2,2,1"
std::string format_sequence(std::span<const Entry> seq);

void write_table(const CountTable& t, OutputFormat format, std::ostream& out);

/// JSON form: {"suite", "range", "checks", "anomalies", "warnings"} in that
/// key order. Text form lists totals, failures, anomalies and warnings, and
/// every check when `verbose` is set.
void write_report(const VerificationReport& report, OutputFormat format, std::ostream& out, bool verbose = false);
std::string report_to_json(const VerificationReport& report);

// OEIS b-files

inline constexpr const char* kOeisSequenceId = "A232476";

struct OeisReference {
  std::string id;
  std::vector<std::pair<std::uint64_t, Count>> entries;
};

/// Parses "index value" lines; blank lines and lines starting with '#' are
/// skipped. Indices must strictly increase and values be positive; anything
/// else raises ParseError naming the line.
OeisReference parse_b_file(std::istream& in, std::string id = kOeisSequenceId);

/// Directory for downloaded reference data: $OSEQ_CACHE_DIR, else
/// $XDG_CACHE_HOME/oseq, else $HOME/.cache/oseq, else ./.oseq-cache.
std::filesystem::path default_cache_dir();

struct FetchOptions {
  bool allow_network = false;
  std::filesystem::path cache_dir;  // empty: default_cache_dir()
  std::string host = "https://oeis.org";
};

/// Loads the b-file for `id` ("A232476") from the on-disk cache, or fetches
/// it over HTTP and stores it there. Refuses with NetworkError, before any
/// connection, unless network access is allowed.
OeisReference fetch_oeis(const std::string& id, const FetchOptions& options);

/// Compares computed O_d with b-file entries for 1 <= d <= max_d.
VerificationReport compare_oeis(const CountTable& t, const OeisReference& ref, std::uint32_t max_d);

}  // namespace oseq
