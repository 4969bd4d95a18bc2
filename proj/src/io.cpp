#include "oseq/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#ifdef OSEQ_WITH_HTTP
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace oseq {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* severity_name(Severity s) { return s == Severity::theorem ? "theorem" : "observation"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw InvalidArgument("unknown output format '" + name + "' (expected text, json or csv)");
}

std::string format_sequence(std::span<const Entry> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

void write_table(const CountTable& t, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json rows = ordered_json::array();
      for (std::uint32_t d = 1; d <= t.max_d; ++d) {
        rows.push_back(ordered_json{{"d", d}, {"O", t.o(d)}, {"A", t.a(d)}});
      }
      out << rows.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "d,O,A\n";
      for (std::uint32_t d = 1; d <= t.max_d; ++d) out << d << ',' << t.o(d) << ',' << t.a(d) << '\n';
      break;
    case OutputFormat::text:
      out << "d\tO_d\tA_d\n";
      for (std::uint32_t d = 1; d <= t.max_d; ++d) out << d << '\t' << t.o(d) << '\t' << t.a(d) << '\n';
      break;
  }
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back(ordered_json{{"d", c.d},
                                  {"claim", c.claim},
                                  {"left", c.left},
                                  {"right", c.right},
                                  {"pass", c.pass},
                                  {"severity", severity_name(c.severity)}});
  }
  ordered_json anomalies = ordered_json::array();
  for (const auto& a : report.anomalies) anomalies.push_back(ordered_json{{"d", a.d}, {"description", a.description}});
  ordered_json j;
  j["suite"] = report.suite;
  j["range"] = ordered_json::array({report.range_lo, report.range_hi});
  j["checks"] = std::move(checks);
  j["anomalies"] = std::move(anomalies);
  j["warnings"] = report.warnings;
  return j.dump();
}

void write_report(const VerificationReport& report, OutputFormat format, std::ostream& out, bool verbose) {
  if (format == OutputFormat::json) {
    out << report_to_json(report) << '\n';
    return;
  }
  if (format == OutputFormat::csv) {
    out << "suite,d,claim,left,right,pass,severity\n";
    for (const auto& c : report.checks) {
      out << csv_field(report.suite) << ',' << c.d << ',' << csv_field(c.claim) << ',' << csv_field(c.left) << ','
          << csv_field(c.right) << ',' << (c.pass ? "true" : "false") << ',' << severity_name(c.severity) << '\n';
    }
    return;
  }
  const std::size_t failed = report.failures();
  out << "suite " << report.suite << ", d in [" << report.range_lo << ", " << report.range_hi << "]: "
      << report.checks.size() - failed << "/" << report.checks.size() << " checks passed, " << failed << " failed, "
      << report.anomalies.size() << " anomal" << (report.anomalies.size() == 1 ? "y" : "ies") << '\n';
  for (const auto& c : report.checks) {
    if (!verbose && c.pass) continue;
    out << (c.pass ? "  pass " : "  FAIL ") << "d=" << c.d << "  " << c.claim << "  [" << c.left << " vs "
        << c.right << "]" << (c.severity == Severity::observation ? " (observation)" : "") << '\n';
  }
  for (const auto& a : report.anomalies) out << "  ANOMALY d=" << a.d << "  " << a.description << '\n';
  for (const auto& w : report.warnings) out << "  warning: " << w << '\n';
}

OeisReference parse_b_file(std::istream& in, std::string id) {
  OeisReference ref{std::move(id), {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text >> value_text) || (fields >> extra)) {
      throw ParseError("malformed b-file line '" + line + "'", line_no);
    }
    std::uint64_t index = 0;
    Count value = 0;
    const auto [ip, iec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    const auto [vp, vec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (iec != std::errc{} || ip != index_text.data() + index_text.size() || vec != std::errc{} ||
        vp != value_text.data() + value_text.size()) {
      throw ParseError("malformed b-file line '" + line + "'", line_no);
    }
    if (value == 0) throw ParseError("b-file value must be positive", line_no);
    if (!ref.entries.empty() && index <= ref.entries.back().first) {
      throw ParseError("b-file indices must strictly increase", line_no);
    }
    ref.entries.emplace_back(index, value);
  }
  return ref;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("OSEQ_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "oseq";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "oseq";
  return ".oseq-cache";
}

OeisReference fetch_oeis(const std::string& id, const FetchOptions& options) {
  if (!options.allow_network) {
    throw NetworkError("fetch_oeis: network access not permitted (pass --allow-network)");
  }
  if (id.size() < 2 || id[0] != 'A') throw InvalidArgument("fetch_oeis: bad sequence id '" + id + "'");
  const std::string file_name = "b" + id.substr(1) + ".txt";
  const auto dir = options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
  const auto cached = dir / file_name;
  if (std::filesystem::exists(cached)) {
    std::ifstream in(cached);
    if (!in) throw IoError("cannot read cached b-file " + cached.string());
    return parse_b_file(in, id);
  }
#ifdef OSEQ_WITH_HTTP
  httplib::Client client(options.host);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const std::string path = "/" + id + "/" + file_name;
  const auto res = client.Get(path);
  if (!res) throw NetworkError("GET " + options.host + path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw NetworkError("GET " + options.host + path + " returned HTTP " + std::to_string(res->status));
  }
  std::istringstream body(res->body);
  OeisReference ref = parse_b_file(body, id);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    std::ofstream out(cached, std::ios::binary);
    out << res->body;
  }
  return ref;
#else
  throw NetworkError("fetch_oeis: built without HTTP support");
#endif
}

VerificationReport compare_oeis(const CountTable& t, const OeisReference& ref, std::uint32_t max_d) {
  VerificationReport r{"oeis", 1, max_d, {}, {}, {}};
  const std::uint32_t top = std::min(max_d, t.max_d);
  for (std::uint32_t d = 1; d <= top; ++d) {
    const auto it = std::find_if(ref.entries.begin(), ref.entries.end(), [&](const auto& e) { return e.first == d; });
    if (it == ref.entries.end()) {
      r.add(d, "b-file has an entry for d", "missing", std::to_string(t.o(d)), false);
      continue;
    }
    r.add(d, "computed O_d = " + ref.id + " b-file", std::to_string(t.o(d)), std::to_string(it->second),
          t.o(d) == it->second);
  }
  return r;
}

}  // namespace oseq
