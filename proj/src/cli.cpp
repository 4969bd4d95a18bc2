#include "oseq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oseq/analysis.hpp"
#include "oseq/enumerator.hpp"
#include "oseq/io.hpp"
#include "oseq/lexseg.hpp"
#include "oseq/linusson.hpp"

namespace oseq::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool allow_network = false;

  std::uint32_t table_max_d = 20;

  std::uint32_t count_d = 0;
  std::string count_method = "both";

  std::uint32_t fp = 0, fn = 0, fk = 0, fd = 0;
  std::string cache_file;
  bool stats = false;

  std::uint32_t enum_d = 0;
  bool enum_all = false;
  bool enum_last_gt1 = false;

  std::string suite;
  std::uint32_t verify_max_d = 0;
  bool verbose = false;

  std::string lexseg_h;
  std::uint32_t lexseg_vars = 0;
  bool decompose = false;

  std::uint32_t oeis_max_d = 20;
};

std::string ideal_to_string(const OrderIdeal& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.terms().size(); ++i) {
    if (i) out += ", ";
    out += m.terms()[i].to_string();
  }
  return out + "}";
}

ordered_json ideal_to_json(const OrderIdeal& m) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : m.terms()) terms.push_back(t.exponents());
  return ordered_json{{"vars", m.vars()}, {"terms", std::move(terms)}};
}

int cmd_table(const Options& o, OutputFormat fmt, std::ostream& out) {
  write_table(o_table(o.table_max_d), fmt, out);
  return kOk;
}

int cmd_count(const Options& o, OutputFormat fmt, std::ostream& out) {
  const std::uint32_t d = o.count_d;
  const bool use_enum = o.count_method != "formula";
  const bool use_formula = o.count_method != "enum";
  std::optional<Count> by_enum, by_formula;
  if (use_enum) by_enum = o_table(d).o(d);
  if (use_formula) by_formula = o_via_formula(d);
  const bool agree = !(by_enum && by_formula) || *by_enum == *by_formula;

  if (fmt == OutputFormat::json) {
    ordered_json j{{"d", d}};
    if (by_enum) j["enum"] = *by_enum;
    if (by_formula) j["formula"] = *by_formula;
    if (by_enum && by_formula) j["agreement"] = agree;
    out << j.dump() << '\n';
  } else if (fmt == OutputFormat::csv) {
    out << "d,method,O\n";
    if (by_enum) out << d << ",enum," << *by_enum << '\n';
    if (by_formula) out << d << ",formula," << *by_formula << '\n';
  } else {
    if (by_enum) out << "O_" << d << " = " << *by_enum << " (enum)\n";
    if (by_formula) out << "O_" << d << " = " << *by_formula << " (formula)\n";
    if (by_enum && by_formula) out << "agreement = " << (agree ? "true" : "false") << '\n';
  }
  return agree ? kOk : kMismatch;
}

int cmd_formula(const Options& o, OutputFormat fmt, std::ostream& out) {
  CountCache cache;
  const std::filesystem::path cache_path = o.cache_file;
  if (!o.cache_file.empty() && std::filesystem::exists(cache_path)) cache_load(cache, cache_path);
  LinussonCounter counter(cache);
  const Count value = counter.count_M(o.fp, o.fn, o.fk, o.fd);
  if (!o.cache_file.empty()) cache_save(cache, cache_path);
  const auto& s = counter.stats();

  if (fmt == OutputFormat::json) {
    ordered_json j{{"p", o.fp}, {"n", o.fn}, {"k", o.fk}, {"d", o.fd}, {"count", value}};
    if (o.stats) j["stats"] = ordered_json{{"hits", s.hits}, {"expansions", s.expansions}, {"entries", cache.size()}};
    out << j.dump() << '\n';
  } else if (fmt == OutputFormat::csv) {
    out << "p,n,k,d,count\n" << o.fp << ',' << o.fn << ',' << o.fk << ',' << o.fd << ',' << value << '\n';
    if (o.stats) out << "hits,expansions,entries\n" << s.hits << ',' << s.expansions << ',' << cache.size() << '\n';
  } else {
    out << "O(" << o.fp << "," << o.fn << "," << o.fk << "," << o.fd << ") = " << value << '\n';
    if (o.stats) out << "cache hits = " << s.hits << ", expansions = " << s.expansions << ", entries = " << cache.size() << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Options& o, OutputFormat fmt, std::ostream& out) {
  const bool last_gt1 = o.enum_last_gt1 && !o.enum_all;
  bool first = true;
  if (fmt == OutputFormat::json) out << '[';
  const SequenceVisitor visit = [&](std::span<const Entry> seq) {
    if (fmt == OutputFormat::json) {
      out << (first ? "" : ",") << '[' << format_sequence(seq) << ']';
    } else {
      out << format_sequence(seq) << '\n';
    }
    first = false;
  };
  if (last_gt1) {
    enumerate_last_gt1(o.enum_d, visit);
  } else {
    enumerate_all(o.enum_d, visit);
  }
  if (fmt == OutputFormat::json) out << "]\n";
  return kOk;
}

int cmd_verify(const Options& o, OutputFormat fmt, std::ostream& out) {
  const std::string& suite = o.suite;
  VerificationReport report;
  if (suite == "lemmas" || suite == "fibonacci" || suite == "ratios" || suite == "table") {
    const std::uint32_t max_d = o.verify_max_d ? o.verify_max_d : 60;
    const CountTable t = o_table(max_d);
    if (suite == "lemmas") report = check_lemma_bounds(t);
    if (suite == "fibonacci") report = check_sub_fibonacci(t);
    if (suite == "ratios") report = check_ratios(t);
    if (suite == "table") report = compare_reference(t, published_table());
  } else if (suite == "oracle") {
    OracleGrid grid;
    if (o.verify_max_d) grid.max_d = o.verify_max_d;
    LinussonCounter counter;
    report = check_oracle_grid(counter, grid);
  } else if (suite == "bijection") {
    LinussonCounter counter;
    report = check_bijection(counter, {2, 3}, o.verify_max_d ? o.verify_max_d : 8);
  } else if (suite == "lexseg") {
    report = check_lex_structure(o.verify_max_d ? o.verify_max_d : 10, 1);
  }
  write_report(report, fmt, out, o.verbose);
  return report.ok() ? kOk : kMismatch;
}

int cmd_lexseg(const Options& o, OutputFormat fmt, std::ostream& out) {
  const OSequence h = parse_o_sequence(o.lexseg_h);
  const std::uint32_t p = o.lexseg_vars ? o.lexseg_vars : std::max<std::uint32_t>(h.size() > 1 ? h[1] : 1, 1);
  const OrderIdeal m = sous_escalier(h, p);
  const Classification c = classify(m, p);
  std::optional<Decomposition> parts;
  if (o.decompose) parts = decompose(m, p);

  if (fmt == OutputFormat::json) {
    ordered_json j{{"h", h.values()}, {"vars", p}, {"sous_escalier", ideal_to_json(m)},
                   {"socle_degree", c.socle_degree}, {"max_growth", c.max_growth}, {"multiplicity", c.multiplicity}};
    if (parts) {
      j["M1"] = ideal_to_json(parts->without_last);
      j["M2"] = ideal_to_json(parts->quotient);
    }
    out << j.dump() << '\n';
  } else {
    out << "N = " << ideal_to_string(m) << '\n';
    out << "s = " << c.socle_degree << ", k = " << c.max_growth << ", d = " << c.multiplicity << '\n';
    if (parts) {
      out << "M1 = " << ideal_to_string(parts->without_last) << " (" << p - 1 << " variables)\n";
      out << "M2 = " << ideal_to_string(parts->quotient) << " (" << p << " variables)\n";
    }
  }
  return kOk;
}

int cmd_oeis(const Options& o, OutputFormat fmt, std::ostream& out) {
  FetchOptions opts;
  opts.allow_network = o.allow_network;
  if (!o.cache_file.empty()) opts.cache_dir = std::filesystem::absolute(o.cache_file).parent_path();
  const OeisReference ref = fetch_oeis(kOeisSequenceId, opts);
  const VerificationReport report = compare_oeis(o_table(o.oeis_max_d), ref, o.oeis_max_d);
  write_report(report, fmt, out, o.verbose);
  return report.ok() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Count and enumerate finite O-sequences by multiplicity", "oseq"};
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--allow-network", o.allow_network, "Permit network access (oeis-check only)");

  auto* table = app.add_subcommand("table", "O_d and A_d for 1 <= d <= D by enumeration");
  table->add_option("--max-d", o.table_max_d, "Largest multiplicity")->check(CLI::Range(1u, kMaxEnumerableMultiplicity));

  auto* count = app.add_subcommand("count", "O_d by enumeration, by the recursive formula, or both");
  count->add_option("d", o.count_d, "Multiplicity")->required()->check(CLI::Range(1u, kMaxEnumerableMultiplicity));
  count->add_option("--method", o.count_method, "enum, formula or both")
      ->check(CLI::IsMember({"enum", "formula", "both"}));

  auto* formula = app.add_subcommand("formula", "O(p, n, k, d) via the memoized recursion");
  formula->add_option("p", o.fp)->required()->check(CLI::Range(1u, 65535u));
  formula->add_option("n", o.fn)->required()->check(CLI::Range(0u, 65535u));
  formula->add_option("k", o.fk)->required()->check(CLI::Range(0u, 65535u));
  formula->add_option("d", o.fd)->required()->check(CLI::Range(1u, 65535u));
  formula->add_option("--cache", o.cache_file, "Memo cache file (loaded if present, saved afterwards)");
  formula->add_flag("--stats", o.stats, "Report cache hits and expansions");

  auto* enumerate = app.add_subcommand("enumerate", "Stream O-sequences of multiplicity d, one per line");
  enumerate->add_option("d", o.enum_d, "Multiplicity")->required()->check(CLI::Range(1u, kMaxEnumerableMultiplicity));
  auto* all_flag = enumerate->add_flag("--all", o.enum_all, "All O-sequences (default)");
  auto* gt1_flag = enumerate->add_flag("--last-gt-1", o.enum_last_gt1, "Only those whose last value exceeds 1");
  all_flag->excludes(gt1_flag);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"lemmas", "fibonacci", "ratios", "table", "oracle", "bijection", "lexseg"}));
  verify->add_option("--max-d", o.verify_max_d, "Largest multiplicity")->check(CLI::Range(1u, kMaxEnumerableMultiplicity));
  verify->add_flag("--verbose", o.verbose, "List passing checks too");

  auto* lexseg = app.add_subcommand("lexseg", "Lex sous-escalier of an O-sequence");
  lexseg->add_option("sequence", o.lexseg_h, "O-sequence, e.g. 1,2,2")->required();
  lexseg->add_option("--vars", o.lexseg_vars, "Number of variables (default a_1)")->check(CLI::Range(1u, 64u));
  lexseg->add_flag("--decompose", o.decompose, "Also split by divisibility by the last variable");

  auto* oeis = app.add_subcommand("oeis-check", "Compare O_1..O_D with the A232476 b-file (needs --allow-network)");
  oeis->add_option("--max-d", o.oeis_max_d)->check(CLI::Range(1u, kMaxEnumerableMultiplicity));
  oeis->add_option("--cache", o.cache_file, "Store the b-file beside this memo cache path");
  oeis->add_flag("--verbose", o.verbose, "List passing checks too");
  oeis->add_flag("--allow-network", o.allow_network, "Permit network access");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "oseq: usage error: " << e.what() << '\n';
    return kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    const OutputFormat fmt = parse_format(o.format);
    if (name == "table") return cmd_table(o, fmt, out);
    if (name == "count") return cmd_count(o, fmt, out);
    if (name == "formula") return cmd_formula(o, fmt, out);
    if (name == "enumerate") return cmd_enumerate(o, fmt, out);
    if (name == "verify") return cmd_verify(o, fmt, out);
    if (name == "lexseg") return cmd_lexseg(o, fmt, out);
    if (name == "oeis-check") return cmd_oeis(o, fmt, out);
  } catch (const OverflowError& e) {
    err << "oseq " << name << ": arithmetic overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const InvalidArgument& e) {
    err << "oseq " << name << ": invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "oseq " << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const TooLargeError& e) {
    err << "oseq " << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const NetworkError& e) {
    err << "oseq " << name << ": network: " << e.what() << '\n';
    return o.allow_network ? kIoFailure : kUsage;
  } catch (const ParseError& e) {
    err << "oseq " << name << ": parse error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const CorruptionError& e) {
    err << "oseq " << name << ": cache corruption: " << e.what() << '\n';
    return kIoFailure;
  } catch (const IoError& e) {
    err << "oseq " << name << ": I/O error: " << e.what() << '\n';
    return kIoFailure;
  }
  err << "oseq: unhandled subcommand " << name << '\n';
  return kUsage;
}

}  // namespace oseq::cli
