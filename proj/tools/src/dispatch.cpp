#include "dispatch.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "lpcoh/admissibility.hpp"
#include "lpcoh/json_io.hpp"
#include "lpcoh/strip.hpp"
#include "lpcoh/tables.hpp"

namespace lpcoh::cli {

namespace {

constexpr int kSchemaVersion = 1;

constexpr const char* kProportionNote =
    "the proportion column reports (d-2)/D; for the parametrized families this "
    "equals the asymptotic limit of d(l)/D(l)";

struct Output {
  bool json_mode = false;
  bool quiet = false;
  std::string command;
  std::vector<std::string> warnings;

  void warn(const std::string& w) { warnings.push_back(w); }

  // text goes through `text`, machine payload through `payload`
  void emit(std::ostream& out, std::ostream& err, const std::string& text,
            const json& payload) const {
    if (json_mode) {
      lpcoh::json envelope;
      envelope["command"] = command;
      envelope["schema_version"] = kSchemaVersion;
      envelope["result"] = payload;
      envelope["warnings"] = warnings;
      out << envelope.dump(2) << "\n";
      return;
    }
    out << text;
    if (!quiet)
      for (const std::string& w : warnings) err << "note: " << w << "\n";
  }
};

void warn_about_group(Output& o, const RealFormSpec& g) {
  for (const std::string& note : isogeny_notes(g)) o.warn(note);
  RestrictedDatum datum = restricted_root_datum(g);
  if (datum.has_multiplicities() && !datum.mult_verified)
    o.warn("multiplicities for " + g.render() +
           " come from the classical tables and are unverified against the summary tables");
}

std::string strip_text(const StripReport& r) {
  std::ostringstream s;
  s << "group " << r.group.render() << "\n"
    << "  chosen good root: alpha_" << r.chosen_gamma << "  (|Psi| = " << r.psi_size << ")\n"
    << "  d-1 = dim N = " << r.d_minus_1 << "\n"
    << "  D = dim X = " << r.D << "\n"
    << "  width D-d+2 = " << r.width << "\n"
    << "  vanishing proportion (d-2)/D = " << r.proportion << "\n"
    << "  strip: (" << r.d_minus_1 << ")/p < k < (" << r.d_minus_1 << ")/p + " << r.width
    << "\n";
  for (const auto& [gamma, dm1] : r.alternatives)
    s << "  alternative: alpha_" << gamma << " with d-1 = " << dm1 << "\n";
  return s.str();
}

std::string status_text(const CohomologyStatus& st) {
  std::ostringstream s;
  s << verdict_name(st.verdict) << " (" << reason_name(st.reason) << ")";
  if (st.concentration_degree)
    s << ", nilradical cohomology concentrated in degree " << *st.concentration_degree;
  s << "\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact L^p-cohomology vanishing strips of simple real Lie groups"};
  app.require_subcommand(1);

  Output o;
  {
    std::string cmd = "lpcoh";
    for (const std::string& a : args) cmd += " " + a;
    o.command = cmd;
  }
  std::string global_format = "text";
  app.add_option("--format", global_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", o.quiet, "suppress notes");

  // roots <type> [--full]
  auto* roots_cmd = app.add_subcommand("roots", "dump a root system");
  std::string type_arg;
  bool full = false;
  roots_cmd->add_option("type", type_arg, "root-system type, e.g. B3, E7, BC2")->required();
  roots_cmd->add_flag("--full", full, "include every root in the output");

  // good-roots <type>
  auto* good_cmd = app.add_subcommand("good-roots", "good roots of a root system");
  std::string good_type;
  good_cmd->add_option("type", good_type, "root-system type")->required();

  // classify --max-rank N
  auto* classify_cmd = app.add_subcommand("classify", "admissible / non-admissible catalog");
  int max_rank = 8;
  classify_cmd->add_option("--max-rank", max_rank, "largest real rank")->required();

  // strip <group> [--gamma i]
  auto* strip_cmd = app.add_subcommand("strip", "possibly non-vanishing strip of a group");
  std::string strip_group;
  int gamma_override = 0;
  strip_cmd->add_option("group", strip_group, "group, e.g. \"SL(4,R)\"")->required();
  strip_cmd->add_option("--gamma", gamma_override, "use this good root instead of the best one");

  // query <group> --p a/b --k k
  auto* query_cmd = app.add_subcommand("query", "vanishing verdict for one (p, k)");
  std::string query_group, query_p;
  long long query_k = 0;
  query_cmd->add_option("group", query_group)->required();
  query_cmd->add_option("--p", query_p, "exponent, e.g. 2 or 7/3 or 1.5")->required();
  query_cmd->add_option("--k", query_k, "cohomological degree")->required();

  // hyp --d d --p a/b --k k
  auto* hyp_cmd = app.add_subcommand("hyp", "L^p-cohomology of real hyperbolic d-space");
  long long hyp_d = 0, hyp_k = 0;
  std::string hyp_p;
  hyp_cmd->add_option("--d", hyp_d, "dimension")->required();
  hyp_cmd->add_option("--p", hyp_p, "exponent")->required();
  hyp_cmd->add_option("--k", hyp_k, "degree")->required();

  // scan <group> --p a/b
  auto* scan_cmd = app.add_subcommand("scan", "verdicts for every degree k in [0, D]");
  std::string scan_group, scan_p;
  scan_cmd->add_option("group", scan_group)->required();
  scan_cmd->add_option("--p", scan_p, "exponent")->required();

  // tables --format ... [--check]
  auto* tables_cmd = app.add_subcommand("tables", "reproduce the two summary tables");
  std::string tables_format = "markdown";
  bool check = false;
  tables_cmd->add_option("--format", tables_format, "table format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  tables_cmd->add_flag("--check", check, "diff every cell against the expected-values fixture");

  // db --dump | --load FILE
  auto* db_cmd = app.add_subcommand("db", "multiplicity database I/O");
  bool dump = false;
  std::string load_path;
  db_cmd->add_flag("--dump", dump, "print the active database as JSON");
  db_cmd->add_option("--load", load_path, "validate an external database file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  o.json_mode = global_format == "json";

  if (roots_cmd->parsed()) {
    RootSystem rs = build_root_system(RootSystemType::parse(type_arg));
    std::ostringstream text;
    text << rs.type.name() << ": rank " << rs.rank() << ", " << rs.positive.size()
         << " positive roots\n";
    for (const auto& [len, idx] : length_classes(rs))
      text << "  squared length " << len << ": " << idx.size() << " roots\n";
    if (full) {
      text << "  positive roots (ambient x2 | simple coefficients):\n";
      for (const Root& r : rs.positive) {
        text << "   ";
        for (long long x : r.ambient) text << " " << x;
        text << "  |";
        for (long long c : r.simple_coeffs) text << " " << c;
        text << "\n";
      }
    }
    o.emit(out, err, text.str(), to_json(rs, full));
    return 0;
  }

  if (good_cmd->parsed()) {
    GoodRootReport report = good_roots(build_root_system(RootSystemType::parse(good_type)));
    std::ostringstream text;
    text << "good roots of " << report.rs_type.name() << ":";
    if (report.good_roots.empty()) text << " none";
    for (int i : report.good_roots) text << " alpha_" << i;
    text << "\n";
    for (const auto& [i, m] : report.per_root_max_coeff)
      text << "  max coefficient of alpha_" << i << " over Phi^+: " << m << "\n";
    o.emit(out, err, text.str(), to_json(report));
    return 0;
  }

  if (classify_cmd->parsed()) {
    std::vector<ClassifiedEntry> table = classify(max_rank);
    std::ostringstream text;
    json entries = json::array();
    for (const ClassifiedEntry& e : table) {
      text << (e.admissible ? "admissible     " : "non-admissible ") << e.entry.display
           << "  [" << e.entry.cartan_label << ", rank " << e.entry.rank << ", relative "
           << e.report.rs_type.name() << "]\n";
      entries.push_back(to_json(e));
    }
    o.emit(out, err, text.str(),
           json{{"max_rank", max_rank}, {"entries", entries}});
    return 0;
  }

  if (strip_cmd->parsed()) {
    RealFormSpec g = parse_group(strip_group);
    warn_about_group(o, g);
    StripReport report = strip_report(
        g, gamma_override > 0 ? std::optional<int>(gamma_override) : std::nullopt);
    o.emit(out, err, strip_text(report), to_json(report));
    return 0;
  }

  if (query_cmd->parsed()) {
    RealFormSpec g = parse_group(query_group);
    warn_about_group(o, g);
    Rational p = Rational::parse(query_p);
    CohomologyStatus st = group_status(g, p, query_k);
    json payload = to_json(st);
    payload["group"] = g.render();
    payload["p"] = to_json(p);
    payload["k"] = query_k;
    std::ostringstream text;
    text << "H^" << query_k << "(" << g.render() << ", L^" << p.str()
         << "): " << status_text(st);
    o.emit(out, err, text.str(), payload);
    return 0;
  }

  if (hyp_cmd->parsed()) {
    Rational p = Rational::parse(hyp_p);
    HypStatus st = hyperbolic_status(hyp_d, p, hyp_k);
    json payload = to_json(st);
    payload["d"] = hyp_d;
    payload["p"] = to_json(p);
    payload["k"] = hyp_k;
    std::ostringstream text;
    text << "H^" << hyp_k << "(H^" << hyp_d << ", L^" << p.str() << "): zero="
         << (st.zero ? "true" : "false") << " hausdorff=" << (st.hausdorff ? "true" : "false")
         << " reduced_zero=" << (st.reduced_zero ? "true" : "false") << "\n";
    o.emit(out, err, text.str(), payload);
    return 0;
  }

  if (scan_cmd->parsed()) {
    RealFormSpec g = parse_group(scan_group);
    warn_about_group(o, g);
    Rational p = Rational::parse(scan_p);
    StripReport report = strip_report(g);
    std::ostringstream text;
    json statuses = json::array();
    for (long long k = 0; k <= report.D; ++k) {
      CohomologyStatus st = group_status(report, p, k);
      text << "k=" << k << ": " << status_text(st);
      json row = to_json(st);
      row["k"] = k;
      statuses.push_back(row);
    }
    o.emit(out, err, text.str(),
           json{{"group", g.render()}, {"p", to_json(p)}, {"D", report.D},
                {"statuses", statuses}});
    return 0;
  }

  if (tables_cmd->parsed()) {
    o.warn(kProportionNote);
    TableFormat fmt = tables_format == "markdown" ? TableFormat::Markdown
                      : tables_format == "csv"    ? TableFormat::Csv
                                                  : TableFormat::Json;
    std::string rendered = render_paper_tables(fmt);
    if (fmt == TableFormat::Json) {
      o.json_mode = true;
      o.emit(out, err, rendered, json::parse(rendered));
    } else {
      o.json_mode = false;
      o.emit(out, err, rendered, json());
    }
    if (check) {
      std::vector<std::string> bad = check_paper_tables();
      if (!bad.empty()) {
        for (const std::string& b : bad) err << "mismatch: " << b << "\n";
        return 1;
      }
      err << "tables: every cell matches the transcribed fixture\n";
    }
    return 0;
  }

  if (db_cmd->parsed()) {
    if (dump != load_path.empty()) {  // exactly one of --dump / --load
      err << "db: pass exactly one of --dump or --load FILE\n";
      return 2;
    }
    if (dump) {
      o.emit(out, err, to_json(active_database()).dump(2) + "\n", to_json(active_database()));
      return 0;
    }
    std::ifstream in(load_path);
    if (!in) fail(ErrorKind::InvalidDatabase, "cannot open '" + load_path + "'");
    json parsed;
    try {
      in >> parsed;
    } catch (const std::exception& e) {
      fail(ErrorKind::InvalidDatabase, "not valid JSON: " + std::string(e.what()));
    }
    MultDatabase db = database_from_json(parsed);
    validate_database(db);
    o.emit(out, err, "database valid: " + std::to_string(db.size()) + " rules\n",
           json{{"valid", true}, {"rules", db.size()}});
    return 0;
  }

  err << "no subcommand selected\n";
  return 2;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const DomainError& e) {
    err << e.kind_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lpcoh::cli
