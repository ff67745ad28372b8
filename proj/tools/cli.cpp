#include "cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "cdom/canonical.hpp"
#include "cdom/error.hpp"
#include "cdom/graph_io.hpp"
#include "cdom/serialize.hpp"

namespace cdom::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string input_format = "auto";
  std::string kind = "connected";
  std::optional<double> tol;
  std::string format = "json";
  bool all_min_sets = false;
  std::string interpretation;
  std::size_t limit = 0;
  std::string graph_class;
  std::string cycle_rule = "at-least-3";
  std::string property;
  std::string plot_dir;
  bool skip_bad_rows = false;
  std::string family = "connected";
  int order = 0;
};

constexpr std::size_t kDefaultSetLimit = 100000;

std::string read_input(const Options& o, std::istream& in) {
  if (o.input == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(o.input, std::ios::binary);
  if (!f) throw UsageError("cannot open input file '" + o.input + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Edge lists open with the vertex count; graph6 never starts with a digit.
bool looks_like_edge_list(const std::string& text) {
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return std::isdigit(static_cast<unsigned char>(line[b])) != 0;
  }
  return false;
}

std::vector<Graph> load_graphs(const Options& o, std::istream& in) {
  const auto text = read_input(o, in);
  const bool edges = o.input_format == "edgelist" || (o.input_format == "auto" && looks_like_edge_list(text));
  if (edges) {
    try {
      return {parse_edge_list(text)};
    } catch (const ParseError& e) {
      throw ParseError("edge list line " + std::to_string(e.position()) + ": " + e.what(), e.position());
    }
  }
  std::istringstream s(text);
  auto stream = read_graph6_stream(s);
  if (!stream.rejected.empty()) {
    const auto& [line, message] = stream.rejected.front();
    throw ParseError("graph6 line " + std::to_string(line) + ": " + message, line);
  }
  if (stream.graphs.empty()) throw DomainError("no graphs in input");
  return std::move(stream.graphs);
}

DominationKind kind_of(const Options& o) {
  return o.kind == "dominating" ? DominationKind::dominating : DominationKind::connected_dominating;
}

CycleRule cycle_rule_of(const Options& o) {
  if (o.cycle_rule == "at-least-2") return CycleRule::degree_at_least_2;
  if (o.cycle_rule == "exactly-2") return CycleRule::degree_exactly_2;
  return CycleRule::degree_at_least_3;
}

std::string document(const std::vector<Json>& items) {
  if (items.size() == 1) return items.front().dump(2) + "\n";
  Json arr = Json::array();
  for (const auto& j : items) arr.push_back(j);
  return arr.dump(2) + "\n";
}

void require_json(const Options& o, std::string_view command) {
  if (o.format != "json") throw UsageError(std::string(command) + " supports --format json only");
}

std::string join(const VertexSet& s) {
  std::string out;
  for (int v : s.to_vector()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string cmd_energy(const Options& o, std::istream& in) {
  const auto graphs = load_graphs(o, in);
  const double tol = o.tol.value_or(kDefaultJacobiTol);
  const std::size_t limit = o.limit ? o.limit : kDefaultSetLimit;
  if (o.format == "csv") {
    std::string out = o.all_min_sets ? "graph,n,m,kind,gamma,set,energy,min_sets,min_energy,max_energy\n"
                                     : "graph,n,m,kind,gamma,set,energy\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto r = energy_report(graphs[i], kind_of(o), tol);
      out += std::to_string(i) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
             std::string(to_string(r.kind)) + "," + std::to_string(r.gamma_used) + "," + join(r.set) + "," +
             io::format_double(r.energy);
      if (o.all_min_sets) {
        const auto s = energy_spread_over_min_sets(graphs[i], kind_of(o), limit);
        out += "," + std::to_string(s.count) + "," + io::format_double(s.min_energy) + "," +
               io::format_double(s.max_energy);
      }
      out += "\n";
    }
    return out;
  }
  std::vector<Json> items;
  for (const auto& g : graphs) {
    auto j = io::to_json(energy_report(g, kind_of(o), tol));
    if (o.all_min_sets) j["spread"] = io::to_json(energy_spread_over_min_sets(g, kind_of(o), limit));
    items.push_back(std::move(j));
  }
  return document(items);
}

std::string cmd_spectrum(const Options& o, std::istream& in) {
  const auto graphs = load_graphs(o, in);
  const double tol = o.tol.value_or(kDefaultJacobiTol);
  if (o.format == "csv") {
    std::string out = "graph,index,eigenvalue\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto r = energy_report(graphs[i], kind_of(o), tol);
      for (std::size_t k = 0; k < r.spectrum.values.size(); ++k)
        out += std::to_string(i) + "," + std::to_string(k) + "," + io::format_double(r.spectrum.values[k]) + "\n";
    }
    return out;
  }
  std::vector<Json> items;
  for (const auto& g : graphs) items.push_back(io::spectrum_json(energy_report(g, kind_of(o), tol)));
  return document(items);
}

std::string cmd_bounds(const Options& o, std::istream& in) {
  const auto graphs = load_graphs(o, in);
  const double tol = o.tol.value_or(kDefaultJacobiTol);
  std::optional<Reading> reading;
  if (o.interpretation == "proof") reading = Reading::proof;
  if (o.interpretation == "literal") reading = Reading::literal;
  if (o.format == "csv") {
    std::string out = "graph,id,kind,reading,applicable,value,target,slack,satisfied,clamped\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::istringstream rows(io::bounds_csv(check_all(graphs[i], tol), reading, false));
      for (std::string row; std::getline(rows, row);) out += std::to_string(i) + "," + row + "\n";
    }
    return out;
  }
  std::vector<Json> items;
  for (const auto& g : graphs) items.push_back(io::to_json(check_all(g, tol), reading));
  return document(items);
}

std::string cmd_check(const Options& o, std::istream& in) {
  require_json(o, "check");
  const auto graphs = load_graphs(o, in);
  std::optional<GraphClass> forced;
  if (!o.graph_class.empty()) forced = parse_graph_class(o.graph_class);
  std::vector<Json> items;
  for (const auto& g : graphs)
    items.push_back(io::to_json(characterize(g, forced, cycle_rule_of(o), o.tol.value_or(kEnergyEqualTol))));
  return document(items);
}

std::string cmd_scan(const Options& o, std::istream& in, std::ostream& err) {
  require_json(o, "scan");
  const auto graphs = load_graphs(o, in);
  const double tol = o.tol.value_or(kEnergyEqualTol);
  std::string out;
  OpenProblemScan total;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (o.limit && total.hits.size() >= o.limit) break;
    auto one = open_problem_scan(std::span<const Graph>(&graphs[i], 1), tol);
    total.scanned += one.scanned;
    total.skipped += one.skipped;
    total.failed_reverify += one.failed_reverify;
    for (auto& h : one.hits) {
      h.index = i;
      out += io::to_json(h).dump() + "\n";
      total.hits.push_back(std::move(h));
    }
  }
  err << "scanned " << total.scanned << ", skipped " << total.skipped << ", dropped on re-verification "
      << total.failed_reverify << ", hits " << total.hits.size() << "\n";
  return out;
}

std::string cmd_qspr(const Options& o, std::istream& in, std::ostream& err) {
  std::istringstream text(read_input(o, in));
  const auto table = qspr::load_alkane_csv(text);
  for (const auto& e : table.errors) err << "row " << e.row << ": " << e.message << "\n";
  if (!table.errors.empty() && !o.skip_bad_rows) {
    throw DomainError(std::to_string(table.errors.size()) + " malformed row(s); use --skip-bad-rows to ignore them");
  }
  if (table.records.empty()) throw DomainError("no valid alkane records");

  std::vector<qspr::Property> props(qspr::kProperties.begin(), qspr::kProperties.end());
  const bool explicit_property = !o.property.empty();
  if (explicit_property) props = {*qspr::parse_property(o.property)};

  if (o.format == "csv") {
    if (!explicit_property) throw UsageError("--format csv needs --property");
    return io::plot_csv(qspr::plot_points(table.records, props.front()));
  }

  Json regressions = Json::array();
  Json insufficient = Json::array();
  std::optional<qspr::RegressionResult> hv;
  for (auto p : props) {
    const auto points = qspr::plot_points(table.records, p);
    if (points.size() < 3 && !explicit_property) {
      insufficient.push_back(qspr::to_string(p));
      continue;
    }
    const auto fit = qspr::fit_and_report(table.records, p);
    if (p == qspr::Property::hv) hv = fit;
    regressions.push_back(io::to_json(fit));
    if (!o.plot_dir.empty()) {
      const auto path = o.plot_dir + "/" + std::string(qspr::to_string(p)) + ".csv";
      std::ofstream f(path, std::ios::binary);
      if (!(f << io::plot_csv(points))) throw std::runtime_error("cannot write " + path);
    }
  }

  Json out{{"records", table.records.size()}, {"rejected_rows", table.errors.size()}};
  out["regressions"] = std::move(regressions);
  out["insufficient"] = std::move(insufficient);
  const auto hv_points = qspr::plot_points(table.records, qspr::Property::hv);
  if (!hv_points.empty()) {
    out["band"] = Json{{"half_width", qspr::kBandHalfWidth},
                       {"samples", hv_points.size()},
                       {"fraction", qspr::eq1_band_check(table.records)}};
  } else {
    out["band"] = nullptr;
  }
  if (hv) {
    out["reference"] = Json{{"property", "hv"},
                            {"reported_r", qspr::kReferenceHvCorrelation},
                            {"computed_r", hv->pearson_r},
                            {"difference", hv->pearson_r - qspr::kReferenceHvCorrelation}};
  }
  return out.dump(2) + "\n";
}

std::string cmd_generate(const Options& o) {
  const std::vector<Graph>* graphs = nullptr;
  if (o.family == "all") graphs = &corpus::all_graphs(o.order);
  if (o.family == "connected") graphs = &corpus::connected_graphs(o.order);
  if (o.family == "trees") graphs = &corpus::trees(o.order);
  if (o.family == "unicyclic") graphs = &corpus::unicyclic_graphs(o.order);
  std::string out;
  for (const auto& g : *graphs) out += to_graph6(g) + "\n";
  return out;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "graph file, '-' for standard input")->capture_default_str();
  sub->add_option("--input-format", o.input_format, "graph6 or edgelist; detected when omitted")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

void add_tol(CLI::App* sub, Options& o, const std::string& what) {
  sub->add_option("--tol", o.tol, what)->check(CLI::PositiveNumber);
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

void add_kind(CLI::App* sub, Options& o) {
  sub->add_option("--kind", o.kind, "domination kind marking the diagonal")
      ->check(CLI::IsMember({"dominating", "connected"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"c-dominating energy of graphs"};
  app.name("cdom");
  app.require_subcommand(1);

  auto* energy = app.add_subcommand("energy", "energy of the (connected) dominating matrix");
  add_input(energy, o);
  add_kind(energy, o);
  add_tol(energy, o, "Jacobi off-diagonal tolerance");
  add_format(energy, o);
  energy->add_flag("--all-min-sets", o.all_min_sets, "energy spread over every minimum set");
  energy->add_option("--limit", o.limit, "cap on enumerated minimum sets");

  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial and eigenvalues");
  add_input(spectrum, o);
  add_kind(spectrum, o);
  add_tol(spectrum, o, "Jacobi off-diagonal tolerance");
  add_format(spectrum, o);

  auto* bounds = app.add_subcommand("bounds", "energy and spectral radius bounds");
  add_input(bounds, o);
  add_tol(bounds, o, "Jacobi off-diagonal tolerance");
  add_format(bounds, o);
  bounds->add_option("--interpretation", o.interpretation, "keep only one reading of the extremal eigenvalues")
      ->check(CLI::IsMember({"proof", "literal"}));

  auto* check = app.add_subcommand("check", "equal-energy characterization for the detected class");
  add_input(check, o);
  add_tol(check, o, "energy equality tolerance");
  add_format(check, o);
  check->add_option("--class", o.graph_class, "force the graph class")
      ->check(CLI::IsMember({"tree", "unicyclic", "cubic", "block", "other"}));
  check->add_option("--cycle-rule", o.cycle_rule, "cycle vertices forming X for cycles of length >= 5")
      ->check(CLI::IsMember({"at-least-3", "at-least-2", "exactly-2"}))
      ->capture_default_str();

  auto* scan = app.add_subcommand("scan", "graphs with equal energies but distinct spectra of D and D_c");
  add_input(scan, o);
  add_tol(scan, o, "energy gap threshold");
  add_format(scan, o);
  scan->add_option("--limit", o.limit, "stop after this many hits")->check(CLI::PositiveNumber);

  auto* qspr = app.add_subcommand("qspr", "alkane descriptor regressions");
  add_input(qspr, o);
  add_format(qspr, o);
  std::vector<std::string> names;
  for (auto p : qspr::kProperties) names.emplace_back(qspr::to_string(p));
  qspr->add_option("--property", o.property, "restrict to one property")->check(CLI::IsMember(names));
  qspr->add_option("--plot-dir", o.plot_dir, "write descriptor,property CSV files here")
      ->check(CLI::ExistingDirectory);
  qspr->add_flag("--skip-bad-rows", o.skip_bad_rows, "report malformed rows but keep going");

  auto* generate = app.add_subcommand("generate", "graph6 corpus of small graphs");
  generate->add_option("--family", o.family, "graph family")
      ->check(CLI::IsMember({"all", "connected", "trees", "unicyclic"}))
      ->capture_default_str();
  generate->add_option("--order", o.order, "number of vertices")->required();

  std::vector<std::string> argv_storage{"cdom"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    std::string payload;
    if (energy->parsed()) payload = cmd_energy(o, in);
    if (spectrum->parsed()) payload = cmd_spectrum(o, in);
    if (bounds->parsed()) payload = cmd_bounds(o, in);
    if (check->parsed()) payload = cmd_check(o, in);
    if (scan->parsed()) payload = cmd_scan(o, in, err);
    if (qspr->parsed()) payload = cmd_qspr(o, in, err);
    if (generate->parsed()) payload = cmd_generate(o);
    out << payload;
    out.flush();
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ConvergenceError& e) {
    err << "internal error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace cdom::cli
