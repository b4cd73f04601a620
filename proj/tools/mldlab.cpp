// mldlab command-line driver.
//
// Exit codes: 0 ok, 2 bad input, 3 some result is uncertified, 4 a guard
// (depth cap, size limit) tripped.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "mldlab/antichain.hpp"
#include "mldlab/experiment.hpp"
#include "mldlab/graph.hpp"
#include "mldlab/jets.hpp"
#include "mldlab/json_io.hpp"
#include "mldlab/surface.hpp"
#include "mldlab/toric.hpp"

using namespace mldlab;
using io::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUncertified = 3;
constexpr int kExitGuard = 4;

struct Globals {
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool as_json = false;
  bool oracle = false;
  std::int64_t bound = 0;
  int depth_cap = kDefaultDepthCap;
};

SearchConfig search_config(const Globals& g) {
  SearchConfig c;
  c.oracle_bound = g.bound;
  c.mode = g.oracle ? SearchMode::kOracle : SearchMode::kExactLp;
  if (g.bound < 0) throw InputError("--bound: must be >= 0");
  return c;
}

std::string result_line(const char* what, const MldResult& r) {
  std::ostringstream os;
  os << what << " = " << r.value.str();
  if (r.weight) {
    os << "  witness (";
    for (std::size_t i = 0; i < r.weight->size(); ++i) os << (i ? "," : "") << (*r.weight)[i];
    os << ")";
  }
  if (r.node) os << "  node " << *r.node;
  os << "  k=" << r.k << " ord_m=" << r.ord_m;
  if (!r.certified) os << "  UNCERTIFIED";
  return os.str();
}

int emit(const Globals& g, const json& j, const std::string& text) {
  if (g.as_json) std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
  return 0;
}

ToricProblem read_problem(const std::string& file) { return {io::parse_rideal(io::read_json_file(file))}; }

int cmd_mld(const Globals& g, const std::string& in) {
  const auto r = mld_monomial(read_problem(in), search_config(g));
  emit(g, io::emit_result(r), result_line("mld", r));
  return r.certified ? 0 : kExitUncertified;
}

int cmd_lct(const Globals& g, const std::string& in) {
  const auto r = lct_monomial(read_problem(in), search_config(g));
  emit(g, io::emit_result(r), result_line("lct", r));
  return r.certified ? 0 : kExitUncertified;
}

int cmd_delta(const Globals& g, const std::string& in) {
  const auto d = delta_threshold(read_problem(in), search_config(g));
  return emit(g, json{{"delta", io::emit_rat(d)}}, "delta = " + to_string(d));
}

int cmd_jets(const Globals& g, const std::string& in) {
  const auto rep = run_jet_query(io::parse_jet_query(io::read_json_file(in)));
  std::ostringstream os;
  for (const auto& [m, d] : rep.dims) os << "dim Y_" << m << " = " << d << "\n";
  os << "log canonical up to level " << rep.max_level << ": " << (rep.lc ? "yes" : "no");
  return emit(g, io::emit_jet_report(rep), os.str());
}

int cmd_chain(const Globals& g, const std::string& in, std::int64_t len) {
  if (len < 1) throw InputError("--len: must be >= 1");
  const auto seqs = io::parse_sequences(io::read_json_file(in));
  const auto idx = seqs.size() == 1 ? extract_descending_chain(seqs[0], static_cast<std::size_t>(len))
                                    : multi_factor_descending(seqs, static_cast<std::size_t>(len));
  std::ostringstream os;
  os << "indices";
  for (auto i : idx) os << " " << i;
  return emit(g, json{{"indices", idx}}, os.str());
}

int cmd_resolve2d(const Globals& g, const std::string& in, const std::string& out) {
  const auto ch = log_resolve(io::parse_surface_ideal(io::read_json_file(in)), g.depth_cap);
  const auto j = io::emit_chain(ch);
  if (!out.empty()) io::write_json_file(out, j);
  std::ostringstream os;
  os << ch.nodes.size() << " blow-ups\n";
  for (const auto& n : ch.nodes)
    os << "E" << n.id << " parent " << (n.parent ? std::to_string(*n.parent) : "-") << " point " << n.point.str() << " k=" << n.k
       << " ord_m=" << n.ord_m << " E^2=" << n.self_int << " a=" << to_string(ch.log_discrepancy(n.id)) << "\n";
  os << "curves through the origin: " << ch.curves.size();
  return emit(g, j, os.str());
}

int cmd_mld2d(const Globals& g, const std::string& in) {
  const auto a = io::parse_surface_ideal(io::read_json_file(in));
  const auto ch = log_resolve(a, g.depth_cap);
  const auto m = mld_from_chain(ch), l = lct_from_chain(ch);
  return emit(g, json{{"mld", io::emit_result(m)}, {"lct", io::emit_result(l)}}, result_line("mld", m) + "\n" + result_line("lct", l));
}

int cmd_graphchain(const Globals& g, const std::string& in, int v, int len) {
  const auto j = io::read_json_file(in);
  const Graph gr = j.contains("nodes") ? dual_graph(io::parse_chain(j)) : io::parse_graph(j);
  const auto r = find_chain_in_graph(gr, v, len);
  json out{{"order", gr.order()}, {"bound", chain_order_bound(len)}, {"route", route_name(r.route)}};
  out["path"] = r.path ? json(*r.path) : json(nullptr);
  std::ostringstream os;
  if (r.path) {
    os << "path";
    for (int u : *r.path) os << " " << u;
    os << "  (" << route_name(r.route) << ")";
  } else {
    os << "no induced path of " << len << " vertices from " << v;
  }
  return emit(g, out, os.str());
}

int cmd_probe(const Globals& g, ExperimentKind kind, const std::string& spec_file, const std::string& family_file,
              const std::string& out) {
  ExperimentSpec s;
  if (!spec_file.empty()) s = io::parse_experiment_spec(io::read_json_file(spec_file));
  s.kind = kind;
  if (!family_file.empty()) {
    const auto j = io::read_json_file(family_file);
    const auto& arr = j.is_array() ? j : io::field(j, "family", "");
    s.family.clear();
    for (std::size_t i = 0; i < io::get_array(arr, "family").size(); ++i) s.family.push_back(io::parse_rideal(arr[i], io::at("family", i)));
  }
  if (g.seed_set) s.seed = g.seed;
  const auto rep = run_experiment(s, search_config(g));
  if (!out.empty()) io::write_json_file(out, rep);
  std::ostringstream os;
  os << kind_name(kind) << " seed " << s.seed;
  if (kind == ExperimentKind::kBoundedness)
    os << "  samples " << rep["sample_count"] << "  max k " << rep["max_witness_k"] << "  max ord_m " << rep["max_witness_ord_m"];
  if (kind == ExperimentKind::kAcc)
    os << "  distinct values " << rep["distinct_values"].size() << "  longest increasing run " << rep["longest_increasing_run"]
       << (rep["alarm"].get<bool>() ? "  ALARM" : "");
  if (kind == ExperimentKind::kIdealAdic)
    os << "  smallest agreeing s " << (rep["smallest_agreeing_s"].is_null() ? "none" : rep["smallest_agreeing_s"].dump());
  if (!rep["all_certified"].get<bool>()) os << "  UNCERTIFIED";
  emit(g, rep, os.str());
  return rep["all_certified"].get<bool>() ? 0 : kExitUncertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal log discrepancies of monomial and planar R-ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for sampled experiments")->each([&](const std::string&) { g.seed_set = true; });
  app.add_flag("--json", g.as_json, "print JSON instead of text");
  app.add_option("--bound", g.bound, "oracle bound on sum(v); 0 picks the default");
  app.add_flag("--oracle", g.oracle, "use the bounded brute-force search");
  app.add_option("--depth-cap", g.depth_cap, "maximum number of blow-ups")->check(CLI::PositiveNumber);

  std::string input, out, family, spec;
  std::int64_t len = 0;
  int vertex = 0;
  int code = 0;
  const auto need_input = [&](CLI::App* c) { c->add_option("--input", input, "input JSON file")->required(); };

  auto* mld = app.add_subcommand("mld", "mld at the origin of a monomial R-ideal");
  need_input(mld);
  auto* lct = app.add_subcommand("lct", "log canonical threshold of a monomial R-ideal");
  need_input(lct);
  auto* delta = app.add_subcommand("delta", "largest t with a^t log canonical");
  need_input(delta);
  auto* jets = app.add_subcommand("jets", "jet scheme dimensions of the contact loci");
  need_input(jets);
  auto* chain = app.add_subcommand("chain", "descending chain extraction from ideal sequences");
  need_input(chain);
  chain->add_option("--len", len, "chain length")->required();
  auto* res = app.add_subcommand("resolve2d", "log resolution of an R-ideal on A^2");
  need_input(res);
  res->add_option("--out", out, "write chain JSON here");
  auto* mld2d = app.add_subcommand("mld2d", "mld and lct on A^2 through a log resolution");
  need_input(mld2d);
  auto* gch = app.add_subcommand("graphchain", "induced path in a subcubic graph");
  need_input(gch);
  gch->add_option("--v", vertex, "start vertex")->required();
  gch->add_option("--len", len, "number of vertices")->required();

  auto* probe = app.add_subcommand("probe", "sampling experiments");
  probe->require_subcommand(1);
  auto* pb = probe->add_subcommand("boundedness", "witness k and ord_m statistics");
  auto* pa = probe->add_subcommand("acc", "mld values over exponents from J");
  auto* pi = probe->add_subcommand("ideal-adic", "mld under perturbation modulo m^s");
  for (auto* p : {pb, pa, pi}) {
    p->add_option("--spec", spec, "experiment spec JSON");
    p->add_option("--out", out, "write the report here");
  }
  pb->add_option("--family", family, "explicit family of R-ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*mld) code = cmd_mld(g, input);
    else if (*lct) code = cmd_lct(g, input);
    else if (*delta) code = cmd_delta(g, input);
    else if (*jets) code = cmd_jets(g, input);
    else if (*chain) code = cmd_chain(g, input, len);
    else if (*res) code = cmd_resolve2d(g, input, out);
    else if (*mld2d) code = cmd_mld2d(g, input);
    else if (*gch) code = cmd_graphchain(g, input, vertex, static_cast<int>(len));
    else if (*pb) code = cmd_probe(g, ExperimentKind::kBoundedness, spec, family, out);
    else if (*pa) code = cmd_probe(g, ExperimentKind::kAcc, spec, family, out);
    else if (*pi) code = cmd_probe(g, ExperimentKind::kIdealAdic, spec, family, out);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GuardError& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return kExitGuard;
  }
  return code;
}
