#pragma once

// JSON encodings of the domain types. Parsers report the offending field as a
// path such as "factors[1].exp".

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mldlab/graph.hpp"
#include "mldlab/jets.hpp"
#include "mldlab/monomial.hpp"
#include "mldlab/rational.hpp"
#include "mldlab/rideal.hpp"
#include "mldlab/surface.hpp"
#include "mldlab/toric.hpp"

namespace mldlab::io {

using json = nlohmann::ordered_json;

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
  throw InputError((path.empty() ? std::string("<root>") : path) + ": " + msg);
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains(key)) fail(join(path, key), "missing field");
  return j.at(key);
}

inline std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

template <class T>
T with_path(const std::string& path, const std::function<T()>& fn) {
  try {
    return fn();
  } catch (const IrrationalCenterError&) {
    throw;
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

// ---- scalars ----

inline json emit_rat(const Rat& r) { return to_string(r); }
inline Rat parse_rat_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  return with_path<Rat>(path, [&] { return parse_rat(j.get<std::string>()); });
}

inline json emit_ext(const ExtRat& r) { return r.str(); }
inline ExtRat parse_ext(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected \"p/q\", \"-inf\" or \"+inf\"");
  return with_path<ExtRat>(path, [&] { return ExtRat::parse(j.get<std::string>()); });
}

// ---- monomial ideals ----

inline json emit_ideal(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(g.exps);
  return json{{"n", I.dim()}, {"gens", gens}};
}

inline MonomialIdeal parse_ideal(const json& j, const std::string& path) {
  const auto n = get_int(field(j, "n", path), join(path, "n"));
  if (n < 1) fail(join(path, "n"), "dimension must be >= 1");
  const auto& gs = get_array(field(j, "gens", path), join(path, "gens"));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const std::string p = at(join(path, "gens"), i);
    const auto& g = get_array(gs[i], p);
    if (static_cast<std::int64_t>(g.size()) != n) fail(p, "expected " + std::to_string(n) + " exponents");
    std::vector<int> e;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto v = get_int(g[k], at(p, k));
      if (v < 0) fail(at(p, k), "exponent must be >= 0");
      if (v > 1000000) fail(at(p, k), "exponent too large");
      e.push_back(static_cast<int>(v));
    }
    gens.emplace_back(std::move(e));
  }
  return with_path<MonomialIdeal>(join(path, "gens"), [&] { return normalize_ideal(gens); });
}

// ---- R-ideals ----

inline json emit_rideal(const RIdeal& a) {
  json fs = json::array();
  for (const auto& f : a.factors()) fs.push_back(json{{"ideal", emit_ideal(f.ideal)}, {"exp", emit_rat(f.exp)}});
  return json{{"n", a.dim()}, {"factors", fs}};
}

inline RIdeal parse_rideal(const json& j, const std::string& path = "") {
  const auto& fs = get_array(field(j, "factors", path), join(path, "factors"));
  std::vector<Factor<MonomialIdeal>> f;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = at(join(path, "factors"), i);
    f.push_back({parse_ideal(field(fs[i], "ideal", p), join(p, "ideal")), parse_rat_json(field(fs[i], "exp", p), join(p, "exp"))});
  }
  std::int64_t n;
  if (j.contains("n")) n = get_int(j.at("n"), join(path, "n"));
  else if (!f.empty()) n = f.front().ideal.dim();
  else fail(join(path, "n"), "required when there are no factors");
  return with_path<RIdeal>(path, [&] { return RIdeal(static_cast<int>(n), std::move(f)); });
}

// ---- polynomials and surface ideals ----

inline json emit_poly(const Poly2& p) {
  json ts = json::array();
  for (const auto& [e, c] : p.terms()) ts.push_back(json{{"dx", e.first}, {"dy", e.second}, {"c", emit_rat(c)}});
  return json{{"terms", ts}};
}

inline Poly2 parse_poly(const json& j, const std::string& path) {
  const auto& ts = get_array(field(j, "terms", path), join(path, "terms"));
  Poly2 p;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string q = at(join(path, "terms"), i);
    const auto dx = get_int(field(ts[i], "dx", q), join(q, "dx"));
    const auto dy = get_int(field(ts[i], "dy", q), join(q, "dy"));
    if (dx < 0 || dy < 0) fail(q, "exponents must be >= 0");
    if (dx > 10000 || dy > 10000) fail(q, "exponent too large");
    p = p + Poly2::term(static_cast<int>(dx), static_cast<int>(dy), parse_rat_json(field(ts[i], "c", q), join(q, "c")));
  }
  if (p.is_zero()) fail(path, "polynomial is zero");
  return p;
}

inline json emit_surface_ideal(const SurfaceIdeal& a) {
  json fs = json::array();
  for (const auto& f : a.factors()) {
    json ps = json::array();
    for (const auto& g : f.gens) ps.push_back(emit_poly(g));
    fs.push_back(json{{"polys", ps}, {"exp", emit_rat(f.exp)}});
  }
  return json{{"factors", fs}};
}

/// Factors may be given as "poly" (principal), "polys" (generators) or
/// "ideal" (monomial ideal with n = 2).
inline SurfaceIdeal parse_surface_ideal(const json& j, const std::string& path = "") {
  const auto& fs = get_array(field(j, "factors", path), join(path, "factors"));
  std::vector<SurfaceFactor> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = at(join(path, "factors"), i);
    SurfaceFactor f;
    if (fs[i].contains("poly")) {
      f.gens.push_back(parse_poly(fs[i].at("poly"), join(p, "poly")));
    } else if (fs[i].contains("polys")) {
      const auto& ps = get_array(fs[i].at("polys"), join(p, "polys"));
      for (std::size_t k = 0; k < ps.size(); ++k) f.gens.push_back(parse_poly(ps[k], at(join(p, "polys"), k)));
    } else if (fs[i].contains("ideal")) {
      const auto I = parse_ideal(fs[i].at("ideal"), join(p, "ideal"));
      if (I.dim() != 2) fail(join(p, "ideal.n"), "surface inputs live on A^2");
      for (const auto& g : I.gens()) f.gens.push_back(Poly2::term(g.exps[0], g.exps[1]));
    } else {
      fail(p, "expected one of \"poly\", \"polys\", \"ideal\"");
    }
    f.exp = parse_rat_json(field(fs[i], "exp", p), join(p, "exp"));
    out.push_back(std::move(f));
  }
  return with_path<SurfaceIdeal>(path, [&] { return SurfaceIdeal(std::move(out)); });
}

// ---- results ----

inline json emit_result(const MldResult& r) {
  json j{{"value", emit_ext(r.value)}};
  if (r.weight) j["witness"] = *r.weight;
  else j["witness"] = nullptr;
  if (r.node) j["node"] = *r.node;
  j["k"] = r.k;
  j["ord_m"] = r.ord_m;
  j["certified"] = r.certified;
  return j;
}

inline MldResult parse_result(const json& j, const std::string& path = "") {
  MldResult r;
  r.value = parse_ext(field(j, "value", path), join(path, "value"));
  const auto& w = field(j, "witness", path);
  if (!w.is_null()) {
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < get_array(w, join(path, "witness")).size(); ++i) v.push_back(get_int(w[i], at(join(path, "witness"), i)));
    r.weight = std::move(v);
  }
  if (j.contains("node")) r.node = static_cast<int>(get_int(j.at("node"), join(path, "node")));
  r.k = get_int(field(j, "k", path), join(path, "k"));
  r.ord_m = get_int(field(j, "ord_m", path), join(path, "ord_m"));
  const auto& c = field(j, "certified", path);
  if (!c.is_boolean()) fail(join(path, "certified"), "expected a boolean");
  r.certified = c.get<bool>();
  return r;
}

// ---- blow-up chains ----

inline json emit_chain(const BlowupChain& ch) {
  json nodes = json::array();
  for (const auto& n : ch.nodes) {
    nodes.push_back(json{{"id", n.id},
                         {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                         {"point", json::array({emit_rat(n.point.a), emit_rat(n.point.b)})},
                         {"proximate_to", n.proximate_to},
                         {"k", n.k},
                         {"mults", n.mults},
                         {"ords", n.ords},
                         {"ord_m", n.ord_m},
                         {"self_int", n.self_int},
                         {"a_E", emit_rat(ch.log_discrepancy(n.id))}});
  }
  json edges = json::array();
  for (const auto& [u, v] : ch.edges) edges.push_back(json::array({u, v}));
  json curves = json::array();
  for (std::size_t c = 0; c < ch.curves.size(); ++c)
    curves.push_back(json{{"poly", emit_poly(ch.curves[c].poly)}, {"mult", ch.curves[c].mult}, {"coefficient", emit_rat(ch.curve_coefficient(c))}});
  return json{{"ideal", emit_surface_ideal(ch.ideal)},
              {"resolved", ch.resolved},
              {"nodes", nodes},
              {"dual_graph", json{{"n", ch.nodes.size()}, {"edges", edges}}},
              {"curves", curves}};
}

/// Rebuilds a chain by replaying its blow-ups, then checks the recorded
/// numerical data against the replay.
inline BlowupChain parse_chain(const json& j, const std::string& path = "") {
  BlowupChain ch = start_chain(parse_surface_ideal(field(j, "ideal", path), join(path, "ideal")));
  const auto& nodes = get_array(field(j, "nodes", path), join(path, "nodes"));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string p = at(join(path, "nodes"), i);
    const auto& par = field(nodes[i], "parent", p);
    std::optional<int> parent;
    if (!par.is_null()) parent = static_cast<int>(get_int(par, join(p, "parent")));
    const auto& pt = get_array(field(nodes[i], "point", p), join(p, "point"));
    if (pt.size() != 2) fail(join(p, "point"), "expected two coordinates");
    const Direction d{parse_rat_json(pt[0], at(join(p, "point"), 0)), parse_rat_json(pt[1], at(join(p, "point"), 1))};
    with_path<int>(p, [&] { return blow_up_in_place(ch, parent, d); });
    const auto& n = ch.nodes.back();
    if (nodes[i].contains("k") && get_int(nodes[i].at("k"), join(p, "k")) != n.k) fail(join(p, "k"), "does not match the replayed chain");
    if (nodes[i].contains("self_int")) {
      // self-intersections change as later nodes are added; compared after the replay
    }
  }
  const auto& res = field(j, "resolved", path);
  if (!res.is_boolean()) fail(join(path, "resolved"), "expected a boolean");
  ch.resolved = res.get<bool>();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].contains("self_int") && get_int(nodes[i].at("self_int"), join(at(join(path, "nodes"), i), "self_int")) != ch.nodes[i].self_int)
      fail(join(at(join(path, "nodes"), i), "self_int"), "does not match the replayed chain");
  return ch;
}

// ---- graphs ----

inline json emit_graph(const Graph& g) {
  json e = json::array();
  for (const auto& [u, v] : g.edges()) e.push_back(json::array({u, v}));
  return json{{"n", g.order()}, {"edges", e}};
}

inline Graph parse_graph(const json& j, const std::string& path = "") {
  const auto n = get_int(field(j, "n", path), join(path, "n"));
  if (n < 0 || n > 1000000) fail(join(path, "n"), "vertex count out of range");
  const auto& es = get_array(field(j, "edges", path), join(path, "edges"));
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = at(join(path, "edges"), i);
    if (!es[i].is_array() || es[i].size() != 2) fail(p, "expected [u, v]");
    e.emplace_back(static_cast<int>(get_int(es[i][0], at(p, 0))), static_cast<int>(get_int(es[i][1], at(p, 1))));
  }
  return with_path<Graph>(path, [&] { return Graph(static_cast<int>(n), e); });
}

// ---- jets ----

inline json emit_jet_query(const JetQuery& q) {
  json j{{"ideal", emit_ideal(q.ideal)}, {"q", emit_rat(q.q)}, {"levels", q.levels}};
  if (q.max_level) j["N"] = *q.max_level;
  return j;
}

inline JetQuery parse_jet_query(const json& j, const std::string& path = "") {
  JetQuery q{parse_ideal(field(j, "ideal", path), join(path, "ideal")), parse_rat_json(field(j, "q", path), join(path, "q")), {}, std::nullopt};
  if (q.q <= 0) fail(join(path, "q"), "must be positive");
  const auto& ls = get_array(field(j, "levels", path), join(path, "levels"));
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto m = get_int(ls[i], at(join(path, "levels"), i));
    if (m < 0) fail(at(join(path, "levels"), i), "jet level must be >= 0");
    if (std::find(q.levels.begin(), q.levels.end(), m) != q.levels.end()) fail(at(join(path, "levels"), i), "duplicate jet level");
    q.levels.push_back(m);
  }
  if (j.contains("N")) {
    const auto N = get_int(j.at("N"), join(path, "N"));
    if (N < 0) fail(join(path, "N"), "must be >= 0");
    q.max_level = N;
  }
  return q;
}

inline json emit_jet_report(const JetReport& r) {
  json dims = json::array();
  for (const auto& [m, d] : r.dims) dims.push_back(json{{"m", m}, {"dim", d}});
  return json{{"dims", dims}, {"lc", r.lc}, {"N", r.max_level}};
}

// ---- ideal sequences ----

inline std::vector<MonomialIdeal> parse_ideal_list(const json& j, const std::string& path) {
  std::vector<MonomialIdeal> out;
  const auto& a = get_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_ideal(a[i], at(path, i)));
  return out;
}

/// {"items": [...]} for one sequence or {"sequences": [[...], ...]} for several.
inline std::vector<std::vector<MonomialIdeal>> parse_sequences(const json& j, const std::string& path = "") {
  if (j.is_object() && j.contains("items")) return {parse_ideal_list(j.at("items"), join(path, "items"))};
  if (j.is_object() && j.contains("sequences")) {
    std::vector<std::vector<MonomialIdeal>> out;
    const auto& s = get_array(j.at("sequences"), join(path, "sequences"));
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(parse_ideal_list(s[i], at(join(path, "sequences"), i)));
    return out;
  }
  fail(path, "expected \"items\" or \"sequences\"");
}

inline json emit_sequences(const std::vector<std::vector<MonomialIdeal>>& seqs) {
  const auto list = [](const std::vector<MonomialIdeal>& s) {
    json a = json::array();
    for (const auto& I : s) a.push_back(emit_ideal(I));
    return a;
  };
  if (seqs.size() == 1) return json{{"items", list(seqs[0])}};
  json a = json::array();
  for (const auto& s : seqs) a.push_back(list(s));
  return json{{"sequences", a}};
}

// ---- files ----

inline json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

inline void write_json_file(const std::string& file, const json& j) {
  std::ofstream out(file);
  if (!out) throw InputError(file + ": cannot write");
  out << j.dump(2) << "\n";
}

}  // namespace mldlab::io
