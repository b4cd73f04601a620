#pragma once

// Sampling experiments over monomial R-ideals. Reports are JSON documents
// whose content depends only on the ExperimentSpec, seed included.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mldlab/json_io.hpp"
#include "mldlab/random.hpp"
#include "mldlab/toric.hpp"

namespace mldlab {

enum class ExperimentKind { kBoundedness, kAcc, kIdealAdic };

inline const char* kind_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kBoundedness: return "BOUNDEDNESS";
    case ExperimentKind::kAcc: return "ACC";
    case ExperimentKind::kIdealAdic: return "IDEAL_ADIC";
  }
  return "";
}

struct IdealPair {
  RIdeal a, b;
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kBoundedness;
  int n = 2;
  /// I for BOUNDEDNESS and IDEAL_ADIC, the finite part of J for ACC.
  std::vector<Rat> exponents{Rat(1)};
  /// ACC only: adds 1 - 1/m for m = 1..standard_terms to J.
  int standard_terms = 0;
  int samples = 20;
  std::uint64_t seed = 0;
  int max_degree = 4;
  int max_factors = 2;
  int max_gens = 4;
  std::vector<int> levels;  // IDEAL_ADIC truncation levels s
  int alarm_length = 8;     // ACC
  /// Explicit instances; when present they replace sampling.
  std::vector<RIdeal> family;
  std::vector<IdealPair> pairs;
};

namespace detail {

inline void validate(const ExperimentSpec& s) {
  if (s.n < 1 || s.n > 6) throw InputError("n: must be in 1..6");
  if (s.samples < 1) throw InputError("samples: must be >= 1");
  if (s.max_degree < 1 || s.max_degree > 30) throw InputError("max_degree: must be in 1..30");
  if (s.max_factors < 1) throw InputError("max_factors: must be >= 1");
  if (s.max_gens < 1) throw InputError("max_gens: must be >= 1");
  if (s.standard_terms < 0) throw InputError("standard_terms: must be >= 0");
  if (s.alarm_length < 1) throw InputError("alarm_length: must be >= 1");
  for (std::size_t i = 0; i < s.exponents.size(); ++i)
    if (s.exponents[i] < 0) throw InputError("exponents[" + std::to_string(i) + "]: must be >= 0");
  if (s.exponents.empty() && s.standard_terms == 0 && s.family.empty() && s.pairs.empty())
    throw InputError("exponents: must be nonempty");
  for (std::size_t i = 0; i < s.levels.size(); ++i)
    if (s.levels[i] < 1) throw InputError("levels[" + std::to_string(i) + "]: must be >= 1");
  if (s.kind == ExperimentKind::kIdealAdic && s.levels.empty()) throw InputError("levels: required for IDEAL_ADIC");
}

inline RandomRIdealSpec sampler(const ExperimentSpec& s, std::vector<Rat> exps) {
  RandomRIdealSpec r;
  r.n = s.n;
  r.max_degree = s.max_degree;
  r.max_factors = s.max_factors;
  r.max_gens = s.max_gens;
  r.exponents = std::move(exps);
  return r;
}

inline std::vector<Rat> acc_exponents(const ExperimentSpec& s) {
  std::vector<Rat> j = s.exponents;
  for (int m = 1; m <= s.standard_terms; ++m) j.push_back(Rat(1) - Rat(1, m));
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  return j;
}

/// Length of the longest strictly increasing subsequence, in sample order.
inline std::size_t longest_increasing(const std::vector<ExtRat>& v) {
  std::vector<ExtRat> tails;
  for (const auto& x : v) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return tails.size();
}

/// Keeps the generators of degree < s and adds random ones of degree s..s+2,
/// so that the result agrees with I modulo m^s.
inline MonomialIdeal perturb_mod(Rng& rng, const MonomialIdeal& I, int s) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens())
    if (g.degree() < s) gens.push_back(g);
  std::vector<Monomial> pool;
  for (int d = s; d <= s + 2; ++d) for_each_monomial_of_degree(I.dim(), d, [&](const std::vector<int>& e) { pool.emplace_back(e); });
  const auto extra = rng.uniform(gens.empty() ? 1 : 0, 2);
  for (std::int64_t i = 0; i < extra; ++i) gens.push_back(rng.pick(pool));
  return normalize_ideal(std::move(gens));
}

inline bool agree_mod(const RIdeal& a, const RIdeal& b, int s) {
  if (a.dim() != b.dim() || a.factors().size() != b.factors().size()) return false;
  for (std::size_t j = 0; j < a.factors().size(); ++j) {
    if (a.factors()[j].exp != b.factors()[j].exp) return false;
    if (sum_with_power_of_max_ideal(a.factors()[j].ideal, s) != sum_with_power_of_max_ideal(b.factors()[j].ideal, s))
      return false;
  }
  return true;
}

inline io::json sample_entry(const RIdeal& a, const MldResult& r) {
  io::json e{{"ideal", io::emit_rideal(a)}};
  e["mld"] = io::emit_ext(r.value);
  e["witness"] = r.weight ? io::json(*r.weight) : io::json(nullptr);
  e["witness_k"] = r.k;
  e["witness_ord_m"] = r.ord_m;
  e["certified"] = r.certified;
  return e;
}

inline io::json run_boundedness(const ExperimentSpec& s, const SearchConfig& cfg) {
  std::vector<ToricProblem> fam;
  if (!s.family.empty()) {
    for (const auto& a : s.family) fam.push_back({a});
  } else {
    Rng rng(s.seed);
    const auto sp = sampler(s, s.exponents);
    for (int i = 0; i < s.samples; ++i) fam.push_back({random_rideal(rng, sp)});
  }
  const auto rep = boundedness_probe(fam, cfg);
  io::json samples = io::json::array();
  std::map<std::int64_t, std::int64_t> hist_k, hist_ord;
  std::vector<std::size_t> uncertified;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    samples.push_back(sample_entry(fam[i].a, rep.entries[i]));
    ++hist_k[rep.entries[i].k];
    ++hist_ord[rep.entries[i].ord_m];
    if (!rep.entries[i].certified) uncertified.push_back(i);
  }
  const auto hist = [](const std::map<std::int64_t, std::int64_t>& h, const char* key) {
    io::json a = io::json::array();
    for (const auto& [v, c] : h) a.push_back(io::json{{key, v}, {"count", c}});
    return a;
  };
  io::json viol = io::json::array();
  for (const auto& [i, j] : rep.violations) viol.push_back(io::json::array({i, j}));
  return io::json{{"kind", "BOUNDEDNESS"},
                   {"n", fam.front().dim()},
                   {"seed", s.seed},
                   {"sample_count", fam.size()},
                   {"all_certified", rep.all_certified},
                   {"uncertified", uncertified},
                   {"max_witness_k", rep.max_k},
                   {"max_witness_ord_m", rep.max_ord_m},
                   {"histogram_k", hist(hist_k, "k")},
                   {"histogram_ord_m", hist(hist_ord, "ord_m")},
                   {"comparable_pairs", rep.comparable_pairs},
                   {"monotonicity_violations", viol},
                   {"samples", samples}};
}

inline io::json run_acc(const ExperimentSpec& s, const SearchConfig& cfg) {
  const auto J = acc_exponents(s);
  std::vector<RIdeal> fam = s.family;
  if (fam.empty()) {
    if (J.empty()) throw InputError("exponents: J must be nonempty");
    Rng rng(s.seed);
    const auto sp = sampler(s, J);
    for (int i = 0; i < s.samples; ++i) fam.push_back(random_rideal(rng, sp));
  }
  std::vector<ExtRat> values;
  bool certified = true;
  for (const auto& a : fam) {
    const auto r = mld_monomial({a}, cfg);
    certified = certified && r.certified;
    values.push_back(r.value);
  }
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  io::json multiset = io::json::array(), distinct = io::json::array();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    multiset.push_back(io::emit_ext(sorted[i]));
    if (i == 0 || sorted[i] != sorted[i - 1]) distinct.push_back(io::emit_ext(sorted[i]));
  }
  io::json jv = io::json::array();
  for (const auto& x : J) jv.push_back(io::emit_rat(x));
  const auto run = longest_increasing(values);
  return io::json{{"kind", "ACC"},
                   {"n", fam.front().dim()},
                   {"seed", s.seed},
                   {"sample_count", fam.size()},
                   {"J", jv},
                   {"all_certified", certified},
                   {"values", multiset},
                   {"distinct_values", distinct},
                   {"longest_increasing_run", run},
                   {"alarm_length", s.alarm_length},
                   {"alarm", static_cast<int>(run) > s.alarm_length}};
}

inline io::json run_ideal_adic(const ExperimentSpec& s, const SearchConfig& cfg) {
  auto levels = s.levels;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Rng rng(s.seed);
  const auto sp = sampler(s, s.exponents);
  std::vector<RIdeal> base;
  if (s.pairs.empty())
    for (int i = 0; i < s.samples; ++i) base.push_back(random_rideal(rng, sp));
  io::json per_level = io::json::array();
  std::optional<int> smallest;
  bool certified = true;
  for (int lvl : levels) {
    std::vector<IdealPair> pairs = s.pairs;
    if (s.pairs.empty()) {
      for (const auto& a : base) {
        std::vector<Factor<MonomialIdeal>> f;
        for (const auto& x : a.factors()) f.push_back({perturb_mod(rng, x.ideal, lvl), x.exp});
        pairs.push_back({a, RIdeal(a.dim(), std::move(f))});
      }
    }
    std::int64_t eligible = 0, agree = 0;
    io::json mismatches = io::json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!agree_mod(pairs[i].a, pairs[i].b, lvl)) continue;
      ++eligible;
      const auto ra = mld_monomial({pairs[i].a}, cfg), rb = mld_monomial({pairs[i].b}, cfg);
      certified = certified && ra.certified && rb.certified;
      if (ra.value == rb.value) {
        ++agree;
      } else {
        mismatches.push_back(io::json{{"index", i},
                                      {"a", io::emit_rideal(pairs[i].a)},
                                      {"b", io::emit_rideal(pairs[i].b)},
                                      {"mld_a", io::emit_ext(ra.value)},
                                      {"mld_b", io::emit_ext(rb.value)}});
      }
    }
    if (!smallest && eligible > 0 && agree == eligible) smallest = lvl;
    per_level.push_back(io::json{{"s", lvl}, {"pairs", eligible}, {"agree", agree}, {"mismatches", mismatches}});
  }
  return io::json{{"kind", "IDEAL_ADIC"},
                   {"n", s.pairs.empty() ? s.n : s.pairs.front().a.dim()},
                   {"seed", s.seed},
                   {"all_certified", certified},
                   {"levels", per_level},
                   {"smallest_agreeing_s", smallest ? io::json(*smallest) : io::json(nullptr)}};
}

}  // namespace detail

inline io::json run_experiment(const ExperimentSpec& spec, const SearchConfig& cfg = {}) {
  detail::validate(spec);
  switch (spec.kind) {
    case ExperimentKind::kBoundedness: return detail::run_boundedness(spec, cfg);
    case ExperimentKind::kAcc: return detail::run_acc(spec, cfg);
    case ExperimentKind::kIdealAdic: return detail::run_ideal_adic(spec, cfg);
  }
  return {};
}

namespace io {

inline json emit_experiment_spec(const ExperimentSpec& s) {
  json e = json::array();
  for (const auto& x : s.exponents) e.push_back(emit_rat(x));
  json j{{"kind", kind_name(s.kind)},
         {"n", s.n},
         {"exponents", e},
         {"standard_terms", s.standard_terms},
         {"samples", s.samples},
         {"seed", s.seed},
         {"max_degree", s.max_degree},
         {"max_factors", s.max_factors},
         {"max_gens", s.max_gens},
         {"levels", s.levels},
         {"alarm_length", s.alarm_length}};
  json fam = json::array();
  for (const auto& a : s.family) fam.push_back(emit_rideal(a));
  j["family"] = fam;
  json pairs = json::array();
  for (const auto& p : s.pairs) pairs.push_back(json{{"a", emit_rideal(p.a)}, {"b", emit_rideal(p.b)}});
  j["pairs"] = pairs;
  return j;
}

inline ExperimentSpec parse_experiment_spec(const json& j, const std::string& path = "") {
  ExperimentSpec s;
  const auto& k = field(j, "kind", path);
  const std::string ks = k.is_string() ? k.get<std::string>() : "";
  if (ks == "BOUNDEDNESS") s.kind = ExperimentKind::kBoundedness;
  else if (ks == "ACC") s.kind = ExperimentKind::kAcc;
  else if (ks == "IDEAL_ADIC") s.kind = ExperimentKind::kIdealAdic;
  else fail(join(path, "kind"), "expected BOUNDEDNESS, ACC or IDEAL_ADIC");
  const auto small_int = [&](const char* key, int& out) {
    if (!j.contains(key)) return;
    const auto v = get_int(j.at(key), join(path, key));
    if (v < -1000000 || v > 1000000) fail(join(path, key), "out of range");
    out = static_cast<int>(v);
  };
  small_int("n", s.n);
  small_int("standard_terms", s.standard_terms);
  small_int("samples", s.samples);
  small_int("max_degree", s.max_degree);
  small_int("max_factors", s.max_factors);
  small_int("max_gens", s.max_gens);
  small_int("alarm_length", s.alarm_length);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) fail(join(path, "seed"), "expected an integer");
    if (j.at("seed").is_number_integer() && j.at("seed").get<std::int64_t>() < 0) fail(join(path, "seed"), "must be >= 0");
    s.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("exponents")) {
    s.exponents.clear();
    const auto& e = get_array(j.at("exponents"), join(path, "exponents"));
    for (std::size_t i = 0; i < e.size(); ++i) s.exponents.push_back(parse_rat_json(e[i], at(join(path, "exponents"), i)));
  }
  if (j.contains("levels")) {
    const auto& l = get_array(j.at("levels"), join(path, "levels"));
    for (std::size_t i = 0; i < l.size(); ++i) s.levels.push_back(static_cast<int>(get_int(l[i], at(join(path, "levels"), i))));
  }
  if (j.contains("family")) {
    const auto& f = get_array(j.at("family"), join(path, "family"));
    for (std::size_t i = 0; i < f.size(); ++i) s.family.push_back(parse_rideal(f[i], at(join(path, "family"), i)));
  }
  if (j.contains("pairs")) {
    const auto& p = get_array(j.at("pairs"), join(path, "pairs"));
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string q = at(join(path, "pairs"), i);
      s.pairs.push_back({parse_rideal(field(p[i], "a", q), join(q, "a")), parse_rideal(field(p[i], "b", q), join(q, "b"))});
    }
  }
  try {
    detail::validate(s);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return s;
}

}  // namespace io
}  // namespace mldlab
