#include <gtest/gtest.h>

#include <set>
#include <string>

#include "mldlab/experiment.hpp"
#include "mldlab/json_io.hpp"
#include "mldlab/random.hpp"
#include "oracles.hpp"

using namespace mldlab;
using io::json;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

RIdeal principal(int n, std::vector<int> e, Rat exp) {
  return RIdeal(n, {{normalize_ideal({Monomial(std::move(e))}), std::move(exp)}});
}

}  // namespace

TEST(Json, RIdealRoundTrip) {
  const RIdeal a(2, {{make_ideal({{2, 0}, {1, 1}, {0, 3}}), make_rat(3, 2)}, {make_ideal({{1, 0}}), make_rat(1, 3)}});
  const auto j = io::emit_rideal(a);
  EXPECT_EQ(j.dump(), R"({"n":2,"factors":[{"ideal":{"n":2,"gens":[[2,0],[1,1],[0,3]]},"exp":"3/2"},{"ideal":{"n":2,"gens":[[1,0]]},"exp":"1/3"}]})");
  EXPECT_EQ(io::parse_rideal(j), a);
  EXPECT_EQ(io::parse_rideal(json::parse(j.dump())), a);
}

TEST(Json, RandomRIdealsRoundTrip) {
  Rng rng(11);
  RandomRIdealSpec sp{3, 5, 3, 4, {make_rat(1, 3), make_rat(1, 2), Rat(1), make_rat(3, 2)}};
  for (int i = 0; i < 100; ++i) {
    const auto a = random_rideal(rng, sp);
    const auto text = io::emit_rideal(a).dump();
    EXPECT_EQ(io::parse_rideal(json::parse(text)), a);
    EXPECT_EQ(io::emit_rideal(io::parse_rideal(json::parse(text))).dump(), text);
  }
}

TEST(Json, NonCanonicalInputNormalizes) {
  const auto a = io::parse_rideal(json::parse(R"({"factors":[{"ideal":{"n":2,"gens":[[3,0],[2,0],[0,1]]},"exp":"4/6"}]})"));
  EXPECT_EQ(a, RIdeal(2, {{make_ideal({{2, 0}, {0, 1}}), make_rat(2, 3)}}));
  const auto b = io::parse_rideal(json::parse(R"({"factors":[{"ideal":{"n":1,"gens":[[1]]},"exp":2}]})"));
  EXPECT_EQ(b.factors()[0].exp, Rat(2));
}

TEST(Json, ExtRatRoundTrip) {
  for (const auto& e : {ExtRat::neg_inf(), ExtRat::pos_inf(), ExtRat(make_rat(-7, 3)), ExtRat(Rat(0))})
    EXPECT_EQ(io::parse_ext(io::emit_ext(e), "v"), e);
  EXPECT_EQ(io::emit_ext(ExtRat::neg_inf()).dump(), "\"-inf\"");
}

TEST(Json, ResultRoundTrip) {
  MldResult r{ExtRat(make_rat(1, 2)), std::vector<std::int64_t>{1, 2}, std::nullopt, 2, 1, true};
  EXPECT_EQ(io::emit_result(r).dump(), R"({"value":"1/2","witness":[1,2],"k":2,"ord_m":1,"certified":true})");
  EXPECT_EQ(io::parse_result(io::emit_result(r)), r);
  MldResult s{ExtRat::neg_inf(), std::nullopt, 3, 4, 2, false};
  EXPECT_EQ(io::parse_result(io::emit_result(s)), s);
}

TEST(Json, NegativeExponentNamesField) {
  const auto msg = error_of([] {
    io::parse_rideal(json::parse(R"({"factors":[{"ideal":{"n":2,"gens":[[1,0]]},"exp":"1"},{"ideal":{"n":2,"gens":[[0,1]]},"exp":"-1/2"}]})"));
  });
  EXPECT_NE(msg.find("factors[1].exp"), std::string::npos) << msg;
}

TEST(Json, SchemaErrorsCarryPaths) {
  const auto has = [](const std::string& text, const std::string& path) {
    const auto msg = error_of([&] { io::parse_rideal(json::parse(text)); });
    return msg.find(path) != std::string::npos;
  };
  EXPECT_TRUE(has(R"({"factors":[{"exp":"1"}]})", "factors[0].ideal"));
  EXPECT_TRUE(has(R"({"factors":[{"ideal":{"n":2,"gens":[[1,0,0]]},"exp":"1"}]})", "factors[0].ideal.gens[0]"));
  EXPECT_TRUE(has(R"({"factors":[{"ideal":{"n":2,"gens":[[1,-1]]},"exp":"1"}]})", "factors[0].ideal.gens[0][1]"));
  EXPECT_TRUE(has(R"({"factors":[{"ideal":{"n":2,"gens":[[1,0]]},"exp":"x"}]})", "factors[0].exp"));
  EXPECT_TRUE(has(R"({"factors":[]})", "n"));
  EXPECT_TRUE(has(R"([1,2])", "<root>"));
}

TEST(Json, PolyAndSurfaceIdealRoundTrip) {
  const Poly2 f = Poly2::y().pow(2) - Poly2::x().pow(3) + Poly2::term(1, 1, make_rat(2, 5));
  EXPECT_EQ(io::parse_poly(io::emit_poly(f), "p"), f);
  const SurfaceIdeal a({{{f}, make_rat(5, 6)}, {{Poly2::x(), Poly2::y().pow(2)}, Rat(1)}});
  const auto j = io::emit_surface_ideal(a);
  const auto b = io::parse_surface_ideal(json::parse(j.dump()));
  EXPECT_EQ(io::emit_surface_ideal(b).dump(), j.dump());
  // the monomial and principal spellings
  const auto c = io::parse_surface_ideal(json::parse(
      R"({"factors":[{"ideal":{"n":2,"gens":[[1,0],[0,2]]},"exp":"1"},{"poly":{"terms":[{"dx":0,"dy":2,"c":"1"},{"dx":3,"dy":0,"c":"-1"}]},"exp":"1/2"}]})"));
  EXPECT_EQ(c.factors()[0].gens.size(), 2u);
  EXPECT_EQ(c.factors()[1].gens[0], Poly2::y().pow(2) - Poly2::x().pow(3));
  const auto msg = error_of([] { io::parse_surface_ideal(json::parse(R"({"factors":[{"poly":{"terms":[{"dx":0,"dy":0,"c":"1"}]},"exp":"1"}]})")); });
  EXPECT_NE(msg.find("factors[0]"), std::string::npos) << msg;
}

TEST(Json, ChainRoundTripByReplay) {
  const SurfaceIdeal cusp({{{Poly2::y().pow(2) - Poly2::x().pow(3)}, make_rat(5, 6)}});
  const auto ch = log_resolve(cusp);
  const auto j = io::emit_chain(ch);
  const auto back = io::parse_chain(json::parse(j.dump()));
  EXPECT_EQ(io::emit_chain(back).dump(), j.dump());
  auto bad = j;
  bad["nodes"][1]["k"] = 17;
  const auto msg = error_of([&] { io::parse_chain(bad); });
  EXPECT_NE(msg.find("nodes[1].k"), std::string::npos) << msg;
}

TEST(Json, GraphJetsAndSequencesRoundTrip) {
  const Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_EQ(io::parse_graph(io::emit_graph(g)).edges(), g.edges());
  EXPECT_NE(error_of([] { io::parse_graph(json::parse(R"({"n":2,"edges":[[0,1],[1,0]]})")); }).find("edges[1]"), std::string::npos);

  const JetQuery q{make_ideal({{2, 0}, {0, 3}}), make_rat(5, 6), {0, 1, 4}, 9};
  const auto q2 = io::parse_jet_query(io::emit_jet_query(q));
  EXPECT_EQ(q2.ideal, q.ideal);
  EXPECT_EQ(q2.q, q.q);
  EXPECT_EQ(q2.levels, q.levels);
  EXPECT_EQ(q2.max_level, q.max_level);
  EXPECT_NE(error_of([] { io::parse_jet_query(json::parse(R"({"ideal":{"n":1,"gens":[[1]]},"q":"1","levels":[2,2]})")); }).find("levels[1]"),
            std::string::npos);

  const std::vector<std::vector<MonomialIdeal>> one{{make_ideal({{1, 0}}), make_ideal({{2, 0}})}};
  EXPECT_EQ(io::parse_sequences(io::emit_sequences(one)), one);
  const std::vector<std::vector<MonomialIdeal>> two{{make_ideal({{1}})}, {make_ideal({{3}})}};
  EXPECT_EQ(io::parse_sequences(io::emit_sequences(two)), two);
}

TEST(Json, ExperimentSpecRoundTrip) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kIdealAdic;
  s.exponents = {make_rat(1, 2), Rat(1)};
  s.levels = {3, 6};
  s.seed = 99;
  s.pairs.push_back({principal(2, {5, 0}, 1), RIdeal(2, {{make_ideal({{5, 0}, {0, 9}}), Rat(1)}})});
  const auto j = io::emit_experiment_spec(s);
  EXPECT_EQ(io::emit_experiment_spec(io::parse_experiment_spec(json::parse(j.dump()))).dump(), j.dump());
  EXPECT_NE(error_of([] { io::parse_experiment_spec(json::parse(R"({"kind":"NOPE"})")); }).find("kind"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_experiment_spec(json::parse(R"({"kind":"ACC","samples":0})")); }).find("samples"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_experiment_spec(json::parse(R"({"kind":"IDEAL_ADIC"})")); }).find("levels"), std::string::npos);
}

TEST(Experiment, BoundednessDiagonalFamily) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kBoundedness;
  s.seed = 5;
  for (int i = 1; i <= 3; ++i) s.family.push_back(RIdeal(2, {{make_ideal({{i, 0}, {0, i}}), Rat(1)}}));
  const auto rep = run_experiment(s);
  EXPECT_EQ(rep["max_witness_k"], 1);
  EXPECT_EQ(rep["max_witness_ord_m"], 1);
  EXPECT_EQ(rep["all_certified"], true);
  // brute-force values: 2 - i at weight (1,1)
  for (int i = 1; i <= 3; ++i) {
    const auto b = oracle::brute_mld(s.family[i - 1], 12);
    EXPECT_EQ(rep["samples"][i - 1]["mld"], b.value.str());
    EXPECT_EQ(b.witness, (std::vector<std::int64_t>{1, 1}));
  }
}

TEST(Experiment, BoundednessFlagsUncertified) {
  ExperimentSpec s;
  s.samples = 15;
  s.seed = 3;
  s.max_degree = 5;
  SearchConfig tiny{2, SearchMode::kOracle};
  const auto rep = run_experiment(s, tiny);
  std::size_t bad = 0;
  for (const auto& e : rep["samples"]) bad += e["certified"] == false;
  EXPECT_GT(bad, 0u);
  EXPECT_EQ(rep["all_certified"], false);
  EXPECT_EQ(rep["uncertified"].size(), bad);
}

TEST(Experiment, AccValuesInsideExhaustiveSet) {
  // every mld of a single degree <= 2 monomial ideal on A^2 with exponent 1
  std::set<std::string> all;
  const auto pool = monomials_up_to_degree(2, 2);
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1u) gens.push_back(pool[i]);
    all.insert(oracle::brute_mld(RIdeal(2, {{normalize_ideal(gens), Rat(1)}}), 12).value.str());
  }
  ExperimentSpec s;
  s.kind = ExperimentKind::kAcc;
  s.max_degree = 2;
  s.max_factors = 1;
  s.samples = 60;
  s.seed = 21;
  const auto rep = run_experiment(s);
  for (const auto& v : rep["values"]) EXPECT_TRUE(all.count(v.get<std::string>())) << v;
  EXPECT_LE(rep["longest_increasing_run"].get<std::size_t>(), rep["distinct_values"].size());
  EXPECT_LE(rep["distinct_values"].size(), all.size());
}

TEST(Experiment, IdealAdicExplicitPair) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kIdealAdic;
  s.levels = {6};
  const RIdeal a = principal(2, {5, 0}, 1);
  const RIdeal b(2, {{make_ideal({{5, 0}, {0, 9}}), Rat(1)}});
  s.pairs.push_back({a, b});
  const auto rep = run_experiment(s);
  EXPECT_EQ(rep["levels"][0]["pairs"], 1);
  const bool same = mld_monomial({a}).value == mld_monomial({b}).value;
  EXPECT_EQ(rep["levels"][0]["agree"], same ? 1 : 0);
  // a = (x^5): E_x gives 1 - 5 < 0, so -inf; b = (x^5, y^9) stays -inf as well
  EXPECT_EQ(oracle::brute_mld(a, 12).value, ExtRat::neg_inf());
  EXPECT_EQ(oracle::brute_mld(b, 20).value, mld_monomial({b}).value);
}

TEST(Experiment, IdealAdicSampledPairsAgreeModulo) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kIdealAdic;
  s.levels = {2, 4, 8};
  s.samples = 12;
  s.seed = 8;
  s.exponents = {make_rat(1, 2), Rat(1)};
  const auto rep = run_experiment(s);
  for (const auto& l : rep["levels"]) EXPECT_EQ(l["pairs"], 12);
}

TEST(Experiment, Deterministic) {
  for (auto kind : {ExperimentKind::kBoundedness, ExperimentKind::kAcc, ExperimentKind::kIdealAdic}) {
    ExperimentSpec s;
    s.kind = kind;
    s.seed = 1234;
    s.samples = 10;
    s.levels = {3, 5};
    s.standard_terms = 3;
    EXPECT_EQ(run_experiment(s).dump(), run_experiment(s).dump());
    auto t = s;
    t.seed = 1235;
    EXPECT_NE(run_experiment(s).dump(), run_experiment(t).dump());
  }
}
