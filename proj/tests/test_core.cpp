#include <gtest/gtest.h>

#include <algorithm>

#include "mldlab/monomial.hpp"
#include "mldlab/random.hpp"
#include "mldlab/rational.hpp"
#include "mldlab/rideal.hpp"

using namespace mldlab;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rat("6/4"), make_rat(3, 2));
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-4/2")), "-2");
  EXPECT_EQ(parse_rat("+5"), Rat(5));
  EXPECT_THROW(parse_rat("1/0"), InputError);
  EXPECT_THROW(parse_rat("a/2"), InputError);
  EXPECT_THROW(parse_rat("1/-2"), InputError);
  EXPECT_THROW(parse_rat(""), InputError);
}

TEST(Rational, ExtendedOrder) {
  const ExtRat neg = ExtRat::neg_inf(), pos = ExtRat::pos_inf();
  EXPECT_LT(neg, ExtRat(Rat(-100)));
  EXPECT_LT(ExtRat(Rat(100)), pos);
  EXPECT_EQ(ExtRat::parse("-inf"), neg);
  EXPECT_EQ(ExtRat::parse("7/3").str(), "7/3");
  EXPECT_FALSE(neg < neg);
}

TEST(Normalize, DropsDominatedGenerators) {
  EXPECT_EQ(make_ideal({{2, 0}, {3, 0}, {0, 1}}), make_ideal({{2, 0}, {0, 1}}));
  EXPECT_TRUE(make_ideal({{0, 0}, {1, 0}}).is_unit());
  EXPECT_EQ(make_ideal({{0, 0}, {1, 0}}).gens().size(), 1u);
  const auto I = make_ideal({{2, 1}, {1, 3}, {2, 3}});
  ASSERT_EQ(I.gens().size(), 2u);
  EXPECT_EQ(I.gens()[0].exps, (std::vector<int>{2, 1}));
  EXPECT_EQ(I.gens()[1].exps, (std::vector<int>{1, 3}));
}

TEST(Normalize, Errors) {
  EXPECT_THROW(normalize_ideal({}), InputError);
  EXPECT_THROW(normalize_ideal({Monomial({1, 0}), Monomial({1})}), InputError);
  EXPECT_THROW(normalize_ideal({Monomial({-1, 0})}), InputError);
}

TEST(Normalize, IdempotentAndOrderIndependent) {
  Rng rng(11);
  const auto pool = monomials_up_to_degree(3, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int i = 0, g = static_cast<int>(rng.uniform(1, 6)); i < g; ++i) gens.push_back(rng.pick(pool));
    const auto I = normalize_ideal(gens);
    EXPECT_EQ(normalize_ideal(I.gens()), I);
    auto shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    std::rotate(shuffled.begin(), shuffled.begin() + static_cast<long>(rng.uniform(0, static_cast<long>(shuffled.size()) - 1)),
                shuffled.end());
    EXPECT_EQ(normalize_ideal(shuffled), I);
    // every input generator stays in the ideal, every output generator was an input
    for (const auto& g : gens) EXPECT_TRUE(I.contains(g));
    for (const auto& g : I.gens()) EXPECT_NE(std::find(gens.begin(), gens.end(), g), gens.end());
  }
}

TEST(Containment, Examples) {
  const auto xy = make_ideal({{1, 0}, {0, 1}});
  EXPECT_TRUE(ideal_contains(xy, make_ideal({{2, 0}, {1, 1}})));
  EXPECT_FALSE(ideal_contains(make_ideal({{2, 0}, {0, 1}}), xy));
  EXPECT_TRUE(ideal_contains(xy, xy));
  EXPECT_THROW(ideal_contains(xy, make_ideal({{1, 0, 0}})), InputError);
}

TEST(Containment, PartialOrderOnRandomTriples) {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    auto a = random_monomial_ideal(rng, 2, 3), b = random_monomial_ideal(rng, 2, 3), c = random_monomial_ideal(rng, 2, 3);
    EXPECT_TRUE(ideal_contains(a, a));
    if (ideal_contains(a, b) && ideal_contains(b, a)) {
      EXPECT_EQ(a, b);
    }
    if (ideal_contains(a, b) && ideal_contains(b, c)) {
      EXPECT_TRUE(ideal_contains(a, c));
    }
  }
}

TEST(SumWithMaxPower, Examples) {
  EXPECT_EQ(sum_with_power_of_max_ideal(make_ideal({{5, 0}}), 2), make_ideal({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(sum_with_power_of_max_ideal(make_ideal({{1, 0}, {0, 1}}), 3), make_ideal({{1, 0}, {0, 1}}));
  // degree-4 monomials plus x^2y^3, enumerated by hand; x^2y^3 is dominated by x^2y^2
  std::vector<Monomial> expected;
  for (int i = 0; i <= 4; ++i) expected.push_back(Monomial({i, 4 - i}));
  expected.push_back(Monomial({2, 3}));
  const auto got = sum_with_power_of_max_ideal(make_ideal({{2, 3}}), 4);
  EXPECT_EQ(got, normalize_ideal(expected));
  EXPECT_EQ(got.gens().size(), 5u);
  EXPECT_THROW(sum_with_power_of_max_ideal(make_ideal({{1, 0}}), 0), InputError);
}

TEST(SumWithMaxPower, ContainsBothAndMonotoneInD) {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto I = random_monomial_ideal(rng, n, 5);
    for (int d = 1; d <= 6; ++d) {
      const auto S = sum_with_power_of_max_ideal(I, d);
      EXPECT_TRUE(ideal_contains(S, I));
      auto md = MonomialIdeal::maximal(n);
      for (int k = 1; k < d; ++k) {
        std::vector<Monomial> prod;
        for (const auto& g : md.gens())
          for (int i = 0; i < n; ++i) {
            auto e = g.exps;
            e[i] += 1;
            prod.emplace_back(e);
          }
        md = normalize_ideal(prod);
      }
      EXPECT_TRUE(ideal_contains(S, md));
      EXPECT_TRUE(ideal_contains(S, sum_with_power_of_max_ideal(I, d + 1)));
    }
  }
}

TEST(RIdeal, Validation) {
  const auto I = make_ideal({{1, 0}});
  EXPECT_THROW(RIdeal(2, {{I, Rat(-1)}}), InputError);
  EXPECT_THROW(RIdeal(3, {{I, Rat(1)}}), InputError);
  const RIdeal a(2, {{I, make_rat(1, 2)}});
  EXPECT_EQ(a.scaled(Rat(4)).factors()[0].exp, Rat(2));
  EXPECT_EQ(RIdeal(2, {}).exponent_sum(), Rat(0));
}

TEST(WeightVector, Discrepancy) {
  const WeightVector v({2, 3});
  EXPECT_EQ(v.discrepancy(), 4);
  EXPECT_EQ(v.ord_max_ideal(), 2);
  EXPECT_THROW(WeightVector({0, 1}), InputError);
}
