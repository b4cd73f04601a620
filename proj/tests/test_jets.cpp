#include <gtest/gtest.h>

#include "mldlab/jets.hpp"
#include "mldlab/random.hpp"
#include "mldlab/toric.hpp"
#include "oracles.hpp"

using namespace mldlab;
using oracle::brute_contact_codim;
using oracle::brute_lct;

namespace {
const MonomialIdeal kXY = make_ideal({{1, 0}, {0, 1}});
const MonomialIdeal kProdXY = make_ideal({{1, 1}});
const MonomialIdeal kX2Y3 = make_ideal({{2, 0}, {0, 3}});
}  // namespace

TEST(ContactCodim, Examples) {
  EXPECT_EQ(contact_codim(kProdXY, 3), 3);
  EXPECT_EQ(contact_codim(kX2Y3, 2), 2);
  EXPECT_EQ(contact_codim(kXY, 2), 4);
  EXPECT_EQ(brute_contact_codim(kX2Y3, 2), 2);
  EXPECT_EQ(brute_contact_codim(kXY, 2), 4);
  EXPECT_FALSE(contact_codim(MonomialIdeal::unit(2), 3).has_value());
  EXPECT_THROW(contact_codim(kXY, 0), InputError);
}

TEST(JetDim, Examples) {
  EXPECT_EQ(jet_dim(kProdXY, 0), 1);
  EXPECT_EQ(jet_dim(kProdXY, 3), 4);
  EXPECT_EQ(jet_dim(make_ideal({{1}}), 2), 0);
  EXPECT_THROW(jet_dim(MonomialIdeal::unit(2), 1), InputError);
  EXPECT_THROW(jet_dim(kXY, -1), InputError);
}

TEST(LcViaJets, Examples) {
  EXPECT_TRUE(lc_via_jets(kProdXY, Rat(1), 10));
  EXPECT_FALSE(lc_via_jets(kProdXY, make_rat(3, 2), 0));
  EXPECT_TRUE(lc_via_jets(kXY, Rat(2), 5));
  EXPECT_THROW(lc_via_jets(kXY, Rat(0), 5), InputError);
  EXPECT_THROW(lc_via_jets(MonomialIdeal::unit(2), Rat(1), 5), InputError);
}

TEST(JetQuery, ReportsDimsAndRejectsDuplicates) {
  const auto rep = run_jet_query({kProdXY, Rat(1), {0, 3}, std::nullopt});
  ASSERT_EQ(rep.dims.size(), 2u);
  EXPECT_EQ(rep.dims[1], std::make_pair(std::int64_t{3}, std::int64_t{4}));
  EXPECT_TRUE(rep.lc);
  EXPECT_EQ(rep.max_level, 3);
  EXPECT_THROW(run_jet_query({kProdXY, Rat(1), {1, 1}, std::nullopt}), InputError);
}

TEST(ContactCodim, MatchesBruteForce) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto I = random_monomial_ideal(rng, n, 5);
    const auto p = rng.uniform(1, 6);
    EXPECT_EQ(*contact_codim(I, p), brute_contact_codim(I, p)) << to_string(I) << " p=" << p;
  }
}

TEST(ContactCodim, MonotoneAndSubadditive) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto I = random_monomial_ideal(rng, n, 5);
    const ContactSolver s(I);
    const auto c1 = *s.codim(1);
    for (std::int64_t p = 1; p <= 8; ++p) {
      EXPECT_GE(*s.codim(p + 1), *s.codim(p));
      EXPECT_LE(*s.codim(p), p * c1);
      EXPECT_GE(jet_dim(s, n, p - 1), 0);
    }
  }
}

TEST(LcViaJets, AgreesWithLctOnRandomInstances) {
  Rng rng(47);
  const std::vector<Rat> qs = {make_rat(1, 3), make_rat(1, 2), make_rat(2, 3), Rat(1), make_rat(3, 2), Rat(2)};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto I = random_monomial_ideal(rng, n, 4);
    const Rat q = rng.pick(qs);
    const bool lc = lct_monomial({RIdeal(n, {{I, Rat(1)}})}).value >= ExtRat(q);
    EXPECT_EQ(brute_lct(RIdeal(n, {{I, Rat(1)}}), 16).value >= ExtRat(q), lc);
    EXPECT_EQ(lc_via_jets(I, q, default_jet_level_bound(I, q)), lc) << to_string(I) << " q=" << to_string(q);
  }
}
