#include <gtest/gtest.h>

#include <algorithm>

#include "gcoh/grassmann.hpp"
#include "gcoh/groebner.hpp"
#include "test_util.hpp"

using namespace gcoh;
using gcoh::testing::P;

TEST(spoly, cancels_leading_terms) {
  EXPECT_EQ(s_polynomial(P("w1^2 + w2"), P("w1*w2 + w3")), P("w2^2 + w1*w3"));
  EXPECT_TRUE(s_polynomial(P("w1 + w2"), P("w1 + w2")).is_zero());
  EXPECT_THROW(s_polynomial(Polynomial(3), P("w1")), std::domain_error);
}

TEST(divide, small_example) {
  const std::vector<Polynomial> divisors = {P("w1^2 + w2"), P("w2^2")};
  const auto r = divide(P("w1^4 + w1*w2"), divisors);
  // w1^4 = (w1^2 + w2)(w1^2 + w2) + w2^2
  EXPECT_EQ(r.normal_form, P("w1*w2"));
  EXPECT_EQ(r.cofactors[0], P("w1^2 + w2"));
  EXPECT_EQ(r.cofactors[1], P("1"));
  EXPECT_TRUE(division_is_valid(P("w1^4 + w1*w2"), divisors, r));
}

TEST(divide, prefers_first_divisor) {
  const std::vector<Polynomial> divisors = {P("w1 + w3"), P("w1 + w2")};
  const auto r = divide(P("w1"), divisors);
  EXPECT_EQ(r.normal_form, P("w3"));
  EXPECT_EQ(r.cofactors[0], P("1"));
  EXPECT_TRUE(r.cofactors[1].is_zero());
}

TEST(divide, identity_holds_on_random_inputs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::vector<Polynomial> divisors;
    while (divisors.size() < 3) {
      auto d = gcoh::testing::random_polynomial(rng, 3, 4, 3);
      if (!d.is_zero()) divisors.push_back(d);
    }
    const Polynomial p = gcoh::testing::random_polynomial(rng, 3, 10, 6);
    const auto r = divide(p, divisors);
    EXPECT_TRUE(division_is_valid(p, divisors, r)) << format_polynomial(p);
  }
}

TEST(divide, rejects_zero_divisor) {
  const std::vector<Polynomial> divisors = {Polynomial(3)};
  EXPECT_THROW(divide(P("w1"), divisors), std::invalid_argument);
}

TEST(is_groebner, detects_missing_elements) {
  const std::vector<Polynomial> g = {P("w1 + w2^2"), P("w2")};
  EXPECT_FALSE(is_groebner(g));
  const std::vector<Polynomial> fixed = {P("w1"), P("w2")};
  EXPECT_TRUE(is_groebner(fixed));
}

TEST(buchberger, result_is_groebner_and_reduction_is_canonical) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens;
    while (gens.size() < 3) {
      auto d = gcoh::testing::random_polynomial(rng, 3, 3, 3);
      if (!d.is_zero()) gens.push_back(d);
    }
    BuchbergerStats stats;
    const GroebnerBasis gb = buchberger(gens, {}, &stats);
    EXPECT_TRUE(is_groebner(gb.elements()));
    const GroebnerBasis red = auto_reduce(gb);
    EXPECT_TRUE(is_reduced(red.elements()));
    EXPECT_TRUE(is_groebner(red.elements()));
    for (const auto& g : gens) EXPECT_TRUE(ideal_membership(g, red));

    std::vector<Polynomial> shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    BuchbergerOptions chain;
    chain.chain_criterion = true;
    EXPECT_TRUE(same_elements(auto_reduce(buchberger(shuffled, chain)), red));
    BuchbergerOptions par;
    par.jobs = 3;
    EXPECT_EQ(auto_reduce(buchberger(gens, par)).elements(), red.elements());
  }
}

TEST(buchberger, coprime_and_chain_criteria_skip_pairs) {
  const auto gens = ideal_generators(6);
  BuchbergerStats plain, chained;
  BuchbergerOptions opts;
  const auto a = auto_reduce(buchberger(gens, opts, &plain));
  opts.chain_criterion = true;
  const auto b = auto_reduce(buchberger(gens, opts, &chained));
  EXPECT_TRUE(same_elements(a, b));
  EXPECT_GT(chained.chain_skipped, 0U);
  EXPECT_LT(chained.reductions, plain.reductions);
}

TEST(buchberger, budget_is_enforced) {
  BuchbergerOptions opts;
  opts.max_pair_reductions = 1;
  EXPECT_THROW(buchberger(ideal_generators(5), opts), BudgetExceeded);
}

TEST(buchberger, rejects_all_zero_generators) {
  const std::vector<Polynomial> gens = {Polynomial(3)};
  EXPECT_THROW(buchberger(gens), std::invalid_argument);
}

TEST(groebner_basis, reduced_flag_is_verified) {
  EXPECT_THROW(GroebnerBasis({P("w1"), P("w1 + w2")}, true), std::invalid_argument);
  EXPECT_THROW(GroebnerBasis({Polynomial(3)}), std::invalid_argument);
  const GroebnerBasis ok({P("w1"), P("w2")}, true);
  EXPECT_TRUE(ok.reduced());
}

TEST(certify_pairs, every_pair_of_closed_basis_certifies) {
  const auto gb = closed_basis(5);
  const auto certs = certify_pairs(gb.elements());
  EXPECT_EQ(certs.size(), gb.size() * (gb.size() - 1) / 2);
  for (const auto& c : certs) {
    EXPECT_TRUE(c.reduces_to_zero) << c.i << "," << c.j;
    EXPECT_TRUE(c.division_valid) << c.i << "," << c.j;
  }
}
