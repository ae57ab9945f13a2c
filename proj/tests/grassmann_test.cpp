#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcoh/grassmann.hpp"
#include "golden_table.hpp"
#include "test_util.hpp"

using namespace gcoh;
using gcoh::testing::P;
using gcoh::testing::kTable;
using gcoh::testing::kTableN12;
using gcoh::testing::Pn;
using boost::multiprecision::cpp_int;

namespace {

cpp_int exact_binomial(long a, long b) {
  if (b < 0) return 0;
  cpp_int num = 1, den = 1;
  for (long i = 0; i < b; ++i) {
    num *= (a - i);
    den *= (i + 1);
  }
  return num / den;
}

// g_{m,l} from its defining sum, with integer binomials reduced at the end.
Polynomial g_oracle(int n, int m, int l) {
  const long d = n + 1 + m + 2L * l;
  std::vector<Monomial> terms;
  for (long c = 0; 3 * c <= d; ++c) {
    for (long b = 0; 2 * b + 3 * c <= d; ++b) {
      const long a = d - 2 * b - 3 * c;
      const cpp_int coef = exact_binomial(a + b + c - m - l, a) * exact_binomial(b + c - l, b);
      if (coef % 2 != 0) {
        terms.push_back(Monomial{static_cast<Exponent>(a), static_cast<Exponent>(b), static_cast<Exponent>(c)});
      }
    }
  }
  return Polynomial::from_terms(3, std::move(terms));
}

// Degree-r part of sum_t (w1 + ... + wk)^t, i.e. the inverse of 1 + w1 + ... + wk.
Polynomial dual_oracle(std::size_t k, int r) {
  Polynomial x(k);
  for (std::size_t i = 1; i <= k; ++i) x += Polynomial::variable(i, k);
  Polynomial sum(k), power = Polynomial::one(k);
  for (int t = 0; t <= r; ++t) {
    sum += power.homogeneous_part(static_cast<std::uint64_t>(r));
    power = mul_truncated(power, x, static_cast<std::uint64_t>(r));
  }
  return sum;
}

}  // namespace

TEST(dual_class, low_degrees) {
  EXPECT_EQ(dual_class(3, 0), P("1"));
  EXPECT_EQ(dual_class(3, 1), P("w1"));
  EXPECT_EQ(dual_class(3, 2), P("w1^2 + w2"));
  EXPECT_EQ(dual_class(3, 3), P("w1^3 + w3"));
  EXPECT_TRUE(dual_class(3, -1).is_zero());
}

TEST(dual_class, matches_series_inverse) {
  for (std::size_t k = 1; k <= 5; ++k) {
    for (int r = 0; r <= 12; ++r) EXPECT_EQ(dual_class(k, r), dual_oracle(k, r)) << k << "," << r;
  }
}

TEST(dual_class, inverts_total_class) {
  const Polynomial total = P("1 + w1 + w2 + w3");
  Polynomial inverse(3);
  for (int r = 0; r <= 15; ++r) inverse += dual_class(3, r);
  EXPECT_EQ(mul_truncated(total, inverse, 15), P("1"));
}

TEST(g_closed, matches_exact_oracle) {
  for (int n = 1; n <= 9; ++n) {
    for (int m = 0; m <= n + 1; ++m) {
      for (int l = 0; m + l <= n + 1; ++l) ASSERT_EQ(g_closed(n, m, l), g_oracle(n, m, l)) << n << m << l;
    }
  }
}

TEST(g_closed, first_element_is_dual_class) {
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(g_closed(n, 0, 0), dual_class(3, n + 1));
}

TEST(g_closed, small_example) {
  EXPECT_EQ(g_closed(4, 5, 0), P("w2^5 + w1*w3^3"));
  EXPECT_THROW(g_closed(4, 5, 1), std::out_of_range);
  EXPECT_THROW(g_closed(4, -1, 0), std::out_of_range);
}

TEST(g_closed, table_at_n10) {
  const int n = 10;
  ASSERT_EQ(kTable.size(), 28U);
  for (const auto& cell : kTable) {
    EXPECT_EQ(g_closed(n, cell.m, n + cell.l_offset), Pn(cell.value, n))
        << "g(" << cell.m << ",n" << cell.l_offset << ")";
    const int l = n + cell.l_offset;
    const Monomial lt{static_cast<Exponent>(n + 1 - cell.m - l), static_cast<Exponent>(cell.m),
                      static_cast<Exponent>(l)};
    EXPECT_EQ(g_closed(n, cell.m, l).leading_term(), lt);
  }
}

TEST(g_closed, table_holds_for_other_n) {
  for (int n : {5, 7, 12, 15}) {
    for (const auto& cell : kTable) {
      EXPECT_EQ(g_closed(n, cell.m, n + cell.l_offset), Pn(cell.value, n))
          << "n=" << n << " g(" << cell.m << ",n" << cell.l_offset << ")";
    }
  }
}

TEST(g_closed, elements_at_n12) {
  const int n = 12;
  for (const auto& cell : kTableN12) {
    EXPECT_EQ(g_closed(n, cell.m, n + cell.l_offset), Pn(cell.value, n)) << "g(" << cell.m << ",n" << cell.l_offset << ")";
    const Monomial lt{static_cast<Exponent>(n + 1 - cell.m - (n + cell.l_offset)), static_cast<Exponent>(cell.m),
                      static_cast<Exponent>(n + cell.l_offset)};
    EXPECT_EQ(g_closed(n, cell.m, n + cell.l_offset).leading_term(), lt);
  }
}

TEST(overflow, small_example) {
  EXPECT_EQ(overflow_decomposition(5, 2, 5), g_closed(5, 0, 6));
  EXPECT_EQ(overflow_decomposition(5, 2, 5), P("w3^6"));
  EXPECT_TRUE(overflow_decomposition(5, 0, 7).is_zero());
  EXPECT_THROW(overflow_decomposition(5, 2, 4), std::out_of_range);
}

TEST(overflow, equals_formula_on_boundary) {
  for (int n = 1; n <= 16; ++n) {
    for (int m = 0; m <= n + 2; ++m) {
      EXPECT_EQ(overflow_decomposition(n, m, n + 2 - m), g_formula(n, m, n + 2 - m)) << n << "," << m;
    }
  }
}

TEST(closed_basis, shape) {
  for (int n = 1; n <= 12; ++n) {
    const auto gb = closed_basis(n);
    EXPECT_EQ(gb.size(), static_cast<std::size_t>((n + 2) * (n + 3) / 2));
    EXPECT_TRUE(gb.reduced());
    const auto idx = closed_basis_indices(n);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      EXPECT_EQ(gb.leading_terms()[i],
                (Monomial{static_cast<Exponent>(n + 1 - idx[i].m - idx[i].l), static_cast<Exponent>(idx[i].m),
                          static_cast<Exponent>(idx[i].l)}));
    }
  }
}

TEST(closed_basis, equals_buchberger) {
  for (int n = 1; n <= 8; ++n) {
    const auto computed = auto_reduce(buchberger(ideal_generators(n)));
    EXPECT_TRUE(same_elements(computed, closed_basis(n))) << "n=" << n;
  }
}

TEST(closed_basis, is_groebner_up_to_10) {
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(is_groebner(closed_basis(n).elements())) << "n=" << n;
}

TEST(closed_basis, generates_the_ideal) {
  for (int n = 1; n <= 10; ++n) {
    const auto gb = closed_basis(n);
    for (const auto& g : ideal_generators(n)) EXPECT_TRUE(ideal_membership(g, gb));
  }
}

TEST(recurrences, all_identities_hold) {
  for (int n = 1; n <= 12; ++n) {
    const auto rep = recurrence_check(n);
    EXPECT_GT(rep.checked, 0U);
    for (const auto& f : rep.failures) {
      std::string params;
      for (int x : f.params) params += std::to_string(x) + " ";
      ADD_FAILURE() << "n=" << n << " " << f.identity << " " << params;
    }
  }
}

TEST(additive_basis, top_degrees) {
  for (int n = 3; n <= 12; ++n) {
    const auto b = additive_basis(n, 3 * n - 3);
    EXPECT_EQ(b.monomials, (std::vector<Monomial>{Pn("w1*w2*w3^{n-2}", n).leading_term(),
                                                  Pn("w2^3*w3^{n-3}", n).leading_term(),
                                                  Pn("w3^{n-1}", n).leading_term()}));
    EXPECT_EQ(additive_basis(n, 3 * n).size(), 1U);
    EXPECT_EQ(additive_basis(n, 3 * n - 1).size(), 1U);
    EXPECT_EQ(additive_basis(n, 3 * n + 1).size(), 0U);
  }
}

TEST(poincare, matches_gaussian_binomial) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_TRUE(poincare_check(n)) << n;
    const GrassmannRing ring(n);
    EXPECT_EQ(ring.dimension(), static_cast<std::size_t>((n + 3) * (n + 2) * (n + 1) / 6));
  }
  EXPECT_EQ(gaussian_binomial(4, 2), (std::vector<std::int64_t>{1, 1, 2, 1, 1}));
}

TEST(ring, normal_form_is_a_ring_map) {
  const GrassmannRing ring(6);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const auto a = gcoh::testing::random_polynomial(rng, 3, 4, 5);
    const auto b = gcoh::testing::random_polynomial(rng, 3, 4, 5);
    EXPECT_EQ(ring.reduce(a * b), ring.multiply(ring.reduce(a), ring.reduce(b)));
    EXPECT_EQ(ring.reduce(a + b), ring.reduce(a) + ring.reduce(b));
    EXPECT_EQ(ring.reduce(ring.reduce(a)), ring.reduce(a));
  }
  for (const auto& g : ring.basis().elements()) EXPECT_TRUE(cohomology_nf(ring, g).is_zero());
}

TEST(ring, top_class) {
  for (int n = 2; n <= 10; ++n) {
    const GrassmannRing ring(n);
    EXPECT_EQ(ring.reduce(Pn("w2*w3^{n-1}", n)), Pn("w2*w3^{n-1}", n));
    EXPECT_EQ(ring.reduce(Pn("w1^2*w3^{n-1}", n)), Pn("w2*w3^{n-1}", n));
    EXPECT_TRUE(ring.reduce(Pn("w3^{n+1}", n)).is_zero());
  }
}

TEST(height, generators) {
  for (int n = 1; n <= 12; ++n) {
    const GrassmannRing ring(n);
    EXPECT_EQ(height(ring, P("w3")), n);
  }
  const GrassmannRing ring(5);
  EXPECT_EQ(height(ring, P("1")), kUnitHeight);
  EXPECT_EQ(height(ring, P("1 + w1")), kUnitHeight);
  EXPECT_THROW(height(ring, Polynomial(3)), std::domain_error);
  EXPECT_THROW(height(ring, P("w3^6")), std::domain_error);
}

TEST(height, first_class_against_power_of_two) {
  // With 2^(s-1) < n + 3 <= 2^s the height of w1 is 2^s - 1, one less when n + 3 = 2^(s-1) + 1.
  for (int n = 2; n <= 16; ++n) {
    const GrassmannRing ring(n);
    int s = 0;
    while ((1 << s) < n + 3) ++s;
    const int expected = (1 << s) - 1 - (n + 3 == (1 << (s - 1)) + 1 ? 1 : 0);
    EXPECT_EQ(height(ring, P("w1")), expected) << "n=" << n;
  }
}
