#include <gtest/gtest.h>

#include <iostream>

#include "gcoh/normal_bundle.hpp"
#include "test_util.hpp"

using namespace gcoh;
using gcoh::testing::P;

namespace {

int pow2(int r) { return 1 << r; }

// Brute-force oracle: smallest r with 3n < 2^(r+2).
int exponent_oracle(int n) {
  int r = 0;
  while (pow2(r + 2) <= 3 * n) ++r;
  return r;
}

}  // namespace

TEST(normal_exponent, brackets_three_n) {
  EXPECT_EQ(normal_exponent(4), 2);
  EXPECT_EQ(normal_exponent(13), 4);
  EXPECT_EQ(normal_exponent(21), 4);
  EXPECT_EQ(normal_exponent(5), 2);
  for (int n = 3; n <= 200; ++n) {
    const int r = normal_exponent(n);
    EXPECT_EQ(r, exponent_oracle(n));
    EXPECT_LT(pow2(r + 1), 3 * n);
    EXPECT_LT(3 * n, pow2(r + 2));
  }
  EXPECT_THROW(normal_exponent(2), std::invalid_argument);
}

TEST(normal_total_class, low_degree_values_by_congruence) {
  for (int n : {4, 8, 12}) {
    const auto t = normal_total_class(GrassmannRing(n));
    EXPECT_EQ(t[2], P("w2")) << n;
  }
  for (int n : {6, 14}) {
    const auto t = normal_total_class(GrassmannRing(n));
    EXPECT_EQ(t[2], P("w1^2 + w2")) << n;
  }
  for (int n : {9, 17}) {
    const auto t = normal_total_class(GrassmannRing(n));
    EXPECT_TRUE(t[2].is_zero()) << n;
    EXPECT_EQ(t[4], P("w2^2")) << n;
  }
  for (int n : {10, 18}) {
    const auto t = normal_total_class(GrassmannRing(n));
    EXPECT_EQ(t[1], P("w1"));
    EXPECT_EQ(t[2], P("w1^2 + w2"));
    EXPECT_EQ(t[3], P("w1^3 + w3"));
    EXPECT_EQ(t[4], P("w1^4 + w1^2*w2"));
  }
}

TEST(normal_total_class, graded_and_reduced) {
  for (int n = 3; n <= 12; ++n) {
    const GrassmannRing ring(n);
    const auto t = normal_total_class(ring);
    ASSERT_EQ(t.classes.size(), static_cast<std::size_t>(3 * n + 1));
    EXPECT_EQ(t[0], Polynomial::one());
    for (int i = 1; i <= 3 * n; ++i) {
      if (t[i].is_zero()) continue;
      EXPECT_EQ(t[i].homogeneous_degree(), static_cast<std::size_t>(i));
      EXPECT_EQ(ring.reduce(t[i]), t[i]);
    }
  }
}

// Multiplying back by (1 + w1 + w2 + w3)^(n + 3) must give the correction
// factor times a pure power of two, computed independently in the ring.
TEST(normal_total_class, multiplies_back_to_factor) {
  for (int n = 3; n <= 14; ++n) {
    const GrassmannRing ring(n);
    const auto t = normal_total_class(ring);
    Polynomial total(3);
    for (const auto& c : t.classes) total += c;
    const Polynomial w = P("1 + w1 + w2 + w3");
    const Polynomial lhs = ring.multiply(total, ring.power(w, static_cast<std::uint64_t>(n + 3)));
    const Polynomial factor = ring.reduce(P("1 + w1^4 + w2^2 + w1^2*w2^2 + w3^2"));
    Polynomial frob = w;
    for (int k = 0; k <= t.r; ++k) frob = ring.reduce(frob.squared());
    EXPECT_EQ(lhs, ring.multiply(factor, frob)) << n;
  }
}

TEST(o2, range_and_consistency) {
  EXPECT_FALSE(o2_applicable(5));
  EXPECT_TRUE(o2_applicable(13));
  EXPECT_FALSE(o2_applicable(21));
  EXPECT_EQ(o2_consistency(GrassmannRing(5)), O2Status::inapplicable);
  EXPECT_EQ(o2_consistency(GrassmannRing(21)), O2Status::inapplicable);
  int applicable = 0;
  for (int n = 3; n <= 30; ++n) {
    if (!o2_applicable(n)) continue;
    ++applicable;
    const int r = normal_exponent(n);
    EXPECT_GT(3 * n, 2 * pow2(r));
    EXPECT_LE(n, pow2(r) - 3);
    EXPECT_EQ(o2_consistency(GrassmannRing(n)), O2Status::consistent) << n;
  }
  EXPECT_GT(applicable, 0);
}

TEST(bound, known_values) {
  EXPECT_EQ(immersion_lower_bound(3), 15);
  EXPECT_EQ(immersion_lower_bound(4), 21);
  EXPECT_EQ(immersion_lower_bound(8), 45);
  EXPECT_EQ(immersion_lower_bound(13), 45);
  EXPECT_EQ(immersion_lower_bound(16), 93);
  EXPECT_EQ(immersion_lower_bound(11), 45);
  EXPECT_EQ(immersion_lower_bound(12), 45);
}

TEST(top_nonzero, class_at_n8) {
  const auto t = normal_total_class(GrassmannRing(8));
  ASSERT_EQ(top_nonzero(t), 21);
  EXPECT_EQ(t[21], P("w2^3*w3^5"));
}

TEST(top_nonzero, massey_bound) {
  for (int n = 3; n <= 30; ++n) {
    const auto t = normal_total_class(GrassmannRing(n));
    const int limit = 3 * n - binary_digit_sum(static_cast<std::uint64_t>(3 * n));
    for (int i = limit + 1; i <= 3 * n; ++i) EXPECT_TRUE(t[i].is_zero()) << "n=" << n << " i=" << i;
  }
}

TEST(top_nonzero, case_a_nonvanishing) {
  for (int n : {4, 5, 8, 9, 10, 16, 17, 20}) {
    const int r = normal_exponent(n);
    int s = 0;
    while (pow2(s + 1) <= n) ++s;  // 2^s <= n < 2^(s+1)
    ASSERT_LT(3 * n, 4 * pow2(s)) << n;
    const auto t = normal_total_class(GrassmannRing(n));
    const int d = 6 * pow2(s) - 3 * n - 3;
    EXPECT_FALSE(t[d].is_zero()) << "n=" << n << " r=" << r;
    EXPECT_EQ(top_nonzero(t), d) << n;
  }
}

TEST(top_nonzero, case_b_nonvanishing) {
  for (int n : {11, 12, 13, 22, 25}) {
    int s = 0;
    while (pow2(s) < n + 3) ++s;  // smallest 2^s with n <= 2^s - 3
    ASSERT_GT(3 * n, 2 * pow2(s)) << n;
    const auto t = normal_total_class(GrassmannRing(n));
    const int d = 3 * pow2(s) - 3 * n - 3;
    EXPECT_FALSE(t[d].is_zero()) << n;
  }
}

TEST(vanishing, congruence_zero_mod_four) {
  for (int n : {4, 8, 12, 16, 20}) {
    const auto t = normal_total_class(GrassmannRing(n));
    for (int i = 3 * n - 2; i <= 3 * n; ++i) EXPECT_TRUE(t[i].is_zero()) << n << " " << i;
  }
}

TEST(vanishing, congruence_six_mod_eight) {
  for (int n : {6, 14, 22, 30}) {
    const auto t = normal_total_class(GrassmannRing(n));
    EXPECT_TRUE(t[3 * n - 4].is_zero()) << n;
    EXPECT_TRUE(t[3 * n - 2].is_zero()) << n;
  }
}

TEST(vanishing, congruence_one_mod_eight) {
  for (int n : {9, 17, 25}) {
    const auto t = normal_total_class(GrassmannRing(n));
    for (int i = 3 * n - 8; i <= 3 * n; ++i) EXPECT_TRUE(t[i].is_zero()) << n << " " << i;
  }
}

TEST(vanishing, congruence_two_mod_eight) {
  for (int n : {10, 18, 26}) {
    const auto t = normal_total_class(GrassmannRing(n));
    for (int i = 3 * n - 14; i <= 3 * n; ++i) EXPECT_TRUE(t[i].is_zero()) << n << " " << i;
  }
}

TEST(top_nonzero, near_powers_minus_two) {
  // n = 2^s - 2: the top class is recorded, not compared against 4 * 2^s - 3 - 3n.
  for (int n : {6, 14}) {
    const auto t = normal_total_class(GrassmannRing(n));
    const auto top = top_nonzero(t);
    ASSERT_TRUE(top.has_value());
    EXPECT_NE(*top, 3 * n - 2);
    EXPECT_NE(*top, 3 * n - 4);
    EXPECT_FALSE(t[*top].is_zero());
    RecordProperty("top_n" + std::to_string(n), *top);
    std::cout << "n=" << n << " top nonvanishing degree " << *top << "\n";
  }
}

TEST(binary_digit_sum, popcount) {
  EXPECT_EQ(binary_digit_sum(0), 0);
  EXPECT_EQ(binary_digit_sum(27), 4);
  EXPECT_EQ(binary_digit_sum(1024), 1);
}
