// Stiefel-Whitney classes of the stable normal bundle of the Grassmannian.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcoh/grassmann.hpp"

namespace gcoh {

// The r with 2^(r+1) < 3n < 2^(r+2).
int normal_exponent(int n);

struct NormalClassTable {
  int n = 0;
  int r = 0;
  std::vector<Polynomial> classes;  // classes[i] = w_i(nu), reduced, i = 0..3n

  const Polynomial& operator[](int i) const { return classes.at(static_cast<std::size_t>(i)); }
};

// The normal bundle total class as the product of the squared correction
// factor with a power of the total tangent-type class (exponent 2^(r+1) - n - 3).
NormalClassTable normal_total_class(const GrassmannRing& ring);

enum class O2Status { consistent, inconsistent, inapplicable };

// Compares with the short form using exponent 2^r - n - 3, defined for
// (2/3) 2^r < n <= 2^r - 3.
O2Status o2_consistency(const GrassmannRing& ring);
bool o2_applicable(int n);

std::optional<int> top_nonzero(const NormalClassTable& table);
// 3n plus the top nonvanishing normal degree.
int immersion_lower_bound(const GrassmannRing& ring);
int immersion_lower_bound(int n);

// Number of ones in the binary expansion.
int binary_digit_sum(std::uint64_t m);

}  // namespace gcoh
