#pragma once

#include <random>
#include <string>
#include <vector>

#include "gcoh/gf2poly.hpp"

namespace gcoh::testing {

inline Polynomial P(const std::string& text) { return parse_polynomial(text); }
inline Polynomial Pn(const std::string& text, int n) { return parse_with_n(text, n); }

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t arity, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> e(0, max_exp);
  std::vector<Exponent> v(arity);
  for (auto& x : v) x = e(rng);
  return Monomial(std::span<const Exponent>(v));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t arity, std::size_t max_terms,
                                    Exponent max_exp) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::vector<Monomial> terms;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) terms.push_back(random_monomial(rng, arity, max_exp));
  return Polynomial::from_terms(arity, std::move(terms));
}

}  // namespace gcoh::testing
