// Division, S-polynomials and Buchberger's algorithm over GF(2) in grlex order.
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gcoh/gf2poly.hpp"

namespace gcoh {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct DivisionResult {
  Polynomial normal_form;
  std::vector<Polynomial> cofactors;
};

// Repeatedly reduces the greatest reducible term by the first divisor whose
// leading term divides it. p == sum cofactors[i] * divisors[i] + normal_form.
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors);

// Checks the division identity, that no term of the normal form is reducible,
// and that no cofactor product exceeds LT(p).
bool division_is_valid(const Polynomial& p, std::span<const Polynomial> divisors,
                       const DivisionResult& result);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  // Throws on zero elements; with reduced = true also verifies reducedness.
  explicit GroebnerBasis(std::vector<Polynomial> elements, bool reduced = false);

  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_terms() const { return leading_terms_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }

  DivisionResult divide(const Polynomial& p) const { return gcoh::divide(p, elements_); }

 private:
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_terms_;
  bool reduced_ = false;
};

struct BuchbergerOptions {
  bool chain_criterion = false;
  std::size_t max_pair_reductions = 1'000'000;
  unsigned jobs = 1;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normal selection strategy: pairs are processed in batches of minimal lcm
// order degree. Output does not depend on opts.jobs.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& opts = {},
                         BuchbergerStats* stats = nullptr);

// Minimalizes and tail-reduces; elements come back sorted by leading term, descending.
GroebnerBasis auto_reduce(const GroebnerBasis& basis);

bool is_reduced(std::span<const Polynomial> elements);
// Every S-pair reduces to zero.
bool is_groebner(std::span<const Polynomial> elements);

struct PairCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  bool coprime = false;
  bool reduces_to_zero = false;
  bool division_valid = false;
};

std::vector<PairCertificate> certify_pairs(std::span<const Polynomial> elements);

bool ideal_membership(const Polynomial& p, const GroebnerBasis& basis);

// Set equality of elements.
bool same_elements(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace gcoh
