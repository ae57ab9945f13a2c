// Cohomology of the Grassmannian of 3-planes in R^{n+3} as a quotient of
// GF(2)[w1, w2, w3], presented by a closed-form reduced Groebner basis.
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gcoh/gf2poly.hpp"
#include "gcoh/groebner.hpp"

namespace gcoh {

// Degree-r part of (1 + w1 + ... + wk)^{-1}.
Polynomial dual_class(std::size_t k, std::int64_t r);

// The defining sum for g_{m,l}, with no range restriction on (m, l).
Polynomial g_formula(int n, int m, int l);
// Basis element g_{m,l}; requires m, l >= 0 and m + l <= n + 1.
Polynomial g_closed(int n, int m, int l);
// g_{m,l} for m + l = n + 2 written through basis elements.
Polynomial overflow_decomposition(int n, int m, int l);
// g_closed inside the basis range, overflow_decomposition on the boundary m + l = n + 2.
Polynomial g_member(int n, int m, int l);

struct BasisIndex {
  int m = 0;
  int l = 0;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// Index order: m ascending, then l ascending.
std::vector<BasisIndex> closed_basis_indices(int n);
GroebnerBasis closed_basis(int n);
// The three generators: dual classes of degree n+1, n+2, n+3.
std::vector<Polynomial> ideal_generators(int n);

struct GradedBasis {
  int n = 0;
  int degree = 0;
  std::vector<Monomial> monomials;  // grlex descending

  std::size_t size() const { return monomials.size(); }
  // Position of m, or size() if m is not a basis monomial of this degree.
  std::size_t index_of(const Monomial& m) const;
};

// Standard monomials a + 2b + 3c = d with a + b + c <= n.
GradedBasis additive_basis(int n, int d);

class GrassmannRing {
 public:
  explicit GrassmannRing(int n);

  int n() const { return n_; }
  int top_degree() const { return 3 * n_; }
  const GroebnerBasis& basis() const { return basis_; }
  const std::vector<BasisIndex>& indices() const { return indices_; }
  const GradedBasis& graded_basis(int d) const;
  std::size_t dimension() const;

  Polynomial reduce(const Polynomial& p) const;
  DivisionResult divide(const Polynomial& p) const { return basis_.divide(p); }
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  Polynomial power(const Polynomial& p, std::uint64_t e) const;

 private:
  int n_;
  GroebnerBasis basis_;
  std::vector<BasisIndex> indices_;
  std::vector<GradedBasis> graded_;
};

Polynomial cohomology_nf(const GrassmannRing& ring, const Polynomial& p);

// Coefficients of the Gaussian binomial [a choose b]_q.
std::vector<std::int64_t> gaussian_binomial(int a, int b);
// Graded basis sizes against [n+3 choose 3]_q.
bool poincare_check(int n);

inline constexpr std::int64_t kUnitHeight = std::numeric_limits<std::int64_t>::max();

// Largest h with p^h != 0; kUnitHeight for units. Throws on zero.
std::int64_t height(const GrassmannRing& ring, const Polynomial& p);

struct IdentityFailure {
  std::string identity;
  std::vector<int> params;
};

struct RecurrenceReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<IdentityFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Structural identities of the basis: recurrences, leading terms, overflow
// decomposition and the S-polynomial expansions.
RecurrenceReport recurrence_check(int n);

}  // namespace gcoh
