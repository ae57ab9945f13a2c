// Linear algebra over GF(2) for cohomology operations, and the registry of
// lemma checks used by the immersion arguments.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gcoh/grassmann.hpp"
#include "gcoh/normal_bundle.hpp"

namespace gcoh {

class BitVector {
 public:
  explicit BitVector(std::size_t size = 0);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool v = true);
  bool is_zero() const;
  std::optional<std::size_t> lowest_set() const;

  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);
  static Gf2Matrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  BitVector column(std::size_t c) const;
  BitVector apply(const BitVector& x) const;

  std::size_t rank() const;
  bool is_surjective() const { return rank() == rows(); }
  bool is_zero() const { return rank() == 0; }

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

std::vector<BitVector> kernel(const Gf2Matrix& m);
std::vector<BitVector> image(const Gf2Matrix& m);
std::size_t span_rank(const std::vector<BitVector>& vectors);
bool in_span(const std::vector<BitVector>& vectors, const BitVector& v);
// span(a) is a subspace of span(b).
bool subspace_contained(const std::vector<BitVector>& a, const std::vector<BitVector>& b);

class InhomogeneousOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sums of compositions of Sq^i and multiplication by homogeneous classes.
class OperatorExpr {
 public:
  struct Step {
    bool is_square = true;
    unsigned index = 0;  // Sq^index
    Polynomial factor;   // multiplication
    int factor_degree = 0;
  };
  // Steps apply right to left, as in written composition.
  using Word = std::vector<Step>;

  static OperatorExpr identity();
  static OperatorExpr sq(unsigned i);
  // Multiplication by a nonzero homogeneous class.
  static OperatorExpr mul(const Polynomial& p);
  // Multiplication by a class known to lie in the given degree; p may be zero.
  static OperatorExpr mul(const Polynomial& p, int degree);

  int shift() const { return shift_; }
  const std::vector<Word>& words() const { return words_; }
  std::string to_string() const;

  OperatorExpr operator+(const OperatorExpr& other) const;
  OperatorExpr operator*(const OperatorExpr& other) const;

 private:
  OperatorExpr(std::vector<Word> words, int shift) : words_(std::move(words)), shift_(shift) {}

  std::vector<Word> words_;
  int shift_ = 0;
};

Polynomial apply(const GrassmannRing& ring, const OperatorExpr& op, const Polynomial& p);

// Coordinates of a homogeneous class of the given degree in the additive basis.
BitVector coordinates(const GrassmannRing& ring, const Polynomial& p, int degree);
Polynomial from_coordinates(const GrassmannRing& ring, const BitVector& v, int degree);

// Columns are images of the basis monomials of source_degree.
Gf2Matrix operator_matrix(const GrassmannRing& ring, const OperatorExpr& op, int source_degree);

// ---------------------------------------------------------------------------

class UnknownLemma : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LemmaInfo {
  std::string id;
  std::string hypothesis;  // congruence on n
  std::string summary;
};

const std::vector<LemmaInfo>& lemma_registry();
bool lemma_known(std::string_view id);
bool lemma_applies(std::string_view id, int n);
std::vector<std::string> applicable_lemmas(int n);

struct LemmaCheck {
  std::string label;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct LemmaReport {
  std::string id;
  int n = 0;
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

class LemmaVerifier {
 public:
  explicit LemmaVerifier(const GrassmannRing& ring);

  const NormalClassTable& normal_classes() const { return nu_; }
  // Throws UnknownLemma or HypothesisViolation.
  LemmaReport verify(std::string_view id) const;
  // Every lemma whose hypothesis holds for n; order follows the registry.
  std::vector<LemmaReport> verify_all(unsigned jobs = 1) const;

 private:
  const GrassmannRing& ring_;
  NormalClassTable nu_;
};

LemmaReport verify_lemma(const GrassmannRing& ring, std::string_view id);

}  // namespace gcoh
