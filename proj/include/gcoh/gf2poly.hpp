// Polynomials over GF(2) in the variables w1, ..., wk.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gcoh {

using Exponent = std::uint32_t;

inline constexpr std::size_t kMaxArity = 8;

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial one(std::size_t arity);
  // w_index, 1-based.
  static Monomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), arity_}; }

  // a1 + ... + ak
  std::uint64_t order_degree() const { return order_degree_; }
  // a1 + 2 a2 + ... + k ak, with deg wi = i
  std::uint64_t cohom_degree() const;

  bool is_one() const { return order_degree_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(*this, other) in the sense other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(std::uint64_t e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

 private:
  void recompute();

  std::array<Exponent, kMaxArity> exps_{};
  std::uint8_t arity_ = 0;
  std::uint64_t order_degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Graded lexicographic order with w1 > w2 > ... > wk.
std::strong_ordering grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_cmp(a, b) == std::strong_ordering::greater;
  }
};

// Terms are kept strictly decreasing in grlex order; all coefficients are 1.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 3);
  explicit Polynomial(const Monomial& m);

  // Sorts and cancels repeated terms in pairs.
  static Polynomial from_terms(std::size_t arity, std::vector<Monomial> terms);
  // Caller guarantees strictly decreasing order.
  static Polynomial from_sorted(std::size_t arity, std::vector<Monomial> terms);
  static Polynomial one(std::size_t arity = 3);
  static Polynomial variable(std::size_t index, std::size_t arity = 3);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.front().is_one(); }
  bool contains(const Monomial& m) const;
  const Monomial& leading_term() const;

  std::uint64_t max_cohom_degree() const;
  // Degree if every term has the same cohomological degree; nullopt for zero.
  std::optional<std::uint64_t> homogeneous_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(std::uint64_t degree) const;
  Polynomial truncated(std::uint64_t max_cohom_degree) const;

  Polynomial times(const Monomial& m) const;
  // Frobenius: squaring is additive in characteristic 2.
  Polynomial squared() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::size_t arity_;
  std::vector<Monomial> terms_;
};

// Parity of C(a, b), extended to negative a by C(a, b) = (-1)^b C(b - a - 1, b).
bool binom_mod2(std::int64_t a, std::int64_t b);
// Parity of (a1 + ... + ak)! / (a1! ... ak!). Negative entries are rejected.
bool multinom_mod2(std::span<const std::int64_t> parts);
bool multinom_mod2(std::initializer_list<std::int64_t> parts);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
// Drops every product term of cohomological degree above the bound.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t max_cohom_degree);
Polynomial pow_truncated(const Polynomial& p, std::uint64_t e, std::uint64_t max_cohom_degree);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// poly   := "0" | term ("+" term)*
// term   := "1" | factor ("*" factor)*
// factor := "w" index ("^" exp)?
Polynomial parse_polynomial(std::string_view text, std::size_t arity = 3);
// Substitutes every {n}, {n-k} or {n+k} with its value before parsing.
Polynomial parse_with_n(std::string_view text, int n, std::size_t arity = 3);
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Monomial& m);

// {"arity": k, "terms": [[a, b, c], ...]}
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace gcoh
