#include "gcoh/steenrod.hpp"

#include <algorithm>

namespace gcoh {

namespace {

using Series = std::vector<Polynomial>;

Monomial mono(std::int64_t a, std::int64_t b, std::int64_t c) {
  return Monomial{static_cast<Exponent>(a), static_cast<Exponent>(b), static_cast<Exponent>(c)};
}

// w_s as a polynomial; w_0 = 1 and w_s = 0 beyond w3.
Polynomial stiefel_whitney(unsigned s) {
  if (s == 0) return Polynomial::one(3);
  if (s > 3) return Polynomial(3);
  return Polynomial::variable(s, 3);
}

void check_ring_poly(const Polynomial& p) {
  if (p.arity() != 3) throw std::invalid_argument("expected a polynomial in w1, w2, w3");
}

Series series_mul(const GrassmannRing& ring, const Series& a, const Series& b) {
  Series c(a.size(), Polynomial(3));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) {
      if (!b[j].is_zero()) c[i + j] += mul(a[i], b[j]);
    }
  }
  for (auto& x : c) x = ring.reduce(x);
  return c;
}

// Squaring a series in characteristic 2 doubles each grade.
Series series_square(const GrassmannRing& ring, const Series& a) {
  Series c(a.size(), Polynomial(3));
  for (std::size_t i = 0; 2 * i < c.size(); ++i) c[2 * i] = ring.reduce(a[i].squared());
  return c;
}

Series series_pow(const GrassmannRing& ring, Series base, std::uint64_t e) {
  Series result(base.size(), Polynomial(3));
  result[0] = Polynomial::one(3);
  while (e > 0) {
    if (e & 1U) result = series_mul(ring, result, base);
    e >>= 1U;
    if (e > 0) base = series_square(ring, base);
  }
  return result;
}

Series monomial_total_square(const GrassmannRing& ring, const Monomial& m, unsigned max_i) {
  Series acc(max_i + 1, Polynomial(3));
  acc[0] = Polynomial::one(3);
  for (unsigned j = 1; j <= 3; ++j) {
    if (m[j - 1] == 0) continue;
    Series gen(max_i + 1, Polynomial(3));
    for (unsigned i = 0; i <= std::min(max_i, j); ++i) gen[i] = ring.reduce(wu_square(i, j));
    acc = series_mul(ring, acc, series_pow(ring, std::move(gen), m[j - 1]));
  }
  return acc;
}

}  // namespace

Polynomial wu_square(unsigned i, unsigned j) {
  if (i > j) return Polynomial(3);
  Polynomial out(3);
  for (unsigned t = 0; t <= i; ++t) {
    const auto top = static_cast<std::int64_t>(j) + t - i - 1;
    if (binom_mod2(top, t)) out += mul(stiefel_whitney(i - t), stiefel_whitney(j + t));
  }
  return out;
}

Polynomial sq1(const GrassmannRing& ring, const Polynomial& p) {
  check_ring_poly(p);
  std::vector<Monomial> out;
  for (const auto& t : p.terms()) {
    const std::int64_t a = t[0], b = t[1], c = t[2];
    if ((a + b + c) % 2) out.push_back(mono(a + 1, b, c));
    if (b % 2) out.push_back(mono(a, b - 1, c + 1));
  }
  return ring.reduce(Polynomial::from_terms(3, std::move(out)));
}

Polynomial sq2(const GrassmannRing& ring, const Polynomial& p) {
  check_ring_poly(p);
  std::vector<Monomial> out;
  for (const auto& t : p.terms()) {
    const std::int64_t a = t[0], b = t[1], c = t[2];
    if (binom_mod2(a + b + c, 2)) out.push_back(mono(a + 2, b, c));
    if ((b * (a + c)) % 2) out.push_back(mono(a + 1, b - 1, c + 1));
    if ((b + c) % 2) out.push_back(mono(a, b + 1, c));
    if (binom_mod2(b, 2)) out.push_back(mono(a, b - 2, c + 2));
  }
  return ring.reduce(Polynomial::from_terms(3, std::move(out)));
}

std::vector<Polynomial> total_square(const GrassmannRing& ring, const Polynomial& p, unsigned max_i) {
  check_ring_poly(p);
  std::vector<Polynomial> out(max_i + 1, Polynomial(3));
  for (const auto& t : p.terms()) {
    const Series s = monomial_total_square(ring, t, max_i);
    for (unsigned i = 0; i <= max_i; ++i) out[i] += s[i];
  }
  return out;
}

Polynomial sq(const GrassmannRing& ring, unsigned i, const Polynomial& p) {
  return total_square(ring, p, i)[i];
}

Polynomial sq_total(const GrassmannRing& ring, const Polynomial& p) {
  const auto pieces = total_square(ring, p, static_cast<unsigned>(p.max_cohom_degree()));
  Polynomial sum(3);
  for (const auto& x : pieces) sum += x;
  return sum;
}

bool sq_power_rule_check(const GrassmannRing& ring, const Polynomial& u, unsigned m, unsigned k) {
  if (k >= 32) throw std::invalid_argument("power too large");
  const std::uint64_t q = std::uint64_t{1} << k;
  const Polynomial lhs = sq(ring, m, ring.power(u, q));
  const Polynomial rhs = (m % q == 0) ? ring.power(sq(ring, static_cast<unsigned>(m / q), u), q) : Polynomial(3);
  return lhs == rhs;
}

}  // namespace gcoh
