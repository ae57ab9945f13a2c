#include "gcoh/grassmann.hpp"

#include <algorithm>
#include <functional>

namespace gcoh {

namespace {

Monomial mono(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative exponent");
  return Monomial{static_cast<Exponent>(a), static_cast<Exponent>(b), static_cast<Exponent>(c)};
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
}

}  // namespace

Polynomial dual_class(std::size_t k, std::int64_t r) {
  if (k == 0 || k > kMaxArity) throw std::invalid_argument("unsupported arity");
  if (r < 0) return Polynomial(k);
  std::vector<Monomial> terms;
  std::vector<std::int64_t> a(k, 0);
  // Fill a[i] for the variable of degree i+1, highest degree first.
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == 0) {
      a[0] = left;
      if (multinom_mod2(a)) {
        std::vector<Exponent> e(a.begin(), a.end());
        terms.emplace_back(std::span<const Exponent>(e));
      }
      return;
    }
    const auto deg = static_cast<std::int64_t>(i + 1);
    for (std::int64_t x = 0; x * deg <= left; ++x) {
      a[i] = x;
      rec(i - 1, left - x * deg);
    }
    a[i] = 0;
  };
  rec(k - 1, r);
  return Polynomial::from_terms(k, std::move(terms));
}

Polynomial g_formula(int n, int m, int l) {
  require_n(n);
  if (m < 0 || l < 0) throw std::invalid_argument("negative index");
  const std::int64_t d = static_cast<std::int64_t>(n) + 1 + m + 2 * static_cast<std::int64_t>(l);
  std::vector<Monomial> terms;
  for (std::int64_t c = 0; 3 * c <= d; ++c) {
    for (std::int64_t b = 0; 2 * b + 3 * c <= d; ++b) {
      const std::int64_t a = d - 2 * b - 3 * c;
      if (binom_mod2(a + b + c - m - l, a) && binom_mod2(b + c - l, b)) terms.push_back(mono(a, b, c));
    }
  }
  return Polynomial::from_terms(3, std::move(terms));
}

Polynomial g_closed(int n, int m, int l) {
  require_n(n);
  if (m < 0 || l < 0 || m + l > n + 1) throw std::out_of_range("g index outside the basis range");
  return g_formula(n, m, l);
}

Polynomial overflow_decomposition(int n, int m, int l) {
  require_n(n);
  if (m < 0 || l < 0 || m + l != n + 2) throw std::out_of_range("overflow index must satisfy m + l = n + 2");
  Polynomial sum(3);
  for (int j = 1; j <= m / 2; ++j) {
    if (binom_mod2(m - j, j)) sum += g_closed(n, m - 2 * j, l + j);
  }
  return sum;
}

Polynomial g_member(int n, int m, int l) {
  if (m + l == n + 2) return overflow_decomposition(n, m, l);
  return g_closed(n, m, l);
}

std::vector<BasisIndex> closed_basis_indices(int n) {
  require_n(n);
  std::vector<BasisIndex> out;
  for (int m = 0; m <= n + 1; ++m) {
    for (int l = 0; m + l <= n + 1; ++l) out.push_back({m, l});
  }
  return out;
}

GroebnerBasis closed_basis(int n) {
  std::vector<Polynomial> el;
  for (const auto& [m, l] : closed_basis_indices(n)) el.push_back(g_closed(n, m, l));
  return GroebnerBasis(std::move(el), true);
}

std::vector<Polynomial> ideal_generators(int n) {
  require_n(n);
  return {dual_class(3, n + 1), dual_class(3, n + 2), dual_class(3, n + 3)};
}

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m, GrlexGreater{});
  if (it != monomials.end() && *it == m) return static_cast<std::size_t>(it - monomials.begin());
  return monomials.size();
}

GradedBasis additive_basis(int n, int d) {
  require_n(n);
  GradedBasis gb{n, d, {}};
  if (d < 0) return gb;
  for (int c = 0; 3 * c <= d; ++c) {
    for (int b = 0; 2 * b + 3 * c <= d; ++b) {
      const int a = d - 2 * b - 3 * c;
      if (a + b + c <= n) gb.monomials.push_back(mono(a, b, c));
    }
  }
  std::sort(gb.monomials.begin(), gb.monomials.end(), GrlexGreater{});
  return gb;
}

GrassmannRing::GrassmannRing(int n) : n_(n), basis_(closed_basis(n)), indices_(closed_basis_indices(n)) {
  graded_.reserve(static_cast<std::size_t>(3 * n + 1));
  for (int d = 0; d <= 3 * n; ++d) graded_.push_back(additive_basis(n, d));
}

const GradedBasis& GrassmannRing::graded_basis(int d) const {
  if (d < 0 || d > 3 * n_) throw std::out_of_range("degree outside [0, 3n]");
  return graded_[static_cast<std::size_t>(d)];
}

std::size_t GrassmannRing::dimension() const {
  std::size_t total = 0;
  for (const auto& g : graded_) total += g.size();
  return total;
}

Polynomial GrassmannRing::reduce(const Polynomial& p) const {
  if (p.arity() != 3) throw std::invalid_argument("expected a polynomial in w1, w2, w3");
  return basis_.divide(p).normal_form;
}

Polynomial GrassmannRing::multiply(const Polynomial& a, const Polynomial& b) const {
  return reduce(mul_truncated(a, b, static_cast<std::uint64_t>(3 * n_)));
}

Polynomial GrassmannRing::power(const Polynomial& p, std::uint64_t e) const {
  Polynomial result = Polynomial::one(3);
  Polynomial base = reduce(p);
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e > 0) base = reduce(base.squared().truncated(static_cast<std::uint64_t>(3 * n_)));
  }
  return result;
}

Polynomial cohomology_nf(const GrassmannRing& ring, const Polynomial& p) { return ring.reduce(p); }

std::vector<std::int64_t> gaussian_binomial(int a, int b) {
  if (b < 0 || a < b) return {};
  // Pascal rule: [a, b] = [a-1, b-1] + q^b [a-1, b].
  std::vector<std::vector<std::vector<std::int64_t>>> t(static_cast<std::size_t>(a + 1));
  for (int i = 0; i <= a; ++i) {
    t[i].resize(static_cast<std::size_t>(std::min(i, b) + 1));
    t[i][0] = {1};
    for (int j = 1; j <= std::min(i, b); ++j) {
      if (j == i) {
        t[i][j] = {1};
        continue;
      }
      const auto& left = t[i - 1][j - 1];
      const auto& right = t[i - 1][j];
      std::vector<std::int64_t> c(std::max(left.size(), right.size() + static_cast<std::size_t>(j)), 0);
      for (std::size_t k = 0; k < left.size(); ++k) c[k] += left[k];
      for (std::size_t k = 0; k < right.size(); ++k) c[k + static_cast<std::size_t>(j)] += right[k];
      t[i][j] = std::move(c);
    }
  }
  return t[a][b];
}

bool poincare_check(int n) {
  const GrassmannRing ring(n);
  const auto q = gaussian_binomial(n + 3, 3);
  if (q.size() != static_cast<std::size_t>(3 * n + 1)) return false;
  for (int d = 0; d <= 3 * n; ++d) {
    if (static_cast<std::int64_t>(ring.graded_basis(d).size()) != q[static_cast<std::size_t>(d)]) return false;
  }
  return true;
}

std::int64_t height(const GrassmannRing& ring, const Polynomial& p) {
  const Polynomial x = ring.reduce(p);
  if (x.is_zero()) throw std::domain_error("height of zero is undefined");
  if (x.contains(Monomial::one(3))) return kUnitHeight;
  std::int64_t h = 1;
  for (Polynomial y = ring.multiply(x, x); !y.is_zero(); y = ring.multiply(y, x)) ++h;
  return h;
}

// ---------------------------------------------------------------------------

namespace {

class IdentityChecker {
 public:
  explicit IdentityChecker(int n) : n_(n) {
    for (int m = 0; m <= n + 2; ++m) {
      g_.emplace_back();
      for (int l = 0; m + l <= n + 2; ++l) g_.back().push_back(g_member(n, m, l));
    }
  }

  const Polynomial& g(int m, int l) const {
    if (m < 0 || l < 0 || m + l > n_ + 2) throw std::out_of_range("g index outside table");
    return g_[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
  }

  void expect(RecurrenceReport& rep, const char* name, std::vector<int> params, const Polynomial& lhs,
              const Polynomial& rhs) const {
    ++rep.checked;
    if (lhs != rhs) rep.failures.push_back({name, std::move(params)});
  }

 private:
  int n_;
  std::vector<std::vector<Polynomial>> g_;
};

Polynomial w(int a, int b, int c) { return Polynomial(mono(a, b, c)); }

}  // namespace

RecurrenceReport recurrence_check(int n) {
  require_n(n);
  RecurrenceReport rep;
  rep.n = n;
  const IdentityChecker ck(n);
  const int top = n + 1;

  ck.expect(rep, "g00_is_dual_class", {}, ck.g(0, 0), dual_class(3, n + 1));
  ck.expect(rep, "dual_n+2", {}, dual_class(3, n + 2), w(1, 0, 0) * ck.g(0, 0) + ck.g(1, 0));
  ck.expect(rep, "dual_n+3", {}, dual_class(3, n + 3), w(2, 0, 0) * ck.g(0, 0) + ck.g(2, 0));

  for (int m = 0; m <= top; ++m) {
    for (int l = 0; m + l <= top; ++l) {
      ++rep.checked;
      const Polynomial& g = ck.g(m, l);
      if (g.is_zero() || g.leading_term() != mono(top - m - l, m, l)) {
        rep.failures.push_back({"leading_term", {m, l}});
      }
    }
  }

  for (int m = 0; m <= n + 2; ++m) {
    const int l = n + 2 - m;
    ck.expect(rep, "overflow", {m, l}, g_formula(n, m, l), ck.g(m, l));
  }

  for (int m = 0; m <= top; ++m) {
    for (int l = 0; m + l <= top; ++l) {
      if (m + l + 2 <= top) {
        ck.expect(rep, "rec_m+2", {m, l}, ck.g(m + 2, l),
                  ck.g(m, l + 1) + w(0, 1, 0) * ck.g(m, l) + w(1, 0, 0) * ck.g(m + 1, l));
        ck.expect(rep, "rec_m+1_l+1", {m, l}, ck.g(m + 1, l + 1),
                  w(0, 0, 1) * ck.g(m, l) + w(1, 0, 0) * ck.g(m, l + 1));
      }
      if (m >= 1 && m + l + 1 <= top) {
        ck.expect(rep, "rec_m-1_l+2", {m, l}, ck.g(m - 1, l + 2),
                  w(0, 0, 1) * ck.g(m, l) + w(0, 1, 0) * ck.g(m - 1, l + 1));
      }
    }
  }

  // S-polynomials along the three index directions.
  for (int m = 0; m <= top; ++m) {
    for (int l = 0; m + l <= top; ++l) {
      for (int r = 1; m + r + l <= top; ++r) {
        Polynomial rhs(3);
        for (int i = 0; i < r; ++i) rhs += w(i, r - 1 - i, 0) * (ck.g(m + 2 + i, l) + ck.g(m + i, l + 1));
        ck.expect(rep, "spoly_m", {m, l, r}, s_polynomial(ck.g(m, l), ck.g(m + r, l)), rhs);
      }
      for (int s = 1; m + l + s <= top; ++s) {
        Polynomial rhs(3);
        for (int j = 0; j < s; ++j) rhs += w(j, 0, s - 1 - j) * ck.g(m + 1, l + 1 + j);
        ck.expect(rep, "spoly_l", {m, l, s}, s_polynomial(ck.g(m, l), ck.g(m, l + s)), rhs);
      }
      for (int s = 1; s <= m; ++s) {
        Polynomial rhs(3);
        for (int j = 0; j < s; ++j) rhs += w(0, j, s - 1 - j) * ck.g(m - 1 - j, l + 2 + j);
        ck.expect(rep, "spoly_diag", {m, l, s}, s_polynomial(ck.g(m, l), ck.g(m - s, l + s)), rhs);
      }
    }
  }

  // General pairs.
  for (int m = 0; m <= top; ++m) {
    for (int l = 0; m + l <= top; ++l) {
      for (int r = 0; m + l + r <= top; ++r) {
        for (int s = 0; m + l + r + s <= top; ++s) {
          if (r + s == 0) continue;
          Polynomial rhs(3);
          for (int i = 0; i < r; ++i) {
            rhs += w(s + i, r - 1 - i, 0) * (ck.g(m + 2 + i, l + s) + ck.g(m + i, l + s + 1));
          }
          for (int j = 0; j < s; ++j) rhs += w(j, r, s - 1 - j) * ck.g(m + 1, l + 1 + j);
          ck.expect(rep, "spoly_up", {m, l, r, s}, s_polynomial(ck.g(m, l), ck.g(m + r, l + s)), rhs);
        }
      }
      for (int s = 1; s <= l; ++s) {
        for (int r = s; m + r + l - s <= top; ++r) {
          Polynomial rhs(3);
          for (int i = 0; i < r - s; ++i) {
            rhs += w(i, r - 1 - i, 0) * (ck.g(m + 2 + i, l) + ck.g(m + i, l + 1));
          }
          for (int j = 0; j < s; ++j) rhs += w(r - s, j, s - 1 - j) * ck.g(m + r - 1 - j, l - s + 2 + j);
          ck.expect(rep, "spoly_down_wide", {m, l, r, s}, s_polynomial(ck.g(m, l), ck.g(m + r, l - s)), rhs);
        }
        for (int r = 0; r < s; ++r) {
          Polynomial rhs(3);
          for (int i = 0; i < s - r; ++i) rhs += w(i, r, s - r - 1 - i) * ck.g(m + 1, l - s + r + 1 + i);
          for (int j = 0; j < r; ++j) rhs += w(0, j, s - 1 - j) * ck.g(m + r - 1 - j, l - s + 2 + j);
          ck.expect(rep, "spoly_down_narrow", {m, l, r, s}, s_polynomial(ck.g(m, l), ck.g(m + r, l - s)), rhs);
        }
      }
    }
  }
  return rep;
}

}  // namespace gcoh
