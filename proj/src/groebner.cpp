#include "gcoh/groebner.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>
#include <tuple>

namespace gcoh {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& lf = f.leading_term();
  const Monomial& lg = g.leading_term();
  const Monomial l = lcm(lf, lg);
  return f.times(l / lf) + g.times(l / lg);
}

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    if (d.arity() != p.arity()) throw std::invalid_argument("arity mismatch");
  }
  std::uint64_t min_lt_degree = std::numeric_limits<std::uint64_t>::max();
  for (const auto& d : divisors) min_lt_degree = std::min(min_lt_degree, d.leading_term().order_degree());

  std::set<Monomial, GrlexGreater> rest(p.terms().begin(), p.terms().end());
  std::vector<std::vector<Monomial>> cof(divisors.size());
  std::vector<Monomial> nf;

  auto toggle = [&rest](const Monomial& m) {
    auto [it, inserted] = rest.insert(m);
    if (!inserted) rest.erase(it);
  };

  while (!rest.empty()) {
    const Monomial t = *rest.begin();
    rest.erase(rest.begin());
    std::size_t hit = divisors.size();
    if (t.order_degree() >= min_lt_degree) {
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (divisors[i].leading_term().divides(t)) {
          hit = i;
          break;
        }
      }
    }
    if (hit == divisors.size()) {
      nf.push_back(t);
      continue;
    }
    const Monomial q = t / divisors[hit].leading_term();
    // Terms leave `rest` in decreasing order, so each cofactor stays sorted.
    cof[hit].push_back(q);
    const auto& dt = divisors[hit].terms();
    for (std::size_t k = 1; k < dt.size(); ++k) toggle(dt[k] * q);
  }

  DivisionResult r{Polynomial::from_sorted(p.arity(), std::move(nf)), {}};
  r.cofactors.reserve(divisors.size());
  for (auto& c : cof) r.cofactors.push_back(Polynomial::from_sorted(p.arity(), std::move(c)));
  return r;
}

bool division_is_valid(const Polynomial& p, std::span<const Polynomial> divisors,
                       const DivisionResult& result) {
  if (result.cofactors.size() != divisors.size()) return false;
  Polynomial sum = result.normal_form;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const Polynomial prod = result.cofactors[i] * divisors[i];
    if (!prod.is_zero() && !p.is_zero() &&
        grlex_cmp(prod.leading_term(), p.leading_term()) > 0) {
      return false;
    }
    if (!result.cofactors[i].is_zero() && p.is_zero()) return false;
    sum += prod;
  }
  if (sum != p) return false;
  for (const auto& t : result.normal_form.terms()) {
    for (const auto& d : divisors) {
      if (d.leading_term().divides(t)) return false;
    }
  }
  return true;
}

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> elements, bool reduced)
    : elements_(std::move(elements)), reduced_(reduced) {
  leading_terms_.reserve(elements_.size());
  for (const auto& e : elements_) {
    if (e.is_zero()) throw std::invalid_argument("Groebner basis element is zero");
    leading_terms_.push_back(e.leading_term());
  }
  if (reduced_ && !is_reduced(elements_)) throw std::invalid_argument("basis is not reduced");
}

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

bool pair_less(const Pair& a, const Pair& b) {
  const auto c = grlex_cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  return std::tie(a.j, a.i) < std::tie(b.j, b.i);
}

Polynomial reduce_against(const Polynomial& p, const std::vector<Polynomial>& basis) {
  return divide(p, basis).normal_form;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& opts,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  st = {};

  std::vector<Polynomial> g;
  for (const auto& p : generators) {
    if (!p.is_zero()) g.push_back(p);
  }
  if (g.empty()) throw std::invalid_argument("no nonzero generators");

  std::vector<Pair> pending;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({lcm(g[i].leading_term(), g[k].leading_term()), i, k});
      ++st.pairs_created;
    }
  };
  for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

  auto is_pending = [&pending](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pending.begin(), pending.end(),
                       [&](const Pair& p) { return p.i == a && p.j == b; });
  };

  while (!pending.empty()) {
    std::sort(pending.begin(), pending.end(), pair_less);
    const std::uint64_t deg = pending.front().lcm.order_degree();
    std::vector<Pair> batch;
    while (!pending.empty() && pending.front().lcm.order_degree() == deg) {
      const Pair p = pending.front();
      pending.erase(pending.begin());
      if (gcd(g[p.i].leading_term(), g[p.j].leading_term()).is_one()) {
        ++st.coprime_skipped;
        continue;
      }
      if (opts.chain_criterion) {
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
          if (k == p.i || k == p.j) continue;
          chained = g[k].leading_term().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
        }
        if (chained) {
          ++st.chain_skipped;
          continue;
        }
      }
      batch.push_back(p);
    }
    if (batch.empty()) continue;
    st.reductions += batch.size();
    if (st.reductions > opts.max_pair_reductions) {
      throw BudgetExceeded("Buchberger pair budget exhausted");
    }

    // Reduce the batch against a snapshot of the basis, possibly in parallel.
    std::vector<Polynomial> reduced(batch.size());
    const unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1 || batch.size() == 1) {
      for (std::size_t b = 0; b < batch.size(); ++b) {
        reduced[b] = reduce_against(s_polynomial(g[batch[b].i], g[batch[b].j]), g);
      }
    } else {
      std::vector<std::future<void>> tasks;
      for (unsigned w = 0; w < jobs; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t b = w; b < batch.size(); b += jobs) {
            reduced[b] = reduce_against(s_polynomial(g[batch[b].i], g[batch[b].j]), g);
          }
        }));
      }
      for (auto& t : tasks) t.get();
    }

    for (auto& r : reduced) {
      if (r.is_zero()) {
        ++st.zero_reductions;
        continue;
      }
      r = reduce_against(r, g);
      if (r.is_zero()) {
        ++st.zero_reductions;
        continue;
      }
      g.push_back(std::move(r));
      add_pairs_for(g.size() - 1);
    }
  }
  return GroebnerBasis(std::move(g));
}

GroebnerBasis auto_reduce(const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < el.size(); ++i) {
    const Monomial& lt = el[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < el.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = el[j].leading_term();
      if (other == lt) {
        redundant = j < i;
      } else {
        redundant = other.divides(lt);
      }
    }
    if (!redundant) minimal.push_back(el[i]);
  }

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // The leading term is irreducible by the others, so only the tail changes.
    out.push_back(divide(minimal[i], others).normal_form);
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return grlex_cmp(a.leading_term(), b.leading_term()) > 0;
  });
  return GroebnerBasis(std::move(out), true);
}

bool is_reduced(std::span<const Polynomial> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      const Monomial& lt = elements[j].leading_term();
      for (const auto& t : elements[i].terms()) {
        if (lt.divides(t)) return false;
      }
    }
  }
  return true;
}

std::vector<PairCertificate> certify_pairs(std::span<const Polynomial> elements) {
  std::vector<PairCertificate> out;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      PairCertificate c{i, j};
      c.coprime = gcd(elements[i].leading_term(), elements[j].leading_term()).is_one();
      const Polynomial s = s_polynomial(elements[i], elements[j]);
      const DivisionResult d = divide(s, elements);
      c.reduces_to_zero = d.normal_form.is_zero();
      c.division_valid = division_is_valid(s, elements, d);
      out.push_back(c);
    }
  }
  return out;
}

bool is_groebner(std::span<const Polynomial> elements) {
  for (const auto& e : elements) {
    if (e.is_zero()) throw std::invalid_argument("zero element");
  }
  for (std::size_t j = 0; j < elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!divide(s_polynomial(elements[i], elements[j]), elements).normal_form.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool ideal_membership(const Polynomial& p, const GroebnerBasis& basis) {
  return basis.divide(p).normal_form.is_zero();
}

bool same_elements(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const GroebnerBasis& gb) {
    std::vector<Polynomial> v = gb.elements();
    std::sort(v.begin(), v.end(), [](const Polynomial& x, const Polynomial& y) {
      return grlex_cmp(x.leading_term(), y.leading_term()) > 0;
    });
    return v;
  };
  return key(a) == key(b);
}

}  // namespace gcoh
