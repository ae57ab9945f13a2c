#include "gcoh/normal_bundle.hpp"

#include <bit>
#include <stdexcept>

namespace gcoh {

namespace {

Polynomial correction_factor() {
  return parse_polynomial("1 + w1^4 + w2^2 + w1^2*w2^2 + w3^2");
}

std::vector<Polynomial> graded_reduced(const GrassmannRing& ring, const Polynomial& total) {
  const int top = ring.top_degree();
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(top + 1));
  for (int i = 0; i <= top; ++i) out.push_back(ring.reduce(total.homogeneous_part(static_cast<std::uint64_t>(i))));
  return out;
}

std::vector<Polynomial> classes_with_exponent(const GrassmannRing& ring, std::int64_t e) {
  if (e < 0) throw std::domain_error("negative exponent in the normal class formula");
  const auto top = static_cast<std::uint64_t>(ring.top_degree());
  const Polynomial base = parse_polynomial("1 + w1 + w2 + w3");
  const Polynomial total =
      mul_truncated(correction_factor(), pow_truncated(base, static_cast<std::uint64_t>(e), top), top);
  return graded_reduced(ring, total);
}

}  // namespace

int normal_exponent(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const std::int64_t t = 3 * static_cast<std::int64_t>(n);
  int r = 0;
  while ((std::int64_t{1} << (r + 2)) <= t) ++r;
  if (!((std::int64_t{1} << (r + 1)) < t && t < (std::int64_t{1} << (r + 2)))) {
    throw std::logic_error("no exponent brackets 3n");
  }
  return r;
}

NormalClassTable normal_total_class(const GrassmannRing& ring) {
  const int n = ring.n();
  const int r = normal_exponent(n);
  const std::int64_t e = (std::int64_t{1} << (r + 1)) - n - 3;
  return {n, r, classes_with_exponent(ring, e)};
}

bool o2_applicable(int n) {
  const int r = normal_exponent(n);
  const std::int64_t p = std::int64_t{1} << r;
  return 3 * static_cast<std::int64_t>(n) > 2 * p && n <= p - 3;
}

O2Status o2_consistency(const GrassmannRing& ring) {
  const int n = ring.n();
  if (!o2_applicable(n)) return O2Status::inapplicable;
  const int r = normal_exponent(n);
  const auto short_form = classes_with_exponent(ring, (std::int64_t{1} << r) - n - 3);
  return short_form == normal_total_class(ring).classes ? O2Status::consistent : O2Status::inconsistent;
}

std::optional<int> top_nonzero(const NormalClassTable& table) {
  for (int i = static_cast<int>(table.classes.size()) - 1; i >= 0; --i) {
    if (!table.classes[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return std::nullopt;
}

int immersion_lower_bound(const GrassmannRing& ring) {
  const auto top = top_nonzero(normal_total_class(ring));
  // w_0(nu) = 1, so a nonzero class always exists.
  return ring.top_degree() + top.value();
}

int immersion_lower_bound(int n) { return immersion_lower_bound(GrassmannRing(n)); }

int binary_digit_sum(std::uint64_t m) { return std::popcount(m); }

}  // namespace gcoh
