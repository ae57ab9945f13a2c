#include "gcoh/gf2poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace gcoh {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("exponent overflow");
  }
  return a + b;
}

Exponent checked_mul(Exponent a, std::uint64_t b) {
  const std::uint64_t r = static_cast<std::uint64_t>(a) * b;
  if (b != 0 && (r / b != a || r > std::numeric_limits<Exponent>::max())) {
    throw std::overflow_error("exponent overflow");
  }
  return static_cast<Exponent>(r);
}

void require_same_arity(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("arity mismatch");
}

// Sorts descending and removes terms that occur an even number of times.
std::vector<Monomial> canonicalize(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), GrlexGreater{});
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) {
  if (exps.size() > kMaxArity) throw std::invalid_argument("arity exceeds kMaxArity");
  arity_ = static_cast<std::uint8_t>(exps.size());
  std::copy(exps.begin(), exps.end(), exps_.begin());
  recompute();
}

Monomial Monomial::one(std::size_t arity) {
  if (arity > kMaxArity) throw std::invalid_argument("arity exceeds kMaxArity");
  Monomial m;
  m.arity_ = static_cast<std::uint8_t>(arity);
  return m;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index) {
  if (index == 0 || index > arity) throw std::invalid_argument("variable index out of range");
  Monomial m = one(arity);
  m.exps_[index - 1] = 1;
  m.order_degree_ = 1;
  return m;
}

void Monomial::recompute() {
  order_degree_ = 0;
  for (std::size_t i = 0; i < arity_; ++i) order_degree_ += exps_[i];
}

std::uint64_t Monomial::cohom_degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += static_cast<std::uint64_t>(i + 1) * exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(arity_, other.arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_arity(arity_, other.arity_);
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] -= other.exps_[i];
  r.recompute();
  return r;
}

Monomial Monomial::pow(std::uint64_t e) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = checked_mul(exps_[i], e);
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity());
  std::array<Exponent, kMaxArity> e{};
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::span<const Exponent>(e.data(), a.arity()));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity());
  std::array<Exponent, kMaxArity> e{};
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::span<const Exponent>(e.data(), a.arity()));
}

std::strong_ordering grlex_cmp(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity());
  if (auto c = a.order_degree() <=> b.order_degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {
  if (arity > kMaxArity) throw std::invalid_argument("arity exceeds kMaxArity");
}

Polynomial::Polynomial(const Monomial& m) : arity_(m.arity()), terms_{m} {}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Monomial> terms) {
  for (const auto& t : terms) require_same_arity(arity, t.arity());
  Polynomial p(arity);
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Polynomial Polynomial::from_sorted(std::size_t arity, std::vector<Monomial> terms) {
  Polynomial p(arity);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::one(std::size_t arity) { return Polynomial(Monomial::one(arity)); }

Polynomial Polynomial::variable(std::size_t index, std::size_t arity) {
  return Polynomial(Monomial::variable(arity, index));
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, GrlexGreater{});
}

const Monomial& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::max_cohom_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.cohom_degree());
  return d;
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::uint64_t d = terms_.front().cohom_degree();
  for (const auto& t : terms_) {
    if (t.cohom_degree() != d) return std::nullopt;
  }
  return d;
}

bool Polynomial::is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

Polynomial Polynomial::homogeneous_part(std::uint64_t degree) const {
  Polynomial r(arity_);
  for (const auto& t : terms_) {
    if (t.cohom_degree() == degree) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::truncated(std::uint64_t max_degree) const {
  Polynomial r(arity_);
  for (const auto& t : terms_) {
    if (t.cohom_degree() <= max_degree) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
  require_same_arity(arity_, m.arity());
  Polynomial r(arity_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(t * m);
  return r;
}

Polynomial Polynomial::squared() const {
  Polynomial r(arity_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(t.pow(2));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(arity_, other.arity_);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    const auto c = grlex_cmp(*i, *j);
    if (c == 0) {
      ++i;
      ++j;
    } else if (c > 0) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, terms_.end());
  out.insert(out.end(), j, other.terms_.end());
  terms_ = std::move(out);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

// ---------------------------------------------------------------------------

bool binom_mod2(std::int64_t a, std::int64_t b) {
  if (b < 0) return false;
  if (a < 0) {
    // C(a, b) = (-1)^b C(b - a - 1, b)
    if (b > std::numeric_limits<std::int64_t>::max() + a) {
      throw std::overflow_error("binomial argument overflow");
    }
    a = b - a - 1;
  }
  if (b > a) return false;
  return (b & ~a) == 0;
}

bool multinom_mod2(std::span<const std::int64_t> parts) {
  std::int64_t rest = 0;
  for (auto p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial entry is negative");
  }
  // Product of C(a_i + ... + a_k, a_i) taken from the right.
  for (std::size_t i = parts.size(); i-- > 0;) {
    if (rest > std::numeric_limits<std::int64_t>::max() - parts[i]) {
      throw std::overflow_error("multinomial argument overflow");
    }
    rest += parts[i];
    if (!binom_mod2(rest, parts[i])) return false;
  }
  return true;
}

bool multinom_mod2(std::initializer_list<std::int64_t> parts) {
  return multinom_mod2(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t max_degree) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Monomial> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    const std::uint64_t ds = s.cohom_degree();
    if (ds > max_degree) continue;
    for (const auto& t : b.terms()) {
      if (ds + t.cohom_degree() <= max_degree) prod.push_back(s * t);
    }
  }
  return Polynomial::from_terms(a.arity(), std::move(prod));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  return mul_truncated(a, b, std::numeric_limits<std::uint64_t>::max());
}

Polynomial pow_truncated(const Polynomial& p, std::uint64_t e, std::uint64_t max_degree) {
  Polynomial result = Polynomial::one(p.arity()).truncated(max_degree);
  Polynomial base = p.truncated(max_degree);
  while (e > 0) {
    if (e & 1U) result = mul_truncated(result, base, max_degree);
    e >>= 1U;
    if (e > 0) base = base.squared().truncated(max_degree);
  }
  return result;
}

// ---------------------------------------------------------------------------

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  Polynomial parse() {
    skip_space();
    if (peek() == '0') {
      ++pos_;
      skip_space();
      if (pos_ != text_.size()) throw ParseError("unexpected input after 0", pos_);
      return Polynomial(arity_);
    }
    std::vector<Monomial> terms;
    terms.push_back(term());
    skip_space();
    while (peek() == '+') {
      ++pos_;
      skip_space();
      terms.push_back(term());
      skip_space();
    }
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return Polynomial::from_terms(arity_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t number(const char* what) {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<Exponent>::max() - digit) / 10) {
        throw ParseError(std::string(what) + " too large", start);
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return v;
  }

  Monomial term() {
    if (peek() == '1') {
      ++pos_;
      return Monomial::one(arity_);
    }
    std::array<Exponent, kMaxArity> exps{};
    factor(exps);
    skip_space();
    while (peek() == '*') {
      ++pos_;
      skip_space();
      factor(exps);
      skip_space();
    }
    return Monomial(std::span<const Exponent>(exps.data(), arity_));
  }

  void factor(std::array<Exponent, kMaxArity>& exps) {
    if (peek() != 'w') throw ParseError("expected 'w'", pos_);
    ++pos_;
    const std::size_t at = pos_;
    const std::uint64_t index = number("variable index");
    if (index == 0 || index > arity_) throw ParseError("unknown variable w" + std::to_string(index), at);
    std::uint64_t e = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      e = number("exponent");
    }
    exps[index - 1] = checked_add(exps[index - 1], static_cast<Exponent>(e));
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  if (arity == 0 || arity > kMaxArity) throw std::invalid_argument("unsupported arity");
  return Parser(text, arity).parse();
}

Polynomial parse_with_n(std::string_view text, int n, std::size_t arity) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '{') {
      out += text[i];
      continue;
    }
    const std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) throw ParseError("unterminated placeholder", i);
    const std::string_view body = text.substr(i + 1, close - i - 1);
    if (body.empty() || body[0] != 'n') throw ParseError("placeholder must start with n", i);
    std::int64_t value = n;
    if (body.size() > 1) {
      if (body[1] != '+' && body[1] != '-') throw ParseError("bad placeholder", i);
      std::int64_t k = 0;
      for (char ch : body.substr(2)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad placeholder", i);
        k = k * 10 + (ch - '0');
      }
      value += body[1] == '+' ? k : -k;
    }
    if (value < 0) throw std::domain_error("placeholder evaluates to a negative exponent");
    out += std::to_string(value);
    i = close;
  }
  return parse_polynomial(out, arity);
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'w' << (i + 1);
    if (m[i] != 1) os << '^' << m[i];
  }
  return os.str();
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_monomial(t);
  }
  return out;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back(std::vector<Exponent>(t.exponents().begin(), t.exponents().end()));
  }
  return {{"arity", p.arity()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  const auto arity = j.at("arity").get<std::size_t>();
  if (arity == 0 || arity > kMaxArity) throw std::invalid_argument("unsupported arity");
  std::vector<Monomial> terms;
  for (const auto& t : j.at("terms")) {
    const auto exps = t.get<std::vector<Exponent>>();
    if (exps.size() != arity) throw std::invalid_argument("term length does not match arity");
    terms.emplace_back(std::span<const Exponent>(exps));
  }
  return Polynomial::from_terms(arity, std::move(terms));
}

}  // namespace gcoh
