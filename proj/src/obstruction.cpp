#include "gcoh/obstruction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <map>

#include "gcoh/steenrod.hpp"

namespace gcoh {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

bool BitVector::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("bit index");
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void BitVector::set(std::size_t i, bool v) {
  if (i >= size_) throw std::out_of_range("bit index");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVector::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) throw std::invalid_argument("bit vector length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

namespace {

// Vectors indexed by their lowest set bit.
class Echelon {
 public:
  explicit Echelon(std::size_t length) : length_(length) {}

  BitVector reduce(BitVector v) const {
    if (v.size() != length_) throw std::invalid_argument("bit vector length mismatch");
    while (auto p = v.lowest_set()) {
      auto it = pivots_.find(*p);
      if (it == pivots_.end()) break;
      v ^= it->second;
    }
    return v;
  }

  bool insert(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.is_zero()) return false;
    pivots_.emplace(*r.lowest_set(), std::move(r));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t length_;
  std::map<std::size_t, BitVector> pivots_;
};

std::size_t common_length(const std::vector<BitVector>& a, const std::vector<BitVector>& b) {
  std::optional<std::size_t> len;
  for (const auto* set : {&a, &b}) {
    for (const auto& v : *set) {
      if (len && *len != v.size()) throw std::invalid_argument("bit vector length mismatch");
      len = v.size();
    }
  }
  return len.value_or(0);
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].get(r)) m.set(r, c);
    }
  }
  return m;
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

BitVector Gf2Matrix::apply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  BitVector y(rows());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x.get(c)) y ^= column(c);
  }
  return y;
}

std::size_t Gf2Matrix::rank() const {
  Echelon e(cols_);
  for (const auto& r : rows_) e.insert(r);
  return e.rank();
}

std::vector<BitVector> kernel(const Gf2Matrix& m) {
  // Reduced row echelon form, then one basis vector per free column.
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v.set(c, m.get(r, c));
    rows.push_back(std::move(v));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivot_cols.push_back(c);
    ++next;
  }
  std::vector<BitVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      if (rows[k].get(f)) v.set(pivot_cols[k]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BitVector> image(const Gf2Matrix& m) {
  Echelon e(m.rows());
  std::vector<BitVector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BitVector col = m.column(c);
    if (e.insert(col)) out.push_back(std::move(col));
  }
  return out;
}

std::size_t span_rank(const std::vector<BitVector>& vectors) {
  Echelon e(common_length(vectors, {}));
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

bool in_span(const std::vector<BitVector>& vectors, const BitVector& v) {
  Echelon e(v.size());
  for (const auto& b : vectors) e.insert(b);
  return e.reduce(v).is_zero();
}

bool subspace_contained(const std::vector<BitVector>& a, const std::vector<BitVector>& b) {
  Echelon e(common_length(a, b));
  for (const auto& v : b) e.insert(v);
  return std::all_of(a.begin(), a.end(), [&](const BitVector& v) { return e.reduce(v).is_zero(); });
}

// ---------------------------------------------------------------------------

OperatorExpr OperatorExpr::identity() { return OperatorExpr({Word{}}, 0); }

OperatorExpr OperatorExpr::sq(unsigned i) {
  Step s;
  s.index = i;
  return OperatorExpr({Word{s}}, static_cast<int>(i));
}

OperatorExpr OperatorExpr::mul(const Polynomial& p) {
  const auto d = p.homogeneous_degree();
  if (!d) throw InhomogeneousOperator("multiplier must be a nonzero homogeneous class");
  return mul(p, static_cast<int>(*d));
}

OperatorExpr OperatorExpr::mul(const Polynomial& p, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (!p.is_zero() && p.homogeneous_degree() != static_cast<std::uint64_t>(degree)) {
    throw InhomogeneousOperator("multiplier does not lie in the stated degree");
  }
  Step s;
  s.is_square = false;
  s.factor = p;
  s.factor_degree = degree;
  return OperatorExpr({Word{s}}, degree);
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& other) const {
  if (shift_ != other.shift_) throw InhomogeneousOperator("summands shift degree differently");
  std::vector<Word> w = words_;
  w.insert(w.end(), other.words_.begin(), other.words_.end());
  return OperatorExpr(std::move(w), shift_);
}

OperatorExpr OperatorExpr::operator*(const OperatorExpr& other) const {
  std::vector<Word> w;
  for (const auto& a : words_) {
    for (const auto& b : other.words_) {
      Word c = a;
      c.insert(c.end(), b.begin(), b.end());
      w.push_back(std::move(c));
    }
  }
  return OperatorExpr(std::move(w), shift_ + other.shift_);
}

std::string OperatorExpr::to_string() const {
  std::string out;
  for (const auto& word : words_) {
    if (!out.empty()) out += " + ";
    if (word.empty()) out += "id";
    std::string w;
    for (const auto& s : word) {
      if (!w.empty()) w += " ";
      w += s.is_square ? "Sq" + std::to_string(s.index) : "(" + format_polynomial(s.factor) + ")";
    }
    out += w;
  }
  return out.empty() ? "0" : out;
}

Polynomial apply(const GrassmannRing& ring, const OperatorExpr& op, const Polynomial& p) {
  Polynomial sum(3);
  for (const auto& word : op.words()) {
    Polynomial x = ring.reduce(p);
    for (auto it = word.rbegin(); it != word.rend() && !x.is_zero(); ++it) {
      x = it->is_square ? sq(ring, it->index, x) : ring.multiply(it->factor, x);
    }
    sum += x;
  }
  return sum;
}

BitVector coordinates(const GrassmannRing& ring, const Polynomial& p, int degree) {
  const GradedBasis& basis = ring.graded_basis(degree);
  BitVector v(basis.size());
  const Polynomial reduced = ring.reduce(p);
  for (const auto& t : reduced.terms()) {
    const std::size_t i = basis.index_of(t);
    if (i == basis.size()) throw std::invalid_argument("class has a term outside degree " + std::to_string(degree));
    v.set(i);
  }
  return v;
}

Polynomial from_coordinates(const GrassmannRing& ring, const BitVector& v, int degree) {
  const GradedBasis& basis = ring.graded_basis(degree);
  if (v.size() != basis.size()) throw std::invalid_argument("coordinate vector length mismatch");
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (v.get(i)) terms.push_back(basis.monomials[i]);
  }
  return Polynomial::from_sorted(3, std::move(terms));
}

Gf2Matrix operator_matrix(const GrassmannRing& ring, const OperatorExpr& op, int source_degree) {
  const int target = source_degree + op.shift();
  const GradedBasis& src = ring.graded_basis(source_degree);
  const GradedBasis& dst = ring.graded_basis(target);
  std::vector<BitVector> cols;
  cols.reserve(src.size());
  for (const auto& m : src.monomials) cols.push_back(coordinates(ring, apply(ring, op, Polynomial(m)), target));
  return Gf2Matrix::from_columns(dst.size(), cols);
}

// ---------------------------------------------------------------------------

namespace {

class Ctx {
 public:
  Ctx(const GrassmannRing& ring, const NormalClassTable& nu, LemmaReport& rep)
      : ring_(ring), nu_(nu), rep_(rep), n_(ring.n()) {}

  int n() const { return n_; }
  Polynomial P(std::string_view tmpl) const { return ring_.reduce(parse_with_n(tmpl, n_)); }
  const Polynomial& nu(int i) const { return nu_[i]; }
  OperatorExpr Nu(int i) const { return OperatorExpr::mul(nu_[i], i); }
  static OperatorExpr Sq(unsigned i) { return OperatorExpr::sq(i); }

  void eq(const std::string& label, const Polynomial& actual, const Polynomial& expected) {
    rep_.checks.push_back({label, actual == expected, format_polynomial(expected), format_polynomial(actual)});
  }

  // op(arg) = value, with arg and value as templates in n.
  void maps(const std::string& name, const OperatorExpr& op, std::string_view arg, std::string_view value) {
    eq(name + "(" + std::string(arg) + ")", apply(ring_, op, P(arg)), P(value));
  }

  void vanishes(int i) { eq("w" + std::to_string(i) + "(nu)", nu(i), Polynomial(3)); }

  void nonzero(std::string_view tmpl) {
    const Polynomial p = P(tmpl);
    rep_.checks.push_back({std::string(tmpl) + " != 0", !p.is_zero(), "nonzero", format_polynomial(p)});
  }

  void holds(const std::string& label, bool ok, const std::string& expected, const std::string& actual) {
    rep_.checks.push_back({label, ok, expected, actual});
  }

  Gf2Matrix matrix(const OperatorExpr& op, int source) const { return operator_matrix(ring_, op, source); }

  void surjective(const std::string& name, const OperatorExpr& op, int source) {
    const Gf2Matrix m = matrix(op, source);
    holds(name + ": H^" + std::to_string(source) + " -> H^" + std::to_string(source + op.shift()) + " onto",
          m.is_surjective(), "rank " + std::to_string(m.rows()), "rank " + std::to_string(m.rank()));
  }

  BitVector coords(std::string_view tmpl, int degree) const { return coordinates(ring_, P(tmpl), degree); }

  const GrassmannRing& ring() const { return ring_; }

 private:
  const GrassmannRing& ring_;
  const NormalClassTable& nu_;
  LemmaReport& rep_;
  int n_;
};

std::string dim_text(std::size_t d) { return "dim " + std::to_string(d); }

void lemma_l11(Ctx& c) {
  const int n = c.n();
  for (int i = 3 * n - 2; i <= 3 * n; ++i) c.vanishes(i);
  c.eq("w2(nu)", c.nu(2), c.P("w2"));
  const OperatorExpr a = c.Sq(2) + c.Nu(2);
  c.maps("(Sq2 + w2(nu))", a, "w3^{n-1}", "w2*w3^{n-1}");
  c.nonzero("w2*w3^{n-1}");
  c.maps("Sq1", c.Sq(1), "w2*w3^{n-1}", "w3^{n}");
  c.nonzero("w3^{n}");
  c.surjective("(Sq2 + w2(nu))", a, 3 * n - 3);
  c.surjective("Sq1", c.Sq(1), 3 * n - 1);
}

void lemma_l21(Ctx& c) {
  const int n = c.n();
  c.vanishes(3 * n - 4);
  c.vanishes(3 * n - 2);
  c.eq("w2(nu)", c.nu(2), c.P("w1^2 + w2"));
  // Intermediate expressions for the case n = 2^r - 2.
  const int r = normal_exponent(n);
  if (n == (1 << r) - 2) {
    c.eq("first four summands of w{3n-4}(nu)",
         c.P("w1^2*w3^{n-2} + w1^8*w3^{n-4} + w1^6*w2*w3^{n-4} + w1^2*w2^3*w3^{n-4}"), Polynomial(3));
    if (n >= 14) {
      c.eq("last four summands of w{3n-4}(nu)",
           c.P("w1^4*w2^8*w3^{n-8} + w1^2*w2^9*w3^{n-8} + w1^2*w2^12*w3^{n-10} + w1^2*w2^15*w3^{n-12}"),
           Polynomial(3));
      c.eq("w{3n-2}(nu) expression",
           c.P("w1^2*w2*w3^{n-2} + w1^8*w2*w3^{n-4} + w1^6*w2^2*w3^{n-4} + w1^2*w2^4*w3^{n-4}"
               " + w1^4*w2^9*w3^{n-8} + w1^2*w2^10*w3^{n-8} + w1^2*w2^13*w3^{n-10}"),
           Polynomial(3));
    }
  }
}

void lemma_l22(Ctx& c) {
  const OperatorExpr a = c.Sq(2) + c.Nu(2);
  c.maps("(Sq2 + w2(nu))", a, "w1*w3^{n-2}", "w1*w2*w3^{n-2} + w3^{n-1}");
  c.maps("(Sq2 + w2(nu))", a, "w2^2*w3^{n-3}", "w2^3*w3^{n-3}");
}

void lemma_l23(Ctx& c) {
  const int n = c.n();
  const Gf2Matrix m = c.matrix(c.Sq(1), 3 * n - 2);
  c.holds("Sq1 on H^{3n-2} is zero", m.is_zero(), "rank 0", "rank " + std::to_string(m.rank()));
  c.maps("Sq1", c.Sq(1), "w1*w3^{n-1}", "0");
  c.maps("Sq1", c.Sq(1), "w2^2*w3^{n-2}", "0");
}

void lemma_l24(Ctx& c) {
  const int n = c.n();
  const OperatorExpr a = c.Sq(2) + c.Nu(2);
  c.maps("(Sq2 + w2(nu))", a, "w1*w2*w3^{n-2}", "w2*w3^{n-1}");
  c.maps("(Sq2 + w2(nu))", a, "w2^3*w3^{n-3}", "0");
  c.maps("(Sq2 + w2(nu))", a, "w3^{n-1}", "w2*w3^{n-1}");
  c.nonzero("w2*w3^{n-1}");
  const auto ker = kernel(c.matrix(a, 3 * n - 3));
  const auto im = image(c.matrix(a, 3 * n - 5));
  c.holds("ker(Sq2 + w2(nu)) on H^{3n-3} within im(Sq2 + w2(nu)) from H^{3n-5}", subspace_contained(ker, im),
          "contained", "ker " + dim_text(ker.size()) + ", im " + dim_text(im.size()));
}

void lemma_l25(Ctx& c) {
  const int n = c.n();
  c.maps("Sq1", c.Sq(1), "w1*w2*w3^{n-2}", "w1*w3^{n-1}");
  c.maps("Sq1", c.Sq(1), "w2^3*w3^{n-3}", "w2^2*w3^{n-2}");
  c.maps("Sq1", c.Sq(1), "w3^{n-1}", "w1*w3^{n-1}");
  c.maps("Sq1", c.Sq(1), "w1*w2*w3^{n-2} + w3^{n-1}", "0");
  c.surjective("Sq1", c.Sq(1), 3 * n - 3);
}

void lemma_l26(Ctx& c) { c.maps("Sq2", c.Sq(2), "w1*w2*w3^{n-2} + w3^{n-1}", "w2*w3^{n-1}"); }

void lemma_ll2(Ctx& c) {
  const int n = c.n();
  for (int i = 3 * n - 8; i <= 3 * n; ++i) c.vanishes(i);
  c.eq("w2(nu)", c.nu(2), Polynomial(3));
  c.eq("w4(nu)", c.nu(4), c.P("w2^2"));
}

void lemma_ll3(Ctx& c) {
  const int n = c.n();
  c.maps("Sq2", c.Sq(2), "w1^2*w2^2*w3^{n-4}", "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3} + w2^4*w3^{n-4} + w2*w3^{n-2}");
  c.maps("Sq2", c.Sq(2), "w1*w2*w3^{n-3}", "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3}");
  c.maps("Sq2", c.Sq(2), "w3^{n-2}", "w1^2*w3^{n-2} + w2*w3^{n-2}");

  const std::vector<std::string> basis = {"w1^2*w3^{n-2}", "w1*w2^2*w3^{n-3}", "w2^4*w3^{n-4}", "w2*w3^{n-2}"};
  const int d = 3 * n - 4;
  std::vector<BitVector> vs;
  for (const auto& b : basis) vs.push_back(c.coords(b, d));
  c.holds("H^{3n-4} has the four listed classes as a basis",
          span_rank(vs) == 4 && c.ring().graded_basis(d).size() == 4, dim_text(4),
          dim_text(c.ring().graded_basis(d).size()));
  const auto im = image(c.matrix(c.Sq(2), 3 * n - 6));
  BitVector total(vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    total ^= vs[i];
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      BitVector s = vs[i];
      s ^= vs[j];
      c.holds("im Sq2 contains " + basis[i] + " + " + basis[j], in_span(im, s), "in image", in_span(im, s) ? "in image" : "not in image");
    }
  }
  c.holds("im Sq2 contains the sum of all four", in_span(im, total), "in image",
          in_span(im, total) ? "in image" : "not in image");
}

void lemma_ll4(Ctx& c) {
  const int n = c.n();
  c.maps("Sq2", c.Sq(2), "w1^2*w3^{n-2}", "w1*w3^{n-1} + w2^2*w3^{n-2}");
  c.maps("Sq2", c.Sq(2), "w1*w2^2*w3^{n-3}", "w1*w3^{n-1}");
  c.maps("Sq2", c.Sq(2), "w2^4*w3^{n-4}", "w1*w3^{n-1}");
  c.maps("Sq2", c.Sq(2), "w2*w3^{n-2}", "w1*w3^{n-1}");
  c.surjective("Sq2", c.Sq(2), 3 * n - 4);
}

void lemma_ll5(Ctx& c) {
  const int n = c.n();
  c.maps("Sq1", c.Sq(1), "w1*w2*w3^{n-2}", "w2^2*w3^{n-2}");
  c.maps("Sq1", c.Sq(1), "w2^3*w3^{n-3}", "0");
  c.maps("Sq1", c.Sq(1), "w3^{n-1}", "0");
  const auto im = image(c.matrix(c.Sq(1), 3 * n - 3));
  for (const char* t : {"w1*w3^{n-1}", "w1*w3^{n-1} + w2^2*w3^{n-2}"}) {
    const bool hit = in_span(im, c.coords(t, 3 * n - 2));
    c.holds(std::string(t) + " outside im Sq1", !hit, "not in image", hit ? "in image" : "not in image");
  }
}

void lemma_ll6(Ctx& c) {
  const char* x = "w1*w2^4*w3^{n-5}";
  c.maps("Sq2 Sq1", c.Sq(2) * c.Sq(1), x, "w3^{n-1}");
  c.maps("Sq2", c.Sq(2), x, "0");
  c.maps("(Sq4 + w4(nu))", c.Sq(4) + c.Nu(4), x, "0");
}

void lemma_ll7(Ctx& c) {
  c.maps("Sq1", c.Sq(1), "w1*w2^2*w3^{n-3}", "w2^3*w3^{n-3} + w3^{n-1}");
  c.maps("Sq1", c.Sq(1), "w2*w3^{n-2}", "w3^{n-1}");
  c.maps("Sq1", c.Sq(1), "w1*w2^2*w3^{n-3} + w2*w3^{n-2}", "w2^3*w3^{n-3}");
  c.maps("Sq2", c.Sq(2), "w1*w2^2*w3^{n-3} + w2*w3^{n-2}", "0");
}

void lemma_ll8(Ctx& c) {
  const int n = c.n();
  c.maps("Sq2", c.Sq(2), "w1*w3^{n-2}", "w1*w2*w3^{n-2}");
  auto span = image(c.matrix(c.Sq(2) + c.Nu(2), 3 * n - 5));
  const auto im1 = image(c.matrix(c.Sq(1), 3 * n - 4));
  span.insert(span.end(), im1.begin(), im1.end());
  const std::size_t target = c.ring().graded_basis(3 * n - 3).size();
  c.holds("im(Sq2 + w2(nu)) + im Sq1 spans H^{3n-3}", span_rank(span) == target, dim_text(target),
          dim_text(span_rank(span)));
}

void lemma_l27(Ctx& c) {
  const int n = c.n();
  for (int i = 3 * n - 14; i <= 3 * n; ++i) c.vanishes(i);
  c.eq("w1(nu)", c.nu(1), c.P("w1"));
  c.eq("w2(nu)", c.nu(2), c.P("w1^2 + w2"));
  c.eq("w3(nu)", c.nu(3), c.P("w1^3 + w3"));
  c.eq("w4(nu)", c.nu(4), c.P("w1^4 + w1^2*w2"));
}

OperatorExpr op_d(const Ctx& c) { return c.Sq(2) + c.Nu(1) * c.Nu(1) + c.Nu(2); }
OperatorExpr op_f1(const Ctx& c) { return op_d(c) * c.Sq(1); }
OperatorExpr op_f2(const Ctx& c) {
  return (c.Sq(4) + c.Nu(2) * c.Nu(2) + c.Nu(4)) * c.Sq(1) + (c.Nu(1) * c.Nu(2) + c.Nu(3)) * c.Sq(2) +
         (c.Nu(1) * c.Nu(1) + c.Nu(2)) * c.Sq(3);
}
OperatorExpr op_f3(const Ctx& c) {
  return (c.Sq(4) + c.Nu(2) * c.Nu(2) + c.Nu(4)) * c.Sq(2) + (c.Nu(1) * c.Nu(2) + c.Nu(3)) * c.Sq(3);
}

void lemma_l28(Ctx& c) {
  const OperatorExpr f1 = op_f1(c);
  c.maps("F1", f1, "w1^3*w2*w3^{n-4}", "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3}");
  c.maps("F1", f1, "w1^2*w3^{n-3}", "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3}");
  c.maps("F1", f1, "w1*w2^5*w3^{n-6}", "w2^4*w3^{n-4}");
  c.maps("F1", f1, "w2^4*w3^{n-5}", "w2^4*w3^{n-4}");
  c.maps("F1", f1, "w2^7*w3^{n-7}", "w2*w3^{n-2}");
  c.maps("F1", f1, "w2*w3^{n-3}", "w2*w3^{n-2}");
}

void lemma_l29(Ctx& c) {
  const int n = c.n();
  const OperatorExpr d = op_d(c);
  c.maps("D", d, "w1^2*w3^{n-2}", "w2^2*w3^{n-2}");
  c.maps("D", d, "w1*w2^2*w3^{n-3}", "w2^2*w3^{n-2}");
  c.maps("D", d, "w2^4*w3^{n-4}", "0");
  c.maps("D", d, "w2*w3^{n-2}", "0");
  c.nonzero("w2^2*w3^{n-2}");
  const auto ker = kernel(c.matrix(d, 3 * n - 4));
  const auto im = image(c.matrix(op_f1(c), 3 * n - 7));
  c.holds("ker D within im F1", subspace_contained(ker, im), "contained",
          "ker " + dim_text(ker.size()) + ", im " + dim_text(im.size()));
}

void lemma_l30(Ctx& c) {
  const OperatorExpr f2 = op_f2(c);
  c.maps("F2", f2, "w1^3*w2*w3^{n-4} + w1^2*w3^{n-3}", "w1*w3^{n-1} + w2^2*w3^{n-2}");
  c.maps("F2", f2, "w1*w2^5*w3^{n-6} + w2^4*w3^{n-5}", "0");
  c.maps("F2", f2, "w2^7*w3^{n-7} + w2*w3^{n-3}", "w2^2*w3^{n-2}");
}

void lemma_l31(Ctx& c) {
  c.maps("F3", op_f3(c), "w1*w2^5*w3^{n-6} + w2^4*w3^{n-5}", "w2*w3^{n-1}");
}

void lemma_l32(Ctx& c) {
  const int n = c.n();
  const OperatorExpr h = op_d(c);
  c.maps("H", h, "w1^2*w2*w3^{n-3}", "w2^3*w3^{n-3} + w3^{n-1}");
  c.maps("H", h, "w1*w3^{n-2}", "w1*w2*w3^{n-2}");
  c.maps("H", h, "w2^2*w3^{n-3}", "w3^{n-1}");
  c.surjective("H", h, 3 * n - 5);
}

void lemma_l33(Ctx& c) {
  const int n = c.n();
  c.maps("Sq1", c.Sq(1), "w2^3*w3^{n-3}", "w2^2*w3^{n-2}");
  c.maps("Sq1", c.Sq(1), "w3^{n-1}", "w1*w3^{n-1}");
  c.surjective("Sq1", c.Sq(1), 3 * n - 3);
}

struct Entry {
  LemmaInfo info;
  std::function<bool(int)> applies;
  std::function<void(Ctx&)> run;
};

bool mod4_0(int n) { return n >= 4 && n % 4 == 0; }
bool mod8_6(int n) { return n >= 6 && n % 8 == 6; }
bool mod8_1(int n) { return n >= 9 && n % 8 == 1; }
bool mod8_2(int n) { return n >= 10 && n % 8 == 2; }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"l11", "n = 0 mod 4", "top normal classes vanish; w2(nu); first obstructions"}, mod4_0, lemma_l11},
      {{"l21", "n = 6 mod 8", "w{3n-4}(nu), w{3n-2}(nu) vanish; w2(nu)"}, mod8_6, lemma_l21},
      {{"l22", "n = 6 mod 8", "Sq2 + w2(nu) on H^{3n-5}"}, mod8_6, lemma_l22},
      {{"l23", "n = 6 mod 8", "Sq1 vanishes on H^{3n-2}"}, mod8_6, lemma_l23},
      {{"l24", "n = 6 mod 8", "Sq2 + w2(nu) on H^{3n-3}"}, mod8_6, lemma_l24},
      {{"l25", "n = 6 mod 8", "Sq1 on H^{3n-3}"}, mod8_6, lemma_l25},
      {{"l26", "n = 6 mod 8", "Sq2 on a kernel class of H^{3n-3}"}, mod8_6, lemma_l26},
      {{"ll2", "n = 1 mod 8", "w_i(nu) for i >= 3n-8; w2(nu), w4(nu)"}, mod8_1, lemma_ll2},
      {{"ll3", "n = 1 mod 8", "Sq2 on H^{3n-6}"}, mod8_1, lemma_ll3},
      {{"ll4", "n = 1 mod 8", "Sq2 on H^{3n-4}"}, mod8_1, lemma_ll4},
      {{"ll5", "n = 1 mod 8", "Sq1 on H^{3n-3}"}, mod8_1, lemma_ll5},
      {{"ll6", "n = 1 mod 8", "operations on w1*w2^4*w3^{n-5}"}, mod8_1, lemma_ll6},
      {{"ll7", "n = 1 mod 8", "Sq1, Sq2 on H^{3n-4}"}, mod8_1, lemma_ll7},
      {{"ll8", "n = 1 mod 8", "Sq2 on w1*w3^{n-2}; spanning of H^{3n-3}"}, mod8_1, lemma_ll8},
      {{"l27", "n = 2 mod 8", "w_i(nu) for i >= 3n-14; w1..w4(nu)"}, mod8_2, lemma_l27},
      {{"l28", "n = 2 mod 8", "F1 on H^{3n-7}"}, mod8_2, lemma_l28},
      {{"l29", "n = 2 mod 8", "D on H^{3n-4}; ker D within im F1"}, mod8_2, lemma_l29},
      {{"l30", "n = 2 mod 8", "F2 on H^{3n-7}"}, mod8_2, lemma_l30},
      {{"l31", "n = 2 mod 8", "F3 on H^{3n-7}"}, mod8_2, lemma_l31},
      {{"l32", "n = 2 mod 8", "H on H^{3n-5}"}, mod8_2, lemma_l32},
      {{"l33", "n = 2 mod 8", "Sq1 on H^{3n-3}"}, mod8_2, lemma_l33},
  };
  return table;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw UnknownLemma("unknown lemma id: " + std::string(id));
}

}  // namespace

const std::vector<LemmaInfo>& lemma_registry() {
  static const std::vector<LemmaInfo> infos = [] {
    std::vector<LemmaInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool lemma_known(std::string_view id) {
  return std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.id == id; });
}

bool lemma_applies(std::string_view id, int n) { return find_entry(id).applies(n); }

std::vector<std::string> applicable_lemmas(int n) {
  std::vector<std::string> out;
  for (const auto& e : entries()) {
    if (e.applies(n)) out.push_back(e.info.id);
  }
  return out;
}

bool LemmaReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

LemmaVerifier::LemmaVerifier(const GrassmannRing& ring) : ring_(ring), nu_(normal_total_class(ring)) {}

LemmaReport LemmaVerifier::verify(std::string_view id) const {
  const Entry& e = find_entry(id);
  if (!e.applies(ring_.n())) {
    throw HypothesisViolation("lemma " + e.info.id + " requires " + e.info.hypothesis + ", got n = " +
                              std::to_string(ring_.n()));
  }
  LemmaReport rep{e.info.id, ring_.n(), {}};
  Ctx ctx(ring_, nu_, rep);
  e.run(ctx);
  return rep;
}

std::vector<LemmaReport> LemmaVerifier::verify_all(unsigned jobs) const {
  const auto ids = applicable_lemmas(ring_.n());
  std::vector<LemmaReport> out(ids.size());
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = verify(ids[i]);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < jobs; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < ids.size(); i += jobs) out[i] = verify(ids[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

LemmaReport verify_lemma(const GrassmannRing& ring, std::string_view id) {
  find_entry(id);
  return LemmaVerifier(ring).verify(id);
}

}  // namespace gcoh
