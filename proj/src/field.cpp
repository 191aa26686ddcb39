#include "hhlie/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <regex>

namespace hhlie {

namespace {

// Conway polynomials, low coefficient first, leading 1 omitted
std::vector<unsigned> conway(unsigned p, unsigned m) {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 2}, {1, 1}},       {{2, 3}, {1, 1, 0}},    {{2, 4}, {1, 1, 0, 0}},
      {{3, 2}, {2, 2}},       {{3, 3}, {1, 2, 0}},    {{3, 4}, {2, 0, 0, 2}},
      {{5, 2}, {2, 4}},       {{5, 3}, {3, 3, 0}},    {{5, 4}, {2, 4, 4, 0}},
      {{7, 2}, {3, 6}},       {{7, 3}, {4, 0, 6}},    {{7, 4}, {3, 4, 5, 0}},
  };
  if (m == 1) return {};
  auto it = table.find({p, m});
  if (it == table.end()) throw Error("unsupported field GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
  return it->second;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Field::Field(unsigned p, unsigned m) : p_(p), m_(m), q_(ipow(p, m)) {
  if (!(p == 2 || p == 3 || p == 5 || p == 7) || m < 1 || m > 4)
    throw Error("unsupported field GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
  red_.resize(p_ * p_ + p_);
  for (unsigned i = 0; i < red_.size(); ++i) red_[i] = Scalar(i % p_);

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  if (m_ == 1) {
    for (unsigned g = 1; g < p_; ++g) {
      unsigned x = 1, order = 0;
      do { x = x * g % p_; ++order; } while (x != 1);
      if (order != p_ - 1) continue;
      exp_[0] = 1;
      for (unsigned i = 1; i < q_ - 1; ++i) exp_[i] = Scalar(exp_[i - 1] * g % p_);
      break;
    }
  } else {
    auto low = conway(p_, m_);
    modulus_ = low;
    modulus_.push_back(1);
    std::vector<unsigned> d(m_, 0);
    d[0] = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
      unsigned v = 0;
      for (unsigned j = m_; j-- > 0;) v = v * p_ + d[j];
      exp_[i] = Scalar(v);
      // multiply by X
      unsigned top = d[m_ - 1];
      for (unsigned j = m_ - 1; j > 0; --j) d[j] = d[j - 1];
      d[0] = 0;
      for (unsigned j = 0; j < m_; ++j) d[j] = (d[j] + (p_ - low[j]) * top) % p_;
    }
  }
  std::vector<bool> seen(q_, false);
  for (unsigned i = 0; i < q_ - 1; ++i) {
    if (exp_[i] == 0 || seen[exp_[i]]) throw Error("modulus of " + name() + " is not primitive");
    seen[exp_[i]] = true;
    log_[exp_[i]] = Scalar(i);
  }
  for (unsigned i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];

  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    unsigned v = 0;
    for (unsigned j = m_; j-- > 0;) v = v * p_ + (p_ - digit(Scalar(a), j)) % p_;
    neg_[a] = Scalar(v);
  }
  if (p_ != 2 && m_ > 1 && q_ <= 729) {
    add_.resize(std::size_t(q_) * q_);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) add_[std::size_t(a) * q_ + b] = add_digits(Scalar(a), Scalar(b));
  }
  inv_.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

const Field& Field::get(unsigned p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, m}];
  if (!slot) {
    try {
      slot.reset(new Field(p, m));
    } catch (...) {
      registry.erase({p, m});
      throw;
    }
  }
  return *slot;
}

const Field& Field::parse(std::string_view descriptor) {
  static const std::regex re(R"(\s*(?:GF|F)\(?\s*(\d+)\s*(?:\^\s*(\d+))?\s*\)?\s*)");
  std::string s(descriptor);
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw Error("bad field descriptor '" + s + "'");
  unsigned base = unsigned(std::stoul(mt[1]));
  if (mt[2].matched) return get(base, unsigned(std::stoul(mt[2])));
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned m = 1; m <= 4; ++m)
      if (ipow(p, m) == base) return get(p, m);
  throw Error("unsupported field order " + std::to_string(base));
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

Scalar Field::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error("division by zero in " + name());
  return inv_[a];
}

Scalar Field::pow(Scalar a, unsigned long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(unsigned long long)log_[a] * e % (q_ - 1)];
}

Scalar Field::frobenius(Scalar a, unsigned k) const {
  k %= m_;
  return pow(a, ipow(p_, k));
}

unsigned Field::digit(Scalar a, unsigned i) const {
  unsigned v = a;
  while (i--) v /= p_;
  return v % p_;
}

Scalar Field::from_digits(std::span<const unsigned> digits) const {
  unsigned v = 0;
  for (std::size_t j = digits.size(); j-- > 0;) v = v * p_ + digits[j] % p_;
  return Scalar(v);
}

Scalar Field::add_digits(Scalar a, Scalar b) const {
  unsigned v = 0, scale = 1, x = a, y = b;
  for (unsigned j = 0; j < m_; ++j) {
    v += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Scalar(v);
}

std::string Field::format(Scalar a) const {
  if (m_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  for (unsigned j = m_; j-- > 0;) {
    unsigned d = digit(a, j);
    if (!d) continue;
    if (!out.empty()) out += " + ";
    std::string mono = j == 0 ? "" : (j == 1 ? "w" : "w^" + std::to_string(j));
    if (mono.empty()) out += std::to_string(d);
    else if (d == 1) out += mono;
    else out += std::to_string(d) + "*" + mono;
  }
  return out;
}

void Field::axpy(std::span<Scalar> y, Scalar a, std::span<const Scalar> x) const {
  if (a == 0) return;
  const std::size_t n = y.size();
  if (p_ == 2 && m_ == 1) {
    for (std::size_t j = 0; j < n; ++j) y[j] ^= x[j];
    return;
  }
  if (m_ == 1) {
    const Scalar* red = red_.data();
    for (std::size_t j = 0; j < n; ++j) y[j] = red[y[j] + unsigned(a) * x[j]];
    return;
  }
  const unsigned la = log_[a];
  for (std::size_t j = 0; j < n; ++j)
    if (x[j]) y[j] = add(y[j], exp_[la + log_[x[j]]]);
}

void Field::scale(std::span<Scalar> y, Scalar a) const {
  for (auto& v : y) v = mul(v, a);
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix I(F, n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Matrix Matrix::from_rows(const Field& F, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  Matrix M(F, 0, cols);
  for (auto& r : rows) M.append_row(r);
  return M;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (r.size() != cols_) throw Error("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Matrix Matrix::transpose() const {
  Matrix T(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  Matrix R(*field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (Scalar a = (*this)(i, k)) field_->axpy(R.row(i), a, o.row(k));
  return R;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error("vector length mismatch");
  std::vector<Scalar> out(rows_, 0);
  const Field& F = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = 0;
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (r[j] && v[j]) acc = F.add(acc, F.mul(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

std::vector<std::size_t> row_reduce(Matrix& M, bool full) {
  const Field& F = M.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t piv = r;
    while (piv < M.rows() && M(piv, c) == 0) ++piv;
    if (piv == M.rows()) continue;
    M.swap_rows(r, piv);
    if (M(r, c) != 1) F.scale(M.row(r), F.inv(M(r, c)));
    auto prow = M.row(r);
    for (std::size_t i = full ? 0 : r + 1; i < M.rows(); ++i) {
      if (i == r) continue;
      if (Scalar a = M(i, c)) F.axpy(M.row(i), F.neg(a), prow);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix M) { return row_reduce(M, false).size(); }

// ---------------------------------------------------------------------------

Subspace Subspace::span(Matrix rows) {
  auto piv = row_reduce(rows, true);
  Subspace S(rows.field(), rows.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) S.basis_.append_row(rows.row(i));
  S.pivots_ = std::move(piv);
  return S;
}

Subspace Subspace::span(const Field& F, std::size_t ambient, const std::vector<std::vector<Scalar>>& vectors) {
  return span(Matrix::from_rows(F, ambient, vectors));
}

Subspace Subspace::whole(const Field& F, std::size_t n) { return span(Matrix::identity(F, n)); }

std::vector<Scalar> Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw Error("vector length mismatch");
  std::vector<Scalar> out(v.begin(), v.end());
  const Field& F = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    if (Scalar a = out[pivots_[i]]) F.axpy(out, F.neg(a), basis_.row(i));
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<Scalar> Subspace::combine(std::span<const Scalar> coords) const {
  std::vector<Scalar> out(ambient_dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) field().axpy(out, coords[i], basis_.row(i));
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Matrix M = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) M.append_row(other.basis().row(i));
  return span(std::move(M));
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x A = y B  <=>  [A; -B]^T (x,y) = 0
  const Field& F = field();
  std::size_t a = dim(), b = other.dim(), n = ambient_dim();
  Matrix M(F, n, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < n; ++j) M(j, i) = basis_(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < n; ++j) M(j, a + i) = F.neg(other.basis()(i, j));
  Subspace K = kernel_basis(M);
  Matrix out(F, 0, n);
  for (std::size_t r = 0; r < K.dim(); ++r) {
    auto x = K.vector(r);
    out.append_row(combine(std::span<const Scalar>(x).first(a)));
  }
  return span(std::move(out));
}

Subspace kernel_basis(const Matrix& M) {
  const Field& F = M.field();
  Matrix R = M;
  auto piv = row_reduce(R, true);
  std::vector<bool> is_piv(M.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  Matrix K(F, 0, M.cols());
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(M.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(R(i, f));
    K.append_row(v);
  }
  return Subspace::span(std::move(K));
}

Subspace image_basis(const Matrix& M) { return Subspace::span(M.transpose()); }

std::optional<std::vector<Scalar>> solve(const Matrix& M, std::span<const Scalar> b) {
  if (b.size() != M.rows()) throw Error("right-hand side length mismatch");
  const Field& F = M.field();
  Matrix A(F, M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) A(i, j) = M(i, j);
    A(i, M.cols()) = b[i];
  }
  auto piv = row_reduce(A, true);
  if (!piv.empty() && piv.back() == M.cols()) return std::nullopt;
  std::vector<Scalar> x(M.cols(), 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = A(i, M.cols());
  return x;
}

// ---------------------------------------------------------------------------

QuotientSection::QuotientSection(const Subspace& sub, const Subspace& ambient)
    : sub_(sub), complement_(sub.field(), sub.ambient_dim()) {
  if (!ambient.contains(sub)) throw Error("quotient: subspace not contained in ambient");
  Matrix reduced(sub.field(), 0, sub.ambient_dim());
  for (std::size_t i = 0; i < ambient.dim(); ++i) reduced.append_row(sub_.reduce(ambient.basis().row(i)));
  complement_ = Subspace::span(std::move(reduced));
}

std::vector<Scalar> QuotientSection::class_coords(std::span<const Scalar> v) const {
  auto c = project(v);
  auto coords = complement_.coordinates(c);
  if (!coords) throw Error("quotient: vector outside the ambient space");
  return *coords;
}

Matrix QuotientSection::projection() const {
  std::size_t n = sub_.ambient_dim();
  Matrix P(sub_.field(), n, n);
  std::vector<Scalar> e(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1;
    auto col = project(e);
    e[j] = 0;
    for (std::size_t i = 0; i < n; ++i) P(i, j) = col[i];
  }
  return P;
}

Subspace semilinear_kernel(const Matrix& M, unsigned frob_power) {
  const Field& K = M.field();
  const Field& P = Field::get(K.characteristic(), 1);
  const unsigned m = K.degree();
  Matrix E(P, M.rows() * m, M.cols() * m);
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (unsigned i = 0; i < m; ++i) {
      Scalar basis_elt = m == 1 ? Scalar(1) : K.pow(Scalar(K.characteristic()), i);
      Scalar fb = K.frobenius(basis_elt, frob_power);
      for (std::size_t r = 0; r < M.rows(); ++r) {
        Scalar v = K.mul(M(r, j), fb);
        for (unsigned t = 0; t < m; ++t) E(r * m + t, j * m + i) = Scalar(K.digit(v, t));
      }
    }
  }
  return kernel_basis(E);
}

Subspace fold_to_field(const Subspace& prime_sub, const Field& K) {
  const unsigned m = K.degree();
  if (prime_sub.ambient_dim() % m) throw Error("fold: ambient dimension not divisible by degree");
  std::size_t n = prime_sub.ambient_dim() / m;
  Matrix rows(K, 0, n);
  for (std::size_t r = 0; r < prime_sub.dim(); ++r) {
    auto v = prime_sub.vector(r);
    std::vector<Scalar> w(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<unsigned> d(m);
      for (unsigned i = 0; i < m; ++i) d[i] = v[j * m + i];
      w[j] = K.from_digits(d);
    }
    rows.append_row(w);
  }
  return Subspace::span(std::move(rows));
}

}  // namespace hhlie
