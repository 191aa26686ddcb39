#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhlie {

// Elements of GF(p^m) are the integers sum d_i p^i, read as the polynomial
// sum d_i X^i modulo the fixed Conway polynomial.
using Scalar = std::uint16_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Field {
 public:
  // p in {2,3,5,7}, m in 1..4; fields live for the whole program
  static const Field& get(unsigned p, unsigned m = 1);
  // "GF(4)", "GF(2^2)", "GF(7)"
  static const Field& parse(std::string_view descriptor);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  unsigned order() const { return q_; }
  bool is_prime() const { return m_ == 1; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  std::string name() const;

  // X for extensions, the least primitive root for prime fields
  Scalar generator() const { return exp_[1]; }
  Scalar from_int(long long v) const;

  Scalar add(Scalar a, Scalar b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return red_[a + b];
    if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
    return add_digits(a, b);
  }
  Scalar neg(Scalar a) const { return neg_[a]; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg_[b]); }
  Scalar mul(Scalar a, Scalar b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return red_[unsigned(a) * b];
    return exp_[log_[a] + log_[b]];
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, unsigned long long e) const;
  // a^(p^k)
  Scalar frobenius(Scalar a, unsigned k) const;

  // coordinates over the prime field in the basis 1, X, ..., X^(m-1)
  unsigned digit(Scalar a, unsigned i) const;
  Scalar from_digits(std::span<const unsigned> digits) const;

  // text accepted back by the .qalg reader: integers and powers of w
  std::string format(Scalar a) const;

  // y += a*x
  void axpy(std::span<Scalar> y, Scalar a, std::span<const Scalar> x) const;
  void scale(std::span<Scalar> y, Scalar a) const;

 private:
  Field(unsigned p, unsigned m);
  Scalar add_digits(Scalar a, Scalar b) const;

  unsigned p_, m_, q_;
  std::vector<unsigned> modulus_;
  std::vector<Scalar> exp_;   // length 2(q-1)
  std::vector<Scalar> log_;
  std::vector<Scalar> inv_, neg_;
  std::vector<Scalar> add_;   // odd extensions of small order
  std::vector<Scalar> red_;   // reduction mod p for prime fields
};

class Matrix {
 public:
  Matrix(const Field& F, std::size_t rows, std::size_t cols)
      : field_(&F), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(const Field& F, std::size_t n);
  static Matrix from_rows(const Field& F, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Scalar> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<Scalar> column(std::size_t j) const;

  void append_row(std::span<const Scalar> r);
  void swap_rows(std::size_t a, std::size_t b);
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Row reduction in place; returns pivot columns. With full=false rows above a
// pivot are left alone (enough for ranks).
std::vector<std::size_t> row_reduce(Matrix& M, bool full = true);
std::size_t rank(Matrix M);

// Subspace of K^n kept as a reduced row echelon basis, so equal subspaces
// have identical bases.
class Subspace {
 public:
  Subspace(const Field& F, std::size_t ambient) : basis_(F, 0, ambient) {}
  static Subspace span(Matrix rows);
  static Subspace span(const Field& F, std::size_t ambient,
                       const std::vector<std::vector<Scalar>>& vectors);
  static Subspace whole(const Field& F, std::size_t n);

  const Field& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Scalar> vector(std::size_t i) const { return basis_.row_vector(i); }

  // v minus its component along the subspace, read off the pivots
  std::vector<Scalar> reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const;
  std::vector<Scalar> combine(std::span<const Scalar> coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {v : M v = 0}
Subspace kernel_basis(const Matrix& M);
// column space of M
Subspace image_basis(const Matrix& M);
// some x with M x = b, or nullopt when b is not in the image
std::optional<std::vector<Scalar>> solve(const Matrix& M, std::span<const Scalar> b);

// Complement of `sub` inside `ambient` in echelon form. The projection
// kills sub, fixes the complement and is idempotent.
class QuotientSection {
 public:
  QuotientSection(const Subspace& sub, const Subspace& ambient);
  std::size_t dim() const { return complement_.dim(); }
  const Subspace& complement() const { return complement_; }
  const Subspace& kernel() const { return sub_; }
  std::vector<Scalar> project(std::span<const Scalar> v) const { return sub_.reduce(v); }
  // coordinates of the class of v in the complement basis
  std::vector<Scalar> class_coords(std::span<const Scalar> v) const;
  std::vector<Scalar> representative(std::span<const Scalar> coords) const {
    return complement_.combine(coords);
  }
  Matrix projection() const;

 private:
  Subspace sub_;
  Subspace complement_;
};

// {v in K^n : M * Frob^f(v) = 0} as a subspace over the prime field, in
// coordinates (v_0 digits, v_1 digits, ...).
Subspace semilinear_kernel(const Matrix& M, unsigned frob_power);
// K-span of a prime-field subspace written in expanded coordinates
Subspace fold_to_field(const Subspace& prime_sub, const Field& K);

}  // namespace hhlie
