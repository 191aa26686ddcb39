#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hhlie/algebra.hpp"
#include "hhlie/families.hpp"

namespace hhlie {

// Free summand Lambda e_left (x) e_right Lambda of a projective bimodule.
struct Summand {
  int left;
  int right;
  std::string label;
};

// coeff * left (x)_summand right
struct TensorTerm {
  Scalar coeff;
  PathWord left;
  int summand;
  PathWord right;
};
using TensorExpr = std::vector<TensorTerm>;

TensorExpr tensor(const Field& F, const PathExpr& left, int summand, const PathExpr& right);

struct ResolutionSpec {
  std::vector<std::vector<Summand>> summands;          // degrees 0..top
  std::vector<std::vector<TensorExpr>> differentials;  // [n][generator], n >= 1
  std::vector<PathExpr> relation_reps;                 // degree-2 generators
  bool periodic = false;  // degree n+4 repeats degree n for n >= 1

  int top() const { return int(summands.size()) - 1; }
  bool available(int n) const { return n >= 0 && (periodic || n <= top()); }
  const std::vector<Summand>& summands_at(int n) const;
  const std::vector<TensorExpr>& differential(int n) const;
};

// degrees 0, 1, 2 built from the quiver and the relation representatives;
// the degree-2 map is the noncommutative derivative of each representative
ResolutionSpec generic_resolution(const AlgebraSpec& A, const std::vector<PathExpr>& relation_reps);

// the published resolution for a family, null when none is implemented
std::shared_ptr<const ResolutionSpec> family_resolution(const FamilyParams& p, const AlgebraSpec& A);

// Linear algebra on Hom(Q^n, Lambda) and on the bimodules Q^n themselves.
class BimoduleComplex {
 public:
  BimoduleComplex(std::shared_ptr<const AlgebraSpec> A, std::shared_ptr<const ResolutionSpec> R);

  const AlgebraSpec& algebra() const { return *A_; }
  const ResolutionSpec& resolution() const { return *R_; }
  std::shared_ptr<const AlgebraSpec> algebra_ptr() const { return A_; }

  // cochains: a value in e_left Lambda e_right for each generator
  std::size_t hom_dim(int n) const;
  std::size_t hom_offset(int n, std::size_t generator) const;
  // ? o d^n : Hom(Q^{n-1}, Lambda) -> Hom(Q^n, Lambda)
  const Matrix& induced(int n) const;
  // values of a degree-n cochain on generators -> coordinates, and back
  std::vector<Scalar> cochain_from_values(int n, const std::vector<AlgElement>& values) const;
  std::vector<AlgElement> cochain_values(int n, const std::vector<Scalar>& cochain) const;

  // Q^n as a vector space with basis (summand, u, v), u in Lambda e_left,
  // v in e_right Lambda; degree -1 is Lambda
  std::size_t full_dim(int n) const;
  std::vector<Scalar> full_from_tensor(int n, const TensorExpr& t) const;
  std::vector<Scalar> apply_full(int n, const std::vector<Scalar>& x) const;
  Matrix full_differential(int n) const;
  // image of generator g of degree n in Q^{n-1}
  std::vector<Scalar> generator_image(int n, std::size_t g) const;
  // positions of the generator coordinates e_left (x) e_right in Q^n
  std::vector<std::size_t> generator_positions(int n) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
  struct EvalTerm {
    Scalar coeff;
    Sparse left;
    int summand;
    Sparse right;
  };
  const std::vector<std::vector<EvalTerm>>& evaluated(int n) const;
  // layout of Q^n
  struct FullLayout {
    std::vector<std::size_t> offset;
    std::vector<std::vector<std::size_t>> lefts, rights;  // basis indices
    std::vector<std::vector<std::size_t>> left_pos, right_pos;  // basis index -> slot
    std::size_t total = 0;
  };
  const FullLayout& layout(int n) const;
  int canonical(int n) const;

  std::shared_ptr<const AlgebraSpec> A_;
  std::shared_ptr<const ResolutionSpec> R_;
  mutable std::mutex mu_;
  mutable std::map<int, Matrix> induced_;
  mutable std::map<int, std::vector<std::vector<EvalTerm>>> eval_;
  mutable std::map<int, FullLayout> layout_;
};

struct ResolutionCheckOptions {
  std::size_t full_limit = 30;  // full bimodule rank checks up to this algebra dimension
};

// d^n o d^{n+1} = 0 on generators, and as full maps under the limit
ValidationReport check_complex(const BimoduleComplex& C, const ResolutionCheckOptions& opt = {});
// exactness of the one-sided complex (Lambda/rad) (x) Q, and of Q itself
// under the limit
ValidationReport check_exactness(const BimoduleComplex& C, const ResolutionCheckOptions& opt = {});
// images of the differentials lie in rad Q + Q rad
ValidationReport check_minimality(const BimoduleComplex& C);

// dim Ext^n(S_i, S_j) from the one-sided complex, for n below the top
std::vector<std::vector<std::size_t>> ext_between_simples(const BimoduleComplex& C, int n);

}  // namespace hhlie
