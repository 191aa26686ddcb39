#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhlie/cohomology.hpp"

namespace hhlie {

// sum over the letters a_i of w of a_1..a_{i-1} f(a_i) a_{i+1}..a_n;
// f holds one value per arrow
AlgElement xi_extend(const AlgebraSpec& A, const std::vector<AlgElement>& f, const PathWord& w);

// [f,g](a) = xi(f)(g(a)) - xi(g)(f(a)) on degree-1 cochains
std::vector<Scalar> cochain_bracket(const BimoduleComplex& C, std::span<const Scalar> f,
                                    std::span<const Scalar> g);
// on class coordinates of HH^1
std::vector<Scalar> class_bracket(const CohomologySpace& H, std::span<const Scalar> x,
                                  std::span<const Scalar> y);

class LieAlgebra {
 public:
  LieAlgebra(const Field& F, std::size_t dim);  // abelian
  const Field& field() const { return *field_; }
  std::size_t dim() const { return dim_; }

  const std::vector<Scalar>& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  // sets [b_i,b_j] = v and [b_j,b_i] = -v
  void set_bracket(std::size_t i, std::size_t j, std::vector<Scalar> v);
  std::vector<Scalar> bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  // column j is [x, b_j]
  Matrix ad(std::span<const Scalar> x) const;

  // antisymmetry and the Jacobi identity on all basis triples
  ValidationReport check() const;
  // new basis = columns of P (invertible)
  LieAlgebra change_basis(const Matrix& P) const;
  // L / I for an ideal I, in the echelon complement of I
  LieAlgebra quotient(const Subspace& ideal) const;

  bool operator==(const LieAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_;
  }

  // {"dim", "field", "constants": [[i,j,k,c], ...]} with i < j
  std::string to_json() const;
  static LieAlgebra from_json(const std::string& text);

 private:
  const Field* field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> table_;
};

// structure constants of HH^1 in the canonical class basis
LieAlgebra hh1_lie(const CohomologySpace& H);

// span of [a,b] over bases of A and B
Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B);
// L^0 = L, L^i = [L, L^{i-1}]
Subspace lower_central(const LieAlgebra& L, std::size_t i);
// D^0 = L, D^i = [D^{i-1}, D^{i-1}]
Subspace derived(const LieAlgebra& L, std::size_t i);
Subspace lie_center(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
// a subalgebra (typically an ideal) with the induced bracket
bool is_nilpotent(const LieAlgebra& L, const Subspace& sub);
Subspace ideal_generated(const LieAlgebra& L, const Subspace& gens);

Matrix killing_form(const LieAlgebra& L);
std::size_t killing_rank(const LieAlgebra& L);

struct Nilradical {
  std::optional<Subspace> ideal;  // empty means undetermined
  std::string method;
  std::size_t candidates_checked = 0;
};
// extension candidates are enumerated only while q^codim <= budget
Nilradical nilradical(const LieAlgebra& L, std::size_t budget = 1000000);

// dim of {D : lambda D[x,y] = mu [Dx,y] + nu [x,Dy]}
std::size_t gen_derivations(const LieAlgebra& L, Scalar lambda, Scalar mu, Scalar nu);

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central;  // dims of L^1, L^2, ... up to the first repeat
  std::vector<std::size_t> derived;        // dims of D^1, D^2, ...
  std::size_t center = 0;
  std::size_t killing_rank = 0;
  bool nilpotent = false;
  std::optional<std::size_t> nilradical;  // empty: undetermined
  std::vector<std::pair<Scalar, std::size_t>> der;  // rho -> dim der(rho,1,1)
  std::string to_text(const Field& F) const;
};

Fingerprint fingerprint(const LieAlgebra& L, const std::vector<Scalar>& probes = {});
// "distinguished by <invariant> (a vs b)" or "inconclusive"; never claims
// an isomorphism
std::string distinguish(const Fingerprint& a, const Fingerprint& b, const Field& F);
std::string distinguish(const LieAlgebra& a, const LieAlgebra& b, const std::vector<Scalar>& probes = {});

// map: column j is the image of basis j of L1 in the basis of L2
bool verify_iso(const LieAlgebra& L1, const LieAlgebra& L2, const Matrix& map);

// six-dimensional algebra with [e0,e_i] = nu_i e_i, nu = (s, 2s, k, 2k, lambda)
LieAlgebra g_lambda(const Field& F, int k, int s, Scalar lambda);
// {s/l, 2s/l, k/l, 2k/l} and their inverses (nonzero entries only)
std::vector<Scalar> e_set(const Field& F, int k, int s, Scalar lambda);
// default probes: 1 together with the two sets above for the 2B families
std::vector<Scalar> default_probes(const FamilyParams& p, const Field& F);

}  // namespace hhlie
