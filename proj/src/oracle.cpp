#include "hhlie/oracle.hpp"

#include <map>

namespace hhlie {

namespace {

struct DerivationSystem {
  const AlgebraSpec& A;
  const Field& F;
  std::size_t n, nv, na, P;
  std::vector<Matrix> dmat;  // n x P: D(b_i) as a function of the parameters

  explicit DerivationSystem(const AlgebraSpec& alg)
      : A(alg),
        F(alg.field()),
        n(alg.dim()),
        nv(alg.quiver().vertex_count()),
        na(alg.quiver().arrow_count()),
        P((nv + na) * n) {}

  std::size_t gen_col(std::size_t g, std::size_t r) const { return g * n + r; }

  // rows of x * M where x is basis element bi
  Matrix left_times(std::size_t bi, const Matrix& M) const {
    Matrix out(F, n, M.cols());
    for (std::size_t j = 0; j < n; ++j) {
      auto row = M.row(j);
      bool any = false;
      for (Scalar v : row) any = any || v;
      if (!any) continue;
      for (auto [r, c] : A.product(bi, j)) F.axpy(out.row(r), c, row);
    }
    return out;
  }
  Matrix right_times(const Matrix& M, std::size_t bi) const {
    Matrix out(F, n, M.cols());
    for (std::size_t j = 0; j < n; ++j) {
      auto row = M.row(j);
      bool any = false;
      for (Scalar v : row) any = any || v;
      if (!any) continue;
      for (auto [r, c] : A.product(j, bi)) F.axpy(out.row(r), c, row);
    }
    return out;
  }
  // value of generator g as a parameter block
  Matrix gen_block(std::size_t g) const {
    Matrix out(F, n, P);
    for (std::size_t r = 0; r < n; ++r) out(r, gen_col(g, r)) = 1;
    return out;
  }
  Matrix of_element(const AlgElement& x) const {
    Matrix out(F, n, P);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i])
        for (std::size_t r = 0; r < n; ++r) F.axpy(out.row(r), x[i], dmat[i].row(r));
    return out;
  }

  void build() {
    const auto& basis = A.basis();
    dmat.assign(n, Matrix(F, n, P));
    // basis words are closed under suffixes, so shorter words are ready first
    for (std::size_t i = 0; i < n; ++i) {
      const PathWord& w = basis[i];
      if (w.is_idempotent()) {
        dmat[i] = gen_block(std::size_t(w.source));
        continue;
      }
      int a = int(w.letters[0]);
      std::size_t g = nv + std::size_t(a);
      if (w.letters.size() == 1) {
        dmat[i] = gen_block(g);
        continue;
      }
      const Arrow& arr = A.quiver().arrows()[a];
      PathWord rest{arr.target, w.target, w.letters.substr(1)};
      auto ri = A.index_of(rest);
      auto ai = A.index_of_arrow(a);
      if (!ri || !ai) throw Error("basis word " + to_string(A.quiver(), w) + " has a reducible suffix");
      // D(a w') = D(a) w' + a D(w')
      Matrix M = right_times(gen_block(g), *ri);
      Matrix L = left_times(*ai, dmat[*ri]);
      for (std::size_t r = 0; r < n; ++r) F.axpy(M.row(r), 1, L.row(r));
      dmat[i] = std::move(M);
    }
  }
};

// incremental semi-echelon form
class Echelon {
 public:
  Echelon(const Field& F, std::size_t cols) : F_(F), cols_(cols) {}
  void add(std::vector<Scalar> row) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!row[c]) continue;
      auto it = pivot_.find(c);
      if (it == pivot_.end()) {
        Scalar inv = F_.inv(row[c]);
        F_.scale(row, inv);
        pivot_[c] = rows_.size();
        rows_.push_back(std::move(row));
        return;
      }
      F_.axpy(row, F_.neg(row[c]), rows_[it->second]);
    }
  }
  void add_all(const Matrix& M) {
    for (std::size_t r = 0; r < M.rows(); ++r) {
      auto row = M.row(r);
      bool any = false;
      for (Scalar v : row) any = any || v;
      if (any) add(M.row_vector(r));
    }
  }
  Matrix matrix() const {
    Matrix M(F_, 0, cols_);
    for (const auto& r : rows_) M.append_row(r);
    return M;
  }

 private:
  const Field& F_;
  std::size_t cols_;
  std::map<std::size_t, std::size_t> pivot_;
  std::vector<std::vector<Scalar>> rows_;
};

// n x n matrix of the derivation with parameter vector x
Matrix full_map(const DerivationSystem& S, std::span<const Scalar> x) {
  Matrix M(S.F, S.n, S.n);
  for (std::size_t i = 0; i < S.n; ++i) {
    auto col = S.dmat[i].apply(x);
    for (std::size_t r = 0; r < S.n; ++r) M(r, i) = col[r];
  }
  return M;
}

std::vector<Scalar> params_of(const DerivationSystem& S, const Matrix& M) {
  std::vector<Scalar> x(S.P, 0);
  for (std::size_t v = 0; v < S.nv; ++v) {
    auto col = M.column(S.A.index_of_idempotent(int(v)));
    for (std::size_t r = 0; r < S.n; ++r) x[S.gen_col(v, r)] = col[r];
  }
  for (std::size_t a = 0; a < S.na; ++a) {
    PathWord w{S.A.quiver().arrows()[a].source, S.A.quiver().arrows()[a].target, std::string(1, char(a))};
    auto val = M.apply(S.A.normal_form(w));
    for (std::size_t r = 0; r < S.n; ++r) x[S.gen_col(S.nv + a, r)] = val[r];
  }
  return x;
}

bool leibniz_everywhere(const DerivationSystem& S, const Matrix& D) {
  const AlgebraSpec& A = S.A;
  const Field& F = S.F;
  for (std::size_t i = 0; i < S.n; ++i) {
    auto Di = D.column(i);
    for (std::size_t j = 0; j < S.n; ++j) {
      auto Dj = D.column(j);
      AlgElement lhs = D.apply(A.multiply(A.basis_element(i), A.basis_element(j)));
      AlgElement rhs = A.multiply(Di, A.basis_element(j));
      F.axpy(rhs, 1, A.multiply(A.basis_element(i), Dj));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

OracleResult solve_oracle(const AlgebraSpec& A, const CohomologySpace* H) {
  DerivationSystem S(A);
  S.build();
  const Field& F = S.F;
  const std::size_t n = S.n;
  Echelon E(F, S.P);
  std::vector<std::size_t> gens;  // basis index of each generator
  for (std::size_t v = 0; v < S.nv; ++v) gens.push_back(A.index_of_idempotent(int(v)));
  for (std::size_t a = 0; a < S.na; ++a) {
    auto ai = A.index_of_arrow(int(a));
    if (ai) {
      gens.push_back(*ai);
      continue;
    }
    // arrow that reduces: its parameter block must be D of its normal form
    PathWord w{A.quiver().arrows()[a].source, A.quiver().arrows()[a].target, std::string(1, char(a))};
    Matrix M = S.of_element(A.normal_form(w));
    Matrix G = S.gen_block(S.nv + a);
    for (std::size_t r = 0; r < n; ++r) F.axpy(M.row(r), F.neg(1), G.row(r));
    E.add_all(M);
    gens.push_back(std::size_t(-1));
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix Dg = S.gen_block(g);
    for (std::size_t b = 0; b < n; ++b) {
      // D(g b) - D(g) b - g D(b), and the mirror image
      for (int side = 0; side < 2; ++side) {
        AlgElement prod = A.zero();
        Matrix M(F, n, S.P);
        if (gens[g] != std::size_t(-1)) {
          prod = side == 0 ? A.multiply(A.basis_element(gens[g]), A.basis_element(b))
                           : A.multiply(A.basis_element(b), A.basis_element(gens[g]));
          M = S.of_element(prod);
          Matrix t1 = side == 0 ? S.right_times(Dg, b) : S.left_times(b, Dg);
          Matrix t2 = side == 0 ? S.left_times(gens[g], S.dmat[b]) : S.right_times(S.dmat[b], gens[g]);
          for (std::size_t r = 0; r < n; ++r) {
            F.axpy(M.row(r), F.neg(1), t1.row(r));
            F.axpy(M.row(r), F.neg(1), t2.row(r));
          }
        }
        E.add_all(M);
      }
    }
  }
  Subspace der = kernel_basis(E.matrix());
  std::vector<Matrix> full;
  for (std::size_t i = 0; i < der.dim(); ++i) {
    full.push_back(full_map(S, der.vector(i)));
    if (!leibniz_everywhere(S, full.back()))
      throw Error("oracle derivation fails the Leibniz rule on " + A.name());
  }
  // inner derivations x -> b x - x b
  std::vector<std::vector<Scalar>> inn;
  for (std::size_t b = 0; b < n; ++b) {
    Matrix ad = A.left_mult(A.basis_element(b));
    Matrix R = A.right_mult(A.basis_element(b));
    for (std::size_t r = 0; r < n; ++r) F.axpy(ad.row(r), F.neg(1), R.row(r));
    inn.push_back(params_of(S, ad));
  }
  Subspace inner = Subspace::span(F, S.P, inn);
  if (!der.contains(inner)) throw Error("inner derivations outside the derivation space");
  QuotientSection q(inner, der);
  const std::size_t dim = q.dim();
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < dim; ++i) maps.push_back(full_map(S, q.complement().vector(i)));
  LieAlgebra L(F, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Matrix C = maps[i] * maps[j];
      Matrix C2 = maps[j] * maps[i];
      for (std::size_t r = 0; r < n; ++r) F.axpy(C.row(r), F.neg(1), C2.row(r));
      L.set_bracket(i, j, q.class_coords(params_of(S, C)));
    }
  OracleResult out{der, inner, dim, std::move(L), Matrix(F, 0, 0)};
  if (!H) return out;
  // D - ad(u) with u = sum D(e_v) e_v kills the idempotents; its arrow
  // values form a degree-1 cochain
  const BimoduleComplex& C = *H->complex;
  out.transfer = Matrix(F, H->dim(), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Matrix& D = maps[j];
    AlgElement u = A.zero();
    for (std::size_t v = 0; v < S.nv; ++v) {
      std::size_t ev = A.index_of_idempotent(int(v));
      F.axpy(u, 1, A.multiply(D.column(ev), A.basis_element(ev)));
    }
    std::vector<AlgElement> vals;
    for (std::size_t a = 0; a < S.na; ++a) {
      PathWord w{A.quiver().arrows()[a].source, A.quiver().arrows()[a].target, std::string(1, char(a))};
      AlgElement x = A.normal_form(w);
      AlgElement v = D.apply(x);
      F.axpy(v, F.neg(1), A.multiply(u, x));
      F.axpy(v, 1, A.multiply(x, u));
      vals.push_back(std::move(v));
    }
    auto coords = H->class_coords(C.cochain_from_values(1, vals));
    for (std::size_t i = 0; i < coords.size(); ++i) out.transfer(i, j) = coords[i];
  }
  return out;
}

}  // namespace

OracleResult hh1_oracle(const AlgebraSpec& A) { return solve_oracle(A, nullptr); }

OracleResult hh1_oracle(const CohomologySpace& H) {
  if (H.degree != 1) throw Error("the oracle computes HH^1 only");
  return solve_oracle(H.complex->algebra(), &H);
}

}  // namespace hhlie
