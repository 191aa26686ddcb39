#include "hhlie/resolution.hpp"

#include <random>
#include <sstream>

#include "hhlie/dsl.hpp"

namespace hhlie {

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

Sparse to_sparse(const AlgElement& a) {
  Sparse out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) out.push_back({i, a[i]});
  return out;
}

// a*b accumulated into acc (dense) with factor c
void mul_into(const AlgebraSpec& A, const Sparse& a, const Sparse& b, Scalar c, std::vector<Scalar>& acc) {
  const Field& F = A.field();
  for (auto [i, x] : a)
    for (auto [j, y] : b) {
      Scalar xy = F.mul(c, F.mul(x, y));
      for (auto [k, z] : A.product(i, j)) acc[k] = F.add(acc[k], F.mul(xy, z));
    }
}

Sparse mul_sparse(const AlgebraSpec& A, const Sparse& a, const Sparse& b) {
  std::vector<Scalar> acc(A.dim(), 0);
  mul_into(A, a, b, 1, acc);
  return to_sparse(acc);
}

Sparse single(std::size_t i) { return {{i, Scalar(1)}}; }

// noncommutative derivative: a1..an -> sum a1..a(i-1) (x)_{a_i} a(i+1)..an,
// the summand slot holding the arrow index
TensorExpr derivative(const Quiver& Q, const PathExpr& z) {
  TensorExpr out;
  for (const Term& t : z.terms()) {
    const PathWord& w = t.word;
    int at = w.source;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      int a = int(static_cast<unsigned char>(w.letters[i]));
      const Arrow& ar = Q.arrows()[a];
      PathWord left{w.source, at, w.letters.substr(0, i)};
      PathWord right{ar.target, w.target, w.letters.substr(i + 1)};
      out.push_back({t.coeff, left, a, right});
      at = ar.target;
    }
  }
  return out;
}

}  // namespace

TensorExpr tensor(const Field& F, const PathExpr& left, int summand, const PathExpr& right) {
  TensorExpr out;
  for (const Term& l : left.terms())
    for (const Term& r : right.terms()) {
      Scalar c = F.mul(l.coeff, r.coeff);
      if (c) out.push_back({c, l.word, summand, r.word});
    }
  return out;
}

const std::vector<Summand>& ResolutionSpec::summands_at(int n) const {
  if (!available(n)) throw Error("degree " + std::to_string(n) + " unavailable");
  if (n > top()) n = (n - 1) % 4 + 1;
  return summands[n];
}

const std::vector<TensorExpr>& ResolutionSpec::differential(int n) const {
  if (n < 1 || !available(n)) throw Error("differential " + std::to_string(n) + " unavailable");
  if (n > top()) n = (n - 1) % 4 + 1;
  return differentials[n];
}

ResolutionSpec generic_resolution(const AlgebraSpec& A, const std::vector<PathExpr>& reps) {
  const Quiver& Q = A.quiver();
  const Field& F = A.field();
  ResolutionSpec R;
  R.summands.resize(3);
  R.differentials.resize(3);
  for (int v = 0; v < Q.vertex_count(); ++v) R.summands[0].push_back({v, v, "e_" + Q.vertices()[v]});
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrows()[a];
    R.summands[1].push_back({ar.source, ar.target, ar.name});
    PathWord w = arrow_word(Q, a);
    TensorExpr d;
    d.push_back({1, w, ar.target, idempotent(ar.target)});
    d.push_back({F.neg(1), idempotent(ar.source), ar.source, w});
    R.differentials[1].push_back(d);
  }
  int idx = 0;
  for (const PathExpr& z : reps) {
    if (z.empty()) throw Error("empty relation representative");
    const PathWord& w0 = z.terms().front().word;
    for (const Term& t : z.terms())
      if (t.word.source != w0.source || t.word.target != w0.target)
        throw Error("relation representative is not uniform");
    R.summands[2].push_back({w0.source, w0.target, "z" + std::to_string(idx++)});
    R.differentials[2].push_back(derivative(Q, z));
  }
  R.relation_reps = reps;
  return R;
}

namespace {

std::vector<PathExpr> family_reps(const FamilyParams& p, const AlgebraSpec& A) {
  const Field& F = A.field();
  std::map<std::string, Scalar> sc = {{"c", p.c}, {"d", p.d}, {"A", p.a}};
  std::map<std::string, long long> in = {{"k", p.k}, {"s", p.s}};
  auto P = [&](const std::string& text) { return parse_path_expr(A.quiver(), F, text, sc, in); };
  switch (p.family) {
    case Family::D1A2:
      return {P("x^2 - (x*y)^k"), P("(x*y)^k - (y*x)^k"), P("y^2 - d*(y*x)^k")};
    case Family::SD1A1:
    case Family::SD1A2:
      return {P("x^2 - (y*x)^(k-1)*y + c*(y*x)^k"), P("y^2 - d*(x*y)^k")};
    case Family::Q1A1:
    case Family::Q1A2:
      return {P("x^2 - (y*x)^(k-1)*y - c*(y*x)^k"), P("y^2 - (x*y)^(k-1)*x - d*(x*y)^k")};
    case Family::SD2B1:
      return {P("a^2 - (b*g*a)^(k-1)*b*g - c*(b*g*a)^k"), P("b*e"), P("e*g"), P("g*b"),
              P("e^s - (g*a*b)^k")};
    case Family::SD2B2:
      if (p.s == 2)
        return {P("a^2 - c*(a*b*g)^k"), P("b*g*b - (a*b*g)^(k-1)*a*b"), P("g*b*g - (g*a*b)^(k-1)*g*a")};
      return {P("a^2 - c*(b*g*a)^k"), P("b*e - a*b*(g*a*b)^(k-1)"), P("e*g - g*a*(b*g*a)^(k-1)"),
              P("g*b - e^(s-1)")};
    case Family::Q2B1:
      break;
  }
  return {};
}

}  // namespace

std::shared_ptr<const ResolutionSpec> family_resolution(const FamilyParams& p, const AlgebraSpec& A) {
  if (p.family == Family::Q2B1) return nullptr;
  auto R = std::make_shared<ResolutionSpec>(generic_resolution(A, family_reps(p, A)));
  if (!is_quaternion(p.family)) return R;

  const Field& F = A.field();
  std::map<std::string, Scalar> sc = {{"c", p.c}, {"d", p.d}};
  std::map<std::string, long long> in = {{"k", p.k}};
  auto P = [&](const std::string& text) { return parse_path_expr(A.quiver(), F, text, sc, in); };
  R->summands.push_back({{0, 0, "1"}});
  R->summands.push_back({{0, 0, "1"}});
  // (x (x)_x 1 + 1 (x)_x x)(1 + cx)^-1 + the same for y; x^3 = (xy)^k is
  // not zero, so the inverse keeps its cubic term
  TensorExpr d3;
  for (auto& t : tensor(F, P("x"), 0, P("1 + c*x + c^2*x^2 + c^3*x^3"))) d3.push_back(t);
  for (auto& t : tensor(F, P("1"), 0, P("x + c*x^2 + c^2*x^3"))) d3.push_back(t);
  for (auto& t : tensor(F, P("y"), 1, P("1 + d*y + d^2*y^2 + d^3*y^3"))) d3.push_back(t);
  for (auto& t : tensor(F, P("1"), 1, P("y + d*y^2 + d^2*y^3"))) d3.push_back(t);
  R->differentials.push_back({d3});
  TensorExpr j;
  auto add = [&](const std::string& l, const std::string& r) {
    for (auto& term : tensor(F, P(l), 0, P(r))) j.push_back(term);
  };
  for (int t = 0; t < p.k; ++t) {
    std::string T = std::to_string(t), K = std::to_string(p.k);
    add("(x*y)^" + T, "(x*y)^(" + K + "-" + T + ")");
    add("(y*x)^(" + T + "+1)", "(y*x)^(" + K + "-" + T + "-1)");
    add("(x*y)^" + T + "*x", "y*(x*y)^(" + K + "-1-" + T + ")");
    add("(y*x)^" + T + "*y", "x*(y*x)^(" + K + "-1-" + T + ")");
  }
  // needed for j(1) to commute with x and y once c or d is nonzero
  add("c*(y*x)^(k-1)*y", "(y*x)^(k-1)*y");
  add("d*(x*y)^(k-1)*x", "(x*y)^(k-1)*x");
  R->differentials.push_back({j});
  R->periodic = true;
  return R;
}

// ---------------------------------------------------------------------------

BimoduleComplex::BimoduleComplex(std::shared_ptr<const AlgebraSpec> A, std::shared_ptr<const ResolutionSpec> R)
    : A_(std::move(A)), R_(std::move(R)) {
  if (!A_ || !R_) throw Error("bimodule complex needs an algebra and a resolution");
  if (!A_->closed()) throw Error("algebra is not closed: " + *A_->closure_error());
}

int BimoduleComplex::canonical(int n) const {
  if (!R_->available(n)) throw Error("degree " + std::to_string(n) + " unavailable");
  return n > R_->top() ? (n - 1) % 4 + 1 : n;
}

std::size_t BimoduleComplex::hom_dim(int n) const {
  std::size_t d = 0;
  for (const Summand& s : R_->summands_at(n)) d += A_->block(s.left, s.right).size();
  return d;
}

std::size_t BimoduleComplex::hom_offset(int n, std::size_t g) const {
  const auto& S = R_->summands_at(n);
  std::size_t d = 0;
  for (std::size_t i = 0; i < g; ++i) d += A_->block(S[i].left, S[i].right).size();
  return d;
}

const std::vector<std::vector<BimoduleComplex::EvalTerm>>& BimoduleComplex::evaluated(int n) const {
  n = canonical(n);
  {
    std::lock_guard lk(mu_);
    if (auto it = eval_.find(n); it != eval_.end()) return it->second;
  }
  std::vector<std::vector<EvalTerm>> out;
  for (const TensorExpr& t : R_->differential(n)) {
    std::vector<EvalTerm> terms;
    for (const TensorTerm& tt : t) {
      Sparse l = to_sparse(A_->normal_form(tt.left)), r = to_sparse(A_->normal_form(tt.right));
      if (!l.empty() && !r.empty()) terms.push_back({tt.coeff, std::move(l), tt.summand, std::move(r)});
    }
    out.push_back(std::move(terms));
  }
  std::lock_guard lk(mu_);
  return eval_.emplace(n, std::move(out)).first->second;
}

const Matrix& BimoduleComplex::induced(int n) const {
  if (n < 1) throw Error("induced map needs degree >= 1");
  n = canonical(n);
  {
    std::lock_guard lk(mu_);
    if (auto it = induced_.find(n); it != induced_.end()) return it->second;
  }
  const auto& ev = evaluated(n);
  const AlgebraSpec& A = *A_;
  const auto& Sn = R_->summands_at(n);
  const auto& Sm = R_->summands_at(n - 1);
  Matrix M(A.field(), hom_dim(n), hom_dim(n - 1));
  std::vector<std::size_t> col_off(Sm.size());
  for (std::size_t t = 0; t < Sm.size(); ++t) col_off[t] = hom_offset(n - 1, t);
  std::size_t row = 0;
  for (std::size_t g = 0; g < Sn.size(); ++g) {
    const auto& rows = A.block(Sn[g].left, Sn[g].right);
    for (const EvalTerm& et : ev[g]) {
      const auto& cols = A.block(Sm[et.summand].left, Sm[et.summand].right);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<Scalar> acc(A.dim(), 0);
        Sparse lb = mul_sparse(A, et.left, single(cols[c]));
        mul_into(A, lb, et.right, et.coeff, acc);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          Scalar v = acc[rows[r]];
          if (v) M(row + r, col_off[et.summand] + c) = A.field().add(M(row + r, col_off[et.summand] + c), v);
        }
      }
    }
    row += rows.size();
  }
  std::lock_guard lk(mu_);
  return induced_.emplace(n, std::move(M)).first->second;
}

std::vector<Scalar> BimoduleComplex::cochain_from_values(int n, const std::vector<AlgElement>& values) const {
  const auto& S = R_->summands_at(n);
  if (values.size() != S.size()) throw Error("wrong number of generator values");
  std::vector<Scalar> out;
  out.reserve(hom_dim(n));
  for (std::size_t g = 0; g < S.size(); ++g) {
    const auto& blk = A_->block(S[g].left, S[g].right);
    std::vector<bool> inside(A_->dim(), false);
    for (std::size_t i : blk) {
      inside[i] = true;
      out.push_back(values[g][i]);
    }
    for (std::size_t i = 0; i < A_->dim(); ++i)
      if (values[g][i] && !inside[i])
        throw Error("value on generator " + S[g].label + " leaves e_i Lambda e_j");
  }
  return out;
}

std::vector<AlgElement> BimoduleComplex::cochain_values(int n, const std::vector<Scalar>& f) const {
  const auto& S = R_->summands_at(n);
  std::vector<AlgElement> out;
  std::size_t pos = 0;
  for (const Summand& s : S) {
    AlgElement v = A_->zero();
    for (std::size_t i : A_->block(s.left, s.right)) v[i] = f.at(pos++);
    out.push_back(std::move(v));
  }
  return out;
}

const BimoduleComplex::FullLayout& BimoduleComplex::layout(int n) const {
  n = canonical(n);
  {
    std::lock_guard lk(mu_);
    if (auto it = layout_.find(n); it != layout_.end()) return it->second;
  }
  FullLayout L;
  const auto& S = R_->summands_at(n);
  const auto& B = A_->basis();
  for (const Summand& s : S) {
    std::vector<std::size_t> lefts, rights;
    std::vector<std::size_t> lp(B.size(), SIZE_MAX), rp(B.size(), SIZE_MAX);
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (B[i].target == s.left) {
        lp[i] = lefts.size();
        lefts.push_back(i);
      }
      if (B[i].source == s.right) {
        rp[i] = rights.size();
        rights.push_back(i);
      }
    }
    L.offset.push_back(L.total);
    L.total += lefts.size() * rights.size();
    L.lefts.push_back(std::move(lefts));
    L.rights.push_back(std::move(rights));
    L.left_pos.push_back(std::move(lp));
    L.right_pos.push_back(std::move(rp));
  }
  std::lock_guard lk(mu_);
  return layout_.emplace(n, std::move(L)).first->second;
}

std::size_t BimoduleComplex::full_dim(int n) const { return n < 0 ? A_->dim() : layout(n).total; }

std::vector<Scalar> BimoduleComplex::full_from_tensor(int n, const TensorExpr& t) const {
  const FullLayout& L = layout(n);
  const Field& F = A_->field();
  std::vector<Scalar> out(L.total, 0);
  for (const TensorTerm& tt : t) {
    Sparse l = to_sparse(A_->normal_form(tt.left)), r = to_sparse(A_->normal_form(tt.right));
    std::size_t s = std::size_t(tt.summand);
    for (auto [i, x] : l)
      for (auto [j, y] : r) {
        std::size_t lp = L.left_pos[s][i], rp = L.right_pos[s][j];
        if (lp == SIZE_MAX || rp == SIZE_MAX) throw Error("tensor factor incompatible with its summand");
        std::size_t pos = L.offset[s] + lp * L.rights[s].size() + rp;
        out[pos] = F.add(out[pos], F.mul(tt.coeff, F.mul(x, y)));
      }
  }
  return out;
}

std::vector<Scalar> BimoduleComplex::apply_full(int n, const std::vector<Scalar>& x) const {
  const FullLayout& L = layout(n);
  const Field& F = A_->field();
  const AlgebraSpec& A = *A_;
  std::vector<Scalar> out(full_dim(n - 1), 0);
  const auto* ev = n >= 1 ? &evaluated(n) : nullptr;
  const FullLayout* T = n >= 1 ? &layout(n - 1) : nullptr;
  for (std::size_t s = 0; s < L.offset.size(); ++s) {
    const std::size_t nr = L.rights[s].size();
    for (std::size_t a = 0; a < L.lefts[s].size(); ++a)
      for (std::size_t b = 0; b < nr; ++b) {
        Scalar v = x[L.offset[s] + a * nr + b];
        if (!v) continue;
        std::size_t u = L.lefts[s][a], w = L.rights[s][b];
        if (n == 0) {
          for (auto [k, z] : A.product(u, w)) out[k] = F.add(out[k], F.mul(v, z));
          continue;
        }
        for (const EvalTerm& et : (*ev)[s]) {
          Sparse ul = mul_sparse(A, single(u), et.left);
          Sparse rw = mul_sparse(A, et.right, single(w));
          std::size_t t = std::size_t(et.summand);
          const std::size_t tr = T->rights[t].size();
          Scalar cv = F.mul(v, et.coeff);
          for (auto [i, p] : ul)
            for (auto [j, q] : rw) {
              std::size_t pos = T->offset[t] + T->left_pos[t][i] * tr + T->right_pos[t][j];
              out[pos] = F.add(out[pos], F.mul(cv, F.mul(p, q)));
            }
        }
      }
  }
  return out;
}

Matrix BimoduleComplex::full_differential(int n) const {
  const std::size_t cols = full_dim(n);
  Matrix M(A_->field(), full_dim(n - 1), cols);
  std::vector<Scalar> e(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    e[c] = 1;
    auto img = apply_full(n, e);
    e[c] = 0;
    for (std::size_t r = 0; r < img.size(); ++r)
      if (img[r]) M(r, c) = img[r];
  }
  return M;
}

std::vector<Scalar> BimoduleComplex::generator_image(int n, std::size_t g) const {
  return full_from_tensor(n - 1, R_->differential(n).at(g));
}

std::vector<std::size_t> BimoduleComplex::generator_positions(int n) const {
  const FullLayout& L = layout(n);
  const auto& S = R_->summands_at(n);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < S.size(); ++s) {
    std::size_t l = L.left_pos[s][A_->index_of_idempotent(S[s].left)];
    std::size_t r = L.right_pos[s][A_->index_of_idempotent(S[s].right)];
    out.push_back(L.offset[s] + l * L.rights[s].size() + r);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (Scalar x : v)
    if (x) return false;
  return true;
}

int last_degree(const ResolutionSpec& R) { return R.top(); }

// the one-sided complex (Lambda/rad) (x) Q: P^n = sum over summands of
// e_right Lambda; degree -1 is the semisimple quotient
struct OneSided {
  const BimoduleComplex& C;
  const AlgebraSpec& A;
  std::vector<std::vector<std::size_t>> from;  // vertex -> words starting there

  explicit OneSided(const BimoduleComplex& c) : C(c), A(c.algebra()) {
    from.resize(A.quiver().vertex_count());
    for (std::size_t i = 0; i < A.dim(); ++i) from[A.basis()[i].source].push_back(i);
  }

  std::vector<std::size_t> offsets(int n) const {
    std::vector<std::size_t> off;
    std::size_t d = 0;
    for (const Summand& s : C.resolution().summands_at(n)) {
      off.push_back(d);
      d += from[s.right].size();
    }
    off.push_back(d);
    return off;
  }
  std::size_t dim(int n) const {
    return n < 0 ? std::size_t(A.quiver().vertex_count()) : offsets(n).back();
  }
  std::size_t pos_in(int n, std::size_t s, std::size_t word) const {
    auto off = offsets(n);
    const auto& f = from[C.resolution().summands_at(n)[s].right];
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] == word) return off[s] + i;
    throw Error("word outside e_j Lambda");
  }

  // d^n : P^n -> P^{n-1}; only columns whose word ends at `target` when given
  Matrix differential(int n, std::optional<int> label = {}, std::optional<int> target = {}) const {
    const Field& F = A.field();
    const auto& S = C.resolution().summands_at(n);
    auto off = offsets(n);
    Matrix M(F, dim(n - 1), off.back());
    std::vector<std::vector<std::pair<Scalar, std::pair<int, Sparse>>>> imgs(S.size());
    if (n >= 1) {
      const auto& D = C.resolution().differential(n);
      for (std::size_t s = 0; s < S.size(); ++s)
        for (const TensorTerm& t : D[s]) {
          AlgElement l = A.normal_form(t.left);
          Scalar eps = l[A.index_of_idempotent(C.resolution().summands_at(n - 1)[t.summand].left)];
          if (!eps) continue;
          imgs[s].push_back({F.mul(t.coeff, eps), {t.summand, to_sparse(A.normal_form(t.right))}});
        }
    }
    for (std::size_t s = 0; s < S.size(); ++s) {
      if (label && S[s].left != *label) continue;
      const auto& f = from[S[s].right];
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t w = f[i];
        if (target && A.basis()[w].target != *target) continue;
        std::size_t col = off[s] + i;
        if (n == 0) {
          if (A.basis()[w].is_idempotent()) M(S[s].left, col) = 1;
          continue;
        }
        for (auto& [c, tr] : imgs[s]) {
          Sparse rw = mul_sparse(A, tr.second, single(w));
          for (auto [k, z] : rw) {
            std::size_t row = pos_in(n - 1, tr.first, k);
            M(row, col) = F.add(M(row, col), F.mul(c, z));
          }
        }
      }
    }
    return M;
  }
};

}  // namespace

ValidationReport check_complex(const BimoduleComplex& C, const ResolutionCheckOptions& opt) {
  ValidationReport rep;
  const ResolutionSpec& R = C.resolution();
  const int last = last_degree(R) + (R.periodic ? 1 : 0);
  for (int n = 1; n <= last; ++n) {
    bool ok = true;
    std::string detail;
    for (std::size_t g = 0; g < R.summands_at(n).size(); ++g) {
      auto img = C.generator_image(n, g);
      if (!all_zero(C.apply_full(n - 1, img))) {
        ok = false;
        detail = "generator " + R.summands_at(n)[g].label + " does not map to zero";
        break;
      }
    }
    rep.checks.push_back({"d" + std::to_string(n - 1) + "*d" + std::to_string(n) + " on generators", ok, detail});
  }
  for (int n = 2; n <= last; ++n) {
    Matrix P = C.induced(n) * C.induced(n - 1);
    rep.checks.push_back({"induced maps compose to zero at " + std::to_string(n), P.is_zero(), ""});
  }
  if (C.algebra().dim() <= opt.full_limit) {
    for (int n = 1; n <= last; ++n) {
      Matrix P = C.full_differential(n - 1) * C.full_differential(n);
      rep.checks.push_back({"d" + std::to_string(n - 1) + "*d" + std::to_string(n) + " as full maps", P.is_zero(), ""});
    }
  } else {
    std::mt19937_64 rng(7);
    const Field& F = C.algebra().field();
    for (int n = 1; n <= last; ++n) {
      bool ok = true;
      const std::size_t dn = C.full_dim(n);
      for (int probe = 0; probe < 10000 && ok; ++probe) {
        std::vector<Scalar> x(dn, 0);
        for (int t = 0; t < 3; ++t) x[rng() % dn] = Scalar(1 + rng() % (F.order() - 1));
        ok = all_zero(C.apply_full(n - 1, C.apply_full(n, x)));
      }
      rep.checks.push_back({"d" + std::to_string(n - 1) + "*d" + std::to_string(n) + " on random elements", ok, ""});
    }
  }
  return rep;
}

ValidationReport check_exactness(const BimoduleComplex& C, const ResolutionCheckOptions& opt) {
  ValidationReport rep;
  const ResolutionSpec& R = C.resolution();
  const AlgebraSpec& A = C.algebra();
  const int top = R.top();
  OneSided P(C);
  std::vector<std::size_t> rk(top + 1);
  for (int n = 0; n <= top; ++n) rk[n] = rank(P.differential(n));
  rep.checks.push_back({"one-sided augmentation onto the simples", rk[0] == P.dim(-1),
                        "rank " + std::to_string(rk[0])});
  for (int n = 0; n < top; ++n) {
    std::size_t ker = P.dim(n) - rk[n];
    rep.checks.push_back({"one-sided exact at degree " + std::to_string(n), ker == rk[n + 1],
                          "ker " + std::to_string(ker) + ", im " + std::to_string(rk[n + 1])});
  }
  const int nv = A.quiver().vertex_count();
  for (int n = 0; n <= top; ++n) {
    auto ext = ext_between_simples(C, n);
    std::vector<std::vector<std::size_t>> count(nv, std::vector<std::size_t>(nv, 0));
    for (const Summand& s : R.summands_at(n)) ++count[s.left][s.right];
    std::string detail;
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        if (count[i][j] != ext[i][j])
          detail += "(" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(count[i][j]) +
                    " summands, Ext " + std::to_string(ext[i][j]) + " ";
    rep.checks.push_back({"summands match Ext^" + std::to_string(n) + " between simples", detail.empty(), detail});
  }
  if (A.dim() <= opt.full_limit) {
    std::vector<std::size_t> fr(top + 1);
    for (int n = 0; n <= top; ++n) fr[n] = rank(C.full_differential(n));
    rep.checks.push_back({"multiplication onto the algebra", fr[0] == A.dim(), ""});
    for (int n = 0; n < top; ++n) {
      std::size_t ker = C.full_dim(n) - fr[n];
      rep.checks.push_back({"bimodule exact at degree " + std::to_string(n), ker == fr[n + 1],
                            "ker " + std::to_string(ker) + ", im " + std::to_string(fr[n + 1])});
    }
    if (R.periodic) rep.checks.push_back({"periodic map injective on the algebra", fr[top] == A.dim(), ""});
  } else {
    // Hom side: dim ker(?d1) must be the centre
    std::size_t k1 = C.hom_dim(0) - rank(C.induced(1));
    rep.checks.push_back({"ker of the first induced map is the centre", k1 == center(A).dim(), ""});
  }
  return rep;
}

ValidationReport check_minimality(const BimoduleComplex& C) {
  ValidationReport rep;
  const ResolutionSpec& R = C.resolution();
  const int last = R.top();
  for (int n = 1; n <= last; ++n) {
    auto pos = C.generator_positions(n - 1);
    bool ok = true;
    for (std::size_t g = 0; g < R.summands_at(n).size() && ok; ++g) {
      auto img = C.generator_image(n, g);
      for (std::size_t p : pos)
        if (img[p]) ok = false;
    }
    rep.checks.push_back({"image of d" + std::to_string(n) + " in the radical", ok, ""});
  }
  return rep;
}

std::vector<std::vector<std::size_t>> ext_between_simples(const BimoduleComplex& C, int n) {
  const AlgebraSpec& A = C.algebra();
  const int nv = A.quiver().vertex_count();
  std::vector<std::vector<std::size_t>> out(nv, std::vector<std::size_t>(nv, 0));
  if (n == 0) {
    for (int i = 0; i < nv; ++i) out[i][i] = 1;
    return out;
  }
  if (n > C.resolution().top()) throw Error("Ext degree beyond the resolution");
  // top of the n-th syzygy of S_i: ker d^{n-1} modulo its radical
  OneSided P(C);
  const Field& F = A.field();
  auto off = P.offsets(n - 1);
  const auto& S = C.resolution().summands_at(n - 1);
  for (int i = 0; i < nv; ++i) {
    std::vector<Subspace> K;
    for (int j = 0; j < nv; ++j) {
      // kernel on the columns of label i ending at j, written back in P^{n-1}
      Matrix D = P.differential(n - 1, i, j);
      std::vector<std::size_t> cols;
      for (std::size_t s = 0; s < S.size(); ++s) {
        if (S[s].left != i) continue;
        for (std::size_t x = off[s]; x < off[s + 1]; ++x)
          if (A.basis()[P.from[S[s].right][x - off[s]]].target == j) cols.push_back(x);
      }
      Matrix sub(F, D.rows(), cols.size());
      for (std::size_t r = 0; r < D.rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = D(r, cols[c]);
      Subspace ks = kernel_basis(sub);
      std::vector<std::vector<Scalar>> vs;
      for (std::size_t b = 0; b < ks.dim(); ++b) {
        std::vector<Scalar> v(D.cols(), 0);
        for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = ks.basis()(b, c);
        vs.push_back(std::move(v));
      }
      K.push_back(Subspace::span(F, D.cols(), vs));
    }
    for (int j = 0; j < nv; ++j) {
      // K rad at j: images of k*a for arrows a ending at j
      std::vector<std::vector<Scalar>> rad;
      for (int a = 0; a < A.quiver().arrow_count(); ++a) {
        const Arrow& ar = A.quiver().arrows()[a];
        if (ar.target != j) continue;
        Sparse aw = to_sparse(A.normal_form(arrow_word(A.quiver(), a)));
        const Subspace& Kj = K[ar.source];
        for (std::size_t b = 0; b < Kj.dim(); ++b) {
          auto v = Kj.vector(b);
          std::vector<Scalar> img(v.size(), 0);
          for (std::size_t s = 0; s < S.size(); ++s)
            for (std::size_t x = off[s]; x < off[s + 1]; ++x) {
              if (!v[x]) continue;
              std::size_t w = P.from[S[s].right][x - off[s]];
              for (auto [k, z] : mul_sparse(A, single(w), aw)) {
                std::size_t pos = P.pos_in(n - 1, s, k);
                img[pos] = F.add(img[pos], F.mul(v[x], z));
              }
            }
          rad.push_back(std::move(img));
        }
      }
      Subspace Rj = Subspace::span(F, K[j].ambient_dim(), rad);
      out[i][j] = K[j].dim() - Rj.dim();
    }
  }
  return out;
}

}  // namespace hhlie
