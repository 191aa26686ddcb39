#include "hhlie/lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hhlie {

namespace {

// matrix of x -> xi(f)(x) on Lambda: column i is xi(f)(b_i)
Matrix xi_matrix(const AlgebraSpec& A, const std::vector<AlgElement>& f) {
  Matrix M(A.field(), A.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const PathWord& w = A.basis()[i];
    if (w.is_idempotent()) continue;
    AlgElement v = xi_extend(A, f, w);
    for (std::size_t r = 0; r < A.dim(); ++r) M(r, i) = v[r];
  }
  return M;
}

std::vector<Scalar> bracket_from_xi(const BimoduleComplex& C, const Matrix& xf, const Matrix& xg,
                                    const std::vector<AlgElement>& fv,
                                    const std::vector<AlgElement>& gv) {
  const Field& F = C.algebra().field();
  std::vector<AlgElement> out;
  for (std::size_t a = 0; a < fv.size(); ++a) {
    AlgElement v = xf.apply(gv[a]);
    AlgElement u = xg.apply(fv[a]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], u[i]);
    out.push_back(std::move(v));
  }
  return C.cochain_from_values(1, out);
}

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

// x with M x = 0 for all stacked blocks
Subspace common_kernel(const Field& F, std::size_t n, const std::vector<Matrix>& maps) {
  Matrix big(F, 0, n);
  for (const Matrix& M : maps)
    for (std::size_t r = 0; r < M.rows(); ++r) big.append_row(M.row(r));
  return kernel_basis(big);
}

bool invertible(const Matrix& M) { return M.rows() == M.cols() && rank(M) == M.rows(); }

}  // namespace

AlgElement xi_extend(const AlgebraSpec& A, const std::vector<AlgElement>& f, const PathWord& w) {
  const Quiver& Q = A.quiver();
  AlgElement acc = A.zero();
  const Field& F = A.field();
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int a = int(w.letters[i]);
    AlgElement term = f.at(a);
    if (i > 0) {
      PathWord pre{w.source, Q.arrows()[int(w.letters[i - 1])].target, w.letters.substr(0, i)};
      term = A.multiply(A.evaluate_letters(pre), term);
    }
    if (i + 1 < w.letters.size()) {
      PathWord suf{Q.arrows()[a].target, w.target, w.letters.substr(i + 1)};
      term = A.multiply(term, A.evaluate_letters(suf));
    }
    F.axpy(acc, 1, term);
  }
  return acc;
}

std::vector<Scalar> cochain_bracket(const BimoduleComplex& C, std::span<const Scalar> f,
                                    std::span<const Scalar> g) {
  std::vector<Scalar> fc(f.begin(), f.end()), gc(g.begin(), g.end());
  auto fv = C.cochain_values(1, fc), gv = C.cochain_values(1, gc);
  const AlgebraSpec& A = C.algebra();
  return bracket_from_xi(C, xi_matrix(A, fv), xi_matrix(A, gv), fv, gv);
}

std::vector<Scalar> class_bracket(const CohomologySpace& H, std::span<const Scalar> x,
                                  std::span<const Scalar> y) {
  if (H.degree != 1) throw Error("brackets live on HH^1");
  auto f = H.representative(x), g = H.representative(y);
  return H.class_coords(cochain_bracket(*H.complex, f, g));
}

LieAlgebra::LieAlgebra(const Field& F, std::size_t dim)
    : field_(&F), dim_(dim), table_(dim * dim, std::vector<Scalar>(dim, 0)) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::vector<Scalar> v) {
  std::vector<Scalar> neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = field_->neg(v[k]);
  table_[i * dim_ + j] = std::move(v);
  table_[j * dim_ + i] = std::move(neg);
}

std::vector<Scalar> LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const Field& F = *field_;
  std::vector<Scalar> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      F.axpy(out, F.mul(x[i], y[j]), table_[i * dim_ + j]);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const {
  Matrix M(*field_, dim_, dim_);
  std::vector<Scalar> e(dim_, 0);
  for (std::size_t j = 0; j < dim_; ++j) {
    e[j] = 1;
    auto v = bracket(x, e);
    e[j] = 0;
    for (std::size_t i = 0; i < dim_; ++i) M(i, j) = v[i];
  }
  return M;
}

ValidationReport LieAlgebra::check() const {
  ValidationReport rep;
  const Field& F = *field_;
  bool anti = true;
  for (std::size_t i = 0; i < dim_ && anti; ++i)
    for (std::size_t j = 0; j < dim_ && anti; ++j) {
      const auto &a = table_[i * dim_ + j], &b = table_[j * dim_ + i];
      for (std::size_t k = 0; k < dim_; ++k)
        if (F.add(a[k], b[k]) != 0 || (i == j && a[k] != 0)) anti = false;
    }
  rep.checks.push_back({"antisymmetric", anti, ""});
  bool jac = true;
  std::string where;
  auto unit = [&](std::size_t i) {
    std::vector<Scalar> e(dim_, 0);
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < dim_ && jac; ++i)
    for (std::size_t j = i + 1; j < dim_ && jac; ++j)
      for (std::size_t k = j + 1; k < dim_ && jac; ++k) {
        auto x = unit(i), y = unit(j), z = unit(k);
        auto s = bracket(x, bracket(y, z));
        F.axpy(s, 1, bracket(y, bracket(z, x)));
        F.axpy(s, 1, bracket(z, bracket(x, y)));
        if (std::any_of(s.begin(), s.end(), [](Scalar v) { return v != 0; })) {
          jac = false;
          where = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        }
      }
  rep.checks.push_back({"Jacobi identity on basis triples", jac, where});
  return rep;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& P) const {
  if (!invertible(P) || P.rows() != dim_) throw Error("change of basis must be invertible");
  LieAlgebra out(*field_, dim_);
  std::vector<std::vector<Scalar>> cols(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols[j] = P.column(j);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      auto v = bracket(cols[i], cols[j]);
      auto x = solve(P, v);
      out.set_bracket(i, j, *x);
    }
  return out;
}

LieAlgebra LieAlgebra::quotient(const Subspace& ideal) const {
  QuotientSection q(ideal, Subspace::whole(*field_, dim_));
  LieAlgebra out(*field_, q.dim());
  const Subspace& comp = q.complement();
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i + 1; j < q.dim(); ++j)
      out.set_bracket(i, j, q.class_coords(bracket(comp.vector(i), comp.vector(j))));
  return out;
}

std::string LieAlgebra::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  j["field"] = field_->name();
  auto consts = nlohmann::json::array();
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b)
      for (std::size_t k = 0; k < dim_; ++k)
        if (Scalar c = table_[a * dim_ + b][k]) consts.push_back({a, b, k, c});
  j["constants"] = consts;
  return j.dump();
}

LieAlgebra LieAlgebra::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const Field& F = Field::parse(j.at("field").get<std::string>());
  std::size_t n = j.at("dim").get<std::size_t>();
  LieAlgebra L(F, n);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> acc;
  for (const auto& e : j.at("constants")) {
    std::size_t a = e.at(0), b = e.at(1), k = e.at(2);
    unsigned c = e.at(3);
    if (a >= n || b >= n || k >= n || c >= F.order() || a == b) throw Error("bad structure constant");
    auto& v = acc[{std::min(a, b), std::max(a, b)}];
    v.resize(n, 0);
    v[k] = F.add(v[k], a < b ? Scalar(c) : F.neg(Scalar(c)));
  }
  for (auto& [ab, v] : acc) L.set_bracket(ab.first, ab.second, v);
  return L;
}

LieAlgebra hh1_lie(const CohomologySpace& H) {
  if (H.degree != 1) throw Error("brackets live on HH^1");
  const BimoduleComplex& C = *H.complex;
  const AlgebraSpec& A = C.algebra();
  const std::size_t n = H.dim();
  std::vector<std::vector<AlgElement>> vals(n);
  std::vector<Matrix> xis;
  std::vector<Scalar> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = 1;
    vals[i] = C.cochain_values(1, H.representative(e));
    e[i] = 0;
    xis.push_back(xi_matrix(A, vals[i]));
  }
  LieAlgebra L(A.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      L.set_bracket(i, j, H.class_coords(bracket_from_xi(C, xis[i], xis[j], vals[i], vals[j])));
  return L;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<std::vector<Scalar>> vs;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) vs.push_back(L.bracket(A.vector(i), B.vector(j)));
  return Subspace::span(L.field(), L.dim(), vs);
}

Subspace lower_central(const LieAlgebra& L, std::size_t i) {
  Subspace whole = Subspace::whole(L.field(), L.dim());
  Subspace cur = whole;
  for (std::size_t s = 0; s < i; ++s) {
    Subspace next = bracket_span(L, whole, cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Subspace derived(const LieAlgebra& L, std::size_t i) {
  Subspace cur = Subspace::whole(L.field(), L.dim());
  for (std::size_t s = 0; s < i; ++s) {
    Subspace next = bracket_span(L, cur, cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Subspace lie_center(const LieAlgebra& L) {
  std::vector<Matrix> maps;
  std::vector<Scalar> e(L.dim(), 0);
  for (std::size_t j = 0; j < L.dim(); ++j) {
    e[j] = 1;
    maps.push_back(L.ad(e));
    e[j] = 0;
  }
  return common_kernel(L.field(), L.dim(), maps);
}

bool is_nilpotent(const LieAlgebra& L, const Subspace& sub) {
  Subspace cur = sub;
  for (std::size_t s = 0; s <= L.dim() + 1; ++s) {
    if (cur.dim() == 0) return true;
    Subspace next = bracket_span(L, sub, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return cur.dim() == 0;
}

bool is_nilpotent(const LieAlgebra& L) { return is_nilpotent(L, Subspace::whole(L.field(), L.dim())); }

Subspace ideal_generated(const LieAlgebra& L, const Subspace& gens) {
  Subspace whole = Subspace::whole(L.field(), L.dim());
  Subspace cur = gens;
  while (true) {
    Subspace next = cur.sum(bracket_span(L, whole, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Matrix killing_form(const LieAlgebra& L) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  std::vector<Scalar> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = 1;
    ads.push_back(L.ad(e));
    e[i] = 0;
  }
  Matrix K(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix P = ads[i] * ads[j];
      Scalar t = 0;
      for (std::size_t r = 0; r < n; ++r) t = F.add(t, P(r, r));
      K(i, j) = K(j, i) = t;
    }
  return K;
}

std::size_t killing_rank(const LieAlgebra& L) { return rank(killing_form(L)); }

namespace {

bool ad_nilpotent(const LieAlgebra& L, std::span<const Scalar> x) {
  Matrix A = L.ad(x), P = A;
  for (std::size_t i = 1; i < L.dim(); ++i) P = P * A;
  return L.dim() == 0 || P.is_zero();
}

Subspace with_vector(const Subspace& S, std::span<const Scalar> v) {
  Matrix rows = S.basis();
  rows.append_row(v);
  return Subspace::span(std::move(rows));
}

// advance a coordinate vector over GF(q)^n with leading nonzero entry 1;
// false when exhausted
bool next_projective(std::vector<Scalar>& v, unsigned q) {
  const std::size_t n = v.size();
  std::size_t lead = 0;
  while (lead < n && v[lead] == 0) ++lead;
  for (std::size_t i = n; i-- > lead + 1;) {
    if (v[i] + 1u < q) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  // move the leading 1 one step left
  if (lead == 0) return false;
  v[lead] = 0;
  v[lead - 1] = 1;
  return true;
}

}  // namespace

Nilradical nilradical(const LieAlgebra& L, std::size_t budget) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  Nilradical out;
  Subspace whole = Subspace::whole(F, n);
  if (is_nilpotent(L)) {
    out.ideal = whole;
    out.method = "nilpotent";
    return out;
  }
  // greedy over ad-nilpotent basis vectors
  Subspace N(F, n);
  std::vector<Scalar> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = 1;
    if (!N.contains(e) && ad_nilpotent(L, e)) {
      Subspace cand = ideal_generated(L, with_vector(N, e));
      if (is_nilpotent(L, cand)) N = std::move(cand);
    }
    e[i] = 0;
  }
  // exhaustive extension over the complement; any hit enlarges N
  while (true) {
    QuotientSection q(N, whole);
    const std::size_t codim = q.dim();
    double count = 1;
    for (std::size_t i = 0; i < codim; ++i) count *= F.order();
    if (count > double(budget)) {
      out.method = "undetermined: " + std::to_string(codim) + "-dimensional complement over " + F.name();
      return out;
    }
    bool grown = false;
    std::vector<Scalar> c(codim, 0);
    if (codim > 0) c[codim - 1] = 1;
    do {
      if (codim == 0) break;
      ++out.candidates_checked;
      auto u = q.representative(c);
      Subspace cand = ideal_generated(L, with_vector(N, u));
      if (is_nilpotent(L, cand)) {
        N = std::move(cand);
        grown = true;
        break;
      }
    } while (next_projective(c, F.order()));
    if (!grown) break;
  }
  out.ideal = N;
  out.method = "certified by exhaustive extension";
  return out;
}

std::size_t gen_derivations(const LieAlgebra& L, Scalar lambda, Scalar mu, Scalar nu) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  // unknown a_{ij}: coefficient of b_i in D(b_j), column i*n + j
  Matrix M(F, 0, n * n);
  std::vector<Scalar> row(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        std::fill(row.begin(), row.end(), 0);
        const auto& pq = L.bracket_basis(p, q);
        for (std::size_t k = 0; k < n; ++k)
          if (pq[k]) row[r * n + k] = F.add(row[r * n + k], F.mul(lambda, pq[k]));
        for (std::size_t i = 0; i < n; ++i) {
          Scalar c1 = L.bracket_basis(i, q)[r];
          if (c1) row[i * n + p] = F.sub(row[i * n + p], F.mul(mu, c1));
          Scalar c2 = L.bracket_basis(p, i)[r];
          if (c2) row[i * n + q] = F.sub(row[i * n + q], F.mul(nu, c2));
        }
        if (std::any_of(row.begin(), row.end(), [](Scalar v) { return v != 0; })) M.append_row(row);
      }
  return n * n - rank(std::move(M));
}

std::string Fingerprint::to_text(const Field& F) const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  os << "dim " << dim << "\n";
  os << "lower central " << list(lower_central) << "\n";
  os << "derived " << list(derived) << "\n";
  os << "centre " << center << "\n";
  os << "killing rank " << killing_rank << "\n";
  os << "nilpotent " << (nilpotent ? "yes" : "no") << "\n";
  os << "nilradical " << (nilradical ? std::to_string(*nilradical) : "undetermined") << "\n";
  for (auto [rho, d] : der) os << "der(" << F.format(rho) << ",1,1) " << d << "\n";
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra& L, const std::vector<Scalar>& probes) {
  Fingerprint fp;
  fp.dim = L.dim();
  Subspace whole = Subspace::whole(L.field(), L.dim());
  Subspace cur = whole;
  while (true) {
    Subspace next = bracket_span(L, whole, cur);
    fp.lower_central.push_back(next.dim());
    if (next == cur) break;
    cur = std::move(next);
  }
  cur = whole;
  while (true) {
    Subspace next = bracket_span(L, cur, cur);
    fp.derived.push_back(next.dim());
    if (next == cur) break;
    cur = std::move(next);
  }
  fp.center = lie_center(L).dim();
  fp.killing_rank = killing_rank(L);
  fp.nilpotent = fp.lower_central.back() == 0;
  auto nr = nilradical(L);
  if (nr.ideal) fp.nilradical = nr.ideal->dim();
  for (Scalar rho : probes) fp.der.emplace_back(rho, gen_derivations(L, rho, 1, 1));
  return fp;
}

std::string distinguish(const Fingerprint& a, const Fingerprint& b, const Field& F) {
  auto verdict = [](const std::string& what, const std::string& x, const std::string& y) {
    return "distinguished by " + what + " (" + x + " vs " + y + ")";
  };
  auto num = [](std::size_t v) { return std::to_string(v); };
  if (a.dim != b.dim) return verdict("dim HH¹", num(a.dim), num(b.dim));
  // series are padded with their stable value
  auto at = [](const std::vector<std::size_t>& v, std::size_t i) { return v[std::min(i, v.size() - 1)]; };
  std::size_t len = std::max(a.lower_central.size(), b.lower_central.size());
  for (std::size_t i = 0; i < len; ++i)
    if (at(a.lower_central, i) != at(b.lower_central, i))
      return verdict("dim L" + superscript(i + 1), num(at(a.lower_central, i)), num(at(b.lower_central, i)));
  len = std::max(a.derived.size(), b.derived.size());
  for (std::size_t i = 0; i < len; ++i)
    if (at(a.derived, i) != at(b.derived, i))
      return verdict("dim D" + superscript(i + 1), num(at(a.derived, i)), num(at(b.derived, i)));
  if (a.center != b.center) return verdict("centre dim", num(a.center), num(b.center));
  if (a.killing_rank != b.killing_rank) return verdict("Killing rank", num(a.killing_rank), num(b.killing_rank));
  if (a.nilpotent != b.nilpotent)
    return verdict("nilpotency", a.nilpotent ? "yes" : "no", b.nilpotent ? "yes" : "no");
  if (a.nilradical && b.nilradical && *a.nilradical != *b.nilradical)
    return verdict("nilradical dim", num(*a.nilradical), num(*b.nilradical));
  for (auto [rho, d] : a.der)
    for (auto [rho2, d2] : b.der)
      if (rho == rho2 && d != d2) return verdict("dim der(" + F.format(rho) + ",1,1)", num(d), num(d2));
  return "inconclusive";
}

std::string distinguish(const LieAlgebra& a, const LieAlgebra& b, const std::vector<Scalar>& probes) {
  if (&a.field() != &b.field()) throw Error("distinguish needs a common field");
  return distinguish(fingerprint(a, probes), fingerprint(b, probes), a.field());
}

bool verify_iso(const LieAlgebra& L1, const LieAlgebra& L2, const Matrix& map) {
  const std::size_t n = L1.dim();
  if (L2.dim() != n || map.rows() != n || map.cols() != n || !invertible(map)) return false;
  std::vector<std::vector<Scalar>> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = map.column(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (map.apply(L1.bracket_basis(i, j)) != L2.bracket(img[i], img[j])) return false;
  return true;
}

LieAlgebra g_lambda(const Field& F, int k, int s, Scalar lambda) {
  LieAlgebra L(F, 6);
  Scalar nu[5] = {F.from_int(s), F.from_int(2 * s), F.from_int(k), F.from_int(2 * k), lambda};
  for (std::size_t i = 1; i <= 5; ++i) {
    std::vector<Scalar> v(6, 0);
    v[i] = nu[i - 1];
    L.set_bracket(0, i, v);
  }
  return L;
}

std::vector<Scalar> e_set(const Field& F, int k, int s, Scalar lambda) {
  std::set<Scalar> out;
  if (lambda == 0) return {};
  Scalar li = F.inv(lambda);
  for (long long m : {(long long)s, 2LL * s, (long long)k, 2LL * k}) {
    Scalar v = F.mul(F.from_int(m), li);
    if (v == 0) continue;
    out.insert(v);
    out.insert(F.inv(v));
  }
  return {out.begin(), out.end()};
}

std::vector<Scalar> default_probes(const FamilyParams& p, const Field& F) {
  std::set<Scalar> out{1};
  if ((p.family == Family::SD2B1 || p.family == Family::SD2B2) && F.characteristic() > 3) {
    long long k = p.k, s = p.s;
    Scalar lam = F.from_int(2 * k * s - k - s);
    Scalar mu = F.div(F.from_int(2 * k * s), F.from_int(3));
    for (Scalar v : e_set(F, p.k, p.s, lam)) out.insert(v);
    for (Scalar v : e_set(F, p.k, p.s, mu)) out.insert(v);
  }
  return {out.begin(), out.end()};
}

}  // namespace hhlie
