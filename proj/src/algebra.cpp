#include "hhlie/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hhlie {

int Quiver::add_vertex(std::string label) {
  if (find_vertex(label)) throw Error("duplicate vertex '" + label + "'");
  vertices_.push_back(std::move(label));
  return int(vertices_.size()) - 1;
}

int Quiver::add_arrow(std::string name, int source, int target) {
  if (find_arrow(name)) throw Error("duplicate arrow '" + name + "'");
  if (source < 0 || target < 0 || source >= vertex_count() || target >= vertex_count())
    throw Error("arrow '" + name + "' has an unknown endpoint");
  if (arrows_.size() >= 200) throw Error("too many arrows");
  arrows_.push_back({std::move(name), source, target});
  return int(arrows_.size()) - 1;
}

std::optional<int> Quiver::find_vertex(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return int(i);
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return int(i);
  return std::nullopt;
}

PathWord idempotent(int vertex) { return {vertex, vertex, {}}; }

PathWord arrow_word(const Quiver& Q, int a) {
  const auto& ar = Q.arrows().at(std::size_t(a));
  return {ar.source, ar.target, std::string(1, char(a))};
}

PathWord word_from_names(const Quiver& Q, const std::vector<std::string>& names) {
  if (names.empty()) throw Error("empty word needs a vertex");
  std::optional<PathWord> w;
  for (auto& n : names) {
    auto a = Q.find_arrow(n);
    if (!a) throw Error("unknown arrow '" + n + "'");
    auto aw = arrow_word(Q, *a);
    w = w ? concat(*w, aw) : aw;
    if (!w) throw Error("word is not a path");
  }
  return *w;
}

std::optional<PathWord> concat(const PathWord& u, const PathWord& v) {
  if (u.target != v.source) return std::nullopt;
  return PathWord{u.source, v.target, u.letters + v.letters};
}

std::string to_string(const Quiver& Q, const PathWord& w) {
  if (w.is_idempotent()) return "e_" + Q.vertices()[std::size_t(w.source)];
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '*';
    out += Q.arrows()[std::size_t((unsigned char)w.letters[i])].name;
  }
  return out;
}

bool word_less(const PathWord& a, const PathWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  return a.letters < b.letters;
}

void PathExpr::add(const Field& F, Scalar c, const PathWord& w) {
  if (c == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->word == w) {
      it->coeff = F.add(it->coeff, c);
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({c, w});
}

void PathExpr::add(const Field& F, Scalar c, const PathExpr& e) {
  for (auto& t : e.terms_) add(F, F.mul(c, t.coeff), t.word);
}

PathExpr PathExpr::scaled(const Field& F, Scalar c) const {
  PathExpr out;
  out.add(F, c, *this);
  return out;
}

PathExpr PathExpr::times(const Field& F, const PathExpr& o) const {
  PathExpr out;
  for (auto& a : terms_)
    for (auto& b : o.terms_)
      if (auto w = concat(a.word, b.word)) out.add(F, F.mul(a.coeff, b.coeff), *w);
  return out;
}

RewriteRule orient(const Field& F, const PathExpr& relation) {
  if (relation.empty()) throw Error("relation is zero");
  const auto& lead = relation.terms().front();
  if (lead.word.is_idempotent()) throw Error("relation leads with an idempotent");
  RewriteRule r{lead.word, {}};
  Scalar s = F.neg(F.inv(lead.coeff));
  for (std::size_t i = 1; i < relation.terms().size(); ++i) {
    const auto& t = relation.terms()[i];
    if (t.word.source != lead.word.source || t.word.target != lead.word.target)
      throw Error("relation mixes paths with different endpoints");
    r.rhs.push_back({F.mul(s, t.coeff), t.word});
  }
  return r;
}

// ---------------------------------------------------------------------------

AlgebraSpec::AlgebraSpec(AlgebraInput in)
    : field_(in.field),
      name_(std::move(in.name)),
      quiver_(std::move(in.quiver)),
      relations_(std::move(in.relations)),
      rules_(std::move(in.rules)),
      nilpotency_(in.nilpotency),
      socle_(std::move(in.socle)),
      expected_dim_(in.expected_dim) {
  if (!field_) throw Error("algebra without a field");
  if (quiver_.vertex_count() == 0) throw Error("quiver has no vertices");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.lhs.is_idempotent()) throw Error("rule with an idempotent left side");
    for (auto& t : r.rhs)
      if (t.word.source != r.lhs.source || t.word.target != r.lhs.target)
        throw Error("rule right side has wrong endpoints");
    (r.is_zero() ? zero_rules_ : other_rules_).push_back(i);
  }
  if (in.basis) {
    basis_ = std::move(*in.basis);
  } else {
    enumerate_basis();
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i].key(), i).second)
      throw Error("duplicate basis word " + to_string(quiver_, basis_[i]));
  }
  for (int v = 0; v < quiver_.vertex_count(); ++v)
    if (!index_.count(idempotent(v).key())) throw Error("basis lacks an idempotent");
  std::size_t longest = 0;
  for (auto& w : basis_) longest = std::max(longest, w.length());
  cap_ = 2 * longest + 2;
  const std::size_t nv = std::size_t(quiver_.vertex_count());
  blocks_.assign(nv * nv, {});
  for (std::size_t i = 0; i < basis_.size(); ++i)
    blocks_[std::size_t(basis_[i].source) * nv + std::size_t(basis_[i].target)].push_back(i);
  build_table();
}

bool AlgebraSpec::is_irreducible(const PathWord& w) const {
  if (nilpotency_ && int(w.length()) >= *nilpotency_) return false;
  for (auto& r : rules_)
    if (w.letters.find(r.lhs.letters) != std::string::npos) return false;
  return true;
}

void AlgebraSpec::enumerate_basis() {
  std::vector<PathWord> level;
  for (int v = 0; v < quiver_.vertex_count(); ++v) level.push_back(idempotent(v));
  std::size_t len = 0;
  while (!level.empty()) {
    basis_.insert(basis_.end(), level.begin(), level.end());
    if (++len > 200) throw NonTermination("basis enumeration does not stop; add a nilpotency bound");
    std::vector<PathWord> next;
    for (auto& w : level)
      for (int a = 0; a < quiver_.arrow_count(); ++a)
        if (quiver_.arrows()[std::size_t(a)].source == w.target) {
          auto x = *concat(w, arrow_word(quiver_, a));
          if (is_irreducible(x)) next.push_back(std::move(x));
        }
    std::sort(next.begin(), next.end(), word_less);
    level = std::move(next);
  }
}

void AlgebraSpec::build_table() {
  const std::size_t n = dim();
  table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto w = concat(basis_[i], basis_[j]);
      if (!w) continue;
      try {
        auto v = normal_form(*w);
        auto& e = table_[i * n + j];
        for (std::size_t k = 0; k < n; ++k)
          if (v[k]) e.push_back({k, v[k]});
      } catch (const Error& ex) {
        if (!closure_error_)
          closure_error_ = to_string(quiver_, basis_[i]) + " * " + to_string(quiver_, basis_[j]) + ": " + ex.what();
      }
    }
}

std::optional<std::size_t> AlgebraSpec::index_of(const PathWord& w) const {
  auto it = index_.find(w.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> AlgebraSpec::index_of_arrow(int a) const {
  return index_of(arrow_word(quiver_, a));
}

const std::vector<std::pair<std::size_t, Scalar>>& AlgebraSpec::product(std::size_t i, std::size_t j) const {
  if (closure_error_) throw Error("algebra is not closed: " + *closure_error_);
  return table_[i * dim() + j];
}

AlgElement AlgebraSpec::unit() const {
  AlgElement u = zero();
  for (int v = 0; v < quiver_.vertex_count(); ++v) u[index_of_idempotent(v)] = 1;
  return u;
}

AlgElement AlgebraSpec::basis_element(std::size_t i) const {
  AlgElement e = zero();
  e.at(i) = 1;
  return e;
}

AlgElement AlgebraSpec::multiply(const AlgElement& a, const AlgElement& b) const {
  const Field& F = *field_;
  const std::size_t n = dim();
  AlgElement out(n, 0);
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < n; ++j)
    if (b[j]) nb.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j : nb) {
      Scalar c = F.mul(a[i], b[j]);
      for (auto& [k, v] : product(i, j)) out[k] = F.add(out[k], F.mul(c, v));
    }
  }
  return out;
}

AlgElement AlgebraSpec::evaluate_letters(const PathWord& w) const {
  AlgElement r = basis_element(index_of_idempotent(w.source));
  for (char c : w.letters) r = multiply(r, normal_form(arrow_word(quiver_, (unsigned char)c)));
  return r;
}

AlgElement AlgebraSpec::evaluate_letters(const PathExpr& e) const {
  AlgElement r = zero();
  for (auto& t : e.terms()) field_->axpy(r, t.coeff, evaluate_letters(t.word));
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> AlgebraSpec::find_redex(const PathWord& w, Strategy s,
                                                                           std::mt19937_64* rng) const {
  if (s == Strategy::Random && rng) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const auto& l = rules_[r].lhs.letters;
      for (auto p = w.letters.find(l); p != std::string::npos; p = w.letters.find(l, p + 1)) all.push_back({r, p});
    }
    if (all.empty()) return std::nullopt;
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(*rng)];
  }
  for (std::size_t r : zero_rules_) {
    auto p = w.letters.find(rules_[r].lhs.letters);
    if (p != std::string::npos) return std::pair{r, p};
  }
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t r : other_rules_) {
    auto p = w.letters.find(rules_[r].lhs.letters);
    if (p != std::string::npos && (!best || p < best->second)) best = std::pair{r, p};
  }
  return best;
}

AlgElement AlgebraSpec::normal_form(const PathWord& w, Strategy s, std::mt19937_64* rng) const {
  PathExpr e(w);
  return normal_form(e, s, rng);
}

AlgElement AlgebraSpec::normal_form(const PathExpr& e, Strategy s, std::mt19937_64* rng) const {
  const Field& F = *field_;
  AlgElement out(dim(), 0);
  std::map<std::string, std::pair<PathWord, Scalar>> pending;
  auto push = [&](const PathWord& w, Scalar c) {
    if (!c) return;
    auto [it, fresh] = pending.try_emplace(w.key(), w, c);
    if (!fresh) {
      it->second.second = F.add(it->second.second, c);
      if (!it->second.second) pending.erase(it);
    }
  };
  // long inputs may still reduce, so the guard grows with them
  std::size_t limit = cap_;
  for (auto& t : e.terms()) {
    push(t.word, t.coeff);
    limit = std::max(limit, cap_ + t.word.length());
  }
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    if (s == Strategy::Random && rng)
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*rng));
    auto [w, c] = it->second;
    pending.erase(it);
    if (nilpotency_ && int(w.length()) >= *nilpotency_) continue;
    if (w.length() > limit) throw NonTermination("reduction exceeded word length " + std::to_string(limit));
    if (++steps > 5'000'000) throw NonTermination("reduction did not terminate");
    auto redex = find_redex(w, s, rng);
    if (!redex) {
      auto idx = index_of(w);
      if (!idx) throw Error("irreducible word " + to_string(quiver_, w) + " is not in the basis");
      out[*idx] = F.add(out[*idx], c);
      continue;
    }
    const auto& rule = rules_[redex->first];
    const std::size_t p = redex->second, l = rule.lhs.length();
    for (auto& t : rule.rhs) {
      PathWord x{w.source, w.target, w.letters.substr(0, p) + t.word.letters + w.letters.substr(p + l)};
      push(x, F.mul(c, t.coeff));
    }
  }
  return out;
}

Matrix AlgebraSpec::left_mult(const AlgElement& b) const {
  Matrix M(*field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    auto v = multiply(b, basis_element(j));
    for (std::size_t i = 0; i < dim(); ++i) M(i, j) = v[i];
  }
  return M;
}

Matrix AlgebraSpec::right_mult(const AlgElement& b) const {
  Matrix M(*field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    auto v = multiply(basis_element(j), b);
    for (std::size_t i = 0; i < dim(); ++i) M(i, j) = v[i];
  }
  return M;
}

std::string AlgebraSpec::describe(const AlgElement& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!out.empty()) out += " + ";
    if (a[i] != 1) out += "(" + field_->format(a[i]) + ")*";
    out += to_string(quiver_, basis_[i]);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (auto& c : checks) {
    os << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

bool is_zero(const AlgElement& a) {
  return std::all_of(a.begin(), a.end(), [](Scalar s) { return s == 0; });
}

PathWord random_path(const AlgebraSpec& A, std::mt19937_64& rng, std::size_t max_len) {
  const Quiver& Q = A.quiver();
  int v = std::uniform_int_distribution<int>(0, Q.vertex_count() - 1)(rng);
  PathWord w = idempotent(v);
  std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<int> out;
    for (int a = 0; a < Q.arrow_count(); ++a)
      if (Q.arrows()[std::size_t(a)].source == w.target) out.push_back(a);
    if (out.empty()) break;
    int a = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    w = *concat(w, arrow_word(Q, a));
  }
  return w;
}

}  // namespace

ValidationReport validate(const AlgebraSpec& A, const ValidateOptions& opt) {
  ValidationReport rep;
  const Field& F = A.field();
  const std::size_t n = A.dim();
  if (A.expected_dim())
    rep.checks.push_back({"dimension", n == *A.expected_dim(),
                          std::to_string(n) + " basis words, expected " + std::to_string(*A.expected_dim())});
  rep.checks.push_back({"closure", A.closed(), A.closure_error().value_or("")});
  if (!A.closed()) return rep;

  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i) {
      auto e = A.basis_element(i);
      if (A.normal_form(A.basis()[i]) != e || A.evaluate_letters(A.basis()[i]) != e)
        bad = to_string(A.quiver(), A.basis()[i]);
    }
    rep.checks.push_back({"basis words reduced", bad.empty(), bad});
  }
  {
    auto u = A.unit();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto b = A.basis_element(i);
      ok = A.multiply(u, b) == b && A.multiply(b, u) == b;
    }
    rep.checks.push_back({"unit", ok, ""});
  }
  {
    std::string bad;
    std::mt19937_64 rng(opt.seed);
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
      auto a = A.basis_element(i), b = A.basis_element(j), c = A.basis_element(k);
      if (A.multiply(A.multiply(a, b), c) != A.multiply(a, A.multiply(b, c)))
        bad = "(" + to_string(A.quiver(), A.basis()[i]) + ", " + to_string(A.quiver(), A.basis()[j]) + ", " +
              to_string(A.quiver(), A.basis()[k]) + ")";
    };
    if (n <= opt.exhaustive_limit) {
      for (std::size_t i = 0; i < n && bad.empty(); ++i)
        for (std::size_t j = 0; j < n && bad.empty(); ++j)
          for (std::size_t k = 0; k < n && bad.empty(); ++k) check(i, j, k);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < opt.samples && bad.empty(); ++s) check(pick(rng), pick(rng), pick(rng));
    }
    rep.checks.push_back({"associativity", bad.empty(), bad});
  }
  {
    std::string bad;
    for (auto& r : A.relations()) {
      if (!is_zero(A.evaluate_letters(r))) {
        bad = r.terms().empty() ? "?" : to_string(A.quiver(), r.terms().front().word) + " ...";
        break;
      }
    }
    rep.checks.push_back({"relations vanish", bad.empty(), bad});
  }
  {
    std::string bad;
    std::mt19937_64 rng(opt.seed + 7);
    std::size_t max_len = std::size_t(A.nilpotency().value_or(int(A.word_cap()))) + 2;
    for (std::size_t s = 0; s < opt.confluence_samples && bad.empty(); ++s) {
      auto w = random_path(A, rng, max_len);
      try {
        auto ref = A.normal_form(w);
        for (int t = 0; t < 3; ++t)
          if (A.normal_form(w, Strategy::Random, &rng) != ref) {
            bad = to_string(A.quiver(), w);
            break;
          }
      } catch (const Error& e) {
        bad = to_string(A.quiver(), w) + ": " + e.what();
      }
    }
    rep.checks.push_back({"confluence", bad.empty(), bad});
  }
  (void)F;
  return rep;
}

Subspace center(const AlgebraSpec& A) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  Matrix M(F, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (auto& [k, v] : A.product(i, j)) M(j * n + k, i) = F.add(M(j * n + k, i), v);
      for (auto& [k, v] : A.product(j, i)) M(j * n + k, i) = F.sub(M(j * n + k, i), v);
    }
  return kernel_basis(M);
}

Subspace commutator_space(const AlgebraSpec& A) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  Matrix M(F, 0, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Scalar> v(n, 0);
      for (auto& [k, c] : A.product(i, j)) v[k] = F.add(v[k], c);
      for (auto& [k, c] : A.product(j, i)) v[k] = F.sub(v[k], c);
      M.append_row(v);
    }
  return Subspace::span(std::move(M));
}

SymmetrizingForm symmetrizing_form(const AlgebraSpec& A) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  SymmetrizingForm f{std::vector<Scalar>(n, 0), Matrix(F, n, n)};
  if (A.socle().empty()) throw Error("algebra declares no socle words");
  for (auto& [v, w] : A.socle()) {
    auto s = A.normal_form(w);
    std::size_t nz = 0, at = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (s[k]) ++nz, at = k;
    if (nz != 1) throw Error("socle word at vertex " + A.quiver().vertices()[std::size_t(v)] + " is not a basis multiple");
    f.lambda[at] = F.inv(s[at]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar g = 0;
      for (auto& [k, c] : A.product(i, j)) g = F.add(g, F.mul(c, f.lambda[k]));
      f.gram(i, j) = g;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (f.gram(i, j) != f.gram(j, i)) throw Error("form asymmetric");
  if (rank(f.gram) != n) throw Error("form degenerate");
  return f;
}

namespace {

AlgElement power(const AlgebraSpec& A, AlgElement x, unsigned long long e) {
  AlgElement r = A.unit();
  while (e) {
    if (e & 1) r = A.multiply(r, x);
    e >>= 1;
    if (e) x = A.multiply(x, x);
  }
  return r;
}

}  // namespace

Subspace kulshammer_T(const AlgebraSpec& A, unsigned n) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  unsigned long long q = 1;
  for (unsigned i = 0; i < n; ++i) q *= F.characteristic();
  Subspace KA = commutator_space(A);
  QuotientSection Q(KA, Subspace::whole(F, d));

  std::vector<AlgElement> powers;
  for (std::size_t i = 0; i < d; ++i) powers.push_back(power(A, A.basis_element(i), q));

  // the p^n-power map has to be additive modulo [A,A]
  std::mt19937_64 rng(0x5eed + n);
  std::uniform_int_distribution<unsigned> pick(0, F.order() - 1);
  for (int t = 0; t < 20; ++t) {
    AlgElement x(d), y(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = Scalar(pick(rng)), y[i] = Scalar(pick(rng));
    AlgElement s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = F.add(x[i], y[i]);
    auto diff = power(A, s, q);
    F.axpy(diff, F.neg(1), power(A, x, q));
    F.axpy(diff, F.neg(1), power(A, y, q));
    if (!KA.contains(diff)) throw Error("unsupported characteristic: power map not additive modulo commutators");
  }

  Matrix M(F, Q.dim(), d);
  for (std::size_t i = 0; i < d; ++i) {
    auto c = Q.class_coords(powers[i]);
    for (std::size_t r = 0; r < c.size(); ++r) M(r, i) = c[r];
  }
  Subspace T = fold_to_field(semilinear_kernel(M, n % F.degree()), F);
  if (!T.contains(KA)) throw Error("Kulshammer space misses the commutators");
  return T;
}

Subspace kulshammer_T_perp(const AlgebraSpec& A, unsigned n) {
  auto form = symmetrizing_form(A);
  Subspace T = kulshammer_T(A, n);
  return kernel_basis(T.basis() * form.gram);
}

std::size_t stable_center_quotient_dim(const AlgebraSpec& A) {
  Subspace Z = center(A);
  Subspace P = kulshammer_T_perp(A, 1);
  if (!Z.contains(P)) throw Error("T_1 perp is not central");
  return Z.dim() - P.dim();
}

}  // namespace hhlie
