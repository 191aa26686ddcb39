#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hhlie/field.hpp"

namespace hhlie {

struct Arrow {
  std::string name;
  int source;
  int target;
};

class Quiver {
 public:
  int add_vertex(std::string label);
  int add_arrow(std::string name, int source, int target);
  int vertex_count() const { return int(vertices_.size()); }
  int arrow_count() const { return int(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<int> find_vertex(const std::string& label) const;
  std::optional<int> find_arrow(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A path read left to right: the first letter starts at `source`. An empty
// letter string is the idempotent of `source`.
struct PathWord {
  int source = 0;
  int target = 0;
  std::string letters;  // arrow indices as chars

  std::size_t length() const { return letters.size(); }
  bool is_idempotent() const { return letters.empty(); }
  std::string key() const { return char(source) + letters; }
  bool operator==(const PathWord&) const = default;
};

PathWord idempotent(int vertex);
PathWord arrow_word(const Quiver& Q, int arrow);
PathWord word_from_names(const Quiver& Q, const std::vector<std::string>& arrows);
std::optional<PathWord> concat(const PathWord& u, const PathWord& v);
std::string to_string(const Quiver& Q, const PathWord& w);
// basis order: length, then source, then letters
bool word_less(const PathWord& a, const PathWord& b);

struct Term {
  Scalar coeff;
  PathWord word;
};

// Linear combination of paths kept in order of first appearance, so the
// leading term of a relation is the one written first.
class PathExpr {
 public:
  PathExpr() = default;
  explicit PathExpr(PathWord w) { terms_.push_back({1, std::move(w)}); }
  void add(const Field& F, Scalar c, const PathWord& w);
  void add(const Field& F, Scalar c, const PathExpr& e);
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  PathExpr scaled(const Field& F, Scalar c) const;
  // bilinear concatenation, mismatched endpoints give zero
  PathExpr times(const Field& F, const PathExpr& o) const;

 private:
  std::vector<Term> terms_;
};

struct RewriteRule {
  PathWord lhs;
  std::vector<Term> rhs;  // empty for a zero relation
  bool is_zero() const { return rhs.empty(); }
};

// leading term becomes the left side, the rest is moved across
RewriteRule orient(const Field& F, const PathExpr& relation);

// Coordinates over the basis of an AlgebraSpec.
using AlgElement = std::vector<Scalar>;

enum class Strategy { Leftmost, Random };

struct AlgebraInput {
  const Field* field = nullptr;
  std::string name;
  Quiver quiver;
  std::vector<PathExpr> relations;            // as written, checked in validate
  std::vector<RewriteRule> rules;             // normally the oriented relations
  std::optional<int> nilpotency;              // paths of length >= N vanish
  std::optional<std::vector<PathWord>> basis; // certified basis, else enumerated
  std::vector<std::pair<int, PathWord>> socle;
  std::optional<std::size_t> expected_dim;
};

class NonTermination : public Error {
 public:
  using Error::Error;
};

class AlgebraSpec {
 public:
  explicit AlgebraSpec(AlgebraInput in);

  const Field& field() const { return *field_; }
  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<PathExpr>& relations() const { return relations_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::optional<int> nilpotency() const { return nilpotency_; }
  const std::vector<std::pair<int, PathWord>>& socle() const { return socle_; }
  std::optional<std::size_t> expected_dim() const { return expected_dim_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<PathWord>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const PathWord& w) const;
  std::size_t index_of_idempotent(int v) const { return *index_of(idempotent(v)); }
  std::optional<std::size_t> index_of_arrow(int a) const;
  // basis indices of the words from i to j
  const std::vector<std::size_t>& block(int i, int j) const {
    return blocks_[std::size_t(i) * quiver_.vertex_count() + j];
  }
  std::size_t word_cap() const { return cap_; }

  // structure constants, empty optional when a product left the basis
  bool closed() const { return !closure_error_; }
  const std::optional<std::string>& closure_error() const { return closure_error_; }
  const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const;

  AlgElement zero() const { return AlgElement(dim(), 0); }
  AlgElement unit() const;
  AlgElement basis_element(std::size_t i) const;
  AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
  // product through its letters, independent of the structure table layout
  AlgElement evaluate_letters(const PathWord& w) const;
  AlgElement evaluate_letters(const PathExpr& e) const;

  AlgElement normal_form(const PathWord& w, Strategy s = Strategy::Leftmost,
                         std::mt19937_64* rng = nullptr) const;
  AlgElement normal_form(const PathExpr& e, Strategy s = Strategy::Leftmost,
                         std::mt19937_64* rng = nullptr) const;
  bool is_irreducible(const PathWord& w) const;

  // left/right multiplication matrices: column j is b*b_j (resp. b_j*b)
  Matrix left_mult(const AlgElement& b) const;
  Matrix right_mult(const AlgElement& b) const;

  std::string describe(const AlgElement& a) const;

 private:
  void enumerate_basis();
  void build_table();
  // first redex: (rule index, position)
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const PathWord& w, Strategy s,
                                                                std::mt19937_64* rng) const;
  std::vector<std::size_t> zero_rules_, other_rules_;

  const Field* field_;
  std::string name_;
  Quiver quiver_;
  std::vector<PathExpr> relations_;
  std::vector<RewriteRule> rules_;
  std::optional<int> nilpotency_;
  std::vector<std::pair<int, PathWord>> socle_;
  std::optional<std::size_t> expected_dim_;

  std::vector<PathWord> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t cap_ = 64;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
  std::optional<std::string> closure_error_;
};

struct ValidationReport {
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Check> checks;
  bool ok() const;
  std::string summary() const;
};

struct ValidateOptions {
  std::size_t exhaustive_limit = 30;  // associativity over all triples up to this dim
  std::size_t samples = 100000;
  std::size_t confluence_samples = 2000;
  std::uint64_t seed = 1;
};

ValidationReport validate(const AlgebraSpec& A, const ValidateOptions& opt = {});

Subspace center(const AlgebraSpec& A);
Subspace commutator_space(const AlgebraSpec& A);

// lambda(socle word at each vertex) = 1, zero on every other basis word
struct SymmetrizingForm {
  std::vector<Scalar> lambda;  // value on each basis word
  Matrix gram;                 // lambda(b_i b_j)
};
SymmetrizingForm symmetrizing_form(const AlgebraSpec& A);

// {x : x^(p^n) in [A,A]} and its orthogonal under the symmetrizing form
Subspace kulshammer_T(const AlgebraSpec& A, unsigned n);
Subspace kulshammer_T_perp(const AlgebraSpec& A, unsigned n);
// dim Z(A) - dim T_1(A)^perp
std::size_t stable_center_quotient_dim(const AlgebraSpec& A);

}  // namespace hhlie
