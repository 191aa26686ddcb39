#include "hhlie/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <variant>

namespace hhlie {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') ++line, col = 1;
      else ++col;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Sym, "\n", line, col});
      advance(1);
      continue;
    }
    if (std::isspace((unsigned char)c)) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::isdigit((unsigned char)c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", l, cl});
      advance(2);
    } else if (std::string_view("{}()[]:;,*^+-=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), l, cl});
      advance(1);
    } else {
      throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// expression tree, evaluated once all bindings are known
struct Node {
  enum Kind { Num, Name, Add, Sub, Neg, Mul, Pow } kind;
  std::string text;
  std::vector<std::unique_ptr<Node>> kids;
  int line, col;
};
using NodeP = std::unique_ptr<Node>;

NodeP make(Node::Kind k, const Token& t) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->text = t.text;
  n->line = t.line;
  n->col = t.col;
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  const Token& peek() const { return t_[p_]; }
  bool at(const std::string& s) const { return peek().kind != Tok::End && peek().text == s && peek().kind != Tok::Ident; }
  bool at_word(const std::string& s) const { return peek().kind == Tok::Ident && peek().text == s; }
  Token next() { return t_[p_++]; }
  void skip_newlines() {
    while (peek().kind == Tok::Sym && peek().text == "\n") ++p_;
  }
  Token expect(const std::string& s) {
    skip_newlines();
    if (peek().text != s) fail("expected '" + s + "'");
    return next();
  }
  Token expect_kind(Tok k, const std::string& what) {
    skip_newlines();
    if (peek().kind != k) fail("expected " + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : (t.text == "\n" ? "end of line" : "'" + t.text + "'");
    throw ParseError(t.line, t.col, msg + ", got " + got);
  }

  // expr := [+-] term ((+|-) term)*
  NodeP expr() {
    skip_newlines();
    NodeP lhs;
    if (at("-")) {
      auto t = next();
      lhs = make(Node::Neg, t);
      lhs->kids.push_back(term());
    } else {
      if (at("+")) next();
      lhs = term();
    }
    while (true) {
      skip_inside();
      if (!(at("+") || at("-"))) break;
      auto t = next();
      auto n = make(t.text == "+" ? Node::Add : Node::Sub, t);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(term());
      lhs = std::move(n);
    }
    return lhs;
  }
  NodeP term() {
    auto lhs = factor();
    while (true) {
      skip_inside();
      if (!at("*")) break;
      auto t = next();
      auto n = make(Node::Mul, t);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(factor());
      lhs = std::move(n);
    }
    return lhs;
  }
  NodeP factor() {
    auto base = primary();
    skip_inside();
    if (at("^")) {
      auto t = next();
      auto n = make(Node::Pow, t);
      n->kids.push_back(std::move(base));
      n->kids.push_back(primary());
      return n;
    }
    return base;
  }
  NodeP primary() {
    skip_inside();
    const Token& t = peek();
    if (t.kind == Tok::Int) return make(Node::Num, next());
    if (t.kind == Tok::Ident) return make(Node::Name, next());
    if (at("(")) {
      next();
      ++depth_;
      auto e = expr();
      skip_inside();
      expect(")");
      --depth_;
      return e;
    }
    if (at("-")) {
      auto tk = next();
      auto n = make(Node::Neg, tk);
      n->kids.push_back(primary());
      return n;
    }
    fail("expected a number, name or '('");
  }
  // newlines only matter between top-level statements
  void skip_inside() {
    if (depth_ > 0) skip_newlines();
  }
  int depth_ = 0;
  std::size_t p_ = 0;
  std::vector<Token> t_;
};

struct Binding {
  std::optional<long long> integer;
  Scalar scalar = 0;
};

struct Value {
  bool is_scalar = true;
  Scalar s = 0;
  std::optional<long long> integer;  // for plain integer scalars
  PathExpr p;
};

class Evaluator {
 public:
  Evaluator(const Field& F, const Quiver* Q) : F_(F), Q_(Q) {}
  std::map<std::string, Binding> bindings;

  [[noreturn]] static void fail(const Node& n, const std::string& msg) { throw ParseError(n.line, n.col, msg); }

  long long integer(const Node& n) {
    switch (n.kind) {
      case Node::Num: return std::stoll(n.text);
      case Node::Name: {
        auto it = bindings.find(n.text);
        if (it == bindings.end() || !it->second.integer) fail(n, "'" + n.text + "' is not an integer parameter");
        return *it->second.integer;
      }
      case Node::Add: return integer(*n.kids[0]) + integer(*n.kids[1]);
      case Node::Sub: return integer(*n.kids[0]) - integer(*n.kids[1]);
      case Node::Neg: return -integer(*n.kids[0]);
      case Node::Mul: return integer(*n.kids[0]) * integer(*n.kids[1]);
      case Node::Pow: {
        long long b = integer(*n.kids[0]), e = integer(*n.kids[1]), r = 1;
        if (e < 0) fail(n, "negative exponent");
        while (e--) r *= b;
        return r;
      }
    }
    fail(n, "bad integer expression");
  }

  PathExpr unit() const {
    PathExpr u;
    for (int v = 0; v < Q_->vertex_count(); ++v) u.add(F_, 1, idempotent(v));
    return u;
  }
  PathExpr as_path(const Value& v) const { return v.is_scalar ? unit().scaled(F_, v.s) : v.p; }

  Value eval(const Node& n) {
    switch (n.kind) {
      case Node::Num: {
        Value v;
        v.integer = std::stoll(n.text);
        v.s = F_.from_int(*v.integer);
        return v;
      }
      case Node::Name: {
        if (auto it = bindings.find(n.text); it != bindings.end()) {
          Value v;
          v.s = it->second.scalar;
          v.integer = it->second.integer;
          return v;
        }
        if (Q_) {
          if (auto a = Q_->find_arrow(n.text)) {
            Value v;
            v.is_scalar = false;
            v.p = PathExpr(arrow_word(*Q_, *a));
            return v;
          }
          if (n.text.rfind("e_", 0) == 0)
            if (auto vx = Q_->find_vertex(n.text.substr(2))) {
              Value v;
              v.is_scalar = false;
              v.p = PathExpr(idempotent(*vx));
              return v;
            }
        }
        if (n.text == "w") {
          Value v;
          v.s = F_.generator();
          return v;
        }
        fail(n, "unknown name '" + n.text + "'");
      }
      case Node::Neg: {
        auto v = eval(*n.kids[0]);
        if (v.is_scalar) {
          v.s = F_.neg(v.s);
          if (v.integer) v.integer = -*v.integer;
        } else {
          v.p = v.p.scaled(F_, F_.neg(1));
        }
        return v;
      }
      case Node::Add:
      case Node::Sub: {
        auto a = eval(*n.kids[0]), b = eval(*n.kids[1]);
        bool sub = n.kind == Node::Sub;
        if (a.is_scalar && b.is_scalar) {
          Value v;
          v.s = sub ? F_.sub(a.s, b.s) : F_.add(a.s, b.s);
          if (a.integer && b.integer) v.integer = sub ? *a.integer - *b.integer : *a.integer + *b.integer;
          return v;
        }
        if (!Q_) fail(n, "paths are not allowed here");
        Value v;
        v.is_scalar = false;
        v.p = as_path(a);
        v.p.add(F_, sub ? F_.neg(1) : Scalar(1), as_path(b));
        return v;
      }
      case Node::Mul: {
        auto a = eval(*n.kids[0]), b = eval(*n.kids[1]);
        Value v;
        if (a.is_scalar && b.is_scalar) {
          v.s = F_.mul(a.s, b.s);
          if (a.integer && b.integer) v.integer = *a.integer * *b.integer;
        } else if (a.is_scalar) {
          v.is_scalar = false;
          v.p = b.p.scaled(F_, a.s);
        } else if (b.is_scalar) {
          v.is_scalar = false;
          v.p = a.p.scaled(F_, b.s);
        } else {
          v.is_scalar = false;
          v.p = a.p.times(F_, b.p);
        }
        return v;
      }
      case Node::Pow: {
        long long e = integer(*n.kids[1]);
        if (e < 0) fail(n, "negative exponent");
        auto b = eval(*n.kids[0]);
        Value v;
        if (b.is_scalar) {
          v.s = F_.pow(b.s, (unsigned long long)e);
          if (b.integer) {
            long long r = 1;
            for (long long i = 0; i < e; ++i) r *= *b.integer;
            v.integer = r;
          }
          return v;
        }
        v.is_scalar = false;
        v.p = unit();
        for (long long i = 0; i < e; ++i) v.p = v.p.times(F_, b.p);
        return v;
      }
    }
    fail(n, "bad expression");
  }

 private:
  const Field& F_;
  const Quiver* Q_;
};

std::string vertex_label(Parser& P) {
  P.skip_newlines();
  const Token& t = P.peek();
  if (t.kind != Tok::Ident && t.kind != Tok::Int) P.fail("expected a vertex label");
  return P.next().text;
}

// separators inside braces: ';' ',' or newlines
bool eat_separator(Parser& P) {
  bool any = false;
  while (P.peek().kind == Tok::Sym && (P.peek().text == ";" || P.peek().text == "\n")) {
    P.next();
    any = true;
  }
  return any;
}

}  // namespace

AlgebraInput parse_qalg_input(std::string_view text) {
  Parser P(lex(text));
  const Field* F = nullptr;
  Quiver Q;
  bool have_quiver = false;
  std::vector<std::pair<std::string, NodeP>> lets;
  std::vector<NodeP> relations;
  std::vector<std::pair<Token, NodeP>> socle;
  std::vector<NodeP> basis;
  bool have_basis = false;
  NodeP nilpotency, dim;
  std::string name;

  while (true) {
    P.skip_newlines();
    while (P.at(";")) P.next(), P.skip_newlines();
    const Token& t = P.peek();
    if (t.kind == Tok::End) break;
    if (t.kind != Tok::Ident) P.fail("expected a statement");
    Token kw = P.next();
    if (kw.text == "field") {
      auto g = P.expect_kind(Tok::Ident, "GF");
      if (g.text != "GF") throw ParseError(g.line, g.col, "expected GF(q)");
      P.expect("(");
      auto q = P.expect_kind(Tok::Int, "field order");
      std::string desc = "GF(" + q.text;
      if (P.at("^")) {
        P.next();
        desc += "^" + P.expect_kind(Tok::Int, "exponent").text;
      }
      P.expect(")");
      try {
        F = &Field::parse(desc + ")");
      } catch (const Error& e) {
        throw ParseError(q.line, q.col, e.what());
      }
    } else if (kw.text == "name") {
      name = P.expect_kind(Tok::Ident, "a name").text;
    } else if (kw.text == "quiver") {
      if (have_quiver) throw ParseError(kw.line, kw.col, "second quiver block");
      have_quiver = true;
      P.expect("{");
      while (true) {
        P.skip_newlines();
        if (P.at("}")) {
          P.next();
          break;
        }
        auto sec = P.expect_kind(Tok::Ident, "'vertices' or 'arrows'");
        P.expect(":");
        if (sec.text == "vertices") {
          do {
            auto lab = vertex_label(P);
            try {
              Q.add_vertex(lab);
            } catch (const Error& e) {
              throw ParseError(sec.line, sec.col, e.what());
            }
          } while (P.at(",") && (P.next(), true));
        } else if (sec.text == "arrows") {
          do {
            auto an = P.expect_kind(Tok::Ident, "arrow name");
            P.expect(":");
            auto s = vertex_label(P);
            P.expect("->");
            auto d = vertex_label(P);
            auto si = Q.find_vertex(s), di = Q.find_vertex(d);
            if (!si || !di) throw ParseError(an.line, an.col, "arrow '" + an.text + "' uses an undeclared vertex");
            try {
              Q.add_arrow(an.text, *si, *di);
            } catch (const Error& e) {
              throw ParseError(an.line, an.col, e.what());
            }
          } while (P.at(",") && (P.next(), true));
        } else {
          throw ParseError(sec.line, sec.col, "unknown quiver section '" + sec.text + "'");
        }
        eat_separator(P);
      }
    } else if (kw.text == "let") {
      auto id = P.expect_kind(Tok::Ident, "parameter name");
      P.expect("=");
      auto e = P.expr();
      lets.emplace_back(id.text, std::move(e));
    } else if (kw.text == "relations" || kw.text == "basis") {
      bool is_basis = kw.text == "basis";
      if (is_basis) have_basis = true;
      P.expect("{");
      ++P.depth_;
      while (true) {
        eat_separator(P);
        if (P.at("}")) {
          P.next();
          break;
        }
        --P.depth_;
        // items end at ';' or newline, so parse without swallowing newlines
        auto e = P.expr();
        ++P.depth_;
        (is_basis ? basis : relations).push_back(std::move(e));
        if (!eat_separator(P) && !P.at("}")) P.fail("expected ';' or '}'");
      }
      --P.depth_;
    } else if (kw.text == "socle") {
      P.expect("{");
      while (true) {
        eat_separator(P);
        if (P.at("}")) {
          P.next();
          break;
        }
        auto vt = P.peek();
        vertex_label(P);
        P.expect(":");
        auto e = P.expr();
        socle.emplace_back(vt, std::move(e));
        if (!eat_separator(P) && !P.at("}")) P.fail("expected ';' or '}'");
      }
    } else if (kw.text == "nilpotency") {
      nilpotency = P.expr();
    } else if (kw.text == "dim") {
      dim = P.expr();
    } else {
      throw ParseError(kw.line, kw.col, "unknown statement '" + kw.text + "'");
    }
  }
  if (!F) throw ParseError(1, 1, "missing 'field' statement");
  if (!have_quiver) throw ParseError(1, 1, "missing 'quiver' block");

  Evaluator ev(*F, &Q);
  for (auto& [id, node] : lets) {
    if (Q.find_arrow(id)) throw ParseError(node->line, node->col, "parameter '" + id + "' shadows an arrow");
    auto v = ev.eval(*node);
    if (!v.is_scalar) throw ParseError(node->line, node->col, "parameter '" + id + "' must be a scalar");
    ev.bindings[id] = Binding{v.integer, v.s};
  }

  AlgebraInput in;
  in.field = F;
  in.name = name;
  in.quiver = Q;
  for (auto& r : relations) {
    auto v = ev.eval(*r);
    if (v.is_scalar) throw ParseError(r->line, r->col, "relation is a scalar");
    if (v.p.empty()) throw ParseError(r->line, r->col, "relation evaluates to zero");
    try {
      in.rules.push_back(orient(*F, v.p));
    } catch (const Error& e) {
      throw ParseError(r->line, r->col, e.what());
    }
    in.relations.push_back(v.p);
  }
  for (auto& [vt, e] : socle) {
    auto vx = Q.find_vertex(vt.text);
    if (!vx) throw ParseError(vt.line, vt.col, "unknown vertex '" + vt.text + "'");
    auto v = ev.eval(*e);
    if (v.is_scalar || v.p.terms().size() != 1 || v.p.terms()[0].coeff != 1)
      throw ParseError(e->line, e->col, "socle entry must be a single path");
    const auto& w = v.p.terms()[0].word;
    if (w.source != *vx) throw ParseError(e->line, e->col, "socle path does not start at its vertex");
    in.socle.emplace_back(*vx, w);
  }
  if (have_basis) {
    std::vector<PathWord> words;
    for (auto& b : basis) {
      auto v = ev.eval(*b);
      if (v.is_scalar || v.p.terms().size() != 1 || v.p.terms()[0].coeff != 1)
        throw ParseError(b->line, b->col, "basis entry must be a single path");
      words.push_back(v.p.terms()[0].word);
    }
    in.basis = std::move(words);
  }
  if (nilpotency) {
    long long n = ev.integer(*nilpotency);
    if (n < 1) throw ParseError(nilpotency->line, nilpotency->col, "nilpotency bound must be positive");
    in.nilpotency = int(n);
  }
  if (dim) in.expected_dim = std::size_t(ev.integer(*dim));
  return in;
}

std::shared_ptr<const AlgebraSpec> parse_qalg(std::string_view text) {
  return std::make_shared<const AlgebraSpec>(parse_qalg_input(text));
}

std::shared_ptr<const AlgebraSpec> load_qalg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_qalg(ss.str());
}

PathExpr parse_path_expr(const Quiver& Q, const Field& F, std::string_view text,
                         const std::map<std::string, Scalar>& scalars,
                         const std::map<std::string, long long>& integers) {
  Parser P(lex(text));
  ++P.depth_;
  auto node = P.expr();
  P.skip_newlines();
  if (P.peek().kind != Tok::End) P.fail("trailing input");
  Evaluator ev(F, &Q);
  for (auto& [k, v] : scalars) ev.bindings[k] = Binding{std::nullopt, v};
  for (auto& [k, v] : integers) ev.bindings[k] = Binding{v, F.from_int(v)};
  auto v = ev.eval(*node);
  return ev.as_path(v);
}

Scalar parse_scalar(const Field& F, std::string_view text) {
  Parser P(lex(text));
  ++P.depth_;
  auto node = P.expr();
  P.skip_newlines();
  if (P.peek().kind != Tok::End) P.fail("trailing input");
  Evaluator ev(F, nullptr);
  auto v = ev.eval(*node);
  if (!v.is_scalar) throw Error("expected a scalar");
  return v.s;
}

}  // namespace hhlie
