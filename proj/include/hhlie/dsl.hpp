#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "hhlie/algebra.hpp"

namespace hhlie {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// .qalg text:
//   field GF(4)
//   quiver { vertices: 1, 2; arrows: a: 1 -> 1, b: 1 -> 2, g: 2 -> 1 }
//   relations { g*b; a^2 - c*(a*b*g)^k }
//   let k = 2; let c = w + 1
//   socle { 1: (a*b*g)^k }
//   nilpotency 7          paths of this length vanish
//   dim 18                expected dimension
//   basis { e_1; a; ... } certified basis instead of enumeration
// `w` is the field generator, e_<v> the idempotent at v, a bare scalar in a
// sum stands for a multiple of the unit.
AlgebraInput parse_qalg_input(std::string_view text);
std::shared_ptr<const AlgebraSpec> parse_qalg(std::string_view text);
std::shared_ptr<const AlgebraSpec> load_qalg(const std::string& path);

// A path expression over an existing quiver, e.g. "1 + c*x" with c bound
// in `scalars`.
PathExpr parse_path_expr(const Quiver& Q, const Field& F, std::string_view text,
                         const std::map<std::string, Scalar>& scalars = {},
                         const std::map<std::string, long long>& integers = {});
// "0", "1", "w", "w^2 + 1"
Scalar parse_scalar(const Field& F, std::string_view text);

}  // namespace hhlie
