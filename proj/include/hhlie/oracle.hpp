#pragma once

#include "hhlie/lie.hpp"

namespace hhlie {

// HH^1 computed straight from the algebra as outer derivations,
// without any resolution. A derivation is stored by its values on the
// vertex idempotents followed by its values on the arrows.
struct OracleResult {
  Subspace derivations;
  Subspace inner;
  std::size_t dim = 0;
  LieAlgebra lie;  // commutator bracket on Der/Inn
  // column j: class coordinates in H of the j-th oracle basis class;
  // empty when no transfer was requested
  Matrix transfer;
};

// throws Error if a computed derivation fails the Leibniz rule on some
// pair of basis words
OracleResult hh1_oracle(const AlgebraSpec& A);
// also fills transfer against a degree-1 cohomology space of A
OracleResult hh1_oracle(const CohomologySpace& H);

}  // namespace hhlie
