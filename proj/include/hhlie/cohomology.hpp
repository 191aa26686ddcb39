#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhlie/families.hpp"
#include "hhlie/resolution.hpp"

namespace hhlie {

class DegreeUnavailable : public Error {
 public:
  using Error::Error;
};
class NotACocycle : public Error {
 public:
  using Error::Error;
};

// HH^n as cocycles modulo coboundaries inside Hom(Q^n, Lambda). Classes are
// written in the echelon complement of the coboundaries.
struct CohomologySpace {
  int degree;
  std::shared_ptr<const BimoduleComplex> complex;
  Subspace cocycles;
  Subspace coboundaries;
  QuotientSection section;
  // named cochains (coordinates in Hom(Q^n, Lambda)), filled by attach_fixtures
  std::map<std::string, std::vector<Scalar>> named;

  std::size_t dim() const { return section.dim(); }
  std::size_t cochain_dim() const { return cocycles.ambient_dim(); }
  bool is_cocycle(std::span<const Scalar> f) const { return cocycles.contains(f); }
  std::vector<Scalar> class_coords(std::span<const Scalar> f) const;
  std::vector<Scalar> representative(std::span<const Scalar> coords) const {
    return section.representative(coords);
  }
  // classes of the named cochains, in the given order, as columns
  Matrix named_classes(const std::vector<std::string>& names) const;
};

CohomologySpace hh(std::shared_ptr<const BimoduleComplex> C, int degree);

// Degree-1 cochains written per arrow as path expressions in the family's
// arrow names, with k, s, c, d bound.
struct NamedCochain {
  std::string name;
  std::vector<std::string> values;  // one per arrow, in quiver order
  bool in_basis = true;             // part of the published basis in this case
};

struct FixtureSet {
  std::vector<NamedCochain> cochains;
  // published spanning list of the coboundaries, when there is one
  std::vector<std::vector<std::string>> coboundaries;
  std::vector<std::string> basis_names() const;
  const NamedCochain* find(const std::string& name) const;
};

// nullopt when no basis is published for this family and characteristic
std::optional<FixtureSet> family_fixtures(const FamilyParams& p, const Field& F);
std::vector<Scalar> fixture_cochain(const BimoduleComplex& C, const FamilyParams& p,
                                    const std::vector<std::string>& values);
// registers every fixture that evaluates to a cochain; returns the set used
std::optional<FixtureSet> attach_fixtures(CohomologySpace& H, const FamilyParams& p);

// each basis fixture is a cocycle, the basis is independent modulo
// coboundaries and spans; the coboundary list spans the coboundaries
ValidationReport fixture_check(const CohomologySpace& H, const FamilyParams& p);

}  // namespace hhlie
