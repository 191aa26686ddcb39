#pragma once

// Shared helpers for the unit tests and the acceptance run.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hhlie/cohomology.hpp"
#include "hhlie/lie.hpp"

namespace support {

using namespace hhlie;

struct Built {
  FamilyParams params;
  const Field* field;
  std::shared_ptr<const AlgebraSpec> algebra;
  std::shared_ptr<const BimoduleComplex> complex;
  CohomologySpace H;
  std::vector<std::string> names;  // published basis, empty when none
  LieAlgebra lie;                  // class basis
};

inline Built build(const FamilyParams& p, const Field& F) {
  auto inst = make_family(p, F);
  auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
  CohomologySpace H = hh(C, 1);
  std::vector<std::string> names;
  if (auto fx = attach_fixtures(H, p)) names = fx->basis_names();
  LieAlgebra L = hh1_lie(H);
  return {p, &F, inst.algebra, C, std::move(H), std::move(names), std::move(L)};
}

// the Lie algebra rewritten in the published basis
inline LieAlgebra named_lie(const Built& b) { return b.lie.change_basis(b.H.named_classes(b.names)); }

inline std::size_t index_of(const std::vector<std::string>& names, const std::string& n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  throw Error("no basis element " + n);
}

inline Matrix random_invertible(const Field& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pick(0, F.order() - 1);
  for (;;) {
    Matrix M(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = Scalar(pick(rng));
    if (rank(M) == n) return M;
  }
}

inline std::vector<Scalar> random_vector(const Field& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pick(0, F.order() - 1);
  std::vector<Scalar> v(n);
  for (auto& x : v) x = Scalar(pick(rng));
  return v;
}

struct GridEntry {
  Family family;
  unsigned p, m;
  std::vector<int> ks, ss;
  std::vector<Scalar> cs, ds;
};

// every family with a resolution, at small parameters
inline std::vector<std::pair<FamilyParams, const Field*>> property_grid() {
  const std::vector<GridEntry> grid = {
      {Family::D1A2, 2, 1, {2, 3, 4}, {0}, {0}, {0, 1}},
      {Family::SD1A1, 2, 1, {2, 3, 4}, {0}, {0}, {0}},
      {Family::SD1A2, 2, 1, {2, 3, 4}, {0}, {0, 1}, {0, 1}},
      {Family::SD1A2, 2, 2, {2, 3}, {0}, {0, 2}, {0, 3}},
      {Family::Q1A1, 2, 1, {2, 3}, {0}, {0}, {0}},
      {Family::Q1A2, 2, 1, {2, 3, 4}, {0}, {0, 1}, {0, 1}},
      {Family::Q1A2, 2, 2, {2, 3}, {0}, {0, 2}, {0, 3}},
      {Family::SD2B1, 2, 1, {2, 3}, {2, 3}, {0, 1}, {0}},
      {Family::SD2B1, 3, 1, {2, 3}, {2, 3}, {0, 1}, {0}},
      {Family::SD2B1, 5, 1, {2, 3}, {2, 3}, {0, 1}, {0}},
      {Family::SD2B2, 2, 1, {2, 3}, {2, 3}, {0, 1}, {0}},
      {Family::SD2B2, 3, 1, {2, 3}, {2, 3}, {0, 1}, {0}},
      {Family::SD2B2, 5, 1, {2, 3}, {2, 3}, {0, 1}, {0}},
  };
  std::vector<std::pair<FamilyParams, const Field*>> out;
  for (const auto& g : grid) {
    const Field& F = Field::get(g.p, g.m);
    for (int k : g.ks)
      for (int s : g.ss)
        for (Scalar c : g.cs)
          for (Scalar d : g.ds) {
            FamilyParams p{g.family, k, s, c, d, 0};
            try {
              check_parameters(p, F);
            } catch (const InvalidParameters&) {
              continue;
            }
            out.emplace_back(p, &F);
          }
  }
  return out;
}

}  // namespace support
