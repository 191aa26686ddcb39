#include <gtest/gtest.h>

#include "support.hpp"

using namespace hhlie;

namespace {

// dim Der(A) - dim Inn(A), with derivations as arbitrary linear maps A -> A
// cut out by the Leibniz rule on every pair of basis words
std::size_t hh1_by_derivations(const AlgebraSpec& A) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  // unknown D(b_i)_r sits at column i * n + r
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Scalar>> eq(n, std::vector<Scalar>(n * n, 0));
      // D(b_i b_j)
      for (auto [t, c] : A.product(i, j))
        for (std::size_t r = 0; r < n; ++r) eq[r][t * n + r] = F.add(eq[r][t * n + r], c);
      // - D(b_i) b_j - b_i D(b_j)
      for (std::size_t u = 0; u < n; ++u) {
        for (auto [t, c] : A.product(u, j)) eq[t][i * n + u] = F.sub(eq[t][i * n + u], c);
        for (auto [t, c] : A.product(i, u)) eq[t][j * n + u] = F.sub(eq[t][j * n + u], c);
      }
      for (auto& e : eq) rows.push_back(std::move(e));
    }
  Matrix M(F, rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) M(r, c) = rows[r][c];
  const std::size_t der = n * n - rank(M);
  // inner derivations: a -> [a, -], kernel is the centre
  const std::size_t inn = n - center(A).dim();
  return der - inn;
}

TEST(Cohomology, DegreeOneAgainstAllDerivations) {
  for (const auto& [p, F] : support::property_grid()) {
    auto inst = make_family(p, *F);
    if (inst.algebra->dim() > 16) continue;
    auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
    EXPECT_EQ(hh(C, 1).dim(), hh1_by_derivations(*inst.algebra)) << describe(p, *F);
  }
}

TEST(Cohomology, DegreeZeroIsTheCentre) {
  for (const auto& [p, F] : support::property_grid()) {
    auto inst = make_family(p, *F);
    auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
    EXPECT_EQ(hh(C, 0).dim(), center(*inst.algebra).dim()) << describe(p, *F);
  }
}

TEST(Cohomology, ClosedFormsWhereKnown) {
  for (const auto& [p, F] : support::property_grid()) {
    auto inst = make_family(p, *F);
    auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
    for (int n = 0; n <= 6; ++n) {
      if (!inst.resolution->available(n)) break;
      if (auto want = expected_hh_dim(p, *F, n)) {
        EXPECT_EQ(hh(C, n).dim(), *want) << describe(p, *F) << " HH" << n;
      }
    }
  }
}

TEST(Cohomology, QuaternionPeriodicity) {
  auto inst = make_family({Family::Q1A2, 3, 0, 1, 0, 0}, Field::get(2));
  auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(hh(C, n).dim(), hh(C, n + 4).dim()) << n;
}

TEST(Cohomology, UnavailableDegree) {
  auto inst = make_family({Family::D1A2, 2, 0, 0, 0, 0}, Field::get(2));
  auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
  EXPECT_THROW(hh(C, 3), DegreeUnavailable);
  EXPECT_THROW(hh(C, -1), DegreeUnavailable);
}

TEST(Classes, CoordinatesIgnoreCoboundaries) {
  std::mt19937_64 rng(17);
  for (const auto& [p, F] : support::property_grid()) {
    auto inst = make_family(p, *F);
    if (inst.algebra->dim() > 20) continue;
    auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
    CohomologySpace H = hh(C, 1);
    for (int t = 0; t < 5; ++t) {
      auto coords = support::random_vector(*F, H.dim(), rng);
      auto f = H.representative(coords);
      ASSERT_TRUE(H.is_cocycle(f));
      auto b = H.coboundaries.combine(support::random_vector(*F, H.coboundaries.dim(), rng));
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = F->add(f[i], b[i]);
      EXPECT_EQ(H.class_coords(f), coords);
    }
  }
}

TEST(Classes, NonCocycleIsRejected) {
  auto inst = make_family({Family::D1A2, 2, 0, 0, 0, 0}, Field::get(2));
  auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
  CohomologySpace H = hh(C, 1);
  ASSERT_LT(H.cocycles.dim(), H.cochain_dim());
  // some unit vector falls outside the cocycles
  bool rejected = false;
  for (std::size_t i = 0; i < H.cochain_dim() && !rejected; ++i) {
    std::vector<Scalar> e(H.cochain_dim(), 0);
    e[i] = 1;
    if (H.is_cocycle(e)) continue;
    EXPECT_THROW(H.class_coords(e), NotACocycle);
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

// on a one-vertex algebra the degree-1 coboundaries are the commutators [a, -] read on the arrows
TEST(Classes, CoboundariesAreInnerDerivations) {
  for (const auto& [p, F] : support::property_grid()) {
    if (!is_local(p.family)) continue;
    auto inst = make_family(p, *F);
    auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
    CohomologySpace H = hh(C, 1);
    const AlgebraSpec& A = *inst.algebra;
    std::vector<std::vector<Scalar>> inner;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      std::vector<AlgElement> values;
      for (int arrow = 0; arrow < A.quiver().arrow_count(); ++arrow) {
        auto u = A.basis_element(i), v = A.normal_form(arrow_word(A.quiver(), arrow));
        auto uv = A.multiply(u, v), vu = A.multiply(v, u);
        for (std::size_t t = 0; t < uv.size(); ++t) uv[t] = F->sub(uv[t], vu[t]);
        values.push_back(uv);
      }
      inner.push_back(C->cochain_from_values(1, values));
    }
    EXPECT_EQ(Subspace::span(*F, H.cochain_dim(), inner), H.coboundaries) << describe(p, *F);
    EXPECT_EQ(H.coboundaries.dim(), A.dim() - center(A).dim()) << describe(p, *F);
  }
}

TEST(Fixtures, PublishedBasesCheckOut) {
  std::size_t with = 0;
  for (const auto& [p, F] : support::property_grid()) {
    auto inst = make_family(p, *F);
    auto C = std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
    CohomologySpace H = hh(C, 1);
    auto fx = attach_fixtures(H, p);
    if (!fx) continue;
    ++with;
    auto rep = fixture_check(H, p);
    EXPECT_TRUE(rep.ok()) << describe(p, *F) << "\n" << rep.summary();
    Matrix N = H.named_classes(fx->basis_names());
    EXPECT_EQ(N.cols(), H.dim()) << describe(p, *F);
    EXPECT_EQ(rank(N), H.dim()) << describe(p, *F);
  }
  EXPECT_GT(with, 40u);
}

}  // namespace
