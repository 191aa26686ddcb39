#include <gtest/gtest.h>

#include "hhlie/dsl.hpp"
#include "hhlie/families.hpp"
#include "hhlie/resolution.hpp"

using namespace hhlie;

namespace {

struct Case {
  FamilyParams p;
  const Field* F;
};

std::shared_ptr<const BimoduleComplex> complex_for(const Case& c) {
  auto inst = make_family(c.p, *c.F);
  return std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
}

const std::vector<Case> small_cases = {
    {{Family::D1A2, 2, 0, 0, 0, 0}, &Field::get(2)},   {{Family::D1A2, 3, 0, 0, 1, 0}, &Field::get(2)},
    {{Family::SD1A1, 2, 0, 0, 0, 0}, &Field::get(2)},  {{Family::SD1A2, 2, 0, 1, 1, 0}, &Field::get(2)},
    {{Family::SD1A2, 3, 0, 2, 0, 0}, &Field::get(2, 2)}, {{Family::Q1A1, 2, 0, 0, 0, 0}, &Field::get(2)},
    {{Family::Q1A2, 2, 0, 1, 0, 0}, &Field::get(2)},   {{Family::Q1A2, 3, 0, 0, 1, 0}, &Field::get(2)},
    {{Family::SD2B1, 2, 2, 1, 0, 0}, &Field::get(3)},  {{Family::SD2B2, 2, 2, 0, 0, 0}, &Field::get(2)},
};

TEST(Resolution, ChecksPassOnFamilies) {
  for (const auto& c : small_cases) {
    auto C = complex_for(c);
    const std::string who = describe(c.p, *c.F);
    auto a = check_complex(*C), b = check_exactness(*C), m = check_minimality(*C);
    EXPECT_TRUE(a.ok()) << who << "\n" << a.summary();
    EXPECT_TRUE(b.ok()) << who << "\n" << b.summary();
    EXPECT_TRUE(m.ok()) << who << "\n" << m.summary();
  }
}

// d o d = 0 and exactness straight from the full matrices
TEST(Resolution, FullMapsComposeToZeroAndAreExact) {
  for (const auto& c : small_cases) {
    auto C = complex_for(c);
    if (C->algebra().dim() > 12) continue;
    const int top = C->resolution().top();
    std::vector<std::size_t> rk;
    for (int n = 0; n <= top; ++n) rk.push_back(rank(C->full_differential(n)));
    EXPECT_EQ(rk[0], C->algebra().dim());
    for (int n = 1; n <= top; ++n)
      EXPECT_TRUE((C->full_differential(n - 1) * C->full_differential(n)).is_zero()) << describe(c.p, *c.F);
    for (int n = 0; n < top; ++n) EXPECT_EQ(C->full_dim(n) - rk[n], rk[n + 1]) << describe(c.p, *c.F) << " at " << n;
  }
}

// generator counts are the mod-2 cohomology of the defect groups:
// dihedral n + 1, semidihedral 1, 2, 2, quaternion 1, 2, 2, 1 repeating
TEST(Resolution, GeneratorCounts) {
  auto count = [](const Case& c, int n) { return complex_for(c)->resolution().summands_at(n).size(); };
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(count(small_cases[0], n), std::size_t(n + 1));
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(count(small_cases[3], n), std::size_t(n == 0 ? 1 : 2));
  const std::size_t quat[] = {1, 2, 2, 1, 1, 2, 2, 1, 1};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(count(small_cases[6], n), quat[n]) << n;
  // two vertices, four arrows
  EXPECT_EQ(count(small_cases[8], 0), 2u);
  EXPECT_EQ(count(small_cases[8], 1), 4u);
}

TEST(Resolution, ExtBetweenSimplesMatchesGenerators) {
  for (const auto& c : small_cases) {
    auto C = complex_for(c);
    for (int n = 0; n < C->resolution().top(); ++n) {
      auto ext = ext_between_simples(*C, n);
      std::vector<std::vector<std::size_t>> count(ext.size(), std::vector<std::size_t>(ext.size(), 0));
      for (const Summand& s : C->resolution().summands_at(n)) ++count[s.left][s.right];
      EXPECT_EQ(ext, count) << describe(c.p, *c.F) << " degree " << n;
    }
  }
}

TEST(Resolution, Availability) {
  auto Q = complex_for(small_cases[6]);
  EXPECT_TRUE(Q->resolution().periodic);
  EXPECT_TRUE(Q->resolution().available(11));
  auto D = complex_for(small_cases[0]);
  EXPECT_FALSE(D->resolution().periodic);
  EXPECT_TRUE(D->resolution().available(2));
  EXPECT_FALSE(D->resolution().available(3));
  EXPECT_FALSE(D->resolution().available(-1));
  EXPECT_FALSE(make_family({Family::Q2B1, 1, 3, 1, 0, 2}, Field::get(2, 2)).resolution);
}

TEST(Resolution, HomDimensionsAreBlockSizes) {
  for (const auto& c : small_cases) {
    auto C = complex_for(c);
    const AlgebraSpec& A = C->algebra();
    for (int n = 0; n <= C->resolution().top(); ++n) {
      std::size_t want = 0;
      for (const Summand& s : C->resolution().summands_at(n)) want += A.block(s.left, s.right).size();
      EXPECT_EQ(C->hom_dim(n), want);
      if (n > 0) {
        EXPECT_EQ(C->induced(n).cols(), C->hom_dim(n - 1));
        EXPECT_EQ(C->induced(n).rows(), C->hom_dim(n));
      }
    }
  }
}

TEST(Resolution, CochainValuesRoundTrip) {
  auto C = complex_for(small_cases[8]);
  for (int n = 0; n <= 2; ++n) {
    std::vector<Scalar> x(C->hom_dim(n));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = Scalar(i % 3);
    EXPECT_EQ(C->cochain_from_values(n, C->cochain_values(n, x)), x);
  }
}

TEST(Resolution, GenericResolutionOfTruncatedPolynomials) {
  auto A = parse_qalg("field GF(3)\nquiver { vertices: 1; arrows: t: 1 -> 1 }\nrelations { t^3 }\n");
  auto R = std::make_shared<const ResolutionSpec>(generic_resolution(*A, A->relations()));
  BimoduleComplex C(A, R);
  EXPECT_EQ(R->top(), 2);
  EXPECT_TRUE(check_complex(C).ok()) << check_complex(C).summary();
  EXPECT_TRUE(check_exactness(C).ok()) << check_exactness(C).summary();
  EXPECT_TRUE(check_minimality(C).ok());
  // derivative of t^3: t^2 (x) 1 + t (x) t + 1 (x) t^2
  auto img = C.generator_image(2, 0);
  std::size_t nonzero = 0;
  for (Scalar v : img) nonzero += v != 0;
  EXPECT_EQ(nonzero, 3u);
}

TEST(Resolution, BrokenDifferentialIsCaught) {
  auto inst = make_family({Family::D1A2, 2, 0, 0, 0, 0}, Field::get(2));
  ResolutionSpec R = *inst.resolution;
  // drop one term of a degree-2 image
  auto& img = R.differentials[2][0];
  ASSERT_FALSE(img.empty());
  img.pop_back();
  BimoduleComplex C(inst.algebra, std::make_shared<const ResolutionSpec>(R));
  EXPECT_FALSE(check_complex(C).ok());
}

}  // namespace
