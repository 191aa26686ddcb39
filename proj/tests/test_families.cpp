#include <gtest/gtest.h>

#include "hhlie/dsl.hpp"
#include "hhlie/families.hpp"
#include "hhlie/resolution.hpp"

using namespace hhlie;

namespace {

const std::vector<Family> all_families = {Family::D1A2,  Family::SD1A1, Family::SD1A2, Family::SD2B1,
                                          Family::SD2B2, Family::Q1A1,  Family::Q1A2,  Family::Q2B1};

TEST(Names, RoundTrip) {
  for (Family f : all_families) EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_FALSE(family_from_name("D3A1"));
  EXPECT_TRUE(is_local(Family::Q1A2));
  EXPECT_FALSE(is_local(Family::SD2B1));
  EXPECT_TRUE(is_quaternion(Family::Q2B1));
  EXPECT_FALSE(is_quaternion(Family::SD1A2));
  EXPECT_TRUE(uses_s(Family::SD2B2));
  EXPECT_FALSE(uses_s(Family::D1A2));
  EXPECT_TRUE(uses_d(Family::D1A2));
  EXPECT_FALSE(uses_c(Family::SD1A1));
  EXPECT_TRUE(uses_a(Family::Q2B1));
}

TEST(Instances, DescribeAndParse) {
  const Field& F4 = Field::get(2, 2);
  const std::vector<std::pair<FamilyParams, const Field*>> cases = {
      {{Family::D1A2, 3, 0, 0, 1, 0}, &Field::get(2)},  {{Family::SD1A2, 3, 0, 2, 3, 0}, &F4},
      {{Family::SD2B1, 2, 3, 1, 0, 0}, &Field::get(3)}, {{Family::Q2B1, 1, 3, 1, 0, 2}, &F4},
      {{Family::Q1A1, 4, 0, 0, 0, 0}, &Field::get(2)},
  };
  for (const auto& [p, F] : cases) {
    FamilyParams q = parse_instance(describe(p, *F), *F);
    EXPECT_EQ(q.family, p.family);
    EXPECT_EQ(q.k, p.k);
    if (uses_s(p.family)) {
      EXPECT_EQ(q.s, p.s);
    }
    if (uses_c(p.family)) {
      EXPECT_EQ(q.c, p.c);
    }
    if (uses_d(p.family)) {
      EXPECT_EQ(q.d, p.d);
    }
    if (uses_a(p.family)) {
      EXPECT_EQ(q.a, p.a);
    }
  }
  EXPECT_EQ(describe({Family::D1A2, 2, 0, 0, 1, 0}, Field::get(2)), "D1A2:k=2,d=1");
  EXPECT_THROW(parse_instance("D1A2:k=2,z=1", Field::get(2)), Error);
}

TEST(Parameters, Ranges) {
  const Field& F2 = Field::get(2);
  EXPECT_THROW(check_parameters({Family::SD1A2, 2, 0, 1, 1, 0}, Field::get(3)), WrongCharacteristic);
  EXPECT_THROW(check_parameters({Family::D1A2, 1, 0, 0, 0, 0}, F2), InvalidParameters);
  EXPECT_THROW(check_parameters({Family::D1A2, 2, 0, 0, 2, 0}, Field::get(2, 2)), InvalidParameters);
  EXPECT_THROW(check_parameters({Family::SD1A1, 2, 0, 1, 0, 0}, F2), InvalidParameters);
  EXPECT_THROW(check_parameters({Family::SD2B2, 2, 1, 0, 0, 0}, F2), InvalidParameters);
  EXPECT_NO_THROW(check_parameters({Family::SD2B2, 2, 2, 0, 0, 0}, F2));
  EXPECT_NO_THROW(check_parameters({Family::SD2B1, 2, 1, 0, 0, 0}, Field::get(5)));
  EXPECT_THROW(check_parameters({Family::Q2B1, 1, 3, 0, 0, 1}, Field::get(2, 2)), InvalidParameters);
  EXPECT_THROW(check_parameters({Family::Q2B1, 1, 3, 0, 0, 0}, Field::get(2, 2)), InvalidParameters);
  EXPECT_NO_THROW(check_parameters({Family::Q2B1, 1, 4, 0, 0, 1}, Field::get(2, 2)));
  EXPECT_NO_THROW(check_parameters({Family::Q2B1, 2, 3, 0, 0, 1}, Field::get(3)));
  EXPECT_THROW(make_family({Family::Q1A2, 2, 0, 1, 1, 0}, Field::get(5)), WrongCharacteristic);
}

// basis size and centre by the published closed forms, across wide parameter ranges
TEST(Construction, LocalFamiliesOverGF2AndGF4) {
  for (Family f : {Family::D1A2, Family::SD1A1, Family::SD1A2, Family::Q1A1, Family::Q1A2})
    for (unsigned m : {1u, 2u}) {
      const Field& F = Field::get(2, m);
      for (int k = 2; k <= 5; ++k)
        for (Scalar c = 0; c < F.order(); ++c)
          for (Scalar d = 0; d < F.order(); ++d) {
            FamilyParams p{f, k, 0, c, d, 0};
            try {
              check_parameters(p, F);
            } catch (const InvalidParameters&) {
              continue;
            }
            auto inst = make_family(p, F);
            const std::string who = describe(p, F);
            EXPECT_EQ(inst.algebra->dim(), std::size_t(4 * k)) << who;
            EXPECT_TRUE(validate(*inst.algebra, {.exhaustive_limit = 12, .samples = 5000}).ok()) << who;
            EXPECT_EQ(center(*inst.algebra).dim(), std::size_t(k + 3)) << who;
            EXPECT_TRUE(inst.resolution) << who;
          }
    }
}

TEST(Construction, TwoVertexFamilies) {
  for (Family f : {Family::SD2B1, Family::SD2B2, Family::Q2B1})
    for (const Field* F : {&Field::get(2), &Field::get(3), &Field::get(2, 2)})
      for (int k = 1; k <= 3; ++k)
        for (int s = 1; s <= 5; ++s)
          for (Scalar c : {0, 1}) {
            FamilyParams p{f, k, s, c, 0, Scalar(F->order() > 2 ? 2 : 1)};
            try {
              check_parameters(p, *F);
            } catch (const InvalidParameters&) {
              continue;
            }
            auto inst = make_family(p, *F);
            const std::string who = describe(p, *F);
            EXPECT_EQ(inst.algebra->dim(), std::size_t(9 * k + s)) << who;
            EXPECT_TRUE(validate(*inst.algebra, {.exhaustive_limit = 12, .samples = 5000}).ok()) << who;
            EXPECT_EQ(center(*inst.algebra).dim(), std::size_t(k + s + 2)) << who;
            EXPECT_EQ(bool(inst.resolution), f != Family::Q2B1) << who;
            EXPECT_EQ(inst.algebra->quiver().vertex_count(), 2);
          }
}

TEST(Construction, EmittedTextIsTheInstanceText) {
  FamilyParams p{Family::SD1A2, 2, 0, 1, 0, 0};
  auto inst = make_family(p, Field::get(2));
  EXPECT_EQ(inst.dsl, family_dsl(p, Field::get(2)));
  EXPECT_NE(inst.dsl.find("field GF(2)"), std::string::npos);
}

TEST(ClosedForms, SpotValues) {
  const Field& F2 = Field::get(2);
  EXPECT_EQ(expected_hh_dim({Family::D1A2, 2, 0, 0, 0, 0}, F2, 1), 8u);
  EXPECT_EQ(expected_hh_dim({Family::D1A2, 2, 0, 0, 1, 0}, F2, 1), 7u);
  EXPECT_EQ(expected_hh_dim({Family::D1A2, 3, 0, 0, 0, 0}, F2, 0), 6u);
  EXPECT_EQ(expected_hh_dim({Family::SD2B1, 2, 3, 1, 0, 0}, F2, 1), 7u);
  EXPECT_EQ(expected_hh_dim({Family::SD2B1, 3, 3, 0, 0, 0}, Field::get(3), 1), 8u);
  EXPECT_EQ(expected_hh_dim({Family::SD2B2, 2, 2, 0, 0, 0}, F2, 1), 7u);
  EXPECT_EQ(expected_hh_dim({Family::Q1A2, 2, 0, 1, 0, 0}, F2, 4), 5u);
  EXPECT_EQ(expected_hh_dim({Family::Q1A2, 3, 0, 1, 0, 0}, F2, 2), 7u);
  EXPECT_FALSE(expected_hh_dim({Family::SD1A2, 2, 0, 1, 0, 0}, F2, 2));
  // 2ks - k - s and 2ks/3
  EXPECT_EQ(g_lambda_parameter({Family::SD2B2, 2, 3, 0, 0, 0}, Field::get(5)), 2);
  EXPECT_EQ(g_lambda_parameter({Family::SD2B1, 2, 3, 0, 0, 0}, Field::get(5)), 4);
  EXPECT_THROW(g_lambda_parameter({Family::D1A2, 2, 0, 0, 0, 0}, F2), InvalidParameters);
}

}  // namespace
