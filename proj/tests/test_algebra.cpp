#include <gtest/gtest.h>

#include <random>

#include "hhlie/dsl.hpp"
#include "hhlie/families.hpp"

using namespace hhlie;

namespace {

std::shared_ptr<const AlgebraSpec> family(Family f, int k, int s, Scalar c, Scalar d, const Field& F, Scalar a = 0) {
  return make_family({f, k, s, c, d, a}, F).algebra;
}

AlgElement nf(const AlgebraSpec& A, const std::string& expr) {
  return A.normal_form(parse_path_expr(A.quiver(), A.field(), expr, {}, {}));
}


bool is_zero(const AlgElement& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

// every element of a GF(2)-algebra as a coordinate vector
std::vector<AlgElement> all_elements(const AlgebraSpec& A) {
  std::vector<AlgElement> out;
  const std::size_t n = A.dim();
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    AlgElement v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i) & 1;
    out.push_back(v);
  }
  return out;
}

std::size_t log2_count(std::size_t n) {
  std::size_t r = 0;
  while ((std::size_t(1) << r) < n) ++r;
  return r;
}

TEST(NormalForm, PublishedRelations) {
  const Field& F = Field::get(2);
  auto D = family(Family::D1A2, 3, 0, 0, 1, F);
  EXPECT_EQ(nf(*D, "x^2"), nf(*D, "(x*y)^3"));
  EXPECT_EQ(nf(*D, "y^2"), nf(*D, "(x*y)^3"));
  EXPECT_EQ(nf(*D, "e_1*x"), nf(*D, "x"));
  EXPECT_EQ(D->dim(), 12u);
  auto S = family(Family::SD1A2, 3, 0, 1, 1, F);
  EXPECT_TRUE(is_zero(nf(*S, "y*(x*y)^3")));
  EXPECT_TRUE(is_zero(nf(*S, "x*y^2")));
  auto Q = family(Family::Q1A2, 2, 0, 1, 1, Field::get(2, 2));
  EXPECT_TRUE(is_zero(Q->multiply(nf(*Q, "x"), nf(*Q, "x^3"))));
  EXPECT_TRUE(is_zero(nf(*Q, "x^2*y")));
}

TEST(NormalForm, IdempotentOnBasisAndIndependentOfStrategy) {
  const Field& F = Field::get(2, 2);
  std::mt19937_64 rng(5);
  for (auto A : {family(Family::SD1A2, 3, 0, 2, 3, F), family(Family::Q1A2, 3, 0, 2, 1, F),
                 family(Family::SD2B1, 2, 3, 1, 0, F), family(Family::SD2B2, 3, 3, 1, 0, F)}) {
    for (std::size_t i = 0; i < A->dim(); ++i) EXPECT_EQ(A->normal_form(A->basis()[i]), A->basis_element(i));
    const Quiver& Q = A->quiver();
    for (int t = 0; t < 1000; ++t) {
      // random path of length up to 2 * nilpotency
      std::uniform_int_distribution<int> len(1, 2 * A->nilpotency().value_or(8));
      PathWord w = idempotent(int(rng() % Q.vertex_count()));
      for (int l = len(rng); l > 0; --l) {
        std::vector<int> out;
        for (int a = 0; a < Q.arrow_count(); ++a)
          if (Q.arrows()[a].source == w.target) out.push_back(a);
        if (out.empty()) break;
        int a = out[rng() % out.size()];
        w.letters += char(a);
        w.target = Q.arrows()[a].target;
      }
      auto left = A->normal_form(w);
      EXPECT_EQ(A->normal_form(w, Strategy::Random, &rng), left) << to_string(Q, w);
      EXPECT_EQ(A->evaluate_letters(w), left) << to_string(Q, w);
    }
  }
}

TEST(Multiply, AssociativeWithUnitOnSmallAlgebra) {
  auto A = family(Family::D1A2, 2, 0, 0, 0, Field::get(2));
  ASSERT_EQ(A->dim(), 8u);
  const AlgElement one = A->unit();
  for (std::size_t i = 0; i < 8; ++i) {
    auto bi = A->basis_element(i);
    EXPECT_EQ(A->multiply(one, bi), bi);
    EXPECT_EQ(A->multiply(bi, one), bi);
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        auto bj = A->basis_element(j), bk = A->basis_element(k);
        ASSERT_EQ(A->multiply(A->multiply(bi, bj), bk), A->multiply(bi, A->multiply(bj, bk)));
      }
  }
  EXPECT_EQ(A->multiply(nf(*A, "x"), nf(*A, "y")), nf(*A, "x*y"));
}

TEST(Validate, FamiliesPassAndDimensionsMatch) {
  const Field& F2 = Field::get(2);
  for (int k = 2; k <= 4; ++k) {
    for (Family f : {Family::D1A2, Family::SD1A1, Family::SD1A2, Family::Q1A1, Family::Q1A2}) {
      auto A = family(f, k, 0, f == Family::D1A2 || f == Family::SD1A1 || f == Family::Q1A1 ? 0 : 1, 1 * (f != Family::SD1A1 && f != Family::Q1A1), F2);
      EXPECT_EQ(A->dim(), std::size_t(4 * k)) << A->name();
      EXPECT_TRUE(validate(*A).ok()) << validate(*A).summary();
    }
  }
  for (auto [k, s] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 2}, {3, 3}})
    for (Family f : {Family::SD2B1, Family::SD2B2}) {
      auto A = family(f, k, s, 1, 0, F2);
      EXPECT_EQ(A->dim(), std::size_t(9 * k + s));
      EXPECT_TRUE(validate(*A).ok()) << validate(*A).summary();
    }
  auto A = family(Family::SD2B1, 2, 3, 0, 0, F2);
  EXPECT_EQ(A->dim(), 21u);
}

TEST(Validate, DroppedRuleIsReported) {
  auto in = parse_qalg_input(family_dsl({Family::D1A2, 2, 0, 0, 0, 0}, Field::get(2)));
  // drop x^2 -> (xy)^k: x^2 becomes a basis word and the count is off
  in.rules.erase(in.rules.begin());
  in.relations.erase(in.relations.begin());
  bool failed = false;
  try {
    AlgebraSpec A(in);
    failed = !validate(A).ok();
  } catch (const Error&) {
    failed = true;
  }
  EXPECT_TRUE(failed);
}

TEST(Centre, BruteForceOverGF2) {
  for (auto A : {family(Family::D1A2, 2, 0, 0, 0, Field::get(2)), family(Family::SD1A1, 2, 0, 0, 0, Field::get(2)),
                 family(Family::Q1A2, 2, 0, 1, 0, Field::get(2))}) {
    std::size_t central = 0;
    for (const auto& z : all_elements(*A)) {
      bool ok = true;
      for (std::size_t i = 0; i < A->dim() && ok; ++i)
        ok = A->multiply(z, A->basis_element(i)) == A->multiply(A->basis_element(i), z);
      central += ok;
    }
    EXPECT_EQ(center(*A).dim(), log2_count(central));
    EXPECT_TRUE(center(*A).contains(A->unit()));
  }
}

TEST(Centre, ClosedForms) {
  for (int k = 2; k <= 4; ++k)
    for (Family f : {Family::D1A2, Family::SD1A2, Family::Q1A2})
      EXPECT_EQ(center(*family(f, k, 0, f == Family::D1A2 ? 0 : 1, 1, Field::get(2))).dim(), std::size_t(k + 3));
  EXPECT_EQ(center(*family(Family::SD2B2, 2, 3, 1, 0, Field::get(2))).dim(), 7u);
  EXPECT_EQ(center(*family(Family::SD2B1, 3, 2, 0, 0, Field::get(3))).dim(), 7u);
  auto T = parse_qalg("field GF(2)\nquiver { vertices: 1; arrows: t: 1 -> 1 }\nrelations { t^3 }\n");
  EXPECT_EQ(T->dim(), 3u);
  EXPECT_EQ(center(*T).dim(), 3u);
  EXPECT_EQ(commutator_space(*T).dim(), 0u);
}

TEST(Commutators, PairEnumeration) {
  auto A = family(Family::D1A2, 2, 0, 0, 0, Field::get(2));
  std::vector<std::vector<Scalar>> diffs;
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = 0; j < A->dim(); ++j) {
      auto a = A->multiply(A->basis_element(i), A->basis_element(j));
      auto b = A->multiply(A->basis_element(j), A->basis_element(i));
      for (std::size_t t = 0; t < a.size(); ++t) a[t] ^= b[t];
      diffs.push_back(a);
    }
  EXPECT_EQ(commutator_space(*A), Subspace::span(Field::get(2), A->dim(), diffs));
  auto xy = A->multiply(nf(*A, "x"), nf(*A, "y"));
  auto yx = A->multiply(nf(*A, "y"), nf(*A, "x"));
  for (std::size_t t = 0; t < xy.size(); ++t) xy[t] ^= yx[t];
  EXPECT_TRUE(commutator_space(*A).contains(xy));
}

TEST(SymmetrizingForm, SymmetricNondegenerate) {
  const Field& F4 = Field::get(2, 2);
  std::vector<std::shared_ptr<const AlgebraSpec>> algs = {
      family(Family::D1A2, 3, 0, 0, 1, Field::get(2)), family(Family::SD1A2, 3, 0, 2, 3, F4),
      family(Family::Q1A2, 2, 0, 2, 3, F4),           family(Family::SD2B1, 2, 3, 1, 0, Field::get(3)),
      family(Family::SD2B2, 3, 3, 1, 0, Field::get(5)), family(Family::Q2B1, 1, 3, 1, 0, F4, 2)};
  for (const auto& A : algs) {
    auto form = symmetrizing_form(*A);
    EXPECT_EQ(form.gram, form.gram.transpose()) << A->name();
    EXPECT_EQ(rank(form.gram), A->dim()) << A->name();
  }
  auto D = algs[0];
  auto form = symmetrizing_form(*D);
  auto pair = [&](const std::string& a, const std::string& b) {
    auto prod = D->multiply(nf(*D, a), nf(*D, b));
    Scalar v = 0;
    for (std::size_t i = 0; i < prod.size(); ++i) v = D->field().add(v, D->field().mul(prod[i], form.lambda[i]));
    return v;
  };
  EXPECT_EQ(pair("e_1", "(x*y)^3"), 1);
  EXPECT_EQ(pair("x", "y*(x*y)^2"), 1);
}

TEST(Kulshammer, BruteForceT1OverGF2) {
  for (auto A : {family(Family::D1A2, 2, 0, 0, 0, Field::get(2)), family(Family::SD1A1, 2, 0, 0, 0, Field::get(2))}) {
    Subspace K = commutator_space(*A);
    std::size_t count = 0;
    for (const auto& x : all_elements(*A)) count += K.contains(A->multiply(x, x));
    Subspace T = kulshammer_T(*A, 1);
    EXPECT_EQ(T.dim(), log2_count(count));
    EXPECT_TRUE(T.contains(K));
    Subspace P = kulshammer_T_perp(*A, 1);
    EXPECT_TRUE(center(*A).contains(P));
    EXPECT_EQ(stable_center_quotient_dim(*A), center(*A).dim() - P.dim());
    // T1 perp is an ideal of the centre
    Subspace Z = center(*A);
    for (std::size_t i = 0; i < Z.dim(); ++i)
      for (std::size_t j = 0; j < P.dim(); ++j) EXPECT_TRUE(P.contains(A->multiply(Z.vector(i), P.vector(j))));
  }
}

TEST(Kulshammer, TruncatedPolynomialRing) {
  // commutative, so T_n is where x^(2^n) vanishes: (a + bt + ...)^2 = a + bt^2, ^4 = a
  auto A = parse_qalg("field GF(2)\nquiver { vertices: 1; arrows: t: 1 -> 1 }\nrelations { t^4 }\nsocle { 1: t^3 }\n");
  EXPECT_EQ(kulshammer_T(*A, 1).dim(), 2u);
  EXPECT_EQ(kulshammer_T_perp(*A, 1).dim(), 2u);
  EXPECT_EQ(stable_center_quotient_dim(*A), 2u);
  EXPECT_EQ(kulshammer_T(*A, 2).dim(), 3u);
}

}  // namespace
