#include <gtest/gtest.h>

#include <json.hpp>

#include "bracket_tables.hpp"
#include "hhlie/oracle.hpp"
#include "support.hpp"

using namespace hhlie;

namespace {

LieAlgebra sl2(const Field& F) {
  // e, f, h
  LieAlgebra L(F, 3);
  L.set_bracket(2, 0, {2, 0, 0});
  L.set_bracket(2, 1, {0, F.neg(2), 0});
  L.set_bracket(0, 1, {0, 0, 1});
  return L;
}

LieAlgebra heisenberg(const Field& F) {
  LieAlgebra L(F, 3);
  L.set_bracket(0, 1, {0, 0, 1});
  return L;
}

// [a, b] = b
LieAlgebra affine_line(const Field& F) {
  LieAlgebra L(F, 2);
  L.set_bracket(0, 1, {0, 1});
  return L;
}

// own span of brackets, lower central series and nilpotency
Subspace brackets_of(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) out.push_back(L.bracket(A.vector(i), B.vector(j)));
  return Subspace::span(L.field(), L.dim(), out);
}

bool nilpotent_sub(const LieAlgebra& L, const Subspace& I) {
  Subspace cur = I;
  for (std::size_t step = 0; step <= L.dim(); ++step) {
    if (cur.dim() == 0) return true;
    cur = brackets_of(L, I, cur);
  }
  return false;
}

Subspace ideal_of(const LieAlgebra& L, const std::vector<Scalar>& x) {
  Subspace cur = Subspace::span(L.field(), L.dim(), {x});
  const Subspace all = Subspace::whole(L.field(), L.dim());
  for (;;) {
    Subspace next = cur.sum(brackets_of(L, all, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

// trace(ad x ad y) straight from the structure constants
Matrix killing_by_hand(const LieAlgebra& L) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  Matrix K(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar tr = 0;
      // coefficient of b_t in [b_i, [b_j, b_t]]
      for (std::size_t t = 0; t < n; ++t) {
        const auto& inner = L.bracket_basis(j, t);
        for (std::size_t u = 0; u < n; ++u)
          if (inner[u]) tr = F.add(tr, F.mul(inner[u], L.bracket_basis(i, u)[t]));
      }
      K(i, j) = tr;
    }
  return K;
}

TEST(SmallAlgebras, Sl2) {
  const Field& F = Field::get(5);
  LieAlgebra L = sl2(F);
  EXPECT_TRUE(L.check().ok());
  EXPECT_EQ(derived(L, 1).dim(), 3u);
  EXPECT_EQ(lower_central(L, 1).dim(), 3u);
  EXPECT_FALSE(is_nilpotent(L));
  EXPECT_EQ(lie_center(L).dim(), 0u);
  EXPECT_EQ(killing_rank(L), 3u);
  auto N = nilradical(L);
  ASSERT_TRUE(N.ideal);
  EXPECT_EQ(N.ideal->dim(), 0u);
  // derivations of sl2 are inner
  EXPECT_EQ(gen_derivations(L, 1, 1, 1), 3u);
}

TEST(SmallAlgebras, HeisenbergAndAffineLine) {
  const Field& F = Field::get(3);
  LieAlgebra H = heisenberg(F);
  EXPECT_TRUE(H.check().ok());
  EXPECT_EQ(lower_central(H, 1).dim(), 1u);
  EXPECT_EQ(lower_central(H, 2).dim(), 0u);
  EXPECT_TRUE(is_nilpotent(H));
  EXPECT_EQ(lie_center(H).dim(), 1u);
  EXPECT_EQ(killing_rank(H), 0u);
  EXPECT_EQ(nilradical(H).ideal->dim(), 3u);
  LieAlgebra Q = H.quotient(lie_center(H));
  EXPECT_EQ(Q, LieAlgebra(F, 2));

  LieAlgebra A = affine_line(F);
  EXPECT_EQ(derived(A, 1).dim(), 1u);
  EXPECT_EQ(derived(A, 2).dim(), 0u);
  EXPECT_FALSE(is_nilpotent(A));
  EXPECT_EQ(killing_rank(A), 1u);
  auto N = nilradical(A);
  ASSERT_TRUE(N.ideal);
  EXPECT_EQ(*N.ideal, Subspace::span(F, 2, {{0, 1}}));
}

TEST(SmallAlgebras, GeneralisedDerivationsOfAbelian) {
  // every linear map satisfies the identity when all brackets vanish
  for (std::size_t n : {1u, 3u, 4u}) EXPECT_EQ(gen_derivations(LieAlgebra(Field::get(3), n), 2, 1, 1), n * n);
}

TEST(SmallAlgebras, JacobiFailureIsReported) {
  const Field& F = Field::get(3);
  LieAlgebra L(F, 3);
  L.set_bracket(0, 1, {0, 0, 1});
  L.set_bracket(1, 2, {1, 0, 0});
  L.set_bracket(0, 2, {1, 0, 0});
  EXPECT_FALSE(L.check().ok());
}

TEST(Json, RoundTripAndExtraKeys) {
  const Field& F = Field::get(2, 2);
  LieAlgebra L = g_lambda(F, 2, 3, 3);
  EXPECT_EQ(LieAlgebra::from_json(L.to_json()), L);
  auto j = nlohmann::json::parse(L.to_json());
  j["comment"] = "ignored";
  EXPECT_EQ(LieAlgebra::from_json(j.dump()), L);
  EXPECT_THROW(LieAlgebra::from_json("{\"dim\": 2}"), std::exception);
}

TEST(BasisChange, IsAnIsomorphism) {
  std::mt19937_64 rng(23);
  const Field& F = Field::get(5);
  LieAlgebra L = g_lambda(F, 2, 3, 2);
  for (int t = 0; t < 10; ++t) {
    Matrix P = support::random_invertible(F, L.dim(), rng);
    LieAlgebra M = L.change_basis(P);
    EXPECT_TRUE(M.check().ok());
    EXPECT_TRUE(verify_iso(M, L, P));
    EXPECT_EQ(fingerprint(M, {1, 2, 3}).to_text(F), fingerprint(L, {1, 2, 3}).to_text(F));
  }
  Matrix bad = Matrix::identity(F, L.dim());
  bad(0, 0) = 2;
  EXPECT_FALSE(verify_iso(L, L, bad));
}

TEST(Killing, FormAgainstHandTraces) {
  EXPECT_EQ(killing_form(sl2(Field::get(5))), killing_by_hand(sl2(Field::get(5))));
  for (const auto& [p, F] : support::property_grid()) {
    auto b = support::build(p, *F);
    EXPECT_EQ(killing_form(b.lie), killing_by_hand(b.lie)) << describe(p, *F);
    EXPECT_EQ(killing_rank(b.lie), rank(killing_by_hand(b.lie)));
  }
}

// over GF(2), x lies in the nilradical iff the ideal it generates is nilpotent
TEST(Nilradical, BruteForceOverGF2) {
  std::size_t compared = 0;
  for (const auto& [p, F] : support::property_grid()) {
    if (F->order() != 2) continue;
    auto b = support::build(p, *F);
    if (b.lie.dim() > 11) continue;
    std::vector<std::vector<Scalar>> members;
    const std::size_t n = b.lie.dim();
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      std::vector<Scalar> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = (bits >> i) & 1;
      if (nilpotent_sub(b.lie, ideal_of(b.lie, x))) members.push_back(x);
    }
    Subspace want = Subspace::span(*F, n, members);
    auto N = nilradical(b.lie);
    ASSERT_TRUE(N.ideal) << describe(p, *F);
    EXPECT_EQ(*N.ideal, want) << describe(p, *F);
    ++compared;
  }
  EXPECT_GT(compared, 10u);
}

TEST(LowerCentral, AgainstOwnSeries) {
  for (const auto& [p, F] : support::property_grid()) {
    auto b = support::build(p, *F);
    const Subspace all = Subspace::whole(*F, b.lie.dim());
    Subspace cur = all, der = all;
    for (std::size_t i = 1; i <= 4; ++i) {
      cur = brackets_of(b.lie, all, cur);
      der = brackets_of(b.lie, der, der);
      EXPECT_EQ(lower_central(b.lie, i), cur) << describe(p, *F) << " L" << i;
      EXPECT_EQ(derived(b.lie, i), der) << describe(p, *F) << " D" << i;
    }
  }
}

TEST(Brackets, CocyclesExtendToRelations) {
  std::mt19937_64 rng(29);
  for (const auto& [p, F] : support::property_grid()) {
    auto b = support::build(p, *F);
    const AlgebraSpec& A = *b.algebra;
    for (int t = 0; t < 3; ++t) {
      auto f = b.H.representative(support::random_vector(*F, b.H.dim(), rng));
      auto values = b.complex->cochain_values(1, f);
      for (const PathExpr& rel : A.relations()) {
        AlgElement sum = A.zero();
        for (const Term& term : rel.terms()) F->axpy(sum, term.coeff, xi_extend(A, values, term.word));
        EXPECT_TRUE(std::all_of(sum.begin(), sum.end(), [](Scalar v) { return v == 0; })) << describe(p, *F);
      }
    }
  }
}

TEST(Brackets, IndependentOfRepresentatives) {
  std::mt19937_64 rng(31);
  for (const auto& [p, F] : support::property_grid()) {
    auto b = support::build(p, *F);
    if (b.algebra->dim() > 20) continue;
    const auto& H = b.H;
    for (int t = 0; t < 3; ++t) {
      auto x = support::random_vector(*F, H.dim(), rng), y = support::random_vector(*F, H.dim(), rng);
      auto f = H.representative(x), g = H.representative(y);
      auto db = H.coboundaries.combine(support::random_vector(*F, H.coboundaries.dim(), rng));
      F->axpy(f, 1, db);
      auto br = cochain_bracket(*b.complex, f, g);
      ASSERT_TRUE(H.is_cocycle(br)) << describe(p, *F);
      EXPECT_EQ(H.class_coords(br), class_bracket(H, x, y)) << describe(p, *F);
      EXPECT_EQ(class_bracket(H, x, y), b.lie.bracket(x, y));
    }
  }
}

TEST(Brackets, JacobiOnEveryGridInstance) {
  for (const auto& [p, F] : support::property_grid()) {
    auto b = support::build(p, *F);
    EXPECT_TRUE(b.lie.check().ok()) << describe(p, *F);
  }
}

TEST(Brackets, PublishedTablesWhereTheyHold) {
  std::size_t compared = 0;
  for (const auto& [p, F] : support::property_grid()) {
    if (is_quaternion(p.family)) continue;  // see the quaternion notes in the README
    auto T = tables::table_for(p, *F);
    if (!T) continue;
    auto b = support::build(p, *F);
    if (b.names.empty()) continue;
    auto bad = tables::compare(b.H, b.names, *T);
    for (const auto& m : bad)
      ADD_FAILURE() << describe(p, *F) << ": [" << m.x << "," << m.y << "] expected " << m.expected << ", got "
                    << m.got;
    ++compared;
  }
  EXPECT_GT(compared, 30u);
}

TEST(Oracle, AgreesWithResolution) {
  for (const auto& [p, F] : support::property_grid()) {
    auto b = support::build(p, *F);
    if (b.algebra->dim() > 24) continue;
    auto r = hh1_oracle(b.H);
    EXPECT_EQ(r.dim, b.H.dim()) << describe(p, *F);
    EXPECT_TRUE(verify_iso(r.lie, b.lie, r.transfer)) << describe(p, *F);
  }
}

TEST(Distinguish, KnownPairs) {
  const Field& F2 = Field::get(2);
  auto a = support::build({Family::D1A2, 2, 0, 0, 0, 0}, F2), b = support::build({Family::D1A2, 2, 0, 0, 1, 0}, F2);
  EXPECT_EQ(distinguish(a.lie, b.lie), "distinguished by dim HH¹ (8 vs 7)");
  auto c = support::build({Family::SD1A2, 3, 0, 0, 1, 0}, F2), d = support::build({Family::SD1A2, 3, 0, 1, 1, 0}, F2);
  EXPECT_EQ(distinguish(c.lie, d.lie), "distinguished by dim L² (0 vs 2)");
  EXPECT_EQ(distinguish(a.lie, a.lie), "inconclusive");
}

TEST(SixDimensional, ShapeAndProbes) {
  const Field& F = Field::get(5);
  LieAlgebra G = g_lambda(F, 2, 3, 4);
  EXPECT_EQ(G.dim(), 6u);
  EXPECT_TRUE(G.check().ok());
  // [e0, e_i] = nu_i e_i with nu = (s, 2s, k, 2k, lambda)
  const Scalar nu[] = {3, 1, 2, 4, 4};
  for (std::size_t i = 1; i <= 5; ++i) {
    std::vector<Scalar> want(6, 0);
    want[i] = nu[i - 1];
    EXPECT_EQ(G.bracket_basis(0, i), want);
  }
  // s/l, 2s/l, k/l, 2k/l with l = 4: 3*4^-1 = 2, 6*4^-1 = 4, 2*4^-1 = 3, 4*4^-1 = 1
  auto E = e_set(F, 2, 3, 4);
  for (Scalar x : {Scalar(2), Scalar(4), Scalar(3), Scalar(1)}) EXPECT_NE(std::find(E.begin(), E.end(), x), E.end());
}

}  // namespace
