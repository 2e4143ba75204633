#include <catch_amalgamated.hpp>

#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/permcat.hpp"
#include "rigcomp/thomason.hpp"

using namespace rigcomp;

TEST_CASE("finite sets with the shuffle twist are permutative for n <= 4") {
  Bound b;
  b.entry_max = 4;
  b.tuple_max = 1000000;
  auto r = check_permutative(FinSets{}, b);
  CHECK(r.ok());
  CHECK(r.total_checked() > 10000);
}

TEST_CASE("discrete commutative monoids are permutative") {
  CHECK(check_permutative(boolean_rig(), Bound{}).ok());
  CHECK(check_permutative(z2_ring(), Bound{}).ok());
}

TEST_CASE("identity twist on finite sets breaks naturality") {
  Bound b;
  b.entry_max = 3;
  auto r = check_permutative(FinSets(FinSets::Corruption::twist_identity), b);
  REQUIRE_FALSE(r.ok());
  CHECK(r.total_failed() > 0);
}

TEST_CASE("the identity functor is strict symmetric monoidal") {
  FinSets E;
  Bound b;
  auto s = exhaustive_samples(E, b);
  CHECK(check_symmon_functor(identity_functor(E), s, b).ok());
}

TEST_CASE("unit embedding is lax symmetric monoidal; swapped eta components are caught") {
  auto G = build_GR(FinSets{});
  Hocolim<CubeGraded<FinSets>> H(G);
  FiberView<CubeGraded<FinSets>> V{G, JObj{}};
  Bound b;
  b.entry_max = 2;
  auto s = exhaustive_samples(V, b);

  SymMonFunctor<FiberView<CubeGraded<FinSets>>, Hocolim<CubeGraded<FinSets>>> F;
  F.F = FunctorData<FiberView<CubeGraded<FinSets>>, Hocolim<CubeGraded<FinSets>>>{
      &V, &H, [&](const CubeObj<int>& X) { return H.single(JObj{}, X); },
      [&](const CubeMor<FinSets::Mor>& f) {
        return Hocolim<CubeGraded<FinSets>>::Mor{H.single(JObj{}, G.dom(f)), H.single(JObj{}, G.cod(f)),
                                                 FinMap::identity(1), {j_id(JObj{})}, {f}};
      }};
  F.eta = [&](const CubeObj<int>& X, const CubeObj<int>& Y) {
    auto a = H.oplus(H.single(JObj{}, X), H.single(JObj{}, Y));
    return Hocolim<CubeGraded<FinSets>>::Mor{a, H.single(JObj{}, G.oplus(X, Y)), FinMap{1, {0, 0}},
                                             {j_id(JObj{}), j_id(JObj{})}, {G.id(G.oplus(X, Y))}};
  };
  F.unit = nullptr;
  CHECK(check_symmon_functor(F, s, b).ok());

  auto Fbad = F;
  Fbad.eta = [&](const CubeObj<int>& X, const CubeObj<int>& Y) {
    auto a = H.oplus(H.single(JObj{}, X), H.single(JObj{}, Y));
    return Hocolim<CubeGraded<FinSets>>::Mor{a, H.single(JObj{}, G.oplus(Y, X)), FinMap{1, {0, 0}},
                                             {j_id(JObj{}), j_id(JObj{})}, {G.twist(X, Y)}};
  };
  CHECK_FALSE(check_symmon_functor(Fbad, s, b).ok());
}

TEST_CASE("product of discrete monoids is the product monoid") {
  auto P = product_cat(boolean_rig(), z2_ring());
  Bound b;
  CHECK(P.objects(b).size() == boolean_rig().objects(b).size() * z2_ring().objects(b).size());
  CHECK(P.oplus(std::pair{1, 1}, std::pair{1, 1}) == std::pair{1, 0});
  CHECK(check_permutative(P, b).ok());
}

TEST_CASE("object counts multiply in products") {
  Bound b;
  for (int e = 0; e <= 3; ++e) {
    b.entry_max = e;
    auto P = product_cat(FinSets{}, F2Mod{});
    CHECK(P.objects(b).size() == FinSets{}.objects(b).size() * F2Mod{}.objects(b).size());
  }
}

TEST_CASE("the zero category is permutative") { CHECK(check_permutative(zero_cat(), Bound{}).ok()); }
