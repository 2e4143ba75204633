#include <catch_amalgamated.hpp>

#include "rigcomp/examples.hpp"
#include "rigcomp/gq.hpp"

using namespace rigcomp;

namespace {

Bound sets(int n) {
  Bound b;
  b.entry_max = n;
  b.length_max = 1;
  return b;
}

}  // namespace

TEST_CASE("objects, identities and units of (-M)M") {
  auto G = gq_build(FinSets{}, sets(2));
  using O = GQ<FinSets>::Obj;
  CHECK(G.zero() == O{0, 0});
  CHECK(G.objects(sets(2)).size() == 9);
  CHECK(G.oplus(O{1, 2}, O{2, 0}) == O{3, 2});
  CHECK(G.act(3, O{1, 2}) == O{3, 6});
  for (int a = 0; a <= 2; ++a) {
    auto hs = G.homs(G.zero(), O{a, a}, sets(2));
    auto m = G.make(G.zero(), O{a, a}, a, FinSets{}.id(a), FinSets{}.id(a));
    CHECK(std::any_of(hs.begin(), hs.end(), [&](auto& h) { return G.mor_eq(h, m); }));
    // x = a, f and g range over Aut(a) x Aut(a) modulo Aut(a)
    std::size_t fact = 1;
    for (int i = 2; i <= a; ++i) fact *= static_cast<std::size_t>(i);
    CHECK(hs.size() == fact);
  }
  CHECK(G.homs(O{1, 0}, O{0, 1}, sets(2)).empty());
  CHECK_THROWS_AS(G.make(G.zero(), O{1, 1}, 0, FinSets{}.id(1), FinSets{}.id(1)), StructureError);
}

TEST_CASE("(-M)M is permutative") {
  auto b = sets(2);
  CHECK(check_permutative(gq_build(FinSets{}, b), b).ok());
  Bound f;
  f.rank_max = 1;
  CHECK(check_permutative(gq_build(F2Mod{}, f), f).ok());
}

TEST_CASE("morphism equality is the orbit of Aut(x)") {
  FinSets E;
  auto G = gq_build(E, sets(3));
  using O = GQ<FinSets>::Obj;
  auto f = FinSets::Mor{Perm({1, 2, 0})};
  auto g = FinSets::Mor{Perm({2, 0, 1, 3})};
  auto m = G.make(O{1, 2}, O{3, 4}, 2, f, g);
  auto swap = FinSets::Mor{Perm({1, 0})};
  auto m2 = G.make(O{1, 2}, O{3, 4}, 2, E.compose(f, E.oplus(swap, E.id(1))), E.compose(g, E.oplus(swap, E.id(2))));
  CHECK(G.mor_eq(m, m2));
  CHECK(G.mor_eq(G.normalize(m), m));
  auto m3 = G.make(O{1, 2}, O{3, 4}, 2, E.compose(f, E.oplus(swap, E.id(1))), g);
  CHECK_FALSE(G.mor_eq(m, m3));
  CHECK(G.mor_eq(G.compose(G.id(O{3, 4}), m), m));
  CHECK(G.mor_eq(G.compose(m, G.id(O{1, 2})), m));
}

TEST_CASE("splitting off the identity summand") {
  FinSets E;
  CHECK(E.split_sum(FinSets::Mor{Perm({1, 0, 2})}, 2, 1) == FinSets::Mor{Perm({1, 0})});
  CHECK_FALSE(E.split_sum(FinSets::Mor{Perm({2, 0, 1})}, 2, 1).has_value());
  CHECK(E.split_sum(E.id(3), 0, 3) == E.id(0));
  F2Mod V;
  auto h = F2Mod::Mor{Mat2{3, {0b011, 0b001, 0b100}}};
  auto al = V.split_sum(h, 2, 1);
  REQUIRE(al.has_value());
  CHECK(V.oplus(*al, V.id(1)) == h);
  CHECK_FALSE(V.split_sum(F2Mod::Mor{Mat2{2, {0b11, 0b01}}}, 1, 1).has_value());
}

TEST_CASE("comparison on generators") {
  FinSets E;
  auto H = q1_hocolim(E);
  Bound gb = sets(6);
  GQ<FinSets> G(E, gb);
  GQCompare<FinSets> F(H, G);
  const auto& D = H.diagram();
  JObj one{1, {1}}, neg{1, {-1}}, e{1, {}};
  using O = GQ<FinSets>::Obj;
  CHECK(F(H.single(one, D.make(one, {2, 3}))) == O{2, 3});
  CHECK(F(H.single(neg, D.zero(neg))) == O{0, 0});
  CHECK(F(H.single(e, D.constant(e, 2))) == O{0, 0});
  CHECK(F(H.oplus(H.single(one, D.make(one, {2, 3})), H.single(one, D.make(one, {1, 0})))) == O{3, 3});
}

TEST_CASE("comparison is a bijection on components") {
  auto r = gq_compare(FinSets{}, sets(3));
  INFO(r.report.summary());
  CHECK(r.report.ok());
  CHECK(r.stable);
  CHECK(r.bijective);
  CHECK(r.source_classes == 7);

  Bound f;
  f.rank_max = 2;
  f.length_max = 1;
  auto r2 = gq_compare(F2Mod{}, f);
  INFO(r2.report.summary());
  CHECK(r2.report.ok());
  CHECK(r2.bijective);
  CHECK(r2.source_classes == 5);
}

TEST_CASE("composite budget") {
  auto b = sets(3);
  b.length_max = 2;
  b.tuple_max = 1000;
  CHECK_THROWS_AS(gq_compare(FinSets{}, b), ResourceError);
}

TEST_CASE("components of (-M)M are differences") {
  Bound b;
  b.rank_max = 3;
  GQ<F2Mod> G(F2Mod{}, b);
  auto P = gq_pi0(G, b);
  CHECK(P.classes() == 7);
  for (auto& s : P.objects)
    for (auto& t : P.objects) CHECK((P.class_of(s) == P.class_of(t)) == (s.a - s.b == t.a - t.b));
}

TEST_CASE("construction requires a groupoid") {
  Bound b;
  b.index_max = 1;
  CHECK_THROWS_AS(gq_build(IQIndex{}, b), StructureError);
}
