#include <catch_amalgamated.hpp>

#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/oracle.hpp"
#include "rigcomp/pi0.hpp"

using namespace rigcomp;

TEST_CASE("components of small categories") {
  Bound b;
  auto P = pi0(z2_ring(), b);
  CHECK(P.classes() == 2);
  CHECK(*P.class_of(0) != *P.class_of(1));
  b.entry_max = 3;
  auto S = pi0(FinSets{}, b);
  CHECK(S.classes() == 4);
  for (int n = 0; n <= 3; ++n) CHECK(S.class_size(*S.class_of(n)) == 1);
  CHECK_FALSE(S.class_of(4).has_value());
  CHECK_THROWS_AS(S.class_of_or_throw(4, "4"), IncompleteError);
}

TEST_CASE("degenerate grades collapse to zero") {
  auto G = build_GR(FinSets{});
  Hocolim<CubeGraded<FinSets>> H(G);
  Bound b;
  b.index_max = 1;
  b.entry_max = 2;
  b.length_max = 2;
  auto P = hocolim_pi0(H, b);
  auto zero = witness_end(H);
  for (int a = 0; a <= 2; ++a) {
    // 1[((1,{}),a)] maps to 1[((1,{-1}),0)] and to 1[((1,{1}),(a,0))]
    auto e = H.single(JObj{1, {}}, G.constant(JObj{1, {}}, a));
    CHECK(P.class_of(e) == P.class_of(H.single(JObj{1, {-1}}, G.zero(JObj{1, {-1}}))));
    CHECK(P.class_of(e) == P.class_of(zero));
  }
  CHECK(P.class_of(H.single(JObj{}, G.constant(JObj{}, 1))) != P.class_of(zero));
  CHECK(P.class_of(H.single(JObj{1, {1}}, G.make(JObj{1, {1}}, {2, 1}))) ==
        P.class_of(H.single(JObj{}, G.constant(JObj{}, 1))));
}

TEST_CASE("generating morphisms give the full partition") {
  Bound b;
  b.index_max = 1;
  b.length_max = 2;
  Hocolim<CubeGraded<DiscreteRig>> H(build_GR(z2_ring()));
  auto P = hocolim_pi0(H, b);
  auto Q = hocolim_pi0_full(H, b);
  CHECK(same_partition(P, Q));
  CHECK(P.classes() == Q.classes());
}

TEST_CASE("components only merge as the bound grows") {
  Bound b;
  b.index_max = 1;
  b.length_max = 1;
  Hocolim<CubeGraded<DiscreteRig>> H(build_GR(z2_ring()));
  auto P = hocolim_pi0(H, b);
  auto P2 = hocolim_pi0(H, next_bound(b));
  CHECK(next_bound(b).length_max == 2);
  for (std::size_t i = 0; i < P.objects.size(); ++i)
    for (std::size_t k = 0; k < P.objects.size(); ++k)
      if (P.cls[i] == P.cls[k]) CHECK(P2.class_of(P.objects[i]) == P2.class_of(P.objects[k]));
}

TEST_CASE("ring of components of Z/2") {
  auto r = z2_ring();
  GrothendieckOracle o(r.presentation(), 8);
  Bound b;
  auto R = pi0_ring(r, o, b);
  INFO(R.report.summary());
  CHECK(R.report.ok());
  CHECK(R.stable);
  REQUIRE(R.table.size == 2);
  CHECK(R.table.add == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(R.table.mul == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  CHECK(R.labels[R.table.zero] == o.zero());
  CHECK(R.labels[R.table.one] == o.one());
  CHECK_FALSE(R.witnesses[R.table.zero].has_value());
  CHECK(R.witnesses[R.table.one].has_value());
}

TEST_CASE("ring of components of the boolean rig is trivial") {
  auto r = boolean_rig();
  GrothendieckOracle o(r.presentation(), 8);
  CHECK(o.classes() == 1);
  auto R = pi0_ring(r, o, Bound{});
  CHECK(R.report.ok());
  CHECK(R.table.size == 1);
  CHECK(R.table.zero == R.table.one);
}

TEST_CASE("inverse witnesses swap the cube entries") {
  auto G = build_GR(FinSets{});
  Hocolim<CubeGraded<FinSets>> H(G);
  JObj x{1, {1}};
  for (int a = 0; a <= 3; ++a)
    for (int c = 0; c <= 3; ++c) {
      auto w = inverse_witness(H, H.single(x, G.make(x, {a, c})));
      std::string why;
      CHECK(verify_witness(H, w, &why));
      INFO(why);
      REQUIRE(w.b.size() == 1);
      CHECK(w.b.seq[0].second.entries == std::vector<int>{c, a});
    }
  auto w = inverse_witness(H, H.single(JObj{}, G.constant(JObj{}, 2)));
  CHECK(verify_witness(H, w));
  auto w2 = w;
  w2.path.steps.pop_back();
  CHECK_FALSE(verify_witness(H, w2));
}

TEST_CASE("alternating sums") {
  FinSets E;
  GrothendieckOracle o(E.presentation(), 12);
  AltSum<FinSets> alt(E, o);
  auto G = build_GR(E);
  Hocolim<CubeGraded<FinSets>> H(G);
  JObj x{1, {1}};
  for (int a = 0; a <= 4; ++a)
    for (int c = 0; c <= 4; ++c) {
      CHECK(o.label(alt(H.single(x, G.make(x, {a, c})))) == std::to_string(a - c));
      CHECK(alt(H.single(x, G.constant(x, a))) == o.zero());
    }
  JObj y{2, {1, 2}};
  // entries indexed by masks 00,01,10,11: 3 - 1 - 2 + 0
  CHECK(o.label(alt(H.single(y, G.make(y, {3, 1, 2, 0})))) == "0");
  CHECK(o.label(alt(H.single(y, G.make(y, {4, 1, 0, 2})))) == "5");
  CHECK(alt(H.single(JObj{1, {-1}}, G.zero(JObj{1, {-1}}))) == o.zero());
  CHECK(o.label(alt(H.oplus(H.single(x, G.make(x, {3, 0})), H.single(JObj{}, G.constant(JObj{}, 2))))) == "5");
}

TEST_CASE("alt_sum is constant on components of the completion of Z/2") {
  auto r = z2_ring();
  GrothendieckOracle o(r.presentation(), 8);
  AltSum<DiscreteRig> alt(r, o);
  Bound b;
  b.index_max = 2;
  b.length_max = 2;
  Hocolim<CubeGraded<DiscreteRig>> H(build_GR(r));
  auto P = hocolim_pi0(H, b);
  std::map<int, int> label;
  for (std::size_t i = 0; i < P.objects.size(); ++i) {
    auto v = alt(P.objects[i]);
    auto [it, fresh] = label.emplace(P.cls[i], v);
    CHECK(it->second == v);
  }
}

TEST_CASE("ring table checker rejects a broken table") {
  RingTable t{2, 0, 1, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}};
  CHECK(check_ring_table(t).ok());
  t.add[1][1] = 1;
  auto r = check_ring_table(t);
  CHECK_FALSE(r.ok());
  CHECK(r.failed.count("additive inverse") == 1);
  t = RingTable{2, 0, 1, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}};
  CHECK(check_ring_table(t).failed.count("multiplicative unit") == 1);
}
