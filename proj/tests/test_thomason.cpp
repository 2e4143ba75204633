#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/thomason.hpp"

using namespace rigcomp;

namespace {

using GE = CubeGraded<FinSets>;
using H = Hocolim<GE>;

Bound small() {
  Bound b;
  b.index_max = 2;
  b.length_max = 3;
  b.entry_max = 2;
  return b;
}

}  // namespace

TEST_CASE("composition with identities") {
  auto h = hocolim(build_GR(FinSets{}));
  auto s = hocolim_samples(h, small(), 300);
  for (auto& f : s.mors) {
    REQUIRE(h.valid(f));
    CHECK(h.mor_eq(h.compose(f, h.id(h.dom(f))), f));
    CHECK(h.mor_eq(h.compose(h.id(h.cod(f)), f), f));
  }
}

TEST_CASE("composition is associative on random chains") {
  auto h = hocolim(build_GR(FinSets{}));
  auto s = hocolim_samples(h, small(), 500);
  for (auto& [f, g, k] : s.triples) {
    auto lhs = h.compose(k, h.compose(g, f));
    auto rhs = h.compose(h.compose(k, g), f);
    REQUIRE(h.valid(lhs));
    CHECK(h.mor_eq(lhs, rhs));
  }
}

TEST_CASE("collapsing two entries of one grade") {
  auto G = build_GR(FinSets{});
  auto h = hocolim(G);
  JObj x{1, {1}};
  auto X = G.make(x, {1, 2});
  auto Y = G.make(x, {0, 1});
  H::Obj a{{{x, X}, {x, Y}}};
  auto sum = G.oplus(X, Y);
  H::Mor f{a, h.single(x, sum), FinMap{1, {0, 0}}, {j_id(x), j_id(x)}, {G.id(sum)}};
  CHECK(h.valid(f));
  CHECK(sum.entries == std::vector<int>{1, 3});
  auto tw = G.twist(Y, X);
  H::Mor f2{h.oplus(h.single(x, Y), h.single(x, X)), h.single(x, sum), FinMap{1, {0, 0}}, {j_id(x), j_id(x)}, {tw}};
  REQUIRE(h.valid(f2));
  // both collapse the same pair, so precomposing the sum twist identifies them
  CHECK(h.mor_eq(h.compose(f2, h.twist(h.single(x, X), h.single(x, Y))), f));
}

TEST_CASE("sum of singletons is the concatenation") {
  auto G = build_GR(FinSets{});
  auto h = hocolim(G);
  JObj x{1, {1}}, y{2, {-1, 2}};
  auto X = G.constant(x, 2);
  auto Y = G.constant(y, 1);
  auto s = h.oplus(h.single(x, X), h.single(y, Y));
  REQUIRE(s.size() == 2);
  CHECK(s.seq[0] == std::make_pair(x, X));
  CHECK(s.seq[1] == std::make_pair(y, Y));
}

TEST_CASE("sum twist is an involution") {
  auto h = hocolim(build_GR(FinSets{}));
  gen::Rng rng(7);
  auto b = small();
  for (int t = 0; t < 100; ++t) {
    auto a = h.random_object(rng, b), c = h.random_object(rng, b);
    CHECK(h.mor_eq(h.compose(h.twist(c, a), h.twist(a, c)), h.id(h.oplus(a, c))));
  }
}

TEST_CASE("tensor of singletons adds the grades") {
  auto G = build_GR(FinSets{});
  auto h = hocolim(G);
  JObj x{1, {1}}, y{1, {-1}};
  auto X = G.make(x, {2, 3});
  auto Y = G.make(y, {5});
  auto t = h.otimes(h.single(x, X), h.single(y, Y));
  REQUIRE(t.size() == 1);
  CHECK(t.seq[0].first == j_add(x, y));
  CHECK(t.seq[0].first == (JObj{2, {1, -2}}));
  CHECK(t.seq[0].second == G.otimes(X, Y));
}

TEST_CASE("tensor unit and tensor twist") {
  auto h = hocolim(build_GR(FinSets{}));
  gen::Rng rng(11);
  auto b = small();
  b.length_max = 2;
  for (int t = 0; t < 60; ++t) {
    auto a = h.random_object(rng, b), c = h.random_object(rng, b);
    CHECK(h.otimes(h.one(), a) == a);
    CHECK(h.otimes(a, h.one()) == a);
    auto tt = h.twist_times(a, c);
    CHECK(h.valid(tt));
    CHECK(h.mor_eq(h.compose(h.twist_times(c, a), tt), h.id(h.otimes(a, c))));
  }
}

TEST_CASE("right distributivity is strict and left is xi") {
  auto h = hocolim(build_GR(FinSets{}));
  gen::Rng rng(13);
  auto b = small();
  b.length_max = 2;
  for (int t = 0; t < 60; ++t) {
    auto a = h.random_object(rng, b), c = h.random_object(rng, b), c2 = h.random_object(rng, b);
    CHECK(h.otimes(h.oplus(a, c), c2) == h.oplus(h.otimes(a, c2), h.otimes(c, c2)));
    auto d = h.dl(a, c, c2);
    CHECK(h.valid(d));
    CHECK(d.psi == FinMap::from_perm(xi_perm(a.size(), c.size(), c2.size())));
  }
}

TEST_CASE("unit embedding") {
  auto G = build_GR(FinSets{});
  auto src = zero_graded(FiberView<GE>{G, JObj{}});
  auto tgt = zero_graded(hocolim(G));
  auto F = unit_embed(src, tgt);
  CHECK(F.on_obj(G.one()) == tgt.r.one());
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      auto X = G.constant(JObj{}, p), Y = G.constant(JObj{}, q);
      CHECK(F.on_obj(G.otimes(X, Y)) == tgt.r.otimes(F.on_obj(X), F.on_obj(Y)));
      auto e = F.eta_plus(X, Y);
      CHECK(tgt.r.valid(e));
      CHECK_FALSE(e.psi.injective());
    }
}

TEST_CASE("structure suite on a small homotopy colimit") {
  auto h = hocolim(build_GR(FinSets{}));
  auto b = small();
  b.samples = 150;
  auto r = check_hocolim_suite(h, b);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(r.checked.count("pentagon") == 1);
  CHECK(r.checked.count("d_l from twists") == 1);
}

TEST_CASE("structure suite over the boolean rig") {
  auto h = hocolim(build_GR(boolean_rig()));
  Bound b;
  b.length_max = 3;
  b.samples = 150;
  CHECK(check_hocolim_suite(h, b).ok());
}
