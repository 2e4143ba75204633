#include <catch_amalgamated.hpp>

#include "rigcomp/biperm.hpp"
#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/permcat.hpp"

using namespace rigcomp;

namespace {

const FinSets E;
const auto GE = build_GR(E);

}  // namespace

TEST_CASE("diagonal along {} in {1} doubles the entry") {
  auto a = GE.make(JObj{1, {}}, {3});
  auto d = cube_diagonal(GE, JObj{1, {1}}, a);
  CHECK(d.entries == std::vector<int>{3, 3});
}

TEST_CASE("diagonal along the identity is the identity") {
  auto a = GE.make(JObj{2, {1, 2}}, {0, 1, 2, 3});
  CHECK(cube_diagonal(GE, a.j, a) == a);
}

TEST_CASE("diagonal along {1} in {1,2} repeats the 1-cube") {
  auto a = GE.make(JObj{2, {1}}, {2, 3});
  auto d = cube_diagonal(GE, JObj{2, {1, 2}}, a);
  // masks over {1,2}: {}, {1}, {2}, {1,2}
  CHECK(d.entries == std::vector<int>{2, 3, 2, 3});
}

TEST_CASE("extension by zero along 1 -> 2, 1 |-> 2") {
  FinMap phi{2, {1}};
  SECTION("S empty: inclusion onto the empty-set factor") {
    auto f = GE.id(GE.make(JObj{1, {}}, {3}));
    auto g = cube_extend_zero(GE, phi, f);
    CHECK(g.j == JObj{2, {1}});
    auto c = GE.dom(g);
    CHECK(c.entries == std::vector<int>{3, 0});
  }
  SECTION("S = {1}: entries at {} and {2}, zeros at {1} and {1,2}") {
    auto f = GE.id(GE.make(JObj{1, {1}}, {2, 3}));
    auto g = cube_extend_zero(GE, phi, f);
    CHECK(g.j == JObj{2, {1, 2}});
    CHECK(GE.dom(g).entries == std::vector<int>{2, 0, 3, 0});
  }
  SECTION("identity map: identity reindexing") {
    auto f = GE.id(GE.make(JObj{1, {1}}, {2, 3}));
    CHECK(cube_extend_zero(GE, FinMap::identity(1), f) == f);
  }
}

TEST_CASE("negative signs give the zero marker") {
  auto a = GE.make(JObj{1, {1}}, {2, 3});
  auto z = GE.transition(JMor{FinMap::identity(1), JObj{1, {1}}, JObj{1, {1}}}, a);
  CHECK_FALSE(z.zero);
  auto y = GE.zero(JObj{1, {-1}});
  CHECK(y.zero);
  CHECK(GE.fiber_objects(JObj{2, {1, -2}}, Bound{}).size() == 1);
}

TEST_CASE("transition along (id, id) is the identity functor") {
  Bound b;
  b.index_max = 2;
  b.entry_max = 2;
  for (auto& x : GE.index().objects(b))
    for (auto& a : GE.fiber_objects(x, b)) CHECK(GE.transition(j_id(x), a) == a);
}

TEST_CASE("transition square for 1 -> 2 commutes with diagonals") {
  Bound b;
  b.entry_max = 2;
  QnIndex Q1{1};
  for (auto& phi : all_injections(1, 2))
    for (auto& T : Q1.objects(b))
      for (auto& S : Q1.objects(b)) {
        if (!subset_of(S.T, T.T)) continue;
        JObj qS{2, q_apply(phi, S.T)}, qT{2, q_apply(phi, T.T)};
        for (auto& a : GE.fiber_objects(S, b)) {
          auto one_way = GE.transition(JMor{FinMap::identity(2), qS, qT}, GE.transition(JMor{phi, S, qS}, a));
          auto other = GE.transition(JMor{phi, T, qT}, GE.transition(JMor{FinMap::identity(1), S, T}, a));
          CHECK(one_way == other);
        }
      }
}

TEST_CASE("transitions are functorial on composable pairs with n <= 2") {
  Bound b;
  b.index_max = 2;
  b.entry_max = 1;
  const auto& J = GE.index();
  std::size_t pairs = 0;
  for (auto& x : J.objects(b))
    for (auto& y : J.objects(b))
      for (auto& k : J.homs(x, y, b))
        for (auto& z : J.objects(b))
          for (auto& l : J.homs(y, z, b)) {
            ++pairs;
            for (auto& a : GE.fiber_objects(x, b))
              for (auto& f : GE.homs(a, a, b)) REQUIRE(GE.transition(J.compose(l, k), f) == GE.transition(l, GE.transition(k, f)));
          }
  CHECK(pairs > 100);
}

TEST_CASE("each transition is strict symmetric monoidal") {
  Bound b;
  b.entry_max = 2;
  JObj x{1, {1}}, y{2, {1, 2}};
  FiberView<CubeGraded<FinSets>> src{GE, x}, tgt{GE, y};
  JMor k{FinMap{2, {1}}, x, y};
  auto s = exhaustive_samples(src, b);
  CHECK(check_symmon_functor(g_apply(src, tgt, k), s, b).ok());
}

TEST_CASE("product of two 1-cubes is the 2-cube of products") {
  auto ab = GE.make(JObj{1, {1}}, {2, 3});
  auto cd = GE.make(JObj{1, {1}}, {5, 7});
  auto p = GE.otimes(ab, cd);
  CHECK(p.j == JObj{2, {1, 2}});
  // masks {}, {1}, {2}, {1,2}: ac, bc, ad, bd
  CHECK(p.entries == std::vector<int>{10, 15, 14, 21});
}

TEST_CASE("unit and zero for the cube product") {
  auto a = GE.make(JObj{1, {1}}, {2, 3});
  CHECK(GE.otimes(a, GE.one()) == a);
  CHECK(GE.otimes(GE.one(), a) == a);
  CHECK(GE.otimes(a, GE.zero(JObj{1, {}})) == GE.zero(JObj{2, {1}}));
  CHECK(GE.otimes(a, GE.zero(JObj{1, {-1}})).zero);
}

TEST_CASE("multiplicative twist on unit-length cubes") {
  auto a = GE.make(JObj{}, {2});
  auto g = GE.twist_times(a, a);
  REQUIRE(g.entries.size() == 1);
  CHECK(g.entries[0].p.img == std::vector<int>{0, 2, 1, 3});
  auto GB = build_GR(boolean_rig());
  auto u = GB.make(JObj{1, {1}}, {1, 1});
  for (auto& e : GB.twist_times(u, u).entries) CHECK(e.o == GB.base().otimes(1, 1));
}

TEST_CASE("multiplicative twist is an involution in grade zero") {
  Bound b;
  b.entry_max = 3;
  for (auto& a : GE.fiber_objects(JObj{}, b))
    for (auto& c : GE.fiber_objects(JObj{}, b)) CHECK(GE.compose(GE.twist_times(c, a), GE.twist_times(a, c)) == GE.id(GE.otimes(a, c)));
}

TEST_CASE("right distributivity is strict on cubes") {
  Bound b;
  b.index_max = 1;
  b.entry_max = 2;
  for (auto& x : GE.index().objects(b))
    for (auto& y : GE.index().objects(b))
      for (auto& a : GE.fiber_objects(x, b))
        for (auto& a2 : GE.fiber_objects(x, b))
          for (auto& c : GE.fiber_objects(y, b)) CHECK(GE.otimes(GE.oplus(a, a2), c) == GE.oplus(GE.otimes(a, c), GE.otimes(a2, c)));
}

TEST_CASE("the fiber at (0,{}) is the base category") {
  Bound b;
  b.entry_max = 4;
  auto objs = GE.fiber_objects(JObj{}, b);
  REQUIRE(objs.size() == E.objects(b).size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    CHECK(objs[i].entries == std::vector<int>{E.objects(b)[i]});
    for (auto& c : objs) CHECK(GE.oplus(objs[i], c).entries[0] == E.oplus(objs[i].entries[0], c.entries[0]));
  }
}

TEST_CASE("the Boolean rig gives a graded bipermutative category at n <= 2") {
  auto r = check_graded(build_GR(boolean_rig()), Bound{});
  CHECK(r.ok());
}
