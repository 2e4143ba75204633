#include <catch_amalgamated.hpp>

#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/pi0.hpp"
#include "rigcomp/thomason.hpp"
#include "rigcomp/zeros.hpp"

using namespace rigcomp;

namespace {

using GB = CubeGraded<DiscreteRig>;
using Level = DLevel<GB>;

Bound small() {
  Bound b;
  b.index_max = 1;
  b.length_max = 2;
  b.samples = 100;
  return b;
}

}  // namespace

TEST_CASE("adding an isolated zero") {
  auto H = hocolim(build_GR(boolean_rig()));
  auto P = add_isolated_zero(H);
  Bound b;
  b.index_max = 0;
  b.length_max = 2;
  CHECK(P.objects(b).size() == H.objects(b).size() + 1);
  CHECK(P.homs(P.zero(), P.wrap(H.one()), b).empty());
  CHECK(P.oplus(P.zero(), P.wrap(H.one())) == P.wrap(H.one()));
  CHECK(check_permutative(P, b).ok());
}

TEST_CASE("adjoined zeros keep the graded structure") {
  auto G = build_GR(boolean_rig());
  Bound b = small();
  CHECK(check_graded(AdjoinZeros<GB>(G, 2, false), b).ok());
  CHECK(check_graded(AdjoinZeros<GB>(G, 2, true), b).ok());
}

TEST_CASE("reduction of the level with one adjoined zero") {
  auto G = build_GR(boolean_rig());
  auto L0 = derived_level(G, 0), L1 = derived_level(G, 1);
  auto red = hocolim_iz_reduction(L1, L0);
  Bound b = small();
  const auto& A1 = L1.inner_category().diagram();
  for (auto& a : L0.inner_category().objects(b)) {
    // level-0 objects are level-1 objects without zeros; red is a retraction
    CHECK(red(L1.wrap(a)) == L0.wrap(a));
    auto padded = a;
    auto x = a.seq.front().first;
    padded.seq.push_back({x, A1.adjoined(0, x)});
    CHECK(red(L1.wrap(padded)) == L0.wrap(a));
  }
  typename Hocolim<AdjoinZeros<GB>>::Obj z;
  z.seq.push_back({JObj{}, A1.adjoined(0, JObj{})});
  CHECK(red(L1.wrap(z)) == L0.zero());
  CHECK(red(L1.zero()) == L0.zero());

  auto Z0 = zero_graded(L0), Z1 = zero_graded(L1);
  auto s = level_samples(L1, b, 80);
  for (auto& f : s.mors)
    if (!f.zero) {
      auto g = red(f);
      if (!g.zero) CHECK(L0.inner_category().valid(g.inner));
    }
  CHECK(check_lax_rig_morphism(level_map_as_rig_morphism(red, Z1, Z0), s, b).ok());
}

TEST_CASE("resolution of the zero category") {
  Bound b;
  auto Z0 = z_level(zero_cat(), 0, b);
  CHECK(Z0.objects(b).size() == 2);
  auto Z1 = z_level(zero_cat(), 1, b);
  CHECK(Z1.objects(b).size() == 3);
  CHECK_THROWS_AS(z_level(zero_cat(), b.q_max + 2, b), StructureError);
}

TEST_CASE("simplicial identities of the resolution of a category") {
  Bound b;
  b.q_max = 3;
  auto M = z2_ring();
  for (int q = 0; q <= 2; ++q) {
    auto Zq = z_level(M, q, b), Zq1 = z_level(M, q + 1, b);
    for (auto& a : Zq.objects(b))
      for (int i = 0; i <= q; ++i) {
        CHECK(z_face(Zq, q + 1, i, z_degeneracy(Zq1, q, i, a)) == a);
        CHECK(z_face(Zq, q + 1, i + 1, z_degeneracy(Zq1, q, i, a)) == a);
      }
    if (q >= 1) {
      auto Zm = z_level(M, q - 1, b);
      for (auto& a : Zq1.objects(b))
        for (int j = 1; j <= q + 1; ++j)
          for (int i = 0; i < j; ++i)
            CHECK(z_face(Zm, q, i, z_face(Zq, q + 1, j, a)) == z_face(Zm, q, j - 1, z_face(Zq, q + 1, i, a)));
    }
  }
}

TEST_CASE("resolution levels are bipermutative") {
  Bound b;
  b.q_max = 2;
  for (int q = 0; q <= 2; ++q) CHECK(check_bipermutative(z_level(z2_ring(), q, b), b).ok());
}

TEST_CASE("augmentation") {
  Bound b;
  b.rank_max = 2;
  F2Mod M;
  auto Z0 = z_level(M, 0, b), Z1 = z_level(M, 1, b);
  auto eps = augmentation(Z0, M);
  CHECK(check_symmon_functor(eps, exhaustive_samples(Z0, b), b).ok());
  for (int a : M.objects(b)) {
    CHECK(eps.F.on_obj(Z0.g.inner(a)) == a);
    CHECK(eps.F.on_obj(z_section(Z0, a)) == a);
  }
  for (auto& a : Z1.objects(b)) CHECK(eps.F.on_obj(z_face(Z0, 1, 0, a)) == eps.F.on_obj(z_face(Z0, 1, 1, a)));

  auto PZ = pi0(Z0, b);
  auto PM = pi0(M, b);
  CHECK(PM.classes() == 3);
  CHECK(PZ.classes() == 4);
  std::set<int> hit;
  std::map<int, std::set<int>> pre;
  for (auto& a : PZ.objects) {
    int c = *PM.class_of(eps.F.on_obj(a));
    hit.insert(c);
    pre[c].insert(*PZ.class_of(a));
  }
  CHECK(static_cast<int>(hit.size()) == PM.classes());
  int zc = *PM.class_of(M.zero());
  for (auto& [c, s] : pre) CHECK(s.size() == (c == zc ? 2u : 1u));
}

TEST_CASE("level 0 is a bipermutative category") {
  auto L0 = derived_level(build_GR(boolean_rig()), 0);
  Bound b = small();
  auto s = level_samples(L0, b, 60);
  CHECK(check_graded(zero_graded(L0), s, b).ok());
}

TEST_CASE("faces and degeneracies of the derived levels") {
  auto G = build_GR(boolean_rig());
  std::vector<Level> L;
  for (int q = 0; q <= 3; ++q) L.push_back(derived_level(G, q));
  std::vector<ZeroGraded<Level>> ZL;
  for (auto& l : L) ZL.push_back(zero_graded(l));
  Bound b = small();
  b.samples = 25;
  for (int q = 1; q <= 2; ++q) {
    auto s = level_samples(L[q], b, 25);
    for (int i = 0; i <= q; ++i) {
      auto d = level_face(L[q], L[q - 1], q, i);
      auto r = check_lax_rig_morphism(level_map_as_rig_morphism(d, ZL[q], ZL[q - 1]), s, b);
      INFO("d" << i << " at level " << q << "\n" << r.summary());
      CHECK(r.ok());
    }
    if (q >= 2)
      for (int j = 1; j <= q; ++j)
        for (int i = 0; i < j; ++i)
          for (auto& a : s.objs) {
            auto lhs = level_face(L[q - 1], L[q - 2], q - 1, i)(level_face(L[q], L[q - 1], q, j)(a));
            auto rhs = level_face(L[q - 1], L[q - 2], q - 1, j - 1)(level_face(L[q], L[q - 1], q, i)(a));
            CHECK(lhs == rhs);
          }
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= q + 1; ++i)
        for (auto& a : s.objs) {
          auto lhs = level_face(L[q + 1], L[q], q + 1, i)(level_degeneracy(L[q], L[q + 1], q, j)(a));
          Level::Obj rhs;
          if (i < j)
            rhs = level_degeneracy(L[q - 1], L[q], q - 1, j - 1)(level_face(L[q], L[q - 1], q, i)(a));
          else if (i == j || i == j + 1)
            rhs = a;
          else
            rhs = level_degeneracy(L[q - 1], L[q], q - 1, j)(level_face(L[q], L[q - 1], q, i - 1)(a));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("face depth maps") {
  CHECK(face_depth(1, 0, 0) == 0);
  CHECK(face_depth(1, 0, 1) == 0);
  CHECK(face_depth(1, 1, 0) == -1);
  CHECK(face_depth(2, 0, -1) == -1);
  CHECK(degeneracy_depth(1, 0, 1) == 2);
  CHECK(degeneracy_depth(1, 1, 0) == 1);
  for (int q = 1; q <= 4; ++q)
    for (int i = 0; i <= q; ++i)
      for (int d = -1; d < q; ++d) {
        CHECK(face_depth(q + 1, i, degeneracy_depth(q, i, d)) == d);
        CHECK(face_depth(q + 1, i + 1, degeneracy_depth(q, i, d)) == d);
      }
}
