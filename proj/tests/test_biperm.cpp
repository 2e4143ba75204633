#include <catch_amalgamated.hpp>

#include "rigcomp/biperm.hpp"
#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/thomason.hpp"

using namespace rigcomp;

TEST_CASE("left distributivity of finite sets is xi") {
  FinSets E;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int m2 = 0; m2 <= 3; ++m2) {
        auto d = E.dl(n, m, m2);
        CHECK(d.p == xi_perm(n, m, m2));
        auto derived = compose(transpose_sigma(m + m2, n), perm_sum(transpose_sigma(n, m), transpose_sigma(n, m2)));
        CHECK(d.p == derived);
      }
}

TEST_CASE("left distributivity degenerates to identities") {
  FinSets E;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      CHECK(E.dl(n, m, 0).p.is_identity());
      CHECK(E.dl(1, n, m).p.is_identity());
    }
}

TEST_CASE("ungraded categories as 0-graded give the same verdict") {
  Bound b;
  b.entry_max = 3;
  CHECK(check_graded(zero_graded(FinSets{}), b).ok() == check_bipermutative(FinSets{}, b).ok());
  CHECK(check_bipermutative(FinSets{}, b).ok());
  FinSets bad(FinSets::Corruption::twist_times_identity);
  CHECK_FALSE(check_graded(zero_graded(bad), b).ok());
  CHECK_FALSE(check_bipermutative(bad, b).ok());
}

TEST_CASE("identity tensor twist on GE is caught by the twist conditions") {
  Bound b;
  b.index_max = 1;
  b.entry_max = 2;
  auto r = check_graded(build_GR(FinSets(FinSets::Corruption::twist_times_identity)), b);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failed.count("tensor twist") == 1);
}

TEST_CASE("strictly bimonoidal checker") {
  Bound b;
  CHECK(check_graded_strictly_bimonoidal(build_GR(boolean_rig()), b).ok());
  CHECK(check_graded_strictly_bimonoidal(zero_graded(F2Mod{}), b).ok());
  Bound bf;
  bf.entry_max = 3;
  auto r = check_graded_strictly_bimonoidal(zero_graded(FinSets(FinSets::Corruption::dl_wrong)), bf);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failed.count("left distributivity") == 1);
  CHECK(r.failed.count("pentagon") == 1);
}

TEST_CASE("matrices over F2 are bipermutative at rank <= 2") {
  Bound b;
  b.rank_max = 2;
  CHECK(check_bipermutative(F2Mod{}, b).ok());
}

TEST_CASE("identity lax morphism") {
  auto R = zero_graded(FinSets{});
  LaxRigMorphism<ZeroGraded<FinSets>, ZeroGraded<FinSets>> F;
  F.source = &R;
  F.target = &R;
  F.on_obj = [](int a) { return a; };
  F.on_mor = [](const FinSets::Mor& f) { return f; };
  F.on_grade = [](const TrivialIndex::Obj& x) { return x; };
  F.on_index_mor = [](const TrivialIndex::Mor& k) { return k; };
  F.eta_plus = [&](int a, int c) { return R.id(a + c); };
  F.eta_times = [&](int a, int c) { return R.id(a * c); };
  F.unit_times = [&] { return R.id(1); };
  Bound b;
  b.entry_max = 3;
  CHECK(check_lax_rig_morphism(F, graded_samples(R, b), b).ok());

  auto G = F;
  G.eta_plus = [&](int a, int c) { return R.twist(c, a); };
  CHECK_FALSE(check_lax_rig_morphism(G, graded_samples(R, b), b).ok());
}

TEST_CASE("unit embedding into the homotopy colimit is a lax rig morphism") {
  auto GB = build_GR(boolean_rig());
  auto src = zero_graded(FiberView<CubeGraded<DiscreteRig>>{GB, JObj{}});
  auto tgt = zero_graded(hocolim(GB));
  auto F = unit_embed(src, tgt);
  Bound b;
  b.samples = 200;
  CHECK(check_lax_rig_morphism(F, graded_samples(src, b), b).ok());
}

TEST_CASE("induced morphism of the identity transformation") {
  auto GE = build_GR(FinSets{});
  auto src = zero_graded(hocolim(GE));
  GradedLaxData<CubeGraded<FinSets>, CubeGraded<FinSets>> D;
  D.on_obj = [](const CubeObj<int>& a) { return a; };
  D.on_mor = [](const CubeMor<FinSets::Mor>& f) { return f; };
  D.eta_plus = [&](const CubeObj<int>& a, const CubeObj<int>& c) { return GE.id(GE.oplus(a, c)); };
  D.eta_times = [&](const CubeObj<int>& a, const CubeObj<int>& c) { return GE.id(GE.otimes(a, c)); };
  auto F = induced_morphism(D, src, src);
  Bound b;
  b.index_max = 1;
  b.length_max = 2;
  b.entry_max = 2;
  b.samples = 60;
  GradedSamples<ZeroGraded<Hocolim<CubeGraded<FinSets>>>> s;
  s.grades = {TrivialIndex::Obj{}};
  s.index_mors = {TrivialIndex::Mor{}};
  s.index_pairs = {{TrivialIndex::Mor{}, TrivialIndex::Mor{}}};
  auto hs = hocolim_samples(src.r, b, 60);
  s.objs = hs.objs;
  for (auto& [f, g] : hs.pairs) {
    s.mors.push_back(f);
    s.mors.push_back(g);
  }
  auto r = check_lax_rig_morphism(F, s, b);
  CHECK(r.ok());
  // F_* is the identity on terms
  for (auto& f : s.mors) CHECK(src.r.mor_eq(F.on_mor(f), f));
}
