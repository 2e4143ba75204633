#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "rigcomp/indexing.hpp"
#include "rigcomp/permcat.hpp"

using namespace rigcomp;

TEST_CASE("q_apply along 1 -> 2, 1 |-> 2") {
  FinMap phi{2, {1}};
  CHECK(q_apply(phi, {-1}) == std::vector<int>{1, -2});
  CHECK(q_apply(phi, {}) == std::vector<int>{1});
  CHECK(q_apply(phi, {1}) == std::vector<int>{1, 2});
}

TEST_CASE("q_apply along the identity") {
  for (int n = 0; n <= 3; ++n)
    for (auto& S : signed_subsets(n)) CHECK(q_apply(FinMap::identity(n), S) == S);
}

TEST_CASE("sum of signed subsets shifts the second summand") {
  JObj T{3, {-1, 2}}, S{2, {1, -2}};
  auto x = j_add(T, S);
  CHECK(x.n == 5);
  CHECK(x.T == std::vector<int>{-1, 2, 4, -5});
  CHECK(j_add(T, JObj{}) == T);
  CHECK(j_add(JObj{}, T) == T);
}

TEST_CASE("sum commutes up to the shuffle twist") {
  Bound b;
  for (auto& x : IQIndex{}.objects(b))
    for (auto& y : IQIndex{}.objects(b)) {
      auto t = j_twist(x, y);
      CHECK(t.valid());
      CHECK(t.src == j_add(x, y));
      CHECK(t.tgt == j_add(y, x));
      CHECK(j_compose(j_twist(y, x), t) == j_id(j_add(x, y)));
    }
}

TEST_CASE("Q(2) has nine objects in a 3x3 grid") {
  QnIndex Q{2};
  auto objs = Q.objects(Bound{});
  CHECK(objs.size() == 9);
  int below = 0;
  for (auto& x : objs)
    for (auto& y : objs) below += static_cast<int>(Q.homs(x, y, Bound{}).size());
  // each coordinate is a cospan + <- 0 -> -: 5 relations per coordinate
  CHECK(below == 25);
}

TEST_CASE("|Q(n)| = 3^n for n <= 4") {
  int p = 1;
  for (int n = 0; n <= 4; ++n, p *= 3) CHECK(signed_subsets(n).size() == static_cast<std::size_t>(p));
}

TEST_CASE("identities compose trivially") {
  JObj x{2, {1, -2}};
  CHECK(j_compose(j_id(x), j_id(x)) == j_id(x));
}

TEST_CASE("composite violating the inclusion is rejected") {
  JObj x{1, {1}}, y{1, {}};
  CHECK_THROWS(j_compose(j_id(y), JMor{FinMap::identity(1), x, y}));
}

TEST_CASE("the index category is permutative") {
  Bound b;
  b.index_max = 2;
  auto r = check_permutative(IQIndex{}, b);
  CHECK(r.ok());
  CHECK(check_category(IQIndex{}, b).ok());
}

TEST_CASE("property: q_apply is functorial") {
  auto bad = gen::for_all(21, 500, [](gen::Rng& rng) {
    int m = gen::uniform(rng, 0, 3), n = m + gen::uniform(rng, 0, 2), k = n + gen::uniform(rng, 0, 2);
    auto psi = gen::injection(rng, m, n), phi = gen::injection(rng, n, k);
    auto S = gen::signed_subset(rng, m);
    return q_apply(compose(phi, psi), S) == q_apply(phi, q_apply(psi, S));
  });
  CHECK(bad == -1);
}

TEST_CASE("property: q_apply is monotone") {
  auto bad = gen::for_all(22, 500, [](gen::Rng& rng) {
    int m = gen::uniform(rng, 0, 4), n = m + gen::uniform(rng, 0, 2);
    auto phi = gen::injection(rng, m, n);
    auto T = gen::signed_subset(rng, m);
    std::vector<int> S;
    for (int t : T)
      if (gen::uniform(rng, 0, 1)) S.push_back(t);
    return subset_of(q_apply(phi, S), q_apply(phi, T));
  });
  CHECK(bad == -1);
}

TEST_CASE("property: random morphisms are valid and compose") {
  auto bad = gen::for_all(23, 500, [](gen::Rng& rng) {
    auto x = gen::jobj(rng, 3);
    auto k = gen::jmor_from(rng, x, 2);
    auto l = gen::jmor_from(rng, k.tgt, 2);
    auto lk = j_compose(l, k);
    return k.valid() && l.valid() && lk.valid() && j_add_mor(k, l).valid();
  });
  CHECK(bad == -1);
}
