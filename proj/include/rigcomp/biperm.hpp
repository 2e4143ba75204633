#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "effcat.hpp"
#include "permcat.hpp"

namespace rigcomp {

/** @brief The one-morphism permutative category, index of ungraded structures. */
struct TrivialIndex {
  struct Obj {
    friend bool operator==(const Obj&, const Obj&) = default;
    friend auto operator<=>(const Obj&, const Obj&) = default;
  };
  struct Mor {
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };
  Obj dom(const Mor&) const { return {}; }
  Obj cod(const Mor&) const { return {}; }
  Mor id(const Obj&) const { return {}; }
  Mor compose(const Mor&, const Mor&) const { return {}; }
  std::vector<Obj> objects(const Bound&) const { return {Obj{}}; }
  std::vector<Mor> homs(const Obj&, const Obj&, const Bound&) const { return {Mor{}}; }
  Obj oplus(const Obj&, const Obj&) const { return {}; }
  Mor oplus(const Mor&, const Mor&) const { return {}; }
  Obj zero() const { return {}; }
  Mor twist(const Obj&, const Obj&) const { return {}; }
  bool zeroless() const { return false; }
  std::string show(const Obj&) const { return "0"; }
  std::string show(const Mor&) const { return "id"; }
};

/** @brief An ungraded rig category seen as graded over the trivial index. */
template <class R>
struct ZeroGraded {
  using Index = TrivialIndex;
  using IObj = Index::Obj;
  using IMor = Index::Mor;
  using Obj = typename R::Obj;
  using Mor = typename R::Mor;
  R r;
  Index J;

  const Index& index() const { return J; }
  IObj grade(const Obj&) const { return {}; }
  std::vector<Obj> fiber_objects(const IObj&, const Bound& b) const { return r.objects(b); }
  std::vector<Obj> objects(const Bound& b) const { return r.objects(b); }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const { return r.homs(a, c, b); }

  Obj dom(const Mor& f) const { return r.dom(f); }
  Obj cod(const Mor& f) const { return r.cod(f); }
  Mor id(const Obj& a) const { return r.id(a); }
  Mor compose(const Mor& g, const Mor& f) const { return r.compose(g, f); }
  Obj oplus(const Obj& a, const Obj& c) const { return r.oplus(a, c); }
  Mor oplus(const Mor& f, const Mor& g) const { return r.oplus(f, g); }
  Obj zero(const IObj&) const { return r.zero(); }
  Obj zero() const { return r.zero(); }
  Mor twist(const Obj& a, const Obj& c) const { return r.twist(a, c); }
  bool zeroless() const { return r.zeroless(); }

  Obj transition(const IMor&, const Obj& a) const { return a; }
  Mor transition(const IMor&, const Mor& f) const { return f; }

  Obj otimes(const Obj& a, const Obj& c) const { return r.otimes(a, c); }
  Mor otimes(const Mor& f, const Mor& g) const { return r.otimes(f, g); }
  Obj one() const { return r.one(); }
  bool has_twist_times() const { return r.has_twist_times(); }
  Mor twist_times(const Obj& a, const Obj& c) const { return r.twist_times(a, c); }
  Mor dl(const Obj& a, const Obj& b, const Obj& b2) const { return r.dl(a, b, b2); }

  bool mor_eq(const Mor& f, const Mor& g) const { return mor_equal(r, f, g); }
  std::string show(const Obj& a) const { return rigcomp::show(r, a); }
  std::string show(const Mor& f) const { return rigcomp::show(r, f); }
};

template <class R>
ZeroGraded<R> zero_graded(R r) {
  return ZeroGraded<R>{std::move(r), {}};
}

/**
 * @brief One fiber C(x) of a graded category as a permutative category.
 * The multiplicative operations are meaningful only for x = 0.
 */
template <class GC>
struct FiberView {
  using Obj = typename GC::Obj;
  using Mor = typename GC::Mor;
  using IObj = typename GC::Index::Obj;
  GC g;
  IObj x;

  std::vector<Obj> objects(const Bound& b) const { return g.fiber_objects(x, b); }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const { return g.homs(a, c, b); }
  Obj dom(const Mor& f) const { return g.dom(f); }
  Obj cod(const Mor& f) const { return g.cod(f); }
  Mor id(const Obj& a) const { return g.id(a); }
  Mor compose(const Mor& h, const Mor& f) const { return g.compose(h, f); }
  Obj oplus(const Obj& a, const Obj& c) const { return g.oplus(a, c); }
  Mor oplus(const Mor& f, const Mor& h) const { return g.oplus(f, h); }
  Obj zero() const { return g.zero(x); }
  Mor twist(const Obj& a, const Obj& c) const { return g.twist(a, c); }
  bool zeroless() const { return g.zeroless(); }

  Obj otimes(const Obj& a, const Obj& c) const { return g.otimes(a, c); }
  Mor otimes(const Mor& f, const Mor& h) const { return g.otimes(f, h); }
  Obj one() const { return g.one(); }
  bool has_twist_times() const { return g.has_twist_times(); }
  Mor twist_times(const Obj& a, const Obj& c) const { return g.twist_times(a, c); }
  Mor dl(const Obj& a, const Obj& b, const Obj& b2) const { return g.dl(a, b, b2); }

  std::vector<Mor> successors(const Obj& a, const Bound& b) const { return g.successors(a, b); }
  Mor random_auto(const Obj& a, std::mt19937_64& rng) const { return g.random_auto(a, rng); }
  Mor inverse(const Mor& f) const { return g.inverse(f); }

  bool mor_eq(const Mor& f, const Mor& h) const { return mor_equal(g, f, h); }
  std::string show(const Obj& a) const { return rigcomp::show(g, a); }
  std::string show(const Mor& f) const { return rigcomp::show(g, f); }
};

/** @brief Sum of a nonempty list of objects. */
template <class C, class O>
O oplus_all(const C& c, const std::vector<O>& objs) {
  O acc = objs.at(0);
  for (std::size_t i = 1; i < objs.size(); ++i) acc = c.oplus(acc, objs[i]);
  return acc;
}

template <class C, class M>
M oplus_all_mor(const C& c, const std::vector<M>& mors) {
  M acc = mors.at(0);
  for (std::size_t i = 1; i < mors.size(); ++i) acc = c.oplus(acc, mors[i]);
  return acc;
}

/**
 * @brief Permutation of summands: from objs[0]+...+objs[k-1] to
 * objs[order[0]]+objs[order[1]]+..., built from twists unless the
 * category supplies block_permute.
 */
template <class C, class O>
auto block_permute(const C& c, const std::vector<O>& objs, const std::vector<int>& order) {
  if constexpr (requires { c.block_permute(objs, order); }) {
    return c.block_permute(objs, order);
  } else {
    std::vector<int> cur(objs.size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = static_cast<int>(i);
    auto sum_of = [&](std::size_t from, std::size_t to) {
      std::vector<O> part;
      for (std::size_t i = from; i < to; ++i) part.push_back(objs[cur[i]]);
      return part;
    };
    auto m = c.id(oplus_all(c, objs));
    for (std::size_t t = 0; t < order.size(); ++t) {
      std::size_t p = t;
      while (cur[p] != order[t]) ++p;
      while (p > t) {
        auto sw = c.twist(objs[cur[p - 1]], objs[cur[p]]);
        auto pre = sum_of(0, p - 1);
        auto post = sum_of(p + 1, cur.size());
        if (!pre.empty()) sw = c.oplus(c.id(oplus_all(c, pre)), sw);
        if (!post.empty()) sw = c.oplus(sw, c.id(oplus_all(c, post)));
        m = c.compose(sw, m);
        std::swap(cur[p - 1], cur[p]);
        --p;
      }
    }
    return m;
  }
}

/**
 * @brief Visits tuples from a union of product spaces, each given by its
 * list of dimensions. Exhaustive when the union is small, otherwise
 * b.samples uniform draws.
 */
template <class Fn>
std::size_t for_product_union(const std::vector<std::vector<std::size_t>>& spaces, const Bound& b, std::uint64_t salt,
                              Fn&& fn) {
  std::vector<double> sizes;
  double total = 0;
  for (auto& dims : spaces) {
    double s = 1;
    for (auto d : dims) s *= static_cast<double>(d);
    sizes.push_back(s);
    total += s;
  }
  if (total == 0) return 0;
  std::vector<std::size_t> digits;
  if (total <= static_cast<double>(b.tuple_max)) {
    std::size_t count = 0;
    for (std::size_t g = 0; g < spaces.size(); ++g) {
      if (sizes[g] == 0) continue;
      auto& dims = spaces[g];
      digits.assign(dims.size(), 0);
      while (true) {
        fn(g, digits);
        ++count;
        std::size_t i = 0;
        while (i < dims.size() && ++digits[i] == dims[i]) digits[i++] = 0;
        if (i == dims.size()) break;
      }
    }
    return count;
  }
  std::mt19937_64 rng(b.seed ^ (salt * 0x2545f4914f6cdd1dULL));
  std::vector<std::size_t> prefix;
  std::size_t acc = 0;
  for (double s : sizes) {
    acc += static_cast<std::size_t>(s);
    prefix.push_back(acc);
  }
  for (std::size_t t = 0; t < b.samples; ++t) {
    std::size_t r = static_cast<std::size_t>(rng() % acc);
    std::size_t g = static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), r) - prefix.begin());
    std::size_t off = r - (g ? prefix[g - 1] : 0);
    auto& dims = spaces[g];
    digits.assign(dims.size(), 0);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      digits[i] = off % dims[i];
      off /= dims[i];
    }
    fn(g, digits);
  }
  return b.samples;
}

/** @brief d_l from the twists: C(chi^{y,x})(gamma^{b+b',a}) o (gamma^{a,b} + gamma^{a,b'}). */
template <class GC>
typename GC::Mor derive_left_dist(const GC& gc, const typename GC::Obj& a, const typename GC::Obj& b,
                                  const typename GC::Obj& b2) {
  if (!(gc.grade(b) == gc.grade(b2))) throw StructureError("derive_left_dist: b and b' lie in different fibers");
  const auto& J = gc.index();
  auto x = gc.grade(a), y = gc.grade(b);
  auto first = gc.oplus(gc.twist_times(a, b), gc.twist_times(a, b2));
  auto second = gc.transition(J.twist(y, x), gc.twist_times(gc.oplus(b, b2), a));
  return gc.compose(second, first);
}

namespace detail {

enum Slot { obj_slot, mor_slot, idx_slot };

template <class GC>
struct GradedRunner {
  const GC& gc;
  const GradedSamples<GC>& s;
  const Bound& b;
  Report& r;
  std::vector<std::vector<std::size_t>> og, mg, kg;  // by grade index

  GradedRunner(const GC& g, const GradedSamples<GC>& s_, const Bound& b_, Report& r_) : gc(g), s(s_), b(b_), r(r_) {
    const auto& J = gc.index();
    og.resize(s.grades.size());
    mg.resize(s.grades.size());
    kg.resize(s.grades.size());
    auto gi = [&](const auto& x) {
      for (std::size_t i = 0; i < s.grades.size(); ++i)
        if (s.grades[i] == x) return static_cast<int>(i);
      return -1;
    };
    for (std::size_t i = 0; i < s.objs.size(); ++i)
      if (int g = gi(gc.grade(s.objs[i])); g >= 0) og[g].push_back(i);
    for (std::size_t i = 0; i < s.mors.size(); ++i)
      if (int g = gi(gc.grade(gc.dom(s.mors[i]))); g >= 0) mg[g].push_back(i);
    for (std::size_t i = 0; i < s.index_mors.size(); ++i)
      if (int g = gi(J.dom(s.index_mors[i])); g >= 0) kg[g].push_back(i);
  }

  // body(grades, items) with items indices into objs / mors / index_mors by slot kind
  template <class Body>
  void run(const std::string& cond, int nvars, const std::vector<std::pair<Slot, int>>& slots, std::uint64_t salt,
           Body&& body) {
    std::size_t G = s.grades.size();
    std::vector<std::vector<int>> assigns;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    std::size_t total = 1;
    for (int i = 0; i < nvars; ++i) total *= G;
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t v = t;
      for (int i = 0; i < nvars; ++i) {
        cur[i] = static_cast<int>(v % G);
        v /= G;
      }
      assigns.push_back(cur);
    }
    auto list = [&](Slot k, int g) -> const std::vector<std::size_t>& {
      return k == obj_slot ? og[g] : k == mor_slot ? mg[g] : kg[g];
    };
    std::vector<std::vector<std::size_t>> spaces;
    for (auto& as : assigns) {
      std::vector<std::size_t> dims;
      for (auto& [k, var] : slots) dims.push_back(list(k, as[var]).size());
      spaces.push_back(dims);
    }
    std::vector<std::size_t> items(slots.size());
    for_product_union(spaces, b, salt, [&](std::size_t g, const std::vector<std::size_t>& d) {
      for (std::size_t i = 0; i < slots.size(); ++i) items[i] = list(slots[i].first, assigns[g][slots[i].second])[d[i]];
      try {
        body(assigns[g], items);
      } catch (const CompositionError& e) {
        r.fail(cond, std::string("ill-typed composite: ") + e.what());
      } catch (const StructureError& e) {
        r.fail(cond, std::string("structure error: ") + e.what());
      }
    });
  }
};

}  // namespace detail

/**
 * @brief Per-condition check of a graded bipermutative (or strictly
 * bimonoidal, when has_twist_times() is false) category.
 */
template <class GC>
Report check_graded(const GC& gc, const GradedSamples<GC>& s, const Bound& b) {
  using detail::idx_slot;
  using detail::mor_slot;
  using detail::obj_slot;
  Report r;
  const auto& J = gc.index();
  detail::GradedRunner<GC> run(gc, s, b, r);
  auto O = [&](std::size_t i) -> const auto& { return s.objs[i]; };
  auto M = [&](std::size_t i) -> const auto& { return s.mors[i]; };
  auto K = [&](std::size_t i) -> const auto& { return s.index_mors[i]; };
  auto sh = [&](const auto& x) { return show(gc, x); };
  auto eq = [&](const auto& f, const auto& g) { return mor_equal(gc, f, g); };
  bool zl = gc.zeroless();
  bool tw = gc.has_twist_times();

  // fibers
  for (std::size_t gi = 0; gi < s.grades.size(); ++gi) {
    FiberView<GC> fv{gc, s.grades[gi]};
    Samples<FiberView<GC>> fs;
    for (auto i : run.og[gi]) fs.objs.push_back(O(i));
    for (auto i : run.mg[gi]) fs.mors.push_back(M(i));
    fill_chains(fv, fs, b);
    r.merge(check_permutative(fv, fs, b), "fiber: ");
  }

  // transition functors
  run.run("transition", 1, {{idx_slot, 0}, {obj_slot, 0}, {obj_slot, 0}}, 31, [&](auto&, auto& it) {
    auto& k = K(it[0]);
    auto &a = O(it[1]), &a2 = O(it[2]);
    auto y = J.cod(k);
    auto Ta = gc.transition(k, a);
    r.expect(gc.grade(Ta) == y, "transition", [&] { return "grade of C(k)" + sh(a); });
    r.expect(gc.transition(J.id(J.dom(k)), a) == a, "transition", [&] { return "C(id)" + sh(a); });
    r.expect(eq(gc.transition(k, gc.id(a)), gc.id(Ta)), "transition", [&] { return "C(k)(id)" + sh(a); });
    r.expect(gc.transition(k, gc.oplus(a, a2)) == gc.oplus(Ta, gc.transition(k, a2)), "transition",
             [&] { return "C(k) strict on sum " + sh(a) + ", " + sh(a2); });
    r.expect(eq(gc.transition(k, gc.twist(a, a2)), gc.twist(Ta, gc.transition(k, a2))), "transition",
             [&] { return "C(k) strict on twist " + sh(a) + ", " + sh(a2); });
    if (!zl)
      r.expect(gc.transition(k, gc.zero(J.dom(k))) == gc.zero(y), "transition", [&] { return "C(k)(0) != 0"; });
  });
  run.run("transition", 1, {{idx_slot, 0}, {mor_slot, 0}, {mor_slot, 0}}, 32, [&](auto&, auto& it) {
    auto& k = K(it[0]);
    auto &f = M(it[1]), &g = M(it[2]);
    auto Tf = gc.transition(k, f);
    r.expect(gc.dom(Tf) == gc.transition(k, gc.dom(f)) && gc.cod(Tf) == gc.transition(k, gc.cod(f)), "transition",
             [&] { return "endpoints of C(k)" + sh(f); });
    r.expect(eq(gc.transition(k, gc.oplus(f, g)), gc.oplus(Tf, gc.transition(k, g))), "transition",
             [&] { return "C(k) strict on morphism sum " + sh(f) + ", " + sh(g); });
    if (gc.cod(f) == gc.dom(g))
      r.expect(eq(gc.transition(k, gc.compose(g, f)), gc.compose(gc.transition(k, g), Tf)), "transition",
               [&] { return "C(k) on composite " + sh(g) + " o " + sh(f); });
  });
  for (auto& [k, l] : s.index_pairs) {
    auto lk = J.compose(l, k);
    for (std::size_t i = 0; i < s.objs.size(); ++i) {
      if (!(gc.grade(O(i)) == J.dom(k))) continue;
      r.expect(gc.transition(lk, O(i)) == gc.transition(l, gc.transition(k, O(i))), "transition",
               [&] { return "C(lk) != C(l)C(k) on " + sh(O(i)); });
    }
    for (std::size_t i = 0; i < s.mors.size(); ++i) {
      if (!(gc.grade(gc.dom(M(i))) == J.dom(k))) continue;
      r.expect(eq(gc.transition(lk, M(i)), gc.transition(l, gc.transition(k, M(i)))), "transition",
               [&] { return "C(lk) != C(l)C(k) on " + sh(M(i)); });
    }
  }

  // tensor is a bifunctor natural in the grades
  run.run("tensor functoriality", 2, {{obj_slot, 0}, {obj_slot, 1}}, 41, [&](auto& g, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]);
    auto ac = gc.otimes(a, c);
    r.expect(gc.grade(ac) == J.oplus(s.grades[g[0]], s.grades[g[1]]), "tensor functoriality",
             [&] { return "grade of " + sh(a) + " * " + sh(c); });
    r.expect(eq(gc.otimes(gc.id(a), gc.id(c)), gc.id(ac)), "tensor functoriality",
             [&] { return "id * id on " + sh(a) + ", " + sh(c); });
  });
  run.run("tensor functoriality", 2, {{idx_slot, 0}, {idx_slot, 1}, {obj_slot, 0}, {obj_slot, 1}}, 42,
          [&](auto&, auto& it) {
            auto &k = K(it[0]), &l = K(it[1]);
            auto &a = O(it[2]), &c = O(it[3]);
            r.expect(gc.transition(J.oplus(k, l), gc.otimes(a, c)) == gc.otimes(gc.transition(k, a), gc.transition(l, c)),
                     "tensor functoriality", [&] { return "C(k+l)(a*b) on " + sh(a) + ", " + sh(c); });
          });
  run.run("tensor functoriality", 2, {{idx_slot, 0}, {idx_slot, 1}, {mor_slot, 0}, {mor_slot, 1}}, 43,
          [&](auto&, auto& it) {
            auto &k = K(it[0]), &l = K(it[1]);
            auto &f = M(it[2]), &g = M(it[3]);
            auto fg = gc.otimes(f, g);
            r.expect(gc.dom(fg) == gc.otimes(gc.dom(f), gc.dom(g)) && gc.cod(fg) == gc.otimes(gc.cod(f), gc.cod(g)),
                     "tensor functoriality", [&] { return "endpoints of " + sh(f) + " * " + sh(g); });
            r.expect(eq(gc.transition(J.oplus(k, l), fg), gc.otimes(gc.transition(k, f), gc.transition(l, g))),
                     "tensor functoriality", [&] { return "C(k+l)(f*g) on " + sh(f) + ", " + sh(g); });
          });
  run.run("tensor functoriality", 2, {{mor_slot, 0}, {mor_slot, 0}, {mor_slot, 1}, {mor_slot, 1}}, 44,
          [&](auto&, auto& it) {
            auto &f = M(it[0]), &f2 = M(it[1]), &g = M(it[2]), &g2 = M(it[3]);
            if (!(gc.cod(f) == gc.dom(f2)) || !(gc.cod(g) == gc.dom(g2))) return;
            r.expect(eq(gc.otimes(gc.compose(f2, f), gc.compose(g2, g)), gc.compose(gc.otimes(f2, g2), gc.otimes(f, g))),
                     "tensor functoriality", [&] { return "interchange " + sh(f) + ", " + sh(g); });
          });

  // strict unit
  {
    auto one = gc.one();
    r.expect(gc.grade(one) == J.zero(), "unit", [] { return std::string("unit not in grade 0"); });
    for (auto& a : s.objs)
      r.expect(gc.otimes(one, a) == a && gc.otimes(a, one) == a, "unit", [&] { return sh(a); });
    for (auto& f : s.mors)
      r.expect(eq(gc.otimes(gc.id(one), f), f) && eq(gc.otimes(f, gc.id(one)), f), "unit", [&] { return sh(f); });
  }

  // multiplicative twist
  if (tw) {
    run.run("tensor twist", 2, {{mor_slot, 0}, {mor_slot, 1}}, 51, [&](auto& g, auto& it) {
      auto &f = M(it[0]), &h = M(it[1]);
      auto x = s.grades[g[0]], y = s.grades[g[1]];
      auto chi = J.twist(y, x);
      auto a = gc.dom(f), c = gc.dom(h);
      auto gam = gc.twist_times(a, c);
      r.expect(gc.dom(gam) == gc.otimes(a, c) && gc.cod(gam) == gc.transition(chi, gc.otimes(c, a)), "tensor twist",
               [&] { return "endpoints of gamma " + sh(a) + ", " + sh(c); });
      auto lhs = gc.compose(gc.transition(chi, gc.otimes(h, f)), gam);
      auto rhs = gc.compose(gc.twist_times(gc.cod(f), gc.cod(h)), gc.otimes(f, h));
      r.expect(eq(lhs, rhs), "tensor twist", [&] { return "naturality " + sh(f) + ", " + sh(h); });
      auto inv = gc.compose(gc.transition(chi, gc.twist_times(c, a)), gam);
      r.expect(eq(inv, gc.id(gc.otimes(a, c))), "tensor twist", [&] { return "involution " + sh(a) + ", " + sh(c); });
    });
    run.run("tensor twist", 2, {{idx_slot, 0}, {idx_slot, 1}, {obj_slot, 0}, {obj_slot, 1}}, 52,
            [&](auto&, auto& it) {
              auto &k = K(it[0]), &l = K(it[1]);
              auto &a = O(it[2]), &c = O(it[3]);
              r.expect(eq(gc.transition(J.oplus(k, l), gc.twist_times(a, c)),
                          gc.twist_times(gc.transition(k, a), gc.transition(l, c))),
                       "tensor twist", [&] { return "C(k+l)(gamma) on " + sh(a) + ", " + sh(c); });
            });
    auto one = gc.one();
    for (auto& a : s.objs)
      r.expect(eq(gc.twist_times(a, one), gc.id(a)) && eq(gc.twist_times(one, a), gc.id(a)), "tensor twist",
               [&] { return "gamma with unit on " + sh(a); });

    // hexagon
    run.run("tensor associativity", 3, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 2}}, 61, [&](auto& g, auto& it) {
      auto &a = O(it[0]), &c = O(it[1]), &e = O(it[2]);
      auto x = s.grades[g[0]], y = s.grades[g[1]], z = s.grades[g[2]];
      r.expect(J.compose(J.twist(z, J.oplus(x, y)), J.oplus(J.twist(x, z), J.id(y))) == J.oplus(J.id(x), J.twist(z, y)),
               "tensor associativity", [&] { return std::string("index twist identity"); });
      auto lhs = gc.compose(gc.transition(J.twist(z, J.oplus(x, y)), gc.otimes(gc.twist_times(e, a), gc.id(c))),
                            gc.twist_times(gc.otimes(a, c), e));
      auto rhs = gc.otimes(gc.id(a), gc.twist_times(c, e));
      r.expect(eq(lhs, rhs), "tensor associativity", [&] { return "hexagon " + sh(a) + ", " + sh(c) + ", " + sh(e); });
    });
  }
  run.run("tensor associativity", 3, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 2}}, 62, [&](auto&, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]), &e = O(it[2]);
    r.expect(gc.otimes(gc.otimes(a, c), e) == gc.otimes(a, gc.otimes(c, e)), "tensor associativity",
             [&] { return "objects " + sh(a) + ", " + sh(c) + ", " + sh(e); });
  });
  run.run("tensor associativity", 3, {{mor_slot, 0}, {mor_slot, 1}, {mor_slot, 2}}, 63, [&](auto&, auto& it) {
    auto &f = M(it[0]), &g = M(it[1]), &h = M(it[2]);
    r.expect(eq(gc.otimes(gc.otimes(f, g), h), gc.otimes(f, gc.otimes(g, h))), "tensor associativity",
             [&] { return "morphisms " + sh(f) + ", " + sh(g) + ", " + sh(h); });
  });

  // annihilation
  if (!zl) {
    run.run("zero annihilates", 2, {{obj_slot, 0}}, 71, [&](auto& g, auto& it) {
      auto& a = O(it[0]);
      auto x = s.grades[g[0]], y = s.grades[g[1]];
      auto z = gc.zero(y);
      r.expect(gc.otimes(a, z) == gc.zero(J.oplus(x, y)) && gc.otimes(z, a) == gc.zero(J.oplus(y, x)),
               "zero annihilates", [&] { return sh(a) + " with 0 of grade " + show(J, y); });
    });
    run.run("zero annihilates", 2, {{mor_slot, 0}}, 72, [&](auto& g, auto& it) {
      auto& f = M(it[0]);
      auto x = s.grades[g[0]], y = s.grades[g[1]];
      auto z = gc.id(gc.zero(y));
      r.expect(eq(gc.otimes(f, z), gc.id(gc.zero(J.oplus(x, y)))) && eq(gc.otimes(z, f), gc.id(gc.zero(J.oplus(y, x)))),
               "zero annihilates", [&] { return sh(f) + " with 0 of grade " + show(J, y); });
    });
  }

  // right distributivity
  run.run("right distributivity", 2, {{obj_slot, 0}, {obj_slot, 0}, {obj_slot, 1}}, 81, [&](auto&, auto& it) {
    auto &a = O(it[0]), &a2 = O(it[1]), &c = O(it[2]);
    r.expect(gc.oplus(gc.otimes(a, c), gc.otimes(a2, c)) == gc.otimes(gc.oplus(a, a2), c), "right distributivity",
             [&] { return sh(a) + ", " + sh(a2) + ", " + sh(c); });
  });
  run.run("right distributivity", 2, {{mor_slot, 0}, {mor_slot, 0}, {mor_slot, 1}}, 82, [&](auto&, auto& it) {
    auto &f = M(it[0]), &f2 = M(it[1]), &g = M(it[2]);
    r.expect(eq(gc.oplus(gc.otimes(f, g), gc.otimes(f2, g)), gc.otimes(gc.oplus(f, f2), g)), "right distributivity",
             [&] { return sh(f) + ", " + sh(f2) + ", " + sh(g); });
  });

  // left distributivity
  run.run("left distributivity", 2, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 1}}, 91, [&](auto&, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]), &c2 = O(it[2]);
    auto d = gc.dl(a, c, c2);
    r.expect(gc.dom(d) == gc.oplus(gc.otimes(a, c), gc.otimes(a, c2)) && gc.cod(d) == gc.otimes(a, gc.oplus(c, c2)),
             "left distributivity", [&] { return "endpoints " + sh(a) + ", " + sh(c) + ", " + sh(c2); });
    if (tw)
      r.expect(eq(d, derive_left_dist(gc, a, c, c2)), "left distributivity",
               [&] { return "d_l differs from derived composite at " + sh(a) + ", " + sh(c) + ", " + sh(c2); });
  });
  run.run("left distributivity", 2, {{mor_slot, 0}, {mor_slot, 1}, {mor_slot, 1}}, 92, [&](auto&, auto& it) {
    auto &f = M(it[0]), &g = M(it[1]), &g2 = M(it[2]);
    auto lhs = gc.compose(gc.otimes(f, gc.oplus(g, g2)), gc.dl(gc.dom(f), gc.dom(g), gc.dom(g2)));
    auto rhs = gc.compose(gc.dl(gc.cod(f), gc.cod(g), gc.cod(g2)), gc.oplus(gc.otimes(f, g), gc.otimes(f, g2)));
    r.expect(eq(lhs, rhs), "left distributivity", [&] { return "naturality " + sh(f) + ", " + sh(g) + ", " + sh(g2); });
  });

  // interchange with the additive twist
  run.run("twist interchange", 2, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 1}}, 101, [&](auto& g, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]), &c2 = O(it[2]);
    auto ac = gc.otimes(a, c), ac2 = gc.otimes(a, c2);
    auto lhs = gc.compose(gc.dl(a, c2, c), gc.twist(ac, ac2));
    auto rhs = gc.compose(gc.otimes(gc.id(a), gc.twist(c, c2)), gc.dl(a, c, c2));
    r.expect(eq(lhs, rhs), "twist interchange", [&] { return "d_l square " + sh(a) + ", " + sh(c) + ", " + sh(c2); });
    if (tw) {
      auto chi = J.twist(s.grades[g[1]], s.grades[g[0]]);
      auto t1 = gc.twist_times(a, c), t2 = gc.twist_times(a, c2);
      auto l1 = gc.compose(gc.twist(gc.cod(t1), gc.cod(t2)), gc.oplus(t1, t2));
      auto r1 = gc.compose(gc.oplus(t2, t1), gc.twist(ac, ac2));
      r.expect(eq(l1, r1), "twist interchange", [&] { return "gamma+ vs gamma* " + sh(a) + ", " + sh(c) + ", " + sh(c2); });
      auto l2 = gc.compose(gc.transition(chi, gc.otimes(gc.twist(c, c2), gc.id(a))), gc.twist_times(a, gc.oplus(c, c2)));
      auto r2 = gc.compose(gc.twist_times(a, gc.oplus(c2, c)), gc.otimes(gc.id(a), gc.twist(c, c2)));
      r.expect(eq(l2, r2), "twist interchange",
               [&] { return "(gamma+ * id) o gamma* " + sh(a) + ", " + sh(c) + ", " + sh(c2); });
    }
  });
  run.run("twist interchange", 2, {{obj_slot, 0}, {obj_slot, 0}, {obj_slot, 1}}, 102, [&](auto&, auto& it) {
    auto &a = O(it[0]), &a2 = O(it[1]), &c = O(it[2]);
    r.expect(eq(gc.otimes(gc.twist(a, a2), gc.id(c)), gc.twist(gc.otimes(a, c), gc.otimes(a2, c))),
             "twist interchange", [&] { return "d_r square " + sh(a) + ", " + sh(a2) + ", " + sh(c); });
  });

  // associativity of distributivity
  run.run("distributivity associative", 3, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 2}, {obj_slot, 2}}, 111,
          [&](auto&, auto& it) {
            auto &a = O(it[0]), &c = O(it[1]), &e = O(it[2]), &e2 = O(it[3]);
            auto lhs = gc.dl(gc.otimes(a, c), e, e2);
            auto rhs = gc.compose(gc.otimes(gc.id(a), gc.dl(c, e, e2)), gc.dl(a, gc.otimes(c, e), gc.otimes(c, e2)));
            r.expect(eq(lhs, rhs), "distributivity associative",
                     [&] { return sh(a) + ", " + sh(c) + ", " + sh(e) + ", " + sh(e2); });
          });

  // pentagon
  run.run("pentagon", 2, {{obj_slot, 0}, {obj_slot, 0}, {obj_slot, 1}, {obj_slot, 1}}, 121, [&](auto&, auto& it) {
    auto &a = O(it[0]), &a2 = O(it[1]), &c = O(it[2]), &c2 = O(it[3]);
    auto lhs = gc.oplus(gc.dl(a, c, c2), gc.dl(a2, c, c2));
    auto mid = gc.oplus(gc.oplus(gc.id(gc.otimes(a, c)), gc.twist(gc.otimes(a, c2), gc.otimes(a2, c))),
                        gc.id(gc.otimes(a2, c2)));
    auto rhs = gc.compose(gc.dl(gc.oplus(a, a2), c, c2), mid);
    r.expect(eq(lhs, rhs), "pentagon", [&] { return sh(a) + ", " + sh(a2) + ", " + sh(c) + ", " + sh(c2); });
  });

  // left/right distributivity interchange
  run.run("d_l * id", 3, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 1}, {obj_slot, 2}}, 131, [&](auto&, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]), &c2 = O(it[2]), &e = O(it[3]);
    r.expect(eq(gc.otimes(gc.dl(a, c, c2), gc.id(e)), gc.dl(a, gc.otimes(c, e), gc.otimes(c2, e))), "d_l * id",
             [&] { return sh(a) + ", " + sh(c) + ", " + sh(c2) + ", " + sh(e); });
  });
  return r;
}

template <class GC>
Report check_graded(const GC& gc, const Bound& b) {
  return check_graded(gc, graded_samples(gc, b), b);
}

/** @brief Ungraded check: the category viewed as graded over the trivial index. */
template <class R>
Report check_bipermutative(const R& r, const Bound& b) {
  return check_graded(zero_graded(r), b);
}

/** @brief Checker for graded strictly bimonoidal categories (no tensor twist). */
template <class GC>
Report check_graded_strictly_bimonoidal(const GC& gc, const Bound& b) {
  return check_graded(gc, b);
}

/** @brief Lax morphism of graded rig categories (F strictly natural in the grade). */
template <class GS, class GT>
struct LaxRigMorphism {
  const GS* source;
  const GT* target;
  std::function<typename GT::Obj(const typename GS::Obj&)> on_obj;
  std::function<typename GT::Mor(const typename GS::Mor&)> on_mor;
  std::function<typename GT::Index::Obj(const typename GS::Index::Obj&)> on_grade;
  std::function<typename GT::Index::Mor(const typename GS::Index::Mor&)> on_index_mor;
  std::function<typename GT::Mor(const typename GS::Obj&, const typename GS::Obj&)> eta_plus;
  std::function<typename GT::Mor(const typename GS::Obj&, const typename GS::Obj&)> eta_times;
  std::function<typename GT::Mor()> unit_times;  // 1 -> F(1)
};

template <class GS, class GT>
Report check_lax_rig_morphism(const LaxRigMorphism<GS, GT>& F, const GradedSamples<GS>& s, const Bound& b) {
  using detail::idx_slot;
  using detail::mor_slot;
  using detail::obj_slot;
  Report r;
  const GS& C = *F.source;
  const GT& D = *F.target;
  const auto& J = C.index();
  detail::GradedRunner<GS> run(C, s, b, r);
  auto O = [&](std::size_t i) -> const auto& { return s.objs[i]; };
  auto M = [&](std::size_t i) -> const auto& { return s.mors[i]; };
  auto K = [&](std::size_t i) -> const auto& { return s.index_mors[i]; };
  auto sh = [&](const auto& x) { return show(C, x); };
  auto eq = [&](const auto& f, const auto& g) { return mor_equal(D, f, g); };
  auto FO = [&](const auto& a) { return F.on_obj(a); };
  auto FM = [&](const auto& f) { return F.on_mor(f); };

  for (auto& a : s.objs)
    r.expect(eq(FM(C.id(a)), D.id(FO(a))), "functor", [&] { return "identity at " + sh(a); });
  for (auto& f : s.mors) {
    auto Ff = FM(f);
    r.expect(D.dom(Ff) == FO(C.dom(f)) && D.cod(Ff) == FO(C.cod(f)), "functor", [&] { return "endpoints of " + sh(f); });
  }
  run.run("functor", 1, {{mor_slot, 0}, {mor_slot, 0}}, 201, [&](auto&, auto& it) {
    auto &f = M(it[0]), &g = M(it[1]);
    if (!(C.cod(f) == C.dom(g))) return;
    r.expect(eq(FM(C.compose(g, f)), D.compose(FM(g), FM(f))), "functor", [&] { return "composite " + sh(g) + " o " + sh(f); });
  });
  run.run("grade naturality", 1, {{idx_slot, 0}, {obj_slot, 0}}, 202, [&](auto&, auto& it) {
    auto& k = K(it[0]);
    auto& a = O(it[1]);
    r.expect(FO(C.transition(k, a)) == D.transition(F.on_index_mor(k), FO(a)), "grade naturality",
             [&] { return "F C(k) != D(k) F on " + sh(a); });
  });

  // additive structure
  run.run("eta+", 1, {{obj_slot, 0}, {obj_slot, 0}}, 211, [&](auto&, auto& it) {
    auto &a = O(it[0]), &a2 = O(it[1]);
    auto e = F.eta_plus(a, a2);
    r.expect(D.dom(e) == D.oplus(FO(a), FO(a2)) && D.cod(e) == FO(C.oplus(a, a2)), "eta+",
             [&] { return "endpoints " + sh(a) + ", " + sh(a2); });
    r.expect(eq(D.compose(FM(C.twist(a, a2)), e), D.compose(F.eta_plus(a2, a), D.twist(FO(a), FO(a2)))), "eta+",
             [&] { return "twist compatibility " + sh(a) + ", " + sh(a2); });
  });
  run.run("eta+", 1, {{obj_slot, 0}, {obj_slot, 0}, {obj_slot, 0}}, 212, [&](auto&, auto& it) {
    auto &a = O(it[0]), &a2 = O(it[1]), &a3 = O(it[2]);
    auto lhs = D.compose(F.eta_plus(C.oplus(a, a2), a3), D.oplus(F.eta_plus(a, a2), D.id(FO(a3))));
    auto rhs = D.compose(F.eta_plus(a, C.oplus(a2, a3)), D.oplus(D.id(FO(a)), F.eta_plus(a2, a3)));
    r.expect(eq(lhs, rhs), "eta+", [&] { return "associativity " + sh(a) + ", " + sh(a2) + ", " + sh(a3); });
  });
  run.run("eta+", 1, {{mor_slot, 0}, {mor_slot, 0}}, 213, [&](auto&, auto& it) {
    auto &f = M(it[0]), &g = M(it[1]);
    auto lhs = D.compose(FM(C.oplus(f, g)), F.eta_plus(C.dom(f), C.dom(g)));
    auto rhs = D.compose(F.eta_plus(C.cod(f), C.cod(g)), D.oplus(FM(f), FM(g)));
    r.expect(eq(lhs, rhs), "eta+", [&] { return "binaturality " + sh(f) + ", " + sh(g); });
  });
  run.run("eta+", 1, {{idx_slot, 0}, {obj_slot, 0}, {obj_slot, 0}}, 214, [&](auto&, auto& it) {
    auto& k = K(it[0]);
    auto &a = O(it[1]), &a2 = O(it[2]);
    r.expect(eq(D.transition(F.on_index_mor(k), F.eta_plus(a, a2)), F.eta_plus(C.transition(k, a), C.transition(k, a2))),
             "eta+", [&] { return "naturality in the grade " + sh(a) + ", " + sh(a2); });
  });

  // multiplicative structure
  run.run("eta*", 2, {{obj_slot, 0}, {obj_slot, 1}}, 221, [&](auto& g, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]);
    auto e = F.eta_times(a, c);
    r.expect(D.dom(e) == D.otimes(FO(a), FO(c)) && D.cod(e) == FO(C.otimes(a, c)), "eta*",
             [&] { return "endpoints " + sh(a) + ", " + sh(c); });
    if (C.has_twist_times() && D.has_twist_times()) {
      auto chi = J.twist(s.grades[g[1]], s.grades[g[0]]);
      auto lhs = D.compose(FM(C.twist_times(a, c)), e);
      auto rhs = D.compose(D.transition(F.on_index_mor(chi), F.eta_times(c, a)), D.twist_times(FO(a), FO(c)));
      r.expect(eq(lhs, rhs), "eta*", [&] { return "twist compatibility " + sh(a) + ", " + sh(c); });
    }
  });
  run.run("eta*", 3, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 2}}, 222, [&](auto&, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]), &e = O(it[2]);
    auto lhs = D.compose(F.eta_times(C.otimes(a, c), e), D.otimes(F.eta_times(a, c), D.id(FO(e))));
    auto rhs = D.compose(F.eta_times(a, C.otimes(c, e)), D.otimes(D.id(FO(a)), F.eta_times(c, e)));
    r.expect(eq(lhs, rhs), "eta*", [&] { return "associativity " + sh(a) + ", " + sh(c) + ", " + sh(e); });
  });
  run.run("eta*", 2, {{mor_slot, 0}, {mor_slot, 1}}, 223, [&](auto&, auto& it) {
    auto &f = M(it[0]), &g = M(it[1]);
    auto lhs = D.compose(FM(C.otimes(f, g)), F.eta_times(C.dom(f), C.dom(g)));
    auto rhs = D.compose(F.eta_times(C.cod(f), C.cod(g)), D.otimes(FM(f), FM(g)));
    r.expect(eq(lhs, rhs), "eta*", [&] { return "binaturality " + sh(f) + ", " + sh(g); });
  });
  run.run("eta*", 2, {{idx_slot, 0}, {idx_slot, 1}, {obj_slot, 0}, {obj_slot, 1}}, 224, [&](auto&, auto& it) {
    auto &k = K(it[0]), &l = K(it[1]);
    auto &a = O(it[2]), &c = O(it[3]);
    r.expect(eq(D.transition(F.on_index_mor(J.oplus(k, l)), F.eta_times(a, c)),
                F.eta_times(C.transition(k, a), C.transition(l, c))),
             "eta*", [&] { return "naturality in the grades " + sh(a) + ", " + sh(c); });
  });
  if (F.unit_times) {
    auto u = F.unit_times();
    for (auto& a : s.objs) {
      auto lhs = D.compose(F.eta_times(C.one(), a), D.otimes(u, D.id(FO(a))));
      auto rhs = D.compose(F.eta_times(a, C.one()), D.otimes(D.id(FO(a)), u));
      r.expect(eq(lhs, D.id(FO(a))) && eq(rhs, D.id(FO(a))), "eta* unit", [&] { return sh(a); });
    }
  }

  // distributivity
  run.run("distributivity", 2, {{obj_slot, 0}, {obj_slot, 0}, {obj_slot, 1}}, 231, [&](auto&, auto& it) {
    auto &a = O(it[0]), &a2 = O(it[1]), &c = O(it[2]);
    auto lhs = D.compose(F.eta_plus(C.otimes(a, c), C.otimes(a2, c)), D.oplus(F.eta_times(a, c), F.eta_times(a2, c)));
    auto rhs = D.compose(F.eta_times(C.oplus(a, a2), c), D.otimes(F.eta_plus(a, a2), D.id(FO(c))));
    r.expect(eq(lhs, rhs), "distributivity", [&] { return "right " + sh(a) + ", " + sh(a2) + ", " + sh(c); });
  });
  run.run("distributivity", 2, {{obj_slot, 0}, {obj_slot, 1}, {obj_slot, 1}}, 232, [&](auto&, auto& it) {
    auto &a = O(it[0]), &c = O(it[1]), &c2 = O(it[2]);
    auto lhs = D.compose(FM(C.dl(a, c, c2)),
                         D.compose(F.eta_plus(C.otimes(a, c), C.otimes(a, c2)), D.oplus(F.eta_times(a, c), F.eta_times(a, c2))));
    auto rhs = D.compose(F.eta_times(a, C.oplus(c, c2)),
                         D.compose(D.otimes(D.id(FO(a)), F.eta_plus(c, c2)), D.dl(FO(a), FO(c), FO(c2))));
    r.expect(eq(lhs, rhs), "distributivity", [&] { return "left " + sh(a) + ", " + sh(c) + ", " + sh(c2); });
  });
  return r;
}

}  // namespace rigcomp
