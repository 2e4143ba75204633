#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "effcat.hpp"

namespace rigcomp {

template <class P>
concept Permutative = EffCategory<P> && requires(const P& p, const typename P::Obj& a, const typename P::Mor& f) {
  { p.oplus(a, a) } -> std::convertible_to<typename P::Obj>;
  { p.oplus(f, f) } -> std::convertible_to<typename P::Mor>;
  { p.twist(a, a) } -> std::convertible_to<typename P::Mor>;
  { p.zeroless() } -> std::convertible_to<bool>;
};

/** @brief Strict associativity/unitality, symmetry, naturality and hexagon of a permutative category. */
template <class P>
Report check_permutative(const P& p, const Samples<P>& s, const Bound& b) {
  Report r = check_category(p, s);
  const auto& O = s.objs;
  const auto& M = s.mors;
  auto sh = [&](const auto& x) { return show(p, x); };
  bool zl = p.zeroless();

  for_tuples<3>(O.size(), b, 11, [&](auto t) {
    auto &a = O[t[0]], &b2 = O[t[1]], &c = O[t[2]];
    r.expect(p.oplus(p.oplus(a, b2), c) == p.oplus(a, p.oplus(b2, c)), "oplus associative (objects)",
             [&] { return sh(a) + ", " + sh(b2) + ", " + sh(c); });
    auto lhs = p.twist(p.oplus(a, b2), c);
    auto rhs = p.compose(p.oplus(p.twist(a, c), p.id(b2)), p.oplus(p.id(a), p.twist(b2, c)));
    r.expect(mor_equal(p, lhs, rhs), "twist hexagon", [&] { return sh(a) + ", " + sh(b2) + ", " + sh(c); });
  });
  for_tuples<2>(O.size(), b, 12, [&](auto t) {
    auto &a = O[t[0]], &b2 = O[t[1]];
    auto tw = p.twist(a, b2);
    r.expect(p.dom(tw) == p.oplus(a, b2) && p.cod(tw) == p.oplus(b2, a), "twist endpoints",
             [&] { return sh(a) + ", " + sh(b2); });
    r.expect(mor_equal(p, p.compose(p.twist(b2, a), tw), p.id(p.oplus(a, b2))), "twist symmetry",
             [&] { return sh(a) + ", " + sh(b2); });
    r.expect(mor_equal(p, p.oplus(p.id(a), p.id(b2)), p.id(p.oplus(a, b2))), "oplus preserves identities",
             [&] { return sh(a) + ", " + sh(b2); });
  });
  if (!zl) {
    auto z = p.zero();
    for (auto& a : O) {
      r.expect(p.oplus(z, a) == a && p.oplus(a, z) == a, "zero unit (objects)", [&] { return sh(a); });
      r.expect(mor_equal(p, p.twist(a, z), p.id(a)) && mor_equal(p, p.twist(z, a), p.id(a)), "twist with zero",
               [&] { return sh(a); });
    }
    for (auto& f : M)
      r.expect(mor_equal(p, p.oplus(p.id(z), f), f) && mor_equal(p, p.oplus(f, p.id(z)), f), "zero unit (morphisms)",
               [&] { return sh(f); });
  }
  for_tuples<2>(M.size(), b, 13, [&](auto t) {
    auto &f = M[t[0]], &g = M[t[1]];
    auto fg = p.oplus(f, g);
    r.expect(p.dom(fg) == p.oplus(p.dom(f), p.dom(g)) && p.cod(fg) == p.oplus(p.cod(f), p.cod(g)),
             "oplus endpoints", [&] { return sh(f) + ", " + sh(g); });
    auto lhs = p.compose(p.twist(p.cod(f), p.cod(g)), fg);
    auto rhs = p.compose(p.oplus(g, f), p.twist(p.dom(f), p.dom(g)));
    r.expect(mor_equal(p, lhs, rhs), "twist naturality", [&] { return sh(f) + ", " + sh(g); });
  });
  for_tuples<3>(M.size(), b, 14, [&](auto t) {
    auto &f = M[t[0]], &g = M[t[1]], &h = M[t[2]];
    r.expect(mor_equal(p, p.oplus(p.oplus(f, g), h), p.oplus(f, p.oplus(g, h))), "oplus associative (morphisms)",
             [&] { return sh(f) + ", " + sh(g) + ", " + sh(h); });
  });
  for_tuples<2>(s.pairs.size(), b, 15, [&](auto t) {
    auto& [f, g] = s.pairs[t[0]];
    auto& [f2, g2] = s.pairs[t[1]];
    auto lhs = p.compose(p.oplus(g, g2), p.oplus(f, f2));
    auto rhs = p.oplus(p.compose(g, f), p.compose(g2, f2));
    r.expect(mor_equal(p, lhs, rhs), "oplus interchange", [&] { return sh(g) + " o " + sh(f) + ", " + sh(g2) + " o " + sh(f2); });
  });
  return r;
}

template <class P>
Report check_permutative(const P& p, const Bound& b) {
  return check_permutative(p, exhaustive_samples(p, b), b);
}

/** @brief Lax symmetric monoidal functor; strict when eta and unit are identities. */
template <class S, class T>
struct SymMonFunctor {
  FunctorData<S, T> F;
  std::function<typename T::Mor(const typename S::Obj&, const typename S::Obj&)> eta;  // F(a)+F(b) -> F(a+b)
  std::function<typename T::Mor()> unit;                                              // 0 -> F(0)
  bool strict = false;
};

template <class S, class T>
Report check_symmon_functor(const SymMonFunctor<S, T>& Fm, const Samples<S>& s, const Bound& b) {
  const S& c = *Fm.F.source;
  const T& d = *Fm.F.target;
  auto& F = Fm.F;
  Report r = check_functor(F, s);
  auto sh = [&](const auto& x) { return show(c, x); };
  const auto& O = s.objs;
  for_tuples<2>(O.size(), b, 21, [&](auto t) {
    auto &a = O[t[0]], &a2 = O[t[1]];
    auto e = Fm.eta(a, a2);
    r.expect(d.dom(e) == d.oplus(F.on_obj(a), F.on_obj(a2)) && d.cod(e) == F.on_obj(c.oplus(a, a2)), "eta endpoints",
             [&] { return sh(a) + ", " + sh(a2); });
    auto lhs = d.compose(F.on_mor(c.twist(a, a2)), e);
    auto rhs = d.compose(Fm.eta(a2, a), d.twist(F.on_obj(a), F.on_obj(a2)));
    r.expect(mor_equal(d, lhs, rhs), "eta twist compatibility", [&] { return sh(a) + ", " + sh(a2); });
    if (Fm.strict)
      r.expect(F.on_obj(c.oplus(a, a2)) == d.oplus(F.on_obj(a), F.on_obj(a2)) && mor_equal(d, e, d.id(d.dom(e))),
               "strictness", [&] { return sh(a) + ", " + sh(a2); });
  });
  for_tuples<3>(O.size(), b, 22, [&](auto t) {
    auto &a = O[t[0]], &a2 = O[t[1]], &a3 = O[t[2]];
    auto lhs = d.compose(Fm.eta(c.oplus(a, a2), a3), d.oplus(Fm.eta(a, a2), d.id(F.on_obj(a3))));
    auto rhs = d.compose(Fm.eta(a, c.oplus(a2, a3)), d.oplus(d.id(F.on_obj(a)), Fm.eta(a2, a3)));
    r.expect(mor_equal(d, lhs, rhs), "eta associativity", [&] { return sh(a) + ", " + sh(a2) + ", " + sh(a3); });
  });
  for_tuples<2>(s.mors.size(), b, 23, [&](auto t) {
    auto &f = s.mors[t[0]], &g = s.mors[t[1]];
    auto lhs = d.compose(F.on_mor(c.oplus(f, g)), Fm.eta(c.dom(f), c.dom(g)));
    auto rhs = d.compose(Fm.eta(c.cod(f), c.cod(g)), d.oplus(F.on_mor(f), F.on_mor(g)));
    r.expect(mor_equal(d, lhs, rhs), "eta naturality", [&] { return sh(f) + ", " + sh(g); });
  });
  if (!c.zeroless() && !d.zeroless() && Fm.unit) {
    auto u = Fm.unit();
    for (auto& a : O) {
      auto lhs = d.compose(Fm.eta(c.zero(), a), d.oplus(u, d.id(F.on_obj(a))));
      r.expect(mor_equal(d, lhs, d.id(F.on_obj(a))), "eta unit", [&] { return sh(a); });
    }
    if (Fm.strict) r.expect(F.on_obj(c.zero()) == d.zero(), "strict zero", [] { return std::string("F(0) != 0"); });
  }
  return r;
}

template <class P>
SymMonFunctor<P, P> identity_functor(const P& p) {
  SymMonFunctor<P, P> F;
  F.F = FunctorData<P, P>{&p, &p, [](const typename P::Obj& a) { return a; }, [](const typename P::Mor& f) { return f; }};
  F.eta = [&p](const typename P::Obj& a, const typename P::Obj& b) { return p.id(p.oplus(a, b)); };
  if (!p.zeroless()) F.unit = [&p] { return p.id(p.zero()); };
  F.strict = true;
  return F;
}

/** @brief Componentwise product of two permutative categories. */
template <class P1, class P2>
struct ProductCat {
  using Obj = std::pair<typename P1::Obj, typename P2::Obj>;
  using Mor = std::pair<typename P1::Mor, typename P2::Mor>;
  P1 p1;
  P2 p2;

  Obj dom(const Mor& f) const { return {p1.dom(f.first), p2.dom(f.second)}; }
  Obj cod(const Mor& f) const { return {p1.cod(f.first), p2.cod(f.second)}; }
  Mor id(const Obj& a) const { return {p1.id(a.first), p2.id(a.second)}; }
  Mor compose(const Mor& g, const Mor& f) const { return {p1.compose(g.first, f.first), p2.compose(g.second, f.second)}; }
  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (auto& x : p1.objects(b))
      for (auto& y : p2.objects(b)) out.push_back({x, y});
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const {
    std::vector<Mor> out;
    for (auto& f : p1.homs(a.first, c.first, b))
      for (auto& g : p2.homs(a.second, c.second, b)) out.push_back({f, g});
    return out;
  }
  Obj oplus(const Obj& a, const Obj& c) const { return {p1.oplus(a.first, c.first), p2.oplus(a.second, c.second)}; }
  Mor oplus(const Mor& f, const Mor& g) const { return {p1.oplus(f.first, g.first), p2.oplus(f.second, g.second)}; }
  Obj zero() const { return {p1.zero(), p2.zero()}; }
  Mor twist(const Obj& a, const Obj& c) const { return {p1.twist(a.first, c.first), p2.twist(a.second, c.second)}; }
  bool zeroless() const { return p1.zeroless() || p2.zeroless(); }
  bool mor_eq(const Mor& f, const Mor& g) const { return mor_equal(p1, f.first, g.first) && mor_equal(p2, f.second, g.second); }
  std::string show(const Obj& a) const { return "(" + rigcomp::show(p1, a.first) + "," + rigcomp::show(p2, a.second) + ")"; }
  std::string show(const Mor& f) const { return "(" + rigcomp::show(p1, f.first) + "," + rigcomp::show(p2, f.second) + ")"; }
};

template <class P1, class P2>
ProductCat<P1, P2> product_cat(P1 a, P2 b) {
  return ProductCat<P1, P2>{std::move(a), std::move(b)};
}

/** @brief The terminal permutative category. */
struct ZeroCat {
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
  std::string show(const Mor&) const { return "id_0"; }
};

inline ZeroCat zero_cat() { return {}; }

}  // namespace rigcomp
