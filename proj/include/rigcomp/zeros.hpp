#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "thomason.hpp"

namespace rigcomp {

/**
 * @brief A graded diagram with adjoined zeros z_0..z_{count-1} in every
 * fiber. z_j + z_k = z_min, z + X = X, z_j * z_k = z_max, z * X = z.
 * With outer_zero the outermost z_{count-1} is the zero object, otherwise
 * the result is zeroless and the adjoined zeros are ordinary objects.
 */
template <class GC>
class AdjoinZeros {
 public:
  using Index = typename GC::Index;
  using IObj = typename Index::Obj;
  using IMor = typename Index::Mor;
  using CObj = typename GC::Obj;
  using CMor = typename GC::Mor;

  struct Obj {
    int depth = -1;  // -1: object of the diagram
    IObj x{};
    CObj inner{};
    friend bool operator==(const Obj&, const Obj&) = default;
    friend auto operator<=>(const Obj&, const Obj&) = default;
  };
  struct Mor {
    int depth = -1;
    IObj x{};
    CMor inner{};
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  AdjoinZeros(GC g, int count, bool outer_zero) : g_(std::move(g)), count_(count), outer_(outer_zero) {}

  const GC& diagram() const { return g_; }
  int count() const { return count_; }
  bool outer_zero() const { return outer_; }
  const Index& index() const { return g_.index(); }

  Obj inner(const CObj& X) const { return Obj{-1, g_.grade(X), X}; }
  Obj adjoined(int depth, const IObj& x) const { return Obj{depth, x, {}}; }
  Mor inner(const CMor& f) const { return Mor{-1, g_.grade(g_.dom(f)), f}; }

  IObj grade(const Obj& a) const { return a.x; }
  std::vector<Obj> fiber_objects(const IObj& x, const Bound& b) const {
    std::vector<Obj> out;
    for (auto& X : g_.fiber_objects(x, b)) out.push_back(Obj{-1, x, X});
    for (int d = 0; d < count_; ++d) out.push_back(adjoined(d, x));
    return out;
  }
  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (auto& x : index().objects(b)) {
      auto os = fiber_objects(x, b);
      out.insert(out.end(), os.begin(), os.end());
    }
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const {
    if (a.depth >= 0 || c.depth >= 0) {
      if (a == c) return {id(a)};
      return {};
    }
    std::vector<Mor> out;
    for (auto& f : g_.homs(a.inner, c.inner, b)) out.push_back(Mor{-1, a.x, f});
    return out;
  }

  Obj dom(const Mor& f) const { return f.depth >= 0 ? adjoined(f.depth, f.x) : Obj{-1, f.x, g_.dom(f.inner)}; }
  Obj cod(const Mor& f) const { return f.depth >= 0 ? adjoined(f.depth, f.x) : Obj{-1, f.x, g_.cod(f.inner)}; }
  Mor id(const Obj& a) const { return a.depth >= 0 ? Mor{a.depth, a.x, {}} : Mor{-1, a.x, g_.id(a.inner)}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (!(cod(f) == dom(g))) throw CompositionError(show(g), show(f));
    if (f.depth >= 0) return f;
    return Mor{-1, f.x, g_.compose(g.inner, f.inner)};
  }

  Obj oplus(const Obj& a, const Obj& c) const {
    if (a.depth >= 0 && c.depth >= 0) return adjoined(std::min(a.depth, c.depth), a.x);
    if (a.depth >= 0) return c;
    if (c.depth >= 0) return a;
    return Obj{-1, a.x, g_.oplus(a.inner, c.inner)};
  }
  Mor oplus(const Mor& f, const Mor& g) const {
    if (f.depth >= 0 && g.depth >= 0) return Mor{std::min(f.depth, g.depth), f.x, {}};
    if (f.depth >= 0) return g;
    if (g.depth >= 0) return f;
    return Mor{-1, f.x, g_.oplus(f.inner, g.inner)};
  }
  Obj zero(const IObj& x) const {
    if (!outer_) throw UnsupportedError("zeroless diagram");
    return adjoined(count_ - 1, x);
  }
  Mor twist(const Obj& a, const Obj& c) const {
    if (a.depth >= 0 || c.depth >= 0) return id(oplus(a, c));
    return Mor{-1, a.x, g_.twist(a.inner, c.inner)};
  }
  bool zeroless() const { return !outer_; }

  Mor block_permute(const std::vector<Obj>& objs, const std::vector<int>& order) const {
    std::vector<CObj> inner_objs;
    std::vector<int> pos(objs.size(), -1);
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i].depth < 0) {
        pos[i] = static_cast<int>(inner_objs.size());
        inner_objs.push_back(objs[i].inner);
      }
    if (inner_objs.empty()) return id(oplus_all(*this, objs));
    std::vector<int> inner_order;
    for (int o : order)
      if (pos[o] >= 0) inner_order.push_back(pos[o]);
    return Mor{-1, objs[0].x, rigcomp::block_permute(g_, inner_objs, inner_order)};
  }

  Obj transition(const IMor& k, const Obj& a) const {
    if (a.depth >= 0) return adjoined(a.depth, index().cod(k));
    return Obj{-1, index().cod(k), g_.transition(k, a.inner)};
  }
  Mor transition(const IMor& k, const Mor& f) const {
    if (f.depth >= 0) return Mor{f.depth, index().cod(k), {}};
    return Mor{-1, index().cod(k), g_.transition(k, f.inner)};
  }

  Obj otimes(const Obj& a, const Obj& c) const {
    auto x = index().oplus(a.x, c.x);
    if (a.depth >= 0 || c.depth >= 0) return adjoined(std::max(a.depth, c.depth), x);
    return Obj{-1, x, g_.otimes(a.inner, c.inner)};
  }
  Mor otimes(const Mor& f, const Mor& g) const {
    auto x = index().oplus(f.x, g.x);
    if (f.depth >= 0 || g.depth >= 0) return Mor{std::max(f.depth, g.depth), x, {}};
    return Mor{-1, x, g_.otimes(f.inner, g.inner)};
  }
  Obj one() const { return inner(g_.one()); }
  bool has_twist_times() const { return g_.has_twist_times(); }
  Mor twist_times(const Obj& a, const Obj& c) const {
    if (a.depth >= 0 || c.depth >= 0) return id(otimes(a, c));
    return Mor{-1, index().oplus(a.x, c.x), g_.twist_times(a.inner, c.inner)};
  }
  Mor dl(const Obj& a, const Obj& c, const Obj& c2) const {
    if (a.depth >= 0 || c.depth >= 0 || c2.depth >= 0) return id(oplus(otimes(a, c), otimes(a, c2)));
    return Mor{-1, index().oplus(a.x, c.x), g_.dl(a.inner, c.inner, c2.inner)};
  }

  std::vector<Mor> successors(const Obj& a, const Bound& b) const {
    if (a.depth >= 0) return {id(a)};
    std::vector<Mor> out;
    for (auto& f : g_.successors(a.inner, b)) out.push_back(Mor{-1, a.x, f});
    return out;
  }
  Mor random_auto(const Obj& a, std::mt19937_64& rng) const {
    if (a.depth >= 0) return id(a);
    return Mor{-1, a.x, g_.random_auto(a.inner, rng)};
  }
  Mor inverse(const Mor& f) const {
    if (f.depth >= 0) return f;
    return Mor{-1, f.x, g_.inverse(f.inner)};
  }

  bool mor_eq(const Mor& f, const Mor& g) const {
    if (f.depth != g.depth || !(f.x == g.x)) return false;
    return f.depth >= 0 || mor_equal(g_, f.inner, g.inner);
  }
  std::string show(const Obj& a) const {
    if (a.depth >= 0) return "z" + std::to_string(a.depth) + "@" + rigcomp::show(index(), a.x);
    return rigcomp::show(g_, a.inner);
  }
  std::string show(const Mor& f) const {
    if (f.depth >= 0) return "id_z" + std::to_string(f.depth) + "@" + rigcomp::show(index(), f.x);
    return rigcomp::show(g_, f.inner);
  }

 private:
  GC g_;
  int count_;
  bool outer_;
};

/** @brief C_+: a zeroless category with a disjoint isolated zero adjoined. */
template <class C>
class Plus {
 public:
  using Inner = C;
  struct Obj {
    bool zero = false;
    typename C::Obj inner{};
    friend bool operator==(const Obj&, const Obj&) = default;
    friend auto operator<=>(const Obj&, const Obj&) = default;
  };
  struct Mor {
    bool zero = false;
    typename C::Mor inner{};
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  explicit Plus(C c) : c_(std::move(c)) {}
  const C& inner_category() const { return c_; }

  Obj wrap(const typename C::Obj& a) const { return Obj{false, a}; }
  Mor wrap(const typename C::Mor& f) const { return Mor{false, f}; }

  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out{Obj{true, {}}};
    for (auto& a : c_.objects(b)) out.push_back(wrap(a));
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& d, const Bound& b) const {
    if (a.zero || d.zero) return a == d ? std::vector<Mor>{id(a)} : std::vector<Mor>{};
    std::vector<Mor> out;
    for (auto& f : c_.homs(a.inner, d.inner, b)) out.push_back(wrap(f));
    return out;
  }
  Obj dom(const Mor& f) const { return f.zero ? Obj{true, {}} : wrap(c_.dom(f.inner)); }
  Obj cod(const Mor& f) const { return f.zero ? Obj{true, {}} : wrap(c_.cod(f.inner)); }
  Mor id(const Obj& a) const { return a.zero ? Mor{true, {}} : wrap(c_.id(a.inner)); }
  Mor compose(const Mor& g, const Mor& f) const {
    if (!(cod(f) == dom(g))) throw CompositionError(show(g), show(f));
    return f.zero ? f : wrap(c_.compose(g.inner, f.inner));
  }

  Obj oplus(const Obj& a, const Obj& d) const {
    if (a.zero) return d;
    if (d.zero) return a;
    return wrap(c_.oplus(a.inner, d.inner));
  }
  Mor oplus(const Mor& f, const Mor& g) const {
    if (f.zero) return g;
    if (g.zero) return f;
    return wrap(c_.oplus(f.inner, g.inner));
  }
  Obj zero() const { return Obj{true, {}}; }
  Mor twist(const Obj& a, const Obj& d) const {
    if (a.zero || d.zero) return id(oplus(a, d));
    return wrap(c_.twist(a.inner, d.inner));
  }
  bool zeroless() const { return false; }

  Obj otimes(const Obj& a, const Obj& d) const {
    if (a.zero || d.zero) return zero();
    return wrap(c_.otimes(a.inner, d.inner));
  }
  Mor otimes(const Mor& f, const Mor& g) const {
    if (f.zero || g.zero) return Mor{true, {}};
    return wrap(c_.otimes(f.inner, g.inner));
  }
  Obj one() const { return wrap(c_.one()); }
  bool has_twist_times() const { return c_.has_twist_times(); }
  Mor twist_times(const Obj& a, const Obj& d) const {
    if (a.zero || d.zero) return Mor{true, {}};
    return wrap(c_.twist_times(a.inner, d.inner));
  }
  Mor dl(const Obj& a, const Obj& d, const Obj& d2) const {
    if (a.zero || d.zero || d2.zero) return id(oplus(otimes(a, d), otimes(a, d2)));
    return wrap(c_.dl(a.inner, d.inner, d2.inner));
  }

  Mor random_auto(const Obj& a, std::mt19937_64& rng) const {
    return a.zero ? id(a) : wrap(c_.random_auto(a.inner, rng));
  }

  bool mor_eq(const Mor& f, const Mor& g) const {
    if (f.zero != g.zero) return false;
    return f.zero || mor_equal(c_, f.inner, g.inner);
  }
  std::string show(const Obj& a) const { return a.zero ? std::string("0+") : rigcomp::show(c_, a.inner); }
  std::string show(const Mor& f) const { return f.zero ? std::string("id_0+") : rigcomp::show(c_, f.inner); }

 private:
  C c_;
};

template <class C>
Plus<C> add_isolated_zero(C c) {
  return Plus<C>(std::move(c));
}

/** @brief Level q of the derived homotopy colimit: (hocolim R(LR)^q C)_+. */
template <class GC>
using DLevel = Plus<Hocolim<AdjoinZeros<GC>>>;

template <class GC>
DLevel<GC> derived_level(const GC& gc, int q) {
  return DLevel<GC>(Hocolim<AdjoinZeros<GC>>(AdjoinZeros<GC>(gc, q, false)));
}

// depth maps of the resolution; -1 is the diagram's own zero or an ordinary object
inline int face_depth(int q, int i, int d) {
  int k = q - i;
  if (d < 0 || d < k) return d;
  if (d == k) return k - 1;
  return d - 1;
}
inline int degeneracy_depth(int q, int i, int d) {
  if (d < 0 || d < q - i) return d;
  return d + 1;
}

/** @brief Z_q M = (LR)^{q+1} M for an ungraded (bi)permutative M. */
template <class P>
using ZLevel = FiberView<AdjoinZeros<ZeroGraded<P>>>;

template <class P>
ZLevel<P> z_level(const P& p, int q, const Bound& b) {
  if (q < 0 || q > b.q_max + 1) throw StructureError("simplicial degree " + std::to_string(q) + " out of range");
  return ZLevel<P>{AdjoinZeros<ZeroGraded<P>>(zero_graded(p), q + 1, true), {}};
}

namespace detail {

template <class GC, class Obj>
Obj remap_entry(const AdjoinZeros<GC>& A, const Obj& o, int nd) {
  if (o.depth < 0) return o;
  if (nd < 0) return A.inner(A.diagram().zero(o.x));
  return A.adjoined(nd, o.x);
}

template <class GC, class Mor>
Mor remap_entry_mor(const AdjoinZeros<GC>& A, const Mor& f, int nd) {
  if (f.depth < 0) return f;
  if (nd < 0) return A.inner(A.diagram().id(A.diagram().zero(f.x)));
  return Mor{nd, f.x, {}};
}

}  // namespace detail

/**
 * @brief Simplicial structure map between derived levels given by a depth
 * map; entries landing on depth `drop` (the isolated zero of the target)
 * are removed.
 */
template <class GC>
struct LevelMap {
  const DLevel<GC>* source;
  const DLevel<GC>* target;
  std::function<int(int)> depth;
  int drop;

  using LObj = typename DLevel<GC>::Obj;
  using LMor = typename DLevel<GC>::Mor;

  const AdjoinZeros<GC>& tdiag() const { return target->inner_category().diagram(); }

  LObj operator()(const LObj& a) const {
    if (a.zero) return target->zero();
    typename Hocolim<AdjoinZeros<GC>>::Obj out;
    for (auto& [x, X] : a.inner.seq) {
      int nd = X.depth < 0 ? -1 : depth(X.depth);
      if (X.depth >= 0 && nd == drop) continue;
      out.seq.push_back({x, detail::remap_entry(tdiag(), X, nd)});
    }
    if (out.seq.empty()) return target->zero();
    return target->wrap(out);
  }

  LMor operator()(const LMor& f) const {
    if (f.zero) return typename DLevel<GC>::Mor{true, {}};
    const auto& h = f.inner;
    auto keep = [&](const auto& X) { return X.depth < 0 || depth(X.depth) != drop; };
    std::vector<int> src_new(h.src.seq.size(), -1), tgt_new(h.tgt.seq.size(), -1);
    int ns = 0, nt = 0;
    for (std::size_t i = 0; i < h.src.seq.size(); ++i)
      if (keep(h.src.seq[i].second)) src_new[i] = ns++;
    for (std::size_t j = 0; j < h.tgt.seq.size(); ++j)
      if (keep(h.tgt.seq[j].second)) tgt_new[j] = nt++;
    if (nt == 0) return typename DLevel<GC>::Mor{true, {}};
    typename Hocolim<AdjoinZeros<GC>>::Mor g{(*this)(source->wrap(h.src)).inner, (*this)(source->wrap(h.tgt)).inner,
                                             FinMap{nt, {}}, {}, {}};
    for (std::size_t i = 0; i < h.src.seq.size(); ++i) {
      if (src_new[i] < 0) continue;
      g.psi.img.push_back(tgt_new[h.psi(static_cast<int>(i))]);
      g.l.push_back(h.l[i]);
    }
    for (std::size_t j = 0; j < h.tgt.seq.size(); ++j) {
      if (tgt_new[j] < 0) continue;
      auto& r = h.rho[j];
      g.rho.push_back(detail::remap_entry_mor(tdiag(), r, r.depth < 0 ? -1 : depth(r.depth)));
    }
    if (ns == 0 || !g.psi.surjective()) throw StructureError("kept target without kept source");
    return target->wrap(g);
  }
};

/** @brief d_i: level q -> level q-1. */
template <class GC>
LevelMap<GC> level_face(const DLevel<GC>& src, const DLevel<GC>& tgt, int q, int i) {
  return LevelMap<GC>{&src, &tgt, [q, i](int d) { return face_depth(q, i, d); }, q - 1};
}

/** @brief s_i: level q -> level q+1. */
template <class GC>
LevelMap<GC> level_degeneracy(const DLevel<GC>& src, const DLevel<GC>& tgt, int q, int i) {
  return LevelMap<GC>{&src, &tgt, [q, i](int d) { return degeneracy_depth(q, i, d); }, q + 1};
}

/** @brief The reduction hocolim(R(C_+)) -> (hocolim C)_+ dropping the isolated zero. */
template <class GC>
LevelMap<GC> hocolim_iz_reduction(const DLevel<GC>& level1, const DLevel<GC>& level0) {
  return LevelMap<GC>{&level1, &level0, [](int d) { return d; }, 0};
}

/** @brief Face and degeneracy maps of Z_q M on single objects/morphisms. */
template <class P>
typename ZLevel<P>::Obj z_face(const ZLevel<P>& tgt, int q, int i, const typename ZLevel<P>::Obj& a) {
  return detail::remap_entry(tgt.g, a, a.depth < 0 ? -1 : face_depth(q, i, a.depth));
}
template <class P>
typename ZLevel<P>::Obj z_degeneracy(const ZLevel<P>& tgt, int q, int i, const typename ZLevel<P>::Obj& a) {
  return detail::remap_entry(tgt.g, a, a.depth < 0 ? -1 : degeneracy_depth(q, i, a.depth));
}
template <class P>
typename ZLevel<P>::Mor z_face(const ZLevel<P>& tgt, int q, int i, const typename ZLevel<P>::Mor& f) {
  return detail::remap_entry_mor(tgt.g, f, f.depth < 0 ? -1 : face_depth(q, i, f.depth));
}

/** @brief epsilon: Z_q M -> M, identity on M and every adjoined zero to 0_M. */
template <class P>
SymMonFunctor<ZLevel<P>, P> augmentation(const ZLevel<P>& src, const P& tgt) {
  SymMonFunctor<ZLevel<P>, P> F;
  F.F.source = &src;
  F.F.target = &tgt;
  const P* t = &tgt;
  F.F.on_obj = [t](const typename ZLevel<P>::Obj& a) { return a.depth >= 0 ? t->zero() : a.inner; };
  F.F.on_mor = [t](const typename ZLevel<P>::Mor& f) { return f.depth >= 0 ? t->id(t->zero()) : f.inner; };
  F.eta = [t, F](const typename ZLevel<P>::Obj& a, const typename ZLevel<P>::Obj& c) {
    return t->id(t->oplus(F.F.on_obj(a), F.F.on_obj(c)));
  };
  F.unit = [t] { return t->id(t->zero()); };
  F.strict = true;
  return F;
}

/** @brief Section M -> Z_q M induced by the unit; epsilon after it is the identity. */
template <class P>
typename ZLevel<P>::Obj z_section(const ZLevel<P>& z, const typename P::Obj& a) {
  const P& p = z.g.diagram().r;
  if (a == p.zero()) return z.zero();
  return z.g.inner(a);
}

/** @brief Lifts a lax morphism between zeroless categories to their C_+ versions. */
template <class A, class B>
LaxRigMorphism<ZeroGraded<Plus<A>>, ZeroGraded<Plus<B>>> lift_plus(const LaxRigMorphism<ZeroGraded<A>, ZeroGraded<B>>& F,
                                                                   const ZeroGraded<Plus<A>>& src,
                                                                   const ZeroGraded<Plus<B>>& tgt) {
  using S = ZeroGraded<Plus<A>>;
  using T = ZeroGraded<Plus<B>>;
  LaxRigMorphism<S, T> G;
  G.source = &src;
  G.target = &tgt;
  const Plus<B>* PB = &tgt.r;
  G.on_obj = [F, PB](const typename S::Obj& a) { return a.zero ? PB->zero() : PB->wrap(F.on_obj(a.inner)); };
  G.on_mor = [F, PB](const typename S::Mor& f) {
    return f.zero ? typename T::Mor{true, {}} : PB->wrap(F.on_mor(f.inner));
  };
  G.on_grade = [](const TrivialIndex::Obj& x) { return x; };
  G.on_index_mor = [](const TrivialIndex::Mor& k) { return k; };
  G.eta_plus = [F, PB, on = G.on_obj](const typename S::Obj& a, const typename S::Obj& c) {
    if (a.zero || c.zero) return PB->id(PB->oplus(on(a), on(c)));
    return PB->wrap(F.eta_plus(a.inner, c.inner));
  };
  G.eta_times = [F, PB](const typename S::Obj& a, const typename S::Obj& c) {
    if (a.zero || c.zero) return typename T::Mor{true, {}};
    return PB->wrap(F.eta_times(a.inner, c.inner));
  };
  if (F.unit_times) G.unit_times = [F, PB] { return PB->wrap(F.unit_times()); };
  return G;
}

/** @brief A structure map of the resolution as a strict rig morphism. */
template <class GC>
LaxRigMorphism<ZeroGraded<DLevel<GC>>, ZeroGraded<DLevel<GC>>> level_map_as_rig_morphism(
    const LevelMap<GC>& m, const ZeroGraded<DLevel<GC>>& src, const ZeroGraded<DLevel<GC>>& tgt) {
  using S = ZeroGraded<DLevel<GC>>;
  LaxRigMorphism<S, S> F;
  F.source = &src;
  F.target = &tgt;
  F.on_obj = [m](const typename S::Obj& a) { return m(a); };
  F.on_mor = [m](const typename S::Mor& f) { return m(f); };
  F.on_grade = [](const TrivialIndex::Obj& x) { return x; };
  F.on_index_mor = [](const TrivialIndex::Mor& k) { return k; };
  const DLevel<GC>* t = &tgt.r;
  F.eta_plus = [m, t](const typename S::Obj& a, const typename S::Obj& c) { return t->id(t->oplus(m(a), m(c))); };
  F.eta_times = [m, t](const typename S::Obj& a, const typename S::Obj& c) { return t->id(t->otimes(m(a), m(c))); };
  F.unit_times = [t] { return t->id(t->one()); };
  return F;
}

/** @brief Random objects and morphism chains of a derived level, plus its isolated zero. */
template <class GC>
GradedSamples<ZeroGraded<DLevel<GC>>> level_samples(const DLevel<GC>& L, const Bound& b, std::size_t chains) {
  GradedSamples<ZeroGraded<DLevel<GC>>> s;
  s.grades = {TrivialIndex::Obj{}};
  s.index_mors = {TrivialIndex::Mor{}};
  s.index_pairs = {{TrivialIndex::Mor{}, TrivialIndex::Mor{}}};
  s.objs.push_back(L.zero());
  s.mors.push_back(L.id(L.zero()));
  const auto& H = L.inner_category();
  auto hs = hocolim_samples(H, b, chains);
  for (auto& a : hs.objs) s.objs.push_back(L.wrap(a));
  for (auto& [f, g] : hs.pairs) {
    s.mors.push_back(L.wrap(f));
    s.mors.push_back(L.wrap(g));
  }
  return s;
}

}  // namespace rigcomp
