#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "cube.hpp"
#include "pi0.hpp"
#include "thomason.hpp"

namespace rigcomp {

/**
 * @brief The Grayson-Quillen category (-M)M of a permutative groupoid M with
 * faithful translations. A morphism (a,b) -> (c,d) is the class of
 * (x, f: x+a -> c, g: x+b -> d) modulo automorphisms of x.
 */
template <class P>
class GQ {
 public:
  using PObj = typename P::Obj;
  using PMor = typename P::Mor;

  struct Obj {
    PObj a{}, b{};
    friend bool operator==(const Obj&, const Obj&) = default;
    friend auto operator<=>(const Obj&, const Obj&) = default;
  };
  struct Mor {
    Obj dom, cod;
    PObj x{};
    PMor f, g;
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  GQ(P p, const Bound& b) : p_(std::move(p)), b_(b) {}

  const P& base() const { return p_; }
  const Bound& bound() const { return b_; }

  /**
   * @brief Canonical representative: the least (f,g) over the Aut(x)-orbit.
   * Used for enumeration; equality goes through mor_eq.
   */
  Mor normalize(Mor m) const {
    Mor best = m;
    auto ida = p_.id(m.dom.a), idb = p_.id(m.dom.b);
    for (auto& al : p_.homs(m.x, m.x, b_)) {
      Mor c = m;
      c.f = p_.compose(m.f, p_.oplus(al, ida));
      c.g = p_.compose(m.g, p_.oplus(al, idb));
      if (c < best) best = c;
    }
    return best;
  }
  Mor make(const Obj& dom, const Obj& cod, const PObj& x, const PMor& f, const PMor& g) const {
    if (!(p_.dom(f) == p_.oplus(x, dom.a)) || !(p_.cod(f) == cod.a) || !(p_.dom(g) == p_.oplus(x, dom.b)) ||
        !(p_.cod(g) == cod.b))
      throw StructureError("ill-typed Grayson-Quillen triple");
    return Mor{dom, cod, x, f, g};
  }

  /** @brief Same class: x = x' and f'^-1 f = alpha + id_a with g' (alpha + id_b) = g. */
  bool mor_eq(const Mor& m, const Mor& n) const {
    if (!(m.dom == n.dom) || !(m.cod == n.cod) || !(m.x == n.x)) return false;
    auto al = p_.split_sum(p_.compose(p_.inverse(n.f), m.f), m.x, m.dom.a);
    if (!al) return false;
    return mor_equal(p_, p_.compose(n.g, p_.oplus(*al, p_.id(m.dom.b))), m.g);
  }

  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (auto& a : p_.objects(b))
      for (auto& c : p_.objects(b)) out.push_back(Obj{a, c});
    return out;
  }
  std::vector<Mor> homs(const Obj& s, const Obj& t, const Bound& b) const {
    std::vector<Mor> out;
    for (auto& x : p_.objects(b)) {
      auto fs = p_.homs(p_.oplus(x, s.a), t.a, b);
      if (fs.empty()) continue;
      auto gs = p_.homs(p_.oplus(x, s.b), t.b, b);
      for (auto& f : fs)
        for (auto& g : gs) out.push_back(normalize(Mor{s, t, x, f, g}));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  /** @brief Targets of some morphism out of s: (x+a, x+b) for each x. */
  std::vector<Obj> targets(const Obj& s, const Bound& b) const {
    std::vector<Obj> out;
    for (auto& x : p_.objects(b)) out.push_back(Obj{p_.oplus(x, s.a), p_.oplus(x, s.b)});
    return out;
  }

  Obj dom(const Mor& m) const { return m.dom; }
  Obj cod(const Mor& m) const { return m.cod; }
  Mor id(const Obj& s) const { return Mor{s, s, p_.zero(), p_.id(s.a), p_.id(s.b)}; }
  Mor compose(const Mor& h, const Mor& m) const {
    if (!(m.cod == h.dom)) throw CompositionError(show(h), show(m));
    auto y = h.x;
    return Mor{m.dom, h.cod, p_.oplus(y, m.x), p_.compose(h.f, p_.oplus(p_.id(y), m.f)),
               p_.compose(h.g, p_.oplus(p_.id(y), m.g))};
  }

  Obj oplus(const Obj& s, const Obj& t) const { return Obj{p_.oplus(s.a, t.a), p_.oplus(s.b, t.b)}; }
  Mor oplus(const Mor& m, const Mor& n) const {
    auto side = [&](const PObj& x, const PObj& x2, const PObj& a, const PObj& a2, const PMor& f, const PMor& f2) {
      return p_.compose(p_.oplus(f, f2), rigcomp::block_permute(p_, std::vector<PObj>{x, x2, a, a2}, {0, 2, 1, 3}));
    };
    return Mor{oplus(m.dom, n.dom), oplus(m.cod, n.cod), p_.oplus(m.x, n.x), side(m.x, n.x, m.dom.a, n.dom.a, m.f, n.f),
               side(m.x, n.x, m.dom.b, n.dom.b, m.g, n.g)};
  }
  Obj zero() const { return Obj{p_.zero(), p_.zero()}; }
  Mor twist(const Obj& s, const Obj& t) const {
    return Mor{oplus(s, t), oplus(t, s), p_.zero(), p_.twist(s.a, t.a), p_.twist(s.b, t.b)};
  }
  bool zeroless() const { return false; }

  /** @brief Action of M: m(a,b) = (ma, mb). */
  Obj act(const PObj& m, const Obj& s) const { return Obj{p_.otimes(m, s.a), p_.otimes(m, s.b)}; }
  Mor act(const PObj& m, const Mor& h) const {
    auto idm = p_.id(m);
    return make(act(m, h.dom), act(m, h.cod), p_.otimes(m, h.x),
                p_.compose(p_.otimes(idm, h.f), p_.dl(m, h.x, h.dom.a)),
                p_.compose(p_.otimes(idm, h.g), p_.dl(m, h.x, h.dom.b)));
  }

  std::string show(const Obj& s) const { return "(" + rigcomp::show(p_, s.a) + "," + rigcomp::show(p_, s.b) + ")"; }
  std::string show(const Mor& m) const {
    return "[" + rigcomp::show(p_, m.x) + ";" + rigcomp::show(p_, m.f) + "," + rigcomp::show(p_, m.g) + "]:" + show(m.dom) +
           "->" + show(m.cod);
  }

 private:
  P p_;
  Bound b_;
};

/**
 * @brief Builds (-M)M after checking that M is a groupoid with faithful
 * translations on the enumerated morphisms.
 */
template <class P>
GQ<P> gq_build(const P& p, const Bound& b) {
  auto objs = p.objects(b);
  for (auto& a : objs)
    for (auto& c : objs)
      for (auto& f : p.homs(a, c, b)) {
        bool inv = false;
        for (auto& g : p.homs(c, a, b))
          if (mor_equal(p, p.compose(g, f), p.id(a)) && mor_equal(p, p.compose(f, g), p.id(c))) inv = true;
        if (!inv) throw StructureError("not a groupoid: " + rigcomp::show(p, f) + " has no inverse");
      }
  for (auto& x : objs)
    for (auto& a : objs) {
      auto hs = p.homs(a, a, b);
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (mor_equal(p, p.oplus(p.id(x), hs[i]), p.oplus(p.id(x), hs[j])))
            throw StructureError("translation by " + rigcomp::show(p, x) + " is not faithful");
    }
  return GQ<P>(p, b);
}

/** @brief A graded category viewed over a subcategory of its index. */
template <class GC, class I>
struct Restricted : GC {
  using Index = I;
  I J;
  Restricted(GC g, I j) : GC(std::move(g)), J(std::move(j)) {}
  const I& index() const { return J; }
};

template <class P>
using Q1Hocolim = Hocolim<Restricted<CubeGraded<P>, QnIndex>>;

template <class P>
Q1Hocolim<P> q1_hocolim(const P& p) {
  return Q1Hocolim<P>(Restricted<CubeGraded<P>, QnIndex>(build_GR(p), QnIndex{1}));
}

/**
 * @brief The comparison hocolim over Q1 of GM(1,S) -> (-M)M:
 * 1[{1},(a,b)] -> (a,b), 1[{-1},0] and 1[0,a] -> (0,0), additively extended.
 */
template <class P>
class GQCompare {
 public:
  using H = Q1Hocolim<P>;
  using HObj = typename H::Obj;
  using HMor = typename H::Mor;
  using G = GQ<P>;
  using PObj = typename P::Obj;
  using PMor = typename P::Mor;

  GQCompare(const H& h, const G& gq) : h_(&h), gq_(&gq) {}

  static bool plus(const JObj& S) { return S.T == std::vector<int>{1}; }
  static bool empty(const JObj& S) { return S.T.empty(); }

  typename G::Obj operator()(const HObj& s) const {
    const auto& p = gq_->base();
    typename G::Obj out = gq_->zero();
    for (auto& [S, X] : s.seq)
      if (plus(S)) out = typename G::Obj{p.oplus(out.a, X.entries[0]), p.oplus(out.b, X.entries[1])};
    return out;
  }

  typename G::Mor operator()(const HMor& m) const {
    const auto& p = gq_->base();
    int n = m.src.size();
    std::vector<int> xs, as;
    for (int i = 0; i < n; ++i) {
      const auto& S = m.src.seq[i].first;
      if (plus(S)) as.push_back(i);
      else if (empty(S) && plus(m.tgt.seq[m.psi(i)].first)) xs.push_back(i);
    }
    PObj x = p.zero();
    for (int i : xs) x = p.oplus(x, m.src.seq[i].second.entries[0]);
    auto side = [&](int e) {
      std::vector<PObj> objs;
      std::map<int, int> pos;
      for (int i : xs) {
        pos[i] = static_cast<int>(objs.size());
        objs.push_back(m.src.seq[i].second.entries[0]);
      }
      for (int i : as) {
        pos[i] = static_cast<int>(objs.size());
        objs.push_back(m.src.seq[i].second.entries[e]);
      }
      std::vector<int> order;
      std::vector<PMor> rhos;
      for (int j = 0; j < m.tgt.size(); ++j) {
        if (!plus(m.tgt.seq[j].first)) continue;
        for (int i : m.psi.fiber(j)) order.push_back(pos.at(i));
        rhos.push_back(m.rho[j].entries[e]);
      }
      if (objs.empty()) return p.id(p.zero());
      auto perm = rigcomp::block_permute(p, objs, order);
      return p.compose(oplus_all_mor(p, rhos), perm);
    };
    return gq_->make((*this)(m.src), (*this)(m.tgt), x, side(0), side(1));
  }

  FunctorData<H, G> functor() const {
    FunctorData<H, G> F;
    F.source = h_;
    F.target = gq_;
    auto self = *this;
    F.on_obj = [self](const HObj& s) { return self(s); };
    F.on_mor = [self](const HMor& m) { return self(m); };
    return F;
  }

  /** @brief m acting entrywise on a hocolim object. */
  HObj act(const PObj& mm, const HObj& s) const {
    const auto& p = gq_->base();
    HObj out = s;
    for (auto& [S, X] : out.seq)
      for (auto& e : X.entries) e = p.otimes(mm, e);
    return out;
  }
  HMor act(const PObj& mm, const HMor& f) const {
    if (f.src.size() != 1) throw UnsupportedError("module action on morphisms is implemented for single-entry sources");
    const auto& p = gq_->base();
    HMor out = f;
    out.src = act(mm, f.src);
    out.tgt = act(mm, f.tgt);
    for (auto& r : out.rho)
      for (auto& e : r.entries) e = p.otimes(p.id(mm), e);
    return out;
  }

 private:
  const H* h_;
  const G* gq_;
};

/** @brief pi0 of (-M)M: (a,b) ~ (x+a, x+b). */
template <class P>
Pi0Partition<typename GQ<P>::Obj> gq_pi0(const GQ<P>& g, const Bound& b) {
  return build_partition(g.objects(b), b, [&](const auto& s, auto&& link) {
    for (auto& t : g.targets(s, b)) link(t);
  });
}

/** @brief Outcome of the comparison at one pair of bounds. */
struct GQComparison {
  std::size_t source_objects = 0, core_objects = 0, source_classes = 0, target_classes = 0;
  std::size_t composites = 0;
  bool stable = false;
  bool bijective = false;
  Report report;
};

/**
 * @brief Functoriality on all enumerated composable pairs of the core
 * (length <= b.length_max) and bijectivity on pi0: the classes met by core
 * objects, computed at one larger length, correspond under the comparison
 * to the classes of their images. Stability compares two larger lengths.
 */
template <class P>
GQComparison gq_compare(const P& p, const Bound& b) {
  GQComparison out;
  auto H = q1_hocolim(p);
  Bound gb = b;
  gb.entry_max = b.entry_max * (b.length_max + 2);
  gb.rank_max = b.rank_max * (b.length_max + 2);
  auto G = gq_build(p, b);
  GQ<P> Gbig(p, gb);
  GQCompare<P> F(H, Gbig);
  auto& rep = out.report;

  // functoriality on enumerated composites of the core
  auto core = H.objects(b);
  out.core_objects = core.size();
  Samples<Q1Hocolim<P>> s;
  s.objs = core;
  std::map<typename Q1Hocolim<P>::Obj, std::vector<typename Q1Hocolim<P>::Mor>> from;
  for (auto& a : core) from[a] = H.homs_from(a, b);
  for (auto& a : core)
    for (auto& f : from[a]) {
      s.mors.push_back(f);
      auto it = from.find(f.tgt);
      if (it == from.end()) continue;
      if (s.pairs.size() + it->second.size() > b.tuple_max)
        throw ResourceError("tuple_max=" + std::to_string(b.tuple_max), "composite pairs exceed budget");
      for (auto& g : it->second) s.pairs.push_back({f, g});
    }
  out.composites = s.pairs.size();
  rep.merge(check_functor(F.functor(), s), "compare: ");

  // the generating morphism 1[0,a] -> 1[{1},(a,a)] goes to [id_a, a]
  for (auto& a : p.objects(b)) {
    JObj e{1, {}}, one{1, {1}};
    const auto& g = H.diagram();
    auto src = H.single(e, g.constant(e, a));
    auto tgt = H.single(one, g.constant(one, a));
    typename Q1Hocolim<P>::Mor m{src, tgt, FinMap::identity(1), {JMor{FinMap::identity(1), e, one}}, {g.id(tgt.seq[0].second)}};
    auto img = F(m);
    rep.expect(Gbig.mor_eq(img, Gbig.make(Gbig.zero(), typename GQ<P>::Obj{a, a}, a, p.id(a), p.id(a))), "generating morphism",
               [&] { return Gbig.show(img); });
  }

  // module structure on objects and single-entry morphisms
  for (auto& mm : p.objects(b)) {
    for (auto& a : core) rep.expect(F(F.act(mm, a)) == Gbig.act(mm, F(a)), "module map", [&] { return H.show(a); });
    for (auto& f : s.mors)
      if (f.src.size() == 1)
        rep.expect(Gbig.mor_eq(F(F.act(mm, f)), Gbig.act(mm, F(f))), "module map", [&] { return H.show(f); });
  }

  // pi0 bijection on the core
  Bound b1 = next_bound(b), b2 = next_bound(b1);
  auto P1 = hocolim_pi0(H, b1);
  auto P2 = hocolim_pi0(H, b2);
  auto T = gq_pi0(Gbig, gb);
  out.source_objects = P1.objects.size();
  out.target_classes = static_cast<std::size_t>(T.classes());
  std::map<int, int> fwd, back, fwd2;
  bool stable = true, bij = true;
  for (auto& a : core) {
    int c1 = *P1.class_of(a), c2 = *P2.class_of(a);
    auto t = T.class_of(F(a));
    if (!t) throw IncompleteError("comparison image outside the target bound");
    if (fwd2.count(c1) && fwd2[c1] != c2) stable = false;
    fwd2[c1] = c2;
    if (fwd.count(c1) && fwd[c1] != *t) bij = false;
    if (back.count(*t) && back[*t] != c1) bij = false;
    fwd[c1] = *t;
    back[*t] = c1;
  }
  std::map<int, int> inv2;
  for (auto& [c1, c2] : fwd2) {
    if (inv2.count(c2)) stable = false;
    inv2[c2] = c1;
  }
  // every target class of an enumerated pair is met
  for (auto& o : G.objects(b)) {
    auto t = T.class_of(o);
    if (!back.count(*t)) bij = false;
  }
  out.source_classes = fwd.size();
  out.stable = stable;
  out.bijective = bij;
  rep.expect(stable, "stabilization", [] { return std::string("core partition changed between consecutive bounds"); });
  rep.expect(bij, "pi0 bijection", [&] {
    return std::to_string(fwd.size()) + " source classes vs " + std::to_string(back.size()) + " target classes";
  });
  return out;
}

}  // namespace rigcomp
