#pragma once

#include <random>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "indexing.hpp"

namespace rigcomp {

/** @brief Object of GM(n,T): entries indexed by bitmasks over T, or the zero marker. */
template <class O>
struct CubeObj {
  JObj j;
  bool zero = false;
  std::vector<O> entries;

  friend bool operator==(const CubeObj&, const CubeObj&) = default;
  friend auto operator<=>(const CubeObj&, const CubeObj&) = default;
};

template <class M>
struct CubeMor {
  JObj j;
  bool zero = false;
  std::vector<M> entries;

  friend bool operator==(const CubeMor&, const CubeMor&) = default;
  friend auto operator<=>(const CubeMor&, const CubeMor&) = default;
};

// subset of positive(T) as bitmask -> sorted element list
inline std::vector<int> mask_elems(const std::vector<int>& T, unsigned mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (mask >> i & 1U) out.push_back(T[i]);
  return out;
}

inline unsigned elems_mask(const std::vector<int>& T, const std::vector<int>& V) {
  unsigned mask = 0;
  for (int v : V)
    for (std::size_t i = 0; i < T.size(); ++i)
      if (T[i] == v) mask |= 1U << i;
  return mask;
}

/**
 * @brief Entry source for the transition (phi, iota): (m,S) -> (n,T).
 * Returns the source mask feeding target mask W, or -1 where the entry is zero.
 */
inline std::vector<long> cube_reindex(const JMor& k) {
  const auto& S = k.src.T;
  const auto& T = k.tgt.T;
  std::vector<char> hit(static_cast<std::size_t>(k.phi.n), 0);
  for (int v : k.phi.img) hit[v] = 1;
  std::vector<long> out(std::size_t{1} << T.size());
  for (unsigned W = 0; W < out.size(); ++W) {
    auto elems = mask_elems(T, W);
    bool hits_complement = false;
    std::vector<int> pre;
    for (int w : elems) {
      if (!hit[w - 1]) {
        hits_complement = true;
        break;
      }
      int s = 0;
      for (int i = 0; i < k.phi.m(); ++i)
        if (k.phi(i) == w - 1) s = i + 1;
      if (std::find(S.begin(), S.end(), s) != S.end()) pre.push_back(s);
    }
    out[W] = hits_complement ? -1 : static_cast<long>(elems_mask(S, pre));
  }
  return out;
}

/**
 * @brief The cube construction GR as an I∫Q-graded category over a
 * (bi)permutative base R.
 */
template <class R>
class CubeGraded {
 public:
  using Index = IQIndex;
  using IObj = JObj;
  using IMor = JMor;
  using BObj = typename R::Obj;
  using BMor = typename R::Mor;
  using Obj = CubeObj<BObj>;
  using Mor = CubeMor<BMor>;

  explicit CubeGraded(R r) : r_(std::move(r)) {}

  const R& base() const { return r_; }
  const Index& index() const { return J_; }
  IObj grade(const Obj& a) const { return a.j; }

  static bool degenerate(const JObj& x) { return !x.all_positive(); }

  Obj make(const JObj& x, std::vector<BObj> entries) const {
    if (degenerate(x)) return Obj{x, true, {}};
    if (entries.size() != std::size_t{1} << x.T.size()) throw StructureError("cube entry count mismatch at " + to_string(x));
    return Obj{x, false, std::move(entries)};
  }
  Obj constant(const JObj& x, const BObj& a) const {
    if (degenerate(x)) return Obj{x, true, {}};
    return Obj{x, false, std::vector<BObj>(std::size_t{1} << x.T.size(), a)};
  }

  std::vector<Obj> fiber_objects(const IObj& x, const Bound& b) const {
    if (degenerate(x)) return {Obj{x, true, {}}};
    auto base = r_.objects(b);
    std::size_t k = std::size_t{1} << x.T.size();
    std::vector<Obj> out;
    std::vector<std::size_t> d(k, 0);
    while (true) {
      Obj a{x, false, {}};
      for (auto i : d) a.entries.push_back(base[i]);
      out.push_back(std::move(a));
      charge(out.size(), b, "cube object enumeration");
      std::size_t i = 0;
      while (i < k && ++d[i] == base.size()) d[i++] = 0;
      if (i == k) break;
    }
    return out;
  }
  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (auto& x : J_.objects(b)) {
      auto os = fiber_objects(x, b);
      out.insert(out.end(), os.begin(), os.end());
    }
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const {
    if (!(a.j == c.j)) return {};
    if (a.zero) return {Mor{a.j, true, {}}};
    std::vector<std::vector<BMor>> parts;
    std::size_t total = 1;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      parts.push_back(r_.homs(a.entries[i], c.entries[i], b));
      total *= parts.back().size();
      if (total == 0) return {};
      charge(total, b, "cube hom enumeration");
    }
    std::vector<Mor> out;
    std::vector<std::size_t> d(parts.size(), 0);
    while (true) {
      Mor f{a.j, false, {}};
      for (std::size_t i = 0; i < d.size(); ++i) f.entries.push_back(parts[i][d[i]]);
      out.push_back(std::move(f));
      std::size_t i = 0;
      while (i < d.size() && ++d[i] == parts[i].size()) d[i++] = 0;
      if (i == d.size()) break;
    }
    return out;
  }

  Obj dom(const Mor& f) const {
    Obj a{f.j, f.zero, {}};
    for (auto& e : f.entries) a.entries.push_back(r_.dom(e));
    return a;
  }
  Obj cod(const Mor& f) const {
    Obj a{f.j, f.zero, {}};
    for (auto& e : f.entries) a.entries.push_back(r_.cod(e));
    return a;
  }
  Mor id(const Obj& a) const {
    Mor f{a.j, a.zero, {}};
    for (auto& e : a.entries) f.entries.push_back(r_.id(e));
    return f;
  }
  Mor compose(const Mor& g, const Mor& f) const {
    if (!(cod(f) == dom(g))) throw CompositionError(show(g), show(f));
    Mor h{f.j, f.zero, {}};
    for (std::size_t i = 0; i < f.entries.size(); ++i) h.entries.push_back(r_.compose(g.entries[i], f.entries[i]));
    return h;
  }

  Obj oplus(const Obj& a, const Obj& c) const {
    if (!(a.j == c.j)) throw StructureError("cube sum across fibers");
    Obj s{a.j, a.zero, {}};
    for (std::size_t i = 0; i < a.entries.size(); ++i) s.entries.push_back(r_.oplus(a.entries[i], c.entries[i]));
    return s;
  }
  Mor oplus(const Mor& f, const Mor& g) const {
    if (!(f.j == g.j)) throw StructureError("cube sum across fibers");
    Mor s{f.j, f.zero, {}};
    for (std::size_t i = 0; i < f.entries.size(); ++i) s.entries.push_back(r_.oplus(f.entries[i], g.entries[i]));
    return s;
  }
  Obj zero(const IObj& x) const { return constant(x, r_.zero()); }
  Mor twist(const Obj& a, const Obj& c) const {
    Mor t{a.j, a.zero, {}};
    for (std::size_t i = 0; i < a.entries.size(); ++i) t.entries.push_back(r_.twist(a.entries[i], c.entries[i]));
    return t;
  }
  bool zeroless() const { return false; }

  Mor block_permute(const std::vector<Obj>& objs, const std::vector<int>& order) const {
    auto total = objs.at(0);
    for (std::size_t i = 1; i < objs.size(); ++i) total = oplus(total, objs[i]);
    Mor out{total.j, total.zero, {}};
    for (std::size_t e = 0; e < total.entries.size(); ++e) {
      std::vector<BObj> col;
      for (auto& o : objs) col.push_back(o.entries[e]);
      out.entries.push_back(rigcomp::block_permute(r_, col, order));
    }
    return out;
  }

  Obj transition(const IMor& k, const Obj& a) const {
    if (degenerate(k.tgt)) return Obj{k.tgt, true, {}};
    auto src = cube_reindex(k);
    Obj out{k.tgt, false, {}};
    for (long s : src) out.entries.push_back(s < 0 ? r_.zero() : a.entries[static_cast<std::size_t>(s)]);
    return out;
  }
  Mor transition(const IMor& k, const Mor& f) const {
    if (degenerate(k.tgt)) return Mor{k.tgt, true, {}};
    auto src = cube_reindex(k);
    Mor out{k.tgt, false, {}};
    for (long s : src) out.entries.push_back(s < 0 ? r_.id(r_.zero()) : f.entries[static_cast<std::size_t>(s)]);
    return out;
  }

  Obj otimes(const Obj& a, const Obj& c) const {
    JObj x = j_add(a.j, c.j);
    if (a.zero || c.zero) return Obj{x, true, {}};
    Obj out{x, false, std::vector<BObj>(a.entries.size() * c.entries.size())};
    for (std::size_t U = 0; U < c.entries.size(); ++U)
      for (std::size_t V = 0; V < a.entries.size(); ++V)
        out.entries[V | (U << a.j.T.size())] = r_.otimes(a.entries[V], c.entries[U]);
    return out;
  }
  Mor otimes(const Mor& f, const Mor& g) const {
    JObj x = j_add(f.j, g.j);
    if (f.zero || g.zero) return Mor{x, true, {}};
    Mor out{x, false, std::vector<BMor>(f.entries.size() * g.entries.size())};
    for (std::size_t U = 0; U < g.entries.size(); ++U)
      for (std::size_t V = 0; V < f.entries.size(); ++V)
        out.entries[V | (U << f.j.T.size())] = r_.otimes(f.entries[V], g.entries[U]);
    return out;
  }
  Obj one() const { return Obj{JObj{}, false, {r_.one()}}; }
  bool has_twist_times() const { return r_.has_twist_times(); }
  Mor twist_times(const Obj& a, const Obj& c) const {
    JObj x = j_add(a.j, c.j);
    if (a.zero || c.zero) return Mor{x, true, {}};
    Mor out{x, false, std::vector<BMor>(a.entries.size() * c.entries.size())};
    for (std::size_t U = 0; U < c.entries.size(); ++U)
      for (std::size_t V = 0; V < a.entries.size(); ++V)
        out.entries[V | (U << a.j.T.size())] = r_.twist_times(a.entries[V], c.entries[U]);
    return out;
  }
  Mor dl(const Obj& a, const Obj& c, const Obj& c2) const {
    JObj x = j_add(a.j, c.j);
    if (a.zero || c.zero) return Mor{x, true, {}};
    Mor out{x, false, std::vector<BMor>(a.entries.size() * c.entries.size())};
    for (std::size_t U = 0; U < c.entries.size(); ++U)
      for (std::size_t V = 0; V < a.entries.size(); ++V)
        out.entries[V | (U << a.j.T.size())] = r_.dl(a.entries[V], c.entries[U], c2.entries[U]);
    return out;
  }

  std::vector<Mor> successors(const Obj& a, const Bound& b) const {
    if (a.zero) return {id(a)};
    std::vector<Mor> out;
    std::vector<std::vector<BMor>> parts;
    for (auto& e : a.entries) parts.push_back(r_.successors(e, b));
    std::vector<std::size_t> d(parts.size(), 0);
    while (true) {
      Mor f{a.j, false, {}};
      for (std::size_t i = 0; i < d.size(); ++i) f.entries.push_back(parts[i][d[i]]);
      out.push_back(std::move(f));
      charge(out.size(), b, "cube successor enumeration");
      std::size_t i = 0;
      while (i < d.size() && ++d[i] == parts[i].size()) d[i++] = 0;
      if (i == d.size()) break;
    }
    return out;
  }
  Mor random_auto(const Obj& a, std::mt19937_64& rng) const {
    Mor f{a.j, a.zero, {}};
    for (auto& e : a.entries) f.entries.push_back(r_.random_auto(e, rng));
    return f;
  }
  Mor inverse(const Mor& f) const {
    Mor g{f.j, f.zero, {}};
    for (auto& e : f.entries) g.entries.push_back(r_.inverse(e));
    return g;
  }

  bool mor_eq(const Mor& f, const Mor& g) const {
    if (!(f.j == g.j) || f.zero != g.zero || f.entries.size() != g.entries.size()) return false;
    for (std::size_t i = 0; i < f.entries.size(); ++i)
      if (!mor_equal(r_, f.entries[i], g.entries[i])) return false;
    return true;
  }

  std::string show(const Obj& a) const {
    if (a.zero) return to_string(a.j) + "0";
    std::string s = to_string(a.j) + "[";
    for (std::size_t i = 0; i < a.entries.size(); ++i) s += (i ? "," : "") + rigcomp::show(r_, a.entries[i]);
    return s + "]";
  }
  std::string show(const Mor& f) const {
    if (f.zero) return to_string(f.j) + "id0";
    std::string s = to_string(f.j) + "[";
    for (std::size_t i = 0; i < f.entries.size(); ++i) s += (i ? "," : "") + rigcomp::show(r_, f.entries[i]);
    return s + "]";
  }

 private:
  R r_;
  Index J_;
};

template <class R>
CubeGraded<R> build_GR(R r) {
  return CubeGraded<R>(std::move(r));
}

/** @brief Diagonal for S ⊆ T inside one n: entry at V is a_{V∩S}. */
template <class R>
typename CubeGraded<R>::Obj cube_diagonal(const CubeGraded<R>& g, const JObj& T, const typename CubeGraded<R>::Obj& a) {
  if (a.j.n != T.n || !subset_of(a.j.T, T.T)) throw StructureError("cube_diagonal: " + to_string(a.j) + " not below " + to_string(T));
  return g.transition(JMor{FinMap::identity(T.n), a.j, T}, a);
}

/** @brief Extension by zero along phi: (m,S) -> (n, phi(S) + C phi). */
template <class R>
typename CubeGraded<R>::Mor cube_extend_zero(const CubeGraded<R>& g, const FinMap& phi, const typename CubeGraded<R>::Mor& f) {
  if (phi.m() != f.j.n) throw StructureError("cube_extend_zero: ownership mismatch at " + to_string(f.j));
  JObj y{phi.n, q_apply(phi, f.j.T)};
  return g.transition(JMor{phi, f.j, y}, f);
}

/** @brief The strict symmetric monoidal transition GM(k) between fiber views. */
template <class R>
SymMonFunctor<FiberView<CubeGraded<R>>, FiberView<CubeGraded<R>>> g_apply(const FiberView<CubeGraded<R>>& src,
                                                                           const FiberView<CubeGraded<R>>& tgt,
                                                                           const JMor& k) {
  using V = FiberView<CubeGraded<R>>;
  SymMonFunctor<V, V> F;
  F.F.source = &src;
  F.F.target = &tgt;
  const auto* g = &src.g;
  F.F.on_obj = [g, k](const typename V::Obj& a) { return g->transition(k, a); };
  F.F.on_mor = [g, k](const typename V::Mor& f) { return g->transition(k, f); };
  const auto* t = &tgt;
  F.eta = [g, k, t](const typename V::Obj& a, const typename V::Obj& c) {
    return t->id(g->oplus(g->transition(k, a), g->transition(k, c)));
  };
  F.unit = [t] { return t->id(t->zero()); };
  F.strict = true;
  return F;
}

}  // namespace rigcomp
