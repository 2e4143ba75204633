#pragma once

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cube.hpp"
#include "oracle.hpp"
#include "thomason.hpp"
#include "zeros.hpp"

namespace rigcomp {

/** @brief Union-find over 0..n-1 on top of boost::disjoint_sets. */
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : rank_(n, 0), parent_(n), ds_(rank_.data(), parent_.data()) {
    for (std::size_t i = 0; i < n; ++i) ds_.make_set(i);
  }
  std::size_t find(std::size_t i) { return ds_.find_set(i); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    ds_.link(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> parent_;
  boost::disjoint_sets<std::size_t*, std::size_t*> ds_;
};

/** @brief Connected components of the enumerated objects under a set of edges. */
template <class Obj>
struct Pi0Partition {
  std::vector<Obj> objects;
  std::map<Obj, std::size_t> index;
  std::vector<int> cls;
  std::vector<std::size_t> reps;  // first object of each class in enumeration order
  Bound bound;
  std::size_t edges = 0;

  int classes() const { return static_cast<int>(reps.size()); }
  bool contains(const Obj& a) const { return index.count(a) > 0; }
  std::optional<int> class_of(const Obj& a) const {
    auto it = index.find(a);
    if (it == index.end()) return std::nullopt;
    return cls[it->second];
  }
  int class_of_or_throw(const Obj& a, const std::string& what) const {
    auto c = class_of(a);
    if (!c) throw IncompleteError(what + " lies outside the enumerated bound; raise the bound");
    return *c;
  }
  const Obj& rep(int c) const { return objects[reps[static_cast<std::size_t>(c)]]; }
  std::size_t class_size(int c) const { return static_cast<std::size_t>(std::count(cls.begin(), cls.end(), c)); }
};

/**
 * @brief Builds the partition: `edges(a, link)` calls link(b) for every
 * neighbour b of a, in either direction. Targets outside the enumeration
 * are ignored.
 */
template <class Obj, class Edges>
Pi0Partition<Obj> build_partition(std::vector<Obj> objs, const Bound& b, Edges&& edges) {
  Pi0Partition<Obj> P;
  P.bound = b;
  P.objects = std::move(objs);
  for (std::size_t i = 0; i < P.objects.size(); ++i) P.index.emplace(P.objects[i], i);
  UnionFind uf(P.objects.size());
  for (std::size_t i = 0; i < P.objects.size(); ++i)
    edges(P.objects[i], [&](const Obj& t) {
      auto it = P.index.find(t);
      if (it == P.index.end()) return;
      ++P.edges;
      uf.unite(i, it->second);
    });
  std::map<std::size_t, int> root_cls;
  P.cls.resize(P.objects.size());
  for (std::size_t i = 0; i < P.objects.size(); ++i) {
    auto r = uf.find(i);
    auto it = root_cls.find(r);
    if (it == root_cls.end()) {
      it = root_cls.emplace(r, static_cast<int>(P.reps.size())).first;
      P.reps.push_back(i);
    }
    P.cls[i] = it->second;
  }
  return P;
}

/** @brief pi0 of an effective category by brute force over all hom-sets. */
template <class C>
Pi0Partition<typename C::Obj> pi0(const C& c, const Bound& b) {
  auto objs = c.objects(b);
  std::vector<std::pair<std::size_t, std::size_t>> links;
  return build_partition(objs, b, [&](const typename C::Obj& a, auto&& link) {
    for (auto& t : objs)
      if (!c.homs(a, t, b).empty()) link(t);
  });
}

/**
 * @brief True when every class of the coarse partition meets exactly one
 * class of the fine one and each fine class meets a coarse one: the
 * partition did not change between the two bounds.
 */
template <class Obj>
bool same_partition(const Pi0Partition<Obj>& small, const Pi0Partition<Obj>& large) {
  std::map<int, int> fwd, back;
  for (std::size_t i = 0; i < small.objects.size(); ++i) {
    auto c = large.class_of(small.objects[i]);
    if (!c) return false;
    int a = small.cls[i];
    if (fwd.count(a) && fwd[a] != *c) return false;
    if (back.count(*c) && back[*c] != a) return false;
    fwd[a] = *c;
    back[*c] = a;
  }
  return static_cast<int>(back.size()) == large.classes();
}

inline Bound next_bound(Bound b) {
  ++b.length_max;
  return b;
}

/**
 * @brief One-step neighbours of a hocolim object under the generating
 * morphisms: adjacent swaps, moving one entry along an index morphism and a
 * successor, and merging two adjacent entries of equal grade.
 */
template <class GC>
class HocolimMoves {
 public:
  using H = Hocolim<GC>;
  using IObj = typename GC::Index::Obj;
  using IMor = typename GC::Index::Mor;

  HocolimMoves(const H& h, const Bound& b) : h_(&h), b_(b) {
    const auto& J = h.index();
    auto grades = J.objects(b);
    for (auto& x : grades)
      for (auto& y : grades)
        for (auto& k : J.homs(x, y, b)) out_[x].push_back(k);
  }

  template <class Emit>
  void operator()(const typename H::Obj& a, Emit&& emit) const {
    const auto& g = h_->diagram();
    int n = a.size();
    for (int i = 0; i + 1 < n; ++i) {
      auto t = a;
      std::swap(t.seq[i], t.seq[i + 1]);
      emit(t);
      if (a.seq[i].first == a.seq[i + 1].first) {
        typename H::Obj m;
        for (int j = 0; j < n; ++j) {
          if (j == i + 1) continue;
          if (j == i)
            m.seq.push_back({a.seq[i].first, g.oplus(a.seq[i].second, a.seq[i + 1].second)});
          else
            m.seq.push_back(a.seq[j]);
        }
        emit(m);
      }
    }
    for (int i = 0; i < n; ++i) {
      auto it = out_.find(a.seq[i].first);
      if (it == out_.end()) continue;
      for (auto& k : it->second) {
        auto Y = g.transition(k, a.seq[i].second);
        for (auto& rho : g.successors(Y, b_)) {
          auto t = a;
          t.seq[i] = {h_->index().cod(k), g.cod(rho)};
          emit(t);
        }
      }
    }
  }

 private:
  const H* h_;
  Bound b_;
  std::map<IObj, std::vector<IMor>> out_;
};

template <class Obj>
std::vector<Obj> sort_by_length(std::vector<Obj> objs) {
  std::stable_sort(objs.begin(), objs.end(), [](const Obj& a, const Obj& c) { return a.size() < c.size(); });
  return objs;
}

/** @brief pi0 of the hocolim using the generating morphisms. */
template <class GC>
Pi0Partition<typename Hocolim<GC>::Obj> hocolim_pi0(const Hocolim<GC>& H, const Bound& b) {
  HocolimMoves<GC> moves(H, b);
  return build_partition(sort_by_length(H.objects(b)), b, moves);
}

/** @brief pi0 of the hocolim over every enumerated morphism (reference for the generator version). */
template <class GC>
Pi0Partition<typename Hocolim<GC>::Obj> hocolim_pi0_full(const Hocolim<GC>& H, const Bound& b) {
  return build_partition(sort_by_length(H.objects(b)), b, [&](const auto& a, auto&& link) {
    for (auto& f : H.homs_from(a, b)) link(f.tgt);
  });
}

/**
 * @brief pi0 of the realization of the derived hocolim: level 0 modulo
 * d_0 c ~ d_1 c for level-1 objects c.
 */
template <class GC>
Pi0Partition<typename DLevel<GC>::Obj> level0_pi0(const GC& gc, const Bound& b) {
  auto L0 = derived_level(gc, 0);
  auto L1 = derived_level(gc, 1);
  const auto& H0 = L0.inner_category();
  const auto& H1 = L1.inner_category();
  HocolimMoves<AdjoinZeros<GC>> moves(H0, b);
  auto d0 = level_face(L1, L0, 1, 0);
  auto d1 = level_face(L1, L0, 1, 1);

  using LObj = typename DLevel<GC>::Obj;
  std::vector<LObj> objs{L0.zero()};
  for (auto& a : sort_by_length(H0.objects(b))) objs.push_back(L0.wrap(a));

  // level-1 objects with an adjoined zero, keyed by their d_0 image
  std::map<LObj, std::vector<LObj>> glue;
  for (auto& c : H1.objects(b)) {
    bool has_zero = std::any_of(c.seq.begin(), c.seq.end(), [](auto& e) { return e.second.depth >= 0; });
    if (!has_zero) continue;
    auto lc = L1.wrap(c);
    glue[d0(lc)].push_back(d1(lc));
  }
  return build_partition(objs, b, [&](const LObj& a, auto&& link) {
    if (auto it = glue.find(a); it != glue.end())
      for (auto& t : it->second) link(t);
    if (a.zero) return;
    moves(a.inner, [&](const auto& t) { link(L0.wrap(t)); });
  });
}

/** @brief Alternating sum over cube entries of full grades, valued in the oracle's ring. */
template <class R>
class AltSum {
 public:
  using BObj = typename R::Obj;
  using Cube = CubeObj<BObj>;

  AltSum(R r, const GrothendieckOracle& o) : r_(std::move(r)), o_(&o) {}

  const GrothendieckOracle& oracle() const { return *o_; }

  int base(const BObj& a) const {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    int c = o_->cls(r_.pi0_class(a));
    cache_.emplace(a, c);
    return c;
  }

  int entry(const Cube& X) const {
    int acc = o_->zero();
    if (X.zero || !X.j.full()) return acc;
    for (unsigned U = 0; U < X.entries.size(); ++U) {
      int c = base(X.entries[U]);
      acc = o_->add(acc, std::popcount(U) % 2 ? o_->neg(c) : c);
    }
    return acc;
  }

  int operator()(const typename Hocolim<CubeGraded<R>>::Obj& a) const {
    int acc = o_->zero();
    for (auto& [x, X] : a.seq) acc = o_->add(acc, entry(X));
    return acc;
  }
  int operator()(const typename DLevel<CubeGraded<R>>::Obj& a) const {
    int acc = o_->zero();
    if (a.zero) return acc;
    for (auto& [x, X] : a.inner.seq)
      if (X.depth < 0) acc = o_->add(acc, entry(X.inner));
    return acc;
  }

 private:
  R r_;
  const GrothendieckOracle* o_;
  mutable std::map<BObj, int> cache_;
};

/** @brief A zigzag of hocolim morphisms; forward steps go src -> tgt. */
template <class H>
struct Zigzag {
  typename H::Obj start;
  std::vector<std::pair<typename H::Mor, bool>> steps;
};

template <class H>
bool verify_zigzag(const H& h, const Zigzag<H>& z, const typename H::Obj& end, std::string* why = nullptr) {
  auto cur = z.start;
  for (std::size_t t = 0; t < z.steps.size(); ++t) {
    auto& [f, fwd] = z.steps[t];
    auto bad = [&](const std::string& m) {
      if (why) *why = "step " + std::to_string(t) + ": " + m;
      return false;
    };
    if (!h.valid(f)) return bad("not a morphism: " + h.show(f));
    if (fwd) {
      if (!(f.src == cur)) return bad("source mismatch");
      cur = f.tgt;
    } else {
      if (!(f.tgt == cur)) return bad("target mismatch");
      cur = f.src;
    }
  }
  if (!(cur == end)) {
    if (why) *why = "ends at " + h.show(cur);
    return false;
  }
  return true;
}

/** @brief b with a + b connected to 1[((0,0),0)] by an explicit zigzag. */
template <class R>
struct InverseWitness {
  using H = Hocolim<CubeGraded<R>>;
  typename H::Obj a, b;
  Zigzag<H> path;
};

namespace detail {

template <class R>
class WitnessBuilder {
 public:
  using G = CubeGraded<R>;
  using H = Hocolim<G>;
  using HObj = typename H::Obj;
  using HMor = typename H::Mor;
  using Cube = typename G::Obj;
  using Entry = std::pair<JObj, Cube>;
  using Step = std::pair<HMor, bool>;

  explicit WitnessBuilder(const H& h) : h_(h), g_(h.diagram()), r_(g_.base()) {}

  static JObj full(int n) {
    JObj x{n, {}};
    for (int i = 1; i <= n; ++i) x.T.push_back(i);
    return x;
  }
  static JObj origin() { return JObj{0, {}}; }
  Entry zero_entry() const { return {origin(), g_.zero(origin())}; }

  HMor single_mor(const Entry& s, const Entry& t, const JMor& l, const typename G::Mor& rho) const {
    return HMor{h_.single(s.first, s.second), h_.single(t.first, t.second), FinMap::identity(1), {l}, {rho}};
  }

  // zigzag from a single entry to 1[((0,0),0)]
  std::vector<Step> reduce(const Entry& e) const {
    const auto& [x, X] = e;
    if (x == origin() && X == g_.zero(origin())) return {};
    if (!x.all_positive()) return reduce_degenerate(x);
    if (!x.full()) {
      int i = 1;
      while (std::find(x.T.begin(), x.T.end(), i) != x.T.end()) ++i;
      JObj t{x.n, x.T};
      t.T.push_back(-i);
      std::sort(t.T.begin(), t.T.end(), [](int u, int v) { return std::abs(u) < std::abs(v); });
      Entry z{t, g_.zero(t)};
      std::vector<Step> out{{single_mor(e, z, JMor{FinMap::identity(x.n), x, t}, g_.id(z.second)), true}};
      auto rest = reduce_degenerate(t);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    if (x.n == 0) throw StructureError("origin entry must be merged before reduction");
    throw StructureError("full entry reduction needs its summand decomposition");
  }

  // (n,T) with a negative: 1[(T,0)] <- 1[(P,0)] -> 1[(n,0)] <- 1[((0,0),0)]
  std::vector<Step> reduce_degenerate(const JObj& x) const {
    JObj p{x.n, x.positive()};
    JObj f = full(x.n);
    Entry ez{x, g_.zero(x)}, ep{p, g_.zero(p)}, ef{f, g_.zero(f)}, eo = zero_entry();
    return {{single_mor(ep, ez, JMor{FinMap::identity(x.n), p, x}, g_.id(ez.second)), false},
            {single_mor(ep, ef, JMor{FinMap::identity(x.n), p, f}, g_.id(ef.second)), true},
            {single_mor(eo, ef, JMor{FinMap{x.n, {}}, origin(), f}, g_.id(ef.second)), false}};
  }

  // at a full grade: e = a + b with b_U = a_{U xor n}
  std::vector<Step> reduce_full_pair(const JObj& x, const Cube& a, const Cube& e) const {
    int n = x.n;
    unsigned top = 1U << (n - 1);
    Cube target{x, false, {}};
    typename G::Mor rho{x, false, {}};
    for (unsigned U = 0; U < e.entries.size(); ++U) {
      target.entries.push_back(e.entries[U & ~top]);
      rho.entries.push_back(U & top ? r_.twist(a.entries[U], a.entries[U & ~top]) : r_.id(e.entries[U]));
    }
    JObj s{n, {}};
    for (int i = 1; i < n; ++i) s.T.push_back(i);
    Cube c{s, false, {}};
    for (unsigned W = 0; W < top; ++W) c.entries.push_back(e.entries[W]);
    Entry ee{x, e}, et{x, target}, ec{s, c};
    std::vector<Step> out{{single_mor(ee, et, j_id(x), rho), true},
                          {single_mor(ec, et, JMor{FinMap::identity(n), s, x}, g_.id(target)), false}};
    auto rest = reduce(ec);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  InverseWitness<R> build(const HObj& A) const {
    InverseWitness<R> w;
    w.a = A;
    int k = A.size();
    HObj merged;
    HMor merge{{}, {}, FinMap{k, std::vector<int>(2 * static_cast<std::size_t>(k))}, std::vector<JMor>(2 * k), {}};
    std::vector<std::function<std::vector<Step>()>> reducers;
    JObj one_full = full(1);
    for (int i = 0; i < k; ++i) {
      const auto& [x, X] = A.seq[i];
      merge.psi.img[i] = merge.psi.img[k + i] = i;
      if (x.full() && x.n > 0) {
        unsigned top = 1U << (x.n - 1);
        Cube bcube{x, false, {}};
        for (unsigned U = 0; U < X.entries.size(); ++U) bcube.entries.push_back(X.entries[U ^ top]);
        w.b.seq.push_back({x, bcube});
        merge.l[i] = merge.l[k + i] = j_id(x);
        Cube e = g_.oplus(X, bcube);
        merged.seq.push_back({x, e});
        reducers.push_back([this, x, X, e] { return reduce_full_pair(x, X, e); });
      } else if (x.n == 0) {
        // a at the origin pairs with (0,a) at (1,{1}) after extension by zero
        Cube bcube{one_full, false, {r_.zero(), X.entries[0]}};
        w.b.seq.push_back({one_full, bcube});
        merge.l[i] = JMor{FinMap{1, {}}, x, one_full};
        merge.l[k + i] = j_id(one_full);
        Cube ext = g_.transition(merge.l[i], X);
        Cube e = g_.oplus(ext, bcube);
        merged.seq.push_back({one_full, e});
        reducers.push_back([this, one_full, ext, e] { return reduce_full_pair(one_full, ext, e); });
      } else {
        Cube z = g_.zero(x);
        w.b.seq.push_back({x, z});
        merge.l[i] = merge.l[k + i] = j_id(x);
        Cube e = g_.oplus(X, z);
        merged.seq.push_back({x, e});
        reducers.push_back([this, x, e] { return reduce({x, e}); });
      }
    }
    merge.src = h_.oplus(A, w.b);
    merge.tgt = merged;
    for (int i = 0; i < k; ++i) merge.rho.push_back(g_.id(merged.seq[i].second));
    w.path.start = merge.src;
    w.path.steps.push_back({merge, true});

    // reduce each position in turn, identities elsewhere
    HObj cur = merged;
    for (int i = 0; i < k; ++i) {
      for (auto& [f, fwd] : reducers[i]()) {
        HObj pre, post;
        pre.seq.assign(cur.seq.begin(), cur.seq.begin() + i);
        post.seq.assign(cur.seq.begin() + i + 1, cur.seq.end());
        HMor step = f;
        if (!pre.seq.empty()) step = h_.oplus(h_.id(pre), step);
        if (!post.seq.empty()) step = h_.oplus(step, h_.id(post));
        cur.seq[i] = fwd ? f.tgt.seq[0] : f.src.seq[0];
        w.path.steps.push_back({step, fwd});
      }
    }
    if (k > 1) {
      HMor fold{cur, h_.single(origin(), g_.zero(origin())), FinMap{1, std::vector<int>(static_cast<std::size_t>(k), 0)},
                std::vector<JMor>(static_cast<std::size_t>(k), j_id(origin())), {g_.id(g_.zero(origin()))}};
      w.path.steps.push_back({fold, true});
    }
    return w;
  }

 private:
  const H& h_;
  const G& g_;
  const R& r_;
};

}  // namespace detail

/** @brief Additive inverse of a hocolim object with its connecting zigzag. */
template <class R>
InverseWitness<R> inverse_witness(const Hocolim<CubeGraded<R>>& H, const typename Hocolim<CubeGraded<R>>::Obj& a) {
  return detail::WitnessBuilder<R>(H).build(a);
}

template <class R>
typename Hocolim<CubeGraded<R>>::Obj witness_end(const Hocolim<CubeGraded<R>>& H) {
  return H.single(JObj{0, {}}, H.diagram().zero(JObj{0, {}}));
}

template <class R>
bool verify_witness(const Hocolim<CubeGraded<R>>& H, const InverseWitness<R>& w, std::string* why = nullptr) {
  if (!(w.path.start == H.oplus(w.a, w.b))) {
    if (why) *why = "zigzag does not start at a + b";
    return false;
  }
  return verify_zigzag(H, w.path, witness_end(H), why);
}

/** @brief Finite ring given by its class tables. */
struct RingTable {
  int size = 0;
  int zero = 0, one = 0;
  std::vector<std::vector<int>> add, mul;
};

inline Report check_ring_table(const RingTable& t) {
  Report r;
  int n = t.size;
  auto idx = [&](auto& tab, int a, int b) { return tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a) {
    r.expect(idx(t.add, a, t.zero) == a && idx(t.add, t.zero, a) == a, "additive unit", [&] { return std::to_string(a); });
    r.expect(idx(t.mul, a, t.one) == a && idx(t.mul, t.one, a) == a, "multiplicative unit", [&] { return std::to_string(a); });
    r.expect(idx(t.mul, a, t.zero) == t.zero && idx(t.mul, t.zero, a) == t.zero, "zero annihilates",
             [&] { return std::to_string(a); });
    bool has_neg = false;
    for (int b = 0; b < n; ++b) has_neg = has_neg || idx(t.add, a, b) == t.zero;
    r.expect(has_neg, "additive inverse", [&] { return std::to_string(a); });
    for (int b = 0; b < n; ++b) {
      r.expect(idx(t.add, a, b) == idx(t.add, b, a), "additive commutativity", [&] { return std::to_string(a) + "," + std::to_string(b); });
      r.expect(idx(t.mul, a, b) == idx(t.mul, b, a), "multiplicative commutativity",
               [&] { return std::to_string(a) + "," + std::to_string(b); });
      for (int c = 0; c < n; ++c) {
        auto s = [&] { return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c); };
        r.expect(idx(t.add, idx(t.add, a, b), c) == idx(t.add, a, idx(t.add, b, c)), "additive associativity", s);
        r.expect(idx(t.mul, idx(t.mul, a, b), c) == idx(t.mul, a, idx(t.mul, b, c)), "multiplicative associativity", s);
        r.expect(idx(t.mul, a, idx(t.add, b, c)) == idx(t.add, idx(t.mul, a, b), idx(t.mul, a, c)), "distributivity", s);
      }
    }
  }
  return r;
}

/** @brief Ring of components of the ring completion with its invariant labels and witnesses. */
template <class R>
struct Pi0Ring {
  using LObj = typename DLevel<CubeGraded<R>>::Obj;
  Pi0Partition<LObj> partition;
  RingTable table;
  std::vector<int> labels;  // oracle class per component
  std::vector<std::optional<InverseWitness<R>>> witnesses;
  bool stable = false;
  Report report;
};

namespace detail {

template <class R>
typename Hocolim<CubeGraded<R>>::Obj strip_level(const typename DLevel<CubeGraded<R>>::Obj& a) {
  typename Hocolim<CubeGraded<R>>::Obj out;
  for (auto& [x, X] : a.inner.seq) {
    if (X.depth >= 0) throw StructureError("adjoined zero in a level-0 term");
    out.seq.push_back({x, X.inner});
  }
  return out;
}

template <class R>
typename DLevel<CubeGraded<R>>::Obj embed_level(const DLevel<CubeGraded<R>>& L, const typename Hocolim<CubeGraded<R>>::Obj& a) {
  const auto& A = L.inner_category().diagram();
  typename Hocolim<AdjoinZeros<CubeGraded<R>>>::Obj out;
  for (auto& [x, X] : a.seq) out.seq.push_back({x, A.inner(X)});
  return L.wrap(out);
}

}  // namespace detail

/**
 * @brief Components of level 0 of the ring completion of r with the induced
 * ring structure, checked against the oracle through alt_sum.
 */
template <class R>
Pi0Ring<R> pi0_ring(const R& r, const GrothendieckOracle& oracle, const Bound& b) {
  Pi0Ring<R> out;
  auto G = build_GR(r);
  auto L = derived_level(G, 0);
  Hocolim<CubeGraded<R>> H(G);
  AltSum<R> alt(r, oracle);
  auto& rep = out.report;

  out.partition = level0_pi0(G, b);
  out.stable = same_partition(out.partition, level0_pi0(G, next_bound(b)));
  rep.expect(out.stable, "stabilization", [] { return std::string("partition changed at the next length bound"); });
  const auto& P = out.partition;
  int n = P.classes();

  // ring table through representatives
  auto& t = out.table;
  t.size = n;
  t.zero = P.class_of_or_throw(L.zero(), "zero");
  t.one = P.class_of_or_throw(L.one(), "unit");
  t.add.assign(n, std::vector<int>(n));
  t.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      t.add[a][c] = P.class_of_or_throw(L.oplus(P.rep(a), P.rep(c)), "sum of representatives");
      t.mul[a][c] = P.class_of_or_throw(L.otimes(P.rep(a), P.rep(c)), "product of representatives");
    }
  rep.merge(check_ring_table(t), "ring: ");

  // alt_sum is constant on classes and identifies the table with the oracle's ring
  out.labels.assign(n, -1);
  for (std::size_t i = 0; i < P.objects.size(); ++i) {
    int v = alt(P.objects[i]);
    int c = P.cls[i];
    if (out.labels[c] < 0) out.labels[c] = v;
    rep.expect(out.labels[c] == v, "alt_sum invariance", [&] { return L.show(P.objects[i]); });
  }
  std::vector<int> seen(static_cast<std::size_t>(oracle.classes()), 0);
  for (int c = 0; c < n; ++c) ++seen[out.labels[c]];
  for (int v = 0; v < oracle.classes(); ++v)
    rep.expect(seen[v] == 1, "isomorphism", [&] { return "oracle class " + oracle.label(v) + " hit " + std::to_string(seen[v]) + " times"; });
  rep.expect(out.labels[t.zero] == oracle.zero() && out.labels[t.one] == oracle.one(), "isomorphism",
             [] { return std::string("units"); });
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      rep.expect(out.labels[t.add[a][c]] == oracle.add(out.labels[a], out.labels[c]), "isomorphism",
                 [&] { return "sum " + std::to_string(a) + "," + std::to_string(c); });
      if (oracle.has_mul())
        rep.expect(out.labels[t.mul[a][c]] == oracle.mul(out.labels[a], out.labels[c]), "isomorphism",
                   [&] { return "product " + std::to_string(a) + "," + std::to_string(c); });
    }

  // inverse witnesses
  auto end = detail::embed_level(L, witness_end(H));
  for (int c = 0; c < n; ++c) {
    const auto& a = P.rep(c);
    if (a.zero) {
      out.witnesses.push_back(std::nullopt);
      rep.expect(t.add[c][c] == t.zero, "inverse witness", [] { return std::string("zero"); });
      continue;
    }
    auto w = inverse_witness(H, detail::strip_level<R>(a));
    std::string why;
    rep.expect(verify_witness(H, w, &why), "inverse witness", [&] { return L.show(a) + ": " + why; });
    rep.expect(P.class_of(end) == t.zero, "inverse witness", [] { return std::string("endpoint is not in the zero class"); });
    auto sum = P.class_of(L.oplus(a, detail::embed_level(L, w.b)));
    if (sum) rep.expect(*sum == t.zero, "inverse witness", [&] { return L.show(a) + " + witness not in the zero class"; });
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

}  // namespace rigcomp
