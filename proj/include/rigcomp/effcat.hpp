#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigcomp {

/** @brief Single budget threaded through every enumerator. */
struct Bound {
  int index_max = 2;   // n of index objects (n,T)
  int length_max = 2;  // length of hocolim sequences
  int entry_max = 3;   // size of base objects
  int rank_max = 2;    // rank of free modules
  std::size_t hom_max = 100000;
  std::size_t tuple_max = 200000;
  std::size_t item_max = 4000000;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int q_max = 1;
};

struct CompositionError : std::runtime_error {
  std::string g, f;
  CompositionError(std::string g_, std::string f_)
      : std::runtime_error("cannot compose " + g_ + " after " + f_), g(std::move(g_)), f(std::move(f_)) {}
};

struct ResourceError : std::runtime_error {
  std::string bound;
  ResourceError(std::string b, const std::string& what)
      : std::runtime_error(what + " (bound " + b + ")"), bound(std::move(b)) {}
};

struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompleteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void charge(std::size_t count, const Bound& b, const char* what) {
  if (count > b.item_max)
    throw ResourceError("item_max=" + std::to_string(b.item_max), std::string(what) + " exceeds budget");
}

struct Violation {
  std::string condition;
  std::string detail;
};

/** @brief Violations plus per-condition counts. */
struct Report {
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> checked;
  std::map<std::string, std::size_t> failed;
  std::size_t keep_per_condition = 5;

  bool ok() const { return failed.empty(); }

  std::size_t total_failed() const {
    std::size_t t = 0;
    for (auto& [k, v] : failed) t += v;
    return t;
  }
  std::size_t total_checked() const {
    std::size_t t = 0;
    for (auto& [k, v] : checked) t += v;
    return t;
  }

  template <class Detail>
  bool expect(bool good, const std::string& cond, Detail&& detail) {
    ++checked[cond];
    if (good) return true;
    if (failed[cond]++ < keep_per_condition) violations.push_back({cond, detail()});
    return false;
  }

  void fail(const std::string& cond, const std::string& detail) {
    expect(false, cond, [&] { return detail; });
  }

  void merge(const Report& r, const std::string& prefix = "") {
    for (auto& [k, v] : r.checked) checked[prefix + k] += v;
    for (auto& [k, v] : r.failed) failed[prefix + k] += v;
    for (auto& v : r.violations) violations.push_back({prefix + v.condition, v.detail});
  }

  std::string summary() const {
    std::ostringstream os;
    for (auto& [k, v] : checked) {
      auto it = failed.find(k);
      os << k << ": " << v << " checked, " << (it == failed.end() ? 0 : it->second) << " failed\n";
    }
    for (auto& v : violations) os << "  violation [" << v.condition << "] " << v.detail << "\n";
    return os.str();
  }
};

template <class C, class M>
bool mor_equal(const C& c, const M& a, const M& b) {
  if constexpr (requires { c.mor_eq(a, b); })
    return c.mor_eq(a, b);
  else
    return a == b;
}

template <class C, class X>
std::string show(const C& c, const X& x) {
  if constexpr (requires { c.show(x); })
    return c.show(x);
  else
    return "?";
}

template <class C>
concept EffCategory = requires(const C& c, const typename C::Obj& o, const typename C::Mor& m, const Bound& b) {
  { c.dom(m) } -> std::convertible_to<typename C::Obj>;
  { c.cod(m) } -> std::convertible_to<typename C::Obj>;
  { c.id(o) } -> std::convertible_to<typename C::Mor>;
  { c.compose(m, m) } -> std::convertible_to<typename C::Mor>;
  c.objects(b);
  c.homs(o, o, b);
};

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

/**
 * @brief Calls fn on index tuples of length k over {0..n-1}; exhaustive when
 * n^k fits in tuple_max, otherwise b.samples seeded random tuples.
 * Returns the number of tuples visited.
 */
template <std::size_t K, class Fn>
std::size_t for_tuples(std::size_t n, const Bound& b, std::uint64_t salt, Fn&& fn) {
  if (n == 0) return 0;
  double total = 1;
  for (std::size_t i = 0; i < K; ++i) total *= static_cast<double>(n);
  std::array<std::size_t, K> t{};
  if (total <= static_cast<double>(b.tuple_max)) {
    std::size_t count = 0;
    while (true) {
      fn(t);
      ++count;
      std::size_t i = 0;
      while (i < K && ++t[i] == n) t[i++] = 0;
      if (i == K) break;
    }
    return count;
  }
  std::mt19937_64 rng(b.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  for (std::size_t s = 0; s < b.samples; ++s) {
    for (auto& x : t) x = pick(rng, n);
    fn(t);
  }
  return b.samples;
}

/** @brief Objects, morphisms and composable chains handed to the checkers. */
template <class C>
struct Samples {
  using Obj = typename C::Obj;
  using Mor = typename C::Mor;
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  std::vector<std::pair<Mor, Mor>> pairs;           // (f, g) with g after f
  std::vector<std::array<Mor, 3>> triples;          // (f, g, h)
};

template <class C, class Objs>
std::vector<typename C::Mor> all_homs_between(const C& c, const Objs& objs, const Bound& b) {
  std::vector<typename C::Mor> mors;
  for (auto& a : objs)
    for (auto& x : objs) {
      auto hs = c.homs(a, x, b);
      mors.insert(mors.end(), hs.begin(), hs.end());
      charge(mors.size(), b, "morphism enumeration");
    }
  return mors;
}

// composable chains from a morphism list, exhaustive or seeded sampling
template <class C>
void fill_chains(const C& c, Samples<C>& s, const Bound& b) {
  using Mor = typename C::Mor;
  std::vector<std::vector<std::size_t>> out(s.mors.size());
  for (std::size_t i = 0; i < s.mors.size(); ++i)
    for (std::size_t j = 0; j < s.mors.size(); ++j)
      if (c.dom(s.mors[j]) == c.cod(s.mors[i])) out[i].push_back(j);
  std::size_t npairs = 0, ntriples = 0;
  for (std::size_t i = 0; i < s.mors.size(); ++i) {
    npairs += out[i].size();
    for (auto j : out[i]) ntriples += out[j].size();
  }
  if (npairs <= b.tuple_max) {
    for (std::size_t i = 0; i < s.mors.size(); ++i)
      for (auto j : out[i]) s.pairs.push_back({s.mors[i], s.mors[j]});
  }
  if (ntriples <= b.tuple_max) {
    for (std::size_t i = 0; i < s.mors.size(); ++i)
      for (auto j : out[i])
        for (auto k : out[j]) s.triples.push_back({s.mors[i], s.mors[j], s.mors[k]});
  }
  if (npairs > b.tuple_max || ntriples > b.tuple_max) {
    std::mt19937_64 rng(b.seed ^ 0x51ed27ULL);
    for (std::size_t t = 0; t < b.samples && !s.mors.empty(); ++t) {
      std::size_t i = pick(rng, s.mors.size());
      if (out[i].empty()) continue;
      std::size_t j = out[i][pick(rng, out[i].size())];
      if (npairs > b.tuple_max) s.pairs.push_back({s.mors[i], s.mors[j]});
      if (ntriples > b.tuple_max && !out[j].empty()) {
        std::size_t k = out[j][pick(rng, out[j].size())];
        s.triples.push_back(std::array<Mor, 3>{s.mors[i], s.mors[j], s.mors[k]});
      }
    }
  }
}

template <class C>
Samples<C> exhaustive_samples(const C& c, const Bound& b) {
  Samples<C> s;
  s.objs = c.objects(b);
  charge(s.objs.size(), b, "object enumeration");
  s.mors = all_homs_between(c, s.objs, b);
  fill_chains(c, s, b);
  return s;
}

/** @brief Identity and associativity laws over the samples. */
template <class C>
Report check_category(const C& c, const Samples<C>& s) {
  Report r;
  for (auto& f : s.mors) {
    r.expect(mor_equal(c, c.compose(c.id(c.cod(f)), f), f), "left identity", [&] { return show(c, f); });
    r.expect(mor_equal(c, c.compose(f, c.id(c.dom(f))), f), "right identity", [&] { return show(c, f); });
  }
  for (auto& [f, g] : s.pairs) {
    auto gf = c.compose(g, f);
    r.expect(c.dom(gf) == c.dom(f) && c.cod(gf) == c.cod(g), "composite endpoints",
             [&] { return show(c, g) + " o " + show(c, f); });
  }
  for (auto& t : s.triples) {
    auto& [f, g, h] = t;
    bool ok = false;
    try {
      ok = mor_equal(c, c.compose(h, c.compose(g, f)), c.compose(c.compose(h, g), f));
    } catch (const CompositionError&) {
    }
    r.expect(ok, "associativity", [&] { return "(" + show(c, f) + ", " + show(c, g) + ", " + show(c, h) + ")"; });
  }
  return r;
}

template <class C>
Report check_category(const C& c, const Bound& b) {
  return check_category(c, exhaustive_samples(c, b));
}

/** @brief Two enumerations with the same bound agree. */
template <class C>
Report check_enumerators(const C& c, const Bound& b) {
  Report r;
  auto o1 = c.objects(b), o2 = c.objects(b);
  r.expect(o1 == o2, "enumerator determinism", [] { return std::string("objects differ between runs"); });
  return r;
}

/** @brief Functor between effective categories given by two callables. */
template <class S, class T>
struct FunctorData {
  const S* source;
  const T* target;
  std::function<typename T::Obj(const typename S::Obj&)> on_obj;
  std::function<typename T::Mor(const typename S::Mor&)> on_mor;
};

template <class S, class T>
Report check_functor(const FunctorData<S, T>& F, const Samples<S>& s) {
  Report r;
  const T& t = *F.target;
  for (auto& a : s.objs)
    r.expect(mor_equal(t, F.on_mor(F.source->id(a)), t.id(F.on_obj(a))), "functor identity",
             [&] { return show(*F.source, a); });
  for (auto& f : s.mors) {
    auto Ff = F.on_mor(f);
    r.expect(t.dom(Ff) == F.on_obj(F.source->dom(f)) && t.cod(Ff) == F.on_obj(F.source->cod(f)),
             "functor endpoints", [&] { return show(*F.source, f); });
  }
  for (auto& [f, g] : s.pairs)
    r.expect(mor_equal(t, F.on_mor(F.source->compose(g, f)), t.compose(F.on_mor(g), F.on_mor(f))),
             "functor composition", [&] { return show(*F.source, g) + " o " + show(*F.source, f); });
  return r;
}

/** @brief Index objects/morphisms and fiber samples of a graded category. */
template <class GC>
struct GradedSamples {
  using IObj = typename GC::Index::Obj;
  using IMor = typename GC::Index::Mor;
  using Obj = typename GC::Obj;
  using Mor = typename GC::Mor;
  std::vector<IObj> grades;
  std::vector<IMor> index_mors;
  std::vector<std::pair<IMor, IMor>> index_pairs;  // (k, l) with l after k
  std::vector<Obj> objs;
  std::vector<Mor> mors;

  std::vector<std::size_t> objs_in(const GC& gc, const IObj& x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (gc.grade(objs[i]) == x) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> mors_in(const GC& gc, const IObj& x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mors.size(); ++i)
      if (gc.grade(gc.dom(mors[i])) == x) out.push_back(i);
    return out;
  }
};

template <class GC>
GradedSamples<GC> graded_samples(const GC& gc, const Bound& b) {
  GradedSamples<GC> s;
  const auto& J = gc.index();
  s.grades = J.objects(b);
  for (auto& x : s.grades)
    for (auto& y : s.grades) {
      auto hs = J.homs(x, y, b);
      s.index_mors.insert(s.index_mors.end(), hs.begin(), hs.end());
    }
  for (auto& k : s.index_mors)
    for (auto& l : s.index_mors)
      if (J.cod(k) == J.dom(l)) s.index_pairs.push_back({k, l});
  for (auto& x : s.grades) {
    auto os = gc.fiber_objects(x, b);
    s.objs.insert(s.objs.end(), os.begin(), os.end());
    charge(s.objs.size(), b, "fiber object enumeration");
    for (auto& a : os)
      for (auto& a2 : os) {
        auto hs = gc.homs(a, a2, b);
        s.mors.insert(s.mors.end(), hs.begin(), hs.end());
      }
    charge(s.mors.size(), b, "fiber morphism enumeration");
  }
  return s;
}

/**
 * @brief Left lax transformation between graded diagrams over the same index:
 * functors F_x on each fiber and nu^k_X : D(k) F_x X -> F_y C(k) X.
 */
template <class GS, class GT>
struct LeftLaxData {
  const GS* source;
  const GT* target;
  std::function<typename GT::Obj(const typename GS::Obj&)> on_obj;
  std::function<typename GT::Mor(const typename GS::Mor&)> on_mor;
  std::function<typename GT::Mor(const typename GS::Index::Mor&, const typename GS::Obj&)> nu;
};

template <class GS, class GT>
LeftLaxData<GS, GT> strict_identity_transformation(const GS& g) {
  LeftLaxData<GS, GT> T;
  T.source = &g;
  T.target = &g;
  T.on_obj = [](const typename GS::Obj& a) { return a; };
  T.on_mor = [](const typename GS::Mor& f) { return f; };
  T.nu = [&g](const typename GS::Index::Mor& k, const typename GS::Obj& a) { return g.id(g.transition(k, a)); };
  return T;
}

template <class GS, class GT>
Report check_left_lax(const LeftLaxData<GS, GT>& T, const GradedSamples<GS>& s) {
  Report r;
  const GS& C = *T.source;
  const GT& D = *T.target;
  const auto& J = C.index();
  // component functors
  for (auto& a : s.objs)
    r.expect(mor_equal(D, T.on_mor(C.id(a)), D.id(T.on_obj(a))), "component identity", [&] { return show(C, a); });
  for (auto& f : s.mors) {
    auto Ff = T.on_mor(f);
    r.expect(D.dom(Ff) == T.on_obj(C.dom(f)) && D.cod(Ff) == T.on_obj(C.cod(f)), "component endpoints",
             [&] { return show(C, f); });
  }
  auto nu_ok = [&](const auto& k, const auto& a, const auto& m) {
    return D.dom(m) == D.transition(k, T.on_obj(a)) && D.cod(m) == T.on_obj(C.transition(k, a));
  };
  for (auto& x : s.grades)
    for (auto i : s.objs_in(C, x)) {
      auto& a = s.objs[i];
      auto k = J.id(x);
      r.expect(mor_equal(D, T.nu(k, a), D.id(T.on_obj(a))), "nu(id) = id", [&] { return show(C, a); });
    }
  for (auto& k : s.index_mors) {
    for (auto i : s.objs_in(C, J.dom(k))) {
      auto& a = s.objs[i];
      r.expect(nu_ok(k, a, T.nu(k, a)), "nu endpoints", [&] { return show(C, a); });
    }
    // naturality of nu^k
    for (auto i : s.mors_in(C, J.dom(k))) {
      auto& f = s.mors[i];
      auto lhs = D.compose(T.on_mor(C.transition(k, f)), T.nu(k, C.dom(f)));
      auto rhs = D.compose(T.nu(k, C.cod(f)), D.transition(k, T.on_mor(f)));
      r.expect(mor_equal(D, lhs, rhs), "nu naturality", [&] { return show(C, f); });
    }
  }
  for (auto& [k, l] : s.index_pairs)
    for (auto i : s.objs_in(C, J.dom(k))) {
      auto& a = s.objs[i];
      bool ok = false;
      try {
        auto lk = J.compose(l, k);
        auto lhs = T.nu(lk, a);
        auto rhs = D.compose(T.nu(l, C.transition(k, a)), D.transition(l, T.nu(k, a)));
        ok = C.transition(lk, a) == C.transition(l, C.transition(k, a)) && mor_equal(D, lhs, rhs);
      } catch (const CompositionError&) {
      }
      r.expect(ok, "cocycle", [&] { return show(C, a); });
    }
  return r;
}

}  // namespace rigcomp
