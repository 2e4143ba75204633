#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "perm.hpp"

namespace rigcomp {

/**
 * @brief Thomason's homotopy colimit of a J-shaped diagram GC, with the
 * zeroless bipermutative structure when GC carries a graded tensor.
 */
template <class GC>
class Hocolim {
 public:
  using Index = typename GC::Index;
  using IObj = typename Index::Obj;
  using IMor = typename Index::Mor;
  using CObj = typename GC::Obj;
  using CMor = typename GC::Mor;

  /** @brief n[(x_1,X_1),...,(x_n,X_n)], n >= 1. */
  struct Obj {
    std::vector<std::pair<IObj, CObj>> seq;
    int size() const { return static_cast<int>(seq.size()); }
    friend bool operator==(const Obj&, const Obj&) = default;
    friend auto operator<=>(const Obj&, const Obj&) = default;
  };
  /** @brief (psi, l_i, rho_j) with its endpoints. */
  struct Mor {
    Obj src, tgt;
    FinMap psi;
    std::vector<IMor> l;
    std::vector<CMor> rho;
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  explicit Hocolim(GC g) : g_(std::move(g)) {}

  const GC& diagram() const { return g_; }
  const Index& index() const { return g_.index(); }

  Obj single(const IObj& x, const CObj& X) const { return Obj{{{x, X}}}; }

  // source of rho_j: sum over the fiber of psi at j of C(l_i)(X_i), increasing i
  CObj rho_source(const Obj& a, const FinMap& psi, const std::vector<IMor>& l, int j) const {
    std::vector<CObj> parts;
    for (int i : psi.fiber(j)) parts.push_back(g_.transition(l[i], a.seq[i].second));
    if (parts.empty()) throw StructureError("hocolim morphism with non-surjective psi");
    return oplus_all(g_, parts);
  }

  bool valid(const Mor& f) const {
    const auto& J = index();
    if (f.psi.m() != f.src.size() || f.psi.n != f.tgt.size() || !f.psi.surjective()) return false;
    if (static_cast<int>(f.l.size()) != f.src.size() || static_cast<int>(f.rho.size()) != f.tgt.size()) return false;
    for (int i = 0; i < f.src.size(); ++i)
      if (!(J.dom(f.l[i]) == f.src.seq[i].first) || !(J.cod(f.l[i]) == f.tgt.seq[f.psi(i)].first)) return false;
    for (int j = 0; j < f.tgt.size(); ++j)
      if (!(g_.dom(f.rho[j]) == rho_source(f.src, f.psi, f.l, j)) || !(g_.cod(f.rho[j]) == f.tgt.seq[j].second))
        return false;
    return true;
  }

  Obj dom(const Mor& f) const { return f.src; }
  Obj cod(const Mor& f) const { return f.tgt; }
  Mor id(const Obj& a) const {
    Mor f{a, a, FinMap::identity(a.size()), {}, {}};
    for (auto& [x, X] : a.seq) {
      f.l.push_back(index().id(x));
      f.rho.push_back(g_.id(X));
    }
    return f;
  }

  Mor compose(const Mor& g, const Mor& f) const {
    if (!(f.tgt == g.src)) throw CompositionError(show(g), show(f));
    const auto& J = index();
    Mor h{f.src, g.tgt, rigcomp::compose(g.psi, f.psi), {}, {}};
    for (int i = 0; i < f.src.size(); ++i) h.l.push_back(J.compose(g.l[f.psi(i)], f.l[i]));
    for (int r = 0; r < g.tgt.size(); ++r) {
      auto I = h.psi.fiber(r);
      std::vector<CObj> objs;
      for (int i : I) objs.push_back(g_.transition(h.l[i], f.src.seq[i].second));
      std::vector<int> order(I.size());
      for (std::size_t p = 0; p < I.size(); ++p) order[p] = static_cast<int>(p);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f.psi(I[a]) < f.psi(I[b]); });
      auto sigma = rigcomp::block_permute(g_, objs, order);
      std::vector<CMor> parts;
      for (int k : g.psi.fiber(r)) parts.push_back(g_.transition(g.l[k], f.rho[k]));
      h.rho.push_back(g_.compose(g.rho[r], g_.compose(oplus_all_mor(g_, parts), sigma)));
    }
    return h;
  }

  Obj oplus(const Obj& a, const Obj& c) const {
    Obj s = a;
    s.seq.insert(s.seq.end(), c.seq.begin(), c.seq.end());
    return s;
  }
  Mor oplus(const Mor& f, const Mor& g) const {
    Mor s{oplus(f.src, g.src), oplus(f.tgt, g.tgt), map_sum(f.psi, g.psi), f.l, f.rho};
    s.l.insert(s.l.end(), g.l.begin(), g.l.end());
    s.rho.insert(s.rho.end(), g.rho.begin(), g.rho.end());
    return s;
  }
  Obj zero() const { throw UnsupportedError("the homotopy colimit has no zero object"); }
  Mor twist(const Obj& a, const Obj& c) const {
    return relabel(oplus(a, c), oplus(c, a), FinMap::from_perm(shuffle_chi(a.size(), c.size())));
  }
  bool zeroless() const { return true; }

  // (psi, id, id) for a bijection psi carrying src entries onto equal tgt entries
  Mor relabel(const Obj& src, const Obj& tgt, const FinMap& psi) const {
    Mor f{src, tgt, psi, {}, {}};
    for (auto& [x, X] : src.seq) f.l.push_back(index().id(x));
    for (auto& [y, Y] : tgt.seq) f.rho.push_back(g_.id(Y));
    return f;
  }

  Obj otimes(const Obj& a, const Obj& c) const {
    const auto& J = index();
    Obj t;
    for (auto& [x, X] : a.seq)
      for (auto& [y, Y] : c.seq) t.seq.push_back({J.oplus(x, y), g_.otimes(X, Y)});
    return t;
  }

  /** @brief f * id_c: entries rho_r * id_{Y_j}. */
  Mor tensor_left(const Mor& f, const Obj& c) const {
    const auto& J = index();
    int m = c.size();
    Mor t{otimes(f.src, c), otimes(f.tgt, c), FinMap{f.tgt.size() * m, {}}, {}, {}};
    for (int i = 0; i < f.src.size(); ++i)
      for (int j = 0; j < m; ++j) {
        t.psi.img.push_back(f.psi(i) * m + j);
        t.l.push_back(J.oplus(f.l[i], J.id(c.seq[j].first)));
      }
    for (int r = 0; r < f.tgt.size(); ++r)
      for (int j = 0; j < m; ++j) t.rho.push_back(g_.otimes(f.rho[r], g_.id(c.seq[j].second)));
    return t;
  }

  // d_l iterated: sum_j a*b_j -> a*(sum_j b_j)
  CMor dl_multi(const CObj& a, const std::vector<CObj>& bs) const {
    CMor acc = g_.id(g_.otimes(a, bs.at(0)));
    CObj prefix = bs[0];
    for (std::size_t t = 1; t < bs.size(); ++t) {
      acc = g_.compose(g_.dl(a, prefix, bs[t]), g_.oplus(acc, g_.id(g_.otimes(a, bs[t]))));
      prefix = g_.oplus(prefix, bs[t]);
    }
    return acc;
  }

  /** @brief id_a * g: entries (id * pi_s) o d_l. */
  Mor tensor_right(const Obj& a, const Mor& g) const {
    const auto& J = index();
    int m = g.src.size(), m2 = g.tgt.size();
    Mor t{otimes(a, g.src), otimes(a, g.tgt), FinMap{a.size() * m2, {}}, {}, {}};
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < m; ++j) {
        t.psi.img.push_back(i * m2 + g.psi(j));
        t.l.push_back(J.oplus(J.id(a.seq[i].first), g.l[j]));
      }
    for (int i = 0; i < a.size(); ++i)
      for (int s = 0; s < m2; ++s) {
        std::vector<CObj> bs;
        for (int j : g.psi.fiber(s)) bs.push_back(g_.transition(g.l[j], g.src.seq[j].second));
        auto X = a.seq[i].second;
        t.rho.push_back(g_.compose(g_.otimes(g_.id(X), g.rho[s]), dl_multi(X, bs)));
      }
    return t;
  }

  Mor otimes(const Mor& f, const Mor& g) const { return compose(tensor_left(f, g.tgt), tensor_right(f.src, g)); }

  Obj one() const { return single(index().zero(), g_.one()); }
  bool has_twist_times() const { return g_.has_twist_times(); }

  /** @brief (sigma_{n,m}, id, id) o (id, chi^{x_i,y_j}, C(chi^{x_i,y_j}) gamma). */
  Mor twist_times(const Obj& a, const Obj& c) const {
    if (!g_.has_twist_times()) throw UnsupportedError("diagram has no multiplicative twist");
    const auto& J = index();
    int n = a.size(), m = c.size();
    Obj mid;
    Mor first{otimes(a, c), {}, FinMap::identity(n * m), {}, {}};
    for (auto& [x, X] : a.seq)
      for (auto& [y, Y] : c.seq) {
        auto chi = J.twist(x, y);
        mid.seq.push_back({J.oplus(y, x), g_.otimes(Y, X)});
        first.l.push_back(chi);
        first.rho.push_back(g_.transition(chi, g_.twist_times(X, Y)));
      }
    first.tgt = mid;
    auto second = relabel(mid, otimes(c, a), FinMap::from_perm(transpose_sigma(n, m)));
    return compose(second, first);
  }

  /** @brief (xi, id, id). */
  Mor dl(const Obj& a, const Obj& c, const Obj& c2) const {
    return relabel(oplus(otimes(a, c), otimes(a, c2)), otimes(a, oplus(c, c2)),
                   FinMap::from_perm(xi_perm(a.size(), c.size(), c2.size())));
  }

  bool mor_eq(const Mor& f, const Mor& g) const {
    if (!(f.src == g.src) || !(f.tgt == g.tgt) || !(f.psi == g.psi) || !(f.l == g.l)) return false;
    for (std::size_t j = 0; j < f.rho.size(); ++j)
      if (!mor_equal(g_, f.rho[j], g.rho[j])) return false;
    return true;
  }

  std::string show(const Obj& a) const {
    std::string s = std::to_string(a.size()) + "[";
    for (std::size_t i = 0; i < a.seq.size(); ++i)
      s += (i ? "," : "") + std::string("(") + rigcomp::show(index(), a.seq[i].first) + "," +
           rigcomp::show(g_, a.seq[i].second) + ")";
    return s + "]";
  }
  std::string show(const Mor& f) const {
    std::string s = "(" + to_string(f.psi.img, 1) + ";";
    for (std::size_t i = 0; i < f.l.size(); ++i) s += (i ? "," : "") + rigcomp::show(index(), f.l[i]);
    s += ";";
    for (std::size_t j = 0; j < f.rho.size(); ++j) s += (j ? "," : "") + rigcomp::show(g_, f.rho[j]);
    return s + ")";
  }

  // enumeration

  std::vector<std::pair<IObj, CObj>> entries(const Bound& b) const {
    std::vector<std::pair<IObj, CObj>> out;
    for (auto& x : index().objects(b))
      for (auto& X : g_.fiber_objects(x, b)) out.push_back({x, X});
    return out;
  }

  std::vector<Obj> objects(const Bound& b) const {
    auto es = entries(b);
    std::vector<Obj> out;
    for (int len = 1; len <= b.length_max; ++len) {
      std::vector<std::size_t> d(static_cast<std::size_t>(len), 0);
      while (true) {
        Obj a;
        for (auto i : d) a.seq.push_back(es[i]);
        out.push_back(std::move(a));
        charge(out.size(), b, "hocolim object enumeration");
        std::size_t i = 0;
        while (i < d.size() && ++d[i] == es.size()) d[i++] = 0;
        if (i == d.size()) break;
      }
    }
    return out;
  }

  /**
   * @brief Morphisms out of a. With successors_only, each rho_j ranges over
   * the diagram's successors (one per reachable target) instead of all homs
   * into enumerated fiber objects.
   */
  std::vector<Mor> homs_from(const Obj& a, const Bound& b, bool successors_only = false) const {
    const auto& J = index();
    auto grades = J.objects(b);
    std::vector<Mor> out;
    int n = a.size();
    struct Choice {
      IObj y;
      std::vector<IMor> l;
      CMor rho;
    };
    for (int m = 1; m <= n; ++m)
      for (auto& psi : all_surjections(n, m)) {
        std::vector<std::vector<Choice>> per(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
          auto I = psi.fiber(j);
          for (auto& y : grades) {
            std::vector<std::vector<IMor>> opts;
            bool empty = false;
            for (int i : I) {
              opts.push_back(J.homs(a.seq[i].first, y, b));
              if (opts.back().empty()) empty = true;
            }
            if (empty) continue;
            std::vector<std::size_t> d(I.size(), 0);
            while (true) {
              std::vector<IMor> ls;
              std::vector<CObj> parts;
              for (std::size_t t = 0; t < I.size(); ++t) {
                ls.push_back(opts[t][d[t]]);
                parts.push_back(g_.transition(ls.back(), a.seq[I[t]].second));
              }
              auto src = oplus_all(g_, parts);
              if (successors_only) {
                for (auto& rho : g_.successors(src, b)) per[j].push_back(Choice{y, ls, rho});
              } else {
                for (auto& Y : g_.fiber_objects(y, b))
                  for (auto& rho : g_.homs(src, Y, b)) per[j].push_back(Choice{y, ls, rho});
              }
              charge(per[j].size(), b, "hocolim hom enumeration");
              std::size_t t = 0;
              while (t < d.size() && ++d[t] == opts[t].size()) d[t++] = 0;
              if (t == d.size()) break;
            }
          }
        }
        bool any_empty = std::any_of(per.begin(), per.end(), [](auto& v) { return v.empty(); });
        if (any_empty) continue;
        std::vector<std::size_t> d(static_cast<std::size_t>(m), 0);
        while (true) {
          Mor f{a, {}, psi, std::vector<IMor>(static_cast<std::size_t>(n)), {}};
          for (int j = 0; j < m; ++j) {
            auto& c = per[j][d[j]];
            f.tgt.seq.push_back({c.y, g_.cod(c.rho)});
            f.rho.push_back(c.rho);
            auto I = psi.fiber(j);
            for (std::size_t t = 0; t < I.size(); ++t) f.l[I[t]] = c.l[t];
          }
          out.push_back(std::move(f));
          charge(out.size(), b, "hocolim hom enumeration");
          std::size_t t = 0;
          while (t < d.size() && ++d[t] == per[t].size()) d[t++] = 0;
          if (t == d.size()) break;
        }
      }
    return out;
  }

  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const {
    std::vector<Mor> out;
    for (auto& f : homs_from(a, b))
      if (f.tgt == c) out.push_back(f);
    return out;
  }

  // random generation for the sampled suites

  Obj random_object(std::mt19937_64& rng, const Bound& b, int max_len = 0) const {
    if (max_len <= 0) max_len = b.length_max;
    auto grades = index().objects(b);
    Obj a;
    int len = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(max_len)));
    for (int i = 0; i < len; ++i) {
      auto& x = grades[pick(rng, grades.size())];
      auto fo = g_.fiber_objects(x, b);
      a.seq.push_back({x, fo[pick(rng, fo.size())]});
    }
    return a;
  }

  /** @brief A random morphism out of a whose fiber parts are random automorphisms. */
  Mor random_mor_from(const Obj& a, std::mt19937_64& rng, const Bound& b) const {
    const auto& J = index();
    auto grades = J.objects(b);
    int n = a.size();
    for (int attempt = 0; attempt < 20; ++attempt) {
      int m = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(n)));
      FinMap psi{m, std::vector<int>(static_cast<std::size_t>(n))};
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < n; ++i) psi.img[perm[i]] = i < m ? i : static_cast<int>(pick(rng, static_cast<std::size_t>(m)));
      Mor f{a, {}, psi, std::vector<IMor>(static_cast<std::size_t>(n)), {}};
      bool ok = true;
      for (int j = 0; j < m && ok; ++j) {
        auto I = psi.fiber(j);
        std::vector<IObj> targets;
        for (auto& y : grades) {
          bool all = true;
          for (int i : I)
            if (J.homs(a.seq[i].first, y, b).empty()) all = false;
          if (all) targets.push_back(y);
        }
        if (targets.empty()) {
          ok = false;
          break;
        }
        auto y = targets[pick(rng, targets.size())];
        std::vector<CObj> parts;
        for (int i : I) {
          auto hs = J.homs(a.seq[i].first, y, b);
          f.l[i] = hs[pick(rng, hs.size())];
          parts.push_back(g_.transition(f.l[i], a.seq[i].second));
        }
        auto rho = g_.random_auto(oplus_all(g_, parts), rng);
        f.tgt.seq.push_back({y, g_.cod(rho)});
        f.rho.push_back(rho);
      }
      if (ok) return f;
    }
    return id(a);
  }

  Mor random_auto(const Obj& a, std::mt19937_64& rng) const {
    Mor f{a, a, FinMap::identity(a.size()), {}, {}};
    for (auto& [x, X] : a.seq) {
      f.l.push_back(index().id(x));
      f.rho.push_back(g_.random_auto(X, rng));
    }
    for (std::size_t j = 0; j < f.rho.size(); ++j) f.tgt.seq[j].second = g_.cod(f.rho[j]);
    return f;
  }

 private:
  GC g_;
};

template <class GC>
Hocolim<GC> hocolim(GC g) {
  return Hocolim<GC>(std::move(g));
}

/** @brief The canonical G: C(0) -> hocolim, X -> 1[(0,X)], strict for * and lax for +. */
template <class GC>
LaxRigMorphism<ZeroGraded<FiberView<GC>>, ZeroGraded<Hocolim<GC>>> unit_embed(
    const ZeroGraded<FiberView<GC>>& src, const ZeroGraded<Hocolim<GC>>& tgt) {
  using S = ZeroGraded<FiberView<GC>>;
  using T = ZeroGraded<Hocolim<GC>>;
  LaxRigMorphism<S, T> F;
  F.source = &src;
  F.target = &tgt;
  const Hocolim<GC>* H = &tgt.r;
  auto zero = src.r.x;
  F.on_obj = [H, zero](const typename S::Obj& X) { return H->single(zero, X); };
  F.on_mor = [H](const typename S::Mor& f) {
    auto a = H->single(H->index().zero(), H->diagram().dom(f));
    auto c = H->single(H->index().zero(), H->diagram().cod(f));
    return typename T::Mor{a, c, FinMap::identity(1), {H->index().id(H->index().zero())}, {f}};
  };
  F.on_grade = [](const TrivialIndex::Obj& x) { return x; };
  F.on_index_mor = [](const TrivialIndex::Mor& k) { return k; };
  F.eta_plus = [H](const typename S::Obj& X, const typename S::Obj& Y) {
    auto z = H->index().zero();
    auto a = H->oplus(H->single(z, X), H->single(z, Y));
    auto c = H->single(z, H->diagram().oplus(X, Y));
    auto iz = H->index().id(z);
    return typename T::Mor{a, c, FinMap{1, {0, 0}}, {iz, iz}, {H->diagram().id(H->diagram().oplus(X, Y))}};
  };
  F.eta_times = [H](const typename S::Obj& X, const typename S::Obj& Y) {
    return H->id(H->single(H->index().zero(), H->diagram().otimes(X, Y)));
  };
  F.unit_times = [H] { return H->id(H->one()); };
  return F;
}

/**
 * @brief Lax morphism of graded diagrams over a common index, with
 * components functorial in the grade (on_grade is the identity).
 */
template <class GS, class GT>
struct GradedLaxData {
  std::function<typename GT::Obj(const typename GS::Obj&)> on_obj;
  std::function<typename GT::Mor(const typename GS::Mor&)> on_mor;
  std::function<typename GT::Mor(const typename GS::Obj&, const typename GS::Obj&)> eta_plus;
  std::function<typename GT::Mor(const typename GS::Obj&, const typename GS::Obj&)> eta_times;
};

/** @brief F_*: entrywise on objects, rho_j -> F(rho_j) o eta+. */
template <class GS, class GT>
LaxRigMorphism<ZeroGraded<Hocolim<GS>>, ZeroGraded<Hocolim<GT>>> induced_morphism(
    const GradedLaxData<GS, GT>& F, const ZeroGraded<Hocolim<GS>>& src, const ZeroGraded<Hocolim<GT>>& tgt) {
  using S = ZeroGraded<Hocolim<GS>>;
  using T = ZeroGraded<Hocolim<GT>>;
  LaxRigMorphism<S, T> Fs;
  Fs.source = &src;
  Fs.target = &tgt;
  const Hocolim<GS>* HS = &src.r;
  const Hocolim<GT>* HT = &tgt.r;
  auto obj = [F](const typename S::Obj& a) {
    typename T::Obj b;
    for (auto& [x, X] : a.seq) b.seq.push_back({x, F.on_obj(X)});
    return b;
  };
  Fs.on_obj = obj;
  Fs.on_mor = [F, obj, HS, HT](const typename S::Mor& f) {
    typename T::Mor g{obj(f.src), obj(f.tgt), f.psi, f.l, {}};
    const auto& D = HT->diagram();
    for (int j = 0; j < f.tgt.size(); ++j) {
      auto I = f.psi.fiber(j);
      auto X = HS->diagram().transition(f.l[I[0]], f.src.seq[I[0]].second);
      auto eta = D.id(F.on_obj(X));
      for (std::size_t t = 1; t < I.size(); ++t) {
        auto X2 = HS->diagram().transition(f.l[I[t]], f.src.seq[I[t]].second);
        eta = D.compose(F.eta_plus(X, X2), D.oplus(eta, D.id(F.on_obj(X2))));
        X = HS->diagram().oplus(X, X2);
      }
      g.rho.push_back(D.compose(F.on_mor(f.rho[j]), eta));
    }
    return g;
  };
  Fs.on_grade = [](const TrivialIndex::Obj& x) { return x; };
  Fs.on_index_mor = [](const TrivialIndex::Mor& k) { return k; };
  Fs.eta_plus = [obj, HT](const typename S::Obj& a, const typename S::Obj& c) { return HT->id(obj(HT->oplus(a, c))); };
  Fs.eta_times = [F, obj, HS, HT](const typename S::Obj& a, const typename S::Obj& c) {
    typename T::Mor g{HT->otimes(obj(a), obj(c)), obj(HS->otimes(a, c)), FinMap::identity(a.size() * c.size()), {}, {}};
    for (auto& [x, X] : a.seq)
      for (auto& [y, Y] : c.seq) {
        g.l.push_back(HS->index().id(HS->index().oplus(x, y)));
        g.rho.push_back(F.eta_times(X, Y));
      }
    return g;
  };
  Fs.unit_times = nullptr;
  return Fs;
}

/**
 * @brief Randomized diagram chases for the multiplicative structure of the
 * homotopy colimit: each condition runs b.samples random instances.
 */
template <class GC>
Report check_hocolim_suite(const Hocolim<GC>& H, const Bound& b) {
  Report r;
  std::mt19937_64 rng(b.seed);
  auto eq = [&](const auto& f, const auto& g) { return H.mor_eq(f, g); };
  auto sh = [&](const auto& x) { return H.show(x); };
  auto obj = [&] { return H.random_object(rng, b); };
  auto mor = [&](const auto& a) { return H.random_mor_from(a, rng, b); };
  auto well = [&](const auto& f, const char* what) {
    r.expect(H.valid(f), "well-formed", [&] { return std::string(what) + " " + sh(f); });
  };
  bool tw = H.has_twist_times();
  auto guarded = [&](const std::string& cond, auto&& body) {
    try {
      body();
    } catch (const CompositionError& e) {
      r.fail(cond, std::string("ill-typed composite: ") + e.what());
    } catch (const StructureError& e) {
      r.fail(cond, std::string("structure error: ") + e.what());
    }
  };
  for (std::size_t t = 0; t < b.samples; ++t) {
    auto A = obj(), B = obj(), B2 = obj(), A2 = obj();
    auto f = mor(A), g = mor(B);
    auto f2 = mor(H.cod(f)), g2 = mor(H.cod(g));
    auto f3 = mor(H.cod(f2));
    guarded("composition associativity", [&] {
      auto gf = H.compose(f2, f);
      well(f, "sample");
      well(gf, "composite");
      r.expect(eq(H.compose(f3, gf), H.compose(H.compose(f3, f2), f)), "composition associativity",
               [&] { return sh(f) + ", " + sh(f2) + ", " + sh(f3); });
      r.expect(eq(H.compose(f, H.id(A)), f) && eq(H.compose(H.id(H.cod(f)), f), f), "composition identity",
               [&] { return sh(f); });
    });
    guarded("oplus twist", [&] {
      auto ab = H.twist(A, B);
      r.expect(eq(H.compose(H.twist(B, A), ab), H.id(H.oplus(A, B))), "oplus twist", [&] { return "involution " + sh(A); });
      auto lhs = H.compose(H.twist(H.cod(f), H.cod(g)), H.oplus(f, g));
      auto rhs = H.compose(H.oplus(g, f), H.twist(A, B));
      r.expect(eq(lhs, rhs), "oplus twist", [&] { return "naturality " + sh(f) + ", " + sh(g); });
    });
    guarded("tensor bifunctoriality", [&] {
      auto fg = H.otimes(f, g);
      well(fg, "tensor");
      r.expect(eq(H.otimes(H.id(A), H.id(B)), H.id(H.otimes(A, B))), "tensor bifunctoriality",
               [&] { return "id * id at " + sh(A) + ", " + sh(B); });
      r.expect(eq(H.otimes(H.compose(f2, f), H.compose(g2, g)), H.compose(H.otimes(f2, g2), fg)),
               "tensor bifunctoriality", [&] { return sh(f) + ", " + sh(g); });
      auto lhs = H.compose(H.otimes(f, H.id(H.cod(g))), H.otimes(H.id(A), g));
      auto rhs = H.compose(H.otimes(H.id(H.cod(f)), g), H.otimes(f, H.id(B)));
      r.expect(eq(lhs, rhs), "tensor interchange", [&] { return sh(f) + ", " + sh(g); });
      r.expect(eq(H.otimes(f, H.id(H.one())), f) && eq(H.otimes(H.id(H.one()), f), f), "tensor unit",
               [&] { return sh(f); });
    });
    if (tw)
      guarded("tau naturality", [&] {
        auto tau = H.twist_times(A, B);
        well(tau, "tau");
        auto lhs = H.compose(H.twist_times(H.cod(f), H.cod(g)), H.otimes(f, g));
        auto rhs = H.compose(H.otimes(g, f), tau);
        r.expect(eq(lhs, rhs), "tau naturality", [&] { return sh(f) + ", " + sh(g); });
        r.expect(eq(H.compose(H.twist_times(B, A), tau), H.id(H.otimes(A, B))), "tau involution",
                 [&] { return sh(A) + ", " + sh(B); });
        r.expect(eq(H.twist_times(H.one(), A), H.id(A)) && eq(H.twist_times(A, H.one()), H.id(A)), "tau unit",
                 [&] { return sh(A); });
      });
    guarded("d_r identity", [&] {
      auto fa = mor(A2);
      auto lhs = H.otimes(H.oplus(f, fa), g);
      auto rhs = H.oplus(H.otimes(f, g), H.otimes(fa, g));
      r.expect(H.otimes(H.oplus(A, A2), B) == H.oplus(H.otimes(A, B), H.otimes(A2, B)) && eq(lhs, rhs), "d_r identity",
               [&] { return sh(f) + ", " + sh(fa) + ", " + sh(g); });
    });
    guarded("d_l", [&] {
      auto d = H.dl(A, B, B2);
      well(d, "d_l");
      if (tw) {
        auto derived = H.compose(H.twist_times(H.oplus(B, B2), A), H.oplus(H.twist_times(A, B), H.twist_times(A, B2)));
        r.expect(eq(d, derived), "d_l from twists", [&] { return sh(A) + ", " + sh(B) + ", " + sh(B2); });
      }
      auto gb = mor(B2);
      auto lhs = H.compose(H.otimes(f, H.oplus(g, gb)), d);
      auto rhs = H.compose(H.dl(H.cod(f), H.cod(g), H.cod(gb)), H.oplus(H.otimes(f, g), H.otimes(f, gb)));
      r.expect(eq(lhs, rhs), "d_l naturality", [&] { return sh(f) + ", " + sh(g) + ", " + sh(gb); });
    });
    guarded("pentagon", [&] {
      auto lhs = H.oplus(H.dl(A, B, B2), H.dl(A2, B, B2));
      auto mid = H.oplus(H.oplus(H.id(H.otimes(A, B)), H.twist(H.otimes(A, B2), H.otimes(A2, B))), H.id(H.otimes(A2, B2)));
      r.expect(eq(lhs, H.compose(H.dl(H.oplus(A, A2), B, B2), mid)), "pentagon",
               [&] { return sh(A) + ", " + sh(A2) + ", " + sh(B) + ", " + sh(B2); });
    });
    guarded("twist interchange", [&] {
      auto ab = H.otimes(A, B), ab2 = H.otimes(A, B2);
      auto lhs = H.compose(H.dl(A, B2, B), H.twist(ab, ab2));
      auto rhs = H.compose(H.otimes(H.id(A), H.twist(B, B2)), H.dl(A, B, B2));
      r.expect(eq(lhs, rhs), "twist interchange", [&] { return "d_l square " + sh(A) + ", " + sh(B) + ", " + sh(B2); });
      r.expect(eq(H.otimes(H.twist(A, A2), H.id(B)), H.twist(H.otimes(A, B), H.otimes(A2, B))), "twist interchange",
               [&] { return "d_r square " + sh(A) + ", " + sh(A2) + ", " + sh(B); });
    });
    guarded("distributivity associative", [&] {
      auto C = obj();
      auto lhs = H.dl(H.otimes(A, C), B, B2);
      auto rhs = H.compose(H.otimes(H.id(A), H.dl(C, B, B2)), H.dl(A, H.otimes(C, B), H.otimes(C, B2)));
      r.expect(eq(lhs, rhs), "distributivity associative", [&] { return sh(A) + ", " + sh(C) + ", " + sh(B); });
    });
  }
  return r;
}

/** @brief Random objects and morphism chains for the generic checkers. */
template <class GC>
Samples<Hocolim<GC>> hocolim_samples(const Hocolim<GC>& H, const Bound& b, std::size_t chains) {
  Samples<Hocolim<GC>> s;
  std::mt19937_64 rng(b.seed ^ 0x7f4a7c15ULL);
  for (std::size_t t = 0; t < chains; ++t) {
    auto a = H.random_object(rng, b);
    auto f = H.random_mor_from(a, rng, b);
    auto g = H.random_mor_from(H.cod(f), rng, b);
    auto h = H.random_mor_from(H.cod(g), rng, b);
    s.objs.push_back(a);
    s.mors.push_back(f);
    s.pairs.push_back({f, g});
    s.triples.push_back({f, g, h});
  }
  return s;
}

}  // namespace rigcomp
