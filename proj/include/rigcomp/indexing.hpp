#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "effcat.hpp"
#include "perm.hpp"

namespace rigcomp {

/** @brief Signed subset of {1..n}, sorted by absolute value. */
inline void normalize_signed(std::vector<int>& T) {
  std::sort(T.begin(), T.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
}

inline bool valid_signed(int n, const std::vector<int>& T) {
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i] == 0 || std::abs(T[i]) > n) return false;
    if (i && std::abs(T[i - 1]) >= std::abs(T[i])) return false;
  }
  return true;
}

inline bool subset_of(const std::vector<int>& S, const std::vector<int>& T) {
  for (int s : S)
    if (std::find(T.begin(), T.end(), s) == T.end()) return false;
  return true;
}

/** @brief Object (n,T) of I∫Q. */
struct JObj {
  int n = 0;
  std::vector<int> T;

  bool all_positive() const {
    return std::all_of(T.begin(), T.end(), [](int t) { return t > 0; });
  }
  bool full() const { return all_positive() && static_cast<int>(T.size()) == n; }
  std::vector<int> positive() const {
    std::vector<int> P;
    for (int t : T)
      if (t > 0) P.push_back(t);
    return P;
  }

  friend bool operator==(const JObj&, const JObj&) = default;
  friend auto operator<=>(const JObj&, const JObj&) = default;
};

inline std::string to_string(const JObj& x) {
  std::string s = "(" + std::to_string(x.n) + ",{";
  for (std::size_t i = 0; i < x.T.size(); ++i) s += (i ? "," : "") + std::to_string(x.T[i]);
  return s + "})";
}

/** @brief (Q phi)(S): phi extended oddly on S, plus the complement of the image. */
inline std::vector<int> q_apply(const FinMap& phi, const std::vector<int>& S) {
  std::vector<int> out;
  std::vector<char> hit(static_cast<std::size_t>(phi.n), 0);
  for (int v : phi.img) hit[v] = 1;
  for (int s : S) out.push_back(s > 0 ? phi(s - 1) + 1 : -(phi(-s - 1) + 1));
  for (int j = 0; j < phi.n; ++j)
    if (!hit[j]) out.push_back(j + 1);
  normalize_signed(out);
  return out;
}

/** @brief Morphism (phi, iota) of I∫Q; iota is implied by the endpoints. */
struct JMor {
  FinMap phi;
  JObj src, tgt;

  bool valid() const {
    return phi.m() == src.n && phi.n == tgt.n && phi.injective() && subset_of(q_apply(phi, src.T), tgt.T);
  }

  friend bool operator==(const JMor&, const JMor&) = default;
  friend auto operator<=>(const JMor&, const JMor&) = default;
};

inline std::string to_string(const JMor& k) {
  return to_string(k.src) + "-" + to_string(k.phi.img, 1) + "->" + to_string(k.tgt);
}

inline JObj j_add(const JObj& x, const JObj& y) {
  JObj z{x.n + y.n, x.T};
  for (int s : y.T) z.T.push_back(s > 0 ? s + x.n : s - x.n);
  return z;
}

inline JMor j_add_mor(const JMor& f, const JMor& g) {
  return JMor{map_sum(f.phi, g.phi), j_add(f.src, g.src), j_add(f.tgt, g.tgt)};
}

inline JMor j_id(const JObj& x) { return JMor{FinMap::identity(x.n), x, x}; }

inline JMor j_compose(const JMor& g, const JMor& f) {
  if (!(f.tgt == g.src)) throw CompositionError(to_string(g), to_string(f));
  JMor h{compose(g.phi, f.phi), f.src, g.tgt};
  if (!h.valid()) throw StructureError("inclusion violated in composite " + to_string(h));
  return h;
}

// chi^{x,y}: x+y -> y+x
inline JMor j_twist(const JObj& x, const JObj& y) {
  return JMor{FinMap::from_perm(shuffle_chi(x.n, y.n)), j_add(x, y), j_add(y, x)};
}

inline std::vector<std::vector<int>> signed_subsets(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> T;
    for (int i = 0; i < n; ++i)
      if (code[i]) T.push_back(code[i] == 1 ? i + 1 : -(i + 1));
    out.push_back(T);
    int i = 0;
    while (i < n && ++code[i] == 3) code[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/** @brief The permutative category I∫Q truncated at n <= index_max for enumeration. */
struct IQIndex {
  using Obj = JObj;
  using Mor = JMor;

  Obj dom(const Mor& f) const { return f.src; }
  Obj cod(const Mor& f) const { return f.tgt; }
  Mor id(const Obj& x) const { return j_id(x); }
  Mor compose(const Mor& g, const Mor& f) const { return j_compose(g, f); }

  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (int n = 0; n <= b.index_max; ++n)
      for (auto& T : signed_subsets(n)) out.push_back(JObj{n, T});
    return out;
  }
  std::vector<Mor> homs(const Obj& x, const Obj& y, const Bound&) const {
    std::vector<Mor> out;
    for (auto& phi : all_injections(x.n, y.n)) {
      JMor k{phi, x, y};
      if (subset_of(q_apply(phi, x.T), y.T)) out.push_back(k);
    }
    return out;
  }

  Obj oplus(const Obj& x, const Obj& y) const { return j_add(x, y); }
  Mor oplus(const Mor& f, const Mor& g) const { return j_add_mor(f, g); }
  Obj zero() const { return JObj{}; }
  Mor twist(const Obj& x, const Obj& y) const { return j_twist(x, y); }
  bool zeroless() const { return false; }

  std::string show(const Obj& x) const { return to_string(x); }
  std::string show(const Mor& k) const { return to_string(k); }
};

/** @brief Q(n) as a category: objects signed subsets, morphisms inclusions. */
struct QnIndex {
  using Obj = JObj;
  using Mor = JMor;
  int n = 1;

  Obj dom(const Mor& f) const { return f.src; }
  Obj cod(const Mor& f) const { return f.tgt; }
  Mor id(const Obj& x) const { return j_id(x); }
  Mor compose(const Mor& g, const Mor& f) const { return j_compose(g, f); }

  std::vector<Obj> objects(const Bound&) const {
    std::vector<Obj> out;
    for (auto& T : signed_subsets(n)) out.push_back(JObj{n, T});
    return out;
  }
  std::vector<Mor> homs(const Obj& x, const Obj& y, const Bound&) const {
    if (x.n != n || y.n != n || !subset_of(x.T, y.T)) return {};
    return {JMor{FinMap::identity(n), x, y}};
  }

  std::string show(const Obj& x) const { return to_string(x); }
  std::string show(const Mor& k) const { return to_string(k); }
};

}  // namespace rigcomp
