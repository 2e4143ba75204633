#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "effcat.hpp"

namespace rigcomp {

using Degree = std::vector<int>;

/** @brief Commutative monoid presentation with optional multiplication on generators. */
struct MonoidPresentation {
  int gens = 1;
  std::vector<std::pair<Degree, Degree>> relations;
  std::optional<std::vector<std::vector<Degree>>> mul;  // gens x gens -> degree
  Degree one;
  std::vector<std::string> names;
};

inline Degree deg_add(const Degree& a, const Degree& b) {
  Degree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline int deg_total(const Degree& a) { return std::accumulate(a.begin(), a.end(), 0); }

/**
 * @brief Grothendieck group (and ring) of a presented commutative monoid,
 * computed by congruence closure on a bounded window of formal differences.
 */
class GrothendieckOracle {
 public:
  GrothendieckOracle(MonoidPresentation p, int window) : p_(std::move(p)), w_(window) { build(); }

  int window() const { return w_; }
  int classes() const { return static_cast<int>(reps_.size()); }
  const MonoidPresentation& presentation() const { return p_; }

  // class of the formal difference p - n
  int cls(const Degree& pos, const Degree& neg) const {
    auto it = pair_index_.find({pos, neg});
    if (it == pair_index_.end())
      throw IncompleteError("formal difference outside oracle window " + std::to_string(w_));
    return cls_of_[find(it->second)];
  }
  int cls(const Degree& pos) const { return cls(pos, Degree(p_.gens, 0)); }

  int zero() const { return cls(Degree(p_.gens, 0)); }
  int one() const { return cls(p_.one); }
  int add(int a, int b) const {
    auto& [p1, n1] = reps_[a];
    auto& [p2, n2] = reps_[b];
    return cls(deg_add(p1, p2), deg_add(n1, n2));
  }
  int neg(int a) const { return cls(reps_[a].second, reps_[a].first); }
  bool has_mul() const { return p_.mul.has_value(); }
  int mul(int a, int b) const {
    if (!p_.mul) throw UnsupportedError("presentation has no multiplication");
    auto& [p1, n1] = reps_[a];
    auto& [p2, n2] = reps_[b];
    return cls(deg_add(dmul(p1, p2), dmul(n1, n2)), deg_add(dmul(p1, n2), dmul(n1, p2)));
  }

  std::pair<Degree, Degree> rep(int c) const { return reps_[c]; }

  std::string label(int c) const {
    auto& [pos, neg] = reps_[c];
    if (p_.gens == 1) return std::to_string(pos[0] - neg[0]);
    return "[" + fmt(pos) + "]-[" + fmt(neg) + "]";
  }

  // partition of the core pairs (total <= window/2) agrees with a wider window
  bool confluent() const {
    GrothendieckOracle wider(p_, w_ + 2);
    int core = w_ / 2;
    std::map<int, int> fwd, back;
    for (auto& [pr, idx] : pair_index_) {
      if (deg_total(pr.first) > core || deg_total(pr.second) > core) continue;
      int a = cls_of_[find(idx)];
      int b = wider.cls(pr.first, pr.second);
      if (fwd.count(a) && fwd[a] != b) return false;
      if (back.count(b) && back[b] != a) return false;
      fwd[a] = b;
      back[b] = a;
    }
    return true;
  }

 private:
  MonoidPresentation p_;
  int w_;
  std::vector<Degree> elems_;
  std::map<Degree, int> elem_index_;
  std::map<std::pair<Degree, Degree>, int> pair_index_;
  std::vector<std::pair<Degree, Degree>> pairs_;
  mutable std::vector<int> parent_;
  std::vector<int> cls_of_;
  std::vector<std::pair<Degree, Degree>> reps_;

  std::string fmt(const Degree& d) const {
    std::string s;
    for (int i = 0; i < p_.gens; ++i) {
      if (!d[i]) continue;
      if (!s.empty()) s += "+";
      std::string nm = i < static_cast<int>(p_.names.size()) ? p_.names[i] : "g" + std::to_string(i);
      s += (d[i] == 1 ? "" : std::to_string(d[i])) + nm;
    }
    return s.empty() ? "0" : s;
  }

  Degree dmul(const Degree& a, const Degree& b) const {
    Degree c(p_.gens, 0);
    for (int i = 0; i < p_.gens; ++i)
      for (int j = 0; j < p_.gens; ++j)
        if (a[i] && b[j]) {
          auto& g = (*p_.mul)[i][j];
          for (int k = 0; k < p_.gens; ++k) c[k] += a[i] * b[j] * g[k];
        }
    return c;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  void build() {
    Degree d(p_.gens, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == p_.gens) {
        elem_index_[d] = static_cast<int>(elems_.size());
        elems_.push_back(d);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        d[i] = v;
        self(self, i + 1, left - v);
      }
      d[i] = 0;
    };
    rec(rec, 0, w_);
    std::sort(elems_.begin(), elems_.end(), [](const Degree& a, const Degree& b) {
      return std::make_pair(deg_total(a), a) < std::make_pair(deg_total(b), b);
    });
    for (std::size_t i = 0; i < elems_.size(); ++i) elem_index_[elems_[i]] = static_cast<int>(i);

    // monoid congruence inside the window
    std::vector<int> mparent(elems_.size());
    std::iota(mparent.begin(), mparent.end(), 0);
    auto mfind = [&](int x) {
      while (mparent[x] != x) x = mparent[x] = mparent[mparent[x]];
      return x;
    };
    for (auto& [u, v] : p_.relations)
      for (auto& w : elems_) {
        auto a = elem_index_.find(deg_add(u, w));
        auto b = elem_index_.find(deg_add(v, w));
        if (a == elem_index_.end() || b == elem_index_.end()) continue;
        int x = mfind(a->second), y = mfind(b->second);
        if (x != y) mparent[std::max(x, y)] = std::min(x, y);
      }

    for (auto& pe : elems_)
      for (auto& ne : elems_) {
        pair_index_[{pe, ne}] = static_cast<int>(pairs_.size());
        pairs_.push_back({pe, ne});
      }
    parent_.resize(pairs_.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto& [pe, ne] = pairs_[i];
      int pc = elem_index_[elems_[mfind(elem_index_[pe])]];
      int nc = elem_index_[elems_[mfind(elem_index_[ne])]];
      unite(static_cast<int>(i), pair_index_[{elems_[pc], elems_[nc]}]);
      for (int g = 0; g < p_.gens; ++g) {
        Degree e(p_.gens, 0);
        e[g] = 1;
        auto it = pair_index_.find({deg_add(pe, e), deg_add(ne, e)});
        if (it != pair_index_.end()) unite(static_cast<int>(i), it->second);
      }
    }
    // classes numbered by their minimal member
    std::vector<int> order(pairs_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      auto key = [&](int i) {
        auto& [pe, ne] = pairs_[i];
        return std::make_tuple(deg_total(pe) + deg_total(ne), deg_total(ne), pe, ne);
      };
      return key(a) < key(b);
    });
    cls_of_.assign(pairs_.size(), -1);
    for (int i : order) {
      int root = find(i);
      if (cls_of_[root] < 0) {
        cls_of_[root] = static_cast<int>(reps_.size());
        reps_.push_back(pairs_[i]);
      }
    }
  }
};

}  // namespace rigcomp
