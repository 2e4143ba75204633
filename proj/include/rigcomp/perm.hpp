#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigcomp {

/** @brief Permutation of {0..n-1}; img[i] is the image of i. */
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}

  static Perm identity(int n) {
    Perm p;
    p.img.resize(static_cast<std::size_t>(n));
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  bool valid() const {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
      if (v < 0 || v >= size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  Perm inverse() const {
    Perm q;
    q.img.resize(img.size());
    for (int i = 0; i < size(); ++i) q.img[img[i]] = i;
    return q;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

// g after f
inline Perm compose(const Perm& g, const Perm& f) {
  if (g.size() != f.size()) throw std::invalid_argument("compose: size mismatch");
  Perm h;
  h.img.resize(f.img.size());
  for (int i = 0; i < f.size(); ++i) h.img[i] = g(f(i));
  return h;
}

inline Perm perm_sum(const Perm& a, const Perm& b) {
  Perm p = a;
  for (int v : b.img) p.img.push_back(v + a.size());
  return p;
}

// (i,j) is encoded as i*m+j
inline Perm perm_tensor(const Perm& a, const Perm& b) {
  int n = a.size(), m = b.size();
  Perm p;
  p.img.resize(static_cast<std::size_t>(n * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) p.img[i * m + j] = a(i) * m + b(j);
  return p;
}

/** @brief Shuffle n+m -> m+n moving the first block behind the second. */
inline Perm shuffle_chi(int n, int m) {
  Perm p;
  p.img.resize(static_cast<std::size_t>(n + m));
  for (int i = 0; i < n + m; ++i) p.img[i] = i < n ? m + i : i - n;
  return p;
}

/** @brief Matrix transposition i*m+j -> j*n+i. */
inline Perm transpose_sigma(int n, int m) {
  Perm p;
  p.img.resize(static_cast<std::size_t>(n * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) p.img[i * m + j] = j * n + i;
  return p;
}

/** @brief Left distributivity of finite sets, (n x m) + (n x m') -> n x (m+m'). */
inline Perm xi_perm(int n, int m, int m2) {
  return compose(transpose_sigma(m + m2, n), perm_sum(transpose_sigma(n, m), transpose_sigma(n, m2)));
}

/**
 * @brief Block permutation: source blocks 0..k-1 of the given sizes, target
 * is the concatenation of blocks order[0], order[1], ...
 */
inline Perm block_perm(const std::vector<int>& sizes, const std::vector<int>& order) {
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  Perm p;
  p.img.resize(static_cast<std::size_t>(start.back()));
  int pos = 0;
  for (int b : order) {
    for (int o = 0; o < sizes[b]; ++o) p.img[start[b] + o] = pos++;
  }
  return p;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = Perm::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

/** @brief Map {0..m-1} -> {0..n-1}; used for injections and surjections. */
struct FinMap {
  int n = 0;
  std::vector<int> img;

  int m() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }

  static FinMap identity(int k) {
    FinMap f;
    f.n = k;
    f.img.resize(static_cast<std::size_t>(k));
    std::iota(f.img.begin(), f.img.end(), 0);
    return f;
  }
  static FinMap from_perm(const Perm& p) { return FinMap{p.size(), p.img}; }

  bool injective() const {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
  bool surjective() const {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img) {
      if (v < 0 || v >= n) return false;
      seen[v] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  // preimage of j in increasing order
  std::vector<int> fiber(int j) const {
    std::vector<int> out;
    for (int i = 0; i < m(); ++i)
      if (img[i] == j) out.push_back(i);
    return out;
  }

  friend bool operator==(const FinMap&, const FinMap&) = default;
  friend auto operator<=>(const FinMap&, const FinMap&) = default;
};

inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.n != g.m()) throw std::invalid_argument("compose: map size mismatch");
  FinMap h;
  h.n = g.n;
  h.img.resize(f.img.size());
  for (int i = 0; i < f.m(); ++i) h.img[i] = g(f(i));
  return h;
}

inline FinMap map_sum(const FinMap& a, const FinMap& b) {
  FinMap h{a.n + b.n, a.img};
  for (int v : b.img) h.img.push_back(v + a.n);
  return h;
}

inline std::vector<FinMap> all_injections(int m, int n) {
  std::vector<FinMap> out;
  if (m > n) return out;
  FinMap f{n, std::vector<int>(static_cast<std::size_t>(m), 0)};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      f.img[i] = v;
      self(self, i + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<FinMap> all_surjections(int m, int n) {
  std::vector<FinMap> out;
  if (n > m || (n == 0 && m > 0)) return out;
  FinMap f{n, std::vector<int>(static_cast<std::size_t>(m), 0)};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (f.surjective()) out.push_back(f);
      return;
    }
    for (int v = 0; v < n; ++v) {
      f.img[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::string to_string(const std::vector<int>& v, int offset = 0) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i] + offset);
  }
  return s + "]";
}

inline std::string to_string(const Perm& p) { return to_string(p.img, 1); }

}  // namespace rigcomp
