#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "effcat.hpp"
#include "oracle.hpp"
#include "perm.hpp"

namespace rigcomp {

/** @brief Carrier {0..n-1} with addition and multiplication tables. */
struct FiniteRigTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> add, mul;
  int zero = 0, one = 1;

  int size() const { return static_cast<int>(names.size()); }
};

/** @brief Discrete rig category: elements as objects, identities only. */
class DiscreteRig {
 public:
  using Obj = int;
  struct Mor {
    int o = 0;
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  explicit DiscreteRig(FiniteRigTable t, std::string name = "rig") : t_(std::move(t)), name_(std::move(name)) {
    validate();
  }

  const FiniteRigTable& table() const { return t_; }
  const std::string& name() const { return name_; }

  Obj dom(const Mor& f) const { return f.o; }
  Obj cod(const Mor& f) const { return f.o; }
  Mor id(const Obj& a) const { return Mor{a}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (g.o != f.o) throw CompositionError(show(g), show(f));
    return f;
  }
  std::vector<Obj> objects(const Bound&) const {
    std::vector<Obj> out(static_cast<std::size_t>(t_.size()));
    for (int i = 0; i < t_.size(); ++i) out[i] = i;
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& b, const Bound&) const {
    if (a != b) return {};
    return {Mor{a}};
  }

  Obj oplus(const Obj& a, const Obj& b) const { return t_.add[a][b]; }
  Mor oplus(const Mor& f, const Mor& g) const { return Mor{oplus(f.o, g.o)}; }
  Obj zero() const { return t_.zero; }
  Mor twist(const Obj& a, const Obj& b) const { return Mor{oplus(a, b)}; }
  bool zeroless() const { return false; }

  Obj otimes(const Obj& a, const Obj& b) const { return t_.mul[a][b]; }
  Mor otimes(const Mor& f, const Mor& g) const { return Mor{otimes(f.o, g.o)}; }
  Obj one() const { return t_.one; }
  bool has_twist_times() const { return true; }
  Mor twist_times(const Obj& a, const Obj& b) const { return Mor{otimes(a, b)}; }
  Mor dl(const Obj& a, const Obj& b, const Obj& b2) const { return Mor{oplus(otimes(a, b), otimes(a, b2))}; }

  std::vector<Mor> successors(const Obj& a, const Bound&) const { return {Mor{a}}; }
  Mor random_auto(const Obj& a, std::mt19937_64&) const { return Mor{a}; }
  Mor inverse(const Mor& f) const { return f; }

  std::string show(const Obj& a) const { return t_.names[a]; }
  std::string show(const Mor& f) const { return "id_" + t_.names[f.o]; }

  // generators are the nonzero elements
  MonoidPresentation presentation() const {
    MonoidPresentation p;
    int n = t_.size();
    std::vector<int> gen_of(n, -1);
    for (int x = 0; x < n; ++x)
      if (x != t_.zero) {
        gen_of[x] = static_cast<int>(p.names.size());
        p.names.push_back(t_.names[x]);
      }
    p.gens = static_cast<int>(p.names.size());
    auto deg = [&](int x) {
      Degree d(p.gens, 0);
      if (gen_of[x] >= 0) d[gen_of[x]] = 1;
      return d;
    };
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (a != t_.zero && b != t_.zero) p.relations.push_back({deg_add(deg(a), deg(b)), deg(t_.add[a][b])});
    std::vector<std::vector<Degree>> m(p.gens, std::vector<Degree>(p.gens));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (gen_of[a] >= 0 && gen_of[b] >= 0) m[gen_of[a]][gen_of[b]] = deg(t_.mul[a][b]);
    p.mul = m;
    p.one = deg(t_.one);
    return p;
  }
  Degree pi0_class(const Obj& a) const {
    auto p = presentation();
    Degree d(p.gens, 0);
    int g = 0;
    for (int x = 0; x < t_.size(); ++x) {
      if (x == t_.zero) continue;
      if (x == a) d[g] = 1;
      ++g;
    }
    return d;
  }

 private:
  FiniteRigTable t_;
  std::string name_;

  void validate() const {
    int n = t_.size();
    auto fail = [](const std::string& what) { throw ConstructionError("rig table: " + what); };
    if (static_cast<int>(t_.add.size()) != n || static_cast<int>(t_.mul.size()) != n) fail("table shape");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(t_.add[a].size()) != n || static_cast<int>(t_.mul[a].size()) != n) fail("table shape");
      for (int b = 0; b < n; ++b)
        if (t_.add[a][b] < 0 || t_.add[a][b] >= n || t_.mul[a][b] < 0 || t_.mul[a][b] >= n) fail("value out of range");
    }
    for (int a = 0; a < n; ++a) {
      if (t_.add[t_.zero][a] != a) fail("zero is not an additive unit");
      if (t_.mul[t_.one][a] != a || t_.mul[a][t_.one] != a) fail("one is not a multiplicative unit");
      if (t_.mul[t_.zero][a] != t_.zero || t_.mul[a][t_.zero] != t_.zero) fail("zero does not annihilate");
      for (int b = 0; b < n; ++b) {
        if (t_.add[a][b] != t_.add[b][a]) fail("addition not commutative");
        if (t_.mul[a][b] != t_.mul[b][a]) fail("multiplication not commutative");
        for (int c = 0; c < n; ++c) {
          if (t_.add[t_.add[a][b]][c] != t_.add[a][t_.add[b][c]]) fail("addition not associative");
          if (t_.mul[t_.mul[a][b]][c] != t_.mul[a][t_.mul[b][c]]) fail("multiplication not associative");
          if (t_.mul[a][t_.add[b][c]] != t_.add[t_.mul[a][b]][t_.mul[a][c]]) fail("not left distributive");
          if (t_.mul[t_.add[a][b]][c] != t_.add[t_.mul[a][c]][t_.mul[b][c]]) fail("not right distributive");
        }
      }
    }
  }
};

inline DiscreteRig boolean_rig() {
  return DiscreteRig(FiniteRigTable{{"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1}, "bool-rig");
}

inline DiscreteRig z2_ring() {
  return DiscreteRig(FiniteRigTable{{"0", "1"}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 1}, "z2");
}

inline Perm random_perm(int n, std::mt19937_64& rng) {
  Perm p = Perm::identity(n);
  for (int i = n - 1; i > 0; --i) std::swap(p.img[i], p.img[pick(rng, static_cast<std::size_t>(i + 1))]);
  return p;
}

inline MonoidPresentation naturals_presentation(const std::string& gen = "1") {
  MonoidPresentation p;
  p.gens = 1;
  p.mul = std::vector<std::vector<Degree>>{{Degree{1}}};
  p.one = Degree{1};
  p.names = {gen};
  return p;
}

/** @brief Finite sets n = {1..n} and bijections; optional corruptions for negative controls. */
class FinSets {
 public:
  enum class Corruption { none, twist_identity, twist_times_identity, dl_wrong };
  using Obj = int;
  struct Mor {
    Perm p;
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  explicit FinSets(Corruption c = Corruption::none) : c_(c) {}

  Obj dom(const Mor& f) const { return f.p.size(); }
  Obj cod(const Mor& f) const { return f.p.size(); }
  Mor id(const Obj& a) const { return Mor{Perm::identity(a)}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (g.p.size() != f.p.size()) throw CompositionError(show(g), show(f));
    return Mor{rigcomp::compose(g.p, f.p)};
  }
  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (int n = 0; n <= b.entry_max; ++n) out.push_back(n);
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const {
    if (a != c) return {};
    std::size_t fact = 1;
    for (int i = 2; i <= a; ++i) fact *= static_cast<std::size_t>(i);
    if (fact > b.hom_max) throw ResourceError("hom_max=" + std::to_string(b.hom_max), "symmetric group too large");
    std::vector<Mor> out;
    for (auto& p : all_perms(a)) out.push_back(Mor{p});
    return out;
  }

  Obj oplus(const Obj& a, const Obj& c) const { return a + c; }
  Mor oplus(const Mor& f, const Mor& g) const { return Mor{perm_sum(f.p, g.p)}; }
  Obj zero() const { return 0; }
  Mor twist(const Obj& a, const Obj& c) const {
    if (c_ == Corruption::twist_identity) return id(a + c);
    return Mor{shuffle_chi(a, c)};
  }
  bool zeroless() const { return false; }

  Obj otimes(const Obj& a, const Obj& c) const { return a * c; }
  Mor otimes(const Mor& f, const Mor& g) const { return Mor{perm_tensor(f.p, g.p)}; }
  Obj one() const { return 1; }
  bool has_twist_times() const { return true; }
  Mor twist_times(const Obj& a, const Obj& c) const {
    if (c_ == Corruption::twist_times_identity) return id(a * c);
    return Mor{transpose_sigma(a, c)};
  }
  Mor dl(const Obj& a, const Obj& b, const Obj& b2) const {
    if (c_ == Corruption::dl_wrong && a > 1 && b > 0 && b2 > 0) return id(a * (b + b2));
    return Mor{xi_perm(a, b, b2)};
  }

  Mor block_permute(const std::vector<Obj>& objs, const std::vector<int>& order) const {
    return Mor{block_perm(objs, order)};
  }
  std::vector<Mor> successors(const Obj& a, const Bound&) const { return {id(a)}; }
  Mor random_auto(const Obj& a, std::mt19937_64& rng) const { return Mor{random_perm(a, rng)}; }
  Mor inverse(const Mor& f) const { return Mor{f.p.inverse()}; }
  /** @brief alpha with h = alpha + id_a, if any. */
  std::optional<Mor> split_sum(const Mor& h, const Obj& x, const Obj& a) const {
    if (h.p.size() != x + a) return std::nullopt;
    Perm al = Perm::identity(x);
    for (int i = 0; i < x + a; ++i) {
      if (i < x) {
        if (h.p(i) >= x) return std::nullopt;
        al.img[i] = h.p(i);
      } else if (h.p(i) != i) {
        return std::nullopt;
      }
    }
    return Mor{al};
  }

  std::string show(const Obj& a) const { return std::to_string(a); }
  std::string show(const Mor& f) const { return to_string(f.p); }

  MonoidPresentation presentation() const { return naturals_presentation("1"); }
  Degree pi0_class(const Obj& a) const { return Degree{a}; }

 private:
  Corruption c_;
};

/** @brief Square matrix over F2, rows as bitsets (row r, column c is bit c of rows[r]). */
struct Mat2 {
  int n = 0;
  std::vector<std::uint64_t> rows;

  static Mat2 identity(int n) {
    Mat2 m{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i) m.rows[i] = std::uint64_t{1} << i;
    return m;
  }
  static Mat2 of_perm(const Perm& p) {
    Mat2 m{p.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(p.size()), 0)};
    for (int i = 0; i < p.size(); ++i) m.rows[p(i)] |= std::uint64_t{1} << i;
    return m;
  }
  bool at(int r, int c) const { return (rows[r] >> c) & 1U; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat_mul(const Mat2& g, const Mat2& f) {
  Mat2 h{f.n, std::vector<std::uint64_t>(static_cast<std::size_t>(f.n), 0)};
  for (int r = 0; r < g.n; ++r)
    for (int k = 0; k < g.n; ++k)
      if (g.at(r, k)) h.rows[r] ^= f.rows[k];
  return h;
}

inline Mat2 mat_sum(const Mat2& a, const Mat2& b) {
  Mat2 m{a.n + b.n, a.rows};
  for (auto r : b.rows) m.rows.push_back(r << a.n);
  return m;
}

// lexicographic Kronecker product
inline Mat2 mat_kron(const Mat2& a, const Mat2& b) {
  int n = a.n * b.n;
  Mat2 m{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      for (int k = 0; k < a.n; ++k)
        if (a.at(i, k))
          for (int l = 0; l < b.n; ++l)
            if (b.at(j, l)) m.rows[i * b.n + j] |= std::uint64_t{1} << (k * b.n + l);
  return m;
}

inline int mat_rank(Mat2 m) {
  int rank = 0;
  for (int c = 0; c < m.n && rank < m.n; ++c) {
    int piv = -1;
    for (int r = rank; r < m.n; ++r)
      if (m.at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m.rows[piv], m.rows[rank]);
    for (int r = 0; r < m.n; ++r)
      if (r != rank && m.at(r, c)) m.rows[r] ^= m.rows[rank];
    ++rank;
  }
  return rank;
}

inline Mat2 mat_inverse(const Mat2& a) {
  Mat2 m = a, inv = Mat2::identity(a.n);
  for (int c = 0; c < m.n; ++c) {
    int piv = -1;
    for (int r = c; r < m.n; ++r)
      if (m.at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular matrix");
    std::swap(m.rows[piv], m.rows[c]);
    std::swap(inv.rows[piv], inv.rows[c]);
    for (int r = 0; r < m.n; ++r)
      if (r != c && m.at(r, c)) {
        m.rows[r] ^= m.rows[c];
        inv.rows[r] ^= inv.rows[c];
      }
  }
  return inv;
}

/** @brief Free F2-modules F2^n and invertible matrices. */
class F2Mod {
 public:
  using Obj = int;
  struct Mor {
    Mat2 m;
    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
  };

  Obj dom(const Mor& f) const { return f.m.n; }
  Obj cod(const Mor& f) const { return f.m.n; }
  Mor id(const Obj& a) const { return Mor{Mat2::identity(a)}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (g.m.n != f.m.n) throw CompositionError(show(g), show(f));
    return Mor{mat_mul(g.m, f.m)};
  }
  std::vector<Obj> objects(const Bound& b) const {
    std::vector<Obj> out;
    for (int n = 0; n <= b.rank_max; ++n) out.push_back(n);
    return out;
  }
  std::vector<Mor> homs(const Obj& a, const Obj& c, const Bound& b) const {
    if (a != c) return {};
    if (a * a > 20) throw ResourceError("rank_max=" + std::to_string(b.rank_max), "general linear group too large");
    std::vector<Mor> out;
    std::uint64_t total = std::uint64_t{1} << (a * a);
    for (std::uint64_t code = 0; code < total; ++code) {
      Mat2 m{a, std::vector<std::uint64_t>(static_cast<std::size_t>(a), 0)};
      for (int r = 0; r < a; ++r) m.rows[r] = (code >> (r * a)) & ((std::uint64_t{1} << a) - 1);
      if (mat_rank(m) == a) out.push_back(Mor{m});
      if (out.size() > b.hom_max) throw ResourceError("hom_max=" + std::to_string(b.hom_max), "hom set too large");
    }
    return out;
  }

  Obj oplus(const Obj& a, const Obj& c) const { return a + c; }
  Mor oplus(const Mor& f, const Mor& g) const { return Mor{mat_sum(f.m, g.m)}; }
  Obj zero() const { return 0; }
  Mor twist(const Obj& a, const Obj& c) const { return Mor{Mat2::of_perm(shuffle_chi(a, c))}; }
  bool zeroless() const { return false; }

  Obj otimes(const Obj& a, const Obj& c) const { return a * c; }
  Mor otimes(const Mor& f, const Mor& g) const {
    if (f.m.n * g.m.n > 64) throw ResourceError("rank 64", "Kronecker product exceeds 64 rows");
    return Mor{mat_kron(f.m, g.m)};
  }
  Obj one() const { return 1; }
  bool has_twist_times() const { return true; }
  Mor twist_times(const Obj& a, const Obj& c) const { return Mor{Mat2::of_perm(transpose_sigma(a, c))}; }
  Mor dl(const Obj& a, const Obj& b, const Obj& b2) const { return Mor{Mat2::of_perm(xi_perm(a, b, b2))}; }

  Mor block_permute(const std::vector<Obj>& objs, const std::vector<int>& order) const {
    return Mor{Mat2::of_perm(block_perm(objs, order))};
  }
  std::vector<Mor> successors(const Obj& a, const Bound&) const { return {id(a)}; }
  Mor random_auto(const Obj& a, std::mt19937_64& rng) const {
    while (true) {
      Mat2 m{a, std::vector<std::uint64_t>(static_cast<std::size_t>(a), 0)};
      for (auto& r : m.rows) r = rng() & ((std::uint64_t{1} << a) - 1);
      if (mat_rank(m) == a) return Mor{m};
    }
  }
  Mor inverse(const Mor& f) const { return Mor{mat_inverse(f.m)}; }
  /** @brief alpha with h = alpha + id_a, if any. */
  std::optional<Mor> split_sum(const Mor& h, const Obj& x, const Obj& a) const {
    if (h.m.n != x + a) return std::nullopt;
    std::uint64_t low = (std::uint64_t{1} << x) - 1;
    for (int r = 0; r < x + a; ++r) {
      if (r < x && (h.m.rows[r] & ~low)) return std::nullopt;
      if (r >= x && h.m.rows[r] != std::uint64_t{1} << r) return std::nullopt;
    }
    return Mor{Mat2{x, std::vector<std::uint64_t>(h.m.rows.begin(), h.m.rows.begin() + x)}};
  }

  std::string show(const Obj& a) const { return "F2^" + std::to_string(a); }
  std::string show(const Mor& f) const {
    std::string s = "[";
    for (int r = 0; r < f.m.n; ++r) {
      if (r) s += ";";
      for (int c = 0; c < f.m.n; ++c) s += f.m.at(r, c) ? '1' : '0';
    }
    return s + "]";
  }

  MonoidPresentation presentation() const { return naturals_presentation("F2"); }
  Degree pi0_class(const Obj& a) const { return Degree{a}; }
};

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"bool-rig", "z2", "finsets", "f2mod", "corrupted-fixture"};
  return names;
}

/** @brief Calls f with the named example; false if the name is unknown. */
template <class F>
bool visit_example(const std::string& name, F&& f) {
  if (name == "bool-rig")
    f(boolean_rig());
  else if (name == "z2")
    f(z2_ring());
  else if (name == "finsets")
    f(FinSets{});
  else if (name == "f2mod")
    f(F2Mod{});
  else if (name == "corrupted-fixture")
    f(FinSets(FinSets::Corruption::dl_wrong));
  else
    return false;
  return true;
}

}  // namespace rigcomp
