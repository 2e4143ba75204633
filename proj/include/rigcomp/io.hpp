#pragma once

#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "cube.hpp"
#include "examples.hpp"
#include "gq.hpp"
#include "indexing.hpp"
#include "pi0.hpp"
#include "thomason.hpp"
#include "zeros.hpp"

namespace rigcomp {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

inline json to_json(const JObj& x) { return json{{"n", x.n}, {"T", x.T}}; }

/** @brief phi is written 1-based. */
inline json to_json(const JMor& k) {
  std::vector<int> phi;
  for (int v : k.phi.img) phi.push_back(v + 1);
  return json{{"phi", phi}, {"from", to_json(k.src)}, {"to", to_json(k.tgt)}};
}

inline json to_json(const FinMap& f) {
  std::vector<int> img;
  for (int v : f.img) img.push_back(v + 1);
  return img;
}

/** @brief Per-category encoders; the default falls back to show(). */
template <class C>
struct Codec {
  static json obj(const C& c, const typename C::Obj& x) {
    if constexpr (std::is_arithmetic_v<typename C::Obj>)
      return x;
    else
      return c.show(x);
  }
  static json mor(const C& c, const typename C::Mor& f) { return c.show(f); }
};

template <>
struct Codec<DiscreteRig> {
  static json obj(const DiscreteRig& c, int x) { return c.show(x); }
  static json mor(const DiscreteRig& c, const DiscreteRig::Mor& f) { return json{{"id", c.show(f.o)}}; }
};

template <>
struct Codec<FinSets> {
  static json obj(const FinSets&, int x) { return x; }
  static json mor(const FinSets&, const FinSets::Mor& f) {
    std::vector<int> img;
    for (int v : f.p.img) img.push_back(v + 1);
    return json{{"perm", img}};
  }
};

template <>
struct Codec<F2Mod> {
  static json obj(const F2Mod&, int x) { return x; }
  static json mor(const F2Mod&, const F2Mod::Mor& f) {
    json rows = json::array();
    for (int r = 0; r < f.m.n; ++r) {
      std::vector<int> row;
      for (int c = 0; c < f.m.n; ++c) row.push_back(f.m.at(r, c) ? 1 : 0);
      rows.push_back(row);
    }
    return json{{"matrix", rows}};
  }
};

template <class C>
json encode_obj(const C& c, const typename C::Obj& x) {
  return Codec<C>::obj(c, x);
}
template <class C>
json encode_mor(const C& c, const typename C::Mor& f) {
  return Codec<C>::mor(c, f);
}

template <class R>
struct Codec<CubeGraded<R>> {
  using G = CubeGraded<R>;
  template <class Cell, class Enc>
  static json cube(const Cell& a, Enc&& enc) {
    if (a.zero) return json{{"j", to_json(a.j)}, {"zero", true}};
    json entries = json::object();
    for (std::size_t m = 0; m < a.entries.size(); ++m)
      entries[json(mask_elems(a.j.T, static_cast<unsigned>(m))).dump()] = enc(a.entries[m]);
    return json{{"j", to_json(a.j)}, {"entries", entries}};
  }
  static json obj(const G& g, const typename G::Obj& a) {
    return cube(a, [&](const auto& e) { return encode_obj(g.base(), e); });
  }
  static json mor(const G& g, const typename G::Mor& f) {
    return cube(f, [&](const auto& e) { return encode_mor(g.base(), e); });
  }
};

template <class GC, class I>
struct Codec<Restricted<GC, I>> {
  static json obj(const Restricted<GC, I>& g, const typename GC::Obj& a) { return Codec<GC>::obj(g, a); }
  static json mor(const Restricted<GC, I>& g, const typename GC::Mor& f) { return Codec<GC>::mor(g, f); }
};

template <class GC>
struct Codec<AdjoinZeros<GC>> {
  using A = AdjoinZeros<GC>;
  static json obj(const A& z, const typename A::Obj& a) {
    if (a.depth >= 0) return json{{"zero", a.depth}, {"index", to_json(a.x)}};
    return encode_obj(z.diagram(), a.inner);
  }
  static json mor(const A& z, const typename A::Mor& f) {
    if (f.depth >= 0) return json{{"zero", f.depth}, {"index", to_json(f.x)}};
    return encode_mor(z.diagram(), f.inner);
  }
};

template <class GC>
struct Codec<Hocolim<GC>> {
  using H = Hocolim<GC>;
  static json obj(const H& h, const typename H::Obj& a) {
    json seq = json::array();
    for (auto& [x, X] : a.seq) seq.push_back(json{{"index", to_json(x)}, {"object", encode_obj(h.diagram(), X)}});
    return json{{"length", a.size()}, {"entries", seq}};
  }
  static json mor(const H& h, const typename H::Mor& f) {
    json l = json::array(), rho = json::array();
    for (auto& k : f.l) l.push_back(to_json(k));
    for (auto& r : f.rho) rho.push_back(encode_mor(h.diagram(), r));
    return json{{"from", obj(h, f.src)}, {"to", obj(h, f.tgt)}, {"psi", to_json(f.psi)}, {"l", l}, {"rho", rho}};
  }
};

template <class C>
struct Codec<Plus<C>> {
  static json obj(const Plus<C>& p, const typename Plus<C>::Obj& a) {
    if (a.zero) return json{{"zero", true}};
    return encode_obj(p.inner_category(), a.inner);
  }
  static json mor(const Plus<C>& p, const typename Plus<C>::Mor& f) {
    if (f.zero) return json{{"zero", true}};
    return encode_mor(p.inner_category(), f.inner);
  }
};

inline json to_json(const RingTable& t) {
  return json{{"size", t.size}, {"zero", t.zero}, {"one", t.one}, {"add", t.add}, {"mul", t.mul}};
}

inline json to_json(const Report& r) {
  json v = json::array();
  for (auto& x : r.violations) v.push_back(json{{"condition", x.condition}, {"detail", x.detail}});
  return json{{"ok", r.ok()},           {"checked", r.total_checked()}, {"failed", r.total_failed()},
              {"conditions", r.checked}, {"failures", r.failed},        {"violations", v}};
}

template <class H>
json to_json(const H& h, const Zigzag<H>& z) {
  json steps = json::array();
  for (auto& [f, fwd] : z.steps) steps.push_back(json{{"direction", fwd ? "forward" : "backward"}, {"mor", encode_mor(h, f)}});
  return json{{"start", encode_obj(h, z.start)}, {"steps", steps}};
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/** @brief Zigzag as a DOT digraph; backward steps are drawn against the walk. */
template <class H>
std::string zigzag_dot(const H& h, const Zigzag<H>& z, const std::string& name = "zigzag") {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(name) << "\" {\n  rankdir=LR;\n";
  auto node = [&](std::size_t i, const typename H::Obj& a) {
    os << "  n" << i << " [label=\"" << detail::dot_escape(h.show(a)) << "\"];\n";
  };
  node(0, z.start);
  for (std::size_t t = 0; t < z.steps.size(); ++t) {
    auto& [f, fwd] = z.steps[t];
    node(t + 1, fwd ? f.tgt : f.src);
    if (fwd)
      os << "  n" << t << " -> n" << t + 1 << ";\n";
    else
      os << "  n" << t + 1 << " -> n" << t << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rigcomp
