// rigcomp: batch front-end for the checkers, ring completion, pi0 tables and the GQ comparison.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "rigcomp/biperm.hpp"
#include "rigcomp/cube.hpp"
#include "rigcomp/examples.hpp"
#include "rigcomp/gq.hpp"
#include "rigcomp/io.hpp"
#include "rigcomp/permcat.hpp"
#include "rigcomp/pi0.hpp"
#include "rigcomp/thomason.hpp"
#include "rigcomp/zeros.hpp"

using namespace rigcomp;

namespace {

enum Exit { kClean = 0, kViolation = 1, kUsage = 2, kResource = 3, kUnstable = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string example;
  int n_max = 2;
  int len_max = 2;
  int entry_max = 3;
  int rank_max = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int q_max = 1;
  std::string format = "text";
  std::string output;
  std::string emit_dot;
  bool len_given = false;
  bool n_given = false;

  Bound bound() const {
    Bound b;
    b.index_max = n_max;
    b.length_max = len_max;
    b.entry_max = entry_max;
    b.rank_max = rank_max;
    b.samples = samples;
    b.seed = seed;
    b.q_max = q_max;
    return b;
  }
  json to_json() const {
    return json{{"example", example},     {"n_max", n_max},     {"len_max", len_max}, {"entry_max", entry_max},
                {"rank_max", rank_max},   {"samples", samples}, {"seed", seed},       {"q_max", q_max}};
  }
};

/** @brief Command result: JSON payload, text rendering and exit status. */
struct Result {
  json data = json::object();
  std::ostringstream text;
  int status = kClean;
};

template <class P>
constexpr bool is_discrete = std::is_same_v<P, DiscreteRig>;

void report_text(std::ostream& os, const std::string& title, const Report& r) {
  os << title << ": " << (r.ok() ? "ok" : "VIOLATIONS") << " (" << r.total_checked() << " checks, " << r.total_failed()
     << " failed)\n";
  for (auto& [cond, n] : r.failed) os << "  failed " << cond << ": " << n << "\n";
  for (auto& v : r.violations) os << "    " << v.condition << ": " << v.detail << "\n";
}

// base-category size bound: --n-max for finite sets, --rank-max for matrices
template <class P>
Bound base_bound(const RunConfig& cfg) {
  Bound b = cfg.bound();
  if constexpr (std::is_same_v<P, FinSets>) {
    if (cfg.n_given) b.entry_max = cfg.n_max;
  }
  b.tuple_max = 1000000;
  return b;
}

template <class P>
void cmd_check(const P& p, const RunConfig& cfg, Result& res) {
  Bound b = base_bound<P>(cfg);
  auto r = check_bipermutative(p, b);
  report_text(res.text, "bipermutative", r);
  res.data["reports"]["bipermutative"] = to_json(r);
  bool ok = r.ok();
  if constexpr (is_discrete<P>) {
    Bound gb = cfg.bound();
    auto g = check_graded(build_GR(p), gb);
    report_text(res.text, "graded (GR)", g);
    res.data["reports"]["graded"] = to_json(g);
    ok = ok && g.ok();
  }
  res.data["ok"] = ok;
  if (!ok) res.status = kViolation;
}

template <class P>
void cmd_complete(const P& p, const RunConfig& cfg, Result& res) {
  Bound b = cfg.bound();
  auto G = build_GR(p);
  json levels = json::array();
  std::size_t items = 0;
  for (int q = 0; q <= cfg.q_max; ++q) {
    auto L = derived_level(G, q);
    const auto& H = L.inner_category();
    auto objs = L.objects(b);
    json jo = json::array(), jm = json::array();
    std::size_t nm = 0;
    for (auto& a : objs) {
      jo.push_back(encode_obj(L, a));
      if (a.zero) continue;
      for (auto& f : H.homs_from(a.inner, b)) {
        charge(++items, b, "complete");
        jm.push_back(encode_mor(H, f));
        ++nm;
      }
    }
    items += objs.size();
    charge(items, b, "complete");
    levels.push_back(json{{"q", q}, {"objects", jo}, {"morphisms", jm}});
    res.text << "level " << q << ": " << objs.size() << " objects, " << nm << " morphisms\n";
    for (auto& a : objs) res.text << "  " << L.show(a) << "\n";
  }
  res.data["levels"] = levels;
  res.data["structure"] = json{{"index", "I∫Q"}, {"q_max", cfg.q_max}, {"zeros", "hocolim^iz"}};
}

template <class P>
GrothendieckOracle make_oracle(const P& p, const Bound& b) {
  if constexpr (is_discrete<P>) {
    return GrothendieckOracle(p.presentation(), 8);
  } else {
    int top = std::is_same_v<P, F2Mod> ? b.rank_max : b.entry_max;
    int window = (b.length_max + 1) * (1 << b.index_max) * top + 2;
    return GrothendieckOracle(p.presentation(), window);
  }
}

template <class H>
std::string write_dot(const H& h, const std::vector<std::pair<int, const Zigzag<H>*>>& zs) {
  std::string out;
  for (auto& [c, z] : zs) out += zigzag_dot(h, *z, "class " + std::to_string(c));
  return out;
}

void table_row(std::ostream& os, const std::string& c, const std::string& rep, const std::string& alt,
               const std::string& wit) {
  os << std::left << std::setw(7) << c << std::setw(12) << alt << std::setw(14) << wit << rep << "\n";
}

template <class P>
void cmd_pi0(const P& p, const RunConfig& cfg, Result& res) {
  Bound b = cfg.bound();
  auto oracle = make_oracle(p, b);
  json rows = json::array();
  std::string dot;
  table_row(res.text, "class", "representative", "alt_sum", "witness");
  if constexpr (is_discrete<P>) {
    auto pr = pi0_ring(p, oracle, b);
    auto G = build_GR(p);
    auto L = derived_level(G, 0);
    Hocolim<CubeGraded<P>> H(G);
    std::vector<std::pair<int, const Zigzag<Hocolim<CubeGraded<P>>>*>> zs;
    for (int c = 0; c < pr.partition.classes(); ++c) {
      const auto& w = pr.witnesses[c];
      json row{{"class", c}, {"representative", encode_obj(L, pr.partition.rep(c))}, {"alt_sum", oracle.label(pr.labels[c])}};
      if (w) {
        row["witness"] = json{{"inverse", encode_obj(H, w->b)}, {"zigzag", to_json(H, w->path)}};
        zs.push_back({c, &w->path});
      } else {
        row["witness"] = "zero";
      }
      rows.push_back(row);
      table_row(res.text, std::to_string(c), L.show(pr.partition.rep(c)), oracle.label(pr.labels[c]),
                w ? std::to_string(w->path.steps.size()) + " steps" : "zero");
    }
    res.data["ring"] = to_json(pr.table);
    res.data["stable"] = pr.stable;
    res.data["report"] = to_json(pr.report);
    res.text << "ring: add " << json(pr.table.add).dump() << " mul " << json(pr.table.mul).dump() << "\n";
    res.text << "stable: " << (pr.stable ? "yes" : "no") << "\n";
    report_text(res.text, "pi0 ring", pr.report);
    dot = write_dot(H, zs);
    Report rest = pr.report;
    rest.failed.erase("stabilization");
    if (!rest.ok())
      res.status = kViolation;
    else if (!pr.stable)
      res.status = kUnstable;
  } else {
    Hocolim<CubeGraded<P>> H(build_GR(p));
    AltSum<P> alt(p, oracle);
    auto P1 = hocolim_pi0(H, b);
    bool stable = same_partition(P1, hocolim_pi0(H, next_bound(b)));
    Report rep;
    std::vector<InverseWitness<P>> ws;
    ws.reserve(static_cast<std::size_t>(P1.classes()));
    for (int c = 0; c < P1.classes(); ++c) {
      ws.push_back(inverse_witness(H, P1.rep(c)));
      auto& w = ws.back();
      std::string why;
      rep.expect(verify_witness(H, w, &why), "inverse witness", [&] { return H.show(w.a) + ": " + why; });
      rep.expect(alt(w.b) == oracle.neg(alt(w.a)), "inverse alt_sum", [&] { return H.show(w.a); });
      rows.push_back(json{{"class", c},
                          {"representative", encode_obj(H, P1.rep(c))},
                          {"alt_sum", oracle.label(alt(P1.rep(c)))},
                          {"witness", json{{"inverse", encode_obj(H, w.b)}, {"zigzag", to_json(H, w.path)}}}});
      table_row(res.text, std::to_string(c), H.show(P1.rep(c)), oracle.label(alt(P1.rep(c))),
                std::to_string(w.path.steps.size()) + " steps");
    }
    std::vector<std::pair<int, const Zigzag<Hocolim<CubeGraded<P>>>*>> zs;
    for (int c = 0; c < P1.classes(); ++c) zs.push_back({c, &ws[c].path});
    dot = write_dot(H, zs);
    res.data["stable"] = stable;
    res.data["report"] = to_json(rep);
    res.text << "stable: " << (stable ? "yes" : "no") << "\n";
    report_text(res.text, "witnesses", rep);
    if (!rep.ok())
      res.status = kViolation;
    else if (!stable)
      res.status = kUnstable;
  }
  res.data["classes"] = rows;
  if (res.status == kUnstable) res.text << "partition not stabilized; raise --len-max\n";
  if (!cfg.emit_dot.empty()) {
    std::ofstream f(cfg.emit_dot);
    if (!f) throw UsageError("cannot write " + cfg.emit_dot);
    f << dot;
  }
}

template <class P>
void cmd_compare_gq(const P& p, const RunConfig& cfg, Result& res) {
  if constexpr (std::is_same_v<P, FinSets> || std::is_same_v<P, F2Mod>) {
    Bound b = base_bound<P>(cfg);
    b.tuple_max = Bound{}.tuple_max;
    if (!cfg.len_given) b.length_max = 1;
    auto c = gq_compare(p, b);
    res.data["composites"] = c.composites;
    res.data["core_objects"] = c.core_objects;
    res.data["source_classes"] = c.source_classes;
    res.data["target_classes"] = c.target_classes;
    res.data["stable"] = c.stable;
    res.data["bijective"] = c.bijective;
    res.data["report"] = to_json(c.report);
    res.text << "core objects:    " << c.core_objects << "\n"
             << "composites:      " << c.composites << "\n"
             << "source classes:  " << c.source_classes << "\n"
             << "target classes:  " << c.target_classes << "\n"
             << "stable:          " << (c.stable ? "yes" : "no") << "\n"
             << "pi0 bijection:   " << (c.bijective ? "yes" : "no") << "\n";
    report_text(res.text, "comparison", c.report);
    Report rest = c.report;
    rest.failed.erase("stabilization");
    if (!rest.ok())
      res.status = kViolation;
    else if (!c.stable)
      res.status = kUnstable;
  } else {
    (void)p;
    (void)cfg;
    (void)res;
    throw UsageError("compare-gq needs a groupoid example: finsets or f2mod");
  }
}

void apply_config(RunConfig& cfg, const std::string& path, const CLI::App& sub) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (j.contains("schema") && j["schema"] != kSchema) throw UsageError("config: unsupported schema");
  auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  auto take = [&](const char* key, const char* flag, auto& field) {
    if (j.contains(key) && !given(flag)) j.at(key).get_to(field);
  };
  try {
    take("example", "--example", cfg.example);
    take("n_max", "--n-max", cfg.n_max);
    take("len_max", "--len-max", cfg.len_max);
    take("entry_max", "--entry-max", cfg.entry_max);
    take("rank_max", "--rank-max", cfg.rank_max);
    take("samples", "--samples", cfg.samples);
    take("seed", "--seed", cfg.seed);
    take("q_max", "--q-max", cfg.q_max);
    take("format", "--format", cfg.format);
    take("output", "--output", cfg.output);
    take("emit_dot", "--emit-dot", cfg.emit_dot);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (j.contains("len_max")) cfg.len_given = true;
  if (j.contains("n_max")) cfg.n_given = true;
}

void validate(const RunConfig& cfg) {
  if (cfg.example.empty()) throw UsageError("--example is required");
  if (cfg.format != "json" && cfg.format != "text") throw UsageError("--format must be json or text");
  if (cfg.n_max < 0 || cfg.len_max < 1 || cfg.entry_max < 0 || cfg.rank_max < 0 || cfg.q_max < 0 || cfg.samples < 1)
    throw UsageError("bounds must satisfy n-max >= 0, len-max >= 1, samples >= 1 and the rest >= 0");
}

int run(RunConfig& cfg) {
  Result res;
  bool known = visit_example(cfg.example, [&](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    if (cfg.command == "check")
      cmd_check<P>(p, cfg, res);
    else if (cfg.command == "complete")
      cmd_complete<P>(p, cfg, res);
    else if (cfg.command == "pi0")
      cmd_pi0<P>(p, cfg, res);
    else
      cmd_compare_gq<P>(p, cfg, res);
  });
  if (!known) throw UsageError("unknown example '" + cfg.example + "'");

  json out{{"schema", kSchema}, {"command", cfg.command}, {"config", cfg.to_json()}, {"status", res.status}};
  out.update(res.data);
  std::string body = cfg.format == "json" ? out.dump(2) + "\n" : res.text.str();
  if (cfg.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write " + cfg.output);
    f << body;
  }
  return res.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigcomp: rig categories, ring completion and group completion checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;

  std::vector<CLI::App*> subs;
  auto add = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--example", cfg.example, "bool-rig | z2 | finsets | f2mod | corrupted-fixture");
    s->add_option("--n-max", cfg.n_max, "index size bound (set size for finsets in check/compare-gq)");
    s->add_option("--len-max", cfg.len_max, "sequence length bound");
    s->add_option("--entry-max", cfg.entry_max, "entry size bound");
    s->add_option("--rank-max", cfg.rank_max, "matrix rank bound");
    s->add_option("--samples", cfg.samples, "random samples per randomized suite");
    s->add_option("--seed", cfg.seed, "random seed");
    s->add_option("--q-max", cfg.q_max, "highest simplicial level");
    s->add_option("--format", cfg.format, "json | text");
    s->add_option("--output", cfg.output, "output file (default stdout)");
    s->add_option("--config", config_path, "JSON config file; flags take precedence");
    s->add_option("--emit-dot", cfg.emit_dot, "write witness zigzags as DOT (pi0)");
    subs.push_back(s);
  };
  add("check", "run the structure checkers");
  add("complete", "dump the ring completion levels within the bound");
  add("pi0", "pi0 class table with alt_sum labels and inverse witnesses");
  add("compare-gq", "compare with the Grayson-Quillen construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  }

  try {
    for (auto* s : subs)
      if (s->parsed()) {
        cfg.command = s->get_name();
        cfg.len_given = s->count("--len-max") > 0;
        cfg.n_given = s->count("--n-max") > 0;
        if (!config_path.empty()) apply_config(cfg, config_path, *s);
      }
    validate(cfg);
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const IncompleteError& e) {
    std::cerr << "incomplete at bound: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
}
