#include "coxeter/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxeter/bruhat_graph.hpp"
#include "coxeter/cosets.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/orders.hpp"
#include "coxeter/parallel.hpp"
#include "coxeter/polynomials.hpp"

namespace coxeter {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "coxeter-cosets/1";

struct Config {
  std::string type_label, matrix_path;
  std::string format = "text";
  std::string out_path;
  std::string component, w_arg, eval_arg, kind = "L";
  std::string interval_arg, coset_arg;
  bool all_vertices = false;
  bool per_w_table = false;
  std::uint64_t cap = 1'000'000;
  unsigned jobs = 0;
};

Group load_group(const Config& cfg) {
  if (cfg.type_label.empty() == cfg.matrix_path.empty())
    throw UsageError("exactly one of --type or --matrix is required");
  BuildOptions opts;
  opts.element_cap = cfg.cap;
  opts.jobs = cfg.jobs;
  if (!cfg.type_label.empty()) return Group::build(cfg.type_label, opts);
  return Group::build(CoxeterMatrix::from_json_file(cfg.matrix_path), opts);
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + cfg.out_path);
  f << text;
}

std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json poly_json(const MultiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    ordered_json t;
    t["exponents"] = e;
    t["coeff"] = c.to_string();
    terms.push_back(t);
  }
  ordered_json j;
  j["variables"] = p.vars();
  j["terms"] = terms;
  return j;
}

GenMask parse_gen_set(const Group& g, const std::string& text) {
  GenMask mask = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    if (!tok.empty() && tok[0] == 's') tok = tok.substr(1);
    if (!tok.empty()) {
      int s = 0;
      try {
        s = std::stoi(tok);
      } catch (...) {
        throw UsageError("bad generator \"" + tok + "\" in set \"" + text +
                         "\"");
      }
      if (s < 1 || s > g.rank())
        throw UsageError("generator s" + std::to_string(s) +
                         " out of range 1.." + std::to_string(g.rank()));
      mask |= gen_bit(s - 1);
    }
    pos = comma + 1;
  }
  return mask;
}

// --- group ------------------------------------------------------------

int cmd_group(const Config& cfg, std::ostream& out) {
  const Group g = load_group(cfg);
  if (cfg.format == "json") {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "group";
    j["type"] = g.type().name();
    j["rank"] = g.rank();
    j["order"] = g.order();
    j["reflections"] = g.num_reflections();
    j["longest_length"] = g.length(g.longest());
    j["longest"] = g.display(g.longest());
    ordered_json m = ordered_json::array();
    for (int i = 0; i < g.rank(); ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < g.rank(); ++k) row.push_back(g.matrix().at(i, k));
      m.push_back(row);
    }
    j["matrix"] = m;
    ordered_json gens = ordered_json::array();
    for (int s = 0; s < g.rank(); ++s) gens.push_back(g.display(g.simple(s)));
    j["generators"] = gens;
    emit(cfg, out, json_dump(j));
    return 0;
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "key,value\n";
    os << "type," << g.type().name() << "\n";
    os << "rank," << g.rank() << "\n";
    os << "order," << g.order() << "\n";
    os << "reflections," << g.num_reflections() << "\n";
    os << "longest_length," << g.length(g.longest()) << "\n";
    os << "longest," << g.display(g.longest()) << "\n";
  } else {
    os << "type: " << g.type().name() << "\n";
    os << "rank: " << g.rank() << "\n";
    os << "order: " << g.order() << "\n";
    os << "reflections: " << g.num_reflections() << "\n";
    os << "longest element: " << g.display(g.longest()) << " (length "
       << g.length(g.longest()) << ")\n";
    os << "generators:\n";
    for (int s = 0; s < g.rank(); ++s)
      os << "  s" << s + 1 << " = " << g.display(g.simple(s)) << "\n";
    os << "coxeter matrix:\n";
    for (int i = 0; i < g.rank(); ++i) {
      os << " ";
      for (int k = 0; k < g.rank(); ++k) os << " " << g.matrix().at(i, k);
      os << "\n";
    }
  }
  emit(cfg, out, os.str());
  return 0;
}

// --- cosets -----------------------------------------------------------

int cmd_cosets(const Config& cfg, const std::string& kind, std::ostream& out) {
  const Group g = load_group(cfg);
  SystemOptions sopts;
  sopts.node_cap = cfg.cap;
  sopts.jobs = cfg.jobs;

  std::optional<Element> filter;
  if (!cfg.component.empty()) filter = g.parse(cfg.component);

  std::ostringstream os;
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "cosets";
  j["kind"] = kind;
  j["type"] = g.type().name();

  if (kind == "sigma") {
    const auto sigma = build_sigma(g, sopts);
    j["count"] = sigma.nodes.size();
    ordered_json nodes = ordered_json::array();
    std::uint64_t listed = 0;
    std::ostringstream rows;
    for (const auto& nd : sigma.nodes) {
      if (filter && nd.max != *filter) continue;
      ++listed;
      if (cfg.format == "json") {
        ordered_json n;
        n["min"] = g.display(nd.min);
        n["gens"] = gen_list(nd.gens);
        n["max"] = g.display(nd.max);
        n["size"] = nd.size;
        nodes.push_back(n);
      } else {
        rows << g.display(nd.min) << "," << gen_set_name(nd.gens) << ","
             << g.display(nd.max) << "," << nd.size << "\n";
      }
    }
    if (cfg.format == "json") {
      j["nodes"] = nodes;
      emit(cfg, out, json_dump(j));
      return 0;
    }
    if (cfg.format != "csv") {
      os << "one-sided coset system of " << g.type().name() << ": "
         << sigma.nodes.size() << " cosets\n";
      if (filter)
        os << "component of " << g.display(*filter) << ": " << listed
           << " cosets (boolean of rank "
           << gen_count(g.descents(*filter, Side::Right)) << ")\n";
    }
    os << "min,gens,max,size\n" << rows.str();
    emit(cfg, out, os.str());
    return 0;
  }

  const XiSystem xi = build_xi(g, sopts);
  const DeltaSystem& delta = xi.delta;
  j["delta_count"] = delta.nodes.size();
  j["xi_count"] = xi.nodes.size();

  if (kind == "delta") {
    ordered_json nodes = ordered_json::array();
    std::ostringstream rows;
    std::uint64_t listed = 0;
    for (std::uint32_t i = 0; i < delta.nodes.size(); ++i) {
      const auto& X = delta.nodes[i];
      if (filter && X.max_rep != *filter) continue;
      ++listed;
      const auto cd = coatom_data(g, X, X.max_rep);
      if (cfg.format == "json") {
        ordered_json n;
        n["x0"] = g.display(X.min_rep);
        n["x1"] = g.display(X.max_rep);
        n["size"] = X.members.size();
        n["length"] = X.length;
        n["max_left"] = gen_list(X.max_left);
        n["max_right"] = gen_list(X.max_right);
        n["local_dim"] = cd.local_dim;
        ordered_json covers = ordered_json::array();
        if (!delta.upper.empty())
          for (const auto up : delta.upper[i]) covers.push_back(up);
        n["upper_covers"] = covers;
        nodes.push_back(n);
      } else {
        rows << g.display(X.min_rep) << "," << g.display(X.max_rep) << ","
             << X.members.size() << "," << X.length << ","
             << gen_set_name(X.max_left) << "," << gen_set_name(X.max_right)
             << "," << cd.local_dim << "\n";
      }
    }
    if (cfg.format == "json") {
      j["nodes"] = nodes;
      emit(cfg, out, json_dump(j));
      return 0;
    }
    if (cfg.format != "csv") {
      os << "double coset system of " << g.type().name() << ": "
         << delta.nodes.size() << " cosets\n";
      if (filter)
        os << "component of " << g.display(*filter) << ": delta = " << listed
           << "\n";
      if (cfg.per_w_table) {
        os << "w,delta(w),2^dt(w),d(w),dt(w)\n";
        for (std::uint32_t wid = 0; wid < g.order(); ++wid) {
          const Element w{wid};
          const auto dd = g.descent_data(w);
          os << g.display(w) << "," << delta.delta_of(w) << ","
             << delta_upper_bound(g, w) << "," << dd.d << "," << dd.d_tilde
             << "\n";
        }
      }
    }
    os << "x0,x1,size,length,max_left,max_right,local_dim\n" << rows.str();
    emit(cfg, out, os.str());
    return 0;
  }

  if (kind != "xi") throw UsageError("unknown system kind: " + kind);
  ordered_json nodes = ordered_json::array();
  std::ostringstream rows;
  for (const auto& node : xi.nodes) {
    if (filter && node.w != *filter) continue;
    const auto& X = delta.nodes[node.coset];
    if (cfg.format == "json") {
      ordered_json n;
      n["left"] = gen_list(node.left);
      n["x0"] = g.display(X.min_rep);
      n["x1"] = g.display(X.max_rep);
      n["right"] = gen_list(node.right);
      n["coset"] = node.coset;
      nodes.push_back(n);
    } else {
      rows << gen_set_name(node.left) << "," << g.display(X.min_rep) << ".."
           << g.display(X.max_rep) << "," << gen_set_name(node.right) << "\n";
    }
  }
  if (cfg.format == "json") {
    j["nodes"] = nodes;
    emit(cfg, out, json_dump(j));
    return 0;
  }
  if (cfg.format != "csv")
    os << "marked coset system of " << g.type().name() << ": "
       << xi.nodes.size() << " marked cosets over " << delta.nodes.size()
       << " cosets\n";
  os << "left,coset,right\n" << rows.str();
  emit(cfg, out, os.str());
  return 0;
}

// --- verify -----------------------------------------------------------

CheckReport run_suite(const Group& g, const std::string& suite,
                      std::uint64_t cap, unsigned jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.suite = suite;
  SystemOptions sopts;
  sopts.node_cap = cap;
  sopts.jobs = jobs;

  if (suite == "regularity") {
    const auto delta = build_delta(g, sopts);
    std::vector<CheckReport> per(delta.nodes.size());
    parallel_for(delta.nodes.size(), jobs, [&](std::size_t i) {
      per[i] = verify_coset_regularity(g, delta.nodes[i]);
    });
    for (const auto& r : per) rep.merge(r);
  } else if (suite == "degree-invariance") {
    std::vector<CheckReport> per(g.order());
    parallel_for(g.order(), jobs, [&](std::size_t w) {
      per[w] =
          verify_degree_invariance(g, Element{static_cast<std::uint32_t>(w)});
    });
    for (const auto& r : per) rep.merge(r);
  } else if (suite == "out-eulerian") {
    std::vector<CheckReport> per(g.order());
    parallel_for(g.order(), jobs, [&](std::size_t wi) {
      const Element w{static_cast<std::uint32_t>(wi)};
      CheckReport local;
      for (std::uint32_t ui = 0; ui < g.order(); ++ui) {
        const Element u{ui};
        if (!g.bruhat_leq(u, w)) continue;
        if (u != w) {
          // Every interval of positive length is sign-balanced by length.
          ++local.checks;
          long long lsum = 0;
          for (const Element v : interval(g, u, w, OrderKind::Bruhat).members)
            lsum += g.length(v) % 2 == 0 ? 1 : -1;
          if (lsum != 0)
            local.fail("interval [" + g.display(u) + ", " + g.display(w) +
                       "]: length-signed sum " + std::to_string(lsum));
        }
        if (is_critical(g, u, w)) continue;
        ++local.checks;
        const long long sum = out_eulerian_sum(g, u, w);
        if (sum != 0)
          local.fail("noncritical [" + g.display(u) + ", " + g.display(w) +
                     "]: out-signed sum " + std::to_string(sum));
      }
      per[wi] = local;
    });
    for (const auto& r : per) rep.merge(r);
  } else if (suite == "structure") {
    const auto xi = build_xi(g, sopts);
    rep.merge(structural_checks(g, xi.delta));
    for (std::uint32_t i = 0; i < xi.delta.nodes.size(); ++i) {
      ++rep.checks;
      const auto fib = project_and_fiber(g, xi, i);
      if (!fib.unique_min || !fib.boolean_ok)
        rep.fail("fiber over " + g.display(xi.delta.nodes[i].min_rep) + ".." +
                 g.display(xi.delta.nodes[i].max_rep) +
                 " is not a boolean complex");
      if (!fib.projection_monotone)
        rep.fail("projection not weakly order-preserving at coset " +
                 std::to_string(i));
      if (!fib.dim_drop_ok)
        rep.fail("local dimension drop outside {0,1} at coset " +
                 std::to_string(i));
    }
    const auto sigma = build_sigma(g, sopts);
    for (std::uint32_t wid = 0; wid < g.order(); ++wid) {
      const Element w{wid};
      const auto dd = g.descent_data(w);
      ++rep.checks;
      if (xi.component_nodes[wid].size() != (std::size_t{1} << dd.d_tilde))
        rep.fail("marked component of " + g.display(w) +
                 " is not boolean of rank " + std::to_string(dd.d_tilde));
      ++rep.checks;
      if (sigma.component_nodes[wid].size() !=
          (std::size_t{1} << gen_count(dd.d_right)))
        rep.fail("one-sided component of " + g.display(w) +
                 " is not boolean of rank " +
                 std::to_string(gen_count(dd.d_right)));
    }
  } else if (suite == "deodhar") {
    std::vector<CheckReport> per(g.order());
    parallel_for(g.order(), jobs, [&](std::size_t w) {
      per[w] = deodhar_check(g, Element{static_cast<std::uint32_t>(w)});
    });
    for (const auto& r : per) rep.merge(r);
  } else if (suite == "lifting") {
    std::vector<CheckReport> per(g.order());
    parallel_for(g.order(), jobs, [&](std::size_t wi) {
      const Element w{static_cast<std::uint32_t>(wi)};
      CheckReport local;
      for (std::uint32_t ui = 0; ui < g.order(); ++ui) {
        const Element u{ui};
        if (u == w || !g.bruhat_leq(u, w)) continue;
        ++local.checks;
        if (!lifting_check(g, u, w))
          local.fail("lifting fails on [" + g.display(u) + ", " +
                     g.display(w) + "]");
      }
      per[wi] = local;
    });
    for (const auto& r : per) rep.merge(r);
  } else {
    throw UsageError("unknown suite: " + suite);
  }
  rep.suite = suite;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

int cmd_verify(const Config& cfg, const std::string& suite, std::ostream& out,
               std::ostream& err) {
  const Group g = load_group(cfg);
  std::vector<std::string> suites;
  if (suite == "all")
    suites = {"regularity", "degree-invariance", "out-eulerian",
              "structure",  "deodhar",           "lifting"};
  else
    suites = {suite};

  bool all_passed = true;
  std::ostringstream os;
  ordered_json jr = ordered_json::array();
  for (const auto& s : suites) {
    const auto rep = run_suite(g, s, cfg.cap, cfg.jobs);
    all_passed = all_passed && rep.passed();
    // Timing goes to stderr so identical invocations stay byte-identical.
    err << "suite " << s << ": " << rep.wall_seconds << "s\n";
    if (cfg.format == "json") {
      ordered_json j;
      j["suite"] = s;
      j["checks"] = rep.checks;
      j["failures"] = rep.failures;
      j["passed"] = rep.passed();
      jr.push_back(j);
    } else if (cfg.format == "csv") {
      os << s << "," << rep.checks << "," << rep.failures.size() << ","
         << (rep.passed() ? "pass" : "FAIL") << "\n";
    } else {
      os << "suite " << s << ": " << rep.checks << " checks, "
         << rep.failures.size() << " failures -> "
         << (rep.passed() ? "pass" : "FAIL") << "\n";
      for (const auto& f : rep.failures) os << "  witness: " << f << "\n";
    }
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["type"] = g.type().name();
    j["reports"] = jr;
    emit(cfg, out, json_dump(j));
  } else {
    emit(cfg, out, os.str());
  }
  return all_passed ? 0 : 1;
}

// --- poly -------------------------------------------------------------

// "2,2,2,2" by variable order, or "q=-1" / "t1=2,t4=3" by name
// (unassigned variables default to 1).
std::vector<BigInt> parse_eval_point(const MultiPoly& p,
                                     const std::string& text) {
  std::vector<std::string> toks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    toks.push_back(text.substr(pos, comma - pos));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  std::vector<BigInt> point(p.vars().size(), BigInt{1});
  const bool named = text.find('=') != std::string::npos;
  if (!named) {
    if (toks.size() != p.vars().size())
      throw UsageError("--eval needs " + std::to_string(p.vars().size()) +
                       " comma-separated values for this polynomial");
    for (std::size_t i = 0; i < toks.size(); ++i) {
      try {
        point[i] = BigInt{std::stoll(toks[i])};
      } catch (...) {
        throw UsageError("bad --eval value \"" + toks[i] + "\"");
      }
    }
    return point;
  }
  for (const auto& tok : toks) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw UsageError("bad --eval assignment \"" + tok + "\"");
    const std::string name = tok.substr(0, eq);
    const auto it = std::find(p.vars().begin(), p.vars().end(), name);
    if (it == p.vars().end())
      throw UsageError("unknown variable \"" + name + "\" in --eval");
    try {
      point[static_cast<std::size_t>(it - p.vars().begin())] =
          BigInt{std::stoll(tok.substr(eq + 1))};
    } catch (...) {
      throw UsageError("bad --eval value in \"" + tok + "\"");
    }
  }
  return point;
}

int cmd_poly(const Config& cfg, const std::string& which, std::ostream& out) {
  const Group g = load_group(cfg);
  std::optional<Element> w;
  if (!cfg.w_arg.empty()) w = g.parse(cfg.w_arg);

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "poly";
  j["which"] = which;
  j["type"] = g.type().name();
  std::ostringstream os;

  auto poly_csv = [](const MultiPoly& p) {
    std::ostringstream rows;
    for (const auto& v : p.vars()) rows << v << ",";
    rows << "coeff\n";
    for (const auto& [e, c] : p.terms()) {
      for (const int x : e) rows << x << ",";
      rows << c.to_string() << "\n";
    }
    return rows.str();
  };
  auto finish = [&](const MultiPoly& eval_target, const std::string& label) {
    if (!cfg.eval_arg.empty()) {
      const auto value =
          eval_target.eval(parse_eval_point(eval_target, cfg.eval_arg));
      j["eval"] = value.to_string();
      os << "eval(" << cfg.eval_arg << ") = " << value.to_string() << "\n";
    }
    if (cfg.format == "json")
      emit(cfg, out, json_dump(j));
    else if (cfg.format == "csv")
      emit(cfg, out, poly_csv(eval_target) + os.str());
    else
      emit(cfg, out, label + os.str());
  };

  if (which == "poincare") {
    if (!w) throw UsageError("poly poincare requires --w");
    const auto r = poincare(g, *w);
    j["poly"] = poly_json(r.poly);
    j["average"] = r.average.to_string();
    j["palindromic"] = r.palindromic;
    finish(r.poly, "P_" + g.display(*w) + "(q) = " + r.poly.to_string() +
                       "\naverage: " + r.average.to_string() +
                       "\npalindromic: " + (r.palindromic ? "yes" : "no") +
                       "\n");
    return 0;
  }
  if (which == "eulerian4") {
    const auto a = eulerian4(g);
    j["poly"] = poly_json(a);
    j["classical"] = poly_json(classical_eulerian(a));
    j["two_sided"] = poly_json(two_sided_eulerian(a));
    j["descent_gf"] = poly_json(descent_number_gf(a));
    j["total_descent_gf"] = poly_json(total_descent_gf(a));
    finish(a, "A(t1,t2,t3,t4) = " + a.to_string() +
                  "\nclassical (t,t,1,1): " +
                  classical_eulerian(a).to_string() +
                  "\ntwo-sided (s,s,t,t): " +
                  two_sided_eulerian(a).to_string() +
                  "\ntwo-sided descent gf: " +
                  descent_number_gf(a).to_string() +
                  "\ntotal descent gf: " + total_descent_gf(a).to_string() +
                  "\n");
    return 0;
  }
  if (which == "directional") {
    if (!w) throw UsageError("poly directional requires --w");
    DirectionalKind k = DirectionalKind::Left;
    if (cfg.kind == "L")
      k = DirectionalKind::Left;
    else if (cfg.kind == "R")
      k = DirectionalKind::Right;
    else if (cfg.kind == "C")
      k = DirectionalKind::Central;
    else
      throw UsageError("--kind must be L, R or C");
    const auto p = directional_poincare(g, *w, k);
    j["kind"] = cfg.kind;
    j["poly"] = poly_json(p);
    finish(p, "P^" + cfg.kind + "_" + g.display(*w) + "(q1,q2) = " +
                  p.to_string() + "\n");
    return 0;
  }
  if (which == "inout") {
    if (!w) throw UsageError("poly inout requires --w");
    const auto r = inout_poincare(g, *w);
    j["in_out"] = poly_json(r.in_out);
    j["out"] = poly_json(r.out);
    j["out_at_minus_one"] = r.out_at_minus_one.to_string();
    // q evals address the out-specialization; q1/q2 evals the 2-variable one.
    const bool wants_two = cfg.eval_arg.find("q1") != std::string::npos ||
                           cfg.eval_arg.find("q2") != std::string::npos;
    finish(wants_two ? r.in_out : r.out,
           "P^inout_" + g.display(*w) + "(q1,q2) = " + r.in_out.to_string() +
               "\nP^out_" + g.display(*w) + "(q) = " + r.out.to_string() +
               "\nP^out(-1) = " + r.out_at_minus_one.to_string() + "\n");
    return 0;
  }
  throw UsageError("unknown polynomial: " + which);
}

// --- export -----------------------------------------------------------

int cmd_export(const Config& cfg, const std::string& object,
               std::ostream& out) {
  const Group g = load_group(cfg);
  std::vector<Element> vertices;
  if (cfg.all_vertices) {
    for (std::uint32_t id = 0; id < g.order(); ++id)
      vertices.push_back(Element{id});
  } else if (!cfg.interval_arg.empty()) {
    const std::size_t comma = cfg.interval_arg.find(',');
    if (comma == std::string::npos)
      throw UsageError("--interval expects \"u,w\"");
    const Element u = g.parse(cfg.interval_arg.substr(0, comma));
    const Element w = g.parse(cfg.interval_arg.substr(comma + 1));
    if (!g.bruhat_leq(u, w))
      throw NotComparableError(g.display(u) + " is not below " + g.display(w) +
                               " in Bruhat order");
    vertices = interval(g, u, w, OrderKind::Bruhat).members;
  } else if (!cfg.coset_arg.empty()) {
    // I:x:J with I, J comma-separated generator lists (may be empty).
    const std::size_t c1 = cfg.coset_arg.find(':');
    const std::size_t c2 = c1 == std::string::npos
                               ? std::string::npos
                               : cfg.coset_arg.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw UsageError("--coset expects \"I:x:J\"");
    const GenMask I = parse_gen_set(g, cfg.coset_arg.substr(0, c1));
    const Element x = g.parse(cfg.coset_arg.substr(c1 + 1, c2 - c1 - 1));
    const GenMask J = parse_gen_set(g, cfg.coset_arg.substr(c2 + 1));
    vertices = double_coset(g, I, x, J).members;
  } else {
    throw UsageError("export needs one of --interval, --coset or --all");
  }

  const bool short_only = object == "hasse";
  const auto graph = bruhat_graph(g, vertices, short_only);

  if (cfg.format == "dot" || cfg.format == "text") {
    emit(cfg, out, to_dot(g, graph));
    return 0;
  }
  if (cfg.format == "json") {
    const auto prof = degree_profile(graph);
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "export";
    j["object"] = object;
    j["type"] = g.type().name();
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
      ordered_json n;
      n["name"] = g.display(graph.vertices[i]);
      n["length"] = g.length(graph.vertices[i]);
      n["in"] = prof.in[i];
      n["out"] = prof.out[i];
      nodes.push_back(n);
    }
    ordered_json edges = ordered_json::array();
    for (const auto& e : graph.edges) {
      ordered_json je;
      je["from"] = g.display(graph.vertices[e.from]);
      je["to"] = g.display(graph.vertices[e.to]);
      je["short"] = e.is_short;
      edges.push_back(je);
    }
    j["nodes"] = nodes;
    j["edges"] = edges;
    emit(cfg, out, json_dump(j));
    return 0;
  }
  throw UsageError("export supports --format dot or json");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "finite Coxeter groups, parabolic double coset systems, Bruhat "
      "graphs and their verification suites"};
  app.name("coxeter-cosets");
  Config cfg;
  app.add_option("--type", cfg.type_label,
                 "type label, e.g. A3, B3, H3, I2(7), A1xA2");
  app.add_option("--matrix", cfg.matrix_path,
                 "JSON Coxeter matrix file {\"rank\": n, \"m\": [[...]]}");
  app.add_option("--format", cfg.format, "text | json | csv | dot")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--out", cfg.out_path, "write output to a file");
  app.add_option("--cap", cfg.cap, "element/node cap (default 1000000)");
  app.add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");
  app.fallthrough();
  app.require_subcommand(1);

  auto* sc_group = app.add_subcommand("group", "group summary");

  auto* sc_cosets = app.add_subcommand("cosets", "coset system listings");
  std::string cosets_kind;
  sc_cosets->add_option("kind", cosets_kind, "delta | xi | sigma")
      ->required()
      ->check(CLI::IsMember({"delta", "xi", "sigma"}));
  sc_cosets->add_option("--component", cfg.component,
                        "restrict to the w-component");
  sc_cosets->add_flag("--table", cfg.per_w_table,
                      "include the per-w delta table");

  auto* sc_verify = app.add_subcommand("verify", "exhaustive verification");
  std::string suite;
  sc_verify
      ->add_option("suite", suite,
                   "regularity | degree-invariance | out-eulerian | "
                   "structure | deodhar | lifting | all")
      ->required()
      ->check(CLI::IsMember({"regularity", "degree-invariance", "out-eulerian",
                             "structure", "deodhar", "lifting", "all"}));

  auto* sc_poly = app.add_subcommand("poly", "polynomial computations");
  std::string which;
  sc_poly
      ->add_option("which", which, "poincare | eulerian4 | directional | inout")
      ->required()
      ->check(CLI::IsMember({"poincare", "eulerian4", "directional", "inout"}));
  sc_poly->add_option("--w", cfg.w_arg, "element (one-line or s-word)");
  sc_poly->add_option("--eval", cfg.eval_arg,
                      "evaluate, e.g. \"2,2,2,2\" or \"q=-1\"");
  sc_poly->add_option("--kind", cfg.kind, "L | R | C (directional)");

  auto* sc_export = app.add_subcommand("export", "graph exports");
  std::string object;
  sc_export->add_option("object", object, "graph | hasse")
      ->required()
      ->check(CLI::IsMember({"graph", "hasse"}));
  sc_export->add_option("--interval", cfg.interval_arg, "u,w");
  sc_export->add_option("--coset", cfg.coset_arg, "I:x:J");
  sc_export->add_flag("--all", cfg.all_vertices, "whole group");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sc_group->parsed()) return cmd_group(cfg, out);
    if (sc_cosets->parsed()) return cmd_cosets(cfg, cosets_kind, out);
    if (sc_verify->parsed()) return cmd_verify(cfg, suite, out, err);
    if (sc_poly->parsed()) return cmd_poly(cfg, which, out);
    if (sc_export->parsed()) return cmd_export(cfg, object, out);
    err << "error: no command\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coxeter
