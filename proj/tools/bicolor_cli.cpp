// bicolor: build, check and draw 1-plane alternating routes on red/blue
// point sets.  Point indices are 1-based on the command line and in files.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bicolor/bicolor.hpp"
#include "json.hpp"

using namespace bicolor;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionViolated("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionViolated("cannot write " + path);
  out << text;
}

struct Common {
  bool convex = false;
  bool json = false;
  int jobs = 1;
  std::string route_out;
  std::string svg_out;
};

// A solved or checked instance in the numbering of the input file.
struct Solved {
  BicoloredSet set;
  AltRoute route;
  VerifyOptions verify;
};

// Maps a convex-view route back to input indices and re-annotates it
// against the original points.
Solved lift(const Instance& inst, const ConvexView& view, const AltRoute& r, VerifyOptions v) {
  auto set = to_set(inst);
  std::vector<int> ids;
  ids.reserve(r.vertices.size());
  for (int x : r.vertices) ids.push_back(view.position[static_cast<std::size_t>(x)]);
  if (v.endpoints) v.endpoints = std::make_pair(view.position[static_cast<std::size_t>(v.endpoints->first)],
                                                 view.position[static_cast<std::size_t>(v.endpoints->second)]);
  auto route = make_route(set, r.kind, std::move(ids));
  return {std::move(set), std::move(route), v};
}

int inverse(const ConvexView& v, int input_index) {
  auto it = std::find(v.position.begin(), v.position.end(), input_index);
  return static_cast<int>(it - v.position.begin());
}

Solved solve_cycle(const Instance& inst, bool convex) {
  if (convex || inst.is_convex()) {
    auto view = convex_view(inst);
    return lift(inst, view, optimum_cycle(view.set), {});
  }
  auto set = to_set(inst);
  auto r = build_cycle(set);
  return {std::move(set), std::move(r), {}};
}

Solved solve_path(const Instance& inst, bool convex, int from, int to) {
  VerifyOptions v;
  v.endpoints = std::make_pair(from, to);
  if (convex || inst.is_convex()) {
    auto view = convex_view(inst);
    const int a = inverse(view, from), b = inverse(view, to);
    if (a >= view.set.size() || b >= view.set.size()) throw PreconditionViolated("endpoint out of range");
    const bool balanced = view.set.red_count() == view.set.blue_count();
    if (balanced && view.set.color(a) != view.set.color(b) && is_special(view.set, a, b)) v.expect_one_double = true;
    VerifyOptions vv = v;
    vv.endpoints = std::make_pair(a, b);
    return lift(inst, view, optimum_path(view.set, a, b), vv);
  }
  auto set = to_set(inst);
  auto r = build_path(set, from, to);
  return {std::move(set), std::move(r), v};
}

struct Outcome {
  int code = kOk;
  std::string out;  // text for stdout
  std::string err;
  nlohmann::ordered_json json;
};

Outcome emit(const std::string& name, const Solved& s, const Common& c) {
  Outcome o;
  auto rep = verify_route(s.set, s.route, s.verify);
  o.code = rep.ok() ? kOk : kFailed;
  if (c.json) {
    o.json = report_json(name, s.route, rep);
  } else {
    o.out = report_text(name, rep);
    if (c.route_out.empty()) o.out += format_route(s.route);
  }
  if (!c.route_out.empty()) spill(c.route_out, format_route(s.route));
  if (!c.svg_out.empty()) spill(c.svg_out, render_svg(s.set, s.route));
  return o;
}

template <class F>
Outcome guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const SpecialConfiguration& e) {
    return {kFailed, "", name + ": " + e.what() + "\n", {}};
  } catch (const Error& e) {
    return {kBadInput, "", name + ": " + e.what() + "\n", {}};
  } catch (const std::exception& e) {
    return {kBadInput, "", name + ": internal error: " + e.what() + "\n", {}};
  }
}

// Runs `work` over all files, `jobs` at a time, and prints in input order.
template <class F>
int batch(const std::vector<std::string>& files, const Common& c, F work) {
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      results[i] = guarded(files[i], [&] { return work(files[i], parse_instance(slurp(files[i]))); });
  };
  const int k = std::clamp(c.jobs, 1, static_cast<int>(std::max<std::size_t>(files.size(), 1)));
  if (k == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int code = kOk;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (auto& r : results) {
    std::cout << r.out;
    std::cerr << r.err;
    if (c.json && !r.json.is_null()) all.push_back(r.json);
    code = std::max(code, r.code);
  }
  if (c.json) std::cout << (files.size() == 1 && all.size() == 1 ? all[0] : all).dump(2) << '\n';
  return code;
}

void add_common(CLI::App* app, Common& c, bool outputs) {
  app->add_flag("--convex", c.convex, "solve as a convex color sequence (points must be in convex position)");
  app->add_flag("--json", c.json, "print a JSON report");
  app->add_option("--jobs,-j", c.jobs, "instances processed in parallel")->check(CLI::Range(1, 256));
  if (outputs) {
    app->add_option("--route,-o", c.route_out, "write the route file here");
    app->add_option("--svg", c.svg_out, "write an SVG drawing here");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian alternating cycles and paths with few crossings on red/blue point sets"};
  app.require_subcommand(1);
  Common c;

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  std::string family = "random";
  int n = 4;
  std::uint64_t seed = 1;
  std::int64_t bbox = std::int64_t{1} << 20;
  std::string pattern;
  std::string hull_color = "R";
  std::string gen_out;
  gen->add_option("family", family, "random | convex | runs | nested")
      ->check(CLI::IsMember({"random", "convex", "runs", "nested"}));
  gen->add_option("--n", n, "points per color")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--bbox", bbox, "coordinates lie in [-bbox, bbox]");
  gen->add_option("--pattern", pattern, "run-length pattern for `runs`, e.g. R5B5 or (RB)25");
  gen->add_option("--hull-color", hull_color, "hull color for `nested`")->check(CLI::IsMember({"R", "B"}));
  gen->add_option("--output,-o", gen_out, "output file (default stdout)");

  // cycle / path
  std::vector<std::string> files;
  auto* cyc = app.add_subcommand("cycle", "build a 1-plane alternating cycle");
  cyc->add_option("instances", files, "instance files")->required();
  add_common(cyc, c, true);

  auto* path = app.add_subcommand("path", "build a 1-plane alternating path");
  int from = 0, to = 0;
  path->add_option("instances", files, "instance files")->required();
  path->add_option("--from", from, "first endpoint (1-based)");
  path->add_option("--to", to, "last endpoint (1-based)");
  add_common(path, c, true);

  // check
  auto* check = app.add_subcommand("check", "verify a route file against an instance");
  std::string inst_file, route_file;
  check->add_option("instance", inst_file)->required();
  check->add_option("route", route_file)->required();
  check->add_flag("--json", c.json, "print a JSON report");
  bool no_bound = false, allow_double = false;
  check->add_flag("--no-bound", no_bound, "skip the crossing bound check");
  check->add_flag("--special", allow_double, "expect exactly one edge crossed twice");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exhaustive minimum for small instances");
  orc->add_option("instance", inst_file)->required();
  orc->add_option("--from", from, "first endpoint (1-based)");
  orc->add_option("--to", to, "last endpoint (1-based)");
  orc->add_flag("--json", c.json, "print a JSON report");
  int max_points = 14;
  orc->add_option("--max-points", max_points, "refuse larger instances")->check(CLI::Range(1, 16));

  // svg
  auto* svg = app.add_subcommand("svg", "draw an instance and optionally a route");
  std::string svg_file;
  svg->add_option("instance", inst_file)->required();
  svg->add_option("route", route_file);
  svg->add_option("--output,-o", svg_file, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Instance inst;
      if (family == "random") inst = random_general(n, seed, bbox);
      if (family == "convex") inst = convex_random(n, seed);
      if (family == "runs") {
        if (pattern.empty()) throw PreconditionViolated("`runs` needs --pattern");
        inst = runs(pattern);
      }
      if (family == "nested") inst = nested(hull_color == "R" ? Color::Red : Color::Blue, n, seed);
      spill(gen_out, serialize_instance(inst));
      return kOk;
    }
    if (*cyc) {
      if (files.size() > 1 && (!c.route_out.empty() || !c.svg_out.empty()))
        throw PreconditionViolated("--route and --svg take a single instance");
      return batch(files, c, [&](const std::string& name, const Instance& inst) {
        return emit(name, solve_cycle(inst, c.convex), c);
      });
    }
    if (*path) {
      if (files.size() > 1 && (!c.route_out.empty() || !c.svg_out.empty()))
        throw PreconditionViolated("--route and --svg take a single instance");
      return batch(files, c, [&](const std::string& name, const Instance& inst) {
        std::pair<int, int> ends;
        if (from > 0 && to > 0) {
          ends = {from - 1, to - 1};
        } else if (inst.endpoints) {
          ends = *inst.endpoints;
        } else {
          throw PreconditionViolated("give --from and --to or an endpoints line");
        }
        return emit(name, solve_path(inst, c.convex, ends.first, ends.second), c);
      });
    }
    if (*check) {
      auto inst = parse_instance(slurp(inst_file));
      auto set = to_set(inst);
      auto route = parse_route(slurp(route_file));
      VerifyOptions v;
      v.check_bound = !no_bound;
      v.expect_one_double = allow_double;
      auto rep = verify_route(set, route, v);
      if (c.json) {
        std::cout << report_json(inst_file, route, rep).dump(2) << '\n';
      } else {
        std::cout << report_text(inst_file, rep);
      }
      return rep.ok() ? kOk : kFailed;
    }
    if (*orc) {
      auto inst = parse_instance(slurp(inst_file));
      auto set = to_set(inst);
      OracleQuery q = OracleQuery::cycle();
      if (from > 0 && to > 0) {
        q = OracleQuery::path(from - 1, to - 1);
      } else if (inst.endpoints) {
        q = OracleQuery::path(inst.endpoints->first, inst.endpoints->second);
      }
      OracleOptions opt;
      opt.max_points = max_points;
      opt.max_routes = 1;
      auto res = enumerate_min(set, q, opt);
      if (c.json) {
        nlohmann::ordered_json j;
        j["instance"] = inst_file;
        j["kind"] = kind_name(q.kind);
        j["min_crossings"] = res.min_crossings ? nlohmann::ordered_json(*res.min_crossings) : nlohmann::ordered_json(nullptr);
        j["exists_1plane"] = res.exists_1plane;
        j["all_optima_1plane"] = res.all_optima_1plane;
        auto& v = j["vertices"] = nlohmann::ordered_json::array();
        if (!res.optimal_routes.empty())
          for (int x : res.optimal_routes.front().vertices) v.push_back(x + 1);
        std::cout << j.dump(2) << '\n';
      } else if (!res.min_crossings) {
        std::cout << inst_file << ": no Hamiltonian alternating " << kind_name(q.kind) << '\n';
      } else {
        std::cout << inst_file << ": minimum " << *res.min_crossings << " crossings, "
                  << (res.exists_1plane ? "a 1-plane route exists" : "no 1-plane route") << '\n'
                  << format_route(res.optimal_routes.front());
      }
      return kOk;
    }
    if (*svg) {
      auto inst = parse_instance(slurp(inst_file));
      auto set = to_set(inst);
      AltRoute route;
      if (!route_file.empty()) route = parse_route(slurp(route_file));
      spill(svg_file, render_svg(set, route));
      return kOk;
    }
  } catch (const SpecialConfiguration& e) {
    std::cerr << "bicolor: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "bicolor: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "bicolor: internal error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
