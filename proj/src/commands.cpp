#include "yao/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "yao/analysis.hpp"
#include "yao/bounds.hpp"
#include "yao/crossing.hpp"
#include "yao/generate.hpp"
#include "yao/io.hpp"
#include "yao/linf_span.hpp"
#include "yao/paths.hpp"
#include "yao/svg.hpp"

namespace yao {

namespace {

using nlohmann::json;

json pair_json(NodeId u, NodeId v) { return json::array({u, v}); }

json edge_json(DirectedEdge e) { return pair_json(e.source, e.target); }

// Ratios above this many entries are summarised rather than listed.
constexpr std::size_t kMaxListed = 20;

json check_stretch(const YaoGraph& g) {
  const StretchReport report = stretch_factor(g, g.metric());
  std::optional<double> bound;
  std::string bound_name;
  if (g.metric() == Metric::Linf) {
    bound = bounds::kY4Inf;
    bound_name = "y4_inf";
  } else if (auto b = yao_l2_bound(g.k())) {
    bound = *b;
    bound_name = g.k() == 4 ? "y4" : "theta";
  }
  json j{{"name", "stretch"},
         {"metric", to_string(g.metric())},
         {"measured", report.unreachable_pairs ? json(nullptr) : json(report.max_stretch)},
         {"unreachable_pairs", report.unreachable_pairs},
         {"bound", bound ? json(*bound) : json(nullptr)}};
  if (bound) j["bound_kind"] = bound_name;
  if (g.metric() == Metric::L2 && g.k() >= 9) j["alt_bound"] = bose_bound(g.k());
  j["witness"] = report.witness ? pair_json(report.witness->first, report.witness->second)
                                : json(nullptr);
  bool pass = true;
  if (bound) pass = report.unreachable_pairs == 0 && within_bound(report.max_stretch, *bound);
  j["pass"] = pass;
  return j;
}

json check_planarity_report(const YaoGraph& g) {
  const auto crossings = check_planarity(g);
  const bool claimed = g.metric() == Metric::Linf;
  json listed = json::array();
  for (std::size_t i = 0; i < std::min(crossings.size(), kMaxListed); ++i) {
    listed.push_back({pair_json(crossings[i].first.u, crossings[i].first.v),
                      pair_json(crossings[i].second.u, crossings[i].second.v)});
  }
  return {{"name", "planarity"},
          {"claimed_planar", claimed},
          {"crossings", crossings.size()},
          {"witness", listed},
          {"pass", !claimed || crossings.empty()}};
}

struct Worst {
  double ratio = 0.0;
  json witness = nullptr;

  void offer(double r, json w) {
    if (r > ratio || witness.is_null()) {
      ratio = r;
      witness = std::move(w);
    }
  }
};

json check_lemma_bounds(const YaoGraph& g) {
  json j{{"name", "lemma-bounds"}};
  if (g.k() != 4) {
    j["skipped"] = "only defined for k = 4";
    j["pass"] = true;
    return j;
  }
  const PointSet& pts = g.points();
  if (g.metric() == Metric::Linf) {
    // Every edge's open square must be empty; planarity rests on it.
    std::size_t violations = 0;
    json witness = nullptr;
    for (const DirectedEdge& e : g.edges()) {
      for (const Point& p : pts) {
        if (in_open_square(pts[e.source], pts[e.target], p)) {
          if (violations++ == 0) witness = {edge_json(e), p.id};
        }
      }
    }
    j["empty_square_violations"] = violations;
    j["witness"] = witness;
    j["pass"] = violations == 0;
    return j;
  }

  std::size_t failures = 0;
  Worst len, hop;
  json failure = nullptr;
  for (NodeId a = 0; a < g.size(); ++a) {
    for (NodeId b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      try {
        const Walk w = truncated_path(g, a, b);
        const double ab = dist(pts[a], pts[b], Metric::L2);
        len.offer(w.length(Metric::L2) / ab, pair_json(a, b));
        if (auto h = w.longest_hop()) hop.offer(w.hop_length(*h, Metric::L2) / ab, pair_json(a, b));
      } catch (const InvariantViolation& e) {
        if (failures++ == 0) failure = {{"pair", pair_json(a, b)}, {"error", e.what()}};
      }
    }
  }
  const auto crossings = crossing_edge_pairs(g);
  std::size_t same_quadrant = 0, quad_failures = 0;
  json quad_witness = nullptr;
  for (const auto& [ab, cd] : crossings) {
    if (same_quadrant_pair(pts, ab, cd)) ++same_quadrant;
    if (!check_quad_lemma(pts, ab, cd)) {
      if (quad_failures++ == 0) quad_witness = {edge_json(ab), edge_json(cd)};
    }
  }
  j["truncated"] = {{"pairs", g.size() * (g.size() - 1)},
                    {"failures", failures},
                    {"max_length_ratio", len.ratio},
                    {"length_bound", bounds::kSqrt2},
                    {"max_hop_ratio", hop.ratio},
                    {"hop_bound", 1.0},
                    {"witness", len.witness},
                    {"failure", failure}};
  j["crossings"] = crossings.size();
  j["same_quadrant_crossings"] = same_quadrant;
  j["shortest_side_failures"] = quad_failures;
  j["shortest_side_witness"] = quad_witness;
  j["pass"] = failures == 0 && same_quadrant == 0 && quad_failures == 0;
  return j;
}

json linf_sweep(const YaoGraph& y4, const YaoGraph& y4_inf) {
  const PointSet& pts = y4.points();
  std::size_t failures = 0, oracle_failures = 0;
  Worst worst;
  json failure = nullptr;
  std::map<std::string, std::size_t> cases;
  for (const DirectedEdge& e : y4_inf.edges()) {
    try {
      const LinfSpan span = linf_edge_short_path(y4, y4_inf, e.source, e.target);
      ++cases[to_string(span.kind)];
      const double len = span.walk.length(Metric::L2);
      worst.offer(len / dist(pts[e.source], pts[e.target], Metric::L2), edge_json(e));
      const ShortestPath sp = shortest_path(y4, e.source, e.target, Metric::L2);
      if (!within_bound(sp.length, len)) ++oracle_failures;
    } catch (const InvariantViolation& ex) {
      if (failures++ == 0) failure = {{"edge", edge_json(e)}, {"error", ex.what()}};
    }
  }
  return {{"edges", y4_inf.edges().size()},
          {"failures", failures},
          {"oracle_failures", oracle_failures},
          {"max_ratio", worst.ratio},
          {"bound", bounds::kLinfEdge},
          {"witness", worst.witness},
          {"cases", cases},
          {"failure", failure}};
}

json check_path_bounds(const YaoGraph& g) {
  json j{{"name", "path-bounds"}};
  if (g.k() != 4) {
    j["skipped"] = "only defined for k = 4";
    j["pass"] = true;
    return j;
  }
  bool pass = true;
  if (g.metric() == Metric::L2) {
    const PointSet& pts = g.points();
    std::size_t failures = 0;
    Worst len, hop;
    json failure = nullptr;
    int max_depth = 0;
    const auto crossings = crossing_edge_pairs(g);
    for (const auto& [ab, cd] : crossings) {
      try {
        const CrossingPath cp = crossing_short_path(g, ab, cd);
        const double xy = dist(pts[cp.x], pts[cp.y], Metric::L2);
        if (xy == 0.0) continue;
        len.offer(cp.walk.length(Metric::L2) / xy, {edge_json(ab), edge_json(cd)});
        if (auto h = cp.walk.longest_hop()) hop.offer(cp.walk.hop_length(*h, Metric::L2) / xy, nullptr);
        max_depth = std::max(max_depth, cp.depth);
      } catch (const InvariantViolation& e) {
        if (failures++ == 0) failure = {{"pair", {edge_json(ab), edge_json(cd)}}, {"error", e.what()}};
      }
    }
    j["crossing_paths"] = {{"pairs", crossings.size()},
                           {"failures", failures},
                           {"max_length_ratio", len.ratio},
                           {"bound", bounds::kRecross},
                           {"max_hop_ratio", hop.ratio},
                           {"max_depth", max_depth},
                           {"witness", len.witness},
                           {"failure", failure}};
    pass = failures == 0;
    const YaoGraph companion = build_yao(g.points(), 4, Metric::Linf, TiePolicy::MostCounterclockwise);
    j["linf_edges"] = linf_sweep(g, companion);
  } else {
    const YaoGraph companion = build_yao(g.points(), 4, Metric::L2, TiePolicy::LowestIndex);
    j["linf_edges"] = linf_sweep(companion, g);
  }
  pass = pass && j["linf_edges"]["failures"] == 0 && j["linf_edges"]["oracle_failures"] == 0;
  j["pass"] = pass;
  return j;
}

std::string fmt_measure(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_number_float()) return fmt::format("{:.6f}", v.get<double>());
  return v.dump();
}

std::string summary_line(const json& c) {
  std::string line = fmt::format("{}: {}", c["name"].get<std::string>(),
                                 c["pass"].get<bool>() ? "PASS" : "FAIL");
  const std::string name = c["name"];
  if (c.contains("skipped")) return line + " (skipped: " + c["skipped"].get<std::string>() + ")";
  if (name == "stretch") {
    line += fmt::format(" measured={} bound={}", fmt_measure(c["measured"]), fmt_measure(c["bound"]));
    if (c.contains("alt_bound")) line += " alt_bound=" + fmt_measure(c["alt_bound"]);
    if (!c["witness"].is_null()) line += " witness=" + c["witness"].dump();
  } else if (name == "planarity") {
    line += fmt::format(" crossings={}", c["crossings"].get<std::size_t>());
  } else if (name == "lemma-bounds") {
    if (c.contains("empty_square_violations")) {
      line += " empty_square_violations=" + c["empty_square_violations"].dump();
    } else {
      line += fmt::format(" pr_max={} crossings={} same_quadrant={} side_failures={}",
                          fmt_measure(c["truncated"]["max_length_ratio"]),
                          c["crossings"].dump(), c["same_quadrant_crossings"].dump(),
                          c["shortest_side_failures"].dump());
    }
  } else if (name == "path-bounds") {
    if (c.contains("crossing_paths")) {
      line += fmt::format(" recross_max={}", fmt_measure(c["crossing_paths"]["max_length_ratio"]));
    }
    line += fmt::format(" linf_edge_max={} linf_edges={}",
                        fmt_measure(c["linf_edges"]["max_ratio"]), c["linf_edges"]["edges"].dump());
  }
  return line;
}

NodeId parse_node(const YaoGraph& g, long long id, const char* what) {
  if (id < 0 || static_cast<std::size_t>(id) >= g.size()) {
    throw PreconditionError(fmt::format("{} node {} out of range [0, {})", what, id, g.size()));
  }
  return static_cast<NodeId>(id);
}

struct PathResult {
  json report;
  std::optional<Walk> walk;
  bool pass = true;
};

PathResult run_path(const YaoGraph& g, NodeId from, NodeId to, const std::string& kind,
                    const std::optional<YaoGraph>& linf_graph) {
  PathResult r;
  const PointSet& pts = g.points();
  const double ab = dist(pts[from], pts[to], Metric::L2);
  json bound = nullptr;
  std::optional<Walk> walk;
  std::string case_name;
  if (kind == "p") {
    walk = directed_path(g, from, to);
  } else if (kind == "pr") {
    walk = truncated_path(g, from, to);
    if (g.metric() == Metric::L2) bound = {{"factor", bounds::kSqrt2}};
  } else if (kind.rfind("quadrant:", 0) == 0) {
    const std::string digits = kind.substr(9);
    int q = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || q < 1 || q > 4) {
      throw PreconditionError(fmt::format("invalid kind '{}': quadrant must be 1..4", kind));
    }
    walk = quadrant_walk(g, from, q, from == to ? std::nullopt : std::optional<NodeId>(to));
  } else if (kind == "linf-span") {
    if (!linf_graph) throw PreconditionError("kind linf-span requires --linf-graph");
    const LinfSpan span = linf_edge_short_path(g, *linf_graph, from, to);
    walk = span.walk;
    case_name = to_string(span.kind);
    bound = {{"factor", bounds::kLinfEdge}};
  } else {
    throw PreconditionError(fmt::format("invalid kind '{}'", kind));
  }
  r.report = {{"kind", kind}, {"from", from}, {"to", to}, {"walk", walk_to_json(*walk, g.metric())}};
  if (!case_name.empty()) r.report["case"] = case_name;
  if (!bound.is_null()) {
    const double len = walk->length(Metric::L2);
    const double value = bound["factor"].get<double>() * ab;
    bound["value"] = pts.to_input_units(value);
    bound["ratio"] = ab > 0 ? len / ab : 0.0;
    bound["pass"] = within_bound(len, value);
    r.pass = bound["pass"];
  }
  r.report["bound"] = bound;
  r.report["pass"] = r.pass;
  r.walk = std::move(walk);
  return r;
}

// Nodes of a walk JSON as written by `path`, either top-level or under "walk".
std::vector<NodeId> read_walk_nodes(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path.string()));
  try {
    const json j = json::parse(in);
    const json& w = j.contains("walk") ? j.at("walk") : j;
    return w.at("nodes").get<std::vector<NodeId>>();
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace

json verify_graph(const YaoGraph& g, const std::vector<std::string>& checks) {
  json out{{"k", g.k()}, {"metric", to_string(g.metric())}, {"nodes", g.size()},
           {"edges", g.edges().size()}, {"checks", json::array()}};
  bool pass = true;
  for (const std::string& name : kAllChecks) {
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
    json c;
    if (name == "stretch") c = check_stretch(g);
    else if (name == "planarity") c = check_planarity_report(g);
    else if (name == "lemma-bounds") c = check_lemma_bounds(g);
    else c = check_path_bounds(g);
    pass = pass && c["pass"].get<bool>();
    out["checks"].push_back(std::move(c));
  }
  out["pass"] = pass;
  return out;
}

json bound_report(std::optional<int> k, std::optional<double> theta) {
  if (k.has_value() == theta.has_value()) throw ConfigError("give exactly one of --k, --theta");
  if (theta) return {{"theta", *theta}, {"theta_bound", theta_bound(*theta)}};
  if (*k < 1) throw DomainError(fmt::format("k must be positive, got {}", *k));
  json j{{"k", *k}};
  if (*k == 4) {
    j["y4"] = bounds::kY4;
    j["y4_inf"] = bounds::kY4Inf;
    j["linf_edge"] = bounds::kLinfEdge;
    j["recross"] = bounds::kRecross;
  }
  if (*k >= 7) {
    j["theta"] = 2.0 * std::numbers::pi / *k;
    j["theta_bound"] = theta_bound(2.0 * std::numbers::pi / *k);
  }
  if (*k >= 9) j["bose_bound"] = bose_bound(*k);
  const auto best = yao_l2_bound(*k);
  j["l2_bound"] = best ? json(*best) : json(nullptr);
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yao graph construction and spanner verification", "yao"};
  app.require_subcommand(1);

  std::size_t gen_n = 0;
  std::string gen_dist = "uniform", gen_out;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a point file");
  gen->add_option("--n", gen_n, "number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--dist", gen_dist, "uniform, grid, grid-jitter, convex or cluster");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output CSV")->required();

  std::string build_in, build_out, build_metric = "l2", build_tie;
  int build_k = 4;
  auto* build = app.add_subcommand("build", "build a Yao graph from a point file");
  build->add_option("input", build_in, "point CSV")->required();
  build->add_option("--k", build_k, "number of cones");
  build->add_option("--metric", build_metric, "l2 or linf");
  build->add_option("--tie", build_tie, "lowest_index or most_ccw (default by metric)");
  build->add_option("--out", build_out, "output graph JSON")->required();

  std::string verify_in, verify_report;
  std::vector<std::string> verify_checks = kAllChecks;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "check spanner properties of a graph");
  verify->add_option("graph", verify_in, "graph JSON")->required();
  verify->add_option("--checks", verify_checks, "comma separated subset of checks")
      ->delimiter(',')
      ->check(CLI::IsMember(kAllChecks));
  verify->add_option("--report", verify_report, "write the JSON report here");
  verify->add_flag("--json", verify_json, "print the JSON report instead of text");

  std::string path_in, path_kind = "p", path_linf, path_svg;
  long long path_from = 0, path_to = 0;
  auto* path = app.add_subcommand("path", "construct a walk between two nodes");
  path->add_option("graph", path_in, "graph JSON")->required();
  path->add_option("--from", path_from, "start node")->required();
  path->add_option("--to", path_to, "target node")->required();
  path->add_option("--kind", path_kind, "p, pr, quadrant:1..4 or linf-span");
  path->add_option("--linf-graph", path_linf, "companion Y4-infinity graph for linf-span");
  path->add_option("--svg", path_svg, "also write an SVG with the walk highlighted");

  std::string svg_in, svg_out, svg_walk;
  auto* svg = app.add_subcommand("svg", "render a graph");
  svg->add_option("graph", svg_in, "graph JSON")->required();
  svg->add_option("--out", svg_out, "output SVG")->required();
  svg->add_option("--walk", svg_walk, "walk JSON (as printed by path) to highlight");

  std::optional<int> bound_k;
  std::optional<double> bound_theta;
  auto* bound = app.add_subcommand("bound", "print closed-form stretch bounds");
  auto* k_opt = bound->add_option("--k", bound_k, "number of cones");
  bound->add_option("--theta", bound_theta, "cone angle in radians")->excludes(k_opt);

  std::vector<std::string> argv_store{"yao"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      write_point_file(gen_out, generate_points(gen_n, parse_distribution(gen_dist), gen_seed));
      return kExitOk;
    }
    if (*build) {
      const PointSet points = read_point_file(build_in);
      if (points.empty()) throw InputError(fmt::format("'{}' contains no points", build_in));
      const Metric metric = parse_metric(build_metric);
      TiePolicy tie = metric == Metric::Linf ? TiePolicy::MostCounterclockwise : TiePolicy::LowestIndex;
      if (!build_tie.empty()) tie = parse_tie(build_tie);
      write_graph_file(build_out, build_yao(points, build_k, metric, tie));
      return kExitOk;
    }
    if (*verify) {
      const YaoGraph g = read_graph_file(verify_in);
      const json report = verify_graph(g, verify_checks);
      if (!verify_report.empty()) write_text_file(verify_report, report.dump(2) + "\n");
      if (verify_json) {
        out << report.dump(2) << "\n";
      } else {
        for (const json& c : report["checks"]) out << summary_line(c) << "\n";
        out << "overall: " << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
      }
      return report["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
    }
    if (*path) {
      const YaoGraph g = read_graph_file(path_in);
      std::optional<YaoGraph> linf;
      if (!path_linf.empty()) linf = read_graph_file(path_linf);
      const NodeId from = parse_node(g, path_from, "--from");
      const NodeId to = parse_node(g, path_to, "--to");
      const PathResult r = run_path(g, from, to, path_kind, linf);
      if (!path_svg.empty()) write_text_file(path_svg, render_svg(g, &*r.walk));
      out << r.report.dump(2) << "\n";
      return r.pass ? kExitOk : kExitCheckFailed;
    }
    if (*svg) {
      const YaoGraph g = read_graph_file(svg_in);
      if (svg_walk.empty()) {
        write_text_file(svg_out, render_svg(g));
      } else {
        const std::vector<NodeId> nodes = read_walk_nodes(svg_walk);
        if (nodes.empty()) throw ParseError(fmt::format("{}: empty walk", svg_walk));
        for (NodeId id : nodes) parse_node(g, static_cast<long long>(id), "walk");
        const Walk w = Walk::from_nodes(g, nodes);
        write_text_file(svg_out, render_svg(g, &w));
      }
      return kExitOk;
    }
    if (*bound) {
      out << bound_report(bound_k, bound_theta).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const InvariantViolation& e) {
    err << "error: invariant violated: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace yao
