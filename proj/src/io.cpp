#include "yao/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace yao {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path.string()));
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

}  // namespace

PointSet read_point_csv(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> coords;
  std::vector<std::size_t> line_of;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip(line);
    if (view.empty()) continue;
    auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(fmt::format("line {}: expected 'x,y'", line_no));
    }
    std::string_view xs = strip(view.substr(0, comma));
    std::string_view ys = strip(view.substr(comma + 1));
    if (first_content && xs == "x" && ys == "y") {
      first_content = false;
      continue;
    }
    first_content = false;
    coords.emplace_back(std::string(xs), std::string(ys));
    line_of.push_back(line_no);
  }
  if (coords.empty()) throw ParseError("point file contains no points");
  try {
    return PointSet::from_decimal(coords);
  } catch (const DuplicatePointError& e) {
    throw ParseError(fmt::format("line {}: duplicates the point on line {}",
                                 line_of[e.second()], line_of[e.first()]));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

PointSet read_point_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_point_csv(in);
}

void write_point_csv(std::ostream& out, const PointSet& points) {
  for (const Point& p : points) {
    out << points.format_coordinate(p.x) << ',' << points.format_coordinate(p.y) << '\n';
  }
}

void write_point_file(const std::filesystem::path& path, const PointSet& points) {
  auto out = open_output(path);
  write_point_csv(out, points);
}

Metric parse_metric(const std::string& s) {
  if (s == "l2") return Metric::L2;
  if (s == "linf") return Metric::Linf;
  throw ParseError(fmt::format("unknown metric '{}'", s));
}

TiePolicy parse_tie(const std::string& s) {
  if (s == "lowest_index") return TiePolicy::LowestIndex;
  if (s == "most_ccw") return TiePolicy::MostCounterclockwise;
  throw ParseError(fmt::format("unknown tie policy '{}'", s));
}

nlohmann::json graph_to_json(const YaoGraph& g) {
  nlohmann::json points = nlohmann::json::array();
  for (const Point& p : g.points()) {
    points.push_back({g.points().format_coordinate(p.x), g.points().format_coordinate(p.y)});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const DirectedEdge& e : g.edges()) edges.push_back({e.source, e.target});
  return {{"k", g.k()},
          {"metric", to_string(g.metric())},
          {"tie", to_string(g.tie())},
          {"points", std::move(points)},
          {"edges", std::move(edges)}};
}

YaoGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int k = j.at("k").get<int>();
    const Metric metric = parse_metric(j.at("metric").get<std::string>());
    const TiePolicy tie = parse_tie(j.at("tie").get<std::string>());
    std::vector<std::pair<std::string, std::string>> coords;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("each point must be [x, y]");
      auto coord = [](const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_number()) return fmt::format("{}", v.get<double>());
        throw ParseError("coordinates must be strings or numbers");
      };
      coords.emplace_back(coord(p[0]), coord(p[1]));
    }
    if (coords.empty()) throw ParseError("graph has no points");
    std::vector<DirectedEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be [source, target]");
      edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
    }
    return YaoGraph(PointSet::from_decimal(coords), k, metric, tie, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("malformed graph file: {}", e.what()));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(fmt::format("invalid graph: {}", e.what()));
  }
}

YaoGraph read_graph_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("'{}' is not valid JSON: {}", path.string(), e.what()));
  }
  return graph_from_json(j);
}

void write_graph_file(const std::filesystem::path& path, const YaoGraph& g) {
  write_text_file(path, graph_to_json(g).dump(1) + "\n");
}

nlohmann::json walk_to_json(const Walk& w, Metric m) {
  const PointSet& points = w.graph().points();
  nlohmann::json hops = nlohmann::json::array();
  for (std::size_t i = 0; i < w.hops(); ++i) {
    hops.push_back({{"from", w.node(i)},
                    {"to", w.node(i + 1)},
                    {"forward", w.forward(i)},
                    {"length", points.to_input_units(w.hop_length(i, m))}});
  }
  return {{"nodes", std::vector<NodeId>(w.nodes().begin(), w.nodes().end())},
          {"hops", std::move(hops)},
          {"metric", to_string(m)},
          {"total", points.to_input_units(w.length(m))}};
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
  if (!out) throw InputError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace yao
