#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "yao/walk.hpp"

namespace yao {

/// Error in a PointFile or GraphFile, carrying a 1-based line where known.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Decimal CSV, one "x,y" per line; an optional "x,y" header line is skipped.
/// Blank lines are ignored. Node ids follow line order.
PointSet read_point_csv(std::istream& in);
PointSet read_point_file(const std::filesystem::path& path);
void write_point_csv(std::ostream& out, const PointSet& points);
void write_point_file(const std::filesystem::path& path, const PointSet& points);

Metric parse_metric(const std::string& s);
TiePolicy parse_tie(const std::string& s);

/// {"k", "metric", "tie", "points": [["x","y"], ...], "edges": [[s,t], ...]}
/// with coordinates as decimal strings.
nlohmann::json graph_to_json(const YaoGraph& g);
YaoGraph graph_from_json(const nlohmann::json& j);
YaoGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const YaoGraph& g);

/// Node sequence, per-hop lengths and total in input units.
nlohmann::json walk_to_json(const Walk& w, Metric m);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace yao
