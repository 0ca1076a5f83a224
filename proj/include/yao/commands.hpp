#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "yao/yao_graph.hpp"

namespace yao {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<std::string> kAllChecks{"stretch", "planarity", "lemma-bounds",
                                                 "path-bounds"};

/// Runs the selected checks; the result has "checks" (one object per check,
/// each with "name" and "pass") and an overall "pass".
nlohmann::json verify_graph(const YaoGraph& g, const std::vector<std::string>& checks);

/// Closed-form bounds for Y_k (k given) or for a cone angle (theta given).
nlohmann::json bound_report(std::optional<int> k, std::optional<double> theta);

/// Entry point of the `yao` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yao
