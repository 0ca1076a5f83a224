#pragma once

#include <functional>
#include <optional>

#include "yao/walk.hpp"

namespace yao {

/// P_i(a): follow the outgoing edge in quadrant `quadrant` (1..4) until
/// `stop` holds for the current node or the quadrant is empty. `stop` is not
/// evaluated on the start node.
Walk quadrant_walk(const YaoGraph& g, NodeId a, int quadrant,
                   const std::function<bool(NodeId)>& stop);

/// P_i(a, b) when `stop` is a node; walks to the end of P_i(a) when nullopt.
Walk quadrant_walk(const YaoGraph& g, NodeId a, int quadrant,
                   std::optional<NodeId> stop = std::nullopt);

/// P(a -> b): from each node take the edge in the quadrant containing b.
/// Checks that the walk never leaves the square centred at b whose boundary
/// contains a.
Walk directed_path(const YaoGraph& g, NodeId a, NodeId b);

/// P_R(a -> b): the prefix of P(a -> b) ending at the first node after `a`
/// that is not strictly inside the rectangle with diagonal ab. Nodes sharing
/// a coordinate with a or b are classified under the same tilt that assigns
/// quadrant boundary rays (see strictly_interior_tilted). On L2 graphs checks |walk| <= sqrt(2)|ab| and that no hop exceeds |ab|.
Walk truncated_path(const YaoGraph& g, NodeId a, NodeId b);

}  // namespace yao
