#pragma once

#include "yao/walk.hpp"

namespace yao {

/// Which construction produced the spanning walk of an L-infinity edge ab,
/// with c the Y_4 neighbour of a in the quadrant holding b and b' the end of
/// P_R(b -> c).
enum class LinfSpanCase {
  DirectEdge,     // ab is already a Y_4 edge
  MeetsAc,        // P_R(b -> c) meets ac
  ViaBPrime,      // P_R(b' -> a) misses ab but meets ac
  ViaCToBPrime,   // P_R(b' -> a) misses ab and ac; P_R(c -> b') closes the loop
  ReachesA,       // P_R(b' -> a) ends at a
  CrossesAb,      // P_R(b' -> a) crosses ab at de; joined via e
};

const char* to_string(LinfSpanCase c);

/// Per-case length factor the construction is guaranteed to respect.
double case_bound_factor(LinfSpanCase c);

struct LinfSpan {
  Walk walk;  // a to b in Y_4
  LinfSpanCase kind;
};

/// A walk in the L2 graph `y4` between the endpoints of the directed edge
/// a -> b of `y4_inf`, of length at most (29 + 23 sqrt(2))|ab|.
LinfSpan linf_edge_short_path(const YaoGraph& y4, const YaoGraph& y4_inf, NodeId a, NodeId b);

}  // namespace yao
