#pragma once

#include <cstddef>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

// Construction paths whose output is a topology by construction and skips the
// quadratic axiom scan.
class TopologyBuilder {
 public:
  static SoftTopology trusted(ContextPtr ctx, std::vector<SoftSet> opens);
  /// All unions of subfamilies of an intersection-closed `base`.
  static std::vector<SoftSet> unions_of(const ContextPtr& ctx, std::vector<SoftSet> base,
                                        std::size_t size_cap);
};

}  // namespace softtop
