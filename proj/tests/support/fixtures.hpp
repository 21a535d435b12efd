#pragma once

#include <map>
#include <string>
#include <vector>

#include "softtop/context.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace fixtures {

using softtop::ContextPtr;
using softtop::SoftSet;
using softtop::SoftSpace;
using softtop::SoftTopology;
using Rows = std::map<std::string, std::vector<std::string>>;

inline ContextPtr ab_e12() { return softtop::Context::make({"a", "b"}, {"e1", "e2"}); }

inline SoftSet set(const ContextPtr& ctx, const Rows& rows) {
  return SoftSet::from_labels(ctx, rows);
}

// F={e1:{a},e2:{}}, G={e1:{a,b},e2:{b}}, H={e1:{b},e2:{}} over U={a,b}, E={e1,e2}.
inline SoftSet F(const ContextPtr& ctx) { return set(ctx, {{"e1", {"a"}}}); }
inline SoftSet G(const ContextPtr& ctx) { return set(ctx, {{"e1", {"a", "b"}}, {"e2", {"b"}}}); }
inline SoftSet H(const ContextPtr& ctx) { return set(ctx, {{"e1", {"b"}}}); }
inline SoftSet F1(const ContextPtr& ctx) { return set(ctx, {{"e1", {"a"}}, {"e2", {"a"}}}); }

// tau = {null, absolute, F1}.
inline SoftSpace f1_space(const ContextPtr& ctx) {
  return SoftSpace(
      SoftTopology::from_opens(ctx, {SoftSet::null(ctx), SoftSet::absolute(ctx), F1(ctx)}));
}

}  // namespace fixtures
