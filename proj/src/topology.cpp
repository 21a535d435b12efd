#include "softtop/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <unordered_map>
#include <unordered_set>

#include "softtop/error.hpp"
#include "softtop/internal/topology_builder.hpp"

namespace softtop {

std::size_t default_size_cap() {
  const char* env = std::getenv("SOFTTOP_SIZE_CAP");
  if (env == nullptr) return kDefaultSizeCap;
  std::size_t value = 0;
  const auto* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultSizeCap;
  return value;
}

std::string to_string(AxiomVerdict::Kind kind) {
  switch (kind) {
    case AxiomVerdict::Kind::kOk: return "ok";
    case AxiomVerdict::Kind::kMissingNull: return "missing_null";
    case AxiomVerdict::Kind::kMissingAbsolute: return "missing_absolute";
    case AxiomVerdict::Kind::kNotClosedUnderIntersection: return "not_closed_under_intersection";
    case AxiomVerdict::Kind::kNotClosedUnderUnion: return "not_closed_under_union";
  }
  return "unknown";
}

AxiomVerdict verify_axioms(const ContextPtr& ctx, std::span<const SoftSet> candidates) {
  for (const auto& c : candidates) require_same_context(c.context(), ctx, "verify_axioms");

  // Distinct members in key order, each remembering its first candidate index.
  std::vector<std::pair<SoftSet, std::size_t>> members;
  std::unordered_set<SoftSet, SoftSetHash> present;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (present.insert(candidates[i]).second) members.emplace_back(candidates[i], i);
  }
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  AxiomVerdict verdict;
  if (!present.contains(SoftSet::null(ctx))) {
    verdict.kind = AxiomVerdict::Kind::kMissingNull;
    return verdict;
  }
  if (!present.contains(SoftSet::absolute(ctx))) {
    verdict.kind = AxiomVerdict::Kind::kMissingAbsolute;
    return verdict;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!present.contains(soft_intersection(members[i].first, members[j].first))) {
        verdict.kind = AxiomVerdict::Kind::kNotClosedUnderIntersection;
        verdict.witness = std::pair{members[i].second, members[j].second};
        return verdict;
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!present.contains(soft_union(members[i].first, members[j].first))) {
        verdict.kind = AxiomVerdict::Kind::kNotClosedUnderUnion;
        verdict.witness = std::pair{members[i].second, members[j].second};
        return verdict;
      }
    }
  }
  return verdict;
}

SoftTopology TopologyBuilder::trusted(ContextPtr ctx, std::vector<SoftSet> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return SoftTopology(std::move(ctx), std::move(opens));
}

SoftTopology SoftTopology::from_opens(const ContextPtr& ctx, std::vector<SoftSet> opens) {
  auto verdict = verify_axioms(ctx, opens);
  if (!verdict.ok()) {
    std::string msg = to_string(verdict.kind);
    if (verdict.witness) {
      msg += " for " + opens[verdict.witness->first].to_string() + " and " +
             opens[verdict.witness->second].to_string();
    }
    throw Error(ErrorCode::kAxiomViolation, msg);
  }
  return TopologyBuilder::trusted(ctx, std::move(opens));
}

SoftTopology SoftTopology::indiscrete(const ContextPtr& ctx) {
  return TopologyBuilder::trusted(ctx, {SoftSet::null(ctx), SoftSet::absolute(ctx)});
}

SoftTopology SoftTopology::discrete(const ContextPtr& ctx, std::size_t size_cap) {
  const auto cells = ctx->cell_count();
  if (cells >= 63 || (std::size_t{1} << cells) > size_cap) {
    throw Error(ErrorCode::kSizeCapExceeded, "discrete topology on " + std::to_string(cells) +
                                                 " cells exceeds size cap " +
                                                 std::to_string(size_cap));
  }
  std::vector<SoftSet> all;
  all.reserve(std::size_t{1} << cells);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    // The key of a soft set with at most 62 cells is one word, MSB-aligned.
    all.push_back(SoftSet::from_key(ctx, {cells == 0 ? 0 : code << (64 - cells)}));
  }
  return TopologyBuilder::trusted(ctx, std::move(all));
}

bool SoftTopology::is_open(const SoftSet& f) const {
  require_same_context(f.context(), ctx_, "is_open");
  return std::binary_search(opens_.begin(), opens_.end(), f);
}

SoftSpace::SoftSpace(SoftTopology topology) : topology_(std::move(topology)) {
  closed_.reserve(topology_.size());
  for (const auto& o : topology_.opens()) closed_.push_back(complement(o));
  std::sort(closed_.begin(), closed_.end());
}

bool SoftSpace::is_closed(const SoftSet& f) const {
  require_same_context(f.context(), context(), "is_closed");
  return std::binary_search(closed_.begin(), closed_.end(), f);
}

std::vector<SoftSet> closed_sets(const SoftSpace& space) {
  return {space.closed().begin(), space.closed().end()};
}

SoftSet closure(const SoftSpace& space, const SoftSet& f) {
  require_same_context(f.context(), space.context(), "closure");
  auto acc = SoftSet::absolute(space.context());
  for (const auto& c : space.closed()) {
    if (is_subset(f, c)) acc = soft_intersection(acc, c);
  }
  return acc;
}

bool is_adherent(const SoftSpace& space, const SoftPoint& p, const SoftSet& f) {
  require_same_context(p.ctx, space.context(), "is_adherent");
  require_same_context(f.context(), space.context(), "is_adherent");
  for (const auto& o : space.opens()) {
    if (point_in(p, o) && !meets(o, f)) return false;
  }
  return true;
}

namespace {

void require_open_members(const SoftSpace& space, std::span<const SoftSet> members) {
  for (const auto& b : members) {
    if (!space.is_open(b)) {
      throw Error(ErrorCode::kNotOpenMember, b.to_string() + " is not open");
    }
  }
}

}  // namespace

bool is_base(const SoftSpace& space, std::span<const SoftSet> members) {
  require_open_members(space, members);
  for (const auto& f : space.opens()) {
    for (const auto& p : enumerate_points(f)) {
      const bool found = std::any_of(members.begin(), members.end(), [&](const SoftSet& b) {
        return point_in(p, b) && is_subset(b, f);
      });
      if (!found) return false;
    }
  }
  return true;
}

bool is_base_by_unions(const SoftSpace& space, std::span<const SoftSet> members) {
  require_open_members(space, members);
  for (const auto& f : space.opens()) {
    auto acc = SoftSet::null(space.context());
    for (const auto& b : members) {
      if (is_subset(b, f)) acc = soft_union(acc, b);
    }
    if (acc != f) return false;
  }
  return true;
}

std::vector<SoftSet> finite_intersections(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                                          std::size_t size_cap) {
  std::vector<SoftSet> items;
  std::unordered_set<SoftSet, SoftSetHash> seen;
  auto add = [&](const SoftSet& s) {
    if (seen.insert(s).second) {
      items.push_back(s);
      if (items.size() > size_cap) {
        throw Error(ErrorCode::kSizeCapExceeded,
                    "intersection closure passed size cap " + std::to_string(size_cap) +
                        " (partial size " + std::to_string(items.size()) + ")");
      }
    }
  };
  add(SoftSet::null(ctx));
  add(SoftSet::absolute(ctx));
  for (const auto& s : subbase) {
    require_same_context(s.context(), ctx, "subbase");
    add(s);
  }
  // Each pair (j < i) is intersected once, when i is reached.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add(soft_intersection(items[i], items[j]));
  }
  std::sort(items.begin(), items.end());
  return items;
}

std::vector<SoftSet> TopologyBuilder::unions_of(const ContextPtr& ctx, std::vector<SoftSet> base,
                                                std::size_t size_cap) {
  // Small members first: a member that is already a union of earlier ones
  // adds nothing and is skipped.
  std::stable_sort(base.begin(), base.end(), [](const SoftSet& a, const SoftSet& b) {
    return a.point_count() < b.point_count();
  });
  std::vector<SoftSet> opens{SoftSet::null(ctx)};
  std::unordered_set<SoftSet, SoftSetHash> seen{opens.front()};
  for (const auto& b : base) {
    if (seen.contains(b)) continue;
    const auto n = opens.size();
    for (std::size_t k = 0; k < n; ++k) {
      auto u = soft_union(opens[k], b);
      if (seen.insert(u).second) {
        opens.push_back(std::move(u));
        if (opens.size() > size_cap) {
          throw Error(ErrorCode::kSizeCapExceeded,
                      "topology passed size cap " + std::to_string(size_cap) + " (partial size " +
                          std::to_string(opens.size()) + ")");
        }
      }
    }
  }
  return opens;
}

SubbaseGeneration generate_from_subbase(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                                        std::size_t size_cap) {
  const auto null = SoftSet::null(ctx);
  const auto absolute = SoftSet::absolute(ctx);
  bool has_null = false;
  bool has_absolute = false;
  for (const auto& s : subbase) {
    require_same_context(s.context(), ctx, "generate_from_subbase");
    has_null = has_null || s == null;
    has_absolute = has_absolute || s == absolute;
  }
  auto base = finite_intersections(ctx, subbase, size_cap);
  const auto base_size = base.size();
  auto opens = TopologyBuilder::unions_of(ctx, std::move(base), size_cap);
  return SubbaseGeneration{TopologyBuilder::trusted(ctx, std::move(opens)), !has_null,
                           !has_absolute, base_size};
}

SoftSpace restrict_space(const SoftSpace& space, std::span<const std::size_t> elems,
                         std::span<const std::size_t> params) {
  auto sub = space.context()->sub_context(elems, params);
  std::vector<SoftSet> opens;
  opens.reserve(space.opens().size());
  for (const auto& o : space.opens()) opens.push_back(restrict_to(o, sub, elems, params));
  // Restriction preserves null, absolute, unions and intersections.
  return SoftSpace(TopologyBuilder::trusted(sub, std::move(opens)));
}

SoftSpace subspace(const SoftSpace& space, std::span<const std::size_t> elems) {
  if (elems.empty()) throw Error(ErrorCode::kEmptySubset, "subspace over an empty subset");
  const auto params = iota_indices(space.context()->param_size());
  return restrict_space(space, elems, params);
}

SoftSpace subspace(const SoftSpace& space, std::span<const std::string> labels) {
  const auto elems = element_indices(*space.context(), labels);
  return subspace(space, std::span<const std::size_t>(elems));
}

std::vector<std::size_t> element_indices(const Context& ctx, std::span<const std::string> labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(ctx.element_index(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace softtop
