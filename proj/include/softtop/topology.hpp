#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softtop/context.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

inline constexpr std::size_t kDefaultSizeCap = 100000;

/// kDefaultSizeCap unless SOFTTOP_SIZE_CAP holds a positive integer.
std::size_t default_size_cap();

/// Outcome of checking the four soft-topology axioms on a candidate family.
struct AxiomVerdict {
  enum class Kind {
    kOk,
    kMissingNull,
    kMissingAbsolute,
    kNotClosedUnderIntersection,
    kNotClosedUnderUnion,
  };

  Kind kind = Kind::kOk;
  /// Indices into the candidate list of the first violating pair, in
  /// canonical key order of the pair.
  std::optional<std::pair<std::size_t, std::size_t>> witness;

  bool ok() const noexcept { return kind == Kind::kOk; }
};

std::string to_string(AxiomVerdict::Kind kind);

/// Axioms are checked pairwise: on a finite family, closure under pairwise
/// union already gives closure under the union of every subfamily.
AxiomVerdict verify_axioms(const ContextPtr& ctx, std::span<const SoftSet> candidates);

/// A verified soft topology: a deduplicated, key-ordered family of open sets.
class SoftTopology {
 public:
  /// Deduplicates, verifies the axioms and throws ErrorCode::kAxiomViolation
  /// with the witness pair otherwise.
  static SoftTopology from_opens(const ContextPtr& ctx, std::vector<SoftSet> opens);
  static SoftTopology indiscrete(const ContextPtr& ctx);
  /// Every soft set is open. Throws ErrorCode::kSizeCapExceeded when
  /// 2^(|U||E|) exceeds `size_cap`.
  static SoftTopology discrete(const ContextPtr& ctx, std::size_t size_cap = default_size_cap());

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const SoftSet> opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.size(); }
  bool is_open(const SoftSet& f) const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    return same_context(a.ctx_, b.ctx_) && a.opens_ == b.opens_;
  }

 private:
  friend class TopologyBuilder;
  SoftTopology(ContextPtr ctx, std::vector<SoftSet> sorted_opens)
      : ctx_(std::move(ctx)), opens_(std::move(sorted_opens)) {}

  ContextPtr ctx_;
  std::vector<SoftSet> opens_;
};

/// A soft topological space: a context with its topology and the cached
/// family of closed sets.
class SoftSpace {
 public:
  explicit SoftSpace(SoftTopology topology);

  const ContextPtr& context() const noexcept { return topology_.context(); }
  const SoftTopology& topology() const noexcept { return topology_; }
  std::span<const SoftSet> opens() const noexcept { return topology_.opens(); }
  /// Key-ordered.
  std::span<const SoftSet> closed() const noexcept { return closed_; }
  bool is_open(const SoftSet& f) const { return topology_.is_open(f); }
  bool is_closed(const SoftSet& f) const;

 private:
  SoftTopology topology_;
  std::vector<SoftSet> closed_;
};

std::vector<SoftSet> closed_sets(const SoftSpace& space);

/// Intersection of every closed superset of `f`.
SoftSet closure(const SoftSpace& space, const SoftSet& f);

/// Every open set containing `p` meets `f`. Open sets stand in for
/// neighbourhoods: each neighbourhood of p contains an open set containing p.
bool is_adherent(const SoftSpace& space, const SoftPoint& p, const SoftSet& f);

/// Point criterion: for each open F and point p in F some member B satisfies
/// p in B and B within F. Throws ErrorCode::kNotOpenMember if a member is not open.
bool is_base(const SoftSpace& space, std::span<const SoftSet> members);
/// Union criterion: each open set is the union of the members it contains.
bool is_base_by_unions(const SoftSpace& space, std::span<const SoftSet> members);

struct SubbaseGeneration {
  SoftTopology topology;
  /// Null and/or absolute were absent from the subbase and have been adjoined.
  bool adjoined_null = false;
  bool adjoined_absolute = false;
  /// Size of the intersection-closed base the unions were taken over.
  std::size_t base_size = 0;
};

/// Topology of all unions of finite intersections of `subbase` (plus null and
/// absolute). Throws ErrorCode::kSizeCapExceeded, reporting the partial size,
/// when the base or the topology grows past `size_cap`.
SubbaseGeneration generate_from_subbase(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                                        std::size_t size_cap = default_size_cap());

/// The intersection closure of subbase together with null and absolute,
/// key-ordered. Shares the cap semantics of generate_from_subbase.
std::vector<SoftSet> finite_intersections(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                                          std::size_t size_cap = default_size_cap());

/// Relative topology on the universe subset `elems` (strictly increasing
/// indices). The new context keeps every parameter. Throws ErrorCode::kEmptySubset.
SoftSpace subspace(const SoftSpace& space, std::span<const std::size_t> elems);
SoftSpace subspace(const SoftSpace& space, std::span<const std::string> labels);

/// Restriction to a universe subset and a parameter subset at once; each open
/// set keeps only the selected cells. `subspace` is the case with every parameter.
SoftSpace restrict_space(const SoftSpace& space, std::span<const std::size_t> elems,
                         std::span<const std::size_t> params);

/// Sorted, strictly increasing element indices for `labels`.
std::vector<std::size_t> element_indices(const Context& ctx, std::span<const std::string> labels);

}  // namespace softtop
