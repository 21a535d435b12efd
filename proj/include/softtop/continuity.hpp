#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/mapping.hpp"
#include "softtop/topology.hpp"

namespace softtop {

enum class ContinuityMethod { kPointwise, kOpenPreimage, kClosedPreimage };

std::string to_string(ContinuityMethod method);

/// What made a continuity check fail. Pointwise failures carry the point and
/// the open neighbourhood of its image that no open neighbourhood of the point
/// maps into; preimage failures carry the open (resp. closed) set of the target
/// whose preimage is not open (resp. closed).
struct ContinuityWitness {
  std::optional<SoftPoint> point;
  SoftSet set;
};

struct ContinuityReport {
  bool verdict = true;
  ContinuityMethod method = ContinuityMethod::kOpenPreimage;
  /// Present iff verdict is false; the first violation in canonical order.
  std::optional<ContinuityWitness> witness;
};

/// Throws ErrorCode::kContextMismatch unless m maps x's context into y's.
void require_aligned(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y);

bool is_continuous_at(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y,
                      const SoftPoint& p);

ContinuityReport is_continuous(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y,
                               ContinuityMethod method = ContinuityMethod::kOpenPreimage);

/// Restriction of `m` to the subspace of `x` on `elems`: phi restricted, psi
/// unchanged. The source context equals `subspace(x, elems).context()`.
SoftMapping restrict(const SoftMapping& m, const SoftSpace& x, std::span<const std::size_t> elems);

/// A target of a mapping family: the space and the mapping into it.
struct MappedSpace {
  SoftSpace space;
  SoftMapping mapping;
};

/// Inverse images of every open set of every target, in target order.
std::vector<SoftSet> initial_subbase(const ContextPtr& ctx, std::span<const MappedSpace> targets);

/// Topology generated by `initial_subbase`; the coarsest one making every
/// target mapping continuous.
SoftTopology initial_topology(const ContextPtr& ctx, std::span<const MappedSpace> targets,
                              std::size_t size_cap = default_size_cap());

/// Certificate that a soft set is a union of finite intersections of subbase
/// members. Each term lists subbase indices whose intersection is taken (an
/// empty term is the absolute soft set); the union of the terms is the set
/// (no terms: the null soft set).
struct Derivation {
  std::vector<std::vector<std::size_t>> terms;
};

std::optional<Derivation> find_derivation(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                                          const SoftSet& target,
                                          std::size_t size_cap = default_size_cap());

/// Evaluates a derivation against the subbase.
SoftSet evaluate_derivation(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                            const Derivation& derivation);

}  // namespace softtop
