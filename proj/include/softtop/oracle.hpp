#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "softtop/continuity.hpp"
#include "softtop/mapping.hpp"
#include "softtop/product.hpp"
#include "softtop/topology.hpp"

// Brute-force counterparts of the main modules. Everything here works cell by
// cell on approximation tables and never calls the soft-set algebra, the
// topology generator or the continuity checker.
namespace softtop::oracle {

/// Deterministic generator: mt19937_64 with an explicit rejection sampler so
/// that draws do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the `index`-th independent stream derived from `seed`.
std::uint64_t split(std::uint64_t seed, std::uint64_t index);

struct OracleConfig {
  std::size_t max_universe = 3;
  std::size_t max_params = 2;
  std::size_t max_subbase = 4;
  std::uint64_t seed = 0;
  std::size_t iterations = 1;
};

/// Every soft set is enumerated when 2^(|U||E|) is at most 256.
bool exhaustive(const Context& ctx);

/// Universe "a","b",... and parameters "e1","e2",...
ContextPtr make_context(std::size_t universe, std::size_t params);
ContextPtr random_context(Rng& rng, const OracleConfig& cfg);
SoftSet random_soft_set(Rng& rng, const ContextPtr& ctx);
SoftMapping random_mapping(Rng& rng, const ContextPtr& src, const ContextPtr& dst);

/// A random context within the caps and the topology generated by a random
/// subbase of at most max_subbase soft sets; same seed, same space. Size-cap
/// failures are redrawn a bounded number of times and then rethrown.
SoftSpace random_space(const OracleConfig& cfg);
SoftSpace random_space(Rng& rng, const OracleConfig& cfg);
/// A random topology on a fixed context.
SoftSpace random_space_on(Rng& rng, const ContextPtr& ctx, std::size_t max_subbase);

/// A random target space with a mapping from x that is continuous by
/// construction: the subbase is drawn from the soft sets whose preimage is
/// open. The target context has at most 16 cells.
MappedSpace random_continuous_target(Rng& rng, const SoftSpace& x, const OracleConfig& cfg);

/// All 2^(|U||E|) soft sets in canonical key order. Throws ErrorCode::kTooLarge
/// above 16 cells.
std::vector<SoftSet> enumerate_all_soft_sets(const ContextPtr& ctx);

/// The soft set of adherent points of f: points every open neighbourhood of
/// which meets f.
SoftSet closure_via_adherence(const SoftSpace& space, const SoftSet& f);

/// Union/intersection fixpoint over subbase, null and absolute, sorted by key.
std::vector<SoftSet> naive_generate(const ContextPtr& ctx, std::span<const SoftSet> subbase);

/// Neighbourhood definition of continuity at every point.
bool naive_is_continuous(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y);

SoftSet naive_image(const SoftMapping& m, const SoftSet& f);
SoftSet naive_inverse_image(const SoftMapping& m, const SoftSet& g);

/// Product of soft sets by decoding tuple indices directly.
SoftSet naive_product(const ProductContext& product, std::span<const SoftSet> sets);
/// Payload at factor i, absolute elsewhere.
SoftSet naive_slab(const ProductContext& product, std::size_t i, const SoftSet& payload);

/// Whether target is a union of finite intersections of subbase members, by
/// trying every subfamily for every point of target. At most 16 members.
bool naive_is_generated(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                        const SoftSet& target);

}  // namespace softtop::oracle
