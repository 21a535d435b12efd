#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softtop/continuity.hpp"
#include "softtop/error.hpp"
#include "softtop/mapping.hpp"
#include "softtop/product.hpp"
#include "softtop/topology.hpp"

namespace softtop {

struct ClosedMappingReport {
  bool verdict = true;
  /// First closed set of the source (key order) whose image is not closed.
  std::optional<SoftSet> witness;
};

ClosedMappingReport closed_mapping_report(const SoftMapping& m, const SoftSpace& x,
                                          const SoftSpace& y);
bool is_closed_mapping(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y);

/// Bijective, continuous, with a continuous inverse.
bool is_homeomorphism(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y);

/// Which coordinates the image subspace keeps.
enum class ImageScope {
  /// The universe restricted to phi(X) and the parameters to psi(E).
  kUniverseAndParams,
  /// The universe restricted to phi(X); every target parameter is kept.
  kUniverseOnly,
};

std::string to_string(ImageScope scope);

/// The image subspace of a mapping and the corestriction onto it.
struct ImageSubspace {
  /// Target element and parameter indices kept, ascending.
  std::vector<std::size_t> elems;
  std::vector<std::size_t> params;
  SoftSpace space;
  SoftMapping corestriction;
};

/// Indices of phi(X) and, depending on scope, of psi(E) or of every parameter.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> image_selection(
    const SoftMapping& m, ImageScope scope);

/// m with its target replaced by `sub`, the sub-context of m.dst() on
/// (elems, params). Every phi and psi value must be selected.
SoftMapping corestrict(const SoftMapping& m, const ContextPtr& sub,
                       std::span<const std::size_t> elems, std::span<const std::size_t> params);

ImageSubspace image_subspace(const SoftMapping& m, const SoftSpace& y,
                             ImageScope scope = ImageScope::kUniverseAndParams);

enum class EmbeddingRoute {
  /// The corestriction is bijective and was checked to be a homeomorphism.
  kDefinitional,
  /// Continuous, injective and closed into the image subspace.
  kCharacterization,
};

std::string to_string(EmbeddingRoute route);

struct EmbeddingCertificate {
  bool continuous = false;
  bool injective = false;
  bool closed_into_image = false;
  EmbeddingRoute route = EmbeddingRoute::kCharacterization;
  bool overall = false;
  /// Homeomorphism verdict of the corestriction, present on the definitional route.
  std::optional<bool> homeomorphism;
  /// First closed set whose image is not closed in the image subspace.
  std::optional<SoftSet> closed_witness;
};

EmbeddingCertificate is_embedding(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y,
                                  ImageScope scope = ImageScope::kUniverseAndParams);

/// Certificate from an already-built image subspace. `continuous` is the
/// continuity of m into its full target.
EmbeddingCertificate certify_embedding(const SoftMapping& m, const SoftSpace& x, bool continuous,
                                       const ImageSubspace& image);

struct DiagonalMapping {
  ProductContextPtr product;
  SoftMapping mapping;
};

/// x maps to the tuple of phi_i(x) and e to the tuple of psi_i(e). Throws
/// ErrorCode::kEmptyFamily, ErrorCode::kContextMismatch or ErrorCode::kBudgetExceeded.
DiagonalMapping diagonal_mapping(const ContextPtr& x, std::span<const SoftMapping> maps,
                                 std::size_t cell_budget = kDefaultCellBudget);

struct SeparationReport {
  bool separates_points = true;
  std::optional<std::pair<SoftPoint, SoftPoint>> points_witness;
  bool separates_points_from_closed = true;
  /// A closed set and a point outside it that no mapping separates.
  std::optional<std::pair<SoftSet, SoftPoint>> closed_witness;
};

/// Witnesses are the first failures in canonical order: point pairs by
/// (first, second) point order, closed sets by key, then points.
SeparationReport separation_report(const SoftSpace& x, std::span<const MappedSpace> targets);

enum class ProductRoute {
  /// The product topology was generated and the image subspace restricted from it.
  kMaterialized,
  /// The image subspace was generated from the slabs restricted to the image.
  kSlabSubbase,
};

std::string to_string(ProductRoute route);

inline constexpr std::size_t kLemmaMaterializeCap = 4096;
inline constexpr std::size_t kLemmaExhaustiveCells = 12;

struct LemmaOptions {
  ImageScope scope = ImageScope::kUniverseAndParams;
  std::size_t cell_budget = kDefaultCellBudget;
  /// Product topologies larger than this are not materialized.
  std::size_t materialize_cap = kLemmaMaterializeCap;
  bool throw_on_violation = true;
};

struct LemmaReport {
  std::vector<bool> continuous;
  SeparationReport separation;
  bool hypotheses = false;
  EmbeddingCertificate diagonal;
  /// Image of F under the diagonal lies within the product of the images.
  bool diagonal_inclusion = true;
  /// The inclusion was checked on every soft set rather than on the opens,
  /// closed sets and points.
  bool inclusion_exhaustive = false;
  std::optional<SoftSet> inclusion_witness;
  ProductRoute product_route = ProductRoute::kSlabSubbase;
  std::size_t product_size = 0;

  bool violation() const { return hypotheses && !diagonal.overall; }
  std::string summary() const;
};

class LemmaViolation : public Error {
 public:
  explicit LemmaViolation(LemmaReport report);
  const LemmaReport& report() const noexcept { return report_; }

 private:
  LemmaReport report_;
};

/// Checks the hypotheses (every mapping continuous, points separated, points
/// separated from closed sets) and the embedding certificate of the diagonal.
/// Throws LemmaViolation when the hypotheses hold and the certificate fails,
/// unless options.throw_on_violation is false.
LemmaReport verify_embedding_lemma(const SoftSpace& x, std::span<const MappedSpace> targets,
                                   const LemmaOptions& options = {});

}  // namespace softtop
