#include "softtop/embedding.hpp"

#include <algorithm>
#include <sstream>

#include "softtop/product_topology.hpp"

namespace softtop {

ClosedMappingReport closed_mapping_report(const SoftMapping& m, const SoftSpace& x,
                                          const SoftSpace& y) {
  require_aligned(m, x, y);
  for (const auto& c : x.closed()) {
    if (!y.is_closed(image(m, c))) return {false, c};
  }
  return {};
}

bool is_closed_mapping(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y) {
  return closed_mapping_report(m, x, y).verdict;
}

bool is_homeomorphism(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y) {
  require_aligned(m, x, y);
  if (!m.is_bijective()) return false;
  if (!is_continuous(m, x, y).verdict) return false;
  return is_continuous(inverse(m), y, x).verdict;
}

std::string to_string(ImageScope scope) {
  switch (scope) {
    case ImageScope::kUniverseAndParams: return "universe_and_params";
    case ImageScope::kUniverseOnly: return "universe_only";
  }
  return "unknown";
}

std::string to_string(EmbeddingRoute route) {
  switch (route) {
    case EmbeddingRoute::kDefinitional: return "definitional";
    case EmbeddingRoute::kCharacterization: return "characterization";
  }
  return "unknown";
}

std::string to_string(ProductRoute route) {
  switch (route) {
    case ProductRoute::kMaterialized: return "materialized";
    case ProductRoute::kSlabSubbase: return "slab_subbase";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> sorted_values(std::span<const std::size_t> table) {
  std::vector<std::size_t> out(table.begin(), table.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t position_of(std::span<const std::size_t> sorted, std::size_t value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) {
    throw Error(ErrorCode::kInvalidMapping, "value " + std::to_string(value) +
                                                " lies outside the corestriction target");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<SoftSet> every_soft_set(const ContextPtr& ctx) {
  const auto cells = ctx->cell_count();
  std::vector<SoftSet> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    out.push_back(SoftSet::from_key(ctx, {code << (64 - cells)}));
  }
  return out;
}

}  // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> image_selection(
    const SoftMapping& m, ImageScope scope) {
  auto elems = sorted_values(m.phi());
  auto params = scope == ImageScope::kUniverseAndParams ? sorted_values(m.psi())
                                                        : iota_indices(m.dst()->param_size());
  return {std::move(elems), std::move(params)};
}

SoftMapping corestrict(const SoftMapping& m, const ContextPtr& sub,
                       std::span<const std::size_t> elems, std::span<const std::size_t> params) {
  std::vector<std::size_t> phi;
  std::vector<std::size_t> psi;
  for (auto v : m.phi()) phi.push_back(position_of(elems, v));
  for (auto v : m.psi()) psi.push_back(position_of(params, v));
  return SoftMapping(m.src(), sub, std::move(phi), std::move(psi));
}

ImageSubspace image_subspace(const SoftMapping& m, const SoftSpace& y, ImageScope scope) {
  require_same_context(m.dst(), y.context(), "image subspace");
  auto [elems, params] = image_selection(m, scope);
  auto space = restrict_space(y, elems, params);
  auto co = corestrict(m, space.context(), elems, params);
  return ImageSubspace{std::move(elems), std::move(params), std::move(space), std::move(co)};
}

EmbeddingCertificate certify_embedding(const SoftMapping& m, const SoftSpace& x, bool continuous,
                                       const ImageSubspace& image) {
  require_same_context(m.src(), x.context(), "embedding source");
  EmbeddingCertificate cert;
  cert.continuous = continuous;
  cert.injective = m.is_injective();
  cert.closed_into_image = true;
  const auto& sub = image.space.context();
  for (const auto& c : x.closed()) {
    const auto r = restrict_to(softtop::image(m, c), sub, image.elems, image.params);
    if (!image.space.is_closed(r)) {
      cert.closed_into_image = false;
      cert.closed_witness = c;
      break;
    }
  }
  if (image.corestriction.is_bijective()) {
    cert.route = EmbeddingRoute::kDefinitional;
    cert.homeomorphism = is_homeomorphism(image.corestriction, x, image.space);
  }
  cert.overall = cert.continuous && cert.injective && cert.closed_into_image;
  return cert;
}

EmbeddingCertificate is_embedding(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y,
                                  ImageScope scope) {
  require_aligned(m, x, y);
  const bool continuous = is_continuous(m, x, y).verdict;
  return certify_embedding(m, x, continuous, image_subspace(m, y, scope));
}

DiagonalMapping diagonal_mapping(const ContextPtr& x, std::span<const SoftMapping> maps,
                                 std::size_t cell_budget) {
  if (maps.empty()) throw Error(ErrorCode::kEmptyFamily, "diagonal of an empty mapping family");
  std::vector<ContextPtr> targets;
  for (const auto& m : maps) {
    require_same_context(m.src(), x, "diagonal member source");
    targets.push_back(m.dst());
  }
  auto product = ProductContext::make(std::move(targets), cell_budget);
  std::vector<std::size_t> phi(x->universe_size());
  std::vector<std::size_t> psi(x->param_size());
  std::vector<std::size_t> parts(maps.size());
  for (std::size_t u = 0; u < phi.size(); ++u) {
    for (std::size_t i = 0; i < maps.size(); ++i) parts[i] = maps[i].phi(u);
    phi[u] = product->element_index(parts);
  }
  for (std::size_t e = 0; e < psi.size(); ++e) {
    for (std::size_t i = 0; i < maps.size(); ++i) parts[i] = maps[i].psi(e);
    psi[e] = product->param_index(parts);
  }
  SoftMapping mapping(x, product->context(), std::move(phi), std::move(psi));
  return DiagonalMapping{std::move(product), std::move(mapping)};
}

SeparationReport separation_report(const SoftSpace& x, std::span<const MappedSpace> targets) {
  for (const auto& t : targets) require_aligned(t.mapping, x, t.space);
  SeparationReport report;
  const auto points = all_points(x.context());

  for (std::size_t a = 0; a < points.size() && report.separates_points; ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const bool split = std::any_of(targets.begin(), targets.end(), [&](const MappedSpace& t) {
        return image_of_point(t.mapping, points[a]) != image_of_point(t.mapping, points[b]);
      });
      if (!split) {
        report.separates_points = false;
        report.points_witness = std::pair{points[a], points[b]};
        break;
      }
    }
  }

  for (const auto& c : x.closed()) {
    std::vector<SoftSet> closures;
    for (const auto& t : targets) closures.push_back(closure(t.space, image(t.mapping, c)));
    for (const auto& p : points) {
      if (point_in(p, c)) continue;
      bool split = false;
      for (std::size_t j = 0; j < targets.size() && !split; ++j) {
        split = !point_in(image_of_point(targets[j].mapping, p), closures[j]);
      }
      if (!split) {
        report.separates_points_from_closed = false;
        report.closed_witness = std::pair{c, p};
        return report;
      }
    }
  }
  return report;
}

std::string LemmaReport::summary() const {
  std::ostringstream os;
  os << "hypotheses=" << (hypotheses ? "true" : "false") << " continuous=[";
  for (std::size_t i = 0; i < continuous.size(); ++i) {
    os << (i ? "," : "") << (continuous[i] ? "true" : "false");
  }
  os << "] separates_points=" << (separation.separates_points ? "true" : "false")
     << " separates_points_from_closed="
     << (separation.separates_points_from_closed ? "true" : "false")
     << " diagonal: continuous=" << (diagonal.continuous ? "true" : "false")
     << " injective=" << (diagonal.injective ? "true" : "false")
     << " closed_into_image=" << (diagonal.closed_into_image ? "true" : "false")
     << " route=" << to_string(diagonal.route)
     << " overall=" << (diagonal.overall ? "true" : "false");
  if (separation.points_witness) {
    os << " points_witness=" << separation.points_witness->first.to_string() << ","
       << separation.points_witness->second.to_string();
  }
  if (separation.closed_witness) {
    os << " closed_witness=" << separation.closed_witness->first.to_string() << ","
       << separation.closed_witness->second.to_string();
  }
  if (diagonal.closed_witness) os << " image_not_closed=" << diagonal.closed_witness->to_string();
  return os.str();
}

LemmaViolation::LemmaViolation(LemmaReport report)
    : Error(ErrorCode::kLemmaViolation,
            "hypotheses hold but the diagonal is not an embedding; " + report.summary()),
      report_(std::move(report)) {}

LemmaReport verify_embedding_lemma(const SoftSpace& x, std::span<const MappedSpace> targets,
                                   const LemmaOptions& options) {
  if (targets.empty()) throw Error(ErrorCode::kEmptyFamily, "embedding lemma with no targets");
  LemmaReport report;
  for (const auto& t : targets) {
    require_aligned(t.mapping, x, t.space);
    report.continuous.push_back(is_continuous(t.mapping, x, t.space).verdict);
  }
  report.separation = separation_report(x, targets);
  report.hypotheses =
      std::all_of(report.continuous.begin(), report.continuous.end(), [](bool b) { return b; }) &&
      report.separation.separates_points && report.separation.separates_points_from_closed;

  std::vector<SoftMapping> maps;
  std::vector<SoftSpace> factors;
  for (const auto& t : targets) {
    maps.push_back(t.mapping);
    factors.push_back(t.space);
  }
  const auto diag = diagonal_mapping(x.context(), maps, options.cell_budget);
  const auto& product = diag.product;
  const auto slabs = slab_subbase(product, factors);

  std::optional<SoftSpace> materialized;
  try {
    materialized.emplace(
        generate_from_subbase(product->context(), slabs, options.materialize_cap).topology);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSizeCapExceeded) throw;
  }

  if (materialized) {
    report.product_route = ProductRoute::kMaterialized;
    report.product_size = materialized->opens().size();
    const bool continuous = is_continuous(diag.mapping, x, *materialized).verdict;
    report.diagonal = certify_embedding(diag.mapping, x, continuous,
                                        image_subspace(diag.mapping, *materialized, options.scope));
  } else {
    report.product_route = ProductRoute::kSlabSubbase;
    // Preimages and restrictions commute with unions and intersections, so
    // the slabs carry all the information needed.
    const bool continuous = std::all_of(slabs.begin(), slabs.end(), [&](const SoftSet& s) {
      return x.is_open(inverse_image(diag.mapping, s));
    });
    auto [elems, params] = image_selection(diag.mapping, options.scope);
    const auto sub = product->context()->sub_context(elems, params);
    std::vector<SoftSet> restricted;
    for (const auto& s : slabs) restricted.push_back(restrict_to(s, sub, elems, params));
    SoftSpace space(generate_from_subbase(sub, restricted).topology);
    auto co = corestrict(diag.mapping, sub, elems, params);
    report.diagonal = certify_embedding(
        diag.mapping, x, continuous,
        ImageSubspace{std::move(elems), std::move(params), std::move(space), std::move(co)});
  }

  const auto& ctx = x.context();
  std::vector<SoftSet> samples;
  if (ctx->cell_count() <= kLemmaExhaustiveCells) {
    report.inclusion_exhaustive = true;
    samples = every_soft_set(ctx);
  } else {
    samples.assign(x.opens().begin(), x.opens().end());
    samples.insert(samples.end(), x.closed().begin(), x.closed().end());
    for (const auto& p : all_points(ctx)) samples.push_back(p.as_soft_set());
  }
  std::vector<SoftSet> parts;
  for (const auto& f : samples) {
    parts.clear();
    for (const auto& m : maps) parts.push_back(image(m, f));
    if (!is_subset(image(diag.mapping, f), product_soft_set(*product, parts))) {
      report.diagonal_inclusion = false;
      report.inclusion_witness = f;
      break;
    }
  }

  if (report.violation() && options.throw_on_violation) throw LemmaViolation(report);
  return report;
}

}  // namespace softtop
