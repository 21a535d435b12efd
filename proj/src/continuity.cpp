#include "softtop/continuity.hpp"

#include <algorithm>
#include <unordered_map>

#include "softtop/error.hpp"

namespace softtop {

std::string to_string(ContinuityMethod method) {
  switch (method) {
    case ContinuityMethod::kPointwise: return "pointwise";
    case ContinuityMethod::kOpenPreimage: return "open_preimage";
    case ContinuityMethod::kClosedPreimage: return "closed_preimage";
  }
  return "unknown";
}

void require_aligned(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y) {
  require_same_context(m.src(), x.context(), "mapping source");
  require_same_context(m.dst(), y.context(), "mapping target");
}

namespace {

// First open set of y containing m(p) that no open neighbourhood of p maps into.
std::optional<SoftSet> pointwise_violation(const SoftMapping& m, std::span<const SoftSet> x_images,
                                           const SoftSpace& x, const SoftSpace& y,
                                           const SoftPoint& p) {
  const auto q = image_of_point(m, p);
  for (const auto& g : y.opens()) {
    if (!point_in(q, g)) continue;
    bool found = false;
    for (std::size_t k = 0; k < x.opens().size() && !found; ++k) {
      found = point_in(p, x.opens()[k]) && is_subset(x_images[k], g);
    }
    if (!found) return g;
  }
  return std::nullopt;
}

std::vector<SoftSet> images_of_opens(const SoftMapping& m, const SoftSpace& x) {
  std::vector<SoftSet> out;
  out.reserve(x.opens().size());
  for (const auto& f : x.opens()) out.push_back(image(m, f));
  return out;
}

}  // namespace

bool is_continuous_at(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y,
                      const SoftPoint& p) {
  require_aligned(m, x, y);
  require_same_context(p.ctx, x.context(), "is_continuous_at");
  return !pointwise_violation(m, images_of_opens(m, x), x, y, p).has_value();
}

ContinuityReport is_continuous(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y,
                               ContinuityMethod method) {
  require_aligned(m, x, y);
  ContinuityReport report;
  report.method = method;
  switch (method) {
    case ContinuityMethod::kPointwise: {
      const auto x_images = images_of_opens(m, x);
      for (const auto& p : all_points(x.context())) {
        if (auto g = pointwise_violation(m, x_images, x, y, p)) {
          report.verdict = false;
          report.witness = ContinuityWitness{p, *g};
          break;
        }
      }
      break;
    }
    case ContinuityMethod::kOpenPreimage:
      for (const auto& g : y.opens()) {
        if (!x.is_open(inverse_image(m, g))) {
          report.verdict = false;
          report.witness = ContinuityWitness{std::nullopt, g};
          break;
        }
      }
      break;
    case ContinuityMethod::kClosedPreimage:
      for (const auto& c : y.closed()) {
        if (!x.is_closed(inverse_image(m, c))) {
          report.verdict = false;
          report.witness = ContinuityWitness{std::nullopt, c};
          break;
        }
      }
      break;
  }
  return report;
}

SoftMapping restrict(const SoftMapping& m, const SoftSpace& x, std::span<const std::size_t> elems) {
  require_same_context(m.src(), x.context(), "restrict");
  if (elems.empty()) throw Error(ErrorCode::kEmptySubset, "restriction to an empty subset");
  const auto params = iota_indices(x.context()->param_size());
  auto sub = x.context()->sub_context(elems, params);
  std::vector<std::size_t> phi;
  phi.reserve(elems.size());
  for (auto i : elems) phi.push_back(m.phi(i));
  return SoftMapping(sub, m.dst(), std::move(phi),
                     std::vector<std::size_t>(m.psi().begin(), m.psi().end()));
}

std::vector<SoftSet> initial_subbase(const ContextPtr& ctx, std::span<const MappedSpace> targets) {
  std::vector<SoftSet> out;
  for (const auto& t : targets) {
    require_same_context(t.mapping.src(), ctx, "initial topology mapping source");
    require_same_context(t.mapping.dst(), t.space.context(), "initial topology mapping target");
    for (const auto& g : t.space.opens()) out.push_back(inverse_image(t.mapping, g));
  }
  return out;
}

SoftTopology initial_topology(const ContextPtr& ctx, std::span<const MappedSpace> targets,
                              std::size_t size_cap) {
  const auto subbase = initial_subbase(ctx, targets);
  return generate_from_subbase(ctx, subbase, size_cap).topology;
}

std::optional<Derivation> find_derivation(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                                          const SoftSet& target, std::size_t size_cap) {
  require_same_context(target.context(), ctx, "find_derivation");
  // Intersection closure with provenance: every item remembers one index list.
  std::vector<SoftSet> items{SoftSet::absolute(ctx)};
  std::vector<std::vector<std::size_t>> terms{{}};
  std::unordered_map<SoftSet, std::size_t, SoftSetHash> where{{items.front(), 0}};
  auto add = [&](SoftSet s, std::vector<std::size_t> term) {
    if (where.contains(s)) return;
    where.emplace(s, items.size());
    items.push_back(std::move(s));
    terms.push_back(std::move(term));
    if (items.size() > size_cap) {
      throw Error(ErrorCode::kSizeCapExceeded,
                  "derivation search passed size cap " + std::to_string(size_cap));
    }
  };
  for (std::size_t i = 0; i < subbase.size(); ++i) {
    require_same_context(subbase[i].context(), ctx, "find_derivation subbase");
    add(subbase[i], {i});
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto term = terms[i];
      term.insert(term.end(), terms[j].begin(), terms[j].end());
      std::sort(term.begin(), term.end());
      term.erase(std::unique(term.begin(), term.end()), term.end());
      add(soft_intersection(items[i], items[j]), std::move(term));
    }
  }

  // Greedy cover of the target by intersections lying inside it.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].is_null() && is_subset(items[i], target)) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = items[a].point_count();
    const auto cb = items[b].point_count();
    return ca != cb ? ca > cb : items[a] < items[b];
  });
  Derivation d;
  auto covered = SoftSet::null(ctx);
  for (auto i : order) {
    if (is_subset(items[i], covered)) continue;
    covered = soft_union(covered, items[i]);
    d.terms.push_back(terms[i]);
  }
  if (covered != target) return std::nullopt;
  return d;
}

SoftSet evaluate_derivation(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                            const Derivation& derivation) {
  auto acc = SoftSet::null(ctx);
  for (const auto& term : derivation.terms) {
    auto t = SoftSet::absolute(ctx);
    for (auto i : term) {
      if (i >= subbase.size()) throw Error(ErrorCode::kIndexOutOfRange, "derivation term index");
      t = soft_intersection(t, subbase[i]);
    }
    acc = soft_union(acc, t);
  }
  return acc;
}

}  // namespace softtop
