#include "softtop/product_topology.hpp"

#include <algorithm>
#include <unordered_set>

#include "softtop/error.hpp"
#include "softtop/internal/topology_builder.hpp"

namespace softtop {

namespace {

void check_factor_spaces(const ProductContext& product, std::span<const SoftSpace> factors) {
  if (factors.size() != product.arity()) {
    throw Error(ErrorCode::kFactorArityMismatch, "expected " + std::to_string(product.arity()) +
                                                     " factor spaces, got " +
                                                     std::to_string(factors.size()));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    require_same_context(factors[i].context(), product.factor(i), "factor space");
  }
}

void sort_unique(std::vector<SoftSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SoftMapping projection_mapping(const ProductContextPtr& product, std::size_t i) {
  if (i >= product->arity()) {
    throw Error(ErrorCode::kIndexOutOfRange, "projection index " + std::to_string(i) +
                                                 " for arity " + std::to_string(product->arity()));
  }
  const auto& ctx = product->context();
  std::vector<std::size_t> phi(ctx->universe_size());
  std::vector<std::size_t> psi(ctx->param_size());
  for (std::size_t x = 0; x < phi.size(); ++x) phi[x] = product->element_component(x, i);
  for (std::size_t e = 0; e < psi.size(); ++e) psi[e] = product->param_component(e, i);
  return SoftMapping(ctx, product->factor(i), std::move(phi), std::move(psi));
}

SoftSet slab(const ProductContextPtr& product, std::span<const SoftSpace> factors,
             const SlabComponent& component) {
  check_factor_spaces(*product, factors);
  if (component.factor >= product->arity()) {
    throw Error(ErrorCode::kIndexOutOfRange, "slab factor index out of range");
  }
  if (!factors[component.factor].is_open(component.payload)) {
    throw Error(ErrorCode::kNotOpenPayload, component.payload.to_string() +
                                                " is not open in factor " +
                                                std::to_string(component.factor));
  }
  return inverse_image(projection_mapping(product, component.factor), component.payload);
}

SoftSet nslab(const ProductContextPtr& product, std::span<const SoftSpace> factors,
              std::span<const SlabComponent> components) {
  std::vector<bool> used(product->arity(), false);
  auto acc = SoftSet::absolute(product->context());
  for (const auto& c : components) {
    if (c.factor < used.size() && used[c.factor]) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "n-slab repeats factor " + std::to_string(c.factor));
    }
    acc = soft_intersection(acc, slab(product, factors, c));
    used[c.factor] = true;
  }
  return acc;
}

SoftSet nslab_product_form(const ProductContextPtr& product,
                           std::span<const SlabComponent> components) {
  std::vector<SoftSet> sets;
  for (const auto& f : product->factors()) sets.push_back(SoftSet::absolute(f));
  std::vector<bool> used(product->arity(), false);
  for (const auto& c : components) {
    if (c.factor >= product->arity()) {
      throw Error(ErrorCode::kIndexOutOfRange, "slab factor index out of range");
    }
    if (used[c.factor]) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "n-slab repeats factor " + std::to_string(c.factor));
    }
    used[c.factor] = true;
    sets[c.factor] = c.payload;
  }
  return product_soft_set(*product, sets);
}

std::vector<SoftSet> slab_subbase(const ProductContextPtr& product,
                                  std::span<const SoftSpace> factors) {
  check_factor_spaces(*product, factors);
  std::vector<SoftSet> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto proj = projection_mapping(product, i);
    for (const auto& g : factors[i].opens()) out.push_back(inverse_image(proj, g));
  }
  sort_unique(out);
  return out;
}

std::vector<SoftSet> nslab_base(const ProductContextPtr& product,
                                std::span<const SoftSpace> factors, std::size_t size_cap) {
  check_factor_spaces(*product, factors);
  std::size_t count = 1;
  for (const auto& f : factors) {
    count *= f.opens().size();
    if (count > size_cap) {
      throw Error(ErrorCode::kSizeCapExceeded, "n-slab base passed size cap " +
                                                   std::to_string(size_cap));
    }
  }
  std::vector<SoftSet> out;
  out.reserve(count);
  std::vector<std::size_t> digit(factors.size(), 0);
  std::vector<SoftSet> sets;
  for (const auto& f : factors) sets.push_back(f.opens().front());
  while (true) {
    for (std::size_t i = 0; i < factors.size(); ++i) sets[i] = factors[i].opens()[digit[i]];
    out.push_back(product_soft_set(*product, sets));
    std::size_t i = factors.size();
    bool done = false;
    while (i > 0) {
      --i;
      if (++digit[i] < factors[i].opens().size()) break;
      digit[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  sort_unique(out);
  return out;
}

ProductSpace product_topology(std::span<const SoftSpace> factors, std::size_t cell_budget,
                              std::size_t size_cap) {
  std::vector<ContextPtr> ctxs;
  for (const auto& f : factors) ctxs.push_back(f.context());
  auto product = ProductContext::make(std::move(ctxs), cell_budget);
  const auto subbase = slab_subbase(product, factors);
  auto topology = generate_from_subbase(product->context(), subbase, size_cap).topology;
  return ProductSpace{product, {factors.begin(), factors.end()}, SoftSpace(std::move(topology))};
}

SoftTopology product_topology_via_projections(const ProductContextPtr& product,
                                              std::span<const SoftSpace> factors,
                                              std::size_t size_cap) {
  check_factor_spaces(*product, factors);
  std::vector<MappedSpace> targets;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    targets.push_back(MappedSpace{factors[i], projection_mapping(product, i)});
  }
  return initial_topology(product->context(), targets, size_cap);
}

SoftTopology product_topology_via_nslabs(const ProductContextPtr& product,
                                         std::span<const SoftSpace> factors,
                                         std::size_t size_cap) {
  auto base = nslab_base(product, factors, size_cap);
  auto opens = TopologyBuilder::unions_of(product->context(), std::move(base), size_cap);
  return TopologyBuilder::trusted(product->context(), std::move(opens));
}

bool closure_of_product_check(const ProductSpace& space, std::span<const SoftSet> sets) {
  const auto& product = *space.product;
  const auto lhs = closure(space.space, product_soft_set(product, sets));
  std::vector<SoftSet> closures;
  for (std::size_t i = 0; i < sets.size(); ++i) closures.push_back(closure(space.factors[i], sets[i]));
  return lhs == product_soft_set(product, closures);
}

bool ProductContinuity::via_components() const {
  return std::all_of(components.begin(), components.end(), [](bool b) { return b; });
}

ProductContinuity continuity_into_product(const SoftMapping& m, const SoftSpace& source,
                                          const ProductSpace& target) {
  ProductContinuity out;
  out.direct = is_continuous(m, source, target.space).verdict;
  for (std::size_t i = 0; i < target.product->arity(); ++i) {
    const auto composed = compose(projection_mapping(target.product, i), m);
    out.components.push_back(is_continuous(composed, source, target.factors[i]).verdict);
  }
  return out;
}

}  // namespace softtop
