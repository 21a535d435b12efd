#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "softtop/continuity.hpp"
#include "softtop/mapping.hpp"
#include "softtop/product.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// The i-th projection: phi takes a tuple element to its i-th component and
/// psi a tuple parameter to its i-th component. Throws ErrorCode::kIndexOutOfRange.
SoftMapping projection_mapping(const ProductContextPtr& product, std::size_t i);

/// One component of a slab: an open soft set of factor `factor`.
struct SlabComponent {
  std::size_t factor = 0;
  SoftSet payload;
};

/// Slab as the inverse image of its payload under the projection. Throws
/// ErrorCode::kNotOpenPayload when the payload is not open in its factor and
/// ErrorCode::kIndexOutOfRange for a bad factor index.
SoftSet slab(const ProductContextPtr& product, std::span<const SoftSpace> factors,
             const SlabComponent& component);

/// n-slab: the intersection of the slabs of `components`. Factor indices must
/// be distinct (ErrorCode::kDuplicateIndex).
SoftSet nslab(const ProductContextPtr& product, std::span<const SoftSpace> factors,
              std::span<const SlabComponent> components);

/// The product-form counterpart: the soft product with each payload at its
/// factor and absolute soft sets elsewhere.
SoftSet nslab_product_form(const ProductContextPtr& product,
                           std::span<const SlabComponent> components);

/// Every slab of every open set of every factor, deduplicated and key-ordered.
std::vector<SoftSet> slab_subbase(const ProductContextPtr& product,
                                  std::span<const SoftSpace> factors);

/// Every n-slab, i.e. every product of one open set per factor, deduplicated
/// and key-ordered. Throws ErrorCode::kSizeCapExceeded when the product of the
/// factor topology sizes exceeds `size_cap`.
std::vector<SoftSet> nslab_base(const ProductContextPtr& product,
                                std::span<const SoftSpace> factors,
                                std::size_t size_cap = default_size_cap());

struct ProductSpace {
  ProductContextPtr product;
  std::vector<SoftSpace> factors;
  SoftSpace space;
};

/// Product topology generated by the slab subbase.
ProductSpace product_topology(std::span<const SoftSpace> factors,
                              std::size_t cell_budget = kDefaultCellBudget,
                              std::size_t size_cap = default_size_cap());

/// Same topology built as the initial topology of the projection family.
SoftTopology product_topology_via_projections(const ProductContextPtr& product,
                                              std::span<const SoftSpace> factors,
                                              std::size_t size_cap = default_size_cap());

/// Same topology built as all unions of n-slabs.
SoftTopology product_topology_via_nslabs(const ProductContextPtr& product,
                                         std::span<const SoftSpace> factors,
                                         std::size_t size_cap = default_size_cap());

/// Closure of the product of `sets` in the product space versus the product
/// of the factor closures; true when the two are key-equal.
bool closure_of_product_check(const ProductSpace& space, std::span<const SoftSet> sets);

struct ProductContinuity {
  bool direct = false;
  /// Continuity of each projection composed with the mapping.
  std::vector<bool> components;

  bool via_components() const;
  bool agree() const { return direct == via_components(); }
};

/// Continuity of `m` into the product computed directly and through the
/// projections.
ProductContinuity continuity_into_product(const SoftMapping& m, const SoftSpace& source,
                                          const ProductSpace& target);

}  // namespace softtop
