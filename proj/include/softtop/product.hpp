#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "softtop/context.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

inline constexpr std::size_t kDefaultCellBudget = 4096;

class ProductContext;
using ProductContextPtr = std::shared_ptr<const ProductContext>;

/// Finite cartesian product of contexts. The derived context has the tuple
/// universe and the tuple parameter set, both in mixed-radix order with the
/// first factor most significant. Tuple labels read "(a,x)".
class ProductContext {
 public:
  /// Throws ErrorCode::kFactorArityMismatch for an empty factor list and
  /// ErrorCode::kBudgetExceeded when |U|*|E| of the product exceeds `cell_budget`.
  static ProductContextPtr make(std::vector<ContextPtr> factors,
                                std::size_t cell_budget = kDefaultCellBudget);

  std::size_t arity() const noexcept { return factors_.size(); }
  const ContextPtr& factor(std::size_t i) const { return factors_.at(i); }
  std::span<const ContextPtr> factors() const noexcept { return factors_; }
  const ContextPtr& context() const noexcept { return derived_; }
  std::size_t cell_budget() const noexcept { return cell_budget_; }

  std::size_t element_index(std::span<const std::size_t> components) const;
  std::size_t param_index(std::span<const std::size_t> components) const;
  std::size_t element_component(std::size_t tuple, std::size_t factor) const;
  std::size_t param_component(std::size_t tuple, std::size_t factor) const;
  std::vector<std::size_t> element_components(std::size_t tuple) const;
  std::vector<std::size_t> param_components(std::size_t tuple) const;

  /// The projection of a tuple soft point onto factor `i`.
  SoftPoint component_point(const SoftPoint& p, std::size_t i) const;

 private:
  ProductContext() = default;

  std::vector<ContextPtr> factors_;
  ContextPtr derived_;
  std::vector<std::size_t> elem_stride_;
  std::vector<std::size_t> param_stride_;
  std::size_t cell_budget_ = kDefaultCellBudget;
};

std::string tuple_label(std::span<const std::string> components);

/// Soft cartesian product: the row at tuple parameter <e_i> is the cartesian
/// product of the rows F_i(e_i). Throws ErrorCode::kFactorArityMismatch when
/// the number of soft sets differs from the arity and ErrorCode::kContextMismatch
/// when a soft set is not over its factor context.
SoftSet product_soft_set(const ProductContext& product, std::span<const SoftSet> factors);

/// Component-wise membership test; agrees with point_in on product_soft_set.
bool point_in_product(const ProductContext& product, const SoftPoint& p,
                      std::span<const SoftSet> factors);

}  // namespace softtop
