#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace softtop {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// A finite universe paired with a finite parameter set.
///
/// Label order is fixed at construction and defines the canonical cell order
/// of every soft set over this context: cell (param, elem) has index
/// `param * universe_size() + elem`.
class Context {
 public:
  /// Rejects empty lists and duplicate labels with ErrorCode::kInvalidContext.
  Context(std::vector<std::string> universe, std::vector<std::string> params);

  static ContextPtr make(std::vector<std::string> universe, std::vector<std::string> params);

  std::size_t universe_size() const noexcept { return universe_.size(); }
  std::size_t param_size() const noexcept { return params_.size(); }
  std::size_t cell_count() const noexcept { return universe_.size() * params_.size(); }

  const std::string& element(std::size_t index) const { return universe_.at(index); }
  const std::string& param(std::size_t index) const { return params_.at(index); }
  std::span<const std::string> universe() const noexcept { return universe_; }
  std::span<const std::string> params() const noexcept { return params_; }

  std::optional<std::size_t> find_element(std::string_view label) const;
  std::optional<std::size_t> find_param(std::string_view label) const;
  /// Throws ErrorCode::kUnknownLabel.
  std::size_t element_index(std::string_view label) const;
  std::size_t param_index(std::string_view label) const;

  /// Context over a subset of the universe and of the parameters. Indices must
  /// be strictly increasing so that the sub-context keeps the parent's order.
  ContextPtr sub_context(std::span<const std::size_t> elems,
                         std::span<const std::size_t> params) const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.universe_ == b.universe_ && a.params_ == b.params_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> params_;
  std::unordered_map<std::string, std::size_t> element_lookup_;
  std::unordered_map<std::string, std::size_t> param_lookup_;
};

/// Structural equality; pointer-equal contexts short-circuit.
bool same_context(const Context& a, const Context& b);
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Throws ErrorCode::kContextMismatch naming `what`.
void require_same_context(const ContextPtr& a, const ContextPtr& b, std::string_view what);

/// Indices 0..n-1.
std::vector<std::size_t> iota_indices(std::size_t n);

}  // namespace softtop
