#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "softtop/context.hpp"

namespace softtop {

/// Canonical key of a soft set: the approximation rows concatenated in
/// parameter order, packed most-significant-bit first into 64-bit words. The
/// lexicographic order of keys is the lexicographic order of the row bit
/// strings, so the null soft set is the smallest key and the absolute soft set
/// the largest.
using SoftSetKey = std::vector<std::uint64_t>;

/// A parameter-indexed family of universe subsets over a fixed Context.
///
/// Soft sets are plain values. Equality and ordering compare canonical keys
/// and only make sense between soft sets over the same context.
class SoftSet {
 public:
  /// The null soft set of `ctx`.
  explicit SoftSet(ContextPtr ctx);

  static SoftSet null(ContextPtr ctx) { return SoftSet(std::move(ctx)); }
  static SoftSet absolute(ContextPtr ctx);
  /// `rows[e]` lists the element indices of approximation e. Missing trailing
  /// rows are empty.
  static SoftSet from_rows(ContextPtr ctx, const std::vector<std::vector<std::size_t>>& rows);
  /// Label form; parameters absent from the map have an empty approximation.
  static SoftSet from_labels(ContextPtr ctx,
                             const std::map<std::string, std::vector<std::string>>& rows);
  /// Decodes a key produced by `key()` over the same context.
  static SoftSet from_key(ContextPtr ctx, SoftSetKey key);

  const ContextPtr& context() const noexcept { return ctx_; }

  bool contains(std::size_t param, std::size_t elem) const;
  void insert(std::size_t param, std::size_t elem);
  void erase(std::size_t param, std::size_t elem);

  /// Cell-index access (cell = param * |U| + elem).
  bool cell(std::size_t index) const {
    return (bits_[index >> 6] >> (63 - (index & 63))) & 1u;
  }

  /// Element indices of approximation `param`, ascending.
  std::vector<std::size_t> row(std::size_t param) const;
  bool row_empty(std::size_t param) const;

  bool is_null() const noexcept;
  bool is_absolute() const noexcept;
  std::size_t point_count() const noexcept;

  const SoftSetKey& key() const noexcept { return bits_; }

  /// "{e1:{a,b},e2:{}}" in context order.
  std::string to_string() const;
  /// Rows as '0'/'1' strings separated by '|', e.g. "10|01".
  std::string key_string() const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  friend SoftSet complement(const SoftSet&);
  friend SoftSet soft_union(const SoftSet&, const SoftSet&);
  friend SoftSet soft_intersection(const SoftSet&, const SoftSet&);
  friend SoftSet soft_difference(const SoftSet&, const SoftSet&);
  friend bool is_subset(const SoftSet&, const SoftSet&);
  friend bool meets(const SoftSet&, const SoftSet&);

  void clear_tail() noexcept;

  ContextPtr ctx_;
  SoftSetKey bits_;
};

struct SoftSetHash {
  std::size_t operator()(const SoftSet& s) const noexcept;
};

/// A soft point: a single element `elem` at the expressive parameter `param`.
struct SoftPoint {
  ContextPtr ctx;
  std::size_t param = 0;
  std::size_t elem = 0;

  SoftPoint() = default;
  /// Throws ErrorCode::kIndexOutOfRange for indices outside the context.
  SoftPoint(ContextPtr context, std::size_t param_index, std::size_t elem_index);

  SoftSet as_soft_set() const;
  std::string to_string() const;

  // Canonical order: param-major, element-minor.
  friend bool operator==(const SoftPoint& a, const SoftPoint& b) {
    return a.param == b.param && a.elem == b.elem;
  }
  friend std::strong_ordering operator<=>(const SoftPoint& a, const SoftPoint& b) {
    if (auto c = a.param <=> b.param; c != 0) return c;
    return a.elem <=> b.elem;
  }
};

/// Every soft point of `ctx` in canonical order.
std::vector<SoftPoint> all_points(const ContextPtr& ctx);

// Algebra. Binary operations throw ErrorCode::kContextMismatch when the
// operands live over different contexts.

bool is_subset(const SoftSet& f, const SoftSet& g);
bool is_soft_equal(const SoftSet& f, const SoftSet& g);
SoftSet complement(const SoftSet& f);
SoftSet soft_union(const SoftSet& f, const SoftSet& g);
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g);
SoftSet soft_difference(const SoftSet& f, const SoftSet& g);
/// Throws ErrorCode::kEmptyFamily on an empty family.
SoftSet big_union(std::span<const SoftSet> family);
SoftSet big_intersection(std::span<const SoftSet> family);
bool meets(const SoftSet& f, const SoftSet& g);

/// Every approximation equals `subset` (element indices). Throws
/// ErrorCode::kEmptySubset when `subset` is empty.
SoftSet constant_soft_set(const ContextPtr& ctx, std::span<const std::size_t> subset);

bool point_in(const SoftPoint& p, const SoftSet& f);
std::vector<SoftPoint> enumerate_points(const SoftSet& f);

/// Row-wise intersection with `subset`; the result stays over f's context.
SoftSet sub_soft_set(const SoftSet& f, std::span<const std::size_t> subset);

/// Re-expresses `f` over `sub`, a context built by `sub_context(elems, params)`
/// of f's context. Cells outside the selection are dropped.
SoftSet restrict_to(const SoftSet& f, const ContextPtr& sub, std::span<const std::size_t> elems,
                    std::span<const std::size_t> params);
/// Inverse direction of `restrict_to`: the cells of `g` placed back into the
/// parent context, everything else empty.
SoftSet extend_to(const SoftSet& g, const ContextPtr& parent, std::span<const std::size_t> elems,
                  std::span<const std::size_t> params);

}  // namespace softtop
