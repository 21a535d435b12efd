#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "softtop/context.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

/// Soft mapping induced by a universe map `phi` and a parameter map `psi`,
/// both stored as dense index tables over the source context.
class SoftMapping {
 public:
  /// Validates totality and range; throws ErrorCode::kInvalidMapping.
  SoftMapping(ContextPtr src, ContextPtr dst, std::vector<std::size_t> phi,
              std::vector<std::size_t> psi);

  static SoftMapping identity(const ContextPtr& ctx);

  const ContextPtr& src() const noexcept { return src_; }
  const ContextPtr& dst() const noexcept { return dst_; }
  std::span<const std::size_t> phi() const noexcept { return phi_; }
  std::span<const std::size_t> psi() const noexcept { return psi_; }
  std::size_t phi(std::size_t elem) const { return phi_.at(elem); }
  std::size_t psi(std::size_t param) const { return psi_.at(param); }

  // Derived from the tables on every call.
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const SoftMapping& a, const SoftMapping& b) {
    return same_context(a.src_, b.src_) && same_context(a.dst_, b.dst_) && a.phi_ == b.phi_ &&
           a.psi_ == b.psi_;
  }

 private:
  ContextPtr src_;
  ContextPtr dst_;
  std::vector<std::size_t> phi_;
  std::vector<std::size_t> psi_;
};

/// Row e' is the union of phi(F(e)) over the fiber psi^{-1}(e'); empty fibers
/// give empty rows.
SoftSet image(const SoftMapping& m, const SoftSet& f);
SoftPoint image_of_point(const SoftMapping& m, const SoftPoint& p);
/// Row e is phi^{-1}(G(psi(e))).
SoftSet inverse_image(const SoftMapping& m, const SoftSet& g);
/// g after f. Throws ErrorCode::kChainMismatch unless f.dst() == g.src().
SoftMapping compose(const SoftMapping& g, const SoftMapping& f);
/// Throws ErrorCode::kNotBijective.
SoftMapping inverse(const SoftMapping& m);

}  // namespace softtop
