#include "softtop/mapping.hpp"

#include "softtop/error.hpp"

namespace softtop {

namespace {

bool injective_table(std::span<const std::size_t> table, std::size_t range) {
  std::vector<bool> seen(range, false);
  for (auto v : table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool surjective_table(std::span<const std::size_t> table, std::size_t range) {
  std::vector<bool> seen(range, false);
  std::size_t hit = 0;
  for (auto v : table) {
    if (!seen[v]) {
      seen[v] = true;
      ++hit;
    }
  }
  return hit == range;
}

void validate_table(std::span<const std::size_t> table, std::size_t domain, std::size_t range,
                    const char* name) {
  if (table.size() != domain) {
    throw Error(ErrorCode::kInvalidMapping, std::string(name) + " is not total: " +
                                                std::to_string(table.size()) + " entries for " +
                                                std::to_string(domain) + " labels");
  }
  for (auto v : table) {
    if (v >= range) throw Error(ErrorCode::kInvalidMapping, std::string(name) + " leaves the target");
  }
}

}  // namespace

SoftMapping::SoftMapping(ContextPtr src, ContextPtr dst, std::vector<std::size_t> phi,
                         std::vector<std::size_t> psi)
    : src_(std::move(src)), dst_(std::move(dst)), phi_(std::move(phi)), psi_(std::move(psi)) {
  if (!src_ || !dst_) throw Error(ErrorCode::kInvalidMapping, "mapping needs both contexts");
  validate_table(phi_, src_->universe_size(), dst_->universe_size(), "phi");
  validate_table(psi_, src_->param_size(), dst_->param_size(), "psi");
}

SoftMapping SoftMapping::identity(const ContextPtr& ctx) {
  return SoftMapping(ctx, ctx, iota_indices(ctx->universe_size()), iota_indices(ctx->param_size()));
}

bool SoftMapping::is_injective() const {
  return injective_table(phi_, dst_->universe_size()) && injective_table(psi_, dst_->param_size());
}

bool SoftMapping::is_surjective() const {
  return surjective_table(phi_, dst_->universe_size()) &&
         surjective_table(psi_, dst_->param_size());
}

SoftSet image(const SoftMapping& m, const SoftSet& f) {
  require_same_context(f.context(), m.src(), "image");
  SoftSet out(m.dst());
  const auto n = m.src()->universe_size();
  for (std::size_t e = 0; e < m.src()->param_size(); ++e) {
    const auto target = m.psi(e);
    for (std::size_t x = 0; x < n; ++x) {
      if (f.cell(e * n + x)) out.insert(target, m.phi(x));
    }
  }
  return out;
}

SoftPoint image_of_point(const SoftMapping& m, const SoftPoint& p) {
  require_same_context(p.ctx, m.src(), "image_of_point");
  return SoftPoint(m.dst(), m.psi(p.param), m.phi(p.elem));
}

SoftSet inverse_image(const SoftMapping& m, const SoftSet& g) {
  require_same_context(g.context(), m.dst(), "inverse_image");
  SoftSet out(m.src());
  for (std::size_t e = 0; e < m.src()->param_size(); ++e) {
    const auto target = m.psi(e);
    for (std::size_t x = 0; x < m.src()->universe_size(); ++x) {
      if (g.contains(target, m.phi(x))) out.insert(e, x);
    }
  }
  return out;
}

SoftMapping compose(const SoftMapping& g, const SoftMapping& f) {
  if (!same_context(f.dst(), g.src())) {
    throw Error(ErrorCode::kChainMismatch, "compose: target of the inner mapping is not the source of the outer one");
  }
  std::vector<std::size_t> phi(f.phi().size());
  std::vector<std::size_t> psi(f.psi().size());
  for (std::size_t x = 0; x < phi.size(); ++x) phi[x] = g.phi(f.phi(x));
  for (std::size_t e = 0; e < psi.size(); ++e) psi[e] = g.psi(f.psi(e));
  return SoftMapping(f.src(), g.dst(), std::move(phi), std::move(psi));
}

SoftMapping inverse(const SoftMapping& m) {
  if (!m.is_bijective()) throw Error(ErrorCode::kNotBijective, "inverse of a non-bijective mapping");
  std::vector<std::size_t> phi(m.phi().size());
  std::vector<std::size_t> psi(m.psi().size());
  for (std::size_t x = 0; x < phi.size(); ++x) phi[m.phi(x)] = x;
  for (std::size_t e = 0; e < psi.size(); ++e) psi[m.psi(e)] = e;
  return SoftMapping(m.dst(), m.src(), std::move(phi), std::move(psi));
}

}  // namespace softtop
