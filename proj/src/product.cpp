#include "softtop/product.hpp"

#include <limits>

#include "softtop/error.hpp"

namespace softtop {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

// Enumerates all index tuples in mixed-radix order and emits their labels.
std::vector<std::string> tuple_labels(const std::vector<std::vector<std::string>>& parts) {
  std::vector<std::string> out;
  std::vector<std::size_t> digit(parts.size(), 0);
  std::vector<std::string> comp(parts.size());
  while (true) {
    for (std::size_t i = 0; i < parts.size(); ++i) comp[i] = parts[i][digit[i]];
    out.push_back(tuple_label(comp));
    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++digit[i] < parts[i].size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<std::size_t> strides(const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> s(radix.size(), 1);
  for (std::size_t i = radix.size(); i-- > 1;) s[i - 1] = s[i] * radix[i];
  return s;
}

}  // namespace

std::string tuple_label(std::span<const std::string> components) {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) s.push_back(',');
    s += components[i];
  }
  s.push_back(')');
  return s;
}

ProductContextPtr ProductContext::make(std::vector<ContextPtr> factors, std::size_t cell_budget) {
  if (factors.empty()) {
    throw Error(ErrorCode::kFactorArityMismatch, "a product needs at least one factor");
  }
  std::size_t nu = 1;
  std::size_t ne = 1;
  std::vector<std::size_t> urad;
  std::vector<std::size_t> erad;
  for (const auto& f : factors) {
    if (!f) throw Error(ErrorCode::kInvalidContext, "null factor context");
    nu = checked_mul(nu, f->universe_size());
    ne = checked_mul(ne, f->param_size());
    urad.push_back(f->universe_size());
    erad.push_back(f->param_size());
  }
  const auto cells = checked_mul(nu, ne);
  if (cells > cell_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "product has " + std::to_string(nu) + " elements x " + std::to_string(ne) +
                    " parameters = " + std::to_string(cells) + " cells, budget is " +
                    std::to_string(cell_budget));
  }
  std::vector<std::vector<std::string>> ulabels;
  std::vector<std::vector<std::string>> elabels;
  for (const auto& f : factors) {
    ulabels.emplace_back(f->universe().begin(), f->universe().end());
    elabels.emplace_back(f->params().begin(), f->params().end());
  }
  auto p = std::shared_ptr<ProductContext>(new ProductContext());
  p->derived_ = Context::make(tuple_labels(ulabels), tuple_labels(elabels));
  p->factors_ = std::move(factors);
  p->elem_stride_ = strides(urad);
  p->param_stride_ = strides(erad);
  p->cell_budget_ = cell_budget;
  return p;
}

std::size_t ProductContext::element_index(std::span<const std::size_t> components) const {
  if (components.size() != arity()) {
    throw Error(ErrorCode::kFactorArityMismatch, "element tuple has wrong arity");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (components[i] >= factors_[i]->universe_size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "element component out of range");
    }
    idx += components[i] * elem_stride_[i];
  }
  return idx;
}

std::size_t ProductContext::param_index(std::span<const std::size_t> components) const {
  if (components.size() != arity()) {
    throw Error(ErrorCode::kFactorArityMismatch, "parameter tuple has wrong arity");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (components[i] >= factors_[i]->param_size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "parameter component out of range");
    }
    idx += components[i] * param_stride_[i];
  }
  return idx;
}

std::size_t ProductContext::element_component(std::size_t tuple, std::size_t factor) const {
  return (tuple / elem_stride_.at(factor)) % factors_[factor]->universe_size();
}

std::size_t ProductContext::param_component(std::size_t tuple, std::size_t factor) const {
  return (tuple / param_stride_.at(factor)) % factors_[factor]->param_size();
}

std::vector<std::size_t> ProductContext::element_components(std::size_t tuple) const {
  std::vector<std::size_t> out(arity());
  for (std::size_t i = 0; i < arity(); ++i) out[i] = element_component(tuple, i);
  return out;
}

std::vector<std::size_t> ProductContext::param_components(std::size_t tuple) const {
  std::vector<std::size_t> out(arity());
  for (std::size_t i = 0; i < arity(); ++i) out[i] = param_component(tuple, i);
  return out;
}

SoftPoint ProductContext::component_point(const SoftPoint& p, std::size_t i) const {
  require_same_context(p.ctx, derived_, "component_point");
  if (i >= arity()) throw Error(ErrorCode::kIndexOutOfRange, "factor index out of range");
  return SoftPoint(factors_[i], param_component(p.param, i), element_component(p.elem, i));
}

namespace {

void check_factors(const ProductContext& product, std::span<const SoftSet> factors) {
  if (factors.size() != product.arity()) {
    throw Error(ErrorCode::kFactorArityMismatch,
                "expected " + std::to_string(product.arity()) + " factor soft sets, got " +
                    std::to_string(factors.size()));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    require_same_context(factors[i].context(), product.factor(i), "product factor");
  }
}

}  // namespace

SoftSet product_soft_set(const ProductContext& product, std::span<const SoftSet> factors) {
  check_factors(product, factors);
  const auto& ctx = product.context();
  SoftSet out(ctx);
  for (std::size_t e = 0; e < ctx->param_size(); ++e) {
    // Rows F_i(e_i) for this tuple parameter; skip early if any is empty.
    std::vector<std::vector<std::size_t>> rows;
    bool empty = false;
    for (std::size_t i = 0; i < product.arity() && !empty; ++i) {
      rows.push_back(factors[i].row(product.param_component(e, i)));
      empty = rows.back().empty();
    }
    if (empty) continue;
    std::vector<std::size_t> digit(rows.size(), 0);
    std::vector<std::size_t> comp(rows.size());
    while (true) {
      for (std::size_t i = 0; i < rows.size(); ++i) comp[i] = rows[i][digit[i]];
      out.insert(e, product.element_index(comp));
      std::size_t i = rows.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++digit[i] < rows[i].size()) break;
        digit[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return out;
}

bool point_in_product(const ProductContext& product, const SoftPoint& p,
                      std::span<const SoftSet> factors) {
  check_factors(product, factors);
  for (std::size_t i = 0; i < product.arity(); ++i) {
    if (!point_in(product.component_point(p, i), factors[i])) return false;
  }
  return true;
}

}  // namespace softtop
