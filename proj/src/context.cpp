#include "softtop/context.hpp"

#include <numeric>

#include "softtop/error.hpp"

namespace softtop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidContext: return "InvalidContext";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kFactorArityMismatch: return "FactorArityMismatch";
    case ErrorCode::kInvalidMapping: return "InvalidMapping";
    case ErrorCode::kChainMismatch: return "ChainMismatch";
    case ErrorCode::kNotBijective: return "NotBijective";
    case ErrorCode::kNotOpenMember: return "NotOpenMember";
    case ErrorCode::kNotOpenPayload: return "NotOpenPayload";
    case ErrorCode::kDuplicateIndex: return "DuplicateIndex";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kLemmaViolation: return "LemmaViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::unordered_map<std::string, std::size_t> build_lookup(const std::vector<std::string>& labels,
                                                          std::string_view what) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidContext, std::string(what) + " must be nonempty");
  }
  std::unordered_map<std::string, std::size_t> lookup;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!lookup.emplace(labels[i], i).second) {
      throw Error(ErrorCode::kInvalidContext,
                  "duplicate " + std::string(what) + " label '" + labels[i] + "'");
    }
  }
  return lookup;
}

void require_increasing(std::span<const std::size_t> idx, std::size_t bound, std::string_view what) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= bound) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  std::string(what) + " index " + std::to_string(idx[i]) + " out of range");
    }
    if (i > 0 && idx[i] <= idx[i - 1]) {
      throw Error(ErrorCode::kInvalidContext,
                  std::string(what) + " indices must be strictly increasing");
    }
  }
}

}  // namespace

Context::Context(std::vector<std::string> universe, std::vector<std::string> params)
    : universe_(std::move(universe)), params_(std::move(params)) {
  element_lookup_ = build_lookup(universe_, "universe");
  param_lookup_ = build_lookup(params_, "parameter");
}

ContextPtr Context::make(std::vector<std::string> universe, std::vector<std::string> params) {
  return std::make_shared<const Context>(std::move(universe), std::move(params));
}

std::optional<std::size_t> Context::find_element(std::string_view label) const {
  auto it = element_lookup_.find(std::string(label));
  if (it == element_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Context::find_param(std::string_view label) const {
  auto it = param_lookup_.find(std::string(label));
  if (it == param_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Context::element_index(std::string_view label) const {
  if (auto i = find_element(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel, "unknown universe element '" + std::string(label) + "'");
}

std::size_t Context::param_index(std::string_view label) const {
  if (auto i = find_param(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel, "unknown parameter '" + std::string(label) + "'");
}

ContextPtr Context::sub_context(std::span<const std::size_t> elems,
                                std::span<const std::size_t> params) const {
  require_increasing(elems, universe_.size(), "universe");
  require_increasing(params, params_.size(), "parameter");
  std::vector<std::string> u;
  std::vector<std::string> e;
  for (auto i : elems) u.push_back(universe_[i]);
  for (auto i : params) e.push_back(params_[i]);
  if (u.empty()) throw Error(ErrorCode::kEmptySubset, "sub-context needs a nonempty universe");
  return make(std::move(u), std::move(e));
}

bool same_context(const Context& a, const Context& b) { return &a == &b || a == b; }

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_context(const ContextPtr& a, const ContextPtr& b, std::string_view what) {
  if (!same_context(a, b)) {
    throw Error(ErrorCode::kContextMismatch, std::string(what) + ": operands use different contexts");
  }
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace softtop
