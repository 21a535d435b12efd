#include "softtop/soft_set.hpp"

#include <bit>
#include <sstream>

#include "softtop/error.hpp"

namespace softtop {

namespace {

constexpr std::size_t word_count(std::size_t cells) { return (cells + 63) / 64; }

constexpr std::uint64_t cell_mask(std::size_t index) { return std::uint64_t{1} << (63 - (index & 63)); }

void check_point(const Context& ctx, std::size_t param, std::size_t elem) {
  if (param >= ctx.param_size() || elem >= ctx.universe_size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "cell (" + std::to_string(param) + "," +
                                                 std::to_string(elem) + ") outside context");
  }
}

}  // namespace

SoftSet::SoftSet(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error(ErrorCode::kInvalidContext, "soft set needs a context");
  bits_.assign(word_count(ctx_->cell_count()), 0);
}

SoftSet SoftSet::absolute(ContextPtr ctx) {
  SoftSet s(std::move(ctx));
  for (auto& w : s.bits_) w = ~std::uint64_t{0};
  s.clear_tail();
  return s;
}

SoftSet SoftSet::from_rows(ContextPtr ctx, const std::vector<std::vector<std::size_t>>& rows) {
  SoftSet s(std::move(ctx));
  if (rows.size() > s.ctx_->param_size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "more rows than parameters");
  }
  for (std::size_t e = 0; e < rows.size(); ++e) {
    for (auto x : rows[e]) s.insert(e, x);
  }
  return s;
}

SoftSet SoftSet::from_labels(ContextPtr ctx,
                             const std::map<std::string, std::vector<std::string>>& rows) {
  SoftSet s(std::move(ctx));
  for (const auto& [param, elems] : rows) {
    auto e = s.ctx_->param_index(param);
    for (const auto& label : elems) s.insert(e, s.ctx_->element_index(label));
  }
  return s;
}

SoftSet SoftSet::from_key(ContextPtr ctx, SoftSetKey key) {
  SoftSet s(std::move(ctx));
  if (key.size() != s.bits_.size()) {
    throw Error(ErrorCode::kContextMismatch, "key width does not match context");
  }
  s.bits_ = std::move(key);
  s.clear_tail();
  return s;
}

void SoftSet::clear_tail() noexcept {
  const auto cells = ctx_->cell_count();
  if (cells % 64 != 0 && !bits_.empty()) {
    bits_.back() &= ~std::uint64_t{0} << (64 - cells % 64);
  }
}

bool SoftSet::contains(std::size_t param, std::size_t elem) const {
  check_point(*ctx_, param, elem);
  return cell(param * ctx_->universe_size() + elem);
}

void SoftSet::insert(std::size_t param, std::size_t elem) {
  check_point(*ctx_, param, elem);
  const auto i = param * ctx_->universe_size() + elem;
  bits_[i >> 6] |= cell_mask(i);
}

void SoftSet::erase(std::size_t param, std::size_t elem) {
  check_point(*ctx_, param, elem);
  const auto i = param * ctx_->universe_size() + elem;
  bits_[i >> 6] &= ~cell_mask(i);
}

std::vector<std::size_t> SoftSet::row(std::size_t param) const {
  std::vector<std::size_t> out;
  const auto n = ctx_->universe_size();
  for (std::size_t x = 0; x < n; ++x) {
    if (cell(param * n + x)) out.push_back(x);
  }
  return out;
}

bool SoftSet::row_empty(std::size_t param) const {
  const auto n = ctx_->universe_size();
  for (std::size_t x = 0; x < n; ++x) {
    if (cell(param * n + x)) return false;
  }
  return true;
}

bool SoftSet::is_null() const noexcept {
  for (auto w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

bool SoftSet::is_absolute() const noexcept { return point_count() == ctx_->cell_count(); }

std::size_t SoftSet::point_count() const noexcept {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string SoftSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t e = 0; e < ctx_->param_size(); ++e) {
    if (e > 0) os << ',';
    os << ctx_->param(e) << ":{";
    bool first = true;
    for (auto x : row(e)) {
      if (!first) os << ',';
      first = false;
      os << ctx_->element(x);
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::string SoftSet::key_string() const {
  std::string s;
  const auto n = ctx_->universe_size();
  for (std::size_t e = 0; e < ctx_->param_size(); ++e) {
    if (e > 0) s.push_back('|');
    for (std::size_t x = 0; x < n; ++x) s.push_back(cell(e * n + x) ? '1' : '0');
  }
  return s;
}

std::size_t SoftSetHash::operator()(const SoftSet& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : s.key()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SoftPoint::SoftPoint(ContextPtr context, std::size_t param_index, std::size_t elem_index)
    : ctx(std::move(context)), param(param_index), elem(elem_index) {
  if (!ctx) throw Error(ErrorCode::kInvalidContext, "soft point needs a context");
  check_point(*ctx, param, elem);
}

SoftSet SoftPoint::as_soft_set() const {
  SoftSet s(ctx);
  s.insert(param, elem);
  return s;
}

std::string SoftPoint::to_string() const {
  return "(" + ctx->element(elem) + " at " + ctx->param(param) + ")";
}

std::vector<SoftPoint> all_points(const ContextPtr& ctx) {
  std::vector<SoftPoint> out;
  out.reserve(ctx->cell_count());
  for (std::size_t e = 0; e < ctx->param_size(); ++e) {
    for (std::size_t x = 0; x < ctx->universe_size(); ++x) out.emplace_back(ctx, e, x);
  }
  return out;
}

bool is_subset(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.ctx_, g.ctx_, "is_subset");
  for (std::size_t i = 0; i < f.bits_.size(); ++i) {
    if ((f.bits_[i] & ~g.bits_[i]) != 0) return false;
  }
  return true;
}

bool is_soft_equal(const SoftSet& f, const SoftSet& g) { return is_subset(f, g) && is_subset(g, f); }

SoftSet complement(const SoftSet& f) {
  SoftSet out = f;
  for (auto& w : out.bits_) w = ~w;
  out.clear_tail();
  return out;
}

SoftSet soft_union(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.ctx_, g.ctx_, "union");
  SoftSet out = f;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] |= g.bits_[i];
  return out;
}

SoftSet soft_intersection(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.ctx_, g.ctx_, "intersection");
  SoftSet out = f;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] &= g.bits_[i];
  return out;
}

SoftSet soft_difference(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.ctx_, g.ctx_, "difference");
  SoftSet out = f;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] &= ~g.bits_[i];
  return out;
}

SoftSet big_union(std::span<const SoftSet> family) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "big_union of an empty family");
  SoftSet out = family.front();
  for (const auto& f : family.subspan(1)) out = soft_union(out, f);
  return out;
}

SoftSet big_intersection(std::span<const SoftSet> family) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "big_intersection of an empty family");
  SoftSet out = family.front();
  for (const auto& f : family.subspan(1)) out = soft_intersection(out, f);
  return out;
}

bool meets(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.ctx_, g.ctx_, "meets");
  for (std::size_t i = 0; i < f.bits_.size(); ++i) {
    if ((f.bits_[i] & g.bits_[i]) != 0) return true;
  }
  return false;
}

SoftSet constant_soft_set(const ContextPtr& ctx, std::span<const std::size_t> subset) {
  if (subset.empty()) throw Error(ErrorCode::kEmptySubset, "constant soft set of an empty subset");
  SoftSet out(ctx);
  for (std::size_t e = 0; e < ctx->param_size(); ++e) {
    for (auto x : subset) out.insert(e, x);
  }
  return out;
}

bool point_in(const SoftPoint& p, const SoftSet& f) {
  require_same_context(p.ctx, f.context(), "point_in");
  return f.contains(p.param, p.elem);
}

std::vector<SoftPoint> enumerate_points(const SoftSet& f) {
  std::vector<SoftPoint> out;
  const auto& ctx = f.context();
  const auto n = ctx->universe_size();
  for (std::size_t e = 0; e < ctx->param_size(); ++e) {
    for (std::size_t x = 0; x < n; ++x) {
      if (f.cell(e * n + x)) out.emplace_back(ctx, e, x);
    }
  }
  return out;
}

SoftSet sub_soft_set(const SoftSet& f, std::span<const std::size_t> subset) {
  if (subset.empty()) throw Error(ErrorCode::kEmptySubset, "sub soft set over an empty subset");
  return soft_intersection(f, constant_soft_set(f.context(), subset));
}

SoftSet restrict_to(const SoftSet& f, const ContextPtr& sub, std::span<const std::size_t> elems,
                    std::span<const std::size_t> params) {
  if (sub->universe_size() != elems.size() || sub->param_size() != params.size()) {
    throw Error(ErrorCode::kContextMismatch, "restriction indices do not match the sub-context");
  }
  SoftSet out(sub);
  for (std::size_t e = 0; e < params.size(); ++e) {
    for (std::size_t x = 0; x < elems.size(); ++x) {
      if (f.contains(params[e], elems[x])) out.insert(e, x);
    }
  }
  return out;
}

SoftSet extend_to(const SoftSet& g, const ContextPtr& parent, std::span<const std::size_t> elems,
                  std::span<const std::size_t> params) {
  const auto& sub = g.context();
  if (sub->universe_size() != elems.size() || sub->param_size() != params.size()) {
    throw Error(ErrorCode::kContextMismatch, "extension indices do not match the sub-context");
  }
  SoftSet out(parent);
  for (std::size_t e = 0; e < params.size(); ++e) {
    for (std::size_t x = 0; x < elems.size(); ++x) {
      if (g.contains(e, x)) out.insert(params[e], elems[x]);
    }
  }
  return out;
}

}  // namespace softtop
