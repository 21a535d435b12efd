#include "softtop/oracle.hpp"

#include <algorithm>
#include <set>

#include "softtop/error.hpp"

namespace softtop::oracle {

namespace {

using Table = std::vector<char>;

Table table_of(const SoftSet& f) {
  const auto cells = f.context()->cell_count();
  Table t(cells);
  for (std::size_t i = 0; i < cells; ++i) t[i] = f.cell(i) ? 1 : 0;
  return t;
}

SoftSet from_table(const ContextPtr& ctx, const Table& t) {
  SoftSet out(ctx);
  const auto n = ctx->universe_size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i]) out.insert(i / n, i % n);
  }
  return out;
}

std::vector<SoftSet> sorted_sets(const ContextPtr& ctx, const std::set<Table>& tables) {
  // std::set orders tables lexicographically, which is the key order.
  std::vector<SoftSet> out;
  for (const auto& t : tables) out.push_back(from_table(ctx, t));
  return out;
}

constexpr std::size_t kRandomSpaceRetries = 16;

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  while (true) {
    const auto v = engine_();
    if (v < limit) return v % n;
  }
}

std::uint64_t split(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool exhaustive(const Context& ctx) { return ctx.cell_count() <= 8; }

ContextPtr make_context(std::size_t universe, std::size_t params) {
  std::vector<std::string> u;
  std::vector<std::string> e;
  for (std::size_t i = 0; i < universe; ++i) {
    u.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "u" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < params; ++i) e.push_back("e" + std::to_string(i + 1));
  return Context::make(std::move(u), std::move(e));
}

ContextPtr random_context(Rng& rng, const OracleConfig& cfg) {
  const auto u = 1 + rng.below(std::max<std::size_t>(cfg.max_universe, 1));
  const auto e = 1 + rng.below(std::max<std::size_t>(cfg.max_params, 1));
  return make_context(u, e);
}

SoftSet random_soft_set(Rng& rng, const ContextPtr& ctx) {
  SoftSet out(ctx);
  for (std::size_t e = 0; e < ctx->param_size(); ++e) {
    for (std::size_t x = 0; x < ctx->universe_size(); ++x) {
      if (rng.coin()) out.insert(e, x);
    }
  }
  return out;
}

SoftMapping random_mapping(Rng& rng, const ContextPtr& src, const ContextPtr& dst) {
  std::vector<std::size_t> phi(src->universe_size());
  std::vector<std::size_t> psi(src->param_size());
  for (auto& v : phi) v = rng.below(dst->universe_size());
  for (auto& v : psi) v = rng.below(dst->param_size());
  return SoftMapping(src, dst, std::move(phi), std::move(psi));
}

SoftSpace random_space_on(Rng& rng, const ContextPtr& ctx, std::size_t max_subbase) {
  for (std::size_t attempt = 0;; ++attempt) {
    const auto k = max_subbase == 0 ? 0 : 1 + rng.below(max_subbase);
    std::vector<SoftSet> subbase;
    for (std::size_t i = 0; i < k; ++i) subbase.push_back(random_soft_set(rng, ctx));
    try {
      return SoftSpace(generate_from_subbase(ctx, subbase).topology);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSizeCapExceeded || attempt + 1 >= kRandomSpaceRetries) throw;
    }
  }
}

SoftSpace random_space(Rng& rng, const OracleConfig& cfg) {
  return random_space_on(rng, random_context(rng, cfg), cfg.max_subbase);
}

SoftSpace random_space(const OracleConfig& cfg) {
  Rng rng(cfg.seed);
  return random_space(rng, cfg);
}

std::vector<SoftSet> enumerate_all_soft_sets(const ContextPtr& ctx) {
  const auto cells = ctx->cell_count();
  if (cells > 16) {
    throw Error(ErrorCode::kTooLarge, std::to_string(cells) + " cells is too many to enumerate");
  }
  std::vector<SoftSet> out;
  out.reserve(std::size_t{1} << cells);
  Table t(cells);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    // Cell 0 is the most significant bit of the code.
    for (std::size_t i = 0; i < cells; ++i) t[i] = (code >> (cells - 1 - i)) & 1u;
    out.push_back(from_table(ctx, t));
  }
  return out;
}

MappedSpace random_continuous_target(Rng& rng, const SoftSpace& x, const OracleConfig& cfg) {
  const auto ctx = random_context(rng, cfg);
  auto m = random_mapping(rng, x.context(), ctx);
  std::set<Table> xopens;
  for (const auto& o : x.opens()) xopens.insert(table_of(o));
  std::vector<SoftSet> admissible;
  for (const auto& g : enumerate_all_soft_sets(ctx)) {
    if (xopens.contains(table_of(naive_inverse_image(m, g)))) admissible.push_back(g);
  }
  const auto k = cfg.max_subbase == 0 ? 0 : rng.below(cfg.max_subbase + 1);
  std::vector<SoftSet> subbase;
  for (std::size_t i = 0; i < k; ++i) subbase.push_back(admissible[rng.below(admissible.size())]);
  return MappedSpace{SoftSpace(generate_from_subbase(ctx, subbase).topology), std::move(m)};
}

SoftSet closure_via_adherence(const SoftSpace& space, const SoftSet& f) {
  const auto& ctx = space.context();
  const auto cells = ctx->cell_count();
  const auto ft = table_of(f);
  std::vector<Table> opens;
  for (const auto& o : space.opens()) opens.push_back(table_of(o));
  Table out(cells, 0);
  for (std::size_t p = 0; p < cells; ++p) {
    bool adherent = true;
    for (const auto& o : opens) {
      if (!o[p]) continue;
      bool meets = false;
      for (std::size_t i = 0; i < cells; ++i) meets = meets || (o[i] && ft[i]);
      if (!meets) {
        adherent = false;
        break;
      }
    }
    out[p] = adherent ? 1 : 0;
  }
  return from_table(ctx, out);
}

std::vector<SoftSet> naive_generate(const ContextPtr& ctx, std::span<const SoftSet> subbase) {
  const auto cells = ctx->cell_count();
  std::set<Table> family{Table(cells, 0), Table(cells, 1)};
  for (const auto& s : subbase) family.insert(table_of(s));
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Table> snapshot(family.begin(), family.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        Table u(cells);
        Table n(cells);
        for (std::size_t i = 0; i < cells; ++i) {
          u[i] = a[i] || b[i];
          n[i] = a[i] && b[i];
        }
        changed = family.insert(u).second || changed;
        changed = family.insert(n).second || changed;
      }
    }
  }
  return sorted_sets(ctx, family);
}

namespace {

// Cell of the image of point (e, x).
std::size_t image_cell(const SoftMapping& m, std::size_t cell) {
  const auto n = m.src()->universe_size();
  return m.psi(cell / n) * m.dst()->universe_size() + m.phi(cell % n);
}

}  // namespace

bool naive_is_continuous(const SoftMapping& m, const SoftSpace& x, const SoftSpace& y) {
  const auto cells = x.context()->cell_count();
  std::vector<Table> xo;
  std::vector<Table> yo;
  for (const auto& o : x.opens()) xo.push_back(table_of(o));
  for (const auto& o : y.opens()) yo.push_back(table_of(o));
  for (std::size_t p = 0; p < cells; ++p) {
    const auto q = image_cell(m, p);
    for (const auto& g : yo) {
      if (!g[q]) continue;
      bool found = false;
      for (const auto& f : xo) {
        if (!f[p]) continue;
        bool inside = true;
        for (std::size_t i = 0; i < cells && inside; ++i) inside = !f[i] || g[image_cell(m, i)];
        if (inside) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

SoftSet naive_image(const SoftMapping& m, const SoftSet& f) {
  const auto t = table_of(f);
  Table out(m.dst()->cell_count(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i]) out[image_cell(m, i)] = 1;
  }
  return from_table(m.dst(), out);
}

SoftSet naive_inverse_image(const SoftMapping& m, const SoftSet& g) {
  const auto t = table_of(g);
  Table out(m.src()->cell_count(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t[image_cell(m, i)];
  return from_table(m.src(), out);
}

namespace {

// Mixed-radix digits, first factor most significant.
std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> out(radix.size());
  for (std::size_t i = radix.size(); i > 0; --i) {
    out[i - 1] = index % radix[i - 1];
    index /= radix[i - 1];
  }
  return out;
}

template <typename Member>
SoftSet product_by_digits(const ProductContext& product, Member member) {
  std::vector<std::size_t> ur;
  std::vector<std::size_t> er;
  for (const auto& f : product.factors()) {
    ur.push_back(f->universe_size());
    er.push_back(f->param_size());
  }
  const auto& ctx = product.context();
  SoftSet out(ctx);
  for (std::size_t e = 0; e < ctx->param_size(); ++e) {
    const auto ed = digits(e, er);
    for (std::size_t x = 0; x < ctx->universe_size(); ++x) {
      const auto xd = digits(x, ur);
      bool all = true;
      for (std::size_t i = 0; i < ur.size() && all; ++i) all = member(i, ed[i], xd[i]);
      if (all) out.insert(e, x);
    }
  }
  return out;
}

}  // namespace

SoftSet naive_product(const ProductContext& product, std::span<const SoftSet> sets) {
  return product_by_digits(product, [&](std::size_t i, std::size_t e, std::size_t x) {
    return sets[i].cell(e * sets[i].context()->universe_size() + x);
  });
}

SoftSet naive_slab(const ProductContext& product, std::size_t i, const SoftSet& payload) {
  return product_by_digits(product, [&](std::size_t k, std::size_t e, std::size_t x) {
    return k != i || payload.cell(e * payload.context()->universe_size() + x);
  });
}

bool naive_is_generated(const ContextPtr& ctx, std::span<const SoftSet> subbase,
                        const SoftSet& target) {
  if (subbase.size() > 16) throw Error(ErrorCode::kTooLarge, "subbase too large for the oracle");
  const auto cells = ctx->cell_count();
  const auto t = table_of(target);
  std::vector<Table> members;
  for (const auto& s : subbase) members.push_back(table_of(s));
  for (std::size_t p = 0; p < cells; ++p) {
    if (!t[p]) continue;
    bool covered = false;
    for (std::uint32_t mask = 0; mask < (1u << members.size()) && !covered; ++mask) {
      Table acc(cells, 1);
      for (std::size_t k = 0; k < members.size(); ++k) {
        if ((mask >> k) & 1u) {
          for (std::size_t i = 0; i < cells; ++i) acc[i] = acc[i] && members[k][i];
        }
      }
      if (!acc[p]) continue;
      bool inside = true;
      for (std::size_t i = 0; i < cells && inside; ++i) inside = !acc[i] || t[i];
      covered = inside;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace softtop::oracle
