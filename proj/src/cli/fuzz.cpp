#include "softtop/cli/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "softtop/continuity.hpp"
#include "softtop/embedding.hpp"
#include "softtop/error.hpp"
#include "softtop/oracle.hpp"
#include "softtop/product_topology.hpp"

namespace softtop::cli {

namespace {

using oracle::Rng;

constexpr std::size_t kSampleSets = 16;
constexpr std::size_t kSamplePairs = 32;

// Outcome of one property on one instance.
struct Outcome {
  enum class Kind { kPass, kFail, kSkip } kind = Kind::kPass;
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string d) { return {Kind::kFail, std::move(d)}; }
  static Outcome skip() { return {Kind::kSkip, {}}; }
};

struct Instance {
  std::size_t index;
  std::uint64_t seed;
  oracle::OracleConfig cfg;
  SoftSpace x;
};

struct Property {
  std::string name;
  std::string anchor;
  std::function<Outcome(const Instance&, Rng&)> check;
};

std::vector<SoftSet> sample_sets(Rng& rng, const ContextPtr& ctx) {
  if (oracle::exhaustive(*ctx)) return oracle::enumerate_all_soft_sets(ctx);
  std::vector<SoftSet> out;
  for (std::size_t i = 0; i < kSampleSets; ++i) out.push_back(oracle::random_soft_set(rng, ctx));
  return out;
}

Outcome check_generation(const Instance& in, Rng& rng) {
  const auto& ctx = in.x.context();
  std::vector<SoftSet> subbase;
  const auto k = rng.below(in.cfg.max_subbase + 1);
  for (std::size_t i = 0; i < k; ++i) subbase.push_back(oracle::random_soft_set(rng, ctx));
  const auto generated = generate_from_subbase(ctx, subbase).topology;
  const auto naive = oracle::naive_generate(ctx, subbase);
  if (!verify_axioms(ctx, generated.opens()).ok()) return Outcome::fail("axioms fail");
  if (!std::equal(generated.opens().begin(), generated.opens().end(), naive.begin(), naive.end())) {
    return Outcome::fail("generated " + std::to_string(generated.size()) + " open sets, fixpoint " +
                         std::to_string(naive.size()));
  }
  return Outcome::pass();
}

Outcome check_closure(const Instance& in, Rng& rng) {
  for (const auto& f : sample_sets(rng, in.x.context())) {
    if (closure(in.x, f) != oracle::closure_via_adherence(in.x, f)) {
      return Outcome::fail("closure of " + f.to_string());
    }
  }
  return Outcome::pass();
}

Outcome check_closure_laws(const Instance& in, Rng& rng) {
  const auto& ctx = in.x.context();
  const auto sets = sample_sets(rng, ctx);
  if (!closure(in.x, SoftSet::null(ctx)).is_null()) return Outcome::fail("closure of null");
  for (const auto& f : sets) {
    const auto cf = closure(in.x, f);
    if (!is_subset(f, cf)) return Outcome::fail("not extensive at " + f.to_string());
    if (closure(in.x, cf) != cf) return Outcome::fail("not idempotent at " + f.to_string());
    if (!in.x.is_closed(cf)) return Outcome::fail("not closed at " + f.to_string());
    if (in.x.is_closed(f) != (cf == f)) return Outcome::fail("fixed points at " + f.to_string());
  }
  for (std::size_t i = 0; i < kSamplePairs; ++i) {
    const auto& f = sets[rng.below(sets.size())];
    const auto& g = sets[rng.below(sets.size())];
    const auto cf = closure(in.x, f);
    const auto cg = closure(in.x, g);
    if (closure(in.x, soft_union(f, g)) != soft_union(cf, cg)) {
      return Outcome::fail("union law at " + f.to_string() + ", " + g.to_string());
    }
    if (!is_subset(closure(in.x, soft_intersection(f, g)), soft_intersection(cf, cg))) {
      return Outcome::fail("intersection inclusion at " + f.to_string() + ", " + g.to_string());
    }
    if (is_subset(f, g) && !is_subset(cf, cg)) {
      return Outcome::fail("monotonicity at " + f.to_string() + ", " + g.to_string());
    }
  }
  return Outcome::pass();
}

Outcome check_continuity(const Instance& in, Rng& rng) {
  const auto y = oracle::random_space(rng, in.cfg);
  const auto m = oracle::random_mapping(rng, in.x.context(), y.context());
  const bool pointwise = is_continuous(m, in.x, y, ContinuityMethod::kPointwise).verdict;
  const bool open = is_continuous(m, in.x, y, ContinuityMethod::kOpenPreimage).verdict;
  const bool closed = is_continuous(m, in.x, y, ContinuityMethod::kClosedPreimage).verdict;
  const bool naive = oracle::naive_is_continuous(m, in.x, y);
  if (pointwise != open || open != closed || closed != naive) {
    return Outcome::fail(std::string("pointwise=") + (pointwise ? "1" : "0") +
                         " open=" + (open ? "1" : "0") + " closed=" + (closed ? "1" : "0") +
                         " naive=" + (naive ? "1" : "0"));
  }
  return Outcome::pass();
}

Outcome check_subspace_closure(const Instance& in, Rng& rng) {
  const auto& ctx = in.x.context();
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < ctx->universe_size(); ++i) {
    if (rng.coin()) elems.push_back(i);
  }
  if (elems.empty()) elems.push_back(rng.below(ctx->universe_size()));
  const auto params = iota_indices(ctx->param_size());
  const auto sub = subspace(in.x, elems);
  const auto& sctx = sub.context();
  for (const auto& f : sample_sets(rng, sctx)) {
    const auto expected = restrict_to(closure(in.x, extend_to(f, ctx, elems, params)), sctx, elems,
                                      params);
    if (closure(sub, f) != expected) return Outcome::fail("closure of " + f.to_string());
  }
  for (const auto& c : sub.closed()) {
    const bool from_parent = std::any_of(in.x.closed().begin(), in.x.closed().end(),
                                         [&](const SoftSet& d) {
                                           return restrict_to(d, sctx, elems, params) == c;
                                         });
    if (!from_parent) return Outcome::fail("closed set " + c.to_string() + " has no parent");
  }
  return Outcome::pass();
}

oracle::OracleConfig small_factor() {
  oracle::OracleConfig cfg;
  cfg.max_universe = 2;
  cfg.max_params = 1;
  cfg.max_subbase = 2;
  return cfg;
}

Outcome check_slabs(const Instance& in, Rng& rng) {
  const std::vector<SoftSpace> factors{in.x, oracle::random_space(rng, small_factor())};
  const auto product = ProductContext::make({factors[0].context(), factors[1].context()});
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& g : factors[i].opens()) {
      const SlabComponent c{i, g};
      const auto s = slab(product, factors, c);
      if (s != oracle::naive_slab(*product, i, g) ||
          s != nslab_product_form(product, std::span(&c, 1))) {
        return Outcome::fail("slab of " + g.to_string() + " at factor " + std::to_string(i));
      }
    }
  }
  return Outcome::pass();
}

Outcome check_product_topology(const Instance& in, Rng& rng) {
  const std::vector<SoftSpace> factors{in.x, oracle::random_space(rng, small_factor())};
  try {
    const auto p = product_topology(factors);
    if (p.space.topology() != product_topology_via_projections(p.product, factors) ||
        p.space.topology() != product_topology_via_nslabs(p.product, factors)) {
      return Outcome::fail("product topology constructions differ");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!is_continuous(projection_mapping(p.product, i), p.space, factors[i]).verdict) {
        return Outcome::fail("projection " + std::to_string(i) + " is not continuous");
      }
    }
    const auto a = sample_sets(rng, factors[0].context());
    const auto b = sample_sets(rng, factors[1].context());
    for (std::size_t k = 0; k < kSamplePairs; ++k) {
      const std::vector<SoftSet> sets{a[rng.below(a.size())], b[rng.below(b.size())]};
      if (!closure_of_product_check(p, sets)) {
        return Outcome::fail("closure of product of " + sets[0].to_string() + ", " +
                             sets[1].to_string());
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSizeCapExceeded || e.code() == ErrorCode::kBudgetExceeded) {
      return Outcome::skip();
    }
    throw;
  }
  return Outcome::pass();
}

Outcome check_embedding_lemma(const Instance& in, Rng& rng) {
  std::vector<MappedSpace> targets{MappedSpace{in.x, SoftMapping::identity(in.x.context())}};
  targets.push_back(oracle::random_continuous_target(rng, in.x, small_factor()));
  LemmaOptions options;
  options.throw_on_violation = false;
  const auto report = verify_embedding_lemma(in.x, targets, options);
  if (report.violation()) return Outcome::fail(report.summary());
  if (!report.diagonal_inclusion) {
    return Outcome::fail("diagonal image not within product at " +
                         report.inclusion_witness->to_string());
  }
  return Outcome::pass();
}

std::vector<Property> properties() {
  return {
      {"generation", "Def: topology generated by a subbase", check_generation},
      {"closure_adherence", "Prop: closure is the set of adherent points", check_closure},
      {"closure_laws", "Prop: properties of soft closure", check_closure_laws},
      {"continuity_equivalence", "Prop: characterizations of soft continuity", check_continuity},
      {"subspace_closure", "Prop: closure in a soft relative topology", check_subspace_closure},
      {"slab_duality", "Prop: soft slabs as soft products", check_slabs},
      {"product_topology", "Prop: closure of a soft product", check_product_topology},
      {"embedding_lemma", "Prop: soft embedding lemma", check_embedding_lemma},
  };
}

}  // namespace

bool FuzzReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyTally& t) { return t.failures == 0; });
}

FuzzReport fuzz(const FuzzOptions& options) {
  if (options.max_universe == 0 || options.max_params == 0) {
    throw Error(ErrorCode::kInvalidContext, "fuzz caps must be positive");
  }
  FuzzReport report{options, {}};
  const auto props = properties();
  for (const auto& p : props) {
    PropertyTally tally;
    tally.name = p.name;
    tally.anchor = p.anchor;
    report.properties.push_back(std::move(tally));
  }

  oracle::OracleConfig cfg;
  cfg.max_universe = options.max_universe;
  cfg.max_params = options.max_params;
  cfg.seed = options.seed;
  for (std::size_t i = 0; i < options.iterations; ++i) {
    const auto seed = oracle::split(options.seed, i);
    Rng rng(seed);
    Instance instance{i, seed, cfg, oracle::random_space(rng, cfg)};
    for (std::size_t k = 0; k < props.size(); ++k) {
      Rng sub(oracle::split(seed, k));
      Outcome outcome;
      try {
        outcome = props[k].check(instance, sub);
      } catch (const Error& e) {
        outcome = Outcome::fail(e.what());
      }
      auto& tally = report.properties[k];
      if (outcome.kind == Outcome::Kind::kSkip) {
        ++tally.skipped;
        continue;
      }
      ++tally.checked;
      if (outcome.kind == Outcome::Kind::kFail) {
        if (tally.failures++ == 0) {
          tally.first_instance = i;
          tally.first_failure = outcome.detail;
        }
      }
    }
  }
  return report;
}

std::string FuzzReport::text() const {
  std::ostringstream os;
  os << "fuzz seed=" << options.seed << " iterations=" << options.iterations
     << " max_universe=" << options.max_universe << " max_params=" << options.max_params << "\n";
  for (const auto& t : properties) {
    os << "  " << t.name << ": checked=" << t.checked << " skipped=" << t.skipped << " failures=" << t.failures << " ["
       << t.anchor << "]\n";
    if (t.first_failure) {
      os << "    first failure at instance " << *t.first_instance << " (seed " << options.seed
         << "): " << *t.first_failure << "\n";
    }
  }
  os << "status: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string FuzzReport::json() const {
  nlohmann::ordered_json doc;
  doc["command"] = "fuzz";
  doc["seed"] = options.seed;
  doc["iterations"] = options.iterations;
  doc["max_universe"] = options.max_universe;
  doc["max_params"] = options.max_params;
  auto props = nlohmann::ordered_json::array();
  for (const auto& t : properties) {
    nlohmann::ordered_json p;
    p["name"] = t.name;
    p["anchor"] = t.anchor;
    p["checked"] = t.checked;
    p["skipped"] = t.skipped;
    p["failures"] = t.failures;
    if (t.first_failure) {
      p["first_failure"] = {{"instance", *t.first_instance}, {"detail", *t.first_failure}};
    } else {
      p["first_failure"] = nullptr;
    }
    props.push_back(std::move(p));
  }
  doc["properties"] = std::move(props);
  doc["status"] = passed() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace softtop::cli
