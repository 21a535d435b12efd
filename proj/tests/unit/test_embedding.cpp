#include <doctest.h>

#include "softtop/embedding.hpp"
#include "softtop/oracle.hpp"
#include "softtop/product_topology.hpp"
#include "support/fixtures.hpp"

using namespace softtop;
using fixtures::set;

TEST_CASE("closed mappings") {
  auto ctx = fixtures::ab_e12();
  const auto x = fixtures::f1_space(ctx);
  const auto id = SoftMapping::identity(ctx);
  CHECK(is_closed_mapping(id, x, x));
  CHECK(is_closed_mapping(id, x, SoftSpace(SoftTopology::discrete(ctx))));
  const auto r = closed_mapping_report(id, x, SoftSpace(SoftTopology::indiscrete(ctx)));
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(*r.witness == set(ctx, {{"e1", {"b"}}, {"e2", {"b"}}}));
}

TEST_CASE("homeomorphisms") {
  auto ctx = fixtures::ab_e12();
  const auto x = fixtures::f1_space(ctx);
  const auto id = SoftMapping::identity(ctx);
  CHECK(is_homeomorphism(id, x, x));
  const SoftSpace fine(SoftTopology::discrete(ctx));
  CHECK(is_continuous(id, fine, x).verdict);
  CHECK_FALSE(is_homeomorphism(id, fine, x));

  const SoftMapping swap(ctx, ctx, {1, 0}, {0, 1});
  const SoftSpace relabeled(SoftTopology::from_opens(
      ctx, {SoftSet::null(ctx), SoftSet::absolute(ctx), set(ctx, {{"e1", {"b"}}, {"e2", {"b"}}})}));
  CHECK(is_homeomorphism(swap, x, relabeled));
  CHECK_FALSE(is_homeomorphism(swap, x, x));
}

TEST_CASE("embedding certificates") {
  auto ctx = fixtures::ab_e12();
  const auto x = fixtures::f1_space(ctx);
  const auto id = SoftMapping::identity(ctx);
  const auto c = is_embedding(id, x, x);
  CHECK(c.overall);
  CHECK(c.route == EmbeddingRoute::kDefinitional);
  REQUIRE(c.homeomorphism);
  CHECK(*c.homeomorphism);

  const std::vector<std::size_t> a{0};
  const auto sub = subspace(x, a);
  const auto inclusion = restrict(id, x, a);
  const auto ic = is_embedding(inclusion, sub, x);
  CHECK(ic.overall);
  CHECK(ic.injective);

  const SoftMapping collapse(ctx, ctx, {0, 0}, {0, 1});
  const auto cc = is_embedding(collapse, x, x);
  CHECK_FALSE(cc.injective);
  CHECK_FALSE(cc.overall);
  CHECK(cc.route == EmbeddingRoute::kCharacterization);

  // Identity from a coarse space into a finer one is injective and closed
  // onto its image but not continuous.
  const auto up = is_embedding(id, x, SoftSpace(SoftTopology::discrete(ctx)));
  CHECK_FALSE(up.continuous);
  CHECK_FALSE(up.overall);
}

TEST_CASE("image subspace scopes") {
  auto ctx = fixtures::ab_e12();
  auto dst = Context::make({"x", "y", "z"}, {"d1", "d2", "d3"});
  const SoftSpace y(SoftTopology::discrete(dst, 1u << 9));
  const SoftMapping m(ctx, dst, {2, 0}, {1, 1});
  const auto both = image_subspace(m, y);
  CHECK(both.elems == std::vector<std::size_t>{0, 2});
  CHECK(both.params == std::vector<std::size_t>{1});
  CHECK(both.space.context()->cell_count() == 2);
  CHECK(both.corestriction.phi(0) == 1);
  CHECK(both.corestriction.is_surjective());
  const auto wide = image_subspace(m, y, ImageScope::kUniverseOnly);
  CHECK(wide.params.size() == 3);
  CHECK_FALSE(wide.corestriction.is_surjective());
}

TEST_CASE("diagonal mappings") {
  auto ctx = Context::make({"a", "b"}, {"e"});
  const auto id = SoftMapping::identity(ctx);
  const std::vector<SoftMapping> one{id};
  const auto d1 = diagonal_mapping(ctx, one);
  CHECK(d1.product->arity() == 1);
  CHECK(d1.mapping.is_bijective());

  const std::vector<SoftMapping> two{id, id};
  const auto d2 = diagonal_mapping(ctx, two);
  const auto& pc = d2.product->context();
  CHECK(pc->element(d2.mapping.phi(0)) == "(a,a)");
  CHECK(pc->element(d2.mapping.phi(1)) == "(b,b)");
  CHECK(pc->param(d2.mapping.psi(0)) == "(e,e)");

  const SoftMapping swap(ctx, ctx, {1, 0}, {0});
  const std::vector<SoftMapping> mixed{id, swap};
  const auto d3 = diagonal_mapping(ctx, mixed);
  CHECK(d3.product->context()->element(d3.mapping.phi(0)) == "(a,b)");
  CHECK(d3.product->context()->element(d3.mapping.phi(1)) == "(b,a)");
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    CHECK(compose(projection_mapping(d3.product, i), d3.mapping) == mixed[i]);
  }

  CHECK_THROWS_AS(diagonal_mapping(ctx, std::vector<SoftMapping>{}), Error);
  const std::vector<SoftMapping> foreign{SoftMapping::identity(fixtures::ab_e12())};
  CHECK_THROWS_AS(diagonal_mapping(ctx, foreign), Error);
}

TEST_CASE("separation reports") {
  auto ctx = Context::make({"a", "b"}, {"e"});
  const SoftSpace dis(SoftTopology::discrete(ctx));
  const std::vector<MappedSpace> ident{{dis, SoftMapping::identity(ctx)}};
  const auto ok = separation_report(dis, ident);
  CHECK(ok.separates_points);
  CHECK(ok.separates_points_from_closed);
  CHECK_FALSE(ok.points_witness);
  CHECK_FALSE(ok.closed_witness);

  const SoftMapping constant(ctx, ctx, {0, 0}, {0});
  const std::vector<MappedSpace> flat{{dis, constant}};
  const auto bad = separation_report(dis, flat);
  CHECK_FALSE(bad.separates_points);
  REQUIRE(bad.points_witness);
  CHECK(bad.points_witness->first == SoftPoint(ctx, 0, 0));
  CHECK(bad.points_witness->second == SoftPoint(ctx, 0, 1));
  CHECK_FALSE(bad.separates_points_from_closed);
  REQUIRE(bad.closed_witness);

  const SoftSpace ind(SoftTopology::indiscrete(ctx));
  const std::vector<MappedSpace> into_ind{{ind, SoftMapping::identity(ctx)}};
  const auto vac = separation_report(ind, into_ind);
  CHECK(vac.separates_points_from_closed);
  CHECK(vac.separates_points);
}

TEST_CASE("embedding lemma fixtures") {
  auto ctx = Context::make({"a", "b"}, {"e"});
  const SoftSpace dis(SoftTopology::discrete(ctx));
  const std::vector<MappedSpace> ident{{dis, SoftMapping::identity(ctx)}};
  const auto r = verify_embedding_lemma(dis, ident);
  CHECK(r.hypotheses);
  CHECK(r.diagonal.overall);
  CHECK(r.diagonal_inclusion);
  CHECK(r.inclusion_exhaustive);

  const SoftMapping constant(ctx, ctx, {0, 0}, {0});
  const std::vector<MappedSpace> flat{{dis, constant}};
  const auto n = verify_embedding_lemma(dis, flat);
  CHECK_FALSE(n.hypotheses);
  CHECK_FALSE(n.separation.separates_points);
  CHECK_FALSE(n.diagonal.injective);
  CHECK_FALSE(n.violation());

  const SoftSpace ind(SoftTopology::indiscrete(ctx));
  const std::vector<MappedSpace> into_ind{{ind, SoftMapping::identity(ctx)}};
  const auto v = verify_embedding_lemma(ind, into_ind);
  CHECK(v.hypotheses);
  CHECK(v.diagonal.overall);
}

TEST_CASE("keeping every target parameter breaks the lemma") {
  // Indiscrete space on one point and two parameters, embedded twice by the identity.
  auto ctx = Context::make({"a"}, {"e1", "e2"});
  const SoftSpace x(SoftTopology::indiscrete(ctx));
  const std::vector<MappedSpace> twice{{x, SoftMapping::identity(ctx)},
                                       {x, SoftMapping::identity(ctx)}};
  const auto fine = verify_embedding_lemma(x, twice);
  CHECK(fine.hypotheses);
  CHECK(fine.diagonal.overall);

  LemmaOptions wide;
  wide.scope = ImageScope::kUniverseOnly;
  try {
    verify_embedding_lemma(x, twice, wide);
    FAIL("violation not raised");
  } catch (const LemmaViolation& e) {
    CHECK(e.code() == ErrorCode::kLemmaViolation);
    CHECK(e.report().hypotheses);
    CHECK_FALSE(e.report().diagonal.closed_into_image);
    CHECK(e.report().diagonal.closed_witness->is_absolute());
  }
  wide.throw_on_violation = false;
  CHECK(verify_embedding_lemma(x, twice, wide).violation());
}

TEST_CASE("lemma holds on random hypothesis-satisfying families") {
  oracle::Rng rng(2024);
  oracle::OracleConfig target_cfg;
  target_cfg.max_universe = 2;
  target_cfg.max_params = 2;
  int passing = 0;
  int attempts = 0;
  while (passing < 60 && attempts < 1000) {
    ++attempts;
    const auto x = oracle::random_space(rng, {});
    std::vector<MappedSpace> targets;
    if (rng.below(4) != 0) targets.push_back({x, SoftMapping::identity(x.context())});
    const auto extra = 1 + rng.below(2);
    for (std::size_t k = 0; k < extra; ++k) {
      targets.push_back(oracle::random_continuous_target(rng, x, target_cfg));
    }
    const auto r = verify_embedding_lemma(x, targets);
    CHECK(r.diagonal_inclusion);
    if (r.diagonal.homeomorphism) CHECK(*r.diagonal.homeomorphism == r.diagonal.overall);

    LemmaOptions slabs;
    slabs.materialize_cap = 1;
    const auto s = verify_embedding_lemma(x, targets, slabs);
    CHECK(s.product_route == ProductRoute::kSlabSubbase);
    CHECK(s.diagonal.continuous == r.diagonal.continuous);
    CHECK(s.diagonal.closed_into_image == r.diagonal.closed_into_image);
    CHECK(s.diagonal.overall == r.diagonal.overall);

    if (!r.hypotheses) continue;
    ++passing;
    CHECK(r.diagonal.overall);

    // Negative control: precompose every map with a collapse of the first two elements.
    const auto& ctx = x.context();
    if (ctx->universe_size() < 2) continue;
    std::vector<std::size_t> phi = iota_indices(ctx->universe_size());
    phi[1] = 0;
    const SoftMapping collapse(ctx, ctx, phi, iota_indices(ctx->param_size()));
    std::vector<MappedSpace> collapsed;
    for (const auto& t : targets) collapsed.push_back({t.space, compose(t.mapping, collapse)});
    const auto c = verify_embedding_lemma(x, collapsed, LemmaOptions{.throw_on_violation = false});
    CHECK_FALSE(c.separation.separates_points);
    CHECK_FALSE(c.diagonal.injective);
  }
  CHECK(passing == 60);
}
