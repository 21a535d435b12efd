#include <doctest.h>

#include <cstdlib>

#include "softtop/error.hpp"
#include "softtop/oracle.hpp"
#include "softtop/topology.hpp"
#include "support/fixtures.hpp"

using namespace softtop;
using fixtures::set;

TEST_CASE("axiom verdicts") {
  auto ctx = fixtures::ab_e12();
  const auto null = SoftSet::null(ctx);
  const auto abs = SoftSet::absolute(ctx);
  CHECK(verify_axioms(ctx, std::vector{null, abs}).ok());
  CHECK(verify_axioms(ctx, oracle::enumerate_all_soft_sets(ctx)).ok());
  CHECK(verify_axioms(ctx, std::vector{abs}).kind == AxiomVerdict::Kind::kMissingNull);
  CHECK(verify_axioms(ctx, std::vector{null}).kind == AxiomVerdict::Kind::kMissingAbsolute);

  // F and H are disjoint and incomparable: their union is missing.
  const auto f = fixtures::F(ctx);
  const auto h = fixtures::H(ctx);
  const std::vector<SoftSet> candidate{null, abs, f, h};
  const auto v = verify_axioms(ctx, candidate);
  CHECK(v.kind == AxiomVerdict::Kind::kNotClosedUnderUnion);
  REQUIRE(v.witness);
  CHECK(v.witness->first == 3);
  CHECK(v.witness->second == 2);

  const auto g = fixtures::G(ctx);
  const auto k = set(ctx, {{"e1", {"a"}}, {"e2", {"a"}}});
  const auto w = verify_axioms(ctx, std::vector{null, abs, g, k});
  CHECK(w.kind == AxiomVerdict::Kind::kNotClosedUnderIntersection);

  try {
    SoftTopology::from_opens(ctx, candidate);
    FAIL("invalid topology accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAxiomViolation);
    CHECK(std::string(e.what()).find(f.to_string()) != std::string::npos);
  }
}

TEST_CASE("closed sets") {
  auto ctx = fixtures::ab_e12();
  const SoftSpace ind(SoftTopology::indiscrete(ctx));
  CHECK(closed_sets(ind).size() == 2);
  const SoftSpace dis(SoftTopology::discrete(ctx));
  CHECK(closed_sets(dis).size() == 16);
  const auto s = fixtures::f1_space(ctx);
  const auto closed = closed_sets(s);
  REQUIRE(closed.size() == 3);
  CHECK(s.is_closed(set(ctx, {{"e1", {"b"}}, {"e2", {"b"}}})));
  CHECK_FALSE(s.is_closed(fixtures::F1(ctx)));
  CHECK(verify_axioms(ctx, closed).ok());
}

TEST_CASE("closure examples") {
  auto ctx = fixtures::ab_e12();
  const auto s = fixtures::f1_space(ctx);
  CHECK(closure(s, SoftSet::null(ctx)).is_null());
  CHECK(closure(s, SoftSet::absolute(ctx)).is_absolute());
  const auto c = set(ctx, {{"e1", {"b"}}, {"e2", {"b"}}});
  CHECK(closure(s, c) == c);
  CHECK(closure(s, fixtures::H(ctx)) == c);
  CHECK(oracle::closure_via_adherence(s, fixtures::H(ctx)) == c);
}

TEST_CASE("adherent points") {
  auto ctx = fixtures::ab_e12();
  const auto s = fixtures::f1_space(ctx);
  const auto h = fixtures::H(ctx);
  CHECK(is_adherent(s, SoftPoint(ctx, 1, 1), h));
  CHECK(is_adherent(s, SoftPoint(ctx, 0, 1), h));
  CHECK_FALSE(is_adherent(s, SoftPoint(ctx, 0, 0), h));
  const SoftSpace dis(SoftTopology::discrete(ctx));
  CHECK_FALSE(is_adherent(dis, SoftPoint(ctx, 1, 1), h));
  for (const auto& p : enumerate_points(h)) CHECK(is_adherent(dis, p, h));
}

TEST_CASE("bases") {
  auto ctx = fixtures::ab_e12();
  const SoftSpace dis(SoftTopology::discrete(ctx));
  CHECK(is_base(dis, dis.opens()));
  std::vector<SoftSet> points{SoftSet::null(ctx)};
  for (const auto& p : all_points(ctx)) points.push_back(p.as_soft_set());
  CHECK(is_base(dis, points));
  CHECK(is_base_by_unions(dis, points));
  const SoftSpace ind(SoftTopology::indiscrete(ctx));
  const std::vector<SoftSet> only_null{SoftSet::null(ctx)};
  CHECK_FALSE(is_base(ind, only_null));
  CHECK_FALSE(is_base_by_unions(ind, only_null));
  try {
    is_base(ind, points);
    FAIL("non-open member accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotOpenMember);
  }
}

TEST_CASE("base criteria agree on random spaces") {
  oracle::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto s = oracle::random_space(rng, {});
    std::vector<SoftSet> members;
    for (const auto& o : s.opens()) {
      if (rng.coin()) members.push_back(o);
    }
    CHECK(is_base(s, members) == is_base_by_unions(s, members));
  }
}

TEST_CASE("generation from a subbase") {
  auto ctx = fixtures::ab_e12();
  const auto empty = generate_from_subbase(ctx, std::vector<SoftSet>{});
  CHECK(empty.topology == SoftTopology::indiscrete(ctx));
  CHECK(empty.adjoined_null);
  CHECK(empty.adjoined_absolute);

  std::vector<SoftSet> points;
  for (const auto& p : all_points(ctx)) points.push_back(p.as_soft_set());
  CHECK(generate_from_subbase(ctx, points).topology == SoftTopology::discrete(ctx));

  const auto f = fixtures::F(ctx);
  const auto h = fixtures::H(ctx);
  const std::vector<SoftSet> fh{f, h, SoftSet::null(ctx)};
  const auto gen = generate_from_subbase(ctx, fh);
  CHECK_FALSE(gen.adjoined_null);
  CHECK(gen.adjoined_absolute);
  CHECK(gen.topology.is_open(soft_union(f, h)));
  CHECK(gen.topology.is_open(soft_intersection(f, h)));
  CHECK(gen.topology.size() == 5);
  CHECK(gen.topology.opens().size() == oracle::naive_generate(ctx, fh).size());
}

TEST_CASE("generation respects the size cap") {
  auto ctx = oracle::make_context(4, 4);
  std::vector<SoftSet> points;
  for (const auto& p : all_points(ctx)) points.push_back(p.as_soft_set());
  try {
    generate_from_subbase(ctx, points, 1000);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
    CHECK(std::string(e.what()).find("partial size") != std::string::npos);
  }
  CHECK_THROWS_AS(SoftTopology::discrete(ctx, 1000), Error);
}

TEST_CASE("size cap environment override") {
  CHECK(default_size_cap() == kDefaultSizeCap);
  setenv("SOFTTOP_SIZE_CAP", "17", 1);
  CHECK(default_size_cap() == 17);
  setenv("SOFTTOP_SIZE_CAP", "junk", 1);
  CHECK(default_size_cap() == kDefaultSizeCap);
  unsetenv("SOFTTOP_SIZE_CAP");
}

TEST_CASE("generation agrees with the fixpoint oracle and is idempotent") {
  oracle::Rng rng(19);
  for (int i = 0; i < 150; ++i) {
    auto ctx = oracle::random_context(rng, {});
    std::vector<SoftSet> subbase;
    const auto k = rng.below(5);
    for (std::size_t j = 0; j < k; ++j) subbase.push_back(oracle::random_soft_set(rng, ctx));
    const auto t = generate_from_subbase(ctx, subbase).topology;
    const auto naive = oracle::naive_generate(ctx, subbase);
    CHECK(std::equal(t.opens().begin(), t.opens().end(), naive.begin(), naive.end()));
    CHECK(verify_axioms(ctx, t.opens()).ok());
    CHECK(generate_from_subbase(ctx, t.opens()).topology == t);
    for (const auto& s : subbase) CHECK(t.is_open(s));
    // Unions of random subfamilies stay inside.
    for (int r = 0; r < 5; ++r) {
      auto acc = SoftSet::null(ctx);
      for (const auto& o : t.opens()) {
        if (rng.coin()) acc = soft_union(acc, o);
      }
      CHECK(t.is_open(acc));
    }
  }
}

TEST_CASE("subspaces") {
  auto ctx = fixtures::ab_e12();
  const auto s = fixtures::f1_space(ctx);
  const std::vector<std::size_t> all{0, 1};
  CHECK(subspace(s, all).opens().size() == s.opens().size());
  const std::vector<std::string> a{"a"};
  const auto sub = subspace(s, a);
  CHECK(sub.context()->universe_size() == 1);
  CHECK(sub.opens().size() == 2);
  const SoftSpace dis(SoftTopology::discrete(ctx));
  const auto dsub = subspace(dis, a);
  CHECK(dsub.topology() == SoftTopology::discrete(dsub.context()));
  try {
    subspace(s, std::vector<std::size_t>{});
    FAIL("empty subset accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptySubset);
  }
  CHECK_THROWS_AS(subspace(s, std::vector<std::string>{"z"}), Error);
}

TEST_CASE("closure laws and adherence on random spaces") {
  oracle::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto s = oracle::random_space(rng, {});
    const auto& ctx = s.context();
    const auto all = oracle::enumerate_all_soft_sets(ctx);
    for (const auto& f : all) {
      const auto cf = closure(s, f);
      CHECK(cf == oracle::closure_via_adherence(s, f));
      CHECK(is_subset(f, cf));
      CHECK(closure(s, cf) == cf);
      CHECK(s.is_closed(f) == (cf == f));
      std::vector<SoftPoint> adherent;
      for (const auto& p : all_points(ctx)) {
        if (is_adherent(s, p, f)) adherent.push_back(p);
      }
      CHECK(enumerate_points(cf) == adherent);
    }
  }
}

TEST_CASE("closure of an intersection can be strictly smaller") {
  // Indiscrete on one point and two parameters: every nonempty set is dense.
  auto ctx = Context::make({"a"}, {"e1", "e2"});
  const SoftSpace s(SoftTopology::indiscrete(ctx));
  const auto f = set(ctx, {{"e1", {"a"}}});
  const auto g = set(ctx, {{"e2", {"a"}}});
  const auto lhs = closure(s, soft_intersection(f, g));
  const auto rhs = soft_intersection(closure(s, f), closure(s, g));
  CHECK(is_subset(lhs, rhs));
  CHECK(lhs.is_null());
  CHECK(rhs.is_absolute());
}
