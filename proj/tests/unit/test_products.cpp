#include <doctest.h>

#include "softtop/error.hpp"
#include "softtop/oracle.hpp"
#include "softtop/product.hpp"
#include "support/fixtures.hpp"

using namespace softtop;
using fixtures::set;

namespace {

struct Pair {
  ContextPtr left = Context::make({"a", "b"}, {"e"});
  ContextPtr right = Context::make({"x", "y"}, {"d"});
  ProductContextPtr product = ProductContext::make({left, right});
};

}  // namespace

TEST_CASE("tuple labels and mixed-radix order") {
  Pair p;
  const auto& ctx = p.product->context();
  REQUIRE(ctx->universe_size() == 4);
  CHECK(ctx->element(0) == "(a,x)");
  CHECK(ctx->element(1) == "(a,y)");
  CHECK(ctx->element(2) == "(b,x)");
  CHECK(ctx->param(0) == "(e,d)");
  const std::vector<std::size_t> bx{1, 0};
  CHECK(p.product->element_index(bx) == 2);
  CHECK(p.product->element_components(3) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("product soft set examples") {
  Pair p;
  const std::vector<SoftSet> sets{set(p.left, {{"e", {"a"}}}), set(p.right, {{"d", {"x", "y"}}})};
  const auto prod = product_soft_set(*p.product, sets);
  CHECK(prod == set(p.product->context(), {{"(e,d)", {"(a,x)", "(a,y)"}}}));

  const std::vector<SoftSet> abs{SoftSet::absolute(p.left), SoftSet::absolute(p.right)};
  CHECK(product_soft_set(*p.product, abs).is_absolute());
  const std::vector<SoftSet> with_null{SoftSet::absolute(p.left), SoftSet::null(p.right)};
  CHECK(product_soft_set(*p.product, with_null).is_null());
}

TEST_CASE("point membership in products") {
  Pair p;
  const std::vector<SoftSet> sets{set(p.left, {{"e", {"a"}}}), set(p.right, {{"d", {"x", "y"}}})};
  const auto& ctx = p.product->context();
  const SoftPoint ax(ctx, 0, ctx->element_index("(a,x)"));
  CHECK(point_in_product(*p.product, ax, sets));
  const SoftPoint by(ctx, 0, ctx->element_index("(b,y)"));
  CHECK_FALSE(point_in_product(*p.product, by, sets));
  CHECK(p.product->component_point(ax, 1) == SoftPoint(p.right, 0, 0));
}

TEST_CASE("budget and arity guards") {
  auto big = oracle::make_context(16, 5);
  try {
    ProductContext::make({big, big});
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
    CHECK(std::string(e.what()).find("4096") != std::string::npos);
  }
  CHECK_NOTHROW(ProductContext::make({big, big}, 6400));
  try {
    ProductContext::make({});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFactorArityMismatch);
  }
  Pair p;
  const std::vector<SoftSet> one{SoftSet::null(p.left)};
  CHECK_THROWS_AS(product_soft_set(*p.product, one), Error);
  const std::vector<SoftSet> swapped{SoftSet::null(p.right), SoftSet::null(p.left)};
  CHECK_THROWS_AS(product_soft_set(*p.product, swapped), Error);
}

TEST_CASE("product laws over all factor pairs") {
  auto c1 = oracle::make_context(2, 2);
  auto c2 = oracle::make_context(2, 1);
  auto product = ProductContext::make({c1, c2});
  const auto s1 = oracle::enumerate_all_soft_sets(c1);
  const auto s2 = oracle::enumerate_all_soft_sets(c2);
  for (const auto& f1 : s1) {
    for (const auto& f2 : s2) {
      const std::vector<SoftSet> fs{f1, f2};
      const auto prod = product_soft_set(*product, fs);
      CHECK(prod == oracle::naive_product(*product, fs));
      CHECK(prod.is_null() == (f1.is_null() || f2.is_null()));
      for (const auto& p : all_points(product->context())) {
        CHECK(point_in(p, prod) == point_in_product(*product, p, fs));
      }
    }
  }
  // Monotonicity and distributivity on a sample of quadruples.
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto& f1 = s1[rng.below(s1.size())];
    const auto& g1 = s1[rng.below(s1.size())];
    const auto& f2 = s2[rng.below(s2.size())];
    const auto& g2 = s2[rng.below(s2.size())];
    const std::vector<SoftSet> fs{f1, f2};
    const std::vector<SoftSet> gs{g1, g2};
    const std::vector<SoftSet> meet{soft_intersection(f1, g1), soft_intersection(f2, g2)};
    const auto pf = product_soft_set(*product, fs);
    const auto pg = product_soft_set(*product, gs);
    CHECK(product_soft_set(*product, meet) == soft_intersection(pf, pg));
    if (is_subset(f1, g1) && is_subset(f2, g2)) CHECK(is_subset(pf, pg));
  }
}

TEST_CASE("three factors keep the first factor most significant") {
  auto c = oracle::make_context(2, 1);
  auto product = ProductContext::make({c, c, c});
  const auto& ctx = product->context();
  CHECK(ctx->universe_size() == 8);
  CHECK(ctx->element(1) == "(a,a,b)");
  CHECK(ctx->element(4) == "(b,a,a)");
  CHECK(product->element_component(4, 0) == 1);
  CHECK(product->element_component(4, 2) == 0);
}
