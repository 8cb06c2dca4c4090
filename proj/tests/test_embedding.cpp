#include <gtest/gtest.h>

#include <random>
#include <set>

#include <sumcolour/embedding.hpp>

#include "oracles.hpp"

using namespace sumcolour;

namespace {

std::vector<Integer> ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

CanonicalDecomposition decomp(std::size_t free_rank, std::vector<PrimePower> f) {
  std::sort(f.begin(), f.end());
  return {free_rank, std::move(f)};
}

// Canonical representative: torsion coefficients reduced mod their factor order.
std::vector<Integer> reduce(const CanonicalDecomposition& d, std::vector<Integer> c) {
  for (std::size_t i = 0; i < d.primary_factors.size(); ++i) c[i] = mod_floor(c[i], d.primary_factors[i].value());
  return c;
}

void for_each_representative(const CanonicalDecomposition& d, long bound,
                             const std::function<void(const std::vector<Integer>&)>& f) {
  std::vector<Integer> c(d.generator_count());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == c.size()) {
      f(c);
      return;
    }
    if (k < d.primary_factors.size()) {
      for (Integer a = 0; a < d.primary_factors[k].value(); ++a) {
        c[k] = a;
        rec(k + 1);
      }
    } else {
      for (long a = -bound; a <= bound; ++a) {
        c[k] = a;
        rec(k + 1);
      }
    }
  };
  rec(0);
}

const std::vector<CanonicalDecomposition>& small_groups() {
  static const std::vector<CanonicalDecomposition> groups = {
      decomp(0, {}),
      decomp(0, {{3, 2}}),
      decomp(1, {{2, 1}}),
      decomp(0, {{2, 1}, {2, 1}, {3, 1}}),
      decomp(1, {{3, 1}, {3, 1}, {5, 1}}),
      decomp(2, {{2, 1}, {7, 1}}),
      decomp(0, {{3, 3}, {5, 2}}),
      decomp(1, {{2, 1}, {2, 1}, {3, 2}, {5, 1}}),
  };
  return groups;
}

}  // namespace

TEST(BuildEmbedding, Z9) {
  auto m = build_embedding(decomp(0, {{3, 2}}));
  EXPECT_EQ(*m.signature, *make_signature({3}, 0, 0));
  ASSERT_EQ(m.generator_images.size(), 1u);
  EXPECT_EQ(to_text(m.generator_images[0]), "d:{0=1/9};t:;q:()");
}

TEST(BuildEmbedding, Z2PlusZ) {
  auto m = build_embedding(decomp(1, {{2, 1}}));
  EXPECT_EQ(*m.signature, *make_signature({}, 1, 1));
  ASSERT_EQ(m.generator_images.size(), 2u);
  EXPECT_EQ(to_text(m.generator_images[0]), "d:{};t:1;q:(0)");
  EXPECT_EQ(to_text(m.generator_images[1]), "d:{};t:0;q:(1)");
}

TEST(BuildEmbedding, RejectsOrderFour) {
  EXPECT_THROW(build_embedding(decomp(0, {{2, 2}})), HypothesisViolated);
  EXPECT_THROW(build_embedding(decomp(3, {{2, 3}, {3, 1}})), HypothesisViolated);
}

TEST(BuildEmbedding, RepeatedPrimesGetSeparateFactors) {
  auto m = build_embedding(decomp(0, {{5, 1}, {3, 1}, {3, 2}}), FreeMode::integer);
  EXPECT_EQ(*m.signature, *make_signature({3, 3, 5}, 0, 0, FreeMode::integer));
  EXPECT_EQ(to_text(m.generator_images[0]), "d:{0=1/3};t:;q:()");
  EXPECT_EQ(to_text(m.generator_images[1]), "d:{1=1/9};t:;q:()");
  EXPECT_EQ(to_text(m.generator_images[2]), "d:{2=1/5};t:;q:()");
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(scalar_mul(m.decomposition.primary_factors[i].value(), m.generator_images[i]).is_zero());
  }
}

TEST(Embed, Examples) {
  auto z9 = build_embedding(decomp(0, {{3, 2}}));
  EXPECT_TRUE(embed(z9, ints({0})).is_zero());
  EXPECT_EQ(to_text(embed(z9, ints({3}))), "d:{0=1/3};t:;q:()");
  auto z2z = build_embedding(decomp(1, {{2, 1}}));
  EXPECT_EQ(to_text(embed(z2z, ints({1, 5}))), "d:{};t:1;q:(5)");
  EXPECT_THROW(embed(z2z, ints({1})), Error);
}

TEST(Embed, InjectiveOnRepresentatives) {
  for (const auto& d : small_groups()) {
    auto m = build_embedding(d);
    std::set<std::string> images;
    std::size_t count = 0;
    for_each_representative(d, 5, [&](const auto& c) {
      images.insert(to_text(embed(m, c)));
      ++count;
    });
    ASSERT_LE(count, 10000u);
    EXPECT_EQ(images.size(), count) << to_string(d);
  }
}

TEST(Embed, HomomorphismOrdersAndFourFreeness) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coef(-40, 40);
  for (const auto& d : small_groups()) {
    for (auto mode : {FreeMode::rational, FreeMode::integer}) {
      auto m = build_embedding(d, mode);
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> u(d.generator_count()), v(d.generator_count()), w(d.generator_count());
        for (std::size_t i = 0; i < u.size(); ++i) {
          u[i] = coef(rng);
          v[i] = coef(rng);
          w[i] = u[i] + v[i];
        }
        auto eu = embed(m, u);
        ASSERT_EQ(embed(m, w), eu + embed(m, v));
        ASSERT_EQ(element_order(eu), element_order_in(d, reduce(d, u)));
        auto o = element_order(eu);
        ASSERT_TRUE(o.is_infinite() || o.value() != 4);
      }
    }
  }
}

TEST(Embed, PresentationGeneratorsThroughSnf) {
  // Z_2 (+) Z_6 with a non-diagonal presentation.
  Presentation p{2, {ints({2, 2}), ints({0, 6})}};
  GroupStructure g(p);
  auto m = build_embedding(g.decomposition());
  for (long a = 0; a < 6; ++a)
    for (long b = 0; b < 6; ++b) {
      auto x = ints({a, b});
      // Relations map to zero; orders agree with the canonical coordinates.
      ASSERT_TRUE(embed_generators(g, m, ints({2 * a, 2 * a + 6 * b})).is_zero());
      ASSERT_EQ(element_order(embed_generators(g, m, x)),
                element_order_in(g.decomposition(), g.canonical_coords(x)));
    }
}
