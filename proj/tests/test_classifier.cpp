#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bsgroup/classifier.hpp"
#include "bsgroup/errors.hpp"
#include "bsgroup/invariants.hpp"

using namespace bsgroup;

namespace {

// Every normalised pair with 2 <= |m| <= n <= max_n.
std::vector<BsParams> hypothesis_domain(std::int64_t max_n) {
  std::vector<BsParams> out;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t am = 2; am <= n; ++am) {
      out.push_back(make_params(am, n));
      out.push_back(make_params(-am, n));
    }
  }
  return out;
}

bool closed_form(const BsParams& x, const BsParams& y) {
  return (x.abs_m() == x.n() && y.abs_m() == y.n() && x.abs_m() == y.abs_m()) ||
         (x.m() == y.m() && x.n() == y.n());
}

std::vector<std::size_t> sigma(std::initializer_list<std::size_t> values) { return values; }

}  // namespace

TEST(BsIsomorphic, Examples) {
  EXPECT_TRUE(bs_isomorphic({2, 3}, {-2, -3}));
  EXPECT_TRUE(bs_isomorphic({2, 3}, {3, 2}));
  EXPECT_FALSE(bs_isomorphic({2, 3}, {2, 4}));
  EXPECT_FALSE(bs_isomorphic({2, 3}, {-2, 3}));
  EXPECT_THROW(bs_isomorphic({0, 3}, {2, 3}), InvalidParameters);
}

TEST(GIsomorphic, Examples) {
  const auto a = g_isomorphic(make_params(2, 2), make_params(-2, 2));
  EXPECT_TRUE(a.isomorphic);
  EXPECT_EQ(a.kind, VerdictReason::DiscreteSameOrder);

  const auto b = g_isomorphic(make_params(2, 3), make_params(-2, 3));
  EXPECT_FALSE(b.isomorphic);
  EXPECT_EQ(b.kind, VerdictReason::SignDiffers);

  const auto c = g_isomorphic(make_params(2, 4), make_params(2, 6));
  EXPECT_FALSE(c.isomorphic);
  EXPECT_EQ(c.kind, VerdictReason::ScaleSetDiffers);

  EXPECT_EQ(g_isomorphic(make_params(2, 3), make_params(4, 6)).kind, VerdictReason::MinIndexDiffers);
  EXPECT_EQ(g_isomorphic(make_params(2, 2), make_params(2, 3)).kind, VerdictReason::DiscretenessDiffers);
  EXPECT_EQ(g_isomorphic(make_params(2, 2), make_params(3, 3)).kind,
            VerdictReason::DiscreteDifferentOrder);
  EXPECT_EQ(g_isomorphic(make_params(3, 5), make_params(3, 5)).kind, VerdictReason::EqualParameters);
}

TEST(GIsomorphic, RejectsAmenable) {
  EXPECT_THROW(g_isomorphic(make_params(1, 3), make_params(2, 3)), OutOfHypothesis);
  EXPECT_THROW(g_isomorphic(make_params(2, 3), make_params(-1, 1)), OutOfHypothesis);
}

TEST(GIsomorphic, MatchesClosedFormAndIsEquivalence) {
  const auto domain = hypothesis_domain(8);
  for (const auto& x : domain) {
    EXPECT_TRUE(g_isomorphic(x, x).isomorphic);
    for (const auto& y : domain) {
      const bool xy = g_isomorphic(x, y).isomorphic;
      EXPECT_EQ(xy, closed_form(x, y)) << x.to_string() << " " << y.to_string();
      EXPECT_EQ(xy, g_isomorphic(y, x).isomorphic);
      if (xy) {
        EXPECT_EQ(scale_set(x), scale_set(y));
        EXPECT_EQ(x.abs_m(), y.abs_m());
        EXPECT_EQ(x.n(), y.n());
        for (const auto& z : domain) {
          if (g_isomorphic(y, z).isomorphic) EXPECT_TRUE(g_isomorphic(x, z).isomorphic);
        }
      }
    }
  }
}

TEST(GIsomorphic, FollowsFromBsIsomorphism) {
  for (int m = -8; m <= 8; ++m) {
    for (int n = -8; n <= 8; ++n) {
      for (int p = -8; p <= 8; ++p) {
        for (int q = -8; q <= 8; ++q) {
          if (m == 0 || n == 0 || p == 0 || q == 0) continue;
          const BsParams x = make_params(m, n);
          const BsParams y = make_params(p, q);
          if (x.abs_m() < 2 || y.abs_m() < 2) continue;
          if (bs_isomorphic({m, n}, {p, q})) EXPECT_TRUE(g_isomorphic(x, y).isomorphic);
        }
      }
    }
  }
}

TEST(Product, Examples) {
  const auto v = product_isomorphic({make_params(2, 3), make_params(4, 4)},
                                    {make_params(-4, 4), make_params(2, 3)});
  EXPECT_TRUE(v.isomorphic);
  EXPECT_EQ(v.witness, sigma({2, 1}));
  EXPECT_EQ(v.kind, VerdictReason::Matched);

  const auto w = product_isomorphic({make_params(2, 3)}, {make_params(2, 3), make_params(2, 3)});
  EXPECT_FALSE(w.isomorphic);
  EXPECT_EQ(w.kind, VerdictReason::LengthMismatch);
  EXPECT_FALSE(w.witness);

  const auto x = product_isomorphic({make_params(2, 4), make_params(3, 6)},
                                    {make_params(3, 6), make_params(2, 4)});
  EXPECT_TRUE(x.isomorphic);
  EXPECT_EQ(x.witness, sigma({2, 1}));
}

TEST(Product, LexicographicallySmallestWitness) {
  const auto v = product_isomorphic({make_params(2, 2), make_params(2, 3), make_params(-2, 2)},
                                    {make_params(2, 3), make_params(-2, 2), make_params(2, 2)});
  ASSERT_TRUE(v.isomorphic);
  EXPECT_EQ(v.witness, sigma({2, 1, 3}));
}

TEST(Product, NoMatching) {
  const auto v = product_isomorphic({make_params(2, 3), make_params(2, 3)},
                                    {make_params(2, 3), make_params(-2, 3)});
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.kind, VerdictReason::NoMatching);
  EXPECT_THROW(product_isomorphic({make_params(1, 2)}, {make_params(2, 3)}), OutOfHypothesis);
}

TEST(Product, PermutationInvariantAndAgreesForSingleFactor) {
  const auto domain = hypothesis_domain(5);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<BsParams> left, right;
    for (std::size_t j = 0; j < k; ++j) left.push_back(domain[rng() % domain.size()]);
    right = left;
    // Replace a factor with something random half of the time.
    if (rng() % 2 == 0) right[rng() % k] = domain[rng() % domain.size()];
    std::shuffle(right.begin(), right.end(), rng);

    const auto v = product_isomorphic(left, right);
    auto left2 = left;
    std::shuffle(left2.begin(), left2.end(), rng);
    EXPECT_EQ(product_isomorphic(left2, right).isomorphic, v.isomorphic);
    if (v.isomorphic) {
      ASSERT_TRUE(v.witness);
      std::vector<std::size_t> sorted = *v.witness;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_EQ(sorted[j], j + 1);
        EXPECT_TRUE(g_isomorphic(left[j], right[(*v.witness)[j] - 1]).isomorphic);
      }
    }
  }
  for (const auto& x : domain)
    for (const auto& y : domain)
      EXPECT_EQ(product_isomorphic({x}, {y}).isomorphic, g_isomorphic(x, y).isomorphic);
}

TEST(Soe, SameVerdictAsProducts) {
  const auto a = soe_conclusion({make_params(2, 3)}, {make_params(2, 3)});
  EXPECT_TRUE(a.isomorphic);
  EXPECT_EQ(a.witness, sigma({1}));
  EXPECT_NE(a.reason.find("stable orbit equivalence"), std::string::npos);
  EXPECT_FALSE(soe_conclusion({make_params(2, 3)}, {make_params(-2, 3)}).isomorphic);
  EXPECT_TRUE(soe_conclusion({make_params(2, 2), make_params(2, 3)},
                             {make_params(-2, 2), make_params(2, 3)})
                  .isomorphic);
}

TEST(ParseProduct, Syntax) {
  EXPECT_EQ(parse_product("(2,3)x(4,4)"), (std::vector<RawPair>{{2, 3}, {4, 4}}));
  EXPECT_EQ(parse_product(" ( -4 , 4 ) x (2,3) "), (std::vector<RawPair>{{-4, 4}, {2, 3}}));
  EXPECT_EQ(parse_product("(2,3)"), (std::vector<RawPair>{{2, 3}}));
  EXPECT_THROW(parse_product(""), ParseError);
  EXPECT_THROW(parse_product("(2,3)*(4,4)"), ParseError);
  EXPECT_THROW(parse_product("(2 3)"), ParseError);
  EXPECT_THROW(parse_product("(2,3)x"), ParseError);
  EXPECT_THROW(parse_product("(a,3)"), ParseError);
}
