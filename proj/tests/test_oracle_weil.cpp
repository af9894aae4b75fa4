#include "quatmodp/oracle/weil.hpp"

#include <gtest/gtest.h>

using namespace quatmodp;
using namespace quatmodp::oracle;

namespace {

TameChar unr(std::int64_t q, std::int64_t a, RootOfUnity w = {}) {
  return TameChar::modp(FieldParams::from_q(q), CharGroup::Eunram, a, w);
}

}  // namespace

TEST(Metacyclic, FrobeniusActsByQthPower) {
  const MetacyclicGroup G(3, 2);
  EXPECT_EQ(G.order(), 8 * 4);
  const auto fr = G.frobenius();
  const MetacyclicGroup::Elem t{1, 0};
  const auto c = G.mul(G.mul(fr, t), G.inv(fr));
  EXPECT_EQ(c.j, 3);
  EXPECT_EQ(c.k, 0);
  for (const auto& g : G.elements()) {
    const auto e = G.mul(g, G.inv(g));
    EXPECT_EQ(e.j, 0);
    EXPECT_EQ(e.k, 0);
  }
}

TEST(WeilOracle, Examples) {
  const auto v1 = weil_oracle_verify(unr(3, 1));
  EXPECT_TRUE(v1.ok) << v1.detail;
  ASSERT_EQ(v1.decomposition.size(), 1u);
  EXPECT_EQ(v1.decomposition.total_dimension(), 2);
  EXPECT_FALSE(v1.decomposition.labels()[0].is_one_dim());

  const auto v2 = weil_oracle_verify(unr(3, 4));
  EXPECT_TRUE(v2.ok) << v2.detail;
  ASSERT_EQ(v2.decomposition.size(), 2u);
  for (const auto& l : v2.decomposition.labels()) {
    EXPECT_TRUE(l.is_one_dim());
    EXPECT_EQ(l.character().value_at_residue_generator(), root(1, 2));
    EXPECT_EQ(l.character().unif_val().pow(2), RootOfUnity());
  }

  const auto v3 = weil_oracle_verify(unr(2, 0, root(1, 3)));
  EXPECT_TRUE(v3.ok) << v3.detail;
  ASSERT_EQ(v3.decomposition.size(), 1u);
  EXPECT_EQ(v3.decomposition.mult(v3.decomposition.labels()[0]), 2);
  EXPECT_EQ(v3.decomposition.labels()[0].character().unif_val(), root(2, 3));
}

TEST(WeilOracle, RejectsNonModP) {
  const auto fp = FieldParams::from_q(3);
  EXPECT_THROW(weil_oracle_verify(TameChar::zero(fp, CharGroup::Eunram, 1, {}, 0)), std::invalid_argument);
  EXPECT_THROW(weil_oracle_verify(TameChar::modp(fp, CharGroup::Fmult, 1, {})), std::invalid_argument);
}

class WeilSweep : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(WeilSweep, AllCharactersUpToOrderFour) {
  const auto fp = FieldParams::from_q(GetParam());
  for (const auto& w : modp_values_up_to_order(fp, 4))
    for (std::int64_t a = 0; a < fp.units_E(); ++a) {
      const auto v = weil_oracle_verify(unr(fp.q, a, w));
      EXPECT_TRUE(v.ok) << a << " " << w.to_string() << " " << v.detail;
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, WeilSweep, ::testing::Values(2, 3, 4, 5));
