#include "quatmodp/modp_reps.hpp"

#include <gtest/gtest.h>

using namespace quatmodp;

namespace {

TameChar unr(const FieldParams& fp, std::int64_t a, RootOfUnity w = {}) {
  return TameChar::modp(fp, CharGroup::Eunram, a, w);
}
TameChar fchar(const FieldParams& fp, std::int64_t b, RootOfUnity w = {}) {
  return TameChar::modp(fp, CharGroup::Fmult, b, w);
}

const FieldParams F2 = FieldParams::from_q(2);
const FieldParams F3 = FieldParams::from_q(3);

}  // namespace

TEST(ModPIrrep, CanonicalTwoDimLabel) {
  const auto a = ModPIrrep::two_dim(Side::D, unr(F3, 3));
  const auto b = ModPIrrep::two_dim(Side::D, unr(F3, 1));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.character().residue_exp(), 1);
  EXPECT_THROW(ModPIrrep::two_dim(Side::D, unr(F3, 4)), std::invalid_argument);
  EXPECT_THROW(ModPIrrep::one_dim(Side::D, unr(F3, 1)), std::invalid_argument);
}

TEST(ModPIrrep, CentralCharacter) {
  EXPECT_EQ(ModPIrrep::two_dim(Side::D, unr(F3, 1, root(1, 2))).central_character(), fchar(F3, 1, root(1, 2)));
  EXPECT_EQ(ModPIrrep::one_dim(Side::D, fchar(F3, 1, root(1, 4))).central_character(), fchar(F3, 0, root(1, 2)));
}

TEST(Induction, RegularIsIrreducible) {
  const auto m = pi_from_unramified(unr(F3, 1));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.mult(ModPIrrep::two_dim(Side::D, unr(F3, 1))), 1);
  const auto r = rho_from_unramified(unr(F3, 2, root(1, 2)));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r.labels()[0].is_one_dim());
}

TEST(Induction, IrregularOddSplits) {
  // phi(zeta_F) = omega^4 = -1, phi(varpi_F)^2 = 1
  const auto m = pi_from_unramified(unr(F3, 4));
  RepMultiset want(Side::D);
  want.add(ModPIrrep::one_dim(Side::D, fchar(F3, 1, {})));
  want.add(ModPIrrep::one_dim(Side::D, fchar(F3, 1, root(1, 2))));
  EXPECT_EQ(m, want);
  for (const auto& l : m.labels()) EXPECT_EQ(l.character().value_at_residue_generator(), root(1, 2));

  RepMultiset triv(Side::W);
  triv.add(ModPIrrep::one_dim(Side::W, fchar(F3, 0, {})));
  triv.add(ModPIrrep::one_dim(Side::W, fchar(F3, 0, root(1, 2))));
  EXPECT_EQ(rho_from_unramified(unr(F3, 0)), triv);
}

TEST(Induction, IrregularEvenIsDoubledNonsplit) {
  const auto m = pi_from_unramified(unr(F2, 0, root(1, 3)));
  const auto l = ModPIrrep::one_dim(Side::D, fchar(F2, 0, root(2, 3)));
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.mult(l), 2);
  EXPECT_EQ(m.nonsplit().count(l), 1u);
  EXPECT_EQ(rho_from_unramified(unr(F2, 0, root(1, 3))).total_dimension(), 2);
}

TEST(RamifiedInduction, RhoFromRamified) {
  const auto r = rho_from_ramified(TameChar::modp(F3, CharGroup::Eram, 1, {}));
  ASSERT_EQ(r.size(), 1u);
  const auto& xi = r.labels()[0].character();
  EXPECT_EQ(xi.residue_exp(), 2);
  EXPECT_EQ(xi.unif_val(), RootOfUnity());
  EXPECT_TRUE(is_regular(xi));
  EXPECT_THROW(rho_from_ramified(TameChar::modp(F3, CharGroup::Eram, 0, {})), std::invalid_argument);
}

TEST(RamifiedInduction, CountTableExamples) {
  const auto reg = induced_from_ramified(TameChar::modp(F3, CharGroup::Eram, 1, {}));
  EXPECT_EQ(reg.two_dim.size(), 2u);
  EXPECT_EQ(reg.one_dim.size(), 0u);
  const auto irr = induced_from_ramified(TameChar::modp(F3, CharGroup::Eram, 0, root(1, 2)));
  EXPECT_EQ(irr.two_dim.size(), 1u);
  EXPECT_EQ(irr.one_dim.size(), 2u);
  const auto two = induced_from_ramified(TameChar::modp(F2, CharGroup::Eram, 0, root(1, 3)));
  EXPECT_EQ(two.two_dim.size(), 1u);
  EXPECT_EQ(two.one_dim.size(), 1u);
}

TEST(Correspondence, Examples) {
  const auto rho = ModPIrrep::two_dim(Side::W, unr(F3, 1));
  EXPECT_EQ(modp_correspondence(rho), ModPIrrep::two_dim(Side::D, unr(F3, 1, root(1, 2))));
  const auto rho2 = ModPIrrep::two_dim(Side::W, unr(FieldParams::from_q(4), 1, root(1, 3)));
  EXPECT_EQ(modp_correspondence(rho2), rho2.on_side(Side::D));
  EXPECT_THROW(modp_correspondence(ModPIrrep::one_dim(Side::W, fchar(F3, 0))), std::invalid_argument);
  // twice through delta returns the original character
  const auto back = modp_correspondence(modp_correspondence(rho).on_side(Side::W));
  EXPECT_EQ(back, rho.on_side(Side::D));
}

TEST(RepMultiset, SideAndMultiplicities) {
  RepMultiset m(Side::D);
  EXPECT_THROW(m.add(ModPIrrep::one_dim(Side::W, fchar(F3, 0))), std::invalid_argument);
  m.add(ModPIrrep::one_dim(Side::D, fchar(F3, 0)), 2);
  m.add(ModPIrrep::two_dim(Side::D, unr(F3, 1)), 3);
  EXPECT_EQ(m.total_dimension(), 8);
  m.set(ModPIrrep::one_dim(Side::D, fchar(F3, 0)), 0);
  EXPECT_EQ(m.size(), 1u);
}

class ModPRepsProperty : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(ModPRepsProperty, InductionInvariants) {
  const auto fp = FieldParams::from_q(GetParam());
  for (const auto& w : modp_values_up_to_order(fp, 6))
    for (std::int64_t a = 0; a < fp.units_E(); ++a) {
      const TameChar xi = unr(fp, a, w);
      const auto pi = pi_from_unramified(xi);
      EXPECT_EQ(pi, pi_from_unramified(galois_conjugate(xi)));
      EXPECT_EQ(pi.total_dimension(), 2);
      EXPECT_EQ(rho_from_unramified(xi).total_dimension(), 2);
      for (const auto& l : pi.labels()) EXPECT_EQ(l.central_character(), restrict_to_F(xi));
    }
}

TEST_P(ModPRepsProperty, RamifiedInductionInvariants) {
  const auto fp = FieldParams::from_q(GetParam());
  std::map<TameChar, RepMultiset> by_restriction;
  for (const auto& w : modp_values_up_to_order(fp, 6))
    for (std::int64_t b = 0; b < fp.units_F(); ++b) {
      const TameChar nu = TameChar::modp(fp, CharGroup::Eram, b, w);
      const auto r = induced_from_ramified(nu);
      EXPECT_EQ(r.total.total_dimension(), fp.q + 1);
      for (const auto& l : r.two_dim) EXPECT_EQ(l.central_character(), restrict_to_F(nu));
      if (!fp.odd()) {
        // depends only on nu|_F when p = 2
        auto [it, fresh] = by_restriction.emplace(restrict_to_F(nu), r.total);
        if (!fresh) EXPECT_EQ(it->second, r.total);
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, ModPRepsProperty, ::testing::Values(2, 3, 4, 5, 7, 8, 9));
