#include "quatmodp/oracle/brauer.hpp"
#include "quatmodp/reduction.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace quatmodp;
using namespace quatmodp::oracle;

namespace {

const FieldParams F3 = FieldParams::from_q(3);

// position of the class of g in the oracle's class list, by walking its conjugacy orbit
std::size_t class_of(const BrauerOracle& o, const GElem& g) {
  const auto& G = o.group();
  std::set<std::int64_t> orbit{G.encode(g)};
  std::vector<GElem> todo{g};
  const auto gens = G.generators();
  while (!todo.empty()) {
    const GElem h = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      const GElem c = G.conj(s, h);
      if (orbit.insert(G.encode(c)).second) todo.push_back(c);
    }
  }
  const auto& reps = o.classes().reps;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (orbit.count(reps[i])) return i;
  throw std::logic_error("element is not p-regular");
}

CycloValue roots(std::int64_t level, std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  CycloValue v(level);
  for (const auto& [e, c] : terms) v.add_exponent(e, c);
  return v;
}

std::vector<AdmissiblePair> pairs_at(const FieldParams& fp, std::int64_t n, std::int64_t max_order) {
  std::vector<AdmissiblePair> out;
  const ExtKind ext = n % 2 ? ExtKind::RamifiedTame : ExtKind::Unramified;
  const std::int64_t m = ext == ExtKind::Unramified ? n / 2 : n;
  const CharGroup g = ext == ExtKind::Unramified ? CharGroup::Eunram : CharGroup::Eram;
  const std::int64_t exps = ext == ExtKind::Unramified ? fp.units_E() : fp.q - 1;
  for (std::int64_t k = 1; k <= max_order; ++k)
    for (std::int64_t j = 0; j < k; ++j) {
      if (std::gcd(j, k) != 1) continue;
      for (std::int64_t a = 0; a < exps; ++a) {
        try {
          out.emplace_back(ext, TameChar::zero(fp, g, a, root(j, k), m));
        } catch (const std::invalid_argument&) {
        }
      }
    }
  return out;
}

}  // namespace

TEST(BrauerOracle, LevelZeroValues) {
  const BrauerOracle o(F3, ExtKind::Unramified, 0, 1);
  const AdmissiblePair pr(ExtKind::Unramified, TameChar::zero(F3, CharGroup::Eunram, 1, {}, 0));
  const auto f = induced_brauer_character(o, pr);
  const auto L = o.level();
  ASSERT_EQ(L % 8, 0);
  const auto& G = o.group();
  const auto& F = G.field();
  const std::int64_t s = L / 8;
  EXPECT_EQ(f.values[class_of(o, {G.ring().constant(F.generator()), 0})], roots(L, {{s, 1}, {3 * s, 1}}));
  EXPECT_EQ(f.values[class_of(o, {G.ring().constant(F.exp(4)), 0})], roots(L, {{4 * s, 2}}));
  EXPECT_TRUE(f.values[class_of(o, G.uniformizer())].is_zero());
  EXPECT_EQ(f.values[class_of(o, G.identity())].as_integer(), 2);

  // the single label pi_(1,0/1) predicts the same function
  RepMultiset m(Side::D);
  m.add(ModPIrrep::two_dim(Side::D, TameChar::modp(F3, CharGroup::Eunram, 1, {})));
  EXPECT_TRUE(compare_class_functions(f, predicted_brauer_character(o, m)).ok);
}

TEST(BrauerOracle, PredictedIsLinearAndTrivialIsOne) {
  const BrauerOracle o(F3, ExtKind::Unramified, 2, 2);
  RepMultiset triv(Side::D);
  triv.add(ModPIrrep::one_dim(Side::D, TameChar::modp(F3, CharGroup::Fmult, 0, {})));
  const auto t = o.predicted(triv);
  for (const auto& v : t.values) EXPECT_EQ(v.as_integer(), 1);

  RepMultiset a(Side::D), b(Side::D), ab(Side::D);
  const auto l1 = ModPIrrep::two_dim(Side::D, TameChar::modp(F3, CharGroup::Eunram, 1, root(1, 2)));
  const auto l2 = ModPIrrep::one_dim(Side::D, TameChar::modp(F3, CharGroup::Fmult, 1, root(1, 4)));
  a.add(l1, 2);
  b.add(l2, 3);
  ab.add(l1, 2);
  ab.add(l2, 3);
  const auto pa = o.predicted(a), pb = o.predicted(b), pab = o.predicted(ab);
  for (std::size_t i = 0; i < pab.values.size(); ++i) {
    CycloValue sum = pa.values[i];
    sum.add(pb.values[i]);
    EXPECT_EQ(sum, pab.values[i]);
  }
  EXPECT_THROW(o.predicted(RepMultiset(Side::W)), std::invalid_argument);
}

TEST(BrauerOracle, OddValuationClassesVanishForEvenN) {
  for (std::int64_t n : {0, 2, 4}) {
    const BrauerOracle o(F3, ExtKind::Unramified, n, 2);
    const AdmissiblePair pr(ExtKind::Unramified, TameChar::zero(F3, CharGroup::Eunram, 1, root(1, 2), n / 2));
    const auto f = induced_brauer_character(o, pr);
    for (std::size_t i = 0; i < f.reps.size(); ++i)
      if (o.group().decode(f.reps[i]).k % 2) EXPECT_TRUE(f.values[i].is_zero()) << n;
  }
}

TEST(BrauerOracle, DimensionAtIdentityMatchesIndexFormula) {
  for (std::int64_t n = 0; n <= 4; ++n) {
    const ExtKind ext = n % 2 ? ExtKind::RamifiedTame : ExtKind::Unramified;
    const BrauerOracle o(F3, ext, n, 1);
    const auto pr = pairs_at(F3, n, 1).front();
    EXPECT_EQ(o.induced_dimension(), dim_pi(pr)) << n;
    EXPECT_EQ(induced_brauer_character(o, pr).values[0].as_integer(), dim_pi(pr)) << n;
  }
}

TEST(BrauerOracle, Budget) {
  EXPECT_THROW(BrauerOracle(F3, ExtKind::Unramified, 4, 4, 1000), std::length_error);
  EXPECT_THROW(BrauerOracle(FieldParams::from_q(2), ExtKind::RamifiedTame, 1, 1), std::invalid_argument);
  EXPECT_THROW(BrauerOracle(F3, ExtKind::Unramified, 1, 1), std::invalid_argument);
}

TEST(BrauerOracle, CentralOrder) {
  const AdmissiblePair u(ExtKind::Unramified, TameChar::zero(F3, CharGroup::Eunram, 1, root(1, 12), 1));
  EXPECT_EQ(required_central_order(u), 4);
  const AdmissiblePair r(ExtKind::RamifiedTame, TameChar::zero(F3, CharGroup::Eram, 1, root(1, 4), 1));
  EXPECT_EQ(required_central_order(r), 2);
  EXPECT_EQ(required_central_order(r, TameChar::zero(F3, CharGroup::Fmult, 0, root(1, 5), 0)), 10);
  EXPECT_EQ(required_central_order(r, TameChar::zero(F3, CharGroup::Fmult, 0, root(1, 3), 0)), 2);  // 3-part dies
}

struct SweepCase {
  std::int64_t q, n, max_order;
};

class BrauerSweep : public ::testing::TestWithParam<SweepCase> {};

TEST_P(BrauerSweep, ReductionMatchesAndMutationsAreCaught) {
  const auto [q, n, max_order] = GetParam();
  const auto fp = FieldParams::from_q(q);
  const ExtKind ext = n % 2 ? ExtKind::RamifiedTame : ExtKind::Unramified;
  std::map<int, std::unique_ptr<BrauerOracle>> cache;
  const TameChar twist = reduce_char(uniformizer_sign_character(fp));
  for (const auto& pr : pairs_at(fp, n, max_order)) {
    const int M = std::lcm(required_central_order(pr), 2);
    auto& o = cache[M];
    if (!o) o = std::make_unique<BrauerOracle>(fp, ext, n, M);
    const auto red = reduce_pi(pr);
    const auto v = oracle_verify_reduction(*o, pr, red);
    EXPECT_TRUE(v.ok) << pr.chi().to_string() << " " << v.detail;
    EXPECT_TRUE(oracle_verify_reduction(*o, pr, reduce_pi(pr, twist), twist).ok) << pr.chi().to_string();
    EXPECT_TRUE(mutation_detected(*o, pr, red)) << pr.chi().to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Small, BrauerSweep,
                         ::testing::Values(SweepCase{3, 0, 4}, SweepCase{3, 1, 4}, SweepCase{3, 2, 4},
                                           SweepCase{3, 3, 2}, SweepCase{5, 0, 2}, SweepCase{5, 1, 2},
                                           SweepCase{2, 0, 3}, SweepCase{2, 2, 3}, SweepCase{4, 0, 1}));
