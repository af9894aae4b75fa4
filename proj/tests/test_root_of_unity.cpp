#include "quatmodp/root_of_unity.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quatmodp;

namespace {

// prime-to-p part by search: the unique y in <x> of order prime to p with x/y of p-power order
RootOfUnity brute_prime_to_p(const RootOfUnity& x, std::int64_t p) {
  const std::int64_t n = to_int64(x.order());
  for (std::int64_t k = 0; k < n; ++k) {
    const RootOfUnity y = x.pow(k);
    if (!y.has_order_prime_to(p)) continue;
    std::int64_t r = to_int64((x * y.inverse()).order());
    while (r % p == 0) r /= p;
    if (r == 1) return y;
  }
  throw std::logic_error("no prime-to-p part");
}

}  // namespace

TEST(RootOfUnity, NormalizesOnConstruction) {
  EXPECT_EQ(RootOfUnity(2, 4), RootOfUnity(1, 2));
  EXPECT_EQ(RootOfUnity(-1, 4), RootOfUnity(3, 4));
  EXPECT_EQ(RootOfUnity(5, 5), RootOfUnity());
  EXPECT_EQ(RootOfUnity(0, 7).to_string(), "0/1");
  EXPECT_THROW(RootOfUnity(1, 0), std::invalid_argument);
}

TEST(RootOfUnity, Parse) {
  EXPECT_EQ(RootOfUnity::parse("3/8"), root(3, 8));
  EXPECT_EQ(RootOfUnity::parse("0"), RootOfUnity());
  EXPECT_THROW(RootOfUnity::parse("x/3"), std::invalid_argument);
}

TEST(RootOfUnity, ReduceModPExamples) {
  EXPECT_EQ(reduce_mod_p(root(1, 6), 3), root(1, 2));
  EXPECT_EQ(reduce_mod_p(root(1, 9), 3), RootOfUnity());
  EXPECT_EQ(reduce_mod_p(root(3, 8), 3), root(3, 8));
}

TEST(RootOfUnity, BigDenominators) {
  const RootOfUnity a(BigInt("123456789012345678901"), BigInt("1000000000000000000000000"));
  EXPECT_EQ(a.pow(BigInt("1000000000000000000000000")), RootOfUnity());
  EXPECT_EQ((a * a.inverse()), RootOfUnity());
}

TEST(RootOfUnity, SquareRoots) {
  const auto r = square_roots(root(1, 3));
  ASSERT_EQ(r.size(), 2u);
  for (const auto& s : r) EXPECT_EQ(s.pow(2), root(1, 3));
  const auto odd = square_roots_prime_to(root(1, 3), 2);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0], root(2, 3));
}

class RootOfUnityProperty : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(RootOfUnityProperty, ReduceIsIdempotentHomomorphismMatchingSearch) {
  const std::int64_t p = GetParam();
  std::mt19937_64 rng(17 + p);
  std::uniform_int_distribution<std::int64_t> den(1, 360), num(0, 1000);
  for (int i = 0; i < 300; ++i) {
    const RootOfUnity x(num(rng), den(rng)), y(num(rng), den(rng));
    const RootOfUnity rx = reduce_mod_p(x, p);
    EXPECT_EQ(reduce_mod_p(rx, p), rx);
    EXPECT_EQ(reduce_mod_p(x * y, p), rx * reduce_mod_p(y, p));
    EXPECT_EQ(rx, brute_prime_to_p(x, p));
    std::int64_t n = to_int64(x.order());
    while (n % p == 0) n /= p;
    EXPECT_EQ(to_int64(rx.order()), n);
  }
}

TEST_P(RootOfUnityProperty, GroupLaws) {
  std::mt19937_64 rng(99 + GetParam());
  std::uniform_int_distribution<std::int64_t> den(1, 120), num(-500, 500), e(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const RootOfUnity x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * RootOfUnity(), x);
    const std::int64_t k = e(rng);
    RootOfUnity acc;
    for (std::int64_t j = 0; j < std::abs(k); ++j) acc *= x;
    EXPECT_EQ(x.pow(k), k >= 0 ? acc : acc.inverse());
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, RootOfUnityProperty, ::testing::Values(2, 3, 5, 7));
