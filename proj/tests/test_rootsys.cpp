#include <cohinv/rootsys.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace cohinv;

namespace {

oracle::IntMatrix as_rows(const Matrix<long>& m) {
  oracle::IntMatrix out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST(RootDatum, A3CartanAndCounts) {
  const auto a3 = build_root_datum(Family::A, 3);
  const oracle::IntMatrix expected{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(as_rows(a3->cartan), expected);
  EXPECT_EQ(a3->positive_coroots.size(), 6u);
  EXPECT_EQ(a3->dim_g, 15);
  EXPECT_EQ(a3->coxeter_number, 4);
}

TEST(RootDatum, D4AndD8Counts) {
  EXPECT_EQ(build_root_datum(Family::D, 4)->positive_coroots.size(), 12u);
  EXPECT_EQ(build_root_datum(Family::D, 4)->dim_g, 28);
  EXPECT_EQ(build_root_datum(Family::D, 8)->positive_coroots.size(), 56u);
  EXPECT_EQ(build_root_datum(Family::D, 8)->dim_g, 120);
}

TEST(RootDatum, CoxeterNumberOfTypeA) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(build_root_datum(Family::A, n - 1)->coxeter_number, static_cast<long>(n));
}

TEST(RootDatum, CorootsMatchNormTwoScan) {
  for (std::size_t r = 1; r <= 7; ++r) {
    auto roots = oracle::positive_roots_by_norm(oracle::cartan_a(r));
    auto got = build_root_datum(Family::A, r)->positive_coroots;
    std::sort(roots.begin(), roots.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, roots) << "A_" << r;
  }
  for (std::size_t r = 3; r <= 8; ++r) {
    auto roots = oracle::positive_roots_by_norm(oracle::cartan_d(r));
    auto got = build_root_datum(Family::D, r)->positive_coroots;
    std::sort(roots.begin(), roots.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, roots) << "D_" << r;
    EXPECT_EQ(as_rows(build_root_datum(Family::D, r)->cartan), oracle::cartan_d(r));
  }
}

TEST(RootDatum, DimensionAndRhoInvariants) {
  for (Family f : {Family::A, Family::D})
    for (std::size_t r = (f == Family::A ? 1 : 3); r <= 8; ++r) {
      const auto d = build_root_datum(f, r);
      EXPECT_EQ(d->dim_g, static_cast<long>(r + 2 * d->positive_coroots.size()));
      const std::size_t expected = f == Family::A ? r * (r + 1) / 2 : r * (r - 1);
      EXPECT_EQ(d->positive_coroots.size(), expected);
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(d->cartan(i, i), 2);
      // rho pairs to 1 with every simple coroot
      const auto fw = d->fw_coords(d->rho);
      for (const auto& v : fw) EXPECT_EQ(v, 1);
    }
}

TEST(RootDatum, RejectsUnsupportedRanks) {
  EXPECT_THROW(build_root_datum(Family::A, 0), InvalidInput);
  EXPECT_THROW(build_root_datum(Family::D, 2), InvalidInput);
  EXPECT_NO_THROW(build_root_datum(Family::D, 3));
}

TEST(FundamentalGroup, Examples) {
  EXPECT_EQ(as_longs(fundamental_group(*build_root_datum(Family::A, 3)).cyclic_factors), (std::vector<long>{4}));
  EXPECT_EQ(as_longs(fundamental_group(*build_root_datum(Family::D, 4)).cyclic_factors), (std::vector<long>{2, 2}));
  EXPECT_EQ(as_longs(fundamental_group(*build_root_datum(Family::A, 8)).cyclic_factors), (std::vector<long>{9}));
}

TEST(FundamentalGroup, MatchesDeterminantalDivisors) {
  for (Family f : {Family::A, Family::D})
    for (std::size_t r = (f == Family::A ? 1 : 3); r <= 7; ++r) {
      const auto d = build_root_datum(f, r);
      const auto expected = oracle::determinantal_divisors(as_rows(d->cartan));
      const auto got = fundamental_group(*d).cyclic_factors;
      ASSERT_EQ(got.size(), expected.size()) << d->name();
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]) << d->name();
      const long det = f == Family::A ? static_cast<long>(r + 1) : 4;
      EXPECT_EQ(fundamental_group(*d).order(), det);
    }
}

TEST(SimpleReflection, Examples) {
  const auto a1 = build_root_datum(Family::A, 1);
  EXPECT_EQ(simple_reflection(*a1, 0, {Rational(1)}), (RationalVector{Rational(-1)}));
  const auto a2 = build_root_datum(Family::A, 2);
  EXPECT_EQ(simple_reflection(*a2, 0, {Rational(0), Rational(1)}), (RationalVector{Rational(1), Rational(1)}));
}

TEST(SimpleReflection, InvolutionOnD4) {
  const auto d4 = build_root_datum(Family::D, 4);
  std::mt19937_64 rng(20261016);
  for (int t = 0; t < 20; ++t) {
    const auto x = oracle::random_rational_vector(rng, 4);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(simple_reflection(*d4, i, simple_reflection(*d4, i, x)), x);
  }
}

TEST(SimpleReflection, PermutesRootsUpToSign) {
  const auto d5 = build_root_datum(Family::D, 5);
  std::set<std::vector<long>> all;
  for (const auto& a : d5->positive_coroots) {
    all.insert(a);
    std::vector<long> neg(a);
    for (auto& v : neg) v = -v;
    all.insert(neg);
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (const auto& a : d5->positive_coroots) {
      const auto img = simple_reflection(*d5, i, to_rational(a));
      std::vector<long> v;
      for (const auto& x : img) {
        ASSERT_TRUE(is_integral(x));
        v.push_back(x.get_num().get_si());
      }
      EXPECT_TRUE(all.count(v));
    }
}

TEST(SimpleReflection, IndexOutOfRange) {
  const auto a2 = build_root_datum(Family::A, 2);
  EXPECT_THROW(simple_reflection(*a2, 2, {Rational(0), Rational(1)}), InvalidInput);
}
