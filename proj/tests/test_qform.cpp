#include <cohinv/qform.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace cohinv;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(QForm, TauValuesTypeA) {
  for (long n = 2; n <= 30; ++n)
    for (long m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const Lattice lat = lattice_sl_mod_mu(n, m);
      const InvariantForm form(lat.datum_ptr());
      EXPECT_EQ(q_eval(form, *lat.tau()), q(n * (n - 1), 2 * m * m)) << n << " " << m;
      // independent Gram evaluation
      EXPECT_EQ(q_eval(form, *lat.tau()), oracle::form(oracle::cartan_a(n - 1), oracle::tau_sl(n, m), oracle::tau_sl(n, m)) / 2);
    }
}

TEST(QForm, TauValuesHalfSpin) {
  for (long n = 2; n <= 8; ++n) {
    const Lattice lat = lattice_half_spin(n);
    const InvariantForm form(lat.datum_ptr());
    EXPECT_EQ(q_eval(form, *lat.tau()), q(n, 4));
  }
}

TEST(QForm, SimpleCorootsHaveValueOne) {
  for (Family f : {Family::A, Family::D})
    for (std::size_t r = (f == Family::A ? 1 : 3); r <= 8; ++r) {
      const InvariantForm form(build_root_datum(f, r));
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(form(form.datum().simple(i)), 1);
    }
}

TEST(QForm, BilinearIsPolarization) {
  const InvariantForm form(build_root_datum(Family::D, 6));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto x = oracle::random_rational_vector(rng, 6);
    const auto y = oracle::random_rational_vector(rng, 6);
    EXPECT_EQ(form.bilinear(x, y), form(x + y) - form(x) - form(y));
  }
}

TEST(QForm, WeylInvariance) {
  std::mt19937_64 rng(20261016);
  for (Family f : {Family::A, Family::D})
    for (std::size_t r = (f == Family::A ? 1 : 3); r <= 8; ++r) {
      const auto d = build_root_datum(f, r);
      const InvariantForm form(d);
      for (int t = 0; t < 50; ++t) {
        const auto x = oracle::random_rational_vector(rng, r);
        for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(form(simple_reflection(*d, i, x)), form(x));
      }
    }
}

TEST(QForm, DimensionMismatch) {
  const InvariantForm form(build_root_datum(Family::A, 3));
  EXPECT_THROW(q_eval(form, RationalVector(2, 0)), InvalidInput);
  EXPECT_THROW(ell_of_lattice(form, lattice_sl_mod_mu(5, 5)), InvalidInput);
}

TEST(Ell, Examples) {
  for (long n = 2; n <= 12; ++n) {
    const Lattice lat = lattice_sl_mod_mu(n, 1);
    EXPECT_EQ(ell_of_lattice(InvariantForm(lat.datum_ptr()), lat), 1);
  }
  const Lattice pgl2 = lattice_sl_mod_mu(2, 2);
  EXPECT_EQ(ell_of_lattice(InvariantForm(pgl2.datum_ptr()), pgl2), 4);
  const Lattice hs16 = lattice_half_spin(4);
  EXPECT_EQ(ell_of_lattice(InvariantForm(hs16.datum_ptr()), hs16), 1);
}

TEST(Ell, ClosedFormValues) {
  EXPECT_EQ(ell_closed_form_sl(8, 2), 1);
  EXPECT_EQ(ell_closed_form_sl(9, 3), 1);
  EXPECT_EQ(ell_closed_form_sl(2, 2), 4);
  EXPECT_EQ(ell_closed_form_halfspin(4), 1);
  EXPECT_EQ(ell_closed_form_halfspin(2), 2);
  EXPECT_EQ(ell_closed_form_halfspin(3), 4);
  EXPECT_THROW(ell_closed_form_sl(8, 3), InvalidInput);
  EXPECT_THROW(ell_closed_form_halfspin(1), InvalidInput);
}

TEST(Ell, AdjointMatchesWeightLattice) {
  for (long n = 2; n <= 16; ++n) {
    const Lattice lat = lattice_sl_mod_mu(n, n);
    const InvariantForm form(lat.datum_ptr());
    const Integer ell = ell_of_lattice(form, lat);
    EXPECT_EQ(ell, ell_of_lattice(form, weight_lattice(lat.datum_ptr())));
    EXPECT_EQ(ell, ell_closed_form_sl(n, n));
  }
}

TEST(Ell, OracleEqualityTypeA) {
  for (long n = 2; n <= 30; ++n)
    for (long m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const Lattice lat = lattice_sl_mod_mu(n, m);
      const InvariantForm form(lat.datum_ptr());
      const Integer ell = ell_of_lattice(form, lat);
      EXPECT_EQ(ell, ell_closed_form_sl(n, m)) << n << " " << m;
      EXPECT_TRUE(ell_is_minimal(form, lat, ell));
    }
}

TEST(Ell, OracleEqualityHalfSpin) {
  for (long n = 2; n <= 8; ++n) {
    const Lattice lat = lattice_half_spin(n);
    const InvariantForm form(lat.datum_ptr());
    const Integer ell = ell_of_lattice(form, lat);
    EXPECT_EQ(ell, ell_closed_form_halfspin(n));
    EXPECT_TRUE(ell_is_minimal(form, lat, ell));
  }
}

// lcm of denominators of q on random combinations of the defining generators
TEST(Ell, SampledLatticePoints) {
  for (long n = 2; n <= 18; ++n)
    for (long m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const Lattice lat = lattice_sl_mod_mu(n, m);
      const auto gens = oracle::coroots_and(oracle::tau_sl(n, m));
      EXPECT_EQ(ell_of_lattice(InvariantForm(lat.datum_ptr()), lat),
                oracle::sampled_ell(oracle::cartan_a(n - 1), gens, static_cast<std::uint64_t>(n * 100 + m)))
          << n << " " << m;
    }
  for (long n = 2; n <= 8; ++n) {
    const Lattice lat = lattice_half_spin(n);
    const auto gens = oracle::coroots_and(oracle::tau_half_spin(n));
    EXPECT_EQ(ell_of_lattice(InvariantForm(lat.datum_ptr()), lat),
              oracle::sampled_ell(oracle::cartan_d(2 * n), gens, static_cast<std::uint64_t>(n)));
  }
}

TEST(Ell, MinimalityDetectsNonMinimal) {
  const Lattice lat = lattice_sl_mod_mu(2, 2);
  const InvariantForm form(lat.datum_ptr());
  EXPECT_FALSE(ell_is_minimal(form, lat, 8));
  EXPECT_TRUE(ell_is_minimal(form, lat, 4));
}

TEST(Ell, IntegralOnRootLattice) {
  for (std::size_t r = 3; r <= 8; ++r) {
    const auto d = build_root_datum(Family::D, r);
    EXPECT_EQ(ell_of_lattice(InvariantForm(d), root_lattice(d)), 1);
  }
}
