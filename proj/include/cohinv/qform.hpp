#pragma once

// The normalized Weyl-invariant quadratic form and the generator l*q of Q(G).

#include <cohinv/lattice.hpp>

namespace cohinv {

/// q(x) = 1/2 x^T B x in simple-root coordinates, B the Cartan matrix (simply-laced),
/// so q takes the value 1 on every coroot.
class InvariantForm {
 public:
  explicit InvariantForm(DatumPtr datum) : datum_(std::move(datum)) {}

  [[nodiscard]] const RootDatum& datum() const { return *datum_; }
  [[nodiscard]] const Matrix<long>& gram() const { return datum_->cartan; }

  /// b(x, y) = q(x + y) - q(x) - q(y) = x^T B y.
  [[nodiscard]] Rational bilinear(const RationalVector& x, const RationalVector& y) const {
    check(x);
    check(y);
    return cohinv::bilinear(gram(), x, y);
  }

  [[nodiscard]] Rational operator()(const RationalVector& x) const { return bilinear(x, x) / 2; }

 private:
  void check(const RationalVector& x) const {
    if (x.size() != datum_->rank) throw InvalidInput("vector dimension does not match the form");
  }

  DatumPtr datum_;
};

inline Rational q_eval(const InvariantForm& form, const RationalVector& x) { return form(x); }

namespace detail {

inline void check_same_datum(const InvariantForm& form, const Lattice& lat) {
  if (!(form.datum() == lat.datum())) throw InvalidInput("form and lattice belong to different root data");
}

}  // namespace detail

/// Smallest positive integer l with l*q integer-valued on the lattice: the lcm of the
/// denominators of q(b_i) and b(b_i, b_j) over the basis, since
/// q(sum c_i b_i) = sum c_i^2 q(b_i) + sum_{i<j} c_i c_j b(b_i, b_j).
inline Integer ell_of_lattice(const InvariantForm& form, const Lattice& lat) {
  detail::check_same_datum(form, lat);
  Integer ell = 1;
  const std::size_t r = lat.rank();
  for (std::size_t i = 0; i < r; ++i) {
    const RationalVector bi = lat.basis_vector(i);
    ell = lcm(ell, form(bi).get_den());
    for (std::size_t j = i + 1; j < r; ++j) ell = lcm(ell, form.bilinear(bi, lat.basis_vector(j)).get_den());
  }
  return ell;
}

/// For every prime p | ell, a basis value or pairing on which (ell/p)*q is not integral.
/// Returns false if some prime has no such witness (ell would not be minimal).
inline bool ell_is_minimal(const InvariantForm& form, const Lattice& lat, const Integer& ell) {
  detail::check_same_datum(form, lat);
  const std::size_t r = lat.rank();
  for (long p : prime_divisors(ell)) {
    const Integer reduced = ell / p;
    bool witnessed = false;
    for (std::size_t i = 0; i < r && !witnessed; ++i) {
      const RationalVector bi = lat.basis_vector(i);
      if (!is_integral(Rational(reduced) * form(bi))) witnessed = true;
      for (std::size_t j = i + 1; j < r && !witnessed; ++j)
        if (!is_integral(Rational(reduced) * form.bilinear(bi, lat.basis_vector(j)))) witnessed = true;
    }
    if (!witnessed) return false;
  }
  return true;
}

/// Case split for SL_n/mu_m: 2m^2/gcd(2m^2, n) for even n, m^2/gcd(m^2, n) for odd n.
inline Integer ell_closed_form_sl(long n, long m) {
  if (n < 2 || m < 1) throw InvalidInput("need n >= 2 and m >= 1");
  if (n % m != 0) throw InvalidInput("m must divide n");
  const Integer m2 = Integer(m) * m;
  if (n % 2 == 0) return 2 * m2 / gcd(2 * m2, Integer(n));
  return m2 / gcd(m2, Integer(n));
}

/// Case split for HSpin_{4n}: 1 if 4 | n, 2 if n = 2 mod 4, 4 if n is odd.
inline Integer ell_closed_form_halfspin(long n) {
  if (n < 2) throw InvalidInput("HSpin_{4n} requires n >= 2");
  if (n % 4 == 0) return 1;
  if (n % 4 == 2) return 2;
  return 4;
}

}  // namespace cohinv
