#pragma once

// Full-rank lattices between the root and weight lattices, and the group specifications
// built from them.

#include <cohinv/rootsys.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cohinv {

namespace detail {

/// Row Hermite normal form of an integer matrix of full column rank: upper triangular,
/// positive pivots, entries above each pivot reduced into [0, pivot).
inline Matrix<Integer> hermite_normal_form(Matrix<Integer> a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == rows) break;
      a.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(pivot_row, c).get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(pivot_row, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(pivot_row, c) == 0) throw InvalidInput("lattice generators are not of full rank");
    if (a(pivot_row, c) < 0)
      for (std::size_t j = c; j < cols; ++j) a(pivot_row, j) = -a(pivot_row, j);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(pivot_row, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(pivot_row, j);
    }
    ++pivot_row;
  }
  if (pivot_row != cols) throw InvalidInput("lattice generators are not of full rank");
  Matrix<Integer> out(cols, cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace detail

/// A full-rank lattice in simple-root coordinates, stored by its canonical Hermite basis.
class Lattice {
 public:
  Lattice(DatumPtr datum, const std::vector<RationalVector>& generators,
          std::optional<RationalVector> tau = std::nullopt)
      : datum_(std::move(datum)), tau_(std::move(tau)) {
    const std::size_t rank = datum_->rank;
    Integer denom = 1;
    for (const auto& g : generators) {
      if (g.size() != rank) throw InvalidInput("generator dimension does not match the rank");
      for (const auto& v : g) denom = lcm(denom, v.get_den());
    }
    Matrix<Integer> ints(generators.size(), rank);
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = 0; j < rank; ++j) {
        Rational scaled = generators[i][j] * denom;
        ints(i, j) = scaled.get_num();
      }
    const Matrix<Integer> h = detail::hermite_normal_form(std::move(ints));
    basis_ = Matrix<Rational>(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) {
        basis_(i, j) = Rational(h(i, j), denom);
        basis_(i, j).canonicalize();
      }
  }

  [[nodiscard]] const RootDatum& datum() const { return *datum_; }
  [[nodiscard]] const DatumPtr& datum_ptr() const { return datum_; }
  [[nodiscard]] const Matrix<Rational>& basis() const { return basis_; }
  [[nodiscard]] RationalVector basis_vector(std::size_t i) const { return basis_.row(i); }
  [[nodiscard]] const std::optional<RationalVector>& tau() const { return tau_; }
  [[nodiscard]] std::size_t rank() const { return datum_->rank; }

  /// Coordinates of x in the Hermite basis (forward substitution on the triangular basis).
  [[nodiscard]] RationalVector coordinates(const RationalVector& x) const {
    const std::size_t r = rank();
    if (x.size() != r) throw InvalidInput("vector dimension does not match the lattice rank");
    RationalVector c(r);
    for (std::size_t j = 0; j < r; ++j) {
      Rational rest = x[j];
      for (std::size_t i = 0; i < j; ++i)
        if (basis_(i, j) != 0) rest -= c[i] * basis_(i, j);
      c[j] = rest / basis_(j, j);
    }
    return c;
  }

  /// Covolume in simple-root coordinates (product of the Hermite pivots).
  [[nodiscard]] Rational covolume() const {
    Rational v = 1;
    for (std::size_t i = 0; i < rank(); ++i) v *= basis_(i, i);
    return v;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return *a.datum_ == *b.datum_ && a.basis_ == b.basis_;
  }

 private:
  DatumPtr datum_;
  Matrix<Rational> basis_;
  std::optional<RationalVector> tau_;
};

inline bool contains(const Lattice& lat, const RationalVector& x) {
  for (const auto& c : lat.coordinates(x))
    if (!is_integral(c)) return false;
  return true;
}

inline Lattice root_lattice(const DatumPtr& datum) {
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < datum->rank; ++i) gens.push_back(datum->simple(i));
  return Lattice(datum, gens);
}

inline Lattice weight_lattice(const DatumPtr& datum) {
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < datum->rank; ++i) gens.push_back(datum->fundamental_weight(i));
  return Lattice(datum, gens);
}

/// [Lambda_w : Lambda] = covol(Lambda) * |det cartan|.
inline Integer index_in_weight_lattice(const Lattice& lat) {
  const Rational idx = lat.covolume() * fundamental_group(lat.datum()).order();
  if (!is_integral(idx)) throw Inconsistency("lattice is not contained in the weight lattice");
  return idx.get_num();
}

/// [Lambda : Lambda_r] = 1 / covol(Lambda).
inline Integer index_over_root_lattice(const Lattice& lat) {
  const Rational idx = 1 / lat.covolume();
  if (!is_integral(idx)) throw Inconsistency("lattice does not contain the root lattice");
  return idx.get_num();
}

/// Dual lattice {x : (x, y) in Z for all y in lat} with respect to the Cartan pairing.
inline Lattice dual_lattice(const Lattice& lat) {
  const RootDatum& d = lat.datum();
  const std::size_t r = d.rank;
  Matrix<Rational> gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram(i, j) = bilinear(d.cartan, lat.basis_vector(i), lat.basis_vector(j));
  const Matrix<Rational> ginv = inverse(gram);
  std::vector<RationalVector> gens(r, RationalVector(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (ginv(i, k) == 0) continue;
      for (std::size_t j = 0; j < r; ++j) gens[i][j] += ginv(i, k) * lat.basis()(k, j);
    }
  return Lattice(lat.datum_ptr(), gens);
}

/// Generators of Lambda / Lambda_r as elementary divisors (Lambda must contain Lambda_r).
inline std::vector<Integer> quotient_by_root_lattice(const Lattice& lat) {
  const std::size_t r = lat.rank();
  Matrix<Integer> m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const RationalVector c = lat.coordinates(lat.datum().simple(i));
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_integral(c[j])) throw Inconsistency("lattice does not contain the root lattice");
      m(i, j) = c[j].get_num();
    }
  }
  return elementary_divisors(std::move(m));
}

/// Lattice generated by the coroots of A_{n-1} and tau = (1/m)(alpha_1 + 2 alpha_2 + ... + (n-1) alpha_{n-1}).
inline Lattice lattice_sl_mod_mu(long n, long m) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  if (m < 1) throw InvalidInput("m must be positive");
  if (n % m != 0) throw InvalidInput("m must divide n");
  auto datum = build_root_datum(Family::A, static_cast<std::size_t>(n - 1));
  RationalVector tau(datum->rank);
  for (std::size_t i = 0; i < datum->rank; ++i) tau[i] = Rational(static_cast<long>(i) + 1, m);
  for (auto& t : tau) t.canonicalize();
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < datum->rank; ++i) gens.push_back(datum->simple(i));
  gens.push_back(tau);
  return Lattice(datum, gens, tau);
}

/// Half-spin lattice of D_{2n}: coroots plus tau = (1/2) sum of alpha_i over odd i (1-based).
inline Lattice lattice_half_spin(long n) {
  if (n < 2) throw InvalidInput("HSpin_{4n} requires n >= 2");
  auto datum = build_root_datum(Family::D, static_cast<std::size_t>(2 * n));
  RationalVector tau(datum->rank, 0);
  for (std::size_t i = 0; i < datum->rank; i += 2) tau[i] = Rational(1, 2);
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < datum->rank; ++i) gens.push_back(datum->simple(i));
  gens.push_back(tau);
  return Lattice(datum, gens, tau);
}

enum class GroupKind { SlModMu, HalfSpin, SimplyConnected, Adjoint };

/// A split group given by its root datum. `cocharacters` is the lattice carrying the invariant
/// quadratic form (coroots plus tau); `characters` is its dual, where highest weights of
/// representations live.
struct GroupSpec {
  GroupKind kind;
  long n = 0;  // SL_n/mu_m: n; HSpin_{4n}: n; endpoints: rank
  long m = 0;  // SL_n/mu_m only
  Lattice cocharacters;
  Lattice characters;
  /// Elementary divisors of the character group of the kernel of the simply connected cover.
  std::vector<Integer> center_factors;

  [[nodiscard]] const RootDatum& datum() const { return cocharacters.datum(); }

  [[nodiscard]] Integer center_char_order() const {
    Integer o = 1;
    for (const auto& f : center_factors) o *= f;
    return o;
  }

  [[nodiscard]] std::string name() const {
    const RootDatum& d = datum();
    switch (kind) {
      case GroupKind::SlModMu:
        return m == 1 ? "SL_" + std::to_string(n) : "SL_" + std::to_string(n) + "/μ_" + std::to_string(m);
      case GroupKind::HalfSpin:
        return "HSpin_" + std::to_string(4 * n);
      case GroupKind::SimplyConnected:
        return d.family == Family::A ? "SL_" + std::to_string(d.rank + 1) : "Spin_" + std::to_string(2 * d.rank);
      case GroupKind::Adjoint:
        return d.family == Family::A ? "PGL_" + std::to_string(d.rank + 1) : "PGO_" + std::to_string(2 * d.rank);
    }
    return {};
  }
};

namespace detail {

inline GroupSpec make_spec(GroupKind kind, long n, long m, Lattice cochar) {
  Lattice chars = dual_lattice(cochar);
  std::vector<Integer> factors = quotient_by_root_lattice(cochar);
  return GroupSpec{kind, n, m, std::move(cochar), std::move(chars), std::move(factors)};
}

inline void check_endpoint_rank(Family family, long rank) {
  if (family == Family::A && rank < 1) throw InvalidInput("type A requires rank >= 1");
  // D_3 = A_3 is not aliased.
  if (family == Family::D && rank < 4) throw InvalidInput("type D groups require rank >= 4");
}

}  // namespace detail

inline GroupSpec sl_mod_mu(long n, long m) {
  return detail::make_spec(GroupKind::SlModMu, n, m, lattice_sl_mod_mu(n, m));
}

/// HSpin_{4n}, root system D_{2n}.
inline GroupSpec half_spin(long n) { return detail::make_spec(GroupKind::HalfSpin, n, 0, lattice_half_spin(n)); }

inline GroupSpec simply_connected(Family family, long rank) {
  detail::check_endpoint_rank(family, rank);
  return detail::make_spec(GroupKind::SimplyConnected, rank, 0,
                           root_lattice(build_root_datum(family, static_cast<std::size_t>(rank))));
}

inline GroupSpec adjoint(Family family, long rank) {
  detail::check_endpoint_rank(family, rank);
  return detail::make_spec(GroupKind::Adjoint, rank, 0,
                           weight_lattice(build_root_datum(family, static_cast<std::size_t>(rank))));
}

}  // namespace cohinv
