#pragma once

// Root data for the simply-laced families A and D.
//
// All vectors are in simple-root coordinates. Roots and coroots are identified (simply-laced),
// so the Cartan matrix doubles as the Gram matrix of the pairing.
// D-node labels (0-based): nodes 0..k-3 form the chain, nodes k-2 and k-1 are the fork,
// both attached to node k-3.

#include <cohinv/arith.hpp>

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace cohinv {

enum class Family { A, D };

inline std::string to_string(Family f) { return f == Family::A ? "A" : "D"; }

struct RootDatum {
  Family family;
  std::size_t rank;
  Matrix<long> cartan;
  Matrix<Rational> cartan_inverse;
  /// Positive coroots, sorted by height then lexicographically.
  std::vector<std::vector<long>> positive_coroots;
  RationalVector rho;
  long coxeter_number;
  long dim_g;

  [[nodiscard]] std::string name() const { return to_string(family) + "_" + std::to_string(rank); }

  /// The i-th simple coroot as a rational vector.
  [[nodiscard]] RationalVector simple(std::size_t i) const {
    RationalVector e(rank, 0);
    e.at(i) = 1;
    return e;
  }

  /// Fundamental weight omega_i in simple-root coordinates (row i of the inverse Cartan matrix).
  [[nodiscard]] RationalVector fundamental_weight(std::size_t i) const {
    RationalVector w(rank);
    for (std::size_t j = 0; j < rank; ++j) w[j] = cartan_inverse(i, j);
    return w;
  }

  /// Pairings (x, alpha_i) for all i; integral exactly when x lies in the weight lattice.
  [[nodiscard]] RationalVector fw_coords(const RationalVector& x) const {
    RationalVector out(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        if (cartan(i, j) != 0) out[i] += cartan(i, j) * x[j];
    return out;
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

using DatumPtr = std::shared_ptr<const RootDatum>;

struct FundamentalGroupStruct {
  std::vector<Integer> cyclic_factors;

  [[nodiscard]] Integer order() const {
    Integer o = 1;
    for (const auto& f : cyclic_factors) o *= f;
    return o;
  }
};

namespace detail {

inline Matrix<long> cartan_matrix(Family family, std::size_t rank) {
  Matrix<long> c(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) c(i, i) = 2;
  auto link = [&c](std::size_t i, std::size_t j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  if (family == Family::A) {
    for (std::size_t i = 0; i + 1 < rank; ++i) link(i, i + 1);
  } else {
    for (std::size_t i = 0; i + 3 < rank; ++i) link(i, i + 1);
    link(rank - 3, rank - 2);
    link(rank - 3, rank - 1);
  }
  return c;
}

inline long pairing(const Matrix<long>& cartan, std::size_t i, const std::vector<long>& x) {
  long s = 0;
  for (std::size_t j = 0; j < cartan.cols(); ++j) s += cartan(i, j) * x[j];
  return s;
}

/// Closure of the simple coroots under simple reflections, keeping the positive ones.
inline std::vector<std::vector<long>> positive_coroots_by_closure(const Matrix<long>& cartan) {
  const std::size_t rank = cartan.rows();
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<long> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < rank; ++i) {
        std::vector<long> image = beta;
        image[i] -= pairing(cartan, i, beta);
        // A simple reflection maps a positive root other than alpha_i to a positive root.
        if (std::any_of(image.begin(), image.end(), [](long v) { return v < 0; })) continue;
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<long>> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long v : a) ha += v;
    for (long v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return roots;
}

}  // namespace detail

/// Builds the root datum of type A_rank (rank >= 1) or D_rank (rank >= 3).
inline DatumPtr build_root_datum(Family family, std::size_t rank) {
  if (family == Family::A && rank < 1) throw InvalidInput("type A requires rank >= 1");
  if (family == Family::D && rank < 3) throw InvalidInput("type D requires rank >= 3");

  auto d = std::make_shared<RootDatum>();
  d->family = family;
  d->rank = rank;
  d->cartan = detail::cartan_matrix(family, rank);

  Matrix<Rational> rc(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) rc(i, j) = d->cartan(i, j);
  d->cartan_inverse = inverse(rc);

  d->positive_coroots = detail::positive_coroots_by_closure(d->cartan);
  d->rho.assign(rank, 0);
  for (const auto& beta : d->positive_coroots)
    for (std::size_t j = 0; j < rank; ++j) d->rho[j] += beta[j];
  for (auto& v : d->rho) v /= 2;

  const long npos = static_cast<long>(d->positive_coroots.size());
  d->dim_g = static_cast<long>(rank) + 2 * npos;
  d->coxeter_number = 2 * npos / static_cast<long>(rank);
  return d;
}

/// Lambda_w / Lambda_r as elementary divisors of the Cartan matrix.
inline FundamentalGroupStruct fundamental_group(const RootDatum& datum) {
  Matrix<Integer> m(datum.rank, datum.rank);
  for (std::size_t i = 0; i < datum.rank; ++i)
    for (std::size_t j = 0; j < datum.rank; ++j) m(i, j) = datum.cartan(i, j);
  return {elementary_divisors(std::move(m))};
}

/// s_i(x) = x - (x, alpha_i) alpha_i, with i a 0-based node index.
inline RationalVector simple_reflection(const RootDatum& datum, std::size_t i, const RationalVector& x) {
  if (i >= datum.rank) throw InvalidInput("simple reflection index out of range");
  if (x.size() != datum.rank) throw InvalidInput("vector dimension does not match the rank");
  Rational p = 0;
  for (std::size_t j = 0; j < datum.rank; ++j)
    if (datum.cartan(i, j) != 0) p += datum.cartan(i, j) * x[j];
  RationalVector out = x;
  out[i] -= p;
  return out;
}

}  // namespace cohinv
