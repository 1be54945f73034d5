#pragma once

// Dominant characters, Weyl dimensions, Dynkin indices and the gcd n_G.

#include <cohinv/qform.hpp>

#include <map>
#include <optional>
#include <vector>

namespace cohinv {

struct DominantCharacter {
  RationalVector weight;      // simple-root coordinates
  std::vector<long> fw_coords;  // fundamental-weight coordinates, all >= 0
  long height = 0;            // sum of fw_coords

  friend bool operator==(const DominantCharacter& a, const DominantCharacter& b) {
    return a.fw_coords == b.fw_coords;
  }
};

/// Known divisor `lower` of n_G and known multiple `upper` (n_G | upper).
struct DynkinBounds {
  Integer lower;
  Integer upper;
};

inline DynkinBounds bounds_sl(long n, long m) {
  const Integer m2 = Integer(m) * m;
  return {Integer(m), gcd(m2, Integer(2 * n))};
}

inline DynkinBounds bounds_halfspin() { return {Integer(2), Integer(4)}; }

inline DominantCharacter make_dominant(const RootDatum& datum, std::vector<long> fw) {
  if (fw.size() != datum.rank) throw InvalidInput("fundamental-weight coordinates have the wrong length");
  DominantCharacter chi;
  chi.weight.assign(datum.rank, 0);
  for (std::size_t i = 0; i < datum.rank; ++i) {
    if (fw[i] < 0) throw InvalidInput("character is not dominant");
    if (fw[i] == 0) continue;
    chi.height += fw[i];
    for (std::size_t j = 0; j < datum.rank; ++j) chi.weight[j] += fw[i] * datum.cartan_inverse(i, j);
  }
  chi.fw_coords = std::move(fw);
  return chi;
}

namespace detail {

/// Membership of weights given in fundamental-weight coordinates: k lies in the lattice iff
/// (k, y) is integral for every y in a basis of the dual lattice.
class WeightFilter {
 public:
  explicit WeightFilter(const Lattice& lat) {
    const Lattice dual = dual_lattice(lat);
    for (std::size_t i = 0; i < dual.rank(); ++i) {
      const RationalVector y = dual.basis_vector(i);
      Integer den = 1;
      for (const auto& v : y) den = lcm(den, v.get_den());
      if (den == 1) continue;
      std::vector<long> scaled(y.size());
      for (std::size_t j = 0; j < y.size(); ++j) scaled[j] = Rational(y[j] * den).get_num().get_si();
      tests_.push_back({den.get_si(), std::move(scaled)});
    }
  }

  [[nodiscard]] bool accepts(const std::vector<long>& k) const {
    for (const auto& t : tests_) {
      long s = 0;
      for (std::size_t j = 0; j < k.size(); ++j)
        if (k[j] != 0) s = (s + k[j] * t.scaled[j]) % t.den;
      if (s != 0) return false;
    }
    return true;
  }

 private:
  struct Test {
    long den;
    std::vector<long> scaled;
  };
  std::vector<Test> tests_;
};

template <class Visit>
void for_each_composition(std::vector<long>& k, std::size_t pos, long budget, Visit&& visit) {
  if (pos == k.size()) {
    visit(k);
    return;
  }
  for (long v = 0; v <= budget; ++v) {
    k[pos] = v;
    for_each_composition(k, pos + 1, budget - v, visit);
  }
  k[pos] = 0;
}

}  // namespace detail

/// Nonzero dominant elements of the lattice with height <= height_max, sorted
/// lexicographically by fundamental-weight coordinates.
inline std::vector<DominantCharacter> enumerate_dominant(const Lattice& lat, long height_max) {
  if (height_max < 1) throw InvalidInput("height_max must be at least 1");
  const detail::WeightFilter filter(lat);
  std::vector<DominantCharacter> out;
  std::vector<long> k(lat.rank(), 0);
  detail::for_each_composition(k, 0, height_max, [&](const std::vector<long>& fw) {
    bool zero = true;
    for (long v : fw) zero = zero && v == 0;
    if (!zero && filter.accepts(fw)) out.push_back(make_dominant(lat.datum(), fw));
  });
  return out;
}

/// Weyl dimension formula: prod over positive coroots of (lambda + rho, alpha) / (rho, alpha).
inline Integer weyl_dim(const RootDatum& datum, const DominantCharacter& chi) {
  if (chi.fw_coords.size() != datum.rank) throw InvalidInput("character has the wrong rank");
  for (long v : chi.fw_coords)
    if (v < 0) throw InvalidInput("character is not dominant");
  Integer num = 1, den = 1;
  for (const auto& alpha : datum.positive_coroots) {
    long shifted = 0, plain = 0;
    for (std::size_t i = 0; i < datum.rank; ++i) {
      shifted += alpha[i] * (chi.fw_coords[i] + 1);
      plain += alpha[i];
    }
    num *= shifted;
    den *= plain;
  }
  if (!divides(den, num)) throw Inconsistency("Weyl dimension is not an integer");
  return num / den;
}

/// Casimir value (lambda, lambda + 2 rho) with (alpha, alpha) = 2.
inline Rational casimir(const RootDatum& datum, const DominantCharacter& chi) {
  Rational c = 0;
  for (std::size_t i = 0; i < datum.rank; ++i)
    if (chi.fw_coords[i] != 0) c += chi.fw_coords[i] * (chi.weight[i] + 2 * datum.rho[i]);
  return c;
}

/// Dynkin index dim(V) * (lambda, lambda + 2 rho) / dim g; 0 for the trivial character.
inline Integer dynkin_index(const RootDatum& datum, const DominantCharacter& chi) {
  const Integer dim = weyl_dim(datum, chi);
  if (chi.height == 0) return 0;
  const Rational idx = Rational(dim) * casimir(datum, chi) / datum.dim_g;
  if (!is_integral(idx)) throw Inconsistency("Dynkin index is not an integer");
  return idx.get_num();
}

/// Coordinates c_1 >= ... >= c_n (with c_n = 0) of a type-A dominant weight in the e-basis:
/// c_i = sum_{j >= i} k_j.
inline std::vector<long> ebar_coords(const std::vector<long>& fw) {
  std::vector<long> c(fw.size() + 1, 0);
  for (std::size_t i = fw.size(); i-- > 0;) c[i] = c[i + 1] + fw[i];
  return c;
}

/// (n-2)!/(r_1! ... r_k!) [n sum r_i a_i^2 - (sum r_i a_i)^2] for distinct values a_i of c
/// with multiplicities r_i.
inline Integer n_chi_type_a(long n, const std::vector<long>& c) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  if (static_cast<long>(c.size()) != n) throw InvalidInput("expected exactly n e-coordinates");
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] > c[i - 1]) throw InvalidInput("e-coordinates must be weakly decreasing");
  std::map<long, unsigned long> mult;
  for (long v : c) ++mult[v];
  Integer sum = 0, sum_sq = 0, denom = 1;
  for (const auto& [a, r] : mult) {
    sum += Integer(a) * static_cast<long>(r);
    sum_sq += Integer(a) * a * static_cast<long>(r);
    denom *= factorial(r);
  }
  Rational coeff(factorial(static_cast<unsigned long>(n - 2)), denom);
  coeff.canonicalize();
  const Rational value = coeff * Rational(n * sum_sq - sum * sum);
  if (!is_integral(value)) throw Inconsistency("N(chi) is not an integer");
  return value.get_num();
}

/// Exponent of p in binom(n, p^r), counted as carries when adding p^r and n - p^r in base p.
/// Requires p^r <= n and p^r | n, where it equals s - r for p^s exactly dividing n.
inline unsigned long ord_p_binom(long n, long p, long r) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (r < 0) throw InvalidInput("r must be nonnegative");
  const Integer pr = pow_int(Integer(p), static_cast<unsigned long>(r));
  if (pr > n) throw InvalidInput("p^r must not exceed n");
  if (!divides(pr, Integer(n))) throw InvalidInput("p^r must divide n");
  long a = pr.get_si();
  long b = n - a;
  unsigned long carries = 0;
  long carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const long digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += static_cast<unsigned long>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

struct NgResult {
  Integer value;               // gcd of Dynkin indices over the enumerated characters
  std::optional<Integer> below;  // same gcd over height <= height_max - 1, if nonempty
  bool stabilized = false;     // value == *below
  bool within_bounds = true;   // lower | value and value | upper, when bounds were given
  std::size_t characters = 0;
  long height_max = 0;
};

/// gcd of Dynkin indices over the dominant characters of the lattice up to height_max.
/// This is a multiple of the true n_G; equality is certified by the bounds and closed forms.
inline NgResult n_g_bruteforce(const Lattice& lat, long height_max,
                               const std::optional<DynkinBounds>& bounds = std::nullopt) {
  if (height_max < 2) throw InvalidInput("height_max must be at least 2");
  const auto chars = enumerate_dominant(lat, height_max);
  if (chars.empty()) throw InvalidInput("no dominant characters up to the requested height");
  NgResult res;
  res.height_max = height_max;
  res.characters = chars.size();
  Integer g = 0, g_below = 0;
  for (const auto& chi : chars) {
    const Integer idx = dynkin_index(lat.datum(), chi);
    g = gcd(g, idx);
    if (chi.height < height_max) g_below = gcd(g_below, idx);
  }
  res.value = g;
  if (g_below != 0) res.below = g_below;
  res.stabilized = res.below && *res.below == g;
  if (bounds) res.within_bounds = divides(bounds->lower, g) && divides(g, bounds->upper);
  return res;
}

/// Raises the height one step at a time, at most max_extra times, while the gcd lies
/// outside the bounds.
inline NgResult n_g_within_bounds(const Lattice& lat, long height_max, const std::optional<DynkinBounds>& bounds,
                                  long max_extra = 4) {
  NgResult res = n_g_bruteforce(lat, height_max, bounds);
  for (long extra = 1; extra <= max_extra && !res.within_bounds; ++extra)
    res = n_g_bruteforce(lat, height_max + extra, bounds);
  return res;
}

/// n_G for SL_n/mu_{p^r}: p^r, except 2^{r+1} when p = 2 and p^r exactly divides n.
inline Integer n_closed_form_sl(long n, long p, long r) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (r < 1) throw InvalidInput("r must be positive");
  const Integer pr = pow_int(Integer(p), static_cast<unsigned long>(r));
  if (n < 2 || !divides(pr, Integer(n))) throw InvalidInput("p^r must divide n");
  const unsigned long s = valuation(Integer(n), static_cast<unsigned long>(p));
  if (p == 2 && s == static_cast<unsigned long>(r)) return pr * 2;
  return pr;
}

/// n_G for HSpin_{4n}: 2 for HSpin_8, 4 otherwise.
inline Integer n_closed_form_halfspin(long n) {
  if (n < 2) throw InvalidInput("HSpin_{4n} requires n >= 2");
  return n == 2 ? 2 : 4;
}

}  // namespace cohinv
