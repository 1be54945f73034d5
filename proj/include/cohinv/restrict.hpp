#pragma once

// Restriction along the vertex-deletion embedding A_{2n-1} -> D_{2n}
// (SL_{2n}/mu_2 inside HSpin_{4n}) and the induced map on Q/Dec.

#include <cohinv/invariants.hpp>

namespace cohinv {

struct LatticeEmbedding {
  DatumPtr source;
  DatumPtr target;
  /// Images of the source simple coroots, in target simple-root coordinates.
  std::vector<RationalVector> image_of_simple;
  Lattice source_lattice;
  Lattice target_lattice;
  /// Target node receiving the last source node.
  std::size_t end_node = 0;

  [[nodiscard]] RationalVector image(const RationalVector& x) const {
    if (x.size() != source->rank) throw InvalidInput("vector dimension does not match the source rank");
    RationalVector out(target->rank, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) out = out + x[i] * image_of_simple[i];
    return out;
  }

  /// Pairings of the images of the simple coroots.
  [[nodiscard]] Matrix<Rational> image_pairings() const {
    const std::size_t r = source->rank;
    Matrix<Rational> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = bilinear(target->cartan, image_of_simple[i], image_of_simple[j]);
    return m;
  }
};

/// A_{2n-1} -> D_{2n}: chain nodes map to chain nodes and the last source node maps to the fork
/// node that carries tau of SL_{2n}/mu_2 into the half-spin lattice.
inline LatticeEmbedding embed_a_in_d(long n) {
  if (n < 2) throw InvalidInput("the embedding requires n >= 2");
  Lattice source_lat = lattice_sl_mod_mu(2 * n, 2);
  Lattice target_lat = lattice_half_spin(n);
  const DatumPtr& src = source_lat.datum_ptr();
  const DatumPtr& tgt = target_lat.datum_ptr();
  const std::size_t rank = src->rank;  // 2n - 1

  for (std::size_t fork : {tgt->rank - 2, tgt->rank - 1}) {
    std::vector<RationalVector> images;
    for (std::size_t i = 0; i + 1 < rank; ++i) images.push_back(tgt->simple(i));
    images.push_back(tgt->simple(fork));
    LatticeEmbedding emb{src, tgt, std::move(images), source_lat, target_lat, fork};

    const Matrix<Rational> pairings = emb.image_pairings();
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        if (pairings(i, j) != src->cartan(i, j)) throw Inconsistency("vertex deletion does not reproduce A_{2n-1}");

    if (contains(target_lat, emb.image(*source_lat.tau()))) return emb;
  }
  throw Inconsistency("no fork node carries tau into the half-spin lattice");
}

/// The embedding of a lattice's root datum into itself.
inline LatticeEmbedding identity_embedding(const Lattice& lat) {
  std::vector<RationalVector> images;
  for (std::size_t i = 0; i < lat.rank(); ++i) images.push_back(lat.datum().simple(i));
  return {lat.datum_ptr(), lat.datum_ptr(), std::move(images), lat, lat, lat.rank() - 1};
}

/// c with q_target(image(x)) = c q_source(x), checked on every pair of simple coroots.
inline Integer rost_multiplier(const LatticeEmbedding& emb) {
  const InvariantForm source_form(emb.source);
  const InvariantForm target_form(emb.target);
  const RationalVector a0 = emb.source->simple(0);
  const Rational c = target_form(emb.image(a0)) / source_form(a0);
  for (std::size_t i = 0; i < emb.source->rank; ++i)
    for (std::size_t j = i; j < emb.source->rank; ++j) {
      const RationalVector ai = emb.source->simple(i);
      const RationalVector aj = emb.source->simple(j);
      if (target_form.bilinear(emb.image(ai), emb.image(aj)) != c * source_form.bilinear(ai, aj))
        throw Inconsistency("restricted form is not a constant multiple of the source form");
    }
  if (!is_integral(c) || c <= 0) throw Inconsistency("Rost multiplier must be a positive integer");
  return c.get_num();
}

/// Restriction Q(G)/Dec(G) -> Q(H)/Dec(H) along H -> G, with the generator l_G q of the
/// source quotient sent to (c l_G / l_H) in Z/(n_H/l_H).
struct QuotientMap {
  std::string source_group;
  std::string target_group;
  Integer multiplier;
  Integer source_ell, source_n_g, source_order;
  Integer target_ell, target_n_g, target_order;
  Integer image_of_generator;

  [[nodiscard]] bool is_zero() const { return image_of_generator == 0; }

  /// Source generator maps to a generator of a nontrivial target.
  [[nodiscard]] bool generator_to_generator() const {
    return target_order > 1 && gcd(image_of_generator, target_order) == 1;
  }
};

inline QuotientMap induced_quotient_map(const InvariantReport& source, const InvariantReport& target,
                                        const LatticeEmbedding& emb) {
  if (source.spec.kind != GroupKind::HalfSpin || target.spec.kind != GroupKind::SlModMu ||
      target.spec.m != 2 || target.spec.n != 2 * source.spec.n)
    throw InvalidInput("expected HSpin_{4n} restricted to SL_{2n}/mu_2");
  if (!(source.spec.datum() == *emb.target) || !(target.spec.datum() == *emb.source))
    throw InvalidInput("reports do not match the embedding");

  QuotientMap map;
  map.source_group = source.spec.name();
  map.target_group = target.spec.name();
  map.multiplier = rost_multiplier(emb);
  map.source_ell = source.ell;
  map.source_n_g = source.n_g();
  map.source_order = source.inv_ind_order;
  map.target_ell = target.ell;
  map.target_n_g = target.n_g();
  map.target_order = target.inv_ind_order;

  const Integer image = map.multiplier * map.source_ell;
  if (!divides(map.target_ell, image)) throw Inconsistency("restricted generator is not in Q of the subgroup");
  if (!divides(map.target_n_g, map.multiplier * map.source_n_g))
    throw Inconsistency("restriction does not carry Dec into Dec");
  if (map.target_order == 0) throw Inconsistency("target quotient is undefined");
  map.image_of_generator = (image / map.target_ell) % map.target_order;
  return map;
}

inline QuotientMap induced_quotient_map(long n, long height_max = kDefaultHeight) {
  const LatticeEmbedding emb = embed_a_in_d(n);
  return induced_quotient_map(report(half_spin(n), height_max), report(sl_mod_mu(2 * n, 2), height_max), emb);
}

}  // namespace cohinv
