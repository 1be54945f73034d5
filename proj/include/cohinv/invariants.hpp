#pragma once

// Q(G), Dec(G) and the decomposable / indecomposable degree-3 invariants, assembled into
// reports and cross-checked against the closed forms.

#include <cohinv/repth.hpp>

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace cohinv {

inline constexpr long kDefaultHeight = 4;

struct Crosscheck {
  std::string name;
  Rational closed_form;
  Rational oracle;
  bool pass;
};

struct InvariantReport {
  GroupSpec spec;
  long height_max;
  Integer ell;
  NgResult ng;
  std::string q_group;
  std::string dec_group;
  std::string inv_dec;
  Integer inv_ind_order;
  std::string inv_ind_presentation;
  std::vector<Crosscheck> crosschecks;
  std::optional<std::string> split_note;
  /// Whether a closed form for n_G exists and agrees with the enumeration.
  bool n_g_certified = false;
  std::vector<std::string> trace;

  [[nodiscard]] const Integer& n_g() const { return ng.value; }

  [[nodiscard]] bool all_pass() const {
    return std::all_of(crosschecks.begin(), crosschecks.end(), [](const Crosscheck& c) { return c.pass; });
  }
};

namespace present {

inline std::string multiple_of_q(const Integer& k, const std::string& suffix) {
  return (k == 1 ? std::string() : to_string(k)) + "q" + suffix;
}

/// "(lZ/nZ)q", "(Z/nZ)q" when l = 1, "0" for the trivial group.
inline std::string quotient(const Integer& ell, const Integer& n_g) {
  if (ell == n_g) return "0";
  return "(" + (ell == 1 ? std::string() : to_string(ell)) + "Z/" + to_string(n_g) + "Z)q";
}

/// F^x / F^{x e} for each cyclic factor e of the center's character group.
inline std::string field_quotients(const std::vector<Integer>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (const auto& e : factors) {
    if (!out.empty()) out += " ⊕ ";
    out += "F^×/F^{×" + to_string(e) + "}";
  }
  return out;
}

inline std::string split_sum(const std::string& inv_dec, const Integer& order) {
  return inv_dec + " ⊕ Z/" + to_string(order) + "Z";
}

}  // namespace present

/// The case of the SL_n/mu_{p^r} classification that applies to (n, p, r).
struct TheoremCase {
  std::string label;
  std::string presentation;
  Integer order;
};

inline TheoremCase theorem_case_sl(long n, long p, long r) {
  if (!is_prime(p) || r < 1) throw InvalidInput("need a prime p and r >= 1");
  const Integer pr = pow_int(Integer(p), static_cast<unsigned long>(r));
  if (!divides(pr, Integer(n))) throw InvalidInput("p^r must divide n");
  const long s = static_cast<long>(valuation(Integer(n), static_cast<unsigned long>(p)));
  // For p = 2 the thresholds shift by one.
  const long shift = p == 2 ? 1 : 0;
  if (s >= 2 * r + shift) return {p == 2 ? "s >= 2r+1" : "s >= 2r", present::quotient(1, pr), pr};
  if (s > r + shift) {
    const Integer low = pow_int(Integer(p), static_cast<unsigned long>(2 * r + shift - s));
    return {p == 2 ? "r+1 < s < 2r+1" : "r < s < 2r", present::quotient(low, pr), pr / low};
  }
  return {p == 2 ? "s = r or s = r+1" : "s = r", "0", 1};
}

inline TheoremCase theorem_case_halfspin(long n) {
  if (n < 2) throw InvalidInput("HSpin_{4n} requires n >= 2");
  if (n % 2 == 1 || n == 2) return {"n odd or n = 2", "0", 1};
  if (n % 4 == 2) return {"n = 2 mod 4, n != 2", present::quotient(2, 4), 2};
  return {"n = 0 mod 4", present::quotient(1, 4), 4};
}

namespace detail {

inline Crosscheck equal_check(std::string name, const Rational& closed, const Rational& oracle) {
  return {std::move(name), closed, oracle, closed == oracle};
}

/// Divisibility d | x recorded as the equality 0 = x mod d.
inline Crosscheck divides_check(std::string name, const Integer& d, const Integer& x) {
  const Integer rem = x % d;
  return {std::move(name), Rational(0), Rational(rem), rem == 0};
}

inline std::optional<DynkinBounds> bounds_for(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::SlModMu:
      return bounds_sl(spec.n, spec.m);
    case GroupKind::HalfSpin:
      return bounds_halfspin();
    default:
      return std::nullopt;
  }
}

inline bool has_split_note(const GroupSpec& spec) {
  if (spec.kind == GroupKind::SlModMu)
    return (spec.m == 2 && spec.n % 8 == 0) || (spec.n == 9 && spec.m == 3);
  return spec.kind == GroupKind::HalfSpin && spec.n == 4;
}

}  // namespace detail

/// Full invariant report for a group: l from the cocharacter lattice, n_G by enumeration over
/// the character lattice up to height_max, and every applicable closed form as a crosscheck.
/// A failed crosscheck is recorded, not thrown.
inline InvariantReport report(const GroupSpec& spec, long height_max = kDefaultHeight) {
  const InvariantForm form(spec.cocharacters.datum_ptr());
  const auto bounds = detail::bounds_for(spec);

  InvariantReport rep{spec, height_max, ell_of_lattice(form, spec.cocharacters),
                      n_g_within_bounds(spec.characters, height_max, bounds), {}, {}, {}, {}, {}, {}, {}, false, {}};
  const Integer& ell = rep.ell;
  const Integer& ng = rep.ng.value;
  auto& checks = rep.crosschecks;
  auto& trace = rep.trace;

  trace.push_back("l = " + to_string(ell) + ": lcm of denominators of q and b on the cocharacter basis");
  trace.push_back("n_G <= gcd of Dynkin indices over " + std::to_string(rep.ng.characters) +
                  " dominant characters of height <= " + std::to_string(rep.ng.height_max) + " = " + to_string(ng) +
                  (rep.ng.stabilized ? " (unchanged from height " + std::to_string(rep.ng.height_max - 1) + ")" : ""));

  std::optional<Integer> closed_ng;
  std::optional<TheoremCase> theorem;

  switch (spec.kind) {
    case GroupKind::SlModMu: {
      const long n = spec.n, m = spec.m;
      const Rational qtau = form(*spec.cocharacters.tau());
      Rational expected(Integer(n) * (n - 1), Integer(2) * m * m);
      expected.canonicalize();
      checks.push_back(detail::equal_check("q(tau) = n(n-1)/(2m^2)", expected, qtau));
      trace.push_back("q(tau) = n(n-1)/(2m^2) = " + to_string(qtau));
      const Integer ell_cf = ell_closed_form_sl(n, m);
      checks.push_back(detail::equal_check("l closed form", ell_cf, ell));
      trace.push_back(std::string("l closed form ") + (n % 2 == 0 ? "2m^2/gcd(2m^2,n)" : "m^2/gcd(m^2,n)") +
                      " = " + to_string(ell_cf));
      checks.push_back(detail::divides_check("m | n_G", m, ng));
      checks.push_back(detail::divides_check("n_G | gcd(m^2, 2n)", ng, bounds->upper));
      if (m == 1) {
        closed_ng = 1;
        trace.push_back("n_G = 1 for SL_n (tautological representation has index 1)");
      } else if (auto pp = prime_power(m)) {
        const auto [p, r] = *pp;
        closed_ng = n_closed_form_sl(n, p, static_cast<long>(r));
        theorem = theorem_case_sl(n, p, static_cast<long>(r));
        trace.push_back("n_G closed form for m = " + std::to_string(p) + "^" + std::to_string(r) + ", s = " +
                        std::to_string(valuation(Integer(n), static_cast<unsigned long>(p))) + ": " +
                        to_string(*closed_ng));
      } else {
        trace.push_back("m is not a prime power: no closed form for n_G, enumeration value not certified");
      }
      break;
    }
    case GroupKind::HalfSpin: {
      const long n = spec.n;
      const Rational qtau = form(*spec.cocharacters.tau());
      Rational expected(n, 4);
      expected.canonicalize();
      checks.push_back(detail::equal_check("q(tau) = n/4", expected, qtau));
      trace.push_back("q(tau) = n/4 = " + to_string(qtau));
      const Integer ell_cf = ell_closed_form_halfspin(n);
      checks.push_back(detail::equal_check("l closed form", ell_cf, ell));
      trace.push_back("l closed form by n mod 4 = " + to_string(ell_cf));
      checks.push_back(detail::divides_check("2 | n_G", 2, ng));
      checks.push_back(detail::divides_check("n_G | 4", ng, 4));
      closed_ng = n_closed_form_halfspin(n);
      theorem = theorem_case_halfspin(n);
      trace.push_back("n_G closed form: 2 for HSpin_8, otherwise 4 = " + to_string(*closed_ng));
      break;
    }
    case GroupKind::SimplyConnected: {
      checks.push_back(detail::equal_check("l of simply connected group", 1, ell));
      if (spec.datum().family == Family::A) closed_ng = 1;
      break;
    }
    case GroupKind::Adjoint: {
      const RootDatum& d = spec.datum();
      if (d.family == Family::A) {
        const long n = static_cast<long>(d.rank) + 1;
        checks.push_back(detail::equal_check("l closed form", ell_closed_form_sl(n, n), ell));
        if (auto pp = prime_power(n)) closed_ng = n_closed_form_sl(n, pp->first, static_cast<long>(pp->second));
      }
      break;
    }
  }

  checks.push_back(detail::divides_check("l | n_G", ell, ng));
  if (closed_ng) {
    checks.push_back(detail::equal_check("n_G closed form", *closed_ng, ng));
    rep.n_g_certified = *closed_ng == ng;
  }
  if (bounds) checks.push_back({"n_G within bounds", 1, rep.ng.within_bounds ? 1 : 0, rep.ng.within_bounds});

  rep.q_group = present::multiple_of_q(ell, "·Z");
  rep.dec_group = present::multiple_of_q(ng, "·Z");
  rep.inv_dec = present::field_quotients(spec.center_factors);
  if (divides(ell, ng)) {
    rep.inv_ind_order = ng / ell;
    rep.inv_ind_presentation = present::quotient(ell, ng);
  } else {
    rep.inv_ind_order = 0;
    rep.inv_ind_presentation = "undefined (l does not divide n_G)";
  }
  trace.push_back("Inv_ind = Q(G)/Dec(G) = " + rep.inv_ind_presentation);
  if (theorem) {
    checks.push_back(detail::equal_check("Inv_ind order (" + theorem->label + ")", theorem->order, rep.inv_ind_order));
    trace.push_back("classification case " + theorem->label + ": " + theorem->presentation);
  }
  if (detail::has_split_note(spec)) rep.split_note = present::split_sum(rep.inv_dec, rep.inv_ind_order);
  return rep;
}

namespace detail {

/// Maps f over the inputs concurrently; results keep the input order.
template <class In, class F>
auto parallel_map(const std::vector<In>& inputs, F f) {
  using Out = decltype(f(inputs.front()));
  std::vector<std::future<Out>> futures;
  futures.reserve(inputs.size());
  for (const auto& x : inputs) futures.push_back(std::async(std::launch::async, f, x));
  std::vector<Out> out;
  out.reserve(inputs.size());
  for (auto& fut : futures) out.push_back(fut.get());
  return out;
}

}  // namespace detail

struct TheoremRow {
  std::string group;
  long n;
  TheoremCase theorem;
  std::string engine_presentation;
  Integer engine_order;
  Integer ell;
  Integer n_g;
  bool crosschecks_pass;
  bool pass;
};

/// Every n in [2, max_n] divisible by p^r.
inline std::vector<long> valid_n_values(long p, long r, long max_n) {
  const Integer pr = pow_int(Integer(p), static_cast<unsigned long>(r));
  std::vector<long> ns;
  for (long n = 2; n <= max_n; ++n)
    if (divides(pr, Integer(n))) ns.push_back(n);
  return ns;
}

/// Rows of the SL_n/mu_{p^r} classification next to the engine's Q(G)/Dec(G).
inline std::vector<TheoremRow> theorem_table_sl(long p, long r, const std::vector<long>& ns,
                                                long height_max = kDefaultHeight) {
  if (!is_prime(p) || r < 1) throw InvalidInput("need a prime p and r >= 1");
  const Integer pr = pow_int(Integer(p), static_cast<unsigned long>(r));
  for (long n : ns)
    if (n < 2 || !divides(pr, Integer(n))) throw InvalidInput("every n must be divisible by p^r");
  return detail::parallel_map(ns, [=](long n) {
    const InvariantReport rep = report(sl_mod_mu(n, pr.get_si()), height_max);
    TheoremCase tc = theorem_case_sl(n, p, r);
    const bool pass = tc.presentation == rep.inv_ind_presentation && tc.order == rep.inv_ind_order;
    return TheoremRow{rep.spec.name(), n, std::move(tc), rep.inv_ind_presentation, rep.inv_ind_order,
                      rep.ell, rep.n_g(), rep.all_pass(), pass};
  });
}

inline std::vector<TheoremRow> theorem_table_halfspin(const std::vector<long>& ns, long height_max = kDefaultHeight) {
  for (long n : ns)
    if (n < 2) throw InvalidInput("HSpin_{4n} requires n >= 2");
  return detail::parallel_map(ns, [=](long n) {
    const InvariantReport rep = report(half_spin(n), height_max);
    TheoremCase tc = theorem_case_halfspin(n);
    const bool pass = tc.presentation == rep.inv_ind_presentation && tc.order == rep.inv_ind_order;
    return TheoremRow{rep.spec.name(), n, std::move(tc), rep.inv_ind_presentation, rep.inv_ind_order,
                      rep.ell, rep.n_g(), rep.all_pass(), pass};
  });
}

struct SplitCase {
  std::string group;
  std::string full_group;
};

/// The groups whose normalized invariants are known to split as Inv_dec + Inv_ind, each
/// assembled from its computed report.
inline std::vector<SplitCase> split_cases(long height_max = kDefaultHeight) {
  std::vector<SplitCase> out;
  for (const GroupSpec& spec : {sl_mod_mu(8, 2), sl_mod_mu(9, 3), half_spin(4)}) {
    const InvariantReport rep = report(spec, height_max);
    out.push_back({spec.name(), present::split_sum(rep.inv_dec, rep.inv_ind_order)});
  }
  return out;
}

}  // namespace cohinv
