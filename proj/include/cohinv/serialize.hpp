#pragma once

// JSON and markdown renderings of reports, theorem tables and restriction maps.
// Field order is fixed; integers outside the int64 range are written as decimal strings.

#include <cohinv/restrict.hpp>

#include <json.hpp>

#include <sstream>
#include <string>

namespace cohinv {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t()) != 0) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json to_json(const Rational& x) {
  if (is_integral(x)) return to_json(Integer(x.get_num()));
  return Json(to_string(x));
}

inline std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::SlModMu:
      return "sl";
    case GroupKind::HalfSpin:
      return "hspin";
    case GroupKind::SimplyConnected:
      return "simply_connected";
    case GroupKind::Adjoint:
      return "adjoint";
  }
  return {};
}

inline Json to_json(const InvariantReport& rep, bool with_trace) {
  Json params;
  params["kind"] = kind_name(rep.spec.kind);
  params["root_system"] = rep.spec.datum().name();
  if (rep.spec.kind == GroupKind::SlModMu) {
    params["n"] = rep.spec.n;
    params["m"] = rep.spec.m;
  } else if (rep.spec.kind == GroupKind::HalfSpin) {
    params["n"] = rep.spec.n;
  }
  params["center_char_order"] = to_json(rep.spec.center_char_order());
  params["height"] = rep.height_max;
  params["height_used"] = rep.ng.height_max;
  params["characters"] = rep.ng.characters;
  params["n_g_stabilized"] = rep.ng.stabilized;
  params["n_g_certified"] = rep.n_g_certified;

  Json j;
  j["group"] = rep.spec.name();
  j["params"] = params;
  j["ell"] = to_json(rep.ell);
  j["n_g"] = to_json(rep.n_g());
  j["q_group"] = rep.q_group;
  j["dec_group"] = rep.dec_group;
  j["inv_dec"] = rep.inv_dec;
  j["inv_ind_order"] = to_json(rep.inv_ind_order);
  j["inv_ind_presentation"] = rep.inv_ind_presentation;
  Json checks = Json::array();
  for (const auto& c : rep.crosschecks) {
    Json cj;
    cj["name"] = c.name;
    cj["closed_form"] = to_json(c.closed_form);
    cj["oracle"] = to_json(c.oracle);
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["crosschecks"] = checks;
  if (rep.split_note) j["split_note"] = *rep.split_note;
  if (with_trace) j["trace"] = rep.trace;
  return j;
}

inline Json to_json(const TheoremRow& row) {
  Json j;
  j["group"] = row.group;
  j["n"] = row.n;
  j["case"] = row.theorem.label;
  j["theorem"] = row.theorem.presentation;
  j["theorem_order"] = to_json(row.theorem.order);
  j["engine"] = row.engine_presentation;
  j["engine_order"] = to_json(row.engine_order);
  j["ell"] = to_json(row.ell);
  j["n_g"] = to_json(row.n_g);
  j["crosschecks_pass"] = row.crosschecks_pass;
  j["pass"] = row.pass;
  return j;
}

inline Json to_json(const QuotientMap& map) {
  Json j;
  j["source"] = map.source_group;
  j["target"] = map.target_group;
  j["rost_multiplier"] = to_json(map.multiplier);
  j["source_ell"] = to_json(map.source_ell);
  j["source_n_g"] = to_json(map.source_n_g);
  j["source_order"] = to_json(map.source_order);
  j["target_ell"] = to_json(map.target_ell);
  j["target_n_g"] = to_json(map.target_n_g);
  j["target_order"] = to_json(map.target_order);
  j["image_of_generator"] = to_json(map.image_of_generator);
  j["generator_to_generator"] = map.generator_to_generator();
  return j;
}

namespace md {

inline std::string cyclic(const Integer& order) { return order == 1 ? "0" : "Z/" + to_string(order) + "Z"; }

inline std::string checks_cell(const InvariantReport& rep) {
  std::size_t passed = 0;
  for (const auto& c : rep.crosschecks) passed += c.pass ? 1 : 0;
  return std::to_string(passed) + "/" + std::to_string(rep.crosschecks.size());
}

inline std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

inline const char* kHeader =
    "| group | ℓ | n_G | Inv³_dec | Inv³_ind | presentation | checks |\n"
    "|---|---|---|---|---|---|---|\n";

inline std::string row(const InvariantReport& rep) {
  std::ostringstream os;
  os << "| " << rep.spec.name() << " | " << rep.ell << " | " << rep.n_g() << " | " << rep.inv_dec << " | "
     << cyclic(rep.inv_ind_order) << " | " << rep.inv_ind_presentation << " | " << checks_cell(rep) << " |\n";
  return os.str();
}

}  // namespace md

inline std::string to_markdown(const InvariantReport& rep, bool with_trace) {
  std::ostringstream os;
  os << "## " << rep.spec.name() << " (" << rep.spec.datum().name() << ")\n\n" << md::kHeader << md::row(rep) << '\n';
  os << "Q(G) = " << rep.q_group << ", Dec(G) = " << rep.dec_group << ", n_G from " << rep.ng.characters
     << " dominant characters of height <= " << rep.ng.height_max
     << (rep.n_g_certified ? " (certified by closed form)" : " (not certified by a closed form)") << "\n\n";
  os << "| crosscheck | closed form | oracle | pass |\n|---|---|---|---|\n";
  for (const auto& c : rep.crosschecks)
    os << "| " << md::cell(c.name) << " | " << to_string(c.closed_form) << " | " << to_string(c.oracle) << " | "
       << (c.pass ? "yes" : "NO") << " |\n";
  if (rep.split_note) os << "\nInv³_norm = " << *rep.split_note << '\n';
  if (with_trace) {
    os << "\nDerivation:\n";
    for (const auto& t : rep.trace) os << "- " << t << '\n';
  }
  return os.str();
}

inline std::string to_markdown(const std::vector<TheoremRow>& rows) {
  std::ostringstream os;
  os << "| group | s-case | theorem | engine | ℓ | n_G | pass |\n|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.group << " | " << r.theorem.label << " | " << r.theorem.presentation << " | "
       << r.engine_presentation << " | " << r.ell << " | " << r.n_g << " | " << (r.pass ? "yes" : "NO") << " |\n";
  return os.str();
}

inline std::string to_markdown(const QuotientMap& map) {
  std::ostringstream os;
  os << "## Restriction " << map.source_group << " -> " << map.target_group << "\n\n";
  os << "| | group | ℓ | n_G | Q/Dec |\n|---|---|---|---|---|\n";
  os << "| source | " << map.source_group << " | " << map.source_ell << " | " << map.source_n_g << " | "
     << md::cyclic(map.source_order) << " |\n";
  os << "| target | " << map.target_group << " | " << map.target_ell << " | " << map.target_n_g << " | "
     << md::cyclic(map.target_order) << " |\n\n";
  os << "Rost multiplier: " << map.multiplier << "\n";
  os << "Generator maps to " << map.image_of_generator << " in " << md::cyclic(map.target_order);
  if (map.generator_to_generator())
    os << " (generator to generator)";
  else if (map.is_zero())
    os << " (zero map)";
  os << '\n';
  return os.str();
}

}  // namespace cohinv
