/**
 * @file serialize.hpp
 * @brief JSON forms of characters, labels, multisets and comparison reports.
 */
#pragma once

#include "quatmodp/compare.hpp"

#include <json.hpp>

namespace quatmodp {

using json = nlohmann::ordered_json;

inline json to_json(const FieldParams& fp) { return {{"p", fp.p}, {"f", fp.f}, {"q", fp.q}}; }

inline json to_json(const TameChar& c) {
  json j = {{"group", to_string(c.group())}, {"residue_exp", c.residue_exp()}, {"unif_val", c.unif_val().to_string()}};
  if (c.is_modp())
    j["char"] = "modp";
  else
    j["char"] = {{"zero", {{"level", c.level()}}}};
  return j;
}

inline TameChar tame_char_from_json(const json& j, const FieldParams& fp) {
  const CharGroup g = char_group_from_string(j.at("group").get<std::string>());
  const auto e = j.at("residue_exp").get<std::int64_t>();
  const auto w = RootOfUnity::parse(j.at("unif_val").get<std::string>());
  const json& tag = j.at("char");
  if (tag.is_string() && tag.get<std::string>() == "modp") return TameChar::modp(fp, g, e, w);
  return TameChar::zero(fp, g, e, w, tag.at("zero").at("level").get<std::int64_t>());
}

inline json to_json(const ModPIrrep& l) {
  return {{"kind", l.is_one_dim() ? "chr" : "ind"}, {"side", to_string(l.side())}, {"char", to_json(l.character())}};
}

inline ModPIrrep irrep_from_json(const json& j, const FieldParams& fp) {
  const Side side = side_from_string(j.at("side").get<std::string>());
  const TameChar c = tame_char_from_json(j.at("char"), fp);
  return j.at("kind").get<std::string>() == "chr" ? ModPIrrep::one_dim(side, c) : ModPIrrep::two_dim(side, c);
}

inline json to_json(const RepMultiset& m) {
  json entries = json::array();
  for (const auto& [l, k] : m.entries()) entries.push_back({{"label", to_json(l)}, {"mult", k}, {"dim", l.dim()}});
  json j = {{"side", to_string(m.side())}, {"entries", entries}};
  if (!m.nonsplit().empty()) {
    json ns = json::array();
    for (const auto& l : m.nonsplit()) ns.push_back(to_json(l));
    j["nonsplit"] = ns;
  }
  return j;
}

inline RepMultiset multiset_from_json(const json& j, const FieldParams& fp) {
  RepMultiset m(side_from_string(j.at("side").get<std::string>()));
  for (const auto& e : j.at("entries")) m.add(irrep_from_json(e.at("label"), fp), e.at("mult").get<std::int64_t>());
  if (j.contains("nonsplit"))
    for (const auto& l : j.at("nonsplit")) m.mark_nonsplit(irrep_from_json(l, fp));
  return m;
}

/// Compact one-line form used in CSV cells: "ind(a,w)*k + chr(b,w)*k".
inline std::string short_form(const RepMultiset& m) {
  std::string s;
  for (const auto& [l, k] : m.entries()) {
    if (!s.empty()) s += " + ";
    const auto& c = l.character();
    s += std::string(l.is_one_dim() ? "chr(" : "ind(") + std::to_string(c.residue_exp()) + "," +
         c.unif_val().to_string() + ")";
    if (k != 1) s += "*" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

inline std::string short_form(const ModPIrrep& l) {
  RepMultiset m(l.side());
  m.add(l);
  return short_form(m);
}

inline json to_json(const ComparisonReport& r) {
  json j;
  if (r.pair) {
    j["ext"] = to_string(r.pair->ext());
    j["chi"] = to_json(r.pair->chi());
  }
  if (r.ram_choice) j["delta_ram"] = r.ram_choice->to_string();
  j["n"] = r.n;
  j["case"] = to_string(r.case_tag);
  j["r_red"] = to_json(r.r_red);
  j["pi_red"] = to_json(r.pi_red);
  j["image"] = r.image ? to_json(*r.image) : json(nullptr);
  j["image_mult"] = r.image_mult;
  j["occurs"] = r.occurs;
  j["selector"] = {{"mode", to_string(r.selector_mode)},
                   {"label", r.selector.label ? to_json(*r.selector.label) : json(nullptr)},
                   {"unique", r.selector.unique},
                   {"matches", r.selector.matches}};
  json as = json::array();
  for (const auto& a : r.assertions) as.push_back({{"name", a.name}, {"ok", a.ok}, {"detail", a.detail}});
  j["assertions"] = as;
  j["all_ok"] = r.all_ok();
  return j;
}

/// Parses the "exp:a/n" character syntax.
inline std::pair<std::int64_t, RootOfUnity> parse_char_spec(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("character must be written exp:a/n, got '" + s + "'");
  std::size_t used = 0;
  std::int64_t e = 0;
  try {
    e = std::stoll(s.substr(0, colon), &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != colon) throw std::invalid_argument("bad exponent in character '" + s + "'");
  return {e, RootOfUnity::parse(s.substr(colon + 1))};
}

}  // namespace quatmodp
