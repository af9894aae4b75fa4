/**
 * @file compare.hpp
 * @brief Compares reductions of R_chi and of its Jacquet-Langlands image under the mod p correspondence.
 */
#pragma once

#include "quatmodp/reduction.hpp"

#include <algorithm>
#include <functional>

namespace quatmodp {

enum class CaseTag { Level0, A2, B2, C3, D3, E3, F3, Wild };

inline const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Level0: return "level0";
    case CaseTag::A2: return "2a";
    case CaseTag::B2: return "2b";
    case CaseTag::C3: return "3c";
    case CaseTag::D3: return "3d";
    case CaseTag::E3: return "3e";
    case CaseTag::F3: return "3f";
    case CaseTag::Wild: return "wild";
  }
  return "?";
}

enum class SelectorMode { UnramPair, RamPair, Wild };

inline const char* to_string(SelectorMode m) {
  switch (m) {
    case SelectorMode::UnramPair: return "unram";
    case SelectorMode::RamPair: return "ram";
    case SelectorMode::Wild: return "wild";
  }
  return "?";
}

struct Selection {
  std::optional<ModPIrrep> label;
  bool unique = false;
  std::size_t matches = 0;
};

/// Picks the two-dimensional factor singled out by its multiplicity (UnramPair) or by
/// nu(zeta_E)^{q-1} being -1 (RamPair) or a primitive cube root of unity (Wild).
/// unram_step is -1 for n = 2 mod 4 and +1 for n = 0 mod 4.
inline Selection select_image_factor(const RepMultiset& pi_red, SelectorMode mode, std::int64_t unram_step = -1) {
  std::vector<ModPIrrep> twos;
  for (const auto& [l, m] : pi_red.entries())
    if (!l.is_one_dim()) twos.push_back(l);
  std::vector<ModPIrrep> hits;
  for (const auto& l : twos) {
    const auto& fp = l.params();
    const std::int64_t Q = fp.units_E();
    const std::int64_t t = floor_mod((fp.q - 1) * l.character().residue_exp(), Q);
    bool hit = false;
    switch (mode) {
      case SelectorMode::UnramPair:
        // one less than every other two-dim factor for n = 2 mod 4, one more for n = 0 mod 4
        hit = std::all_of(twos.begin(), twos.end(), [&](const ModPIrrep& o) {
          return o == l || pi_red.mult(l) - pi_red.mult(o) == unram_step;
        });
        break;
      case SelectorMode::RamPair:
        hit = Q % 2 == 0 && t == Q / 2;
        break;
      case SelectorMode::Wild:
        hit = Q % 3 == 0 && t != 0 && 3 * t % Q == 0;
        break;
    }
    if (hit) hits.push_back(l);
  }
  Selection s;
  s.matches = hits.size();
  s.unique = hits.size() == 1;
  if (!hits.empty()) s.label = hits.front();
  return s;
}

/// True when every two-dimensional factor has the same multiplicity.
inline bool two_dim_multiplicities_uniform(const RepMultiset& m) {
  std::set<std::int64_t> mults;
  for (const auto& [l, k] : m.entries())
    if (!l.is_one_dim()) mults.insert(k);
  return mults.size() <= 1;
}

struct Assertion {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ComparisonReport {
  std::optional<AdmissiblePair> pair;
  std::optional<RootOfUnity> ram_choice;
  std::int64_t n = 0;
  CaseTag case_tag = CaseTag::Level0;
  RepMultiset r_red{Side::W};
  RepMultiset pi_red{Side::D};
  std::optional<ModPIrrep> image;
  std::int64_t image_mult = 0;
  bool occurs = false;
  SelectorMode selector_mode = SelectorMode::UnramPair;
  Selection selector;
  std::vector<Assertion> assertions;

  bool all_ok() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.ok; });
  }
  std::vector<Assertion> failures() const {
    std::vector<Assertion> out;
    for (const auto& a : assertions)
      if (!a.ok) out.push_back(a);
    return out;
  }
};

namespace detail {

inline std::set<ModPIrrep> label_set(const RepMultiset& m) {
  std::set<ModPIrrep> s;
  for (const auto& [l, k] : m.entries()) s.insert(l);
  return s;
}

inline std::set<ModPIrrep> label_set(const std::vector<ModPIrrep>& v) { return {v.begin(), v.end()}; }

inline std::set<ModPIrrep> two_dim_labels(const RepMultiset& m) {
  std::set<ModPIrrep> s;
  for (const auto& [l, k] : m.entries())
    if (!l.is_one_dim()) s.insert(l);
  return s;
}

inline std::set<ModPIrrep> one_dim_labels(const RepMultiset& m) {
  std::set<ModPIrrep> s;
  for (const auto& [l, k] : m.entries())
    if (l.is_one_dim()) s.insert(l);
  return s;
}

inline std::string show(const std::set<ModPIrrep>& s) {
  std::string out = "{";
  for (const auto& l : s) out += l.to_string() + " ";
  return out + "}";
}

struct Battery {
  std::vector<Assertion>& out;
  void check(std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  }
  void same(std::string name, const std::set<ModPIrrep>& got, const std::set<ModPIrrep>& want) {
    check(std::move(name), got == want, got == want ? std::string{} : "got " + show(got) + " want " + show(want));
  }
};

inline RootOfUnity minus_one() { return root(1, 2); }

}  // namespace detail

inline ComparisonReport check_level_zero(const AdmissiblePair& pair) {
  if (pair.level() != 0) throw std::invalid_argument("check_level_zero needs a level-zero pair");
  ComparisonReport r{pair};
  r.n = 0;
  r.case_tag = CaseTag::Level0;
  r.r_red = reduce_r(pair);
  r.pi_red = reduce_pi(jl_image(pair));
  detail::Battery b{r.assertions};
  b.check("r_red irreducible", r.r_red.size() == 1 && r.r_red.total_dimension() == 2);
  if (r.r_red.size() == 1 && r.r_red.total_dimension() == 2) {
    r.image = modp_correspondence(r.r_red.labels().front());
    r.image_mult = r.pi_red.mult(*r.image);
    r.occurs = r.image_mult > 0;
  }
  b.check("pi_red is the single image label", r.image && r.pi_red.size() == 1 && r.image_mult == 1,
          r.image ? r.image->to_string() : "no image");
  r.selector = select_image_factor(r.pi_red, r.selector_mode);
  return r;
}

/// Reduction comparison for a positive-level pair; ram_choice fixes the twist at varpi_E for ramified E.
inline ComparisonReport compare_higher(const AdmissiblePair& pair,
                                       const std::optional<RootOfUnity>& ram_choice = std::nullopt) {
  if (pair.level() == 0) return check_level_zero(pair);
  using detail::minus_one;
  const auto& fp = pair.params();
  const std::int64_t q = fp.q, Q = fp.units_E(), n = pair.n();
  const TameChar chi = reduce_char(pair.chi());
  const AdmissiblePair jl = jl_image(pair, ram_choice);
  const TameChar dchi = reduce_char(jl.chi());

  ComparisonReport r{pair, ram_choice, n};
  r.r_red = reduce_r(pair);
  r.pi_red = reduce_pi(jl);
  detail::Battery b{r.assertions};
  const bool reg = is_regular(chi);
  const bool r_irred = r.r_red.size() == 1 && r.r_red.total_dimension() == 2;
  if (r_irred) {
    r.image = modp_correspondence(r.r_red.labels().front());
    r.image_mult = r.pi_red.mult(*r.image);
    r.occurs = r.image_mult > 0;
  }
  const TameChar central = restrict_to_F(dchi);
  const auto all_irreps = detail::label_set(irreps_with_central_char(Side::D, central));
  const auto got = detail::label_set(r.pi_red);
  const auto twos = detail::two_dim_labels(r.pi_red);
  const auto ones = detail::one_dim_labels(r.pi_red);

  b.check("dimension", r.pi_red.total_dimension() == dim_pi(jl));
  b.check("central character", std::all_of(got.begin(), got.end(), [&](const ModPIrrep& l) {
            return l.central_character() == central;
          }));
  b.check("r_red irreducible iff chi regular", r_irred == reg);

  if (n % 2 == 0) {
    r.selector_mode = SelectorMode::UnramPair;
    b.check("regularity preserved by the twist", is_regular(dchi) == reg);
    const TameChar kappa_bar = reduce_char(quadratic_character(fp, ExtKind::Unramified));
    const RootOfUnity chi_z = chi.value_at_residue_generator();
    const RootOfUnity chi_w = chi.unif_val();
    if (reg) {
      r.case_tag = CaseTag::A2;
      b.same("r_red = rho_chi", detail::label_set(r.r_red), {ModPIrrep::two_dim(Side::W, chi)});
      b.check("image occurs", r.occurs, "multiplicity " + std::to_string(r.image_mult));
      const std::int64_t step = n % 4 == 2 ? 1 : -1;
      bool rel = r.image.has_value();
      for (const auto& l : twos)
        if (r.image && !(l == *r.image)) rel = rel && r.pi_red.mult(l) == r.image_mult + step;
      b.check(n % 4 == 2 ? "image multiplicity one less than other two-dim factors"
                         : "image multiplicity one more than other two-dim factors",
              rel);
      b.same("saturation", got, all_irreps);
      std::size_t want2, want1;
      if (!fp.odd())
        want2 = q / 2, want1 = 1;
      else if (value_at_minus_one(chi) == minus_one())
        want2 = (q + 1) / 2, want1 = 0;
      else
        want2 = (q - 1) / 2, want1 = 4;
      b.check("count of factors", twos.size() == want2 && ones.size() == want1,
              std::to_string(twos.size()) + "+" + std::to_string(ones.size()));
    } else {
      r.case_tag = CaseTag::B2;
      const std::int64_t bz = floor_mod(chi.residue_exp() / (q + 1), q - 1);
      auto phi_with = [&](std::int64_t e, const RootOfUnity& w2) {
        return TameChar::modp(fp, CharGroup::Fmult, e, square_roots_prime_to(w2, fp.p).at(0));
      };
      const TameChar phi1 = phi_with(bz, chi_w);
      if (fp.odd()) {
        b.same("r_red = phi1 + phi1 kappa", detail::label_set(r.r_red),
               {ModPIrrep::one_dim(Side::W, phi1), ModPIrrep::one_dim(Side::W, times(phi1, kappa_bar))});
        const TameChar phi3 = phi_with(bz, chi_w * minus_one());
        const TameChar phi5 = phi_with(bz + (q - 1) / 2, chi_w * minus_one());
        const auto l3 = ModPIrrep::one_dim(Side::D, phi3), l4 = ModPIrrep::one_dim(Side::D, times(phi3, kappa_bar));
        const auto l5 = ModPIrrep::one_dim(Side::D, phi5), l6 = ModPIrrep::one_dim(Side::D, times(phi5, kappa_bar));
        b.same("pi_{delta chi} splits as phi3 + phi4", detail::label_set(pi_from_unramified(dchi)), {l3, l4});
        const TameChar tau = TameChar::modp(fp, CharGroup::Eunram, Q / 2, RootOfUnity{});
        b.same("pi_{delta chi tau} splits as phi5 + phi6",
               detail::label_set(pi_from_unramified(times(dchi, tau))), {l5, l6});
        const std::int64_t step = n % 4 == 2 ? -1 : 1;
        b.check("phi3, phi4 multiplicity vs phi5, phi6",
                r.pi_red.mult(l3) == r.pi_red.mult(l4) && r.pi_red.mult(l5) == r.pi_red.mult(l6) &&
                    r.pi_red.mult(l3) == r.pi_red.mult(l5) + step);
        if (n == 2) {
          b.check("phi3, phi4 absent at n = 2", r.pi_red.mult(l3) == 0 && r.pi_red.mult(l4) == 0);
          auto expect = all_irreps;
          expect.erase(l3);
          expect.erase(l4);
          b.same("saturation away from phi3, phi4", got, expect);
        }
      } else {
        b.same("r_red = phi o a_F twice", detail::label_set(r.r_red), {ModPIrrep::one_dim(Side::W, phi1)});
      }
      b.check("two-dim multiplicities equal", two_dim_multiplicities_uniform(r.pi_red));
      if (n != 2) {
        b.same("saturation", got, all_irreps);
        const std::size_t want2 = fp.odd() ? (q - 1) / 2 : q / 2, want1 = fp.odd() ? 4 : 1;
        b.check("count of factors", twos.size() == want2 && ones.size() == want1,
                std::to_string(twos.size()) + "+" + std::to_string(ones.size()));
      }
    }
    r.selector = select_image_factor(r.pi_red, r.selector_mode, n % 4 == 2 ? -1 : 1);
    if (reg)
      b.check("selector: picks the image uniquely", r.selector.unique && r.image && *r.selector.label == *r.image);
    b.check("selector: uniform two-dim multiplicities iff chi irregular",
            two_dim_multiplicities_uniform(r.pi_red) == !reg);
    return r;
  }

  // n odd, E/F tamely ramified, p odd
  r.selector_mode = SelectorMode::RamPair;
  const bool q1 = q % 4 == 1;
  const bool chi_odd = value_at_minus_one(chi) == minus_one();
  r.case_tag = chi_odd ? (q1 ? CaseTag::C3 : CaseTag::D3) : (q1 ? CaseTag::E3 : CaseTag::F3);
  b.check("chi regular iff chi(-1) = -1", reg == chi_odd);

  const auto ind = induced_from_ramified(dchi);
  const auto I1 = detail::label_set(ind.two_dim);
  const auto I2 = detail::label_set(ind.one_dim);
  const TameChar iota = reduce_char(uniformizer_sign_character(fp));
  std::set<ModPIrrep> I2iota;
  for (const auto& l : I2) I2iota.insert(l.twisted(iota));
  b.same("two-dim factors are I1", twos, I1);
  const std::int64_t legendre = q1 ? 1 : -1;
  b.check("I2 empty iff (-1/q) chi(-1) = -1", I2.empty() == (legendre * (chi_odd ? -1 : 1) == -1));

  const RootOfUnity chi_zF = chi.value_at_residue_generator();  // chi(zeta_F)
  const RootOfUnity chi_wE = chi.unif_val();                    // chi(varpi_E)
  const RootOfUnity chi_wF = chi_wE.pow(2);
  const RootOfUnity delta_w = dchi.unif_val() * chi_wE.inverse();  // Delta(varpi_E) mod p
  const TameChar kappa_bar = reduce_char(quadratic_character(fp, ExtKind::RamifiedTame));

  // nu on E0^x with nu(zeta)^{q+1} = -chi(zeta_F), nu(varpi_F) = w, and nu regular
  auto I1_formula = [&](const RootOfUnity& w) {
    std::set<ModPIrrep> s;
    for (std::int64_t a = 0; a < Q; ++a) {
      const RootOfUnity v = root(a, Q);
      if (!(v.pow(q + 1) == chi_zF * minus_one())) continue;
      if (v.pow(2) == chi_zF * minus_one()) continue;
      s.insert(ModPIrrep::two_dim(Side::D, TameChar::modp(fp, CharGroup::Eunram, a, w)));
    }
    return s;
  };
  // phi on F^x with phi(zeta_F)^2 = z2 and phi(varpi_F) = wf(phi(zeta_F))
  auto chars_formula = [&](Side side, const RootOfUnity& z2, const std::function<RootOfUnity(const RootOfUnity&)>& wf) {
    std::set<ModPIrrep> s;
    for (std::int64_t e = 0; e < q - 1; ++e) {
      const RootOfUnity z = root(e, q - 1);
      if (!(z.pow(2) == z2)) continue;
      s.insert(ModPIrrep::one_dim(side, TameChar::modp(fp, CharGroup::Fmult, e, wf(z))));
    }
    return s;
  };
  // xi on E0^x with xi(zeta)^2 = chi(zeta_F) and xi(varpi_F) = w
  auto rho_formula = [&](const RootOfUnity& w) {
    std::set<ModPIrrep> s;
    for (std::int64_t a = 0; a < Q; ++a)
      if (root(a, Q).pow(2) == chi_zF) s.insert(ModPIrrep::two_dim(Side::W, TameChar::modp(fp, CharGroup::Eunram, a, w)));
    return s;
  };
  auto pair_with_kappa = [&](const std::set<ModPIrrep>& one) {
    std::set<ModPIrrep> s;
    if (one.empty()) return s;
    s.insert(*one.begin());
    s.insert(one.begin()->twisted(kappa_bar));
    return s;
  };
  auto image_in_I1 = [&] {
    b.check("image of rho_xi lies in I1", r.image && I1.count(*r.image) == 1);
  };
  auto saturation = [&](bool drop_iota) {
    if (n == 1 && drop_iota) {
      bool none = std::all_of(I2iota.begin(), I2iota.end(), [&](const ModPIrrep& l) { return r.pi_red.mult(l) == 0; });
      b.check("I2 twisted by iota absent at n = 1", none);
      auto expect = all_irreps;
      for (const auto& l : I2iota) expect.erase(l);
      b.same("saturation away from I2 iota", got, expect);
    } else {
      b.same("saturation", got, all_irreps);
    }
  };

  switch (r.case_tag) {
    case CaseTag::C3:
      b.same("r_red = rho_xi, xi(varpi_F) = -chi(varpi_F)", detail::label_set(r.r_red), rho_formula(chi_wF * minus_one()));
      b.check("I2 empty", I2.empty());
      b.same("I1 formula", I1, I1_formula(chi_wF));
      image_in_I1();
      b.check("equal multiplicities, (q+1)/2 factors",
              two_dim_multiplicities_uniform(r.pi_red) && ones.empty() && twos.size() == static_cast<std::size_t>((q + 1) / 2));
      saturation(false);
      break;
    case CaseTag::D3:
      b.same("r_red = rho_xi, xi(varpi_F) = chi(varpi_F)", detail::label_set(r.r_red), rho_formula(chi_wF));
      b.check("|I2| = 2", I2.size() == 2);
      b.same("I2 formula", I2, chars_formula(Side::D, chi_zF * minus_one(), [&](const RootOfUnity& z) {
               return z.pow((q - 1) / 2) * delta_w * chi_wE;
             }));
      b.check("|I1| = (q-1)/2", I1.size() == static_cast<std::size_t>((q - 1) / 2));
      b.same("I1 formula", I1, I1_formula(chi_wF * minus_one()));
      image_in_I1();
      saturation(true);
      break;
    case CaseTag::E3: {
      auto r_formula = pair_with_kappa(chars_formula(Side::W, chi_zF, [&](const RootOfUnity&) {
        return chi_zF.pow((q - 1) / 4) * chi_wE;
      }));
      b.same("r_red = phi1 + phi1 kappa", detail::label_set(r.r_red), r_formula);
      b.check("|I2| = 2", I2.size() == 2);
      b.same("I2 formula", I2, chars_formula(Side::D, chi_zF * minus_one(), [&](const RootOfUnity&) {
               return (chi_zF * minus_one()).pow((q - 1) / 4) * delta_w * chi_wE;
             }));
      b.check("|I1| = (q-1)/2", I1.size() == static_cast<std::size_t>((q - 1) / 2));
      b.same("I1 formula", I1, I1_formula(chi_wF));
      saturation(true);
      break;
    }
    case CaseTag::F3: {
      auto r_formula = pair_with_kappa(chars_formula(Side::W, chi_zF, [&](const RootOfUnity& z) {
        return z.pow((q - 1) / 2) * chi_wE;
      }));
      b.same("r_red = phi1 + phi1 kappa", detail::label_set(r.r_red), r_formula);
      b.check("I2 empty", I2.empty());
      b.same("I1 formula", I1, I1_formula(chi_wF * minus_one()));
      b.check("equal multiplicities, (q+1)/2 factors",
              two_dim_multiplicities_uniform(r.pi_red) && ones.empty() && twos.size() == static_cast<std::size_t>((q + 1) / 2));
      saturation(false);
      break;
    }
    default:
      break;
  }

  r.selector = select_image_factor(r.pi_red, r.selector_mode);
  if (reg)
    b.check("selector: picks the image uniquely", r.selector.unique && r.image && *r.selector.label == *r.image);
  b.check("selector: absent iff chi irregular", !r.selector.label.has_value() == !reg);
  return r;
}

/// p = 2: reduction of a wild quaternionic representation against a Galois representation with det Phi.
inline ComparisonReport compare_wild(const WildGaloisInput& galois, std::int64_t n) {
  const auto& fp = galois.params;
  ComparisonReport r;
  r.n = n;
  r.case_tag = CaseTag::Wild;
  r.selector_mode = SelectorMode::Wild;
  r.r_red = reduce_r_wild(galois);
  r.pi_red = reduce_pi_wild({fp, n, galois.det_char, std::nullopt});
  detail::Battery b{r.assertions};
  const TameChar phi_bar = reduce_char(galois.det_char);
  b.check("dimension", r.pi_red.total_dimension() == (fp.q + 1) * ipow(fp.q, (n - 1) / 2));
  b.check("central character", std::all_of(r.pi_red.entries().begin(), r.pi_red.entries().end(), [&](const auto& e) {
            return e.first.central_character() == phi_bar;
          }));
  const bool irred = r.r_red.size() == 1 && r.r_red.total_dimension() == 2;
  if (galois.kind != WildKind::Octahedral) {
    const auto labels = r.r_red.labels();
    const TameChar prod = galois.kind == WildKind::Imprimitive
                              ? times(labels.front().character(), labels.front().character())
                              : times(labels.at(0).character(), labels.at(1).character());
    b.check("det compatibility", prod == phi_bar);
  } else {
    b.check("octahedral reduction irreducible and regular", irred);
    r.image = modp_correspondence(r.r_red.labels().front());
    r.image_mult = r.pi_red.mult(*r.image);
    r.occurs = r.image_mult > 0;
  }
  r.selector = select_image_factor(r.pi_red, r.selector_mode);
  if (r.image) b.check("selector: picks the image uniquely", r.selector.unique && *r.selector.label == *r.image);
  return r;
}

}  // namespace quatmodp
