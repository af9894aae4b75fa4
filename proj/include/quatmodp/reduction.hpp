/**
 * @file reduction.hpp
 * @brief Semisimplified mod p reductions of Pi_chi (on D^x) and R_chi (on W_F).
 */
#pragma once

#include "quatmodp/modp_reps.hpp"

#include <optional>

namespace quatmodp {

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// dim Pi_chi from [D^x : J] dim Lambda.
inline std::int64_t dim_pi(const AdmissiblePair& pair) {
  const std::int64_t n = pair.n(), q = pair.params().q;
  if (n == 0) return 2;
  if (n % 2 == 0) return 2 * ipow(q, n / 2);
  return (q + 1) * ipow(q, (n - 1) / 2);
}

/// Nontrivial characters of E0^x trivial on F^x U_E^1; q of them.
inline std::vector<TameChar> unramified_norm_one_characters(const FieldParams& fp) {
  std::vector<TameChar> out;
  for (std::int64_t c = 1; c <= fp.q; ++c)
    out.push_back(TameChar::modp(fp, CharGroup::Eunram, c * (fp.q - 1), RootOfUnity{}));
  return out;
}

inline std::optional<TameChar> reduced_twist(const std::optional<TameChar>& twist) {
  if (!twist) return std::nullopt;
  if (twist->group() != CharGroup::Fmult && twist->group() != CharGroup::Dmult)
    throw std::invalid_argument("twist must be a character of F^x");
  const TameChar t = reduce_char(*twist);
  return TameChar::modp(t.params(), CharGroup::Fmult, t.residue_exp(), t.unif_val());
}

inline void require_reducible_pair(const AdmissiblePair& pair) {
  if (!pair.minimal()) throw std::invalid_argument("reduction needs a minimal pair; pass the twist separately");
}

/// (Pi_chi tensor Phi o Nrd) reduced mod p and semisimplified.
inline RepMultiset reduce_pi(const AdmissiblePair& pair, const std::optional<TameChar>& twist = std::nullopt) {
  require_reducible_pair(pair);
  const auto& fp = pair.params();
  const TameChar chi = reduce_char(pair.chi());
  const std::int64_t n = pair.n(), q = fp.q;
  RepMultiset out(Side::D);

  if (n == 0) {
    out = pi_from_unramified(chi);
  } else if (n % 2 == 0) {
    const std::int64_t Q = ipow(q, n / 2);
    std::int64_t m_chi, m_tau;
    if (n % 4 == 0) {
      m_chi = (Q + q) / (q + 1);
      m_tau = (Q - 1) / (q + 1);
    } else {
      m_chi = (Q - q) / (q + 1);
      m_tau = (Q + 1) / (q + 1);
    }
    out.add(pi_from_unramified(chi), m_chi);
    for (const auto& tau : unramified_norm_one_characters(fp)) out.add(pi_from_unramified(times(chi, tau)), m_tau);
  } else {
    if (pair.ext() != ExtKind::RamifiedTame) throw std::logic_error("odd n needs a ramified pair");
    const std::int64_t Q = ipow(q, (n - 1) / 2);
    const auto ind = induced_from_ramified(chi);
    const TameChar iota = reduce_char(uniformizer_sign_character(fp));
    for (const auto& l : ind.two_dim) out.add(l, Q);
    for (const auto& l : ind.one_dim) {
      out.add(l, (Q + 1) / 2);
      out.add(l.twisted(iota), (Q - 1) / 2);
    }
  }
  if (auto t = reduced_twist(twist)) out = out.twisted(*t);
  return out;
}

struct WildQuaternionInput {
  FieldParams params;
  std::int64_t n = 1;
  TameChar central;                  // character of F^x, central character of Pi
  std::optional<TameChar> chi_tame;  // tame part of chi on E^x, if known
};

/// p = 2, n odd: q^{(n-1)/2} copies of the induction from E^x U_D^1 of any nu with nu|_F = central.
inline RepMultiset reduce_pi_wild(const WildQuaternionInput& in) {
  const auto& fp = in.params;
  if (fp.p != 2) throw std::invalid_argument("wild reduction needs p = 2");
  if (in.n < 1 || in.n % 2 == 0) throw std::invalid_argument("wild reduction needs odd n");
  if (in.central.group() != CharGroup::Fmult) throw std::invalid_argument("central character must live on F^x");
  const TameChar omega = reduce_char(in.central);
  if (in.chi_tame && !(restrict_to_F(reduce_char(*in.chi_tame)) == omega))
    throw std::invalid_argument("tame part does not restrict to the central character");
  // nu(zeta_F) = omega(zeta_F), nu(varpi_E) = the odd-order square root of omega(varpi_F)
  const TameChar nu = TameChar::modp(fp, CharGroup::Eram, omega.residue_exp(),
                                     square_roots_prime_to(omega.unif_val(), 2).at(0));
  RepMultiset out(Side::D);
  out.add(induced_from_ramified(nu).total, ipow(fp.q, (in.n - 1) / 2));
  return out;
}

/// (R_chi tensor Phi o a_F) reduced mod p and semisimplified.
inline RepMultiset reduce_r(const AdmissiblePair& pair, const std::optional<TameChar>& twist = std::nullopt) {
  require_reducible_pair(pair);
  const auto& fp = pair.params();
  const TameChar chi = reduce_char(pair.chi());
  RepMultiset out(Side::W);
  if (pair.ext() == ExtKind::Unramified) {
    out = rho_from_unramified(chi);
  } else if (is_regular(chi)) {
    out = rho_from_ramified(chi);
  } else {
    // phi(zeta_F)^2 = chi(zeta_F), phi(-varpi_F) = chi(varpi_E)
    for (std::int64_t b = 0; b < fp.q - 1; ++b) {
      if (floor_mod(2 * b - chi.residue_exp(), fp.q - 1) != 0) continue;
      TameChar phi = TameChar::modp(fp, CharGroup::Fmult, b, RootOfUnity{});
      out.add(ModPIrrep::one_dim(Side::W, phi.with_unif(value_at_minus_one(phi).inverse() * chi.unif_val())));
    }
  }
  if (auto t = reduced_twist(twist)) out = out.twisted(*t);
  return out;
}

enum class WildKind { Imprimitive, Tetrahedral, Octahedral };

inline const char* to_string(WildKind k) {
  switch (k) {
    case WildKind::Imprimitive: return "imprimitive";
    case WildKind::Tetrahedral: return "tetrahedral";
    case WildKind::Octahedral: return "octahedral";
  }
  return "?";
}

inline WildKind wild_kind_from_string(const std::string& s) {
  if (s == "imprimitive") return WildKind::Imprimitive;
  if (s == "tetrahedral") return WildKind::Tetrahedral;
  if (s == "octahedral") return WildKind::Octahedral;
  throw std::invalid_argument("unknown wild kind '" + s + "'");
}

struct WildGaloisInput {
  WildKind kind = WildKind::Imprimitive;
  FieldParams params;
  TameChar det_char;              // Phi with det R = Phi o a_F
  std::optional<TameChar> eta;    // tetrahedral: order-3 character of F^x through Gal(K/F)
};

/// The mod p character phi of F^x with phi^2 = Phi-bar (unique for p = 2).
inline TameChar wild_square_root(const FieldParams& fp, const TameChar& phi_bar) {
  const std::int64_t m = fp.q - 1;  // odd
  const std::int64_t b = floor_mod(phi_bar.residue_exp() * ((m + 1) / 2), m);
  return TameChar::modp(fp, CharGroup::Fmult, b, square_roots_prime_to(phi_bar.unif_val(), 2).at(0));
}

inline RepMultiset reduce_r_wild(const WildGaloisInput& in) {
  const auto& fp = in.params;
  if (fp.p != 2) throw std::invalid_argument("wild Galois reduction needs p = 2");
  if (in.det_char.group() != CharGroup::Fmult) throw std::invalid_argument("det character must live on F^x");
  const TameChar phi_bar = reduce_char(in.det_char);
  const TameChar phi = wild_square_root(fp, phi_bar);
  RepMultiset out(Side::W);
  switch (in.kind) {
    case WildKind::Imprimitive: {
      auto l = ModPIrrep::one_dim(Side::W, phi);
      out.add(l, 2);
      out.mark_nonsplit(l);
      break;
    }
    case WildKind::Tetrahedral: {
      if (!in.eta) throw std::invalid_argument("tetrahedral input needs the cubic character eta");
      const TameChar eta = reduce_char(*in.eta);
      if (eta.group() != CharGroup::Fmult) throw std::invalid_argument("eta must be a character of F^x");
      const TameChar eta2 = times(eta, eta);
      if (times(eta2, eta) != TameChar::modp(fp, CharGroup::Fmult, 0, RootOfUnity{}) ||
          eta == TameChar::modp(fp, CharGroup::Fmult, 0, RootOfUnity{}))
        throw std::invalid_argument("eta must have order 3");
      out.add(ModPIrrep::one_dim(Side::W, times(phi, eta)));
      out.add(ModPIrrep::one_dim(Side::W, times(phi, eta2)));
      break;
    }
    case WildKind::Octahedral: {
      if ((fp.q + 1) % 3 != 0) throw std::invalid_argument("octahedral reduction needs q = -1 mod 3");
      const std::int64_t Q = fp.units_E();
      // xi'(zeta_E)^2 = Phi(zeta_F), xi'(varpi_F) = Phi(varpi_F); Q is odd
      const std::int64_t a_prime = floor_mod((fp.q + 1) * phi_bar.residue_exp() * ((Q + 1) / 2), Q);
      const TameChar xi = TameChar::modp(fp, CharGroup::Eunram, a_prime + Q / 3, phi_bar.unif_val());
      if (!is_regular(xi)) throw std::logic_error("octahedral character is not regular");
      out.add(ModPIrrep::two_dim(Side::W, xi));
      break;
    }
  }
  return out;
}

}  // namespace quatmodp
