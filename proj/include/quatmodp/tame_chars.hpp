/**
 * @file tame_chars.hpp
 * @brief Tame characters of E0^x, E^x (ramified), F^x and D^x, and admissible pairs.
 *
 * Generator conventions:
 *   zeta_E generates mu_{q^2-1}, zeta_F = zeta_E^{q+1}, varpi_F = varpi_E^2.
 *   A character is stored by the exponent of its value at the residue
 *   generator (zeta_E for E0^x, zeta_F otherwise) and its value at the
 *   uniformizer (varpi_F for E0^x, F^x and D^x through Nrd; varpi_E for E^x).
 */
#pragma once

#include "quatmodp/root_of_unity.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace quatmodp {

struct FieldParams {
  std::int64_t p = 0;
  std::int64_t f = 0;
  std::int64_t q = 0;

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static FieldParams make(std::int64_t p, std::int64_t f) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (f < 1) throw std::invalid_argument("f must be positive");
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < f; ++i) {
      q *= p;
      if (q > (std::int64_t{1} << 20)) throw std::invalid_argument("q too large");
    }
    return {p, f, q};
  }

  static FieldParams from_q(std::int64_t q) {
    for (std::int64_t p = 2; p <= q; ++p) {
      if (q % p) continue;
      std::int64_t f = 0, r = q;
      while (r % p == 0) {
        r /= p;
        ++f;
      }
      if (r != 1) break;
      return make(p, f);
    }
    throw std::invalid_argument("q must be a prime power");
  }

  /// |mu_{E0}| = q^2 - 1.
  std::int64_t units_E() const { return q * q - 1; }
  /// |mu_F| = q - 1.
  std::int64_t units_F() const { return q - 1; }
  bool odd() const { return p != 2; }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

enum class ExtKind { Unramified, RamifiedTame };
enum class CharGroup { Eunram, Eram, Fmult, Dmult };

struct CharZero {
  std::int64_t level = 0;
  friend bool operator==(const CharZero&, const CharZero&) = default;
};
struct CharModP {
  friend bool operator==(const CharModP&, const CharModP&) = default;
};
using CharTag = std::variant<CharZero, CharModP>;

inline const char* to_string(CharGroup g) {
  switch (g) {
    case CharGroup::Eunram: return "Eunram";
    case CharGroup::Eram: return "Eram";
    case CharGroup::Fmult: return "Fmult";
    case CharGroup::Dmult: return "Dmult";
  }
  return "?";
}

inline CharGroup char_group_from_string(const std::string& s) {
  if (s == "Eunram") return CharGroup::Eunram;
  if (s == "Eram") return CharGroup::Eram;
  if (s == "Fmult") return CharGroup::Fmult;
  if (s == "Dmult") return CharGroup::Dmult;
  throw std::invalid_argument("unknown character group '" + s + "'");
}

inline const char* to_string(ExtKind e) { return e == ExtKind::Unramified ? "unram" : "ram"; }

inline ExtKind ext_kind_from_string(const std::string& s) {
  if (s == "unram" || s == "Unramified") return ExtKind::Unramified;
  if (s == "ram" || s == "RamifiedTame") return ExtKind::RamifiedTame;
  throw std::invalid_argument("unknown extension kind '" + s + "'");
}

class TameChar {
 public:
  TameChar() = default;

  TameChar(FieldParams params, CharGroup group, std::int64_t residue_exp, RootOfUnity unif_val,
           CharTag tag)
      : params_(params), group_(group), unif_val_(std::move(unif_val)), tag_(tag) {
    if (params.q < 2) throw std::invalid_argument("character: field parameters not set");
    residue_exp_ = floor_mod(residue_exp, residue_modulus());
    if (is_modp() && !unif_val_.has_order_prime_to(params.p))
      throw std::invalid_argument("mod p character must have prime-to-p uniformizer value");
    if (auto* z = std::get_if<CharZero>(&tag_); z && z->level < 0)
      throw std::invalid_argument("character level must be nonnegative");
  }

  static TameChar modp(FieldParams params, CharGroup group, std::int64_t e, RootOfUnity w) {
    return TameChar(params, group, e, std::move(w), CharModP{});
  }
  static TameChar zero(FieldParams params, CharGroup group, std::int64_t e, RootOfUnity w,
                       std::int64_t level) {
    return TameChar(params, group, e, std::move(w), CharZero{level});
  }

  const FieldParams& params() const { return params_; }
  CharGroup group() const { return group_; }
  std::int64_t residue_exp() const { return residue_exp_; }
  const RootOfUnity& unif_val() const { return unif_val_; }
  const CharTag& tag() const { return tag_; }
  bool is_modp() const { return std::holds_alternative<CharModP>(tag_); }
  std::int64_t level() const {
    if (auto* z = std::get_if<CharZero>(&tag_)) return z->level;
    throw std::logic_error("mod p character has no level");
  }

  std::int64_t residue_modulus() const {
    return group_ == CharGroup::Eunram ? params_.units_E() : params_.units_F();
  }

  /// Value at zeta_E (Eunram) or zeta_F (other groups).
  RootOfUnity value_at_residue_generator() const { return root(residue_exp_, residue_modulus()); }

  /// Value at zeta_F = zeta_E^{q+1}.
  RootOfUnity value_at_zeta_F() const {
    if (group_ == CharGroup::Eunram) return root((params_.q + 1) * residue_exp_, params_.units_E());
    return value_at_residue_generator();
  }

  TameChar with_unif(RootOfUnity w) const { return TameChar(params_, group_, residue_exp_, w, tag_); }
  TameChar with_exp(std::int64_t e) const { return TameChar(params_, group_, e, unif_val_, tag_); }
  TameChar with_tag(CharTag t) const { return TameChar(params_, group_, residue_exp_, unif_val_, t); }

  friend bool operator==(const TameChar& a, const TameChar& b) {
    return a.params_ == b.params_ && a.group_ == b.group_ && a.residue_exp_ == b.residue_exp_ &&
           a.unif_val_ == b.unif_val_ && a.tag_ == b.tag_;
  }

  /// Label order: residue exponent, then uniformizer value.
  friend std::strong_ordering operator<=>(const TameChar& a, const TameChar& b) {
    if (auto c = static_cast<int>(a.group_) <=> static_cast<int>(b.group_); c != 0) return c;
    if (auto c = a.residue_exp_ <=> b.residue_exp_; c != 0) return c;
    return a.unif_val_ <=> b.unif_val_;
  }

  std::string to_string() const {
    return std::string(quatmodp::to_string(group_)) + "(" + std::to_string(residue_exp_) + ":" +
           unif_val_.to_string() + (is_modp() ? ",modp" : ",lvl " + std::to_string(level())) + ")";
  }

 private:
  FieldParams params_{};
  CharGroup group_ = CharGroup::Fmult;
  std::int64_t residue_exp_ = 0;
  RootOfUnity unif_val_{};
  CharTag tag_ = CharModP{};
};

/// Pointwise product of two characters on the same group; keeps the tag of a.
inline TameChar times(const TameChar& a, const TameChar& b) {
  auto base = [](CharGroup g) { return g == CharGroup::Dmult ? CharGroup::Fmult : g; };
  if (base(a.group()) != base(b.group()))
    throw std::invalid_argument("times: characters on different groups");
  if (!(a.params() == b.params())) throw std::invalid_argument("times: different fields");
  return TameChar(a.params(), a.group(), a.residue_exp() + b.residue_exp(),
                  a.unif_val() * b.unif_val(), a.tag());
}

inline TameChar inverse(const TameChar& a) {
  return TameChar(a.params(), a.group(), -a.residue_exp(), a.unif_val().inverse(), a.tag());
}

inline RootOfUnity value_at_minus_one(const TameChar& c) {
  if (!c.params().odd()) return {};
  // -1 = zeta_E^{(q^2-1)/2} = zeta_F^{(q-1)/2}; both give exponent/2.
  return root(c.residue_exp(), 2);
}

inline bool is_regular(const TameChar& c) {
  switch (c.group()) {
    case CharGroup::Eunram:
      return (c.params().q - 1) * c.residue_exp() % c.params().units_E() != 0;
    case CharGroup::Eram:
      return !value_at_minus_one(c).is_identity();
    default:
      throw std::invalid_argument("regularity is defined for characters of E^x only");
  }
}

inline bool is_regular(const TameChar& c, ExtKind ext) {
  if ((ext == ExtKind::Unramified) != (c.group() == CharGroup::Eunram))
    throw std::invalid_argument("is_regular: extension kind does not match character group");
  return is_regular(c);
}

inline TameChar galois_conjugate(const TameChar& c) {
  switch (c.group()) {
    case CharGroup::Eunram:
      return c.with_exp(c.params().q * c.residue_exp());
    case CharGroup::Eram:
      // theta(varpi_E) = -varpi_E
      return c.with_unif(c.unif_val() * value_at_minus_one(c));
    default:
      throw std::invalid_argument("galois_conjugate: not a character of E^x");
  }
}

inline TameChar restrict_to_F(const TameChar& c) {
  switch (c.group()) {
    case CharGroup::Eunram:
      return TameChar(c.params(), CharGroup::Fmult, c.residue_exp(), c.unif_val(), c.tag());
    case CharGroup::Eram:
      return TameChar(c.params(), CharGroup::Fmult, c.residue_exp(), c.unif_val().pow(2), c.tag());
    default:
      throw std::invalid_argument("restrict_to_F: not a character of E^x");
  }
}

inline TameChar reduce_char(const TameChar& c) {
  return TameChar(c.params(), c.group(), c.residue_exp(), c.unif_val().reduce_mod_p(c.params().p),
                  CharModP{});
}

/// phi o N_{E/F} for phi on F^x.
inline TameChar compose_with_norm(const TameChar& phi, CharGroup target) {
  if (phi.group() != CharGroup::Fmult && phi.group() != CharGroup::Dmult)
    throw std::invalid_argument("compose_with_norm: expects a character of F^x");
  const auto& fp = phi.params();
  if (target == CharGroup::Eunram)
    return TameChar(fp, target, (fp.q + 1) * phi.residue_exp(), phi.unif_val().pow(2), phi.tag());
  if (target == CharGroup::Eram)
    // N(zeta_F) = zeta_F^2, N(varpi_E) = -varpi_F
    return TameChar(fp, target, 2 * phi.residue_exp(), value_at_minus_one(phi) * phi.unif_val(),
                    phi.tag());
  throw std::invalid_argument("compose_with_norm: target must be E^x");
}

/// The unramified quadratic-order character delta of E0^x (mod p); trivial for p = 2.
inline TameChar delta_character(const FieldParams& fp) {
  return TameChar::modp(fp, CharGroup::Eunram, 0, fp.odd() ? root(1, 2) : RootOfUnity{});
}

/// Quadratic character of F^x attached to E/F.
inline TameChar quadratic_character(const FieldParams& fp, ExtKind ext) {
  if (ext == ExtKind::Unramified) return TameChar::zero(fp, CharGroup::Fmult, 0, root(1, 2), 0);
  if (!fp.odd()) throw std::invalid_argument("tame ramified quadratic extension needs p odd");
  // trivial on norms: kappa(zeta_F) = -1, kappa(-varpi_F) = 1
  return TameChar::zero(fp, CharGroup::Fmult, (fp.q - 1) / 2, root((fp.q - 1) / 2, 2), 0);
}

/// Character of D^x, trivial on units, -1 at varpi_D; stored through Nrd as a character of F^x.
inline TameChar uniformizer_sign_character(const FieldParams& fp) {
  return TameChar::zero(fp, CharGroup::Fmult, 0, root(1, 2), 0);
}

class AdmissiblePair {
 public:
  AdmissiblePair(ExtKind ext, TameChar chi, bool minimal = true)
      : ext_(ext), chi_(std::move(chi)), minimal_(minimal) {
    if (chi_.is_modp()) throw std::invalid_argument("admissible pair needs a characteristic-zero character");
    const auto want = ext_ == ExtKind::Unramified ? CharGroup::Eunram : CharGroup::Eram;
    if (chi_.group() != want) throw std::invalid_argument("character group does not match extension kind");
    if (ext_ == ExtKind::RamifiedTame && !chi_.params().odd())
      throw std::invalid_argument("no tamely ramified quadratic extension for p = 2");
    if (chi_.level() == 0) {
      if (ext_ != ExtKind::Unramified) throw std::invalid_argument("level-zero pair must be unramified");
      if (!is_regular(chi_)) throw std::invalid_argument("level-zero pair needs a regular character");
      minimal_ = true;
    } else if (ext_ == ExtKind::RamifiedTame && chi_.level() % 2 == 0 && minimal_) {
      throw std::invalid_argument("minimal ramified pair must have odd level");
    }
  }

  ExtKind ext() const { return ext_; }
  const TameChar& chi() const { return chi_; }
  bool minimal() const { return minimal_; }
  const FieldParams& params() const { return chi_.params(); }
  std::int64_t level() const { return chi_.level(); }
  /// Level n of the attached representation of D^x: 2m / e(E|F).
  std::int64_t n() const { return ext_ == ExtKind::Unramified ? 2 * level() : level(); }

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;

 private:
  ExtKind ext_;
  TameChar chi_;
  bool minimal_;
};

/// The tamely ramified character of E^x twisting chi under the Jacquet-Langlands image.
/// For ramified E the value at varpi_E is a caller choice subject to its square
/// being the quadratic character at varpi_F.
inline TameChar jl_twist_character(const AdmissiblePair& pair,
                                   const std::optional<RootOfUnity>& ram_choice = std::nullopt) {
  const auto& fp = pair.params();
  if (pair.ext() == ExtKind::Unramified)
    return TameChar::zero(fp, CharGroup::Eunram, 0, root(1, 2), 0);
  if (!ram_choice) throw std::invalid_argument("ramified twist needs a value at varpi_E");
  const RootOfUnity kappa_varpi = quadratic_character(fp, ExtKind::RamifiedTame).unif_val();
  if (!(ram_choice->pow(2) == kappa_varpi))
    throw std::invalid_argument("twist value at varpi_E must square to " + kappa_varpi.to_string() +
                                " (order " + (fp.q % 4 == 3 ? "4" : "2") + ")");
  return TameChar::zero(fp, CharGroup::Eram, (fp.q - 1) / 2, *ram_choice, 0);
}

/// All admissible values at varpi_E for the ramified twist.
inline std::vector<RootOfUnity> jl_twist_choices(const FieldParams& fp) {
  return square_roots(quadratic_character(fp, ExtKind::RamifiedTame).unif_val());
}

inline AdmissiblePair jl_image(const AdmissiblePair& pair,
                               const std::optional<RootOfUnity>& ram_choice = std::nullopt) {
  TameChar twisted = times(pair.chi(), jl_twist_character(pair, ram_choice));
  return AdmissiblePair(pair.ext(), twisted.with_tag(CharZero{pair.level()}), pair.minimal());
}

}  // namespace quatmodp
