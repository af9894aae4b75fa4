/**
 * @file modp_reps.hpp
 * @brief Irreducible mod p representations of D^x and W_F with tame labels, and multisets of them.
 *
 * D side: pi_xi = Ind_{E0^x U_D^1}^{D^x} xi (2-dim, xi regular) or phi o Nrd.
 * W side: rho_xi = Ind_{W_E0}^{W_F} (xi o a_E0) or phi o a_F.
 */
#pragma once

#include "quatmodp/tame_chars.hpp"

#include <map>
#include <set>
#include <vector>

namespace quatmodp {

enum class Side { D, W };

inline const char* to_string(Side s) { return s == Side::D ? "D" : "W"; }

inline Side side_from_string(const std::string& s) {
  if (s == "D") return Side::D;
  if (s == "W") return Side::W;
  throw std::invalid_argument("side must be D or W");
}

/// min(a, q a mod q^2-1): the representative of {xi, xi^theta}.
inline std::int64_t canonical_exponent(const FieldParams& fp, std::int64_t a) {
  const std::int64_t Q = fp.units_E();
  a = floor_mod(a, Q);
  return std::min(a, fp.q * a % Q);
}

class ModPIrrep {
 public:
  static ModPIrrep one_dim(Side side, const TameChar& phi) {
    if (!phi.is_modp()) throw std::invalid_argument("label character must be mod p");
    if (phi.group() != CharGroup::Fmult && phi.group() != CharGroup::Dmult)
      throw std::invalid_argument("one-dimensional label must be a character of F^x");
    return ModPIrrep(side, TameChar::modp(phi.params(), CharGroup::Fmult, phi.residue_exp(), phi.unif_val()));
  }

  static ModPIrrep two_dim(Side side, const TameChar& xi) {
    if (!xi.is_modp() || xi.group() != CharGroup::Eunram)
      throw std::invalid_argument("two-dimensional label must be a mod p character of E0^x");
    if (!is_regular(xi)) throw std::invalid_argument("two-dimensional label needs a regular character");
    return ModPIrrep(side, xi.with_exp(canonical_exponent(xi.params(), xi.residue_exp())));
  }

  Side side() const { return side_; }
  int dim() const { return chi_.group() == CharGroup::Eunram ? 2 : 1; }
  bool is_one_dim() const { return dim() == 1; }
  const TameChar& character() const { return chi_; }
  const FieldParams& params() const { return chi_.params(); }

  ModPIrrep on_side(Side s) const {
    ModPIrrep r = *this;
    r.side_ = s;
    return r;
  }

  /// Twist by phi o Nrd (D side) or phi o a_F (W side).
  ModPIrrep twisted(const TameChar& phi) const {
    if (is_one_dim()) return one_dim(side_, times(chi_, phi));
    return two_dim(side_, times(chi_, compose_with_norm(phi, CharGroup::Eunram)));
  }

  /// Restriction to F^x: xi|_F for pi_xi, phi^2 for phi o Nrd.
  TameChar central_character() const {
    if (is_one_dim()) return times(chi_, chi_);
    return restrict_to_F(chi_);
  }

  std::string to_string() const {
    return std::string(quatmodp::to_string(side_)) + (is_one_dim() ? ":chr" : ":ind") + chi_.to_string();
  }

  friend bool operator==(const ModPIrrep&, const ModPIrrep&) = default;
  friend std::strong_ordering operator<=>(const ModPIrrep& a, const ModPIrrep& b) {
    if (auto c = static_cast<int>(a.side_) <=> static_cast<int>(b.side_); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    return a.chi_ <=> b.chi_;
  }

 private:
  ModPIrrep(Side side, TameChar chi) : side_(side), chi_(std::move(chi)) {}
  Side side_;
  TameChar chi_;
};

class RepMultiset {
 public:
  explicit RepMultiset(Side side = Side::D) : side_(side) {}

  Side side() const { return side_; }
  const std::map<ModPIrrep, std::int64_t>& entries() const { return entries_; }
  const std::set<ModPIrrep>& nonsplit() const { return nonsplit_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void add(const ModPIrrep& label, std::int64_t mult = 1) {
    if (label.side() != side_) throw std::invalid_argument("label is on the wrong side");
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult == 0) return;
    entries_[label] += mult;
  }

  void add(const RepMultiset& other, std::int64_t scale = 1) {
    for (const auto& [l, m] : other.entries_) add(l, m * scale);
    if (scale > 0)
      for (const auto& l : other.nonsplit_) nonsplit_.insert(l);
  }

  void mark_nonsplit(const ModPIrrep& label) { nonsplit_.insert(label); }

  /// Sets a multiplicity directly; zero removes the label.
  void set(const ModPIrrep& label, std::int64_t mult) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult == 0)
      entries_.erase(label);
    else
      entries_[label] = mult;
  }

  std::int64_t mult(const ModPIrrep& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? 0 : it->second;
  }

  std::int64_t total_dimension() const {
    std::int64_t d = 0;
    for (const auto& [l, m] : entries_) d += l.dim() * m;
    return d;
  }

  RepMultiset twisted(const TameChar& phi) const {
    RepMultiset out(side_);
    for (const auto& [l, m] : entries_) out.add(l.twisted(phi), m);
    for (const auto& l : nonsplit_) out.nonsplit_.insert(l.twisted(phi));
    return out;
  }

  std::vector<ModPIrrep> labels() const {
    std::vector<ModPIrrep> out;
    for (const auto& [l, m] : entries_) out.push_back(l);
    return out;
  }

  /// Equality of semisimplifications; the nonsplit annotation is ignored.
  friend bool operator==(const RepMultiset& a, const RepMultiset& b) {
    return a.side_ == b.side_ && a.entries_ == b.entries_;
  }

 private:
  Side side_;
  std::map<ModPIrrep, std::int64_t> entries_;
  std::set<ModPIrrep> nonsplit_;
};

inline void require_modp(const TameChar& c, CharGroup g, const char* what) {
  if (!c.is_modp() || c.group() != g) throw std::invalid_argument(std::string(what) + ": wrong character kind");
}

/// Semisimplified induction from E0^x (D side) or W_E0 (W side).
inline RepMultiset induced_from_unramified(Side side, const TameChar& xi) {
  require_modp(xi, CharGroup::Eunram, "induced_from_unramified");
  const auto& fp = xi.params();
  RepMultiset out(side);
  if (is_regular(xi)) {
    out.add(ModPIrrep::two_dim(side, xi));
    return out;
  }
  // xi(zeta_E) = omega^{(q+1)b} = omega_F^b
  const std::int64_t b = xi.residue_exp() / (fp.q + 1);
  auto roots = square_roots_prime_to(xi.unif_val(), fp.p);
  if (fp.odd()) {
    for (const auto& w : roots) out.add(ModPIrrep::one_dim(side, TameChar::modp(fp, CharGroup::Fmult, b, w)));
  } else {
    auto label = ModPIrrep::one_dim(side, TameChar::modp(fp, CharGroup::Fmult, b, roots.at(0)));
    out.add(label, 2);
    out.mark_nonsplit(label);
  }
  return out;
}

inline RepMultiset pi_from_unramified(const TameChar& xi) { return induced_from_unramified(Side::D, xi); }
inline RepMultiset rho_from_unramified(const TameChar& xi) { return induced_from_unramified(Side::W, xi); }

/// rho_nu for nu a regular mod p character of E^x, E/F tamely ramified.
inline RepMultiset rho_from_ramified(const TameChar& nu) {
  require_modp(nu, CharGroup::Eram, "rho_from_ramified");
  const auto& fp = nu.params();
  if (!fp.odd()) throw std::invalid_argument("rho_from_ramified needs p odd");
  if (!is_regular(nu)) throw std::invalid_argument("rho_from_ramified needs a regular character");
  const std::int64_t Q = fp.units_E();
  const std::int64_t target = floor_mod((fp.q + 1) * nu.residue_exp(), Q);
  const RootOfUnity w = value_at_minus_one(nu).pow((fp.q + 1) / 2) * nu.unif_val().pow(2);
  std::set<ModPIrrep> found;
  for (std::int64_t a = 0; a < Q; ++a)
    if (2 * a % Q == target) found.insert(ModPIrrep::two_dim(Side::W, TameChar::modp(fp, CharGroup::Eunram, a, w)));
  if (found.size() != 1) throw std::logic_error("rho_from_ramified: square roots are not Galois conjugate");
  RepMultiset out(Side::W);
  out.add(*found.begin());
  return out;
}

struct RamifiedInduction {
  std::vector<ModPIrrep> two_dim;  // pi_xi, xi|_F = nu|_F, xi regular
  std::vector<ModPIrrep> one_dim;  // phi o Nrd restricting to nu on E^x
  RepMultiset total{Side::D};
};

/// Semisimplified Ind_{E^x U_D^1}^{D^x} nu.
inline RamifiedInduction induced_from_ramified(const TameChar& nu) {
  require_modp(nu, CharGroup::Eram, "induced_from_ramified");
  const auto& fp = nu.params();
  const std::int64_t Q = fp.units_E(), q = fp.q;
  const TameChar nu_F = restrict_to_F(nu);
  RamifiedInduction r;

  std::set<ModPIrrep> twos;
  for (std::int64_t a = 0; a < Q; ++a) {
    if ((a - nu_F.residue_exp()) % (q - 1) != 0) continue;
    TameChar xi = TameChar::modp(fp, CharGroup::Eunram, a, nu_F.unif_val());
    // regular iff xi(zeta)^2 != nu(zeta_F) when p is odd
    const bool reg = is_regular(xi);
    if (fp.odd() && reg != (floor_mod(2 * a - (q + 1) * nu.residue_exp(), Q) != 0))
      throw std::logic_error("induced_from_ramified: regularity tests disagree");
    if (reg) twos.insert(ModPIrrep::two_dim(Side::D, xi));
  }
  r.two_dim.assign(twos.begin(), twos.end());

  std::set<ModPIrrep> ones;
  for (std::int64_t b = 0; b < q - 1; ++b) {
    if (floor_mod(2 * b - nu.residue_exp(), q - 1) != 0) continue;
    TameChar phi0 = TameChar::modp(fp, CharGroup::Fmult, b, RootOfUnity{});
    // phi(-varpi_F) = nu(varpi_E)
    ones.insert(ModPIrrep::one_dim(Side::D, phi0.with_unif(value_at_minus_one(phi0).inverse() * nu.unif_val())));
  }
  r.one_dim.assign(ones.begin(), ones.end());

  for (const auto& l : r.two_dim) r.total.add(l);
  for (const auto& l : r.one_dim) r.total.add(l);

  // |I1|, |I2| against the closed-form counts
  std::size_t e1, e2;
  if (!fp.odd()) {
    e1 = static_cast<std::size_t>(q / 2), e2 = 1;
  } else if (is_regular(nu)) {
    e1 = static_cast<std::size_t>((q + 1) / 2), e2 = 0;
  } else {
    e1 = static_cast<std::size_t>((q - 1) / 2), e2 = 2;
  }
  if (r.two_dim.size() != e1 || r.one_dim.size() != e2 || r.total.total_dimension() != q + 1)
    throw std::logic_error("induced_from_ramified: count table mismatch");
  return r;
}

/// Mod p correspondence rho_xi -> pi_{delta xi}.
inline ModPIrrep modp_correspondence(const ModPIrrep& rho) {
  if (rho.side() != Side::W || rho.is_one_dim())
    throw std::invalid_argument("mod p correspondence is defined on irreducible two-dimensional rho_xi");
  return ModPIrrep::two_dim(Side::D, times(rho.character(), delta_character(rho.params())));
}

/// All irreducible mod p representations with central character omega (a mod p character of F^x).
inline std::vector<ModPIrrep> irreps_with_central_char(Side side, const TameChar& omega) {
  require_modp(omega, CharGroup::Fmult, "irreps_with_central_char");
  const auto& fp = omega.params();
  std::set<ModPIrrep> out;
  for (std::int64_t a = 0; a < fp.units_E(); ++a) {
    if ((a - omega.residue_exp()) % (fp.q - 1) != 0) continue;
    TameChar xi = TameChar::modp(fp, CharGroup::Eunram, a, omega.unif_val());
    if (is_regular(xi)) out.insert(ModPIrrep::two_dim(side, xi));
  }
  for (std::int64_t b = 0; b < fp.q - 1; ++b) {
    if (floor_mod(2 * b - omega.residue_exp(), fp.q - 1) != 0) continue;
    for (const auto& w : square_roots_prime_to(omega.unif_val(), fp.p))
      out.insert(ModPIrrep::one_dim(side, TameChar::modp(fp, CharGroup::Fmult, b, w)));
  }
  return {out.begin(), out.end()};
}

/// Mod p uniformizer values of order dividing some k <= max_order.
inline std::vector<RootOfUnity> modp_values_up_to_order(const FieldParams& fp, std::int64_t max_order) {
  std::set<RootOfUnity> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    if (n % fp.p == 0) continue;
    for (std::int64_t a = 0; a < n; ++a) out.insert(root(a, n));
  }
  return {out.begin(), out.end()};
}

}  // namespace quatmodp
