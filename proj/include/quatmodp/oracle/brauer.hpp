/**
 * @file brauer.hpp
 * @brief Brauer characters of Pi_chi computed by Mackey induction in a finite quotient of D^x,
 *        and of candidate mod p multisets computed from their labels.
 *
 * G = D^x / (U_D^{n+1} varpi_F^{M Z}) in the equal-characteristic model
 * D = GF(q^2)((varpi_D)), varpi_D^2 = varpi_F. For n even E0 = GF(q^2)((varpi_F));
 * for n odd E = GF(q)((varpi_D)) with varpi_E = varpi_D.
 */
#pragma once

#include "quatmodp/modp_reps.hpp"
#include "quatmodp/oracle/cyclotomic.hpp"
#include "quatmodp/oracle/twisted_ring.hpp"

#include <deque>
#include <memory>
#include <numeric>

namespace quatmodp::oracle {

struct ClassFunction {
  std::int64_t level = 1;
  std::vector<std::int64_t> reps;
  std::vector<std::int64_t> sizes;
  std::vector<CycloValue> values;
};

struct PRegularClasses {
  std::vector<std::int64_t> reps;
  std::vector<std::int64_t> sizes;
  std::int64_t p_regular_elements = 0;
};

/// Conjugacy classes of p-regular elements, by orbits under conjugation by generators.
inline PRegularClasses p_regular_classes(const QuotientGroup& G) {
  PRegularClasses out;
  const std::int64_t N = G.order();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(N), 0);
  const auto gens = G.generators();
  std::vector<GElem> gens_inv;
  for (const auto& s : gens) gens_inv.push_back(G.inv(s));
  std::vector<std::int64_t> stack;
  for (std::int64_t idx = 0; idx < N; ++idx) {
    if (seen[idx]) continue;
    const GElem g = G.decode(idx);
    if (!G.is_p_regular(g)) continue;
    std::int64_t size = 0;
    seen[idx] = 1;
    stack.assign(1, idx);
    while (!stack.empty()) {
      const GElem h = G.decode(stack.back());
      stack.pop_back();
      ++size;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::int64_t c = G.encode(G.mul(G.mul(gens[i], h), gens_inv[i]));
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
    out.reps.push_back(idx);
    out.sizes.push_back(size);
    out.p_regular_elements += size;
  }
  return out;
}

struct OracleVerdict {
  bool ok = false;
  std::string detail;
  std::int64_t group_order = 0;
  std::size_t classes = 0;
};

inline OracleVerdict compare_class_functions(const ClassFunction& a, const ClassFunction& b) {
  OracleVerdict v;
  v.classes = a.reps.size();
  if (a.level != b.level || a.reps != b.reps) {
    v.detail = "class functions live on different class sets";
    return v;
  }
  for (std::size_t i = 0; i < a.reps.size(); ++i)
    if (!(a.values[i] == b.values[i])) {
      v.detail = "mismatch at class " + std::to_string(a.reps[i]) + ": " + a.values[i].to_string() + " vs " +
                 b.values[i].to_string();
      return v;
    }
  v.ok = true;
  return v;
}

class BrauerOracle {
 public:
  static constexpr std::int64_t kDefaultBudget = 10'000'000;

  BrauerOracle(const FieldParams& fp, ExtKind ext, std::int64_t n, int M, std::int64_t budget = kDefaultBudget)
      : fp_(fp), ext_(ext), n_(n), gf_(std::make_unique<GFq2>(fp)),
        G_(std::make_unique<QuotientGroup>(*gf_, n == 0 ? 1 : static_cast<int>(n) + 1, M)) {
    if (n < 0) throw std::invalid_argument("oracle: negative level");
    if ((n % 2 == 1) != (ext == ExtKind::RamifiedTame))
      throw std::invalid_argument("oracle: n is odd exactly for ramified E");
    if (ext == ExtKind::RamifiedTame && !fp.odd())
      throw std::invalid_argument("oracle: no ramified model for p = 2");
    if (G_->order() > budget) throw std::length_error("oracle: |G| = " + std::to_string(G_->order()) + " exceeds budget");
    level_ = std::lcm(fp.units_E(), static_cast<std::int64_t>(4 * M));
    classes_ = p_regular_classes(*G_);
    build_transversal();
  }

  const QuotientGroup& group() const { return *G_; }
  const PRegularClasses& classes() const { return classes_; }
  const std::vector<GElem>& transversal() const { return transversal_; }
  std::int64_t level() const { return level_; }
  std::int64_t lambda_dim() const { return n_ % 4 == 2 ? fp_.q : 1; }
  std::int64_t induced_dimension() const { return static_cast<std::int64_t>(transversal_.size()) * lambda_dim(); }

  /// Membership in J = E^x U_D^{[(n+1)/2]} (E0^x U_D^1 at level zero).
  bool in_J(const GElem& g) const {
    const auto& F = G_->field();
    if (n_ % 2 == 0) {
      if (g.k % 2) return false;
      for (int i = 1; i < n_ / 2; i += 2)
        if (g.u.c[i] != 0) return false;
      return true;
    }
    for (int i = 0; i < (n_ + 1) / 2; ++i)
      if (!F.in_base_field(g.u.c[i])) return false;
    return true;
  }

  /// Brauer character of (Pi_chi tensor Phi o Nrd) mod p on p-regular classes; chi_bar and the
  /// twist are mod p data and must be trivial on varpi_F^M.
  ClassFunction induced(const TameChar& chi_bar, const std::optional<TameChar>& twist = std::nullopt) const {
    const auto& F = G_->field();
    const std::int64_t q = fp_.q, L = level_;
    const bool unram = ext_ == ExtKind::Unramified;
    if (chi_bar.group() != (unram ? CharGroup::Eunram : CharGroup::Eram))
      throw std::invalid_argument("oracle: character group does not match extension");
    const std::int64_t w_exp = CycloValue::exponent_of(chi_bar.unif_val(), L);
    const std::int64_t z_exp = CycloValue::exponent_of(chi_bar.value_at_residue_generator(), L);
    check_central(unram ? chi_bar.unif_val() : chi_bar.unif_val().pow(2));

    ClassFunction cf = skeleton();
    for (std::size_t ci = 0; ci < classes_.reps.size(); ++ci) {
      const GElem g = G_->decode(classes_.reps[ci]);
      CycloValue v(L);
      for (const auto& x : transversal_) {
        const GElem h = G_->mul(G_->inv(x), G_->mul(g, x));
        if (!in_J(h)) continue;
        const int a0 = h.u.c[0];
        if (unram) {
          // Lambda(zeta^j varpi_F^s): chi-values, with trace q chi on mu_F and -chi off it when n = 2 mod 4
          const std::int64_t coeff = n_ % 4 == 2 ? (F.in_base_field(a0) ? q : -1) : 1;
          v.add_exponent(z_exp * F.log(a0) + w_exp * (h.k / 2), coeff);
        } else {
          v.add_exponent(z_exp * (F.log(a0) / (q + 1)) + w_exp * h.k, 1);
        }
      }
      if (twist) v = shifted(v, nrd_value(*twist, g));
      cf.values.push_back(std::move(v));
    }
    return cf;
  }

  /// Brauer character of a multiset of mod p labels on the same classes.
  ClassFunction predicted(const RepMultiset& m) const {
    if (m.side() != Side::D) throw std::invalid_argument("oracle: predicted character needs D-side labels");
    const auto& F = G_->field();
    const std::int64_t q = fp_.q, Q = fp_.units_E();
    ClassFunction cf = skeleton();
    for (std::size_t ci = 0; ci < classes_.reps.size(); ++ci) {
      const GElem g = G_->decode(classes_.reps[ci]);
      const std::int64_t j = F.log(g.u.c[0]);
      CycloValue v(level_);
      for (const auto& [label, mult] : m.entries()) {
        const TameChar& c = label.character();
        if (label.is_one_dim()) {
          v.add_root(nrd_value(c, g), mult);
        } else if (g.k % 2 == 0) {
          // Ind from E0^x U_D^1: xi + xi^theta on even valuation, 0 otherwise
          const RootOfUnity w = c.unif_val().pow(g.k / 2);
          v.add_root(root(c.residue_exp() * j, Q) * w, mult);
          v.add_root(root(q * c.residue_exp() * j, Q) * w, mult);
        }
      }
      cf.values.push_back(std::move(v));
    }
    return cf;
  }

 private:
  ClassFunction skeleton() const {
    ClassFunction cf;
    cf.level = level_;
    cf.reps = classes_.reps;
    cf.sizes = classes_.sizes;
    return cf;
  }

  void check_central(const RootOfUnity& w_F) const {
    if (!w_F.pow(G_->M()).is_identity())
      throw std::invalid_argument("oracle: central character is not trivial on varpi_F^M");
  }

  /// phi(Nrd g) with Nrd(u) = u_0^{q+1} on residues and Nrd(varpi_D) = -varpi_F.
  RootOfUnity nrd_value(const TameChar& phi, const GElem& g) const {
    const auto& F = G_->field();
    const RootOfUnity z = root(phi.residue_exp() * F.log(g.u.c[0]), fp_.q - 1);
    return z * (value_at_minus_one(phi) * phi.unif_val()).pow(g.k);
  }

  CycloValue shifted(const CycloValue& v, const RootOfUnity& r) const {
    const std::int64_t s = CycloValue::exponent_of(r, level_);
    CycloValue out(level_);
    // the raw vector is not exposed; rebuild from canonical coordinates
    const Poly& c = v.canonical();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) out.add_exponent(static_cast<std::int64_t>(i) + s, c[i]);
    return out;
  }

  void build_transversal() {
    const auto gens = G_->generators();
    transversal_ = {G_->identity()};
    std::vector<GElem> inv_t = {G_->identity()};
    std::deque<GElem> queue = {G_->identity()};
    while (!queue.empty()) {
      const GElem x = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        const GElem y = G_->mul(s, x);
        bool found = false;
        for (const auto& ti : inv_t)
          if (in_J(G_->mul(ti, y))) {
            found = true;
            break;
          }
        if (!found) {
          transversal_.push_back(y);
          inv_t.push_back(G_->inv(y));
          queue.push_back(y);
        }
      }
    }
  }

  FieldParams fp_;
  ExtKind ext_;
  std::int64_t n_;
  std::unique_ptr<GFq2> gf_;
  std::unique_ptr<QuotientGroup> G_;
  std::int64_t level_ = 1;
  PRegularClasses classes_;
  std::vector<GElem> transversal_;
};

/// Smallest M with varpi_F^M acting trivially for chi and the twist.
inline int required_central_order(const AdmissiblePair& pair, const std::optional<TameChar>& twist = std::nullopt) {
  const TameChar chi = reduce_char(pair.chi());
  const RootOfUnity wF = pair.ext() == ExtKind::Unramified ? chi.unif_val() : chi.unif_val().pow(2);
  std::int64_t M = to_int64(wF.order());
  if (twist) M = std::lcm(M, to_int64(reduce_char(*twist).unif_val().order()));
  return static_cast<int>(M);
}

inline ClassFunction induced_brauer_character(const BrauerOracle& oracle, const AdmissiblePair& pair,
                                              const std::optional<TameChar>& twist = std::nullopt) {
  std::optional<TameChar> t;
  if (twist) t = reduce_char(*twist);
  return oracle.induced(reduce_char(pair.chi()), t);
}

inline ClassFunction predicted_brauer_character(const BrauerOracle& oracle, const RepMultiset& m) {
  return oracle.predicted(m);
}

inline OracleVerdict oracle_verify_reduction(const BrauerOracle& oracle, const AdmissiblePair& pair,
                                             const RepMultiset& reduction,
                                             const std::optional<TameChar>& twist = std::nullopt) {
  OracleVerdict v;
  try {
    v = compare_class_functions(induced_brauer_character(oracle, pair, twist), predicted_brauer_character(oracle, reduction));
  } catch (const std::domain_error& e) {
    v.ok = false;
    v.detail = e.what();
  }
  v.group_order = oracle.group().order();
  v.classes = oracle.classes().reps.size();
  return v;
}

/// Builds a fitting oracle and checks the reduction against it.
inline OracleVerdict oracle_verify_reduction(const AdmissiblePair& pair, const RepMultiset& reduction,
                                             const std::optional<TameChar>& twist = std::nullopt,
                                             std::int64_t budget = BrauerOracle::kDefaultBudget) {
  BrauerOracle oracle(pair.params(), pair.ext(), pair.n(), required_central_order(pair, twist), budget);
  return oracle_verify_reduction(oracle, pair, reduction, twist);
}

/// Every single-label multiplicity change (+1, and -1 where possible) must be rejected.
inline bool mutation_detected(const BrauerOracle& oracle, const AdmissiblePair& pair, const RepMultiset& reduction,
                              const std::optional<TameChar>& twist = std::nullopt) {
  for (const auto& [label, mult] : reduction.entries()) {
    for (int delta : {1, -1}) {
      RepMultiset mutated = reduction;
      mutated.set(label, mult + delta);
      if (oracle_verify_reduction(oracle, pair, mutated, twist).ok) return false;
    }
  }
  return true;
}

}  // namespace quatmodp::oracle
