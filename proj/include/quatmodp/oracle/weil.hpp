/**
 * @file weil.hpp
 * @brief Brute-force check of rho_xi in the finite tame quotient C_{q^2-1} x| C_{2s} of W_F.
 *
 * Elements are pairs (j, k) = t^j Fr^k with Fr t Fr^{-1} = t^q and Fr^{2s} = 1,
 * s the order of xi(varpi_F). The index-2 subgroup H = {k even} is the image of W_E0.
 */
#pragma once

#include "quatmodp/modp_reps.hpp"
#include "quatmodp/oracle/cyclotomic.hpp"

#include <array>
#include <numeric>

namespace quatmodp::oracle {

class MetacyclicGroup {
 public:
  struct Elem {
    std::int64_t j = 0, k = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  MetacyclicGroup(std::int64_t q, std::int64_t s) : q_(q), Q_(q * q - 1), s_(s) {
    qpow_ = {1 % Q_, q % Q_};
  }

  std::int64_t Q() const { return Q_; }
  std::int64_t s() const { return s_; }
  std::int64_t order() const { return Q_ * 2 * s_; }

  Elem mul(const Elem& a, const Elem& b) const {
    return {floor_mod(a.j + qpow_[a.k % 2] * b.j, Q_), (a.k + b.k) % (2 * s_)};
  }
  Elem inv(const Elem& a) const {
    const std::int64_t k = (2 * s_ - a.k) % (2 * s_);
    return {floor_mod(-qpow_[k % 2] * a.j, Q_), k};
  }
  Elem frobenius() const { return {0, 1 % (2 * s_)}; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::int64_t k = 0; k < 2 * s_; ++k)
      for (std::int64_t j = 0; j < Q_; ++j) out.push_back({j, k});
    return out;
  }

 private:
  std::int64_t q_, Q_, s_;
  std::array<std::int64_t, 2> qpow_;
};

/// A class function stored per element as a list of (coefficient, exponent mod L).
using TermList = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct WeilVerdict {
  bool ok = false;
  std::string detail;
  RepMultiset decomposition{Side::W};
  RepMultiset expected{Side::W};
  std::int64_t group_order = 0;
};

namespace detail {

/// (1/|S|) sum_{g in S} f(g) conj(h(g)), which must be an integer.
inline std::int64_t inner_product(const std::vector<TermList>& f, const std::vector<TermList>& h,
                                  const std::vector<std::size_t>& support, std::int64_t L) {
  CycloValue acc(L);
  for (auto i : support)
    for (const auto& [c1, e1] : f[i])
      for (const auto& [c2, e2] : h[i]) acc.add_exponent(e1 - e2, c1 * c2);
  const auto v = acc.as_integer();
  const auto n = static_cast<std::int64_t>(support.size());
  if (!v || *v % n != 0) throw std::logic_error("weil oracle: inner product is not an integer");
  return *v / n;
}

}  // namespace detail

/// Decomposes Ind_H^G psi (psi = xi on H) and compares with rho_from_unramified(xi).
inline WeilVerdict weil_oracle_verify(const TameChar& xi) {
  require_modp(xi, CharGroup::Eunram, "weil_oracle_verify");
  const FieldParams& fp = xi.params();
  const std::int64_t q = fp.q;
  if (!xi.unif_val().has_order_prime_to(fp.p)) throw std::invalid_argument("weil oracle: xi(varpi_F) is not mod p");
  const std::int64_t s = to_int64(xi.unif_val().order());
  const MetacyclicGroup G(q, s);
  const std::int64_t Q = G.Q(), L = std::lcm(Q, 2 * s);
  const auto elems = G.elements();

  const auto lin = [&](std::int64_t a, std::int64_t l) {  // psi(t^j Fr^{2i}) = omega^{a j} zeta_s^{l i}
    return [=](const MetacyclicGroup::Elem& g) { return a * g.j * (L / Q) + l * (g.k / 2) * (L / s); };
  };
  const std::int64_t l0 = CycloValue::exponent_of(xi.unif_val(), s);
  const auto psi = lin(xi.residue_exp(), l0);

  // Ind from H by coset representatives {1, Fr}
  std::vector<TermList> induced(elems.size());
  const std::array<MetacyclicGroup::Elem, 2> reps = {MetacyclicGroup::Elem{}, G.frobenius()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& x : reps) {
      const auto h = G.mul(G.inv(x), G.mul(elems[i], x));
      if (h.k % 2 == 0) induced[i].push_back({1, psi(h)});
    }

  WeilVerdict v;
  v.group_order = G.order();
  v.expected = rho_from_unramified(xi);

  std::vector<std::size_t> all(elems.size()), evens;
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].k % 2 == 0) evens.push_back(i);

  std::int64_t dim = 0;
  // two-dimensional irreducibles Ind psi', psi' != psi'^theta
  for (std::int64_t a = 0; a < Q; ++a) {
    if ((q - 1) * a % Q == 0 || canonical_exponent(fp, a) != a) continue;
    for (std::int64_t l = 0; l < s; ++l) {
      std::vector<TermList> chi(elems.size());
      for (std::size_t i : evens) {
        chi[i].push_back({1, lin(a, l)(elems[i])});
        chi[i].push_back({1, lin(q * a, l)(elems[i])});
      }
      // over p-regular elements only when p = 2, where they are exactly H
      const std::int64_t m = fp.odd() ? detail::inner_product(induced, chi, all, L)
                                      : detail::inner_product(induced, chi, evens, L) / 2;
      if (m == 0) continue;
      v.decomposition.add(ModPIrrep::two_dim(Side::W, TameChar::modp(fp, CharGroup::Eunram, a, root(l, s))), m);
      dim += 2 * m;
    }
  }
  // one-dimensional characters: lambda(t) = omega^{(q+1)b}, lambda(Fr) = zeta_{2s}^e
  for (std::int64_t b = 0; b < q - 1; ++b) {
    for (std::int64_t e = 0; e < 2 * s; ++e) {
      const RootOfUnity w = root(e, 2 * s);
      // for p = 2 only the odd-order square root of lambda(Fr^2) is a Brauer character
      if (!fp.odd() && !w.has_order_prime_to(2)) continue;
      std::vector<TermList> lambda(elems.size());
      for (std::size_t i = 0; i < elems.size(); ++i)
        lambda[i].push_back({1, (q + 1) * b * elems[i].j * (L / Q) + e * elems[i].k * (L / (2 * s))});
      const std::int64_t m = fp.odd() ? detail::inner_product(induced, lambda, all, L)
                                      : detail::inner_product(induced, lambda, evens, L);
      if (m == 0) continue;
      v.decomposition.add(ModPIrrep::one_dim(Side::W, TameChar::modp(fp, CharGroup::Fmult, b, w)), m);
      dim += m;
    }
  }

  if (dim != 2) {
    v.detail = "constituents have total dimension " + std::to_string(dim);
    return v;
  }
  v.ok = v.decomposition == v.expected;
  if (!v.ok) v.detail = "decomposition differs from rho_xi";
  return v;
}

}  // namespace quatmodp::oracle
