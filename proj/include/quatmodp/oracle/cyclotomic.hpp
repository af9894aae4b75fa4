/**
 * @file cyclotomic.hpp
 * @brief Exact elements of Z[mu_L] in the canonical basis 1, x, ..., x^{phi(L)-1} modulo Phi_L.
 */
#pragma once

#include "quatmodp/root_of_unity.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace quatmodp::oracle {

using Poly = std::vector<std::int64_t>;

inline Poly poly_exact_div(Poly num, const Poly& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  Poly quo(num.size() - dn, 0);
  for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
    const std::int64_t c = num[i];
    quo[i - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    if (i == dn) break;
  }
  return quo;
}

inline const Poly& cyclotomic_polynomial(std::int64_t n) {
  static std::map<std::int64_t, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, cyclotomic_polynomial(d));
  return cache[n] = p;
}

class CycloValue {
 public:
  CycloValue() = default;
  explicit CycloValue(std::int64_t level) : level_(level), raw_(static_cast<std::size_t>(level), 0) {}

  std::int64_t level() const { return level_; }

  /// Adds coeff * exp(2 pi i e / L).
  void add_exponent(std::int64_t e, std::int64_t coeff) {
    raw_[static_cast<std::size_t>(floor_mod(e, level_))] += coeff;
    reduced_ = false;
  }

  /// Adds coeff * r; the order of r must divide L.
  void add_root(const RootOfUnity& r, std::int64_t coeff = 1) { add_exponent(exponent_of(r, level_), coeff); }

  static std::int64_t exponent_of(const RootOfUnity& r, std::int64_t level) {
    const std::int64_t den = to_int64(r.denominator());
    if (level % den != 0)
      throw std::domain_error("root of order " + std::to_string(den) + " outside mu_" + std::to_string(level));
    return to_int64(r.numerator()) * (level / den);
  }

  void add(const CycloValue& o, std::int64_t scale = 1) {
    for (std::size_t i = 0; i < raw_.size(); ++i) raw_[i] += scale * o.raw_[i];
    reduced_ = false;
  }

  /// Canonical coordinates modulo Phi_L.
  const Poly& canonical() const {
    if (!reduced_) {
      const Poly& phi = cyclotomic_polynomial(level_);
      Poly v = raw_;
      const std::size_t deg = phi.size() - 1;
      for (std::size_t i = v.size(); i-- > deg;) {
        const std::int64_t c = v[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phi[j];
      }
      v.resize(deg);
      canon_ = std::move(v);
      reduced_ = true;
    }
    return canon_;
  }

  bool is_zero() const {
    for (auto c : canonical())
      if (c != 0) return false;
    return true;
  }

  /// The value as an integer, if it is rational.
  std::optional<std::int64_t> as_integer() const {
    const Poly& c = canonical();
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return std::nullopt;
    return c.empty() ? 0 : c[0];
  }

  friend bool operator==(const CycloValue& a, const CycloValue& b) {
    return a.level_ == b.level_ && a.canonical() == b.canonical();
  }

  std::string to_string() const {
    std::string s;
    const Poly& c = canonical();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += std::to_string(c[i]) + (i ? "*z^" + std::to_string(i) : "");
    }
    return (s.empty() ? "0" : s) + " (z = e^{2 pi i/" + std::to_string(level_) + "})";
  }

 private:
  std::int64_t level_ = 1;
  Poly raw_{0};
  mutable Poly canon_;
  mutable bool reduced_ = false;
};

}  // namespace quatmodp::oracle
