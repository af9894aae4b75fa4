/**
 * @file twisted_ring.hpp
 * @brief o_D / q^N = GF(q^2)[varpi]/(varpi^N) with varpi a = a^q varpi, and the finite
 *        quotient D^x / (U_D^N varpi_F^{M Z}).
 */
#pragma once

#include "quatmodp/oracle/gf.hpp"

#include <array>
#include <cstdint>

namespace quatmodp::oracle {

inline constexpr int kMaxLen = 12;

struct TwistedElem {
  std::array<int, kMaxLen> c{};
  friend bool operator==(const TwistedElem&, const TwistedElem&) = default;
};

class TwistedRing {
 public:
  TwistedRing(const GFq2& gf, int length) : gf_(&gf), n_(length) {
    if (length < 1 || length > kMaxLen) throw std::invalid_argument("twisted ring: unsupported truncation length");
    q2_ = gf.size();
    tail_ = 1;
    for (int i = 1; i < n_; ++i) tail_ *= q2_;
  }

  const GFq2& field() const { return *gf_; }
  int length() const { return n_; }

  TwistedElem zero() const { return {}; }
  TwistedElem one() const { return constant(1); }
  TwistedElem constant(int a) const {
    TwistedElem e;
    e.c[0] = a;
    return e;
  }
  TwistedElem monomial(int a, int i) const {
    TwistedElem e;
    if (i < n_) e.c[i] = a;
    return e;
  }

  TwistedElem add(const TwistedElem& a, const TwistedElem& b) const {
    TwistedElem r;
    for (int i = 0; i < n_; ++i) r.c[i] = gf_->add(a.c[i], b.c[i]);
    return r;
  }

  /// (ab)_k = sum_{i+j=k} a_i b_j^{q^i}
  TwistedElem mul(const TwistedElem& a, const TwistedElem& b) const {
    TwistedElem r;
    for (int i = 0; i < n_; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; i + j < n_; ++j) {
        if (b.c[j] == 0) continue;
        r.c[i + j] = gf_->add(r.c[i + j], gf_->mul(a.c[i], gf_->frob(b.c[j], i)));
      }
    }
    return r;
  }

  /// Coefficientwise a -> a^{q^k}, i.e. conjugation by varpi^k.
  TwistedElem frob(const TwistedElem& a, int k) const {
    if ((k & 1) == 0) return a;
    TwistedElem r;
    for (int i = 0; i < n_; ++i) r.c[i] = gf_->frob(a.c[i], 1);
    return r;
  }

  bool is_unit(const TwistedElem& a) const { return a.c[0] != 0; }

  TwistedElem unit_inverse(const TwistedElem& u) const {
    if (!is_unit(u)) throw std::domain_error("twisted ring: not a unit");
    TwistedElem w;
    const int u0inv = gf_->inv(u.c[0]);
    w.c[0] = u0inv;
    for (int k = 1; k < n_; ++k) {
      int s = 0;
      for (int i = 1; i <= k; ++i) s = gf_->add(s, gf_->mul(u.c[i], gf_->frob(w.c[k - i], i)));
      w.c[k] = gf_->mul(u0inv, gf_->neg(s));
    }
    return w;
  }

  std::int64_t unit_count() const { return static_cast<std::int64_t>(gf_->order()) * tail_; }

  std::int64_t encode_unit(const TwistedElem& u) const {
    std::int64_t t = 0;
    for (int i = n_ - 1; i >= 1; --i) t = t * q2_ + u.c[i];
    return static_cast<std::int64_t>(gf_->log(u.c[0])) * tail_ + t;
  }

  TwistedElem decode_unit(std::int64_t idx) const {
    TwistedElem u;
    std::int64_t t = idx % tail_;
    u.c[0] = gf_->exp(idx / tail_);
    for (int i = 1; i < n_; ++i) {
      u.c[i] = static_cast<int>(t % q2_);
      t /= q2_;
    }
    return u;
  }

 private:
  const GFq2* gf_;
  int n_;
  int q2_;
  std::int64_t tail_;
};

/// u varpi_D^k with k mod 2M.
struct GElem {
  TwistedElem u;
  int k = 0;
  friend bool operator==(const GElem&, const GElem&) = default;
};

/// D^x / (U_D^N varpi_F^{M Z}).
class QuotientGroup {
 public:
  QuotientGroup(const GFq2& gf, int N, int M) : ring_(gf, N), M_(M) {
    if (M < 1) throw std::invalid_argument("quotient group: M must be positive");
  }

  const TwistedRing& ring() const { return ring_; }
  const GFq2& field() const { return ring_.field(); }
  int M() const { return M_; }
  int val_mod() const { return 2 * M_; }
  std::int64_t order() const { return ring_.unit_count() * val_mod(); }

  GElem identity() const { return {ring_.one(), 0}; }
  GElem uniformizer() const { return {ring_.one(), 1 % val_mod()}; }

  GElem mul(const GElem& a, const GElem& b) const {
    return {ring_.mul(a.u, ring_.frob(b.u, a.k)), (a.k + b.k) % val_mod()};
  }
  GElem inv(const GElem& a) const {
    const int k = (val_mod() - a.k) % val_mod();
    return {ring_.frob(ring_.unit_inverse(a.u), k), k};
  }
  GElem pow(GElem a, std::int64_t e) const {
    GElem r = identity();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  GElem conj(const GElem& x, const GElem& g) const { return mul(mul(x, g), inv(x)); }

  std::int64_t encode(const GElem& g) const { return g.k * ring_.unit_count() + ring_.encode_unit(g.u); }
  GElem decode(std::int64_t idx) const {
    return {ring_.decode_unit(idx % ring_.unit_count()), static_cast<int>(idx / ring_.unit_count())};
  }

  /// Prime-to-p part of |G|.
  std::int64_t p_prime_order() const {
    std::int64_t m = order();
    while (m % field().params().p == 0) m /= field().params().p;
    return m;
  }
  bool is_p_regular(const GElem& g) const { return pow(g, p_prime_order()) == identity(); }

  /// varpi_D, zeta and 1 + b varpi^i for an F_p-basis b and 1 <= i < N.
  std::vector<GElem> generators() const {
    std::vector<GElem> gens{uniformizer(), {ring_.constant(field().generator()), 0}};
    for (int i = 1; i < ring_.length(); ++i)
      for (int b : field().additive_basis()) gens.push_back({ring_.add(ring_.one(), ring_.monomial(b, i)), 0});
    return gens;
  }

 private:
  TwistedRing ring_;
  int M_;
};

}  // namespace quatmodp::oracle
