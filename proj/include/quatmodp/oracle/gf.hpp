/**
 * @file gf.hpp
 * @brief Table-driven arithmetic in GF(q^2).
 *
 * Elements are integers in [0, q^2) read as base-p coefficient vectors over a
 * primitive polynomial; 0 is zero and 1 is one. The root x of the polynomial is
 * the fixed generator zeta of GF(q^2)^x.
 */
#pragma once

#include "quatmodp/tame_chars.hpp"

#include <vector>

namespace quatmodp::oracle {

class GFq2 {
 public:
  explicit GFq2(const FieldParams& fp) : fp_(fp), d_(2 * fp.f), size_(static_cast<int>(fp.q * fp.q)) {
    find_primitive();
    add_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b) add_[a * size_ + b] = digit_add(a, b);
    neg_.resize(size_);
    for (int a = 0; a < size_; ++a) neg_[a] = digit_neg(a);
  }

  const FieldParams& params() const { return fp_; }
  int size() const { return size_; }
  int order() const { return size_ - 1; }

  int add(int a, int b) const { return add_[a * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    int e = log_[a] + log_[b];
    return exp_[e >= order() ? e - order() : e];
  }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    return exp_[(order() - log_[a]) % order()];
  }
  int pow(int a, std::int64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[floor_mod(log_[a] * e, static_cast<std::int64_t>(order()))];
  }
  /// a^{q^k}; only k mod 2 matters.
  int frob(int a, int k) const { return (k & 1) ? pow(a, fp_.q) : a; }

  int generator() const { return exp_[1 % order()]; }
  int exp(std::int64_t i) const { return exp_[floor_mod(i, static_cast<std::int64_t>(order()))]; }
  int log(int a) const {
    if (a == 0) throw std::domain_error("GF: log of zero");
    return log_[a];
  }
  bool in_base_field(int a) const { return frob(a, 1) == a; }

  /// An F_p-basis of GF(q^2).
  std::vector<int> additive_basis() const {
    std::vector<int> b;
    for (int i = 0, v = 1; i < d_; ++i, v *= static_cast<int>(fp_.p)) b.push_back(v);
    return b;
  }

 private:
  int digit_add(int a, int b) const {
    int r = 0, scale = 1;
    const int p = static_cast<int>(fp_.p);
    for (int i = 0; i < d_; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  }
  int digit_neg(int a) const {
    int r = 0, scale = 1;
    const int p = static_cast<int>(fp_.p);
    for (int i = 0; i < d_; ++i) {
      r += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return r;
  }

  // multiply by x modulo x^d - sum c_i x^i, coefficients packed base p
  int times_x(int a, const std::vector<int>& red) const {
    const int p = static_cast<int>(fp_.p);
    std::vector<int> c(d_ + 1, 0);
    for (int i = 0; i < d_; ++i) {
      c[i + 1] = a % p;
      a /= p;
    }
    const int top = c[d_];
    for (int i = 0; i < d_; ++i) c[i] = (c[i] + top * red[i]) % p;
    int r = 0;
    for (int i = d_ - 1; i >= 0; --i) r = r * p + c[i];
    return r;
  }

  void find_primitive() {
    const int p = static_cast<int>(fp_.p);
    int combos = 1;
    for (int i = 0; i < d_; ++i) combos *= p;
    for (int code = 0; code < combos; ++code) {
      std::vector<int> red(d_);
      for (int i = 0, c = code; i < d_; ++i, c /= p) red[i] = c % p;
      if (red[0] == 0) continue;
      exp_.assign(order(), 0);
      log_.assign(size_, -1);
      int v = 1;
      bool ok = true;
      for (int i = 0; i < order(); ++i) {
        if (log_[v] != -1) {
          ok = false;
          break;
        }
        exp_[i] = v;
        log_[v] = i;
        v = times_x(v, red);
      }
      if (ok && v == 1) return;
    }
    throw std::logic_error("GF: no primitive polynomial found");
  }

  FieldParams fp_;
  int d_;
  int size_;
  std::vector<int> exp_, log_, add_, neg_;
};

}  // namespace quatmodp::oracle
