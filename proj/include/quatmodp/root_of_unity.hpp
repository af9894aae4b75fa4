/**
 * @file root_of_unity.hpp
 * @brief Roots of unity in characteristic zero, written additively as Q/Z.
 *
 * A root of unity exp(2 pi i a/n) is stored as the reduced fraction a/n with
 * 0 <= a < n. The identity is 0/1. Denominators are arbitrary precision.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quatmodp {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt floor_mod(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

class RootOfUnity {
 public:
  RootOfUnity() : num_(0), den_(1) {}

  RootOfUnity(BigInt num, BigInt den) {
    if (den <= 0) throw std::invalid_argument("root of unity: denominator must be positive");
    num = floor_mod(num, den);
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g == 0) g = den;
    num_ = num / g;
    den_ = den / g;
  }

  RootOfUnity(std::int64_t num, std::int64_t den) : RootOfUnity(BigInt(num), BigInt(den)) {}

  static RootOfUnity identity() { return {}; }

  /// Parses "a/n"; a bare integer is read as a/1.
  static RootOfUnity parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return RootOfUnity(BigInt(std::string(s)), BigInt(1));
      return RootOfUnity(BigInt(std::string(s.substr(0, slash))),
                         BigInt(std::string(s.substr(slash + 1))));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("root of unity: cannot parse '" + std::string(s) + "'");
    }
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  const BigInt& order() const { return den_; }
  bool is_identity() const { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& o) const {
    return RootOfUnity(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }

  RootOfUnity pow(const BigInt& k) const { return RootOfUnity(num_ * k, den_); }
  RootOfUnity pow(std::int64_t k) const { return pow(BigInt(k)); }
  RootOfUnity inverse() const { return RootOfUnity(-num_, den_); }

  /// Prime-to-p component under mu = mu_{n'} x mu_{p^k}.
  RootOfUnity reduce_mod_p(const BigInt& p) const {
    BigInt pk = 1, rest = den_;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    if (rest == 1) return {};
    // e = 1 mod rest, e = 0 mod pk
    BigInt e = pk * inverse_mod(pk % rest, rest);
    return RootOfUnity(num_ * (e / pk), rest);
  }

  bool has_order_prime_to(const BigInt& p) const { return den_ % p != 0; }

  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

  /// Orders by the value a/n in [0, 1).
  friend std::strong_ordering operator<=>(const RootOfUnity& x, const RootOfUnity& y) {
    BigInt l = x.num_ * y.den_, r = y.num_ * x.den_;
    if (l != r) return l < r ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static BigInt inverse_mod(BigInt a, const BigInt& m) {
    if (m == 1) return 0;
    BigInt old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
      BigInt qt = old_r / r;
      BigInt t = old_r - qt * r;
      old_r = r;
      r = t;
      t = old_s - qt * s;
      old_s = s;
      s = t;
    }
    if (old_r != 1) throw std::logic_error("inverse_mod: not invertible");
    return floor_mod(old_s, m);
  }

  BigInt num_;
  BigInt den_;
};

inline RootOfUnity mul(const RootOfUnity& x, const RootOfUnity& y) { return x * y; }
inline RootOfUnity pow(const RootOfUnity& x, std::int64_t k) { return x.pow(k); }
inline RootOfUnity reduce_mod_p(const RootOfUnity& x, std::int64_t p) { return x.reduce_mod_p(p); }

/// The element of order dividing n given by exponent k, i.e. k/n.
inline RootOfUnity root(std::int64_t k, std::int64_t n) { return RootOfUnity(k, n); }

/// Both solutions r of r^2 = x.
inline std::vector<RootOfUnity> square_roots(const RootOfUnity& x) {
  BigInt d = 2 * x.denominator();
  return {RootOfUnity(x.numerator(), d), RootOfUnity(x.numerator() + x.denominator(), d)};
}

/// Square roots of x whose order is prime to p. For p = 2 and x of odd order
/// there is exactly one.
inline std::vector<RootOfUnity> square_roots_prime_to(const RootOfUnity& x, std::int64_t p) {
  std::vector<RootOfUnity> out;
  for (auto& r : square_roots(x))
    if (r.has_order_prime_to(p)) out.push_back(r);
  return out;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace quatmodp
