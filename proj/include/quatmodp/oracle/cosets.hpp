/**
 * @file cosets.hpp
 * @brief Orbits on U_D^1 / U_E^1 U_D^c, c = [(n+1)/2], under conjugation by mu_E0
 *        (E0 unramified) or by varpi_E = varpi_D (E tamely ramified).
 */
#pragma once

#include "quatmodp/oracle/twisted_ring.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace quatmodp::oracle {

struct CosetSpace {
  std::int64_t cosets = 0;
  std::int64_t double_cosets = 0;
  /// Non-identity cosets fixed by some element of the acting group outside its kernel.
  std::int64_t fixed_nonidentity = 0;
  std::int64_t expected_cosets = 0;
  std::int64_t expected_double_cosets = 0;
  /// The closed forms are stated for even n (unramified) and odd n (ramified).
  bool lemma_applies = false;
  std::vector<TwistedElem> representatives;
  std::vector<std::int64_t> orbit_of;  // orbit index per coset

  bool counts_match() const { return cosets == expected_cosets && double_cosets == expected_double_cosets; }
  bool free_action() const { return fixed_nonidentity == 0; }
};

inline CosetSpace enumerate_coset_space(const FieldParams& fp, ExtKind ext, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("coset space: n must be at least 1");
  if (ext == ExtKind::RamifiedTame && !fp.odd())
    throw std::invalid_argument("coset space: no tamely ramified quadratic extension for p = 2");
  const bool unram = ext == ExtKind::Unramified;
  const int c = static_cast<int>((n + 1) / 2);
  const GFq2 gf(fp);
  const TwistedRing R(gf, c);
  const std::int64_t q = fp.q;

  // U_D^1 / U_D^c: units with constant term 1, indexed by the tail digits
  const std::int64_t tail = R.unit_count() / gf.order();
  auto decode = [&](std::int64_t t) { return R.decode_unit(t); };
  auto encode = [&](const TwistedElem& u) { return R.encode_unit(u); };  // constant term 1 has log 0

  // U_E^1 modulo U_D^c
  std::vector<TwistedElem> H;
  for (std::int64_t t = 0; t < tail; ++t) {
    const TwistedElem h = decode(t);
    bool in = true;
    for (int i = 1; i < c && in; ++i)
      in = unram ? (i % 2 == 0 || h.c[i] == 0) : gf.in_base_field(h.c[i]);
    if (in) H.push_back(h);
  }

  CosetSpace out;
  std::vector<std::int64_t> coset_of(static_cast<std::size_t>(tail), -1);
  for (std::int64_t t = 0; t < tail; ++t) {
    if (coset_of[t] != -1) continue;
    const TwistedElem u = decode(t);
    for (const auto& h : H) coset_of[encode(R.mul(u, h))] = out.cosets;
    out.representatives.push_back(u);
    ++out.cosets;
  }

  // acting elements: mu_E0 \ mu_F, or varpi_D
  std::vector<std::function<TwistedElem(const TwistedElem&)>> actions;
  if (unram) {
    for (int e = 0; e < gf.order(); ++e) {
      const int z = gf.exp(e);
      if (gf.in_base_field(z)) continue;
      actions.push_back([&R, z](const TwistedElem& u) {
        return R.mul(R.mul(R.constant(z), u), R.constant(R.field().inv(z)));
      });
    }
  } else {
    actions.push_back([&R](const TwistedElem& u) { return R.frob(u, 1); });
  }

  // orbits via union-find over the cosets
  std::vector<std::int64_t> parent(static_cast<std::size_t>(out.cosets));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> fixed(static_cast<std::size_t>(out.cosets), false);
  for (std::int64_t k = 0; k < out.cosets; ++k) {
    for (const auto& act : actions) {
      const std::int64_t img = coset_of[encode(act(out.representatives[k]))];
      if (img == k) fixed[k] = true;
      parent[find(img)] = find(k);
    }
  }
  out.orbit_of.resize(out.cosets);
  std::map<std::int64_t, std::int64_t> roots;
  for (std::int64_t k = 0; k < out.cosets; ++k) {
    const auto r = find(k);
    auto [it, inserted] = roots.emplace(r, static_cast<std::int64_t>(roots.size()));
    out.orbit_of[k] = it->second;
  }
  out.double_cosets = static_cast<std::int64_t>(roots.size());
  const std::int64_t identity = coset_of[0];
  for (std::int64_t k = 0; k < out.cosets; ++k)
    if (fixed[k] && k != identity) ++out.fixed_nonidentity;

  if (unram) {
    std::int64_t N = 1;
    for (std::int64_t i = 0; i < 2 * (n / 4); ++i) N *= q;
    out.expected_cosets = N;
    out.expected_double_cosets = (N - 1) / (q + 1) + 1;
    out.lemma_applies = n % 2 == 0;
  } else {
    std::int64_t N = 1;
    for (std::int64_t i = 0; i < (n - 1) / 2; ++i) N *= q;
    out.expected_cosets = N;
    out.expected_double_cosets = (N - 1) / 2 + 1;
    out.lemma_applies = n % 2 == 1;
  }
  return out;
}

}  // namespace quatmodp::oracle
