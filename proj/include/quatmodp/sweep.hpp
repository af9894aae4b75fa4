/**
 * @file sweep.hpp
 * @brief Enumerations of tame data and the verification suites run by `quatmodp verify`
 *        and the acceptance driver.
 */
#pragma once

#include "quatmodp/compare.hpp"
#include "quatmodp/oracle/brauer.hpp"
#include "quatmodp/oracle/cosets.hpp"
#include "quatmodp/oracle/weil.hpp"

#include <tuple>

namespace quatmodp {

/// All roots of unity of order <= max_order.
inline std::vector<RootOfUnity> roots_up_to_order(std::int64_t max_order) {
  std::set<RootOfUnity> out;
  for (std::int64_t n = 1; n <= max_order; ++n)
    for (std::int64_t a = 0; a < n; ++a) out.insert(root(a, n));
  return {out.begin(), out.end()};
}

/// Minimal tame pairs of the given extension and character level, uniformizer values of order <= max_order.
/// Invalid data (irregular at level zero, even ramified level) are skipped.
inline std::vector<AdmissiblePair> tame_pairs(const FieldParams& fp, ExtKind ext, std::int64_t level,
                                              std::int64_t max_order) {
  std::vector<AdmissiblePair> out;
  const bool unram = ext == ExtKind::Unramified;
  if (!unram && (!fp.odd() || level % 2 == 0)) return out;
  const CharGroup g = unram ? CharGroup::Eunram : CharGroup::Eram;
  const std::int64_t mod = unram ? fp.units_E() : fp.units_F();
  for (std::int64_t a = 0; a < mod; ++a)
    for (const auto& w : roots_up_to_order(max_order)) {
      const TameChar chi = TameChar::zero(fp, g, a, w, level);
      if (level == 0 && !is_regular(chi)) continue;
      out.emplace_back(ext, chi);
    }
  return out;
}

/// Pairs whose representation of D^x has level n.
inline std::vector<AdmissiblePair> tame_pairs_at_n(const FieldParams& fp, std::int64_t n, std::int64_t max_order) {
  if (n % 2 == 0) return tame_pairs(fp, ExtKind::Unramified, n / 2, max_order);
  return tame_pairs(fp, ExtKind::RamifiedTame, n, max_order);
}

struct SuiteResult {
  std::string name;
  std::int64_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

inline std::string describe(const AdmissiblePair& pair) {
  return "q=" + std::to_string(pair.params().q) + " " + to_string(pair.ext()) + " n=" + std::to_string(pair.n()) +
         " chi=" + std::to_string(pair.chi().residue_exp()) + ":" + pair.chi().unif_val().to_string();
}

/// Coset counts against the closed forms (where they apply) and the free-action claim.
/// Unramified levels are even, ramified levels odd.
inline std::pair<SuiteResult, SuiteResult> suite_cosets(const FieldParams& fp, std::int64_t max_n) {
  SuiteResult counts{"cosets"}, free{"free-action"};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    std::vector<ExtKind> exts;
    if (n % 2 == 0) exts.push_back(ExtKind::Unramified);
    if (n % 2 == 1 && fp.odd()) exts.push_back(ExtKind::RamifiedTame);
    for (auto ext : exts) {
      const auto cs = oracle::enumerate_coset_space(fp, ext, n);
      const std::string tag = "q=" + std::to_string(fp.q) + " " + to_string(ext) + " n=" + std::to_string(n);
      counts.record(cs.counts_match(), tag + ": " + std::to_string(cs.cosets) + "/" +
                                           std::to_string(cs.double_cosets) + " vs " +
                                           std::to_string(cs.expected_cosets) + "/" +
                                           std::to_string(cs.expected_double_cosets));
      free.record(cs.free_action(), tag + ": " + std::to_string(cs.fixed_nonidentity) + " fixed non-identity cosets");
    }
  }
  return {counts, free};
}

/// Dimension and central character of reduce_pi.
inline std::pair<SuiteResult, SuiteResult> suite_reductions(const FieldParams& fp, std::int64_t max_n,
                                                            std::int64_t max_order) {
  SuiteResult dim{"dimension"}, central{"central-character"};
  for (std::int64_t n = 0; n <= max_n; ++n)
    for (const auto& pair : tame_pairs_at_n(fp, n, max_order)) {
      const auto red = reduce_pi(pair);
      dim.record(red.total_dimension() == dim_pi(pair), describe(pair));
      const TameChar omega = restrict_to_F(reduce_char(pair.chi()));
      bool ok = true;
      for (const auto& [l, k] : red.entries()) ok = ok && l.central_character() == omega;
      central.record(ok, describe(pair));
    }
  return {dim, central};
}

/// Brauer-character check of reduce_pi, untwisted and twisted by the uniformizer sign, with mutation tests.
inline SuiteResult suite_brauer(const FieldParams& fp, std::int64_t max_n, std::int64_t max_order,
                                std::int64_t budget = oracle::BrauerOracle::kDefaultBudget) {
  SuiteResult res{"brauer"};
  std::map<std::tuple<int, std::int64_t, int>, std::unique_ptr<oracle::BrauerOracle>> cache;
  const TameChar sign = uniformizer_sign_character(fp);
  for (std::int64_t n = 0; n <= max_n; ++n)
    for (const auto& pair : tame_pairs_at_n(fp, n, max_order)) {
      const int M = oracle::required_central_order(pair, sign);
      auto& slot = cache[{static_cast<int>(pair.ext()), n, M}];
      try {
        if (!slot) slot = std::make_unique<oracle::BrauerOracle>(fp, pair.ext(), n, M, budget);
      } catch (const std::length_error& e) {
        res.record(false, describe(pair) + ": " + e.what());
        continue;
      }
      const auto red = reduce_pi(pair);
      const auto v = oracle::oracle_verify_reduction(*slot, pair, red);
      res.record(v.ok, describe(pair) + ": " + v.detail);
      const auto vt = oracle::oracle_verify_reduction(*slot, pair, reduce_pi(pair, sign), sign);
      res.record(vt.ok, describe(pair) + " twisted: " + vt.detail);
      res.record(oracle::mutation_detected(*slot, pair, red), describe(pair) + ": mutation not detected");
    }
  return res;
}

inline SuiteResult suite_weil(const FieldParams& fp, std::int64_t max_order) {
  SuiteResult res{"weil"};
  for (std::int64_t a = 0; a < fp.units_E(); ++a)
    for (const auto& w : modp_values_up_to_order(fp, max_order)) {
      const TameChar xi = TameChar::modp(fp, CharGroup::Eunram, a, w);
      const auto v = oracle::weil_oracle_verify(xi);
      res.record(v.ok, "q=" + std::to_string(fp.q) + " xi=" + std::to_string(a) + ":" + w.to_string() + ": " + v.detail);
    }
  return res;
}

inline SuiteResult suite_level_zero(const FieldParams& fp, std::int64_t max_order) {
  SuiteResult res{"level-zero"};
  for (const auto& pair : tame_pairs(fp, ExtKind::Unramified, 0, max_order)) {
    const auto r = check_level_zero(pair);
    res.record(r.all_ok(), describe(pair));
  }
  return res;
}

/// Assertion batteries of compare_higher, split into selector assertions and the rest.
/// Ramified data run over every admissible twist value at varpi_E.
inline std::pair<SuiteResult, SuiteResult> suite_compare(const FieldParams& fp, std::int64_t min_n, std::int64_t max_n,
                                                         std::int64_t max_order) {
  SuiteResult batt{"assertions"}, sel{"selectors"};
  auto run = [&](const AdmissiblePair& pair, const std::optional<RootOfUnity>& choice) {
    const auto r = compare_higher(pair, choice);
    std::string tag = describe(pair) + (choice ? " delta=" + choice->to_string() : "");
    for (const auto& a : r.assertions) {
      const bool is_sel = a.name.rfind("selector:", 0) == 0;
      (is_sel ? sel : batt).record(a.ok, tag + " [" + to_string(r.case_tag) + "] " + a.name +
                                             (a.detail.empty() ? "" : ": " + a.detail));
    }
  };
  for (std::int64_t n = std::max<std::int64_t>(min_n, 1); n <= max_n; ++n)
    for (const auto& pair : tame_pairs_at_n(fp, n, max_order)) {
      if (pair.ext() == ExtKind::Unramified) {
        run(pair, std::nullopt);
      } else {
        for (const auto& d : jl_twist_choices(fp)) run(pair, d);
      }
    }
  return {batt, sel};
}

}  // namespace quatmodp
