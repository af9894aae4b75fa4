/**
 * @file cli.hpp
 * @brief Subcommand dispatch for the quatmodp tool. Exit codes: 0 ok, 1 verification failure, 2 usage error.
 */
#pragma once

#include "quatmodp/serialize.hpp"
#include "quatmodp/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace quatmodp::cli {

struct Config {
  std::int64_t p = 0, f = 1, q = 0;
  std::string ext = "unram";
  std::int64_t level = -1, n = -1;
  std::string chi, twist, delta_ram, central, det, eta;
  std::string side = "D";
  std::string wild_kind = "imprimitive";
  bool wild = false;
  bool sweep = false;
  std::string suite = "all";
  std::string format;
  std::int64_t max_n = 4, max_order = 4;
  std::int64_t budget = oracle::BrauerOracle::kDefaultBudget;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FieldParams field_of(const Config& c) {
  if (c.q > 0) {
    FieldParams fp = FieldParams::from_q(c.q);
    if (c.p > 0 && c.p != fp.p) throw UsageError("--q and --p disagree");
    return fp;
  }
  if (c.p <= 0) throw UsageError("give --p (and --f) or --q");
  return FieldParams::make(c.p, c.f);
}

inline TameChar parse_char(const FieldParams& fp, CharGroup g, const std::string& s, std::optional<std::int64_t> level) {
  const auto [e, w] = parse_char_spec(s);
  return level ? TameChar::zero(fp, g, e, w, *level) : TameChar::modp(fp, g, e, w);
}

inline AdmissiblePair pair_of(const Config& c, const FieldParams& fp) {
  if (c.chi.empty()) throw UsageError("--chi is required");
  const ExtKind ext = ext_kind_from_string(c.ext);
  std::int64_t level = c.level;
  if (c.n >= 0) {
    const std::int64_t from_n = ext == ExtKind::Unramified ? c.n / 2 : c.n;
    if (ext == ExtKind::Unramified && c.n % 2) throw UsageError("unramified pairs have even n");
    if (level >= 0 && level != from_n) throw UsageError("--level and --n disagree");
    level = from_n;
  }
  if (level < 0) throw UsageError("give --level (of chi) or --n (of Pi)");
  const CharGroup g = ext == ExtKind::Unramified ? CharGroup::Eunram : CharGroup::Eram;
  return AdmissiblePair(ext, parse_char(fp, g, c.chi, level));
}

inline std::optional<TameChar> twist_of(const Config& c, const FieldParams& fp) {
  if (c.twist.empty()) return std::nullopt;
  return parse_char(fp, CharGroup::Fmult, c.twist, 0);
}

inline WildGaloisInput wild_galois_of(const Config& c, const FieldParams& fp) {
  if (c.det.empty()) throw UsageError("--det is required with --wild");
  WildGaloisInput in{wild_kind_from_string(c.wild_kind), fp, parse_char(fp, CharGroup::Fmult, c.det, 0), std::nullopt};
  if (!c.eta.empty()) in.eta = parse_char(fp, CharGroup::Fmult, c.eta, 0);
  return in;
}

inline void emit_multiset(std::ostream& out, const RepMultiset& m, const std::string& format) {
  if (format == "pretty") {
    for (const auto& [l, k] : m.entries()) out << k << " x " << l.to_string() << "\n";
    if (!m.nonsplit().empty()) out << "(non-split extension)\n";
  } else if (format == "csv") {
    out << "kind,exp,unif_val,mult\n";
    for (const auto& [l, k] : m.entries())
      out << (l.is_one_dim() ? "chr" : "ind") << "," << l.character().residue_exp() << ","
          << l.character().unif_val().to_string() << "," << k << "\n";
  } else {
    out << to_json(m).dump(2) << "\n";
  }
}

inline int cmd_classify(const Config& c, std::ostream& out) {
  const FieldParams fp = field_of(c);
  const Side side = side_from_string(c.side);
  std::vector<ModPIrrep> labels;
  std::int64_t regular_classes = 0;
  for (std::int64_t a = 0; a < fp.units_E(); ++a) {
    const TameChar probe = TameChar::modp(fp, CharGroup::Eunram, a, RootOfUnity{});
    if (!is_regular(probe) || canonical_exponent(fp, a) != a) continue;
    ++regular_classes;
  }
  const auto values = modp_values_up_to_order(fp, c.max_order);
  for (std::int64_t a = 0; a < fp.units_E(); ++a)
    for (const auto& w : values) {
      const TameChar xi = TameChar::modp(fp, CharGroup::Eunram, a, w);
      if (is_regular(xi) && canonical_exponent(fp, a) == a) labels.push_back(ModPIrrep::two_dim(side, xi));
    }
  const std::size_t n_two = labels.size();
  for (std::int64_t b = 0; b < fp.units_F(); ++b)
    for (const auto& w : values) labels.push_back(ModPIrrep::one_dim(side, TameChar::modp(fp, CharGroup::Fmult, b, w)));

  if (c.format == "pretty") {
    out << n_two << " two-dimensional, " << labels.size() - n_two << " one-dimensional (" << regular_classes
        << " regular exponent classes)\n";
    for (const auto& l : labels) out << l.to_string() << "\n";
  } else if (c.format == "csv") {
    out << "kind,exp,unif_val\n";
    for (const auto& l : labels)
      out << (l.is_one_dim() ? "chr" : "ind") << "," << l.character().residue_exp() << ","
          << l.character().unif_val().to_string() << "\n";
  } else {
    json arr = json::array();
    for (const auto& l : labels) arr.push_back(to_json(l));
    json j = {{"field", to_json(fp)},
              {"side", to_string(side)},
              {"max_order", c.max_order},
              {"regular_exponent_classes", regular_classes},
              {"two_dim", n_two},
              {"one_dim", labels.size() - n_two},
              {"labels", arr}};
    out << j.dump(2) << "\n";
  }
  return 0;
}

inline int cmd_reduce(const Config& c, std::ostream& out, bool d_side) {
  const FieldParams fp = field_of(c);
  RepMultiset m;
  if (c.wild) {
    if (d_side) {
      if (c.central.empty()) throw UsageError("--central is required with --wild");
      if (c.n < 0) throw UsageError("--n is required with --wild");
      m = reduce_pi_wild({fp, c.n, parse_char(fp, CharGroup::Fmult, c.central, 0), std::nullopt});
    } else {
      m = reduce_r_wild(wild_galois_of(c, fp));
    }
  } else {
    const auto pair = pair_of(c, fp);
    m = d_side ? reduce_pi(pair, twist_of(c, fp)) : reduce_r(pair, twist_of(c, fp));
  }
  emit_multiset(out, m, c.format);
  return 0;
}

inline int cmd_correspond(const Config& c, std::ostream& out) {
  const FieldParams fp = field_of(c);
  if (c.chi.empty()) throw UsageError("--chi is required");
  const TameChar xi = parse_char(fp, CharGroup::Eunram, c.chi, std::nullopt);
  const auto rho = ModPIrrep::two_dim(Side::W, xi);
  const auto pi = modp_correspondence(rho);
  if (c.format == "pretty") {
    out << rho.to_string() << " -> " << pi.to_string() << "\n";
  } else if (c.format == "csv") {
    out << "rho,pi\n" << short_form(rho) << "," << short_form(pi) << "\n";
  } else {
    out << json({{"rho", to_json(rho)}, {"pi", to_json(pi)}}).dump(2) << "\n";
  }
  return 0;
}

inline ComparisonReport report_of(const Config& c, const FieldParams& fp) {
  if (c.wild) {
    if (c.n < 0) throw UsageError("--n is required with --wild");
    return compare_wild(wild_galois_of(c, fp), c.n);
  }
  const auto pair = pair_of(c, fp);
  std::optional<RootOfUnity> choice;
  if (pair.ext() == ExtKind::RamifiedTame && pair.level() > 0) {
    if (c.delta_ram.empty()) throw UsageError("--delta-ram is required for ramified pairs");
    choice = RootOfUnity::parse(c.delta_ram);
  }
  return compare_higher(pair, choice);
}

inline int cmd_compare(const Config& c, std::ostream& out) {
  const FieldParams fp = field_of(c);
  const auto r = report_of(c, fp);
  if (c.format == "pretty") {
    out << "case " << to_string(r.case_tag) << ", n = " << r.n << "\n";
    out << "r_red:  " << short_form(r.r_red) << "\n";
    out << "pi_red: " << short_form(r.pi_red) << "\n";
    out << "image:  " << (r.image ? short_form(*r.image) : "-") << " (mult " << r.image_mult << ")\n";
    for (const auto& a : r.assertions)
      out << (a.ok ? "  ok   " : "  FAIL ") << a.name << (a.detail.empty() ? "" : ": " + a.detail) << "\n";
  } else {
    out << to_json(r).dump(2) << "\n";
  }
  return 0;
}

inline void table_row(std::ostream& out, const ComparisonReport& r, const std::optional<RootOfUnity>& choice) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  const auto& chi = r.pair->chi();
  out << to_string(r.pair->ext()) << "," << r.pair->level() << "," << chi.residue_exp() << ","
      << chi.unif_val().to_string() << "," << to_string(r.case_tag) << "," << quote(short_form(r.r_red)) << ","
      << quote(short_form(r.pi_red)) << "," << quote(r.image ? short_form(*r.image) : "") << ","
      << (r.occurs ? "true" : "false") << "," << quote(r.selector.label ? short_form(*r.selector.label) : "") << ","
      << (r.selector.unique ? "true" : "false") << "," << (choice ? choice->to_string() : "") << "\n";
}

inline int cmd_table(const Config& c, std::ostream& out) {
  const FieldParams fp = field_of(c);
  out << "ext,level,chi_exp,chi_w,case_tag,r_red,pi_red,image,occurs,selector,selector_unique,delta_ram\n";
  if (!c.sweep) {
    const auto r = report_of(c, fp);
    if (!r.pair) throw UsageError("table rows need a tame pair");
    table_row(out, r, r.ram_choice);
    return 0;
  }
  for (std::int64_t n = 0; n <= c.max_n; ++n)
    for (const auto& pair : tame_pairs_at_n(fp, n, c.max_order)) {
      if (pair.ext() == ExtKind::Unramified) {
        table_row(out, compare_higher(pair), std::nullopt);
      } else {
        for (const auto& d : jl_twist_choices(fp)) table_row(out, compare_higher(pair, d), d);
      }
    }
  return 0;
}

inline int cmd_verify(const Config& c, std::ostream& out) {
  const FieldParams fp = field_of(c);
  const std::set<std::string> known = {"all", "cosets", "reductions", "brauer", "weil", "level-zero", "compare"};
  if (!known.count(c.suite)) throw UsageError("unknown suite '" + c.suite + "'");
  auto want = [&](const char* s) { return c.suite == "all" || c.suite == s; };
  std::vector<SuiteResult> results;
  if (want("cosets") && c.max_n >= 1) {
    auto [a, b] = suite_cosets(fp, c.max_n);
    results.push_back(a);
    results.push_back(b);
  }
  if (want("reductions")) {
    auto [a, b] = suite_reductions(fp, c.max_n, c.max_order);
    results.push_back(a);
    results.push_back(b);
  }
  if (want("brauer")) results.push_back(suite_brauer(fp, c.max_n, c.max_order, c.budget));
  if (want("weil")) results.push_back(suite_weil(fp, c.max_order));
  if (want("level-zero")) results.push_back(suite_level_zero(fp, c.max_order));
  if (want("compare")) {
    auto [a, b] = suite_compare(fp, 1, c.max_n, c.max_order);
    results.push_back(a);
    results.push_back(b);
  }
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    json fails = json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) fails.push_back(r.failures[i]);
    arr.push_back({{"suite", r.name},
                   {"checked", r.checked},
                   {"failed", r.failures.size()},
                   {"ok", r.ok()},
                   {"failures", fails}});
  }
  if (c.format == "pretty") {
    for (const auto& r : results) {
      out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked - static_cast<std::int64_t>(r.failures.size())
          << "/" << r.checked << ")\n";
      for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) out << "    " << r.failures[i] << "\n";
    }
  } else {
    out << json({{"field", to_json(fp)}, {"max_n", c.max_n}, {"max_order", c.max_order}, {"ok", ok}, {"suites", arr}})
               .dump(2)
        << "\n";
  }
  return ok ? 0 : 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Mod p representations of quaternion division algebras and Weil groups"};
  app.require_subcommand(1);
  Config c;

  auto field_opts = [&](CLI::App* s) {
    s->add_option("--p", c.p, "residue characteristic");
    s->add_option("--f", c.f, "residue degree, q = p^f");
    s->add_option("--q", c.q, "residue field size");
    s->add_option("--format", c.format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto pair_opts = [&](CLI::App* s) {
    s->add_option("--ext", c.ext, "unram | ram");
    s->add_option("--level", c.level, "level of chi");
    s->add_option("--n", c.n, "level of Pi (2 level for unram, level for ram)");
    s->add_option("--chi", c.chi, "character exp:a/n");
  };
  auto wild_opts = [&](CLI::App* s) {
    s->add_flag("--wild", c.wild, "p = 2 data not arising from admissible pairs");
    s->add_option("--wild-kind", c.wild_kind, "imprimitive | tetrahedral | octahedral");
    s->add_option("--det", c.det, "determinant character of F^x, exp:a/n");
    s->add_option("--eta", c.eta, "order-3 character of F^x (tetrahedral)");
  };

  auto* classify = app.add_subcommand("classify", "list mod p irreducibles");
  field_opts(classify);
  classify->add_option("--side", c.side, "D | W");
  classify->add_option("--max-order", c.max_order, "bound on the order of the uniformizer value");

  auto* rpi = app.add_subcommand("reduce-pi", "reduction of Pi_chi");
  field_opts(rpi);
  pair_opts(rpi);
  rpi->add_option("--twist", c.twist, "character of F^x composed with Nrd, exp:a/n");
  rpi->add_flag("--wild", c.wild, "p = 2, n odd, from the central character");
  rpi->add_option("--central", c.central, "central character exp:a/n (wild)");

  auto* rr = app.add_subcommand("reduce-r", "reduction of R_chi");
  field_opts(rr);
  pair_opts(rr);
  rr->add_option("--twist", c.twist, "character of F^x through the Artin map, exp:a/n");
  wild_opts(rr);

  auto* corr = app.add_subcommand("correspond", "mod p correspondence rho_xi -> pi_{delta xi}");
  field_opts(corr);
  corr->add_option("--chi", c.chi, "mod p character xi of E0^x, exp:a/n");

  auto* cmp = app.add_subcommand("compare", "compare reductions across the correspondence");
  field_opts(cmp);
  pair_opts(cmp);
  cmp->add_option("--delta-ram", c.delta_ram, "value of the twist at varpi_E (ramified)");
  wild_opts(cmp);

  auto* table = app.add_subcommand("table", "CSV of comparison rows");
  field_opts(table);
  pair_opts(table);
  table->add_option("--delta-ram", c.delta_ram, "value of the twist at varpi_E (ramified)");
  table->add_flag("--sweep", c.sweep, "all tame data up to --max-n");
  table->add_option("--max-n", c.max_n, "largest level n");
  table->add_option("--max-order", c.max_order, "bound on the order of chi(varpi)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  field_opts(verify);
  verify->add_option("--max-n", c.max_n, "largest level n");
  verify->add_option("--max-order", c.max_order, "bound on the order of chi(varpi)");
  verify->add_option("--suite", c.suite, "cosets | reductions | brauer | weil | level-zero | compare | all");
  verify->add_option("--budget", c.budget, "largest finite group the Brauer oracle may enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*classify) return cmd_classify(c, out);
    if (*rpi) return cmd_reduce(c, out, true);
    if (*rr) return cmd_reduce(c, out, false);
    if (*corr) return cmd_correspond(c, out);
    if (*cmp) return cmd_compare(c, out);
    if (*table) return cmd_table(c, out);
    if (*verify) return cmd_verify(c, out);
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and friends: precondition violations
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"quatmodp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace quatmodp::cli
