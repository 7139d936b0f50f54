#include "cli.hpp"

#include "cherednik/errors.hpp"
#include "cherednik/hcstruct.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/invariants.hpp"
#include "cherednik/membership.hpp"
#include "cherednik/params.hpp"
#include "cherednik/simplicity.hpp"
#include "cherednik/symspaces.hpp"
#include "cherednik/twisted.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace cherednik::cli {

namespace {

using json = nlohmann::json;

constexpr long kMaxCliEll = 20;

json to_json(const Rational& r) { return r.str(); }
json to_json(const Integer& z) { return z.get_str(); }
json to_json(const CyclotomicUnit& u) { return u.str(); }

template <class T>
json to_json(const std::vector<T>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

json witnesses_json(const SimplicityCheck& c, const char* step_name) {
  json a = json::array();
  for (const auto& w : c.witnesses) a.push_back({{"i", w.index}, {step_name, w.step.get_str()}, {"value", w.value.str()}});
  return a;
}

json oracle_json(const OracleVerdict& o) {
  json reports = json::array();
  for (const auto& r : o.reports) {
    json j = {{"tau_index", r.tau_index}, {"e_nonzero", r.e_nonzero}};
    j["dim_L"] = r.dim_L ? json(r.dim_L->get_str()) : json("infinite");
    reports.push_back(j);
  }
  return {{"reports", reports}, {"h_simple", o.h_simple}, {"a_simple", o.a_simple}};
}

json semisimplicity_json(const SemisimplicityVerdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses) w.push_back(x.str());
  return {{"semisimple", v.semisimple}, {"witnesses", w}};
}

json presentation_json(const ArikiKoikePresentation& p) {
  return {{"u", to_json(p.u)}, {"q0", to_json(p.q0)}, {"q1", to_json(p.q1)}, {"normalized_q", to_json(p.normalized_q)}};
}

json certificate_json(const MembershipCertificate& c) {
  json combo = json::array();
  for (const auto& t : c.combination) combo.push_back({{"multiplier", t.multiplier.str()}, {"generator", t.generator}});
  return {{"verdict", to_string(c.verdict)}, {"bound", c.bound_used}, {"combination", combo}, {"text", c.serialize()}};
}

json sym_record_json(const SymPairRecord& r) {
  json mult = json::array();
  for (const auto& m : r.multiplicities)
    mult.push_back({{"class", m.root_class}, {"dim_alpha", m.dim_alpha}, {"dim_2alpha", m.dim_2alpha}, {"k", m.k().str()}});
  const auto cls = classify(r);
  const auto v = verdict(r);
  return {{"label", r.label},
          {"pair", r.pair_description},
          {"weyl_type", r.weyl_type.str()},
          {"multiplicities", mult},
          {"x", to_json(r.table_x)},
          {"y", r.table_y ? to_json(*r.table_y) : json(nullptr)},
          {"table_verdict", r.table_verdict ? "Y" : "N"},
          {"verdict", v.semisimple ? "Y" : "N"},
          {"verdict_source", to_string(v.source)},
          {"ranks_checked", v.ranks_checked},
          {"nice", cls.nice},
          {"integral", cls.integral},
          {"robust", cls.robust}};
}

void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('\n') == std::string::npos) {
      out << path << ": " << s << "\n";
    } else {
      out << path << ":\n";
      std::istringstream is(s);
      std::string line;
      while (std::getline(is, line)) out << "  " << line << "\n";
    }
  } else {
    out << path << ": " << j.dump() << "\n";
  }
}

struct Envelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> warnings;
  int exit_code = kOk;
};

VarsigmaQuiver varsigma_from(const std::string& text, const std::string& inf, std::optional<long> ell) {
  VarsigmaQuiver v(parse_rational_list(text), inf.empty() ? Rational(0) : Rational::parse(inf));
  if (ell && *ell != v.ell())
    throw InvalidArgument("--ell " + std::to_string(*ell) + " does not match " + std::to_string(v.ell()) +
                          " varsigma entries");
  return v;
}

void check_range(long value, long lo, long hi, const std::string& name) {
  if (value < lo || value > hi)
    throw InvalidArgument(name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Cherednik, Hecke and Weyl algebra parameters", "cherednik"};
  app.fallthrough();
  app.require_subcommand(1);

  bool as_json = false;
  std::optional<int> bound;
  std::string table_path;
  app.add_flag("--json", as_json, "Print the output envelope as JSON");
  app.add_option("--bound", bound, "Bernstein degree bound for membership (default deg + 4)");
  app.add_option("--table", table_path, "Symmetric-pair table file");

  Envelope env;
  std::function<void()> action;

  auto tables = [&] { return table_path.empty() ? load_table() : load_table_file(table_path); };

  // Shared option storage.
  std::optional<long> ell;
  long n = 1;
  std::string varsigma, inf, kappa_text, kappa0_text, target, gens_text, subset_text, label;
  std::vector<std::string> weighted;
  std::optional<long> wreath;
  bool oracle = false, example = false, weighted_flag = false;
  long j_index = 0, c_power = 0, sign = 1, vars_opt = 0;
  std::uint64_t sweep = 0, seed = 1;

  // kappa
  auto* kappa_cmd = app.add_subcommand("kappa", "Cherednik parameters from varsigma");
  kappa_cmd->add_option("--ell", ell);
  auto* kappa_n = kappa_cmd->add_option("--n", n);
  kappa_cmd->add_option("--varsigma", varsigma);
  kappa_cmd->add_option("--inf", inf);
  kappa_cmd->add_option("--weighted-line", weighted, "n s1 s2")->expected(3);
  kappa_cmd->callback([&] {
    env.command = "kappa";
    action = [&, kappa_n] {
      if (!weighted.empty()) {
        const long wn = std::stol(weighted[0]);
        check_range(wn, 1, 1000, "n");
        const KappaZl k = kappa_weighted_line(wn, Rational::parse(weighted[1]), Rational::parse(weighted[2]));
        env.inputs = {{"weighted_line", {{"n", wn}, {"s1", weighted[1]}, {"s2", weighted[2]}}}};
        env.result = {{"ell", k.ell()}, {"kappa", to_json(k.kappa)}};
        return;
      }
      if (varsigma.empty()) throw InvalidArgument("kappa needs --varsigma or --weighted-line");
      const VarsigmaQuiver v = varsigma_from(varsigma, inf, ell);
      env.inputs = {{"ell", v.ell()}, {"varsigma", to_json(v.entries)}, {"inf", v.infinity.str()}};
      env.result["chi"] = to_json(chi_from_varsigma(v).entries);
      if (kappa_n->count()) {
        const KappaWreath k = kappa_wreath(v, n);
        env.inputs["n"] = n;
        env.result["kappa00"] = to_json(k.kappa00);
        env.result["kappa01"] = to_json(k.kappa01);
        env.result["kappa1"] = to_json(k.kappa1);
      } else {
        env.result["kappa"] = to_json(kappa_rank1(v).kappa);
      }
    };
  });

  // hecke
  auto* hecke_cmd = app.add_subcommand("hecke", "Hecke parameters and semisimplicity");
  hecke_cmd->add_option("--ell", ell);
  hecke_cmd->add_option("--n", n)->required();
  hecke_cmd->add_option("--varsigma", varsigma)->required();
  hecke_cmd->add_option("--inf", inf);
  hecke_cmd->callback([&] {
    env.command = "hecke";
    action = [&] {
      check_range(n, 1, 1000, "n");
      const VarsigmaQuiver v = varsigma_from(varsigma, inf, ell);
      const auto p = presentation_from_hecke_params(hecke_from_kappa(kappa_wreath(v, n)));
      const auto s = varsigma_zero_structure(v.ell(), n);
      env.inputs = {{"ell", v.ell()}, {"n", n}, {"varsigma", to_json(v.entries)}, {"inf", v.infinity.str()}};
      env.result = presentation_json(p);
      env.result["semisimplicity"] = semisimplicity_json(is_semisimple(p));
      env.result["structure_at_zero"] = {{"truncation_order", s.truncation_order},
                                         {"tensor_factors", s.tensor_factors},
                                         {"symmetric_group_rank", s.symmetric_group_rank},
                                         {"dimension", to_json(s.dimension)}};
    };
  });

  // simple
  auto* simple_cmd = app.add_subcommand("simple", "Simplicity of H and A at kappa or varsigma");
  simple_cmd->add_option("--kappa", kappa_text);
  simple_cmd->add_option("--kappa0", kappa0_text, "k00,k01 for --wreath with --kappa");
  simple_cmd->add_option("--varsigma", varsigma);
  simple_cmd->add_option("--inf", inf);
  simple_cmd->add_option("--wreath", wreath, "n for the wreath product");
  simple_cmd->add_flag("--oracle", oracle, "Also run the standard-module oracle");
  simple_cmd->add_flag("--weighted-line", weighted_flag, "The weights (2,-1) example");
  simple_cmd->add_option("--sweep", sweep, "Oracle agreement on this many random kappa");
  simple_cmd->add_option("--seed", seed);
  simple_cmd->callback([&] {
    env.command = "simple";
    action = [&] {
      if (weighted_flag) {
        const auto r = weighted_line_example();
        env.inputs = {{"weighted_line", true}};
        env.result = {{"left", {{"varsigma", {"-1/3", "-1"}}, {"kappa", to_json(r.kappa_left.kappa)},
                                {"a_simple", r.left_simple}}},
                      {"right", {{"varsigma", {"1/3", "1"}}, {"kappa", to_json(r.kappa_right.kappa)},
                                 {"a_simple", r.right_simple}}}};
        return;
      }
      if (sweep > 0) {
        const auto s = oracle_sweep_parallel(sweep, seed);
        env.inputs = {{"sweep", sweep}, {"seed", seed}};
        env.result = {{"cases", s.cases},         {"h_mismatches", s.h_mismatches}, {"a_mismatches", s.a_mismatches},
                      {"h_simple", s.h_simple},   {"a_simple", s.a_simple},
                      {"h_simple_without_a_simple", s.h_implies_a_failures}};
        return;
      }
      if (kappa_text.empty() == varsigma.empty()) throw InvalidArgument("give exactly one of --kappa and --varsigma");
      KappaZl k;
      if (!kappa_text.empty()) {
        k = KappaZl(parse_rational_list(kappa_text));
        env.inputs["kappa"] = to_json(k.kappa);
      } else {
        const VarsigmaQuiver v = varsigma_from(varsigma, inf, std::nullopt);
        env.inputs["varsigma"] = to_json(v.entries);
        env.inputs["inf"] = v.infinity.str();
        const auto vs = a_simple_varsigma(v);
        env.result["a_simple_varsigma"] = {{"simple", vs.simple}, {"witnesses", witnesses_json(vs, "j")}};
        k = kappa_rank1(v);
        if (wreath) {
          const KappaWreath kw = kappa_wreath(v, *wreath);
          env.result["wreath"] = {{"n", *wreath}, {"kappa00", to_json(kw.kappa00)}, {"kappa01", to_json(kw.kappa01)},
                                  {"a_simple", a_simple_wreath(kw).simple}};
        }
      }
      if (!kappa_text.empty() && wreath) {
        KappaWreath kw;
        kw.n = *wreath;
        kw.kappa1 = k.kappa;
        kw.kappa00 = Rational(1, 2);
        kw.kappa01 = Rational(1, 2);
        if (!kappa0_text.empty()) {
          const auto k0 = parse_rational_list(kappa0_text);
          if (k0.size() != 2) throw InvalidArgument("--kappa0 takes two values");
          kw.kappa00 = k0[0];
          kw.kappa01 = k0[1];
        }
        env.inputs["wreath"] = *wreath;
        env.result["wreath"] = {{"n", *wreath}, {"kappa00", to_json(kw.kappa00)}, {"kappa01", to_json(kw.kappa01)},
                                {"a_simple", a_simple_wreath(kw).simple}};
      }
      const auto h = h_simple_cyclic(k);
      const auto a = a_simple_cyclic(k);
      env.result["kappa"] = to_json(k.kappa);
      env.result["h_simple"] = {{"simple", h.simple}, {"witnesses", witnesses_json(h, "m")}};
      env.result["a_simple"] = {{"simple", a.simple}, {"witnesses", witnesses_json(a, "j")}};
      if (oracle) env.result["oracle"] = oracle_json(standard_module_oracle(k));
    };
  });

  // regular
  auto* regular_cmd = app.add_subcommand("regular", "Is the Hecke algebra at varsigma semisimple");
  regular_cmd->add_option("--ell", ell);
  regular_cmd->add_option("--n", n)->required();
  regular_cmd->add_option("--varsigma", varsigma)->required();
  regular_cmd->add_option("--inf", inf);
  regular_cmd->callback([&] {
    env.command = "regular";
    action = [&] {
      check_range(n, 1, 1000, "n");
      const VarsigmaQuiver v = varsigma_from(varsigma, inf, ell);
      const auto p = presentation_from_hecke_params(hecke_from_kappa(kappa_wreath(v, n)));
      const auto s = is_semisimple(p);
      env.inputs = {{"ell", v.ell()}, {"n", n}, {"varsigma", to_json(v.entries)}, {"inf", v.infinity.str()}};
      env.result = presentation_json(p);
      env.result["regular"] = s.semisimple;
      env.result["semisimplicity"] = semisimplicity_json(s);
    };
  });

  // hc
  auto* hc_cmd = app.add_subcommand("hc", "Harish-Chandra module combinatorics");
  hc_cmd->require_subcommand(1);
  auto* series_cmd = hc_cmd->add_subcommand("series", "Composition series at varsigma = 0");
  series_cmd->add_option("--ell", ell)->required();
  series_cmd->callback([&] {
    env.command = "hc series";
    action = [&] {
      check_range(*ell, 1, kMaxCliEll, "ell");
      json factors = json::array();
      for (const auto& f : composition_multiset(*ell))
        factors.push_back({{"subset", subset_label(f.subset, *ell)}, {"multiplicity", f.multiplicity},
                           {"torsion", f.is_torsion}});
      const auto prof = serial_profile(*ell);
      env.inputs = {{"ell", *ell}};
      env.result = {{"factors", factors},
                    {"total_length", total_length(*ell)},
                    {"torsion_count", torsion_count(*ell)},
                    {"torsion_count_alternative", torsion_count_alternative(*ell)},
                    {"serial_profile",
                     {{"regular_locus_length", prof.regular_locus_length},
                      {"socle", subset_label(prof.socle, *ell)},
                      {"top", subset_label(prof.top, *ell)},
                      {"endomorphism_order", prof.endomorphism_order}}}};
      if (torsion_count(*ell) != torsion_count_alternative(*ell))
        env.warnings.push_back("torsion count l(2^(l-1)-1) = " + std::to_string(torsion_count(*ell)) +
                               " differs from (l-1)2^(l-1) = " + std::to_string(torsion_count_alternative(*ell)));
    };
  });
  auto* decompose_cmd = hc_cmd->add_subcommand("decompose", "Indecomposable summands of G0");
  decompose_cmd->add_option("--ell", ell)->required();
  decompose_cmd->add_option("--n", n)->required();
  decompose_cmd->callback([&] {
    env.command = "hc decompose";
    action = [&] {
      check_range(n, 1, 30, "n");
      check_range(*ell, 1, 1000, "ell");
      json summands = json::array();
      for (const auto& s : decompose_G0(*ell, static_cast<int>(n)))
        summands.push_back({{"partition", partition_label(s.partition)},
                            {"multiplicity", to_json(s.multiplicity)},
                            {"endomorphism_order", s.endomorphism_order}});
      env.inputs = {{"ell", *ell}, {"n", n}};
      env.result = {{"summands", summands}, {"count", summands.size()}};
    };
  });
  auto* localized_cmd = hc_cmd->add_subcommand("localized", "Length of G localized at a stratum");
  localized_cmd->add_option("--ell", ell)->required();
  localized_cmd->add_option("--subset", subset_text, "e.g. 0,2")->required();
  localized_cmd->callback([&] {
    env.command = "hc localized";
    action = [&] {
      check_range(*ell, 1, kMaxCliEll, "ell");
      const SubsetMask J = parse_subset(subset_text, *ell);
      env.inputs = {{"ell", *ell}, {"subset", subset_label(J, *ell)}};
      env.result = {{"length", localized_length(*ell, J)}};
    };
  });
  auto* framed_cmd = hc_cmd->add_subcommand("framed", "Framed quiver verdict");
  framed_cmd->add_option("--ell", ell);
  framed_cmd->add_option("--n", n);
  framed_cmd->add_option("--varsigma", varsigma);
  framed_cmd->add_option("--inf", inf);
  framed_cmd->add_flag("--example", example, "Use s_inf = -1/2, s_i = (i-l)/l + [i=0]");
  framed_cmd->callback([&] {
    env.command = "hc framed";
    action = [&] {
      check_range(n, 1, 1000, "n");
      VarsigmaQuiver v;
      if (example) {
        if (!ell) throw InvalidArgument("--example needs --ell");
        check_range(*ell, 1, 1000, "ell");
        v = framed_example_varsigma(*ell);
      } else {
        if (varsigma.empty()) throw InvalidArgument("framed needs --varsigma or --example");
        v = varsigma_from(varsigma, inf, ell);
      }
      const auto f = framed_quiver_verdict(v, n);
      const auto k = kappa_wreath(v, n);
      env.inputs = {{"ell", v.ell()}, {"n", n}, {"varsigma", to_json(v.entries)}, {"inf", v.infinity.str()},
                    {"example", example}};
      env.result = {{"chi", to_json(f.chi.entries)},
                    {"chi_dot_delta", to_json(f.chi_dot_delta)},
                    {"semisimple", f.semisimple},
                    {"regular_hecke", f.regular_hecke},
                    {"kappa00", to_json(k.kappa00)},
                    {"kappa01", to_json(k.kappa01)},
                    {"kappa1", to_json(k.kappa1)}};
    };
  });

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl algebra verification");
  weyl_cmd->require_subcommand(1);
  auto* s2_cmd = weyl_cmd->add_subcommand("verify-section2", "Ideal lattice of D/(nabla, Delta)");
  s2_cmd->callback([&] {
    env.command = "weyl verify-section2";
    action = [&] {
      const int b = bound.value_or(8);
      const auto rep = verify_section2_lattice(b);
      json lines = json::array();
      for (const auto& l : rep.lines)
        lines.push_back({{"label", l.label}, {"ideal", l.ideal}, {"target", l.target.str()},
                         {"expect_member", l.expect_member}, {"ok", l.ok}, {"certificate", certificate_json(l.cert)}});
      env.inputs = {{"bound", b}};
      env.result = {{"lines", lines}, {"ok", rep.ok}};
      if (!rep.ok) env.exit_code = kInconclusive;
    };
  });
  auto* casimir_cmd = weyl_cmd->add_subcommand("casimir", "Omega + 1 in D nabla");
  casimir_cmd->callback([&] {
    env.command = "weyl casimir";
    action = [&] {
      const int b = bound.value_or(8);
      const auto rep = casimir_check(b);
      env.inputs = {{"bound", b}};
      env.result = {{"E", rep.E.str()},
                    {"F", rep.F.str()},
                    {"H", rep.H.str()},
                    {"Omega", rep.omega.str()},
                    {"HE_relation", rep.he_relation},
                    {"HF_relation", rep.hf_relation},
                    {"omega_plus_one", certificate_json(rep.omega_plus_one)},
                    {"omega_plus_one_replays", rep.omega_plus_one_replays},
                    {"omega_alone", certificate_json(rep.omega_alone)},
                    {"ok", rep.ok}};
      if (!rep.ok) env.exit_code = kInconclusive;
    };
  });
  auto* radial_cmd = weyl_cmd->add_subcommand("radial", "Delta on z^j delta^varsigma");
  radial_cmd->add_option("--ell", ell);
  radial_cmd->add_option("--varsigma", varsigma)->required();
  radial_cmd->add_option("--j", j_index)->required();
  radial_cmd->callback([&] {
    env.command = "weyl radial";
    action = [&] {
      const VarsigmaQuiver v = varsigma_from(varsigma, "", ell);
      check_range(v.ell(), 1, 9, "ell");
      const auto rc = radial_delta_check(v, j_index);
      env.inputs = {{"ell", v.ell()}, {"varsigma", to_json(v.entries)}, {"j", j_index}};
      env.result = {{"expected_coefficient", to_json(rc.expected)}, {"computed", rc.computed.str()}, {"ok", rc.ok}};
    };
  });
  auto* member_cmd = weyl_cmd->add_subcommand("member", "Bounded left-ideal membership");
  member_cmd->add_option("--target", target)->required();
  member_cmd->add_option("--gens", gens_text, "EXPR;EXPR;...")->required();
  member_cmd->add_option("--vars", vars_opt, "Number of variables (default: inferred)");
  member_cmd->callback([&] {
    env.command = "weyl member";
    action = [&] {
      std::vector<std::string> gen_texts;
      std::size_t start = 0;
      while (true) {
        auto pos = gens_text.find(';', start);
        gen_texts.push_back(gens_text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      int k = std::max<int>(static_cast<int>(vars_opt), weyl_vars_needed(target));
      for (const auto& g : gen_texts) k = std::max(k, weyl_vars_needed(g));
      const WeylElement t = parse_weyl(target, k);
      std::vector<WeylElement> gens;
      for (const auto& g : gen_texts) gens.push_back(parse_weyl(g, k));
      const int b = bound.value_or(default_bound(t));
      const auto cert = ideal_member(t, gens, b);
      json gj = json::array();
      for (const auto& g : gens) gj.push_back(g.str());
      env.inputs = {{"target", t.str()}, {"gens", gj}, {"vars", k}, {"bound", b}};
      env.result = certificate_json(cert);
      env.result["replays"] = replays_to(cert, gens, t);
      if (!cert.is_member()) env.exit_code = kInconclusive;
    };
  });

  // symspace
  auto* sym_cmd = app.add_subcommand("symspace", "Symmetric pair table");
  sym_cmd->require_subcommand(1);
  auto* list_cmd = sym_cmd->add_subcommand("list", "All rows with verdicts");
  list_cmd->callback([&] {
    env.command = "symspace list";
    action = [&] {
      json rows = json::array();
      for (const auto& r : tables()) rows.push_back(sym_record_json(r));
      env.inputs = {{"table", table_path.empty() ? "embedded" : table_path}};
      env.result = {{"rows", rows}, {"count", rows.size()}};
    };
  });
  auto* check_cmd = sym_cmd->add_subcommand("check", "One row");
  check_cmd->add_option("label", label)->required();
  check_cmd->callback([&] {
    env.command = "symspace check";
    action = [&] {
      auto rows = tables();
      rows.push_back(diagonal_record());
      auto it = std::find_if(rows.begin(), rows.end(), [&](const SymPairRecord& r) { return r.label == label; });
      if (it == rows.end()) throw InvalidArgument("unknown label '" + label + "'");
      env.inputs = {{"label", label}};
      env.result = sym_record_json(*it);
      env.result["xy_from_k"] = to_json(xy_from_k(*it));
      env.result["agrees_with_table"] = verdict(*it).semisimple == it->table_verdict;
    };
  });
  auto* sslist_cmd = sym_cmd->add_subcommand("semisimple-list", "Pairs with semisimple G0");
  sslist_cmd->callback([&] {
    env.command = "symspace semisimple-list";
    action = [&] {
      env.inputs = {{"table", table_path.empty() ? "embedded" : table_path}};
      env.result = {{"labels", hc_semisimple_list(tables())}};
    };
  });
  auto* dump_cmd = sym_cmd->add_subcommand("dump", "Print the table in its file format");
  dump_cmd->callback([&] {
    env.command = "symspace dump";
    action = [&] {
      env.inputs = {{"table", table_path.empty() ? "embedded" : table_path}};
      env.result = {{"table", dump_table(tables())}};
    };
  });

  // invariants
  auto* inv_cmd = app.add_subcommand("invariants", "Discriminants and semi-invariants");
  inv_cmd->require_subcommand(1);
  auto* delta_cmd = inv_cmd->add_subcommand("delta", "Restricted discriminant");
  delta_cmd->add_option("--ell", ell)->required();
  delta_cmd->add_option("--n", n)->required();
  delta_cmd->callback([&] {
    env.command = "invariants delta";
    action = [&] {
      check_range(*ell, 1, 8, "ell");
      check_range(n, 1, 5, "n");
      const auto d = delta_restricted(*ell, static_cast<int>(n));
      const auto h = discriminant_h(*ell, static_cast<int>(n));
      const auto ratio = proportionality(d, h);
      env.inputs = {{"ell", *ell}, {"n", n}};
      env.result = {{"delta", d.str()},
                    {"degree", d.degree()},
                    {"discriminant_h", h.str()},
                    {"delta_over_h", ratio ? json(ratio->str()) : json(nullptr)}};
      if (!ratio) env.warnings.push_back("delta and the hyperplane discriminant are not proportional");
    };
  });
  auto* factor_cmd = inv_cmd->add_subcommand("factor-check", "delta = delta_0...delta_{l-1} delta_inf on h");
  factor_cmd->add_option("--ell", ell)->required();
  factor_cmd->add_option("--n", n)->required();
  factor_cmd->callback([&] {
    env.command = "invariants factor-check";
    action = [&] {
      check_range(*ell, 1, 8, "ell");
      check_range(n, 1, 5, "n");
      env.inputs = {{"ell", *ell}, {"n", n}};
      env.result = {{"factorization_holds", delta_factorization_check(*ell, static_cast<int>(n))}};
    };
  });
  auto* semiinv_cmd = inv_cmd->add_subcommand("semiinv", "Semi-invariant of a linear character");
  semiinv_cmd->add_option("--ell", ell)->required();
  semiinv_cmd->add_option("--n", n)->required();
  semiinv_cmd->add_option("--c", c_power)->required();
  semiinv_cmd->add_option("--sign", sign)->required();
  semiinv_cmd->callback([&] {
    env.command = "invariants semiinv";
    action = [&] {
      check_range(*ell, 1, 8, "ell");
      check_range(n, 1, 5, "n");
      const WreathCharacter chi(*ell, static_cast<int>(n), c_power, static_cast<int>(sign));
      const auto ex = semiinvariant_exponents(chi);
      env.inputs = {{"ell", *ell}, {"n", n}, {"c", c_power}, {"sign", sign}};
      env.result = {{"coordinate_exponent", ex.coordinate_class ? json(*ex.coordinate_class) : json(nullptr)},
                    {"reflection_exponent", ex.reflection_class ? json(*ex.reflection_class) : json(nullptr)},
                    {"degree", ex.degree},
                    {"h_chi", semiinvariant(chi).str()},
                    {"semi_invariant", verify_semiinvariance(chi)}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (!action) {
      err << app.help();
      return kUsage;
    }
    action();
  } catch (const cherednik::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << "\n";
    return kUsage;
  }

  json envelope = {{"command", env.command}, {"inputs", env.inputs}, {"result", env.result}, {"warnings", env.warnings}};
  if (as_json)
    out << envelope.dump(2) << "\n";
  else
    flatten(envelope, "", out);
  return env.exit_code;
}

}  // namespace cherednik::cli
