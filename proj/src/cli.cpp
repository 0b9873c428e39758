#include "lindef/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lindef/builtins.hpp"
#include "lindef/complex_io.hpp"
#include "lindef/enumerate.hpp"
#include "lindef/invariants.hpp"

namespace lindef {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitFailedProperty = 4;

struct InputOptions {
  std::string builtin;
  std::string file;
};

struct CharOptions {
  std::vector<unsigned long> repeated;
  std::string list;

  std::vector<unsigned long> resolve() const {
    std::vector<unsigned long> chars = repeated;
    if (!list.empty()) {
      std::stringstream ss(list);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          chars.push_back(std::stoul(tok));
        } catch (const std::exception&) {
          throw BadParams("bad characteristic '" + tok + "'");
        }
      }
    }
    if (chars.empty()) chars.push_back(0);
    for (auto c : chars) FieldSpec{c};  // validate: 0 or prime
    return chars;
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* b = cmd->add_option("--builtin", in.builtin,
                            "builtin complex, e.g. ngon:6 or rp2_6");
  auto* fopt = cmd->add_option("--file", in.file, "complex file (JSON or text)");
  b->excludes(fopt);
}

void add_char_options(CLI::App* cmd, CharOptions& ch) {
  cmd->add_option("--char", ch.repeated, "field characteristic, repeatable");
  cmd->add_option("--chars", ch.list, "comma-separated characteristics");
}

SimplicialComplex load_input(const InputOptions& in) {
  if (!in.builtin.empty()) return builtin_complex(in.builtin);
  if (!in.file.empty()) return load_complex_file(in.file);
  throw BadParams("exactly one of --builtin or --file is required");
}

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

void print_report(const InvariantReport& rep, std::ostream& out) {
  out << "complex: " << rep.source << "\n";
  out << "char:    " << rep.characteristic << "\n";
  out << "indeg:   " << opt_str(rep.indeg) << "\n";
  out << "ld:      " << rep.ld << "  (lin " << rep.ld_route_lin << ", ext "
      << rep.ld_route_ext << ")\n";
  out << "ld(I):   " << opt_str(rep.ld_ideal) << "\n";
  out << "strands: ";
  for (const auto& [l, v] : rep.per_strand)
    if (v) out << l << "->" << *v << " ";
  out << "\n";
  out << "depth profile (i -> depth Ext^{n-i}(A)): ";
  for (const auto& [i, v] : rep.depth_profile)
    if (v) out << i << "->" << *v << " ";
  out << "\n";
  out << "flags:   " << (rep.is_ngon ? "ngon " : "") << (rep.is_cm ? "CM " : "")
      << (rep.is_seq_cm ? "seqCM " : "")
      << (rep.bound_ideal_ok && rep.bound_indeg_ok && rep.bound_global_ok
              ? "bounds-ok"
              : "BOUNDS-VIOLATED")
      << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"linearity defects of Stanley-Reisner rings"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "full invariant report");
  InputOptions compute_in;
  CharOptions compute_chars;
  bool compute_json = false, compute_oracle = false;
  add_input_options(compute, compute_in);
  add_char_options(compute, compute_chars);
  compute->add_flag("--json", compute_json, "emit JSON");
  compute->add_flag("--oracle", compute_oracle,
                    "insist on both ld routes (always on; kept for scripts)");

  // betti
  auto* betti = app.add_subcommand("betti", "graded Betti numbers, both routes");
  InputOptions betti_in;
  CharOptions betti_chars;
  bool betti_json = false;
  add_input_options(betti, betti_in);
  add_char_options(betti, betti_chars);
  betti->add_flag("--json", betti_json, "emit JSON");

  // resolve
  auto* resolve = app.add_subcommand("resolve", "dump the minimal free resolution");
  InputOptions resolve_in;
  CharOptions resolve_chars;
  add_input_options(resolve, resolve_in);
  add_char_options(resolve, resolve_chars);

  // dual
  auto* dual = app.add_subcommand("dual", "Alexander dual facets");
  InputOptions dual_in;
  bool dual_json = false;
  add_input_options(dual, dual_in);
  dual->add_flag("--json", dual_json, "emit JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_n = 4;
  CharOptions verify_chars;
  bool verify_n6 = false;
  verify->add_option("--suite", suite, "bounds|ngon|cone|duality|topology|all")
      ->required();
  verify->add_option("--n", verify_n, "ambient vertex count (default 4)");
  add_char_options(verify, verify_chars);
  verify->add_flag("--opt-in-n6", verify_n6, "allow n = 6 enumerations");

  // scan
  auto* scan = app.add_subcommand("scan", "exhaustive n-gon theorem scan");
  int scan_n = 4;
  CharOptions scan_chars;
  bool scan_sym = false, scan_n6 = false, scan_json = false;
  scan->add_option("--n", scan_n, "ambient vertex count")->required();
  add_char_options(scan, scan_chars);
  scan->add_flag("--up-to-symmetry", scan_sym, "one representative per orbit");
  scan->add_flag("--opt-in-n6", scan_n6, "allow n = 6");
  scan->add_flag("--json", scan_json, "emit JSON");

  auto* list = app.add_subcommand("builtin-list", "list builtin complexes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : builtin_names()) out << name << "\n";
      return kExitOk;
    }
    if (compute->parsed()) {
      auto complex = load_input(compute_in);
      auto chars = compute_chars.resolve();
      nlohmann::json all = nlohmann::json::array();
      for (auto ch : chars) {
        auto rep = ld_delta(complex, FieldSpec{ch});
        if (!compute_in.builtin.empty()) rep.source = compute_in.builtin;
        if (compute_json) {
          all.push_back(rep.to_json());
        } else {
          print_report(rep, out);
          if (chars.size() > 1) out << "\n";
        }
      }
      if (compute_json) out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      return kExitOk;
    }
    if (betti->parsed()) {
      auto complex = load_input(betti_in);
      auto chars = betti_chars.resolve();
      nlohmann::json all = nlohmann::json::array();
      for (auto ch : chars) {
        auto rep = compute_betti(complex, FieldSpec{ch});
        if (!rep.routes_agree) {
          err << "betti: routes disagree (this is a bug)\n";
          return kExitFailedProperty;
        }
        if (betti_json) {
          all.push_back(rep.to_json());
        } else {
          out << "char " << ch << ": proj_dim " << rep.proj_dim << ", depth "
              << rep.depth << ", routes agree\n";
          for (const auto& [key, mult] : rep.table.entries())
            out << "  beta_" << key.first << "," << mask_to_string(key.second)
                << " = " << mult << "\n";
        }
      }
      if (betti_json) out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      return kExitOk;
    }
    if (resolve->parsed()) {
      auto complex = load_input(resolve_in);
      auto chars = resolve_chars.resolve();
      nlohmann::json all = nlohmann::json::array();
      for (auto ch : chars) all.push_back(resolution_dump(complex, FieldSpec{ch}));
      out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      return kExitOk;
    }
    if (dual->parsed()) {
      auto complex = load_input(dual_in);
      auto d = complex.alexander_dual();
      if (dual_json) {
        out << complex_to_json(d).dump(2) << "\n";
      } else {
        out << complex_to_text(d);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      auto chars = verify_chars.resolve();
      auto result = run_suite(suite, verify_n, chars, verify_n6);
      out << "suite " << result.name << ": " << result.checked << " checks, "
          << result.failures << " failures\n";
      for (const auto& d : result.details) out << "  " << d << "\n";
      return result.failures == 0 ? kExitOk : kExitFailedProperty;
    }
    if (scan->parsed()) {
      auto chars = scan_chars.resolve();
      bool all_ok = true;
      nlohmann::json js = nlohmann::json::array();
      for (auto ch : chars) {
        auto s = ngon_theorem_scan(scan_n, FieldSpec{ch}, scan_sym, scan_n6);
        all_ok = all_ok && s.ok();
        if (scan_json) {
          js.push_back({{"n", s.n},
                        {"char", s.characteristic},
                        {"scanned", s.complexes_scanned},
                        {"extremal", s.extremal_count},
                        {"ok", s.ok()}});
        } else {
          out << "char " << ch << ": scanned " << s.complexes_scanned
              << (scan_sym ? " classes" : " complexes") << ", " << s.extremal_count
              << " with ld = n-2, " << (s.ok() ? "PASS" : "FAIL") << "\n";
        }
      }
      if (scan_json) out << js.dump(2) << "\n";
      return all_ok ? kExitOk : kExitFailedProperty;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << "\n";
    return kExitFailedProperty;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitParse;
}

}  // namespace lindef
