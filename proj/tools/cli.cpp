#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "mck/algebra_io.hpp"
#include "mck/verify.hpp"

namespace mck::cli {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string format = "text";
  bool show_basis = false;
};

void add_format_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--show-basis", opts.show_basis, "Print an explicit basis");
}

ordered_json form_basis_entries(const std::vector<std::string>& labels, const Matrix& gram) {
  ordered_json entries = ordered_json::array();
  for (int r = 0; r < gram.rows(); ++r) {
    for (int c = 0; c < gram.cols(); ++c) {
      if (gram.raw(r, c) != 0) {
        entries.push_back({labels[r], labels[c], static_cast<int>(gram.raw(r, c))});
      }
    }
  }
  return entries;
}

ordered_json functional_basis_entries(const std::vector<std::string>& labels,
                                      std::span<const std::uint8_t> v) {
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) entries.push_back({labels[i], static_cast<int>(v[i])});
  }
  return entries;
}

/// A computed dimension plus an optional basis, printed as a bare number
/// in text mode and a stable-keyed object in json mode.
void print_dimension(std::ostream& out, const CommonOpts& opts, const std::string& op,
                     const ordered_json& params, int dim, const ordered_json& basis) {
  if (opts.format == "json") {
    ordered_json j;
    j["op"] = op;
    j["params"] = params;
    j["dim"] = dim;
    if (opts.show_basis) j["basis"] = basis;
    j["exit_code"] = 0;
    out << j.dump(2) << "\n";
    return;
  }
  out << dim << "\n";
  if (opts.show_basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out << "basis " << i << ":";
      for (const auto& entry : basis[i]) {
        out << " (";
        for (std::size_t f = 0; f < entry.size(); ++f) {
          if (f) out << ", ";
          if (entry[f].is_string()) {
            out << entry[f].get<std::string>();
          } else {
            out << entry[f];
          }
        }
        out << ")";
      }
      out << "\n";
    }
  }
}

ordered_json basis_of_forms(const std::vector<std::string>& labels, const Subspace& space,
                            int dim, int p) {
  ordered_json basis = ordered_json::array();
  for (int i = 0; i < space.dim(); ++i) {
    basis.push_back(form_basis_entries(labels, matrix_from_flat(space.basis_vector(i), dim, dim, p)));
  }
  return basis;
}

ordered_json basis_of_functionals(const std::vector<std::string>& labels, const Subspace& space) {
  ordered_json basis = ordered_json::array();
  for (int i = 0; i < space.dim(); ++i) {
    basis.push_back(functional_basis_entries(labels, space.basis_vector(i)));
  }
  return basis;
}

LieAlgebra resolve_lie_algebra(const std::string& spec, int p, int n, int size_cap) {
  if (spec == "sl2") return sl2(p);
  if (spec == "witt") return witt(p, n, size_cap).algebra;
  return parse_lie_algebra_file(spec);
}

DerivationAlgebra resolve_acting_algebra(const std::string& spec, const AssocAlgebra& o_n, int p,
                                         int n, int size_cap) {
  if (spec == "zero") return zero_derivation_algebra(p);
  if (spec == "witt") return witt(p, n, size_cap);
  const GeneratorFile gens = parse_generator_file_path(spec, size_cap);
  if (gens.p != p || gens.n != n) {
    throw InputError("generator file (p, n) differs from the requested case");
  }
  return derivation_subalgebra(o_n, gens.generators);
}

void print_report(std::ostream& out, const std::string& format, const Report& rep) {
  if (format == "json") {
    out << rep.to_json().dump(2) << "\n";
  } else {
    out << rep.to_text();
  }
}

int run_verify_command(const std::string& target, int max_p, int max_n,
                       const std::string& a_spec, const std::string& b_spec, int p,
                       const std::string& s_spec, const std::string& d_spec, int n,
                       bool case_flags_given, const std::string& format, std::ostream& out) {
  const int cap = effective_size_cap();
  // an explicit --max-n (even zero) selects the rectangle grid; the
  // default grid keeps p^n small enough to finish in seconds
  const std::vector<GridCase> grid =
      (max_n >= 0) ? rectangle_grid(max_p, max_n) : default_grid();

  std::vector<Report> reports;
  if (target == "erratum" || target == "all") {
    reports.push_back(run_verify_erratum(grid, cap));
  }
  if (target == "prop1" || target == "all") {
    reports.push_back(run_verify_prop1(grid, cap));
  }
  if (target == "lemma" || target == "all") {
    std::vector<LemmaCase> cases = default_lemma_cases();
    if (target == "lemma" && (!a_spec.empty() || !b_spec.empty())) {
      cases = {{a_spec.empty() ? "o1" : a_spec, b_spec.empty() ? "o1" : b_spec, p}};
    }
    reports.push_back(run_verify_lemma(cases, cap));
  }
  if (target == "prop2" || target == "all") {
    std::vector<Prop2Config> configs = default_prop2_configs();
    if (target == "prop2" && case_flags_given) {
      configs = {{s_spec, p, n, d_spec == "default" ? "witt" : d_spec}};
    }
    reports.push_back(run_verify_prop2(configs, cap));
  }

  int exit_code = 0;
  for (const auto& rep : reports) exit_code = std::max(exit_code, rep.exit_code());

  if (format == "json") {
    if (reports.size() == 1) {
      out << reports.front().to_json().dump(2) << "\n";
    } else {
      ordered_json j;
      j["suite"] = "all";
      j["suites"] = ordered_json::array();
      for (const auto& rep : reports) j["suites"].push_back(rep.to_json());
      j["exit_code"] = exit_code;
      out << j.dump(2) << "\n";
    }
  } else {
    for (const auto& rep : reports) out << rep.to_text();
    if (reports.size() > 1) {
      out << "overall: " << (exit_code == 0 ? "pass" : "MISMATCH") << "\n";
    }
  }
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for cyclic and Chevalley-Eilenberg "
               "cohomology of truncated polynomial and current Lie algebras"};
  app.require_subcommand(1);

  int p = 3, n = 1, max_p = 7, max_n = -1;
  std::string a_spec, b_spec, lie_spec = "sl2", d_spec = "default", s_spec = "sl2";
  std::string verify_target;

  auto* hc1_cmd = app.add_subcommand("hc1", "dim HC^1 of O_n or a file algebra");
  hc1_cmd->add_option("--p", p, "Prime modulus");
  hc1_cmd->add_option("--n", n, "Number of variables");
  hc1_cmd->add_option("--a", a_spec, "Algebra: k|kk|o1|o2|<file> (default O_n from --p/--n)");
  CommonOpts hc1_opts;
  add_format_flags(hc1_cmd, hc1_opts);

  auto* der_cmd = app.add_subcommand("der", "dim Der of O_n or a file algebra");
  der_cmd->add_option("--p", p, "Prime modulus");
  der_cmd->add_option("--n", n, "Number of variables");
  der_cmd->add_option("--a", a_spec, "Algebra: k|kk|o1|o2|<file>");
  CommonOpts der_opts;
  add_format_flags(der_cmd, der_opts);

  auto* h2_cmd = app.add_subcommand("h2", "dim H^2 of a Lie algebra");
  h2_cmd->add_option("--lie", lie_spec, "Lie algebra: sl2|witt|<file>");
  h2_cmd->add_option("--p", p, "Prime modulus");
  h2_cmd->add_option("--n", n, "Number of variables (for witt)");
  CommonOpts h2_opts;
  add_format_flags(h2_cmd, h2_opts);

  auto* bforms_cmd = app.add_subcommand("bforms", "dim of symmetric invariant bilinear forms");
  bforms_cmd->add_option("--lie", lie_spec, "Lie algebra: sl2|witt|<file>");
  bforms_cmd->add_option("--p", p, "Prime modulus");
  bforms_cmd->add_option("--n", n, "Number of variables (for witt)");
  CommonOpts bforms_opts;
  add_format_flags(bforms_cmd, bforms_opts);

  auto* dual_cmd = app.add_subcommand("dual-invariants", "dim of (O_n^*)^D");
  dual_cmd->add_option("--p", p, "Prime modulus");
  dual_cmd->add_option("--n", n, "Number of variables");
  dual_cmd->add_option("--d", d_spec, "Acting algebra: zero|witt|<generator file>");
  CommonOpts dual_opts;
  add_format_flags(dual_cmd, dual_opts);

  auto* kunneth_cmd = app.add_subcommand("kunneth-check", "Kunneth dimension identity on A⊗B");
  kunneth_cmd->add_option("--a", a_spec, "Left factor: k|kk|o1|o2|<file>")->required();
  kunneth_cmd->add_option("--b", b_spec, "Right factor: k|kk|o1|o2|<file>")->required();
  kunneth_cmd->add_option("--p", p, "Prime modulus");
  CommonOpts kunneth_opts;
  add_format_flags(kunneth_cmd, kunneth_opts);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("target", verify_target, "erratum|prop1|lemma|prop2|all")
      ->required()
      ->check(CLI::IsMember({"erratum", "prop1", "lemma", "prop2", "all"}));
  verify_cmd->add_option("--max-p", max_p, "Largest prime in the grid");
  verify_cmd->add_option("--max-n", max_n, "Largest n in the grid (default: built-in grid)");
  verify_cmd->add_option("--a", a_spec, "Lemma left factor");
  verify_cmd->add_option("--b", b_spec, "Lemma right factor");
  verify_cmd->add_option("--p", p, "Prime modulus (lemma/prop2)");
  verify_cmd->add_option("--n", n, "Number of variables (prop2)");
  verify_cmd->add_option("--s", s_spec, "Simple factor: sl2|<file> (prop2)");
  verify_cmd->add_option("--d", d_spec, "Acting algebra: zero|witt|<generator file> (prop2)");
  CommonOpts verify_opts;
  add_format_flags(verify_cmd, verify_opts);

  try {
    std::vector<std::string> cli_args(args.rbegin(), args.rend());
    app.parse(cli_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const int cap = effective_size_cap();

    if (hc1_cmd->parsed()) {
      const AssocAlgebra a = a_spec.empty()
                                 ? truncated_polynomial_algebra(p, n, cap)
                                 : resolve_algebra(a_spec, p, cap, true);
      const Hc1Space space = hc1(a);
      print_dimension(out, hc1_opts, "hc1",
                      a_spec.empty() ? ordered_json{{"p", p}, {"n", n}}
                                     : ordered_json{{"a", a_spec}, {"p", a.p}},
                      space.hc1_dim, basis_of_forms(a.labels, space.cocycles, a.dim, a.p));
      return 0;
    }
    if (der_cmd->parsed()) {
      const AssocAlgebra a = a_spec.empty()
                                 ? truncated_polynomial_algebra(p, n, cap)
                                 : resolve_algebra(a_spec, p, cap, false);
      const Subspace der = derivations(a);
      print_dimension(out, der_opts, "der",
                      a_spec.empty() ? ordered_json{{"p", p}, {"n", n}}
                                     : ordered_json{{"a", a_spec}, {"p", a.p}},
                      der.dim(), basis_of_forms(a.labels, der, a.dim, a.p));
      return 0;
    }
    if (h2_cmd->parsed()) {
      const LieAlgebra l = resolve_lie_algebra(lie_spec, p, n, cap);
      const H2Space space = ce_h2(l);
      print_dimension(out, h2_opts, "h2", ordered_json{{"lie", lie_spec}, {"p", l.p}},
                      space.h2_dim, basis_of_forms(l.labels, space.cocycles, l.dim, l.p));
      return 0;
    }
    if (bforms_cmd->parsed()) {
      const LieAlgebra l = resolve_lie_algebra(lie_spec, p, n, cap);
      const Subspace forms = symmetric_invariant_forms(l);
      print_dimension(out, bforms_opts, "bforms", ordered_json{{"lie", lie_spec}, {"p", l.p}},
                      forms.dim(), basis_of_forms(l.labels, forms, l.dim, l.p));
      return 0;
    }
    if (dual_cmd->parsed()) {
      const std::string acting = (d_spec == "default") ? "witt" : d_spec;
      const AssocAlgebra o_n = truncated_polynomial_algebra(p, n, cap);
      const DerivationAlgebra d = resolve_acting_algebra(acting, o_n, p, n, cap);
      const Subspace inv = dual_invariants(o_n, d.action);
      print_dimension(out, dual_opts, "dual-invariants",
                      ordered_json{{"p", p}, {"n", n}, {"d", acting}}, inv.dim(),
                      basis_of_functionals(o_n.labels, inv));
      return 0;
    }
    if (kunneth_cmd->parsed()) {
      Report rep = run_verify_kunneth({{a_spec, b_spec, p}}, cap);
      print_report(out, kunneth_opts.format, rep);
      return rep.exit_code();
    }
    if (verify_cmd->parsed()) {
      const bool case_flags_given = verify_cmd->count("--s") || verify_cmd->count("--d") ||
                                    verify_cmd->count("--p") || verify_cmd->count("--n");
      return run_verify_command(verify_target, max_p, max_n, a_spec, b_spec, p, s_spec, d_spec,
                                n, case_flags_given, verify_opts.format, out);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mck::cli
