#ifndef MCK_VERIFY_HPP
#define MCK_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mck/cyclic.hpp"
#include "mck/lie_cohomology.hpp"

namespace mck {

/// One verification case: parameters, expected and computed values, and a
/// verdict of "pass", "mismatch" or "skipped".
struct CaseResult {
  nlohmann::ordered_json params;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json computed;
  std::string verdict;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  /// 0 when no case mismatches; skipped cases do not fail.
  int exit_code() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// The p^n construction cap: MCK_SIZE_CAP when set, else 4096.
int effective_size_cap();

/// Grid of (p, n) verification cases; cases beyond the cap are reported
/// as skipped, not failed.
struct GridCase {
  int p;
  int n;
};

/// Default grid: p in {2,3,5,7} with p^n <= 32, sized so the default run
/// finishes in seconds.
std::vector<GridCase> default_grid();
std::vector<GridCase> rectangle_grid(int max_p, int max_n);

/// dim HC^1(O_n) against n p^(n-1) for every grid case.
Report run_verify_erratum(const std::vector<GridCase>& grid, int size_cap);

/// dim HC^1(O_n)^{Der(O_n)} against 1 for n = 1 and 0 for n > 1.
Report run_verify_prop1(const std::vector<GridCase>& grid, int size_cap);

/// A named algebra for the Kunneth/lemma suites: one of the builtin
/// shorthands k, kk, o1, o2 (built at the given p) or a file path.
struct LemmaCase {
  std::string a_spec;
  std::string b_spec;
  int p;
};

std::vector<LemmaCase> default_lemma_cases();

AssocAlgebra resolve_algebra(const std::string& spec, int p, int size_cap,
                             bool require_commutative);

/// The invariant Kunneth identity: dim HC^1(A⊗B)^{Der(A⊗B)} computed on
/// the tensor product against the two-summand value from the factors.
Report run_verify_lemma(const std::vector<LemmaCase>& cases, int size_cap);

/// The plain Kunneth dimension identity plus assembled-cocycle span check.
Report run_verify_kunneth(const std::vector<LemmaCase>& cases, int size_cap);

struct Prop2Config {
  std::string s_spec;  // "sl2" or a Lie algebra file path
  int p;
  int n;
  std::string d_spec;  // "zero", "witt" or a generator file path
};

std::vector<Prop2Config> default_prop2_configs();

Report run_verify_prop2(const std::vector<Prop2Config>& configs, int size_cap);

/// Runs a DecompositionReport for one configuration (the pieces the CLI
/// needs to build: S, A = O_n and the acting algebra).
DecompositionReport prop2_case(const Prop2Config& config, int size_cap);

}  // namespace mck

#endif
