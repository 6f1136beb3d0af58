#ifndef MCK_LIE_ALGEBRA_HPP
#define MCK_LIE_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mck/assoc_algebra.hpp"
#include "mck/matrix.hpp"

namespace mck {

/// Where a basis index of a semidirect sum lives: in the current part
/// S (x) A (a pair of factor indices) or in the acting part D.
struct BasisPart {
  enum class Kind { kCurrent, kActing };
  Kind kind = Kind::kCurrent;
  int s_index = -1;
  int a_index = -1;
  int d_index = -1;
};

/// Finite-dimensional Lie algebra over GF(p) by sparse skew structure
/// constants. The table stores both (i,j) and (j,i) so lookups need no
/// sign bookkeeping; lie_check verifies the invariants hold.
struct LieAlgebra {
  int p = 2;
  int dim = 0;
  std::vector<std::string> labels;
  std::unordered_map<std::uint64_t, ProductTerms> brackets;
  std::vector<BasisPart> parts;  // empty unless built as a semidirect sum

  const ProductTerms& bracket(int i, int j) const;

  /// Adds c * e_k to [e_i, e_j] and the mirrored -c to [e_j, e_i];
  /// requires i != j.
  void add_bracket_term(int i, int j, int k, int coeff);

  /// Raw one-sided insertion, for file parsing and deliberately broken
  /// test tables.
  void add_directed_bracket_term(int i, int j, int k, int coeff);
};

std::vector<std::uint8_t> lie_bracket_raw(const LieAlgebra& l, std::span<const std::uint8_t> u,
                                          std::span<const std::uint8_t> v);

/// Exhaustive verification of the Lie axioms: [e_i,e_i] = 0,
/// [e_i,e_j] = -[e_j,e_i], and Jacobi on all index triples. Violations are
/// data, not errors (capped at 100 entries).
std::vector<AxiomViolation> lie_check(const LieAlgebra& l);

/// Span of all basis brackets, i.e. the derived subalgebra [L, L].
Subspace bracket_image(const LieAlgebra& l);

/// sl_2 on the basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
/// Rejects p = 2, where the algebra degenerates.
LieAlgebra sl2(int p);

/// A Lie algebra of operators on O_n together with its action matrices,
/// basis i of the algebra acting as action[i].
struct DerivationAlgebra {
  LieAlgebra algebra;
  std::vector<Matrix> action;
};

/// The Jacobson-Witt algebra W(n;1) = Der(O_n) under commutator;
/// dimension n*p^n.
DerivationAlgebra witt(int p, int n, int size_cap = kDefaultSizeCap);

/// The acting algebra with no operators (the zero subalgebra of Der).
DerivationAlgebra zero_derivation_algebra(int p);

/// Closure of the generators under span and commutator inside Der(O_n).
/// Every generator must satisfy the Leibniz rule on O_n.
DerivationAlgebra derivation_subalgebra(const AssocAlgebra& o_n, const std::vector<Matrix>& gens);

/// Current Lie algebra S (x) A with [s⊗a, t⊗b] = [s,t] ⊗ ab, basis pairs
/// indexed (s,a) -> s*dimA + a.
LieAlgebra current_algebra(const LieAlgebra& s, const AssocAlgebra& a);

/// Semidirect sum (S ⊗ A) ∔ D: the current algebra extended by D acting on
/// the A slot, [Δ, s⊗a] = s ⊗ Δ(a). The action operators must be
/// derivations of A; the Jacobi identity of the result is re-verified, not
/// assumed.
LieAlgebra semidirect(const LieAlgebra& s, const AssocAlgebra& a, const DerivationAlgebra& d);

}  // namespace mck

#endif
