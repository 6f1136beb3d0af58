#ifndef MCK_CYCLIC_HPP
#define MCK_CYCLIC_HPP

#include <cstdint>
#include <vector>

#include "mck/assoc_algebra.hpp"
#include "mck/linalg.hpp"

namespace mck {

/// A bilinear 1-cochain phi(u, v) = u^T gram v on algebra coordinates.
struct BilinearForm {
  Matrix gram;

  Fp evaluate(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) const;
  std::vector<std::uint8_t> flattened() const { return gram.flattened(); }
};

BilinearForm form_from_flat(std::span<const std::uint8_t> flat, int dim, int p);

/// Cocycles, coboundaries and the quotient dimension of the degree-1
/// cyclic complex of an algebra.
struct Hc1Space {
  Subspace cocycles;      // Z^1_lambda, flattened gram matrices
  Subspace coboundaries;  // B^1_lambda
  int hc1_dim = 0;        // dim Z - dim B
};

/// True when the form satisfies both degree-1 cyclic conditions,
/// phi(a,b) = -phi(b,a) and phi(ab,c) - phi(a,bc) + phi(ca,b) = 0, checked
/// by exhaustive loops over basis pairs/triples, independent of any solver.
bool is_cyclic_cocycle(const AssocAlgebra& a, const BilinearForm& phi);

/// All cyclic 1-cocycles of a commutative algebra as a subspace of
/// flattened forms. Rejects noncommutative input.
Subspace cyclic_cocycles(const AssocAlgebra& a);

/// Span of the degree-0 coboundaries psi -> ((a,b) -> psi(ab) - psi(ba));
/// zero for commutative algebras.
Subspace cyclic_coboundaries(const AssocAlgebra& a);

Hc1Space hc1(const AssocAlgebra& a);

/// n * p^(n-1), the dimension of HC^1(O_n).
long long hc1_dimension_formula(int p, int n);

/// The basic cocycle on O_1: alpha(x^i, x^j) = i when i + j = p, else 0.
BilinearForm alpha_cocycle(int p);

/// (D phi)(a,b) = phi(D(a),b) + phi(a,D(b)), i.e. gram' = D^T G + G D.
BilinearForm derivation_act(const AssocAlgebra& a, const Matrix& d, const BilinearForm& phi);

/// { phi in Z^1_lambda : D phi = 0 for every D in ops }. Each op must be a
/// derivation. For commutative algebras B^1 = 0, so these representatives
/// are exactly the invariants of HC^1; the code asserts B^1 = 0 rather
/// than assuming it.
Subspace invariant_classes(const AssocAlgebra& a, const std::vector<Matrix>& ops);

/// The Kunneth cocycle on A (x) B:
///   ((a,b),(a',b')) -> phi(a,a') beta(bb') + alpha(aa') psi(b,b').
/// phi and psi must already be cyclic cocycles of their factors.
BilinearForm kunneth_assemble(const AssocAlgebra& a, const AssocAlgebra& b,
                              const BilinearForm& phi, const std::vector<Fp>& beta,
                              const std::vector<Fp>& alpha, const BilinearForm& psi);

struct KunnethReport {
  int hc1_tensor = 0;
  int hc1_a = 0;
  int hc1_b = 0;
  int dim_a = 0;
  int dim_b = 0;
  long long predicted = 0;   // hc1(A)*dimB + dimA*hc1(B)
  int assembled_rank = 0;    // rank of all assembled basis cocycles
  bool dimensions_match = false;
  bool span_matches = false;

  bool ok() const { return dimensions_match && span_matches; }
};

/// Verifies the degree-1 Kunneth dimension identity on A (x) B and that
/// the assembled cocycles span a subspace of exactly that dimension.
KunnethReport kunneth_check(const AssocAlgebra& a, const AssocAlgebra& b);

}  // namespace mck

#endif
