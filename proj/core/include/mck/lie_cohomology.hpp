#ifndef MCK_LIE_COHOMOLOGY_HPP
#define MCK_LIE_COHOMOLOGY_HPP

#include "mck/cyclic.hpp"
#include "mck/lie_algebra.hpp"

namespace mck {

/// Alternating 2-cochains are carried as gram matrices like the cyclic
/// forms; the alternating invariant is enforced where they are built.
using TwoCochain = BilinearForm;

/// Z^2, B^2 and the quotient dimension of the Chevalley-Eilenberg complex
/// with trivial coefficients.
struct H2Space {
  Subspace cocycles;      // alternating forms with the CE identity
  Subspace coboundaries;  // psi o bracket for psi in L^*
  int h2_dim = 0;
};

/// Direct exhaustive check that the form is alternating and satisfies
/// phi([x,y],z) - phi([x,z],y) + phi([y,z],x) = 0 on all basis triples;
/// independent of the solver path.
bool is_lie_two_cocycle(const LieAlgebra& l, const TwoCochain& phi);

/// H^2(L) data: cocycles are alternating (zero diagonal even at p = 2, the
/// Chevalley-Eilenberg convention, distinct from the cyclic one).
H2Space ce_h2(const LieAlgebra& l);

/// { beta : beta(x,y) = beta(y,x), beta([x,y],z) = beta(x,[y,z]) } as a
/// subspace of flattened gram matrices.
Subspace symmetric_invariant_forms(const LieAlgebra& s);

/// Representatives of cocycle classes: basis rows of `space.cocycles` that
/// stay independent modulo `space.coboundaries` (exactly h2_dim of them).
std::vector<TwoCochain> quotient_representatives(const LieAlgebra& l, const H2Space& space);

/// Lifts to the semidirect sum L = (S ⊗ A) ∔ D. Every lift is verified to
/// be a 2-cocycle of L; a failure means a hypothesis of the decomposition
/// is violated and is reported as an error, never passed through.
///
/// (s⊗a, t⊗b) -> omega(s,t) f(ab), zero on the acting part; f must kill
/// every action image for the lift to close.
TwoCochain lift_h2s_dual(const LieAlgebra& l, const AssocAlgebra& a, const TwoCochain& omega,
                         const std::vector<Fp>& f);

/// (s⊗a, t⊗b) -> beta(s,t) phi(a,b), zero on the acting part.
TwoCochain lift_bs_hc1(const LieAlgebra& l, const AssocAlgebra& a, const TwoCochain& beta,
                       const BilinearForm& phi);

/// eta on the acting part, zero elsewhere.
TwoCochain lift_h2d(const LieAlgebra& l, const TwoCochain& eta);

/// Both sides of the H^2 decomposition of (S ⊗ A) ∔ D, computed through
/// independent code paths, plus the rank of the lifted classes modulo
/// B^2 of the semidirect sum.
struct DecompositionReport {
  int lhs_dim = 0;       // h2 of the semidirect sum, computed directly
  int h2_s = 0;          // summand factors, computed on the factor algebras
  int dual_inv = 0;
  int bforms_s = 0;
  int hc1_inv = 0;
  int h2_d = 0;
  long long rhs_dim = 0; // h2_s*dual_inv + bforms_s*hc1_inv + h2_d
  int lifted_rank = 0;   // rank of all lifted classes modulo B^2
  bool match = false;    // lhs_dim == rhs_dim == lifted_rank
};

DecompositionReport prop2_check(const LieAlgebra& s, const AssocAlgebra& a,
                                const DerivationAlgebra& d);

}  // namespace mck

#endif
