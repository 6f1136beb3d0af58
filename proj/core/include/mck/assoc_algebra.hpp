#ifndef MCK_ASSOC_ALGEBRA_HPP
#define MCK_ASSOC_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mck/linalg.hpp"
#include "mck/matrix.hpp"

namespace mck {

/// One summand of a structure-constant product: (basis index, coefficient).
using ProductTerm = std::pair<int, std::uint8_t>;
using ProductTerms = std::vector<ProductTerm>;

/// Finite-dimensional associative algebra over GF(p) given by a sparse
/// structure-constant table. Pairs absent from the table multiply to zero.
struct AssocAlgebra {
  int p = 2;
  int dim = 0;
  std::vector<std::string> labels;
  std::unordered_map<std::uint64_t, ProductTerms> products;
  std::optional<int> unit_index;  // set when a basis element is the unit

  static std::uint64_t key(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  }

  const ProductTerms& terms(int i, int j) const;
  void add_product_term(int i, int j, int k, int coeff);
};

/// Violations found by the exhaustive axiom checks; empty means the axiom
/// holds on every basis pair/triple.
struct AxiomViolation {
  std::vector<int> indices;
  std::string description;
};

std::vector<AxiomViolation> check_commutative(const AssocAlgebra& a);
std::vector<AxiomViolation> check_associative(const AssocAlgebra& a);
std::vector<AxiomViolation> check_unit_law(const AssocAlgebra& a, int unit_index);

inline constexpr int kDefaultSizeCap = 4096;

/// Exponent tuple of the monomial at `index` in the lex-ordered basis of
/// O_n (first variable most significant); the inverse of index_of_exponents.
std::vector<int> exponents_of_index(int index, int p, int n);
int index_of_exponents(const std::vector<int>& exponents, int p);
std::string monomial_label(const std::vector<int>& exponents, int n);

/// O_n = K[x_1,...,x_n]/(x_1^p,...,x_n^p): basis of all p^n monomials with
/// exponents below p, x^a * x^b = x^(a+b) when every component stays below
/// p and zero otherwise.
AssocAlgebra truncated_polynomial_algebra(int p, int n, int size_cap = kDefaultSizeCap);

/// The base field K as a 1-dimensional unital algebra.
AssocAlgebra field_algebra(int p);

/// K ⊕ K with componentwise product; the unit is (1,1), not a basis vector.
AssocAlgebra pair_field_algebra(int p);

/// A ⊗ B on the basis of pairs (i,j) -> i*dimB + j, with
/// (a⊗b)(a'⊗b') = aa' ⊗ bb'. Both factors must be unital over the same p.
AssocAlgebra tensor_product(const AssocAlgebra& a, const AssocAlgebra& b);

std::vector<std::uint8_t> multiply_raw(const AssocAlgebra& a, std::span<const std::uint8_t> u,
                                       std::span<const std::uint8_t> v);
std::vector<Fp> multiply(const AssocAlgebra& a, const std::vector<Fp>& u,
                         const std::vector<Fp>& v);

/// The unit element as a coordinate vector, or nullopt when the algebra
/// has none. Computed by solving e*e_j = e_j, never trusted from input.
std::optional<std::vector<Fp>> find_unit(const AssocAlgebra& a);

/// Matrix of v -> a*v on coordinates.
Matrix right_mult_operator(const AssocAlgebra& alg, std::span<const std::uint8_t> a);
Matrix right_mult_operator(const AssocAlgebra& alg, const std::vector<Fp>& a);

/// Gram matrix of the pairing (u, v) -> f(uv) for a functional f.
Matrix functional_on_products(const AssocAlgebra& a, std::span<const std::uint8_t> f);

/// True when op satisfies D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on every
/// basis pair.
bool satisfies_leibniz(const AssocAlgebra& a, const Matrix& op);

/// All derivations of A as a subspace of flattened dim x dim operators
/// (row-major), solved from the Leibniz system over all basis pairs.
Subspace derivations(const AssocAlgebra& a);

/// Operator matrices recovered from the rows of a flattened-operator
/// subspace.
std::vector<Matrix> operators_of(const AssocAlgebra& a, const Subspace& flattened);

/// Span of { D(e_i) : D in ops, i basis index }.
Subspace derivation_image(const AssocAlgebra& a, const std::vector<Matrix>& ops);

/// { f in A^* : f(D(v)) = 0 for all D in ops and all v }, the annihilator
/// of the derivation image.
Subspace dual_invariants(const AssocAlgebra& a, const std::vector<Matrix>& ops);

}  // namespace mck

#endif
