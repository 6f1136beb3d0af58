#ifndef MCK_ALGEBRA_IO_HPP
#define MCK_ALGEBRA_IO_HPP

#include <string>
#include <vector>

#include "mck/assoc_algebra.hpp"
#include "mck/lie_algebra.hpp"

namespace mck {

/// Parses an associative algebra file: a JSON object with fields
///   p        prime modulus
///   dim      basis size
///   labels   optional array of dim strings (defaults to e0, e1, ...)
///   products array of [i, j, k, c] quadruples, e_i * e_j += c e_k,
///            zero-based; omitted pairs multiply to zero.
/// Associativity is always enforced; commutativity only when requested
/// (cyclic cohomology needs it, derivation computations do not). Failures
/// name the violating pair or triple.
AssocAlgebra parse_assoc_algebra(const std::string& text, bool require_commutative);
AssocAlgebra parse_assoc_algebra_file(const std::string& path, bool require_commutative);

/// Parses a Lie algebra file: JSON with p, dim, optional labels, and
/// brackets as [i, j, k, c] quadruples meaning [e_i, e_j] += c e_k for
/// i < j; mirrored entries are derived by antisymmetry and supplying both
/// orders with inconsistent values is a format error. The parsed table
/// must pass lie_check.
LieAlgebra parse_lie_algebra(const std::string& text);
LieAlgebra parse_lie_algebra_file(const std::string& path);

/// Parses a derivation-generator file: JSON with p, n, and generators as
/// an array of dim x dim integer matrices (dim = p^n) acting on the
/// lex-ordered monomial basis of O_n. Each generator must satisfy the
/// Leibniz rule, which derivation_subalgebra re-checks.
struct GeneratorFile {
  int p = 2;
  int n = 1;
  std::vector<Matrix> generators;
};
GeneratorFile parse_generator_file(const std::string& text, int size_cap = kDefaultSizeCap);
GeneratorFile parse_generator_file_path(const std::string& path, int size_cap = kDefaultSizeCap);

/// Inverse of parse_assoc_algebra: emits the quadruples sorted, so equal
/// algebras serialize identically.
std::string emit_assoc_algebra(const AssocAlgebra& a);
std::string emit_lie_algebra(const LieAlgebra& l);

std::string read_text_file(const std::string& path);

}  // namespace mck

#endif
