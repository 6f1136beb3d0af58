#ifndef MCK_LINALG_HPP
#define MCK_LINALG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mck/matrix.hpp"

namespace mck {

/// A sparse constraint row: sorted (column, residue) terms.
using SparseRow = std::vector<std::pair<int, std::uint8_t>>;

/// Maintains the canonical reduced row-echelon basis of the span of all
/// inserted rows. Pivot rows are fully reduced against each other, so the
/// final basis depends only on the span, not on insertion order.
class RowReducer {
 public:
  RowReducer(int cols, int p);

  int cols() const { return cols_; }
  int modulus() const { return p_; }
  int rank() const { return static_cast<int>(order_.size()); }

  /// Inserts a dense row; returns true if the rank grew.
  bool insert(std::vector<std::uint8_t> row);
  bool insert_sparse(const SparseRow& row);

  /// Fully reduces v against the current pivot rows.
  std::vector<std::uint8_t> reduce(std::vector<std::uint8_t> v) const;
  bool contains(std::span<const std::uint8_t> v) const;

  /// Coordinates of v in the pivot basis, or nullopt if v is outside the
  /// span. Because the basis is in rref, the coordinate at basis row r is
  /// just v[pivot(r)].
  std::optional<std::vector<std::uint8_t>> coordinates(std::span<const std::uint8_t> v) const;

  /// Pivot columns in increasing order.
  std::vector<int> pivots() const;

  /// The canonical basis, one pivot row per matrix row (rank x cols).
  Matrix basis_matrix() const;

 private:
  int cols_;
  int p_;
  std::vector<std::vector<std::uint8_t>> rows_;  // stored pivot rows
  std::vector<int> tails_;                       // last-nonzero upper bound per stored row
  std::vector<int> pivot_of_row_;                // pivot column of rows_[i]
  std::vector<int> row_of_pivot_;                // pivot column -> row index or -1
  std::vector<int> order_;                       // row indices sorted by pivot column

  /// target -= factor * src over [from_col, src_tail]; returns the new
  /// tail bound for target.
  int subtract_scaled(std::vector<std::uint8_t>& target, int target_tail,
                      const std::vector<std::uint8_t>& src, int factor, int from_col,
                      int src_tail) const;
};

struct RrefResult {
  Matrix reduced;          // same shape as the input, canonical rref
  int rank;
  std::vector<int> pivots; // pivot columns, increasing
};

RrefResult rref(const Matrix& m);

/// A linear subspace of GF(p)^ambient represented by its canonical rref
/// basis, so equal subspaces compare equal bit-for-bit.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(int ambient_dim, int p);

  /// Span of the rows of `vectors`.
  static Subspace span(const Matrix& vectors);
  static Subspace full(int ambient_dim, int p);

  int ambient_dim() const { return ambient_; }
  int modulus() const { return p_; }
  int dim() const { return basis_.rows(); }

  /// Basis matrix in canonical rref, dim() rows.
  const Matrix& basis() const { return basis_; }
  std::vector<std::uint8_t> basis_vector(int i) const;

  bool contains(std::span<const std::uint8_t> v) const;
  bool contains_subspace(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_;
  int p_;
  Matrix basis_;

  Subspace(int ambient, int p, Matrix basis)
      : ambient_(ambient), p_(p), basis_(std::move(basis)) {}
};

Subspace nullspace(const Matrix& m);

/// Solution space of the homogeneous system whose constraint rows were
/// inserted into `red` (the nullspace of the stacked rows).
Subspace solution_space(const RowReducer& red);

/// One solution of M x = rhs, or nullopt when rhs is outside the column
/// space. Free coordinates are set to zero.
std::optional<std::vector<Fp>> solve(const Matrix& m, const std::vector<Fp>& rhs);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Normalizes a sparse row for span-level deduplication: terms sorted by
/// column, zeros dropped, scaled so the leading coefficient is 1.
SparseRow normalize_sparse_row(SparseRow row, int p);

/// Feeds every row through a RowReducer after deduplicating scalar
/// multiples; returns the reducer holding the canonical row-space basis.
RowReducer reduce_sparse_rows(std::vector<SparseRow> rows, int cols, int p);

}  // namespace mck

#endif
