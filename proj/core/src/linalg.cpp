#include "mck/linalg.hpp"

#include <algorithm>
#include <array>

namespace mck {

RowReducer::RowReducer(int cols, int p) : cols_(cols), p_(p), row_of_pivot_(cols, -1) {
  require_prime(p);
}

int RowReducer::subtract_scaled(std::vector<std::uint8_t>& target, int target_tail,
                                const std::vector<std::uint8_t>& src, int factor, int from_col,
                                int src_tail) const {
  // target -= factor * src, entries already reduced; one 256-entry product
  // table per call keeps the inner loop free of divisions. Touching only
  // the live segment of src is what keeps near-identity pivot rows cheap.
  const int neg = (p_ - factor) % p_;
  std::array<std::uint8_t, 256> mul{};
  for (int v = 0; v < p_; ++v) mul[v] = static_cast<std::uint8_t>((neg * v) % p_);
  for (int c = from_col; c <= src_tail; ++c) {
    const int s = target[c] + mul[src[c]];
    target[c] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
  }
  return std::max(target_tail, src_tail);
}

bool RowReducer::insert(std::vector<std::uint8_t> row) {
  if (static_cast<int>(row.size()) != cols_) throw ShapeError("row length differs from cols");
  // one left-to-right pass fully reduces: pivot rows are zero at every
  // other pivot column, so subtracting one cannot disturb pivot columns
  // already cleared
  int lead = -1;
  int tail = -1;
  for (int c = cols_ - 1; c >= 0; --c) {
    if (row[c] != 0) {
      tail = c;
      break;
    }
  }
  for (int c = 0; c <= tail; ++c) {
    if (row[c] == 0) continue;
    const int holder = row_of_pivot_[c];
    if (holder >= 0) {
      tail = subtract_scaled(row, tail, rows_[holder], row[c], c, tails_[holder]);
    } else if (lead < 0) {
      lead = c;
    }
  }
  if (lead < 0) return false;
  // normalize, then clear the new pivot column from existing rows
  const int inv = inv_mod(row[lead], p_);
  if (inv != 1) {
    std::array<std::uint8_t, 256> mul{};
    for (int v = 0; v < p_; ++v) mul[v] = static_cast<std::uint8_t>((inv * v) % p_);
    for (int c = lead; c <= tail; ++c) row[c] = mul[row[c]];
  }
  const int idx = static_cast<int>(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][lead] != 0) {
      tails_[i] = subtract_scaled(rows_[i], tails_[i], row, rows_[i][lead], lead, tail);
    }
  }
  rows_.push_back(std::move(row));
  tails_.push_back(tail);
  pivot_of_row_.push_back(lead);
  row_of_pivot_[lead] = idx;
  order_.insert(std::lower_bound(order_.begin(), order_.end(), idx,
                                 [this](int a, int b) {
                                   return pivot_of_row_[a] < pivot_of_row_[b];
                                 }),
                idx);
  return true;
}

bool RowReducer::insert_sparse(const SparseRow& row) {
  std::vector<std::uint8_t> dense(cols_, 0);
  for (auto [c, v] : row) dense[c] = v;
  return insert(std::move(dense));
}

std::vector<std::uint8_t> RowReducer::reduce(std::vector<std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeError("vector length differs from cols");
  for (int c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    const int holder = row_of_pivot_[c];
    if (holder >= 0) subtract_scaled(v, cols_ - 1, rows_[holder], v[c], c, tails_[holder]);
  }
  return v;
}

bool RowReducer::contains(std::span<const std::uint8_t> v) const {
  return all_zero(reduce(std::vector<std::uint8_t>(v.begin(), v.end())));
}

std::optional<std::vector<std::uint8_t>> RowReducer::coordinates(
    std::span<const std::uint8_t> v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<std::uint8_t> coords(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) coords[i] = v[pivot_of_row_[order_[i]]];
  return coords;
}

std::vector<int> RowReducer::pivots() const {
  std::vector<int> out;
  out.reserve(order_.size());
  for (int idx : order_) out.push_back(pivot_of_row_[idx]);
  return out;
}

Matrix RowReducer::basis_matrix() const {
  Matrix m(rank(), cols_, p_);
  for (int r = 0; r < rank(); ++r) {
    const auto& src = rows_[order_[r]];
    for (int c = 0; c < cols_; ++c) m.set_raw(r, c, src[c]);
  }
  return m;
}

RrefResult rref(const Matrix& m) {
  RowReducer red(m.cols(), m.modulus());
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    red.insert(std::vector<std::uint8_t>(row.begin(), row.end()));
  }
  Matrix out(m.rows(), m.cols(), m.modulus());
  const Matrix basis = red.basis_matrix();
  for (int r = 0; r < basis.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.set_raw(r, c, basis.raw(r, c));
  }
  return {std::move(out), red.rank(), red.pivots()};
}

Subspace::Subspace(int ambient_dim, int p) : ambient_(ambient_dim), p_(p), basis_(0, ambient_dim, p) {
  require_prime(p);
}

Subspace Subspace::span(const Matrix& vectors) {
  RowReducer red(vectors.cols(), vectors.modulus());
  for (int r = 0; r < vectors.rows(); ++r) {
    auto row = vectors.row(r);
    red.insert(std::vector<std::uint8_t>(row.begin(), row.end()));
  }
  return Subspace(vectors.cols(), vectors.modulus(), red.basis_matrix());
}

Subspace Subspace::full(int ambient_dim, int p) {
  return Subspace(ambient_dim, p, Matrix::identity(ambient_dim, p));
}

std::vector<std::uint8_t> Subspace::basis_vector(int i) const {
  auto row = basis_.row(i);
  return {row.begin(), row.end()};
}

bool Subspace::contains(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw ShapeError("vector length differs from ambient");
  // reduce v against the rref basis directly
  std::vector<std::uint8_t> w(v.begin(), v.end());
  for (int r = 0; r < basis_.rows(); ++r) {
    // leading column of basis row r
    int lead = 0;
    while (lead < ambient_ && basis_.raw(r, lead) == 0) ++lead;
    if (lead == ambient_) continue;
    const int f = w[lead];
    if (f == 0) continue;
    const int neg = p_ - f;
    for (int c = lead; c < ambient_; ++c) {
      w[c] = static_cast<std::uint8_t>((w[c] + neg * basis_.raw(r, c)) % p_);
    }
  }
  return all_zero(w);
}

bool Subspace::contains_subspace(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.p_ != p_) throw ShapeError("ambient/modulus mismatch");
  for (int r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace nullspace(const Matrix& m) {
  RowReducer red(m.cols(), m.modulus());
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    red.insert(std::vector<std::uint8_t>(row.begin(), row.end()));
  }
  return solution_space(red);
}

Subspace solution_space(const RowReducer& red) {
  const int n = red.cols();
  const int p = red.modulus();
  const Matrix basis = red.basis_matrix();
  const std::vector<int> pivots = red.pivots();
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  RowReducer out(n, p);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(n, 0);
    v[f] = 1;
    for (int i = 0; i < basis.rows(); ++i) {
      const int coef = basis.raw(i, f);
      v[pivots[i]] = static_cast<std::uint8_t>(coef == 0 ? 0 : p - coef);  // x_pivot = -R[i][f]
    }
    out.insert(std::move(v));
  }
  return Subspace::span(out.basis_matrix());
}

std::optional<std::vector<Fp>> solve(const Matrix& m, const std::vector<Fp>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw ShapeError("rhs length differs from rows");
  const int p = m.modulus();
  Matrix aug(m.rows(), m.cols() + 1, p);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.set_raw(r, c, m.raw(r, c));
    if (rhs[r].modulus() != p) throw ModulusMismatchError("rhs modulus differs from matrix");
    aug.set_raw(r, m.cols(), rhs[r].value());
  }
  const RrefResult r = rref(aug);
  std::vector<Fp> x(m.cols(), Fp(0, p));
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
    x[r.pivots[i]] = Fp(r.reduced.raw(i, m.cols()), p);
  }
  return x;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("ambient dimension mismatch");
  if (u.modulus() != v.modulus()) throw ModulusMismatchError("mixed moduli");
  RowReducer red(u.ambient_dim(), u.modulus());
  for (int r = 0; r < u.dim(); ++r) red.insert(u.basis_vector(r));
  for (int r = 0; r < v.dim(); ++r) red.insert(v.basis_vector(r));
  return Subspace::span(red.basis_matrix());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("ambient dimension mismatch");
  if (u.modulus() != v.modulus()) throw ModulusMismatchError("mixed moduli");
  const int n = u.ambient_dim();
  const int p = u.modulus();
  const int ku = u.dim();
  const int kv = v.dim();
  if (ku == 0 || kv == 0) return Subspace(n, p);

  // x in U ∩ V  <=>  x = a·U_basis = b·V_basis; kernel of [U^T | -V^T]
  Matrix stacked(n, ku + kv, p);
  for (int r = 0; r < ku; ++r)
    for (int c = 0; c < n; ++c) stacked.set_raw(c, r, u.basis().raw(r, c));
  for (int r = 0; r < kv; ++r)
    for (int c = 0; c < n; ++c) {
      const int val = v.basis().raw(r, c);
      stacked.set_raw(c, ku + r, val == 0 ? 0 : p - val);
    }
  const Subspace ker = nullspace(stacked);

  RowReducer red(n, p);
  for (int i = 0; i < ker.dim(); ++i) {
    const auto coeffs = ker.basis_vector(i);
    std::vector<std::uint8_t> x(n, 0);
    for (int r = 0; r < ku; ++r) {
      if (coeffs[r] == 0) continue;
      for (int c = 0; c < n; ++c) {
        x[c] = static_cast<std::uint8_t>((x[c] + coeffs[r] * u.basis().raw(r, c)) % p);
      }
    }
    red.insert(std::move(x));
  }
  return Subspace::span(red.basis_matrix());
}

SparseRow normalize_sparse_row(SparseRow row, int p) {
  std::sort(row.begin(), row.end());
  SparseRow out;
  out.reserve(row.size());
  for (auto [c, v] : row) {
    const int r = v % p;
    if (r == 0) continue;
    if (!out.empty() && out.back().first == c) {
      const int s = add_mod(out.back().second, r, p);
      if (s == 0) {
        out.pop_back();
      } else {
        out.back().second = static_cast<std::uint8_t>(s);
      }
    } else {
      out.emplace_back(c, static_cast<std::uint8_t>(r));
    }
  }
  if (!out.empty() && out.front().second != 1) {
    const int inv = inv_mod(out.front().second, p);
    for (auto& [c, v] : out) v = static_cast<std::uint8_t>((inv * v) % p);
  }
  return out;
}

RowReducer reduce_sparse_rows(std::vector<SparseRow> rows, int cols, int p) {
  for (auto& r : rows) r = normalize_sparse_row(std::move(r), p);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  RowReducer red(cols, p);
  for (const auto& r : rows) {
    if (!r.empty()) red.insert_sparse(r);
  }
  return red;
}

}  // namespace mck
