#include "mck/matrix.hpp"

#include <sstream>

namespace mck {

Matrix::Matrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  require_prime(p);
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(int n, int p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set_raw(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Fp>>& rows) {
  if (rows.empty()) throw ShapeError("from_rows needs at least one row");
  const int p = rows[0].empty() ? 0 : rows[0][0].modulus();
  if (rows[0].empty()) throw ShapeError("from_rows needs nonempty rows");
  const int cols = static_cast<int>(rows[0].size());
  Matrix m(static_cast<int>(rows.size()), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw ShapeError("ragged rows");
    for (int c = 0; c < cols; ++c) {
      if (rows[r][c].modulus() != p) {
        throw ModulusMismatchError("mixed moduli among matrix entries");
      }
      m.set_raw(static_cast<int>(r), c, rows[r][c].value());
    }
  }
  return m;
}

void Matrix::set(int r, int c, Fp v) {
  if (v.modulus() != p_) throw ModulusMismatchError("entry modulus differs from matrix modulus");
  set_raw(r, c, v.value());
}

bool Matrix::is_zero() const {
  for (auto b : data_)
    if (b != 0) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set_raw(c, r, raw(r, c));
  return t;
}

void Matrix::check_same_shape(const Matrix& rhs) const {
  if (p_ != rhs.p_) throw ModulusMismatchError("mixed moduli in matrix arithmetic");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shape mismatch");
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (p_ != rhs.p_) throw ModulusMismatchError("mixed moduli in matrix product");
  if (cols_ != rhs.rows_) throw ShapeError("inner dimensions differ in matrix product");
  Matrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const int a = raw(i, k);
      if (a == 0) continue;
      auto rhs_row = rhs.row(k);
      auto out_row = out.row(i);
      for (int j = 0; j < rhs.cols_; ++j) {
        out_row[j] = static_cast<std::uint8_t>((out_row[j] + a * rhs_row[j]) % p_);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  check_same_shape(rhs);
  Matrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = static_cast<std::uint8_t>(add_mod(data_[i], rhs.data_[i], p_));
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  check_same_shape(rhs);
  Matrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = static_cast<std::uint8_t>(sub_mod(data_[i], rhs.data_[i], p_));
  }
  return out;
}

Matrix Matrix::scaled(Fp f) const {
  if (f.modulus() != p_) throw ModulusMismatchError("scalar modulus differs from matrix modulus");
  Matrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = static_cast<std::uint8_t>(mul_mod(data_[i], f.value(), p_));
  }
  return out;
}

std::vector<std::uint8_t> Matrix::apply(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeError("vector length differs from cols");
  std::vector<std::uint8_t> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    long long acc = 0;
    auto rr = row(r);
    for (int c = 0; c < cols_; ++c) acc += rr[c] * v[c];
    out[r] = static_cast<std::uint8_t>(acc % p_);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << static_cast<int>(raw(r, c));
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

std::vector<std::uint8_t> to_raw(const std::vector<Fp>& v, int expected_p) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].modulus() != expected_p) throw ModulusMismatchError("mixed moduli in vector");
    out[i] = static_cast<std::uint8_t>(v[i].value());
  }
  return out;
}

std::vector<Fp> to_fp(std::span<const std::uint8_t> v, int p) {
  std::vector<Fp> out;
  out.reserve(v.size());
  for (auto b : v) out.emplace_back(b, p);
  return out;
}

bool all_zero(std::span<const std::uint8_t> v) {
  for (auto b : v)
    if (b != 0) return false;
  return true;
}

Matrix matrix_from_flat(std::span<const std::uint8_t> flat, int rows, int cols, int p) {
  if (static_cast<std::size_t>(rows) * cols != flat.size()) {
    throw ShapeError("flat length does not match rows*cols");
  }
  Matrix m(rows, cols, p);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set_raw(r, c, flat[static_cast<std::size_t>(r) * cols + c]);
  return m;
}

}  // namespace mck
