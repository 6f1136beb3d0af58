#ifndef MCK_MATRIX_HPP
#define MCK_MATRIX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mck/fp.hpp"

namespace mck {

/// Dense row-major matrix over GF(p). Entries are stored as raw residues
/// in [0, p) with the modulus held once per matrix.
class Matrix {
 public:
  Matrix(int rows, int cols, int p);

  static Matrix identity(int n, int p);
  static Matrix from_rows(const std::vector<std::vector<Fp>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return p_; }

  Fp at(int r, int c) const { return Fp(raw(r, c), p_); }
  void set(int r, int c, Fp v);

  std::uint8_t raw(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set_raw(int r, int c, int v) {
    data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(v);
  }

  std::span<const std::uint8_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<std::uint8_t> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  bool is_zero() const;
  Matrix transposed() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Fp f) const;

  /// M * v for a column vector of residues.
  std::vector<std::uint8_t> apply(std::span<const std::uint8_t> v) const;

  /// Rows concatenated into one (rows*cols)-long residue vector.
  std::vector<std::uint8_t> flattened() const { return data_; }

  bool operator==(const Matrix&) const = default;

  std::string to_string() const;

 private:
  int rows_;
  int cols_;
  int p_;
  std::vector<std::uint8_t> data_;

  void check_same_shape(const Matrix& rhs) const;
};

/// Residue vector helpers (all entries already reduced mod p).
std::vector<std::uint8_t> to_raw(const std::vector<Fp>& v, int expected_p);
std::vector<Fp> to_fp(std::span<const std::uint8_t> v, int p);
bool all_zero(std::span<const std::uint8_t> v);

Matrix matrix_from_flat(std::span<const std::uint8_t> flat, int rows, int cols, int p);

}  // namespace mck

#endif
