#pragma once

// Exact linear algebra over Z (arbitrary precision) and F2.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace s2s2::linalg {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix hstack(const IntMatrix& right) const;
  IntMatrix vstack(const IntMatrix& below) const;
  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// u * original * v = d, u and v unimodular, d diagonal with d1 | d2 | ... >= 0.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Canonicalizes an arbitrary list of cyclic orders (0 means Z, 1 is dropped).
  static AbelianInvariants from_cyclic_orders(const std::vector<Integer>& orders);
  static AbelianInvariants z(std::size_t rank = 1) { return {rank, {}}; }
  static AbelianInvariants trivial() { return {}; }

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Number of Z/2 summands in the reduction mod 2 (rank of G (x) F2).
  std::size_t mod2_dimension() const;
  /// True for elementary abelian 2-groups (including 0).
  bool is_elementary_2group() const;

  /// "0", "Z", "Z/2", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;
  static AbelianInvariants parse(const std::string& text);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Invariants of Z^rows / image(m).
AbelianInvariants cokernel_invariants(const IntMatrix& m);

/// Invariants of ker(boundary_out) / im(boundary_in). Throws CompositionNonzero.
AbelianInvariants subquotient_invariants(const IntMatrix& boundary_in, const IntMatrix& boundary_out);

/// Same, for the complex reduced mod `modulus` (chain groups (Z/modulus)^k).
AbelianInvariants subquotient_invariants_mod(const IntMatrix& boundary_in, const IntMatrix& boundary_out,
                                             const Integer& modulus);

/// Columns form a Z-basis of {x : m x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/// Invariants of L / B where the columns of `lattice` are a basis of L and
/// the columns of `generators` lie in L.
AbelianInvariants lattice_quotient(const IntMatrix& lattice, const IntMatrix& generators);

std::size_t rank(const IntMatrix& m);
/// Inverse of a square matrix with determinant +-1; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/// Dense matrix over F2.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}
  F2Matrix(std::initializer_list<std::initializer_list<int>> rows);

  static F2Matrix identity(std::size_t n);
  static F2Matrix reduce(const IntMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
  void flip(std::size_t r, std::size_t c) { bits_[r * cols_ + c] ^= 1; }

  F2Matrix transpose() const;
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Reduced row echelon form and pivot columns.
struct F2Echelon {
  F2Matrix reduced;
  std::vector<std::size_t> pivots;
};
F2Echelon f2_row_reduce(const F2Matrix& m);

std::size_t f2_rank(const F2Matrix& m);
/// One vector per free column: 1 at that column, pivot entries fixed by the RREF.
std::vector<std::vector<std::uint8_t>> f2_kernel_basis(const F2Matrix& m);
/// Dimension of F2^rows / image(m).
std::size_t f2_quotient_dim(const F2Matrix& m);
/// Solves m x = b; empty optional-like result signalled by returning false.
bool f2_solve(const F2Matrix& m, const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x);

}  // namespace s2s2::linalg
