#ifndef SCLOSURE_FP_MATRIX_H
#define SCLOSURE_FP_MATRIX_H

#include <cstdint>
#include <optional>
#include <vector>

namespace sclosure
{

using FpVec = std::vector<std::uint32_t>;

/// Dense matrix over the prime field F_p, row-major. Vectors are rows and
/// matrices act on the right: v -> vA.
class FpMatrix
{
public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);

  static FpMatrix identity(std::size_t n, std::uint64_t p);
  static FpMatrix from_rows(std::vector<FpVec> const &rows, std::size_t cols, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t p() const { return p_; }

  std::uint32_t &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FpVec row(std::size_t i) const;
  std::vector<FpVec> row_list() const;

  friend bool operator==(FpMatrix const &, FpMatrix const &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint64_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

FpMatrix operator*(FpMatrix const &A, FpMatrix const &B);
FpMatrix operator+(FpMatrix const &A, FpMatrix const &B);
FpMatrix operator-(FpMatrix const &A, FpMatrix const &B);
FpMatrix transpose(FpMatrix const &A);

FpVec vec_mul(FpVec const &v, FpMatrix const &A);
FpVec vec_add(FpVec const &a, FpVec const &b, std::uint64_t p);
FpVec vec_scale(FpVec const &a, std::uint64_t c, std::uint64_t p);
bool is_zero(FpVec const &v);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Reduced row echelon form; pivot columns are appended to `pivots`.
FpMatrix rref(FpMatrix A, std::vector<std::size_t> *pivots = nullptr);
std::size_t rank(FpMatrix const &A);

/// Basis (as rows) of {x : xA = 0}.
FpMatrix left_kernel(FpMatrix const &A);

/// Some x with xA = b, if one exists.
std::optional<FpVec> solve_left(FpMatrix const &A, FpVec const &b);

/// Incrementally grown row space in echelon form.
class RowSpace
{
public:
  RowSpace(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  /// Adds v; returns true if it enlarged the space.
  bool add(FpVec v);
  bool contains(FpVec v) const;
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return dim_; }
  std::vector<FpVec> const &basis() const { return basis_; }

private:
  FpVec reduce(FpVec v) const;
  std::size_t dim_;
  std::uint64_t p_;
  std::vector<FpVec> basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace sclosure

#endif // SCLOSURE_FP_MATRIX_H
