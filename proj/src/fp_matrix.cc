#include "sclosure/fp_matrix.h"

#include <stdexcept>

namespace sclosure
{

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
  : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0)
{
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t p)
{
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::vector<FpVec> const &rows, std::size_t cols, std::uint64_t p)
{
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<std::uint32_t>(rows[i][j] % p);
  }
  return m;
}

FpVec FpMatrix::row(std::size_t i) const
{
  return FpVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<FpVec> FpMatrix::row_list() const
{
  std::vector<FpVec> out;
  for (std::size_t i = 0; i < rows_; ++i)
    out.push_back(row(i));
  return out;
}

FpMatrix operator*(FpMatrix const &A, FpMatrix const &B)
{
  if (A.cols() != B.rows() || A.p() != B.p())
    throw std::invalid_argument("matrix product: shape mismatch");
  std::uint64_t p = A.p();
  FpMatrix C(A.rows(), B.cols(), p);
  std::vector<std::uint64_t> acc(B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < A.cols(); ++k) {
      std::uint64_t a = A(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        acc[j] = (acc[j] + a * B(k, j)) % p;
    }
    for (std::size_t j = 0; j < B.cols(); ++j)
      C(i, j) = static_cast<std::uint32_t>(acc[j]);
  }
  return C;
}

FpMatrix operator+(FpMatrix const &A, FpMatrix const &B)
{
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  FpMatrix C(A.rows(), A.cols(), A.p());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      C(i, j) = static_cast<std::uint32_t>((std::uint64_t(A(i, j)) + B(i, j)) % A.p());
  return C;
}

FpMatrix operator-(FpMatrix const &A, FpMatrix const &B)
{
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("matrix difference: shape mismatch");
  FpMatrix C(A.rows(), A.cols(), A.p());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      C(i, j) = static_cast<std::uint32_t>((std::uint64_t(A(i, j)) + A.p() - B(i, j)) % A.p());
  return C;
}

FpMatrix transpose(FpMatrix const &A)
{
  FpMatrix T(A.cols(), A.rows(), A.p());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      T(j, i) = A(i, j);
  return T;
}

FpVec vec_mul(FpVec const &v, FpMatrix const &A)
{
  if (v.size() != A.rows())
    throw std::invalid_argument("vec_mul: shape mismatch");
  std::vector<std::uint64_t> acc(A.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::uint64_t a = v[k];
    if (a == 0)
      continue;
    for (std::size_t j = 0; j < A.cols(); ++j)
      acc[j] = (acc[j] + a * A(k, j)) % A.p();
  }
  return FpVec(acc.begin(), acc.end());
}

FpVec vec_add(FpVec const &a, FpVec const &b, std::uint64_t p)
{
  FpVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = static_cast<std::uint32_t>((std::uint64_t(a[i]) + b[i]) % p);
  return c;
}

FpVec vec_scale(FpVec const &a, std::uint64_t c, std::uint64_t p)
{
  FpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<std::uint32_t>((a[i] * (c % p)) % p);
  return out;
}

bool is_zero(FpVec const &v)
{
  for (auto x : v)
    if (x)
      return false;
  return true;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
  std::uint64_t r = 1, b = a % p, e = p - 2;
  if (b == 0)
    throw std::domain_error("inverse of zero mod p");
  while (e) {
    if (e & 1u)
      r = r * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return r;
}

FpMatrix rref(FpMatrix A, std::vector<std::size_t> *pivots)
{
  std::uint64_t p = A.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t piv = r;
    while (piv < A.rows() && A(piv, c) == 0)
      ++piv;
    if (piv == A.rows())
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < A.cols(); ++j)
        std::swap(A(piv, j), A(r, j));
    std::uint64_t inv = inv_mod(A(r, c), p);
    for (std::size_t j = 0; j < A.cols(); ++j)
      A(r, j) = static_cast<std::uint32_t>(A(r, j) * inv % p);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, c) == 0)
        continue;
      std::uint64_t f = A(i, c);
      for (std::size_t j = 0; j < A.cols(); ++j)
        A(i, j) = static_cast<std::uint32_t>((A(i, j) + (p - f) * A(r, j)) % p);
    }
    if (pivots)
      pivots->push_back(c);
    ++r;
  }
  return A;
}

std::size_t rank(FpMatrix const &A)
{
  std::vector<std::size_t> piv;
  rref(A, &piv);
  return piv.size();
}

FpMatrix left_kernel(FpMatrix const &A)
{
  // xA = 0  <=>  A^T x^T = 0
  FpMatrix T = transpose(A);
  std::vector<std::size_t> piv;
  FpMatrix R = rref(T, &piv);
  std::size_t n = T.cols();
  std::vector<bool> is_piv(n, false);
  for (auto c : piv)
    is_piv[c] = true;
  std::vector<FpVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f])
      continue;
    FpVec x(n, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      x[piv[i]] = static_cast<std::uint32_t>((A.p() - R(i, f)) % A.p());
    basis.push_back(std::move(x));
  }
  return FpMatrix::from_rows(basis, n, A.p());
}

std::optional<FpVec> solve_left(FpMatrix const &A, FpVec const &b)
{
  // A^T x^T = b^T via the augmented matrix
  std::uint64_t p = A.p();
  std::size_t n = A.rows(), m = A.cols();
  if (b.size() != m)
    throw std::invalid_argument("solve_left: shape mismatch");
  FpMatrix Aug(m, n + 1, p);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      Aug(i, j) = A(j, i);
    Aug(i, n) = b[i] % static_cast<std::uint32_t>(p);
  }
  std::vector<std::size_t> piv;
  FpMatrix R = rref(Aug, &piv);
  if (!piv.empty() && piv.back() == n)
    return std::nullopt;
  FpVec x(n, 0);
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[piv[i]] = R(i, n);
  return x;
}

FpVec RowSpace::reduce(FpVec v) const
{
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    std::uint64_t c = v[pivots_[k]];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + (p_ - c) * basis_[k][j]) % p_);
  }
  return v;
}

bool RowSpace::contains(FpVec v) const { return is_zero(reduce(std::move(v))); }

bool RowSpace::add(FpVec v)
{
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0)
    ++piv;
  if (piv == dim_)
    return false;
  std::uint64_t inv = inv_mod(v[piv], p_);
  for (auto &x : v)
    x = static_cast<std::uint32_t>(x * inv % p_);
  // keep the basis fully reduced
  for (auto &b : basis_) {
    std::uint64_t c = b[piv];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j)
      b[j] = static_cast<std::uint32_t>((b[j] + (p_ - c) * v[j]) % p_);
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

} // namespace sclosure
