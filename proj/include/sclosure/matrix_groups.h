#ifndef SCLOSURE_MATRIX_GROUPS_H
#define SCLOSURE_MATRIX_GROUPS_H

#include <memory>
#include <string>
#include <vector>

#include "sclosure/finite_field.h"
#include "sclosure/group.h"

namespace sclosure
{

/// Square matrix over a FieldSpec, row-major. Acts on row vectors: v -> vM.
struct FMatrix
{
  std::size_t n = 0;
  std::vector<Elt> a;

  FMatrix() = default;
  explicit FMatrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}

  Elt &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Elt operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static FMatrix identity(std::size_t dim);
  friend bool operator==(FMatrix const &, FMatrix const &) = default;
};

FMatrix mat_mul(FieldSpec const &F, FMatrix const &A, FMatrix const &B);
Elt mat_det(FieldSpec const &F, FMatrix A);
FMatrix mat_transpose(FMatrix const &A);

/// Entrywise x -> x^(p^k).
FMatrix mat_frobenius(FieldSpec const &F, FMatrix const &A, unsigned k);

enum class Family
{
  GL,
  SL,
  PSL,
  Sp4,
  SU3,
  PSU3
};

enum class Action
{
  NonzeroVectors,
  ProjectivePoints,
  IsotropicPoints
};

struct MatrixGroupSpec
{
  Family family = Family::SL;
  std::size_t dimension = 2;
  /// The q of the group name; for SU3 the matrices live over GF(q^2).
  std::uint64_t q = 2;
  std::shared_ptr<FieldSpec const> field;
  /// Gram matrix of the preserved form (empty for GL/SL/PSL).
  FMatrix form;
  Action default_action = Action::NonzeroVectors;

  static MatrixGroupSpec make(Family family, std::size_t dimension, std::uint64_t q);

  /// Parses `SL(2,19)`, `PSL(3,4)`, `GL(2,3)`, `Sp(4,3)`, `SU(3,3)`,
  /// `PSU(3,3)`, optionally followed by `:vectors`, `:projective` or
  /// `:isotropic`.
  static MatrixGroupSpec parse(std::string const &text);

  std::string name() const;
};

std::vector<FMatrix> classical_generators(MatrixGroupSpec const &spec);

/// Textbook order of the matrix group (before any projective quotient).
BigInt classical_order(MatrixGroupSpec const &spec);

/// Number of scalar matrices in the matrix group.
std::uint64_t scalar_count(MatrixGroupSpec const &spec);

/// M F M^* == F, with ^* the q-Frobenius transpose for SU3 and plain
/// transpose otherwise. True for families without a form.
bool preserves_form(MatrixGroupSpec const &spec, FMatrix const &M);

GeneratedGroup permutation_image(MatrixGroupSpec const &spec, Action action,
                                 Caps const &caps = default_caps());
GeneratedGroup permutation_image(MatrixGroupSpec const &spec,
                                 Caps const &caps = default_caps());

/// For the nonzero-vector action, the projective point (numbered as in the
/// projective action) containing each vector.
std::vector<std::uint32_t> projective_blocks(MatrixGroupSpec const &spec);

} // namespace sclosure

#endif // SCLOSURE_MATRIX_GROUPS_H
