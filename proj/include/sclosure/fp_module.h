#ifndef SCLOSURE_FP_MODULE_H
#define SCLOSURE_FP_MODULE_H

#include <functional>
#include <memory>
#include <unordered_map>
#include <string>
#include <vector>

#include "sclosure/fp_matrix.h"
#include "sclosure/group_algorithms.h"

namespace sclosure
{

/**
 * Right F_p[R]-module of row vectors: v -> v * M(g), with M(gh) = M(g) M(h).
 * Permutation modules also carry the action on basis points, so that
 * M(g) sends e_i to e_{g(i)}.
 */
struct FpModule
{
  std::uint64_t p = 2;
  std::size_t dim = 0;
  GeneratedGroup group;
  std::function<FpMatrix(Permutation const &)> matrix_of;
  /// Set for permutation modules only.
  std::function<Permutation(Permutation const &)> point_action;
  std::vector<std::string> labels;

  bool is_permutation_module() const { return static_cast<bool>(point_action); }
  FpVec act(FpVec const &v, Permutation const &g) const;
  std::vector<FpMatrix> generator_matrices() const;
};

FpModule perm_module(GeneratedGroup R, std::size_t npoints,
                     std::function<Permutation(Permutation const &)> action, std::uint64_t p);

/// R acting on its own points.
FpModule natural_perm_module(GeneratedGroup R, std::uint64_t p);

/// R acting on the right cosets of X; dimension |R:X|.
FpModule coset_perm_module(GeneratedGroup R, GeneratedGroup const &X, std::uint64_t p);

/// R acting on the blocks of an R-invariant partition of its points.
FpModule block_perm_module(GeneratedGroup R, std::vector<std::uint32_t> const &block_of_point,
                           std::uint64_t p);

/// Every g in `sample` and every pair from it satisfies M(gh) = M(g)M(h).
bool respects_products(FpModule const &M, std::vector<Permutation> const &sample);

/// Basis (rows) of {v : vM(h) = v for every h in H}.
FpMatrix fixed_points(FpModule const &M, std::vector<Permutation> const &H);
FpMatrix fixed_points(FpModule const &M, GeneratedGroup const &H);

struct NormData
{
  Permutation x;
  /// N_x = sum of M(x^i), i = 0..p-1.
  FpMatrix norm;
  FpMatrix image_basis;
  FpMatrix fixed_basis;
};

NormData norm_data(FpModule const &M, Permutation const &x);

struct RestrictionProfile
{
  std::size_t fixed_dim = 0;
  /// rank(N_x), the number of free summands.
  std::size_t free_rank = 0;
  bool is_free = false;
  /// For permutation modules: span of the x-fixed basis points.
  FpMatrix E1_basis;
  std::size_t fixed_basis_points = 0;
  std::size_t regular_orbits = 0;
  NormData norm;
};

/// Restriction to <x>, x of order p. For permutation modules the orbit
/// criterion (no fixed basis points) is cross-checked against the norm-rank
/// criterion.
RestrictionProfile restriction_profile(FpModule const &M, Permutation const &x);

struct SpinResult
{
  std::vector<FpVec> orbit;
  FpMatrix spin;
};

/// Orbit of v under the group (up to `orbit_cap` vectors) and the smallest
/// submodule containing v.
SpinResult orbit_and_span(FpModule const &M, FpVec const &v, std::size_t orbit_cap = 100000);

/// Tries the spin of every nonzero vector up to scalars; dim <= 6.
bool is_irreducible_brute(FpModule const &M);

/// Conjugation action of N on an elementary abelian p-group V that N
/// normalizes. Coordinates refer to `basis`.
struct ConjugationModule
{
  FpModule module;
  std::vector<Permutation> basis;
  std::shared_ptr<std::unordered_map<Permutation, FpVec, PermutationHash> const> table;

  FpVec coordinates(Permutation const &v) const;
  Permutation element(FpVec const &c) const;
};

ConjugationModule conjugation_module(GeneratedGroup const &N, GeneratedGroup const &V,
                                     std::uint64_t p, Caps const &caps = default_caps());

} // namespace sclosure

#endif // SCLOSURE_FP_MODULE_H
