#include "doctest.h"

#include "sclosure/fp_module.h"
#include "sclosure/matrix_groups.h"
#include "sclosure/sylow.h"

using namespace sclosure;

namespace
{

Permutation P(std::size_t n, char const *s) { return Permutation::parse(s, n); }

GeneratedGroup A6()
{
  return GeneratedGroup(6, {P(6, "(0 1 2)"), P(6, "(1 2 3 4 5)")});
}

} // namespace

TEST_CASE("row reduction")
{
  auto A = FpMatrix::from_rows({{1, 2, 0}, {2, 4, 0}, {0, 1, 1}}, 3, 5);
  CHECK(rank(A) == 2);
  auto K = left_kernel(A);
  REQUIRE(K.rows() == 1);
  CHECK(is_zero(vec_mul(K.row(0), A)));

  auto x = solve_left(A, {1, 3, 1});
  REQUIRE(x.has_value());
  CHECK(vec_mul(*x, A) == FpVec{1, 3, 1});
  CHECK_FALSE(solve_left(A, {1, 0, 0}).has_value());

  RowSpace rs(3, 5);
  CHECK(rs.add({1, 2, 0}));
  CHECK_FALSE(rs.add({2, 4, 0}));
  CHECK(rs.contains({3, 1, 0}));
  CHECK(rs.add({0, 0, 3}));
  CHECK(rs.dim() == 2);
}

TEST_CASE("permutation modules")
{
  GeneratedGroup S3(3, {P(3, "(0 1 2)"), P(3, "(0 1)")});
  auto M = natural_perm_module(S3, 3);
  CHECK(M.dim == 3);
  CHECK(fixed_points(M, S3).rows() == 1);
  CHECK(fixed_points(M, GeneratedGroup::trivial(3)).rows() == 3);
  CHECK(respects_products(M, S3.elements(10)));

  auto E = coset_perm_module(A6(), GeneratedGroup(6, {P(6, "(0 1 2)")}), 3);
  CHECK(E.dim == 120);

  auto spec = MatrixGroupSpec::parse("SL(2,19)");
  auto R = permutation_image(spec, Action::NonzeroVectors);
  auto L = block_perm_module(R, projective_blocks(spec), 3);
  CHECK(L.dim == 20);
  std::vector<Permutation> sample{R.generators().begin(), R.generators().end()};
  sample.push_back(compose(sample[0], sample[1]));
  CHECK(respects_products(L, sample));
}

TEST_CASE("regular module of Z3")
{
  GeneratedGroup Z3(3, {P(3, "(0 1 2)")});
  auto M = natural_perm_module(Z3, 3);
  auto F = fixed_points(M, Z3);
  REQUIRE(F.rows() == 1);
  CHECK(F.row(0) == FpVec{1, 1, 1});
  auto rp = restriction_profile(M, P(3, "(0 1 2)"));
  CHECK(rp.is_free);
  CHECK(rp.free_rank == 1);
  CHECK(rp.fixed_dim == 1);
  CHECK(rp.norm.norm * M.matrix_of(P(3, "(0 1 2)")) == rp.norm.norm);
}

TEST_CASE("coinduced module restricted to Z and X")
{
  auto R = A6();
  GeneratedGroup X(6, {P(6, "(0 1 2)")});
  auto E = coset_perm_module(R, X, 3);
  auto z = P(6, "(0 1 2)(3 4 5)");
  auto rz = restriction_profile(E, z);
  CHECK(rz.is_free);
  CHECK(rz.fixed_basis_points == 0);
  CHECK(rz.regular_orbits == 40);

  auto rx = restriction_profile(E, P(6, "(0 1 2)"));
  CHECK_FALSE(rx.is_free);
  // X t fixed by x iff t x t^-1 in X: |N_R(X) : X| = 6 cosets
  CHECK(rx.fixed_basis_points == 6);
  CHECK(rx.E1_basis.rows() == 6);
  CHECK(rx.fixed_dim == 6 + 38);
  CHECK_THROWS_AS(restriction_profile(E, P(6, "(0 1)(2 3)")), std::invalid_argument);
}

TEST_CASE("spin and irreducibility")
{
  GeneratedGroup S3(3, {P(3, "(0 1 2)"), P(3, "(0 1)")});
  auto M = natural_perm_module(S3, 2);
  auto s = orbit_and_span(M, {1, 0, 0});
  CHECK(s.orbit.size() == 3);
  CHECK(s.spin.rows() == 3);
  CHECK(orbit_and_span(M, {1, 1, 1}).spin.rows() == 1);
  CHECK_FALSE(is_irreducible_brute(M));

  // trivial action on dimension 2
  FpModule T;
  T.p = 3;
  T.dim = 2;
  T.group = GeneratedGroup(3, {P(3, "(0 1 2)")});
  T.matrix_of = [](Permutation const &) { return FpMatrix::identity(2, 3); };
  CHECK_FALSE(is_irreducible_brute(T));
}

TEST_CASE("Omega_1 modules")
{
  auto G = permutation_image(MatrixGroupSpec::parse("PSL(2,19)"));
  auto S = sylow_subgroup(G, 3);
  auto prof = p_group_profile(S, 3);
  auto N = normalizer(G, S);
  auto cm = conjugation_module(N, prof.omega1, 3);
  CHECK(cm.module.dim == 1);
  CHECK(is_irreducible_brute(cm.module));

  auto L = permutation_image(MatrixGroupSpec::parse("PSL(3,4)"));
  auto T = sylow_subgroup(L, 3);
  auto pt = p_group_profile(T, 3);
  auto NT = normalizer(L, T);
  auto cm2 = conjugation_module(NT, pt.omega1, 3);
  CHECK(cm2.module.dim == 2);
  CHECK(is_irreducible_brute(cm2.module));
  CHECK(respects_products(cm2.module, NT.elements(1000)));
}
