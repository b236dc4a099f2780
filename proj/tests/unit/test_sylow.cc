#include "doctest.h"

#include "sclosure/group_algorithms.h"
#include "sclosure/matrix_groups.h"
#include "sclosure/sylow.h"

using namespace sclosure;

namespace
{

Permutation P(std::size_t n, char const *s) { return Permutation::parse(s, n); }

GeneratedGroup alt(std::size_t n)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return GeneratedGroup(n, gens);
}

GeneratedGroup cyclic_product(std::vector<std::size_t> const &orders)
{
  std::size_t n = 0;
  for (auto o : orders)
    n += o;
  std::vector<Permutation> gens;
  std::size_t off = 0;
  for (auto o : orders) {
    std::vector<Point> cyc;
    for (std::size_t i = 0; i < o; ++i)
      cyc.push_back(static_cast<Point>(off + i));
    gens.push_back(Permutation::from_cycles(n, {cyc}));
    off += o;
  }
  return GeneratedGroup(n, gens);
}

bool conjugate_subgroups(GeneratedGroup const &G, GeneratedGroup const &A,
                         GeneratedGroup const &B)
{
  bool found = false;
  G.for_each_element(
    [&](Permutation const &g) {
      if (found)
        return;
      for (auto const &a : A.generators())
        if (!B.contains(conjugate(a, g)))
          return;
      found = true;
    },
    1'000'000);
  return found;
}

} // namespace

TEST_CASE("Sylow subgroups have the full p-part")
{
  GeneratedGroup S4(4, {P(4, "(0 1 2 3)"), P(4, "(0 1)")});
  auto T = sylow_subgroup(S4, 2);
  CHECK(T.order() == 8);
  CHECK_FALSE(is_abelian(T));

  CHECK(sylow_subgroup(alt(9), 3).order() == 81);
  CHECK(sylow_subgroup(S4, 5).order() == 1);

  auto L = permutation_image(MatrixGroupSpec::parse("PSL(2,19)"));
  auto S = sylow_subgroup(L, 3);
  CHECK(S.order() == 9);
  CHECK(is_cyclic(S));
}

TEST_CASE("Sylow subgroups are conjugate and N_G(S) has index 1 mod p")
{
  auto G = alt(6);
  GeneratedGroup G2(6, {P(6, "(0 1 2 3 4)"), P(6, "(3 4 5)"), P(6, "(0 5)(1 2)")});
  REQUIRE(G2.same_group(G));
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto A = sylow_subgroup(G, p);
    auto B = sylow_subgroup(G2, p);
    CHECK(conjugate_subgroups(G, A, B));
    auto idx = G.order() / normalizer(G, A).order();
    CHECK(idx % p == 1);
  }
}

TEST_CASE("profile of U3(3) Sylow 3")
{
  auto U = permutation_image(MatrixGroupSpec::parse("PSU(3,3)"));
  auto S = sylow_subgroup(U, 3);
  auto prof = p_group_profile(S, 3);
  CHECK(prof.order == 27);
  CHECK(prof.special);
  CHECK(prof.center.order() == 3);
  CHECK(prof.frattini.same_group(prof.center));
  CHECK(prof.derived.same_group(prof.center));
  CHECK_FALSE(prof.homocyclic.has_value());
}

TEST_CASE("homocyclic invariants")
{
  auto h = homocyclic_invariants(cyclic_product({25, 25}), 5);
  REQUIRE(h.has_value());
  CHECK(*h == Homocyclic{2, 25});
  CHECK_FALSE(homocyclic_invariants(cyclic_product({9, 3}), 3).has_value());
  CHECK(*abelian_invariants(cyclic_product({9, 3}), 3) == std::vector<std::uint64_t>{9, 3});

  auto prof = p_group_profile(cyclic_product({9}), 3);
  REQUIRE(prof.homocyclic.has_value());
  CHECK(*prof.homocyclic == Homocyclic{1, 9});
  CHECK(prof.exponent == 9);
  CHECK(prof.omega1.order() == 3);
  CHECK(prof.frattini.order() == 3);

  auto sl34 = permutation_image(MatrixGroupSpec::parse("SL(3,4)"));
  auto S = sylow_subgroup(sl34, 3);
  CHECK(S.order() == 27);
  CHECK_FALSE(homocyclic_invariants(S, 3).has_value());
}

TEST_CASE("profile cap")
{
  Caps caps;
  caps.max_pgroup = 8;
  CHECK_THROWS_AS(p_group_profile(cyclic_product({9}), 3, caps), CapExceeded);
  CHECK_THROWS_AS(p_group_profile(cyclic_product({6}), 3), std::invalid_argument);
}

TEST_CASE("characteristic subgroups are normalized by N_G(S)")
{
  auto L = permutation_image(MatrixGroupSpec::parse("PSL(3,4)"));
  auto S = sylow_subgroup(L, 2);
  auto prof = p_group_profile(S, 2);
  auto N = normalizer(L, S);
  CHECK(is_normal(N, prof.center));
  CHECK(is_normal(N, prof.omega1));
  CHECK(is_normal(N, prof.frattini));
}
