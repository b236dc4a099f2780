#include "doctest.h"

#include "sclosure/indexed_group.h"
#include "sclosure/matrix_groups.h"
#include "sclosure/strong_closure.h"
#include "sclosure/sylow.h"

using namespace sclosure;

namespace
{

Permutation P(std::size_t n, char const *s) { return Permutation::parse(s, n); }

GeneratedGroup A9()
{
  return GeneratedGroup(9, {P(9, "(0 1 2)"), P(9, "(2 3 4 5 6 7 8)")});
}

std::vector<BigInt> orders(std::vector<GeneratedGroup> const &gs)
{
  std::vector<BigInt> out;
  for (auto const &g : gs)
    out.push_back(g.order());
  return out;
}

} // namespace

TEST_CASE("U3(3) at p = 3")
{
  auto G = permutation_image(MatrixGroupSpec::parse("PSU(3,3)"));
  auto S = sylow_subgroup(G, 3);
  FusionData F(G, S, 3);
  auto Z = center(S);
  CHECK(Z.order() == 3);
  CHECK(is_strongly_closed(F, Z).closed);
  CHECK(is_strongly_closed(F, S).closed);

  auto all = all_strongly_closed_brute(F);
  CHECK(orders(all) == std::vector<BigInt>{1, 3, 27});
  CHECK(all[1].same_group(Z));

  auto mins = minimal_strongly_closed(F);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].same_group(Z));

  auto N = normalizer(G, S);
  CHECK(N.order() == 216);
  CHECK(normalizer(G, Z).same_group(N));
  for (auto mode : {FusionMode::Element, FusionMode::Cyclic, FusionMode::Subset})
    CHECK(fusion_control(F, N, mode).controls);
}

TEST_CASE("A9 at p = 3")
{
  auto G = A9();
  REQUIRE(G.order() == 181440);
  auto S = sylow_subgroup(G, 3);
  FusionData F(G, S, 3);

  Permutation c;
  for (std::size_t i = 0; i < F.s_size(); ++i)
    if (F.s_element(i).cycles().size() == 1 && F.s_element(i).order() == 3) {
      c = F.s_element(i);
      break;
    }
  REQUIRE(c.degree() == 9);
  GeneratedGroup C(9, {c});
  auto chk = is_strongly_closed(F, C);
  CHECK_FALSE(chk.closed);
  REQUIRE(chk.witness.has_value());
  CHECK(chk.witness->replays());
  CHECK(S.contains(chk.witness->b));
  CHECK_FALSE(C.contains(chk.witness->b));

  CHECK(strong_closure(F, {c}).order() == 81);
  auto mins = minimal_strongly_closed(F);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].same_group(S));
}

TEST_CASE("PSL2(19) at p = 3")
{
  auto G = permutation_image(MatrixGroupSpec::parse("PSL(2,19)"));
  auto S = sylow_subgroup(G, 3);
  FusionData F(G, S, 3);
  Permutation z = S.generators().front().pow(3);
  if (z.is_identity())
    z = S.generators().front();
  CHECK(strong_closure(F, {z}).order() == 3);
  CHECK(orders(all_strongly_closed_brute(F)) == std::vector<BigInt>{1, 3, 9});
  CHECK(omega_bar(F).order() == 3);
  CHECK(fusion_control(F, normalizer(G, S), FusionMode::Element).controls);
}

TEST_CASE("S4 at p = 2")
{
  GeneratedGroup G(4, {P(4, "(0 1 2 3)"), P(4, "(0 1)")});
  auto S = sylow_subgroup(G, 2);
  FusionData F(G, S, 2);
  auto all = all_strongly_closed_brute(F);
  bool has_S = false;
  for (auto const &A : all)
    has_S |= A.same_group(S);
  CHECK(has_S);
  for (std::size_t i = 0; i < F.s_size(); ++i) {
    if (F.s_element(i).order() != 2)
      continue;
    auto A = strong_closure(F, {F.s_element(i)});
    bool listed = false;
    for (auto const &B : all)
      listed |= B.same_group(A);
    CHECK(listed);
  }
  // brute list agrees with the direct test
  IndexedGroup IS(S, 81);
  std::size_t closed = 0;
  for (auto const &H : IS.all_subgroups())
    closed += is_strongly_closed(F, IS.to_group(H.members), false).closed;
  CHECK(closed == all.size());

  // S alone does not control fusion: (0 2)(1 3)-type central involution
  auto v = fusion_control(F, S, FusionMode::Element);
  CHECK_FALSE(v.controls);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->replays());
  CHECK_FALSE(fusion_control(F, S, FusionMode::Subset).controls);
  CHECK(fusion_control(F, G, FusionMode::Subset).controls);
}

TEST_CASE("script O")
{
  GeneratedGroup S4(4, {P(4, "(0 1 2 3)"), P(4, "(0 1)")});
  auto S = sylow_subgroup(S4, 2);
  CHECK(script_O(S4, S, 2).same_group(S4));
  CHECK(script_O(S4, GeneratedGroup::trivial(4), 3).order() == 4);
  CHECK(script_O(S4, GeneratedGroup::trivial(4), 3).same_group(o_p_prime(S4, 3)));

  GeneratedGroup A5(5, {P(5, "(0 1 2)"), P(5, "(0 1 2 3 4)")});
  auto G = direct_product(A5, GeneratedGroup(3, {P(3, "(0 1 2)")}));
  GeneratedGroup A(8, {P(8, "(5 6 7)")});
  auto N = script_O(G, A, 3);
  CHECK(N.same_group(A));
}

TEST_CASE("inputs outside S are rejected")
{
  GeneratedGroup S4(4, {P(4, "(0 1 2 3)"), P(4, "(0 1)")});
  auto S = sylow_subgroup(S4, 2);
  FusionData F(S4, S, 2);
  Permutation outside = P(4, "(0 1 2)");
  CHECK_THROWS_AS(is_strongly_closed(F, GeneratedGroup(4, {outside})), std::invalid_argument);
  CHECK_THROWS_AS(strong_closure(F, {outside}), std::invalid_argument);
  CHECK_THROWS_AS(fusion_control(F, GeneratedGroup(4, {outside}), FusionMode::Element),
                  std::invalid_argument);
}
