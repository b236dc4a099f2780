#include "doctest.h"

#include "sclosure/extensions.h"
#include "sclosure/matrix_groups.h"

using namespace sclosure;

namespace
{

Permutation P(std::size_t n, char const *s) { return Permutation::parse(s, n); }

GeneratedGroup sym3() { return GeneratedGroup(3, {P(3, "(0 1 2)"), P(3, "(0 1)")}); }

GeneratedGroup alt6()
{
  return GeneratedGroup(6, {P(6, "(0 1 2)"), P(6, "(1 2 3 4 5)")});
}

} // namespace

TEST_CASE("split extension of S3 by its permutation module")
{
  auto G = split_extension(natural_perm_module(sym3(), 3));
  CHECK(G.order() == 162);
  auto W = wreath_realization(G);
  CHECK(W.degree() == 9);
  CHECK(W.order() == 162);
  auto Reg = regular_realization(G);
  CHECK(Reg.degree() == 162);
  auto pairs = order_census(G, 10000);
  CHECK(pairs == order_census(Reg));
  CHECK(pairs == order_census(W));

  // (0, r) is a section and every (e, 1) has order p
  auto a = ExtensionGroup::Element{{0, 0, 0}, P(3, "(0 1 2)")};
  auto b = ExtensionGroup::Element{{0, 0, 0}, P(3, "(0 1)")};
  CHECK(G.mul(a, b).r == compose(a.r, b.r));
  CHECK(is_zero(G.mul(a, b).e));
  CHECK(G.element_order({{1, 2, 0}, Permutation(3)}) == 3);
  auto c = ExtensionGroup::Element{{1, 0, 2}, P(3, "(0 1 2)")};
  CHECK(G.mul(c, G.inverse(c)) == G.identity());
  CHECK(G.mul(G.inverse(c), c) == G.identity());
}

TEST_CASE("trivial R gives the module itself")
{
  GeneratedGroup one = GeneratedGroup::trivial(2);
  auto G = split_extension(natural_perm_module(one, 3));
  CHECK(G.order() == 9);
  auto census = order_census(G, 100);
  CHECK(census == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {3, 8}});
}

TEST_CASE("one coset: the carry cocycle gives Z/9")
{
  GeneratedGroup X(3, {P(3, "(0 1 2)")});
  auto d = shapiro_cocycle(X, P(3, "(0 1 2)"), 3);
  auto G = coinduced_extension(d);
  CHECK(G.dim() == 1);
  CHECK(G.element_order({{0}, P(3, "(0 1 2)")}) == 9);
  auto census = order_census(G, 100);
  CHECK(census == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {3, 2}, {9, 6}});
  CHECK(coset_min_order(G, P(3, "(0 1 2)")).min_order == 9);
}

TEST_CASE("coinduced extension of S3")
{
  auto d = shapiro_cocycle(sym3(), P(3, "(0 1 2)"), 3);
  auto G = coinduced_extension(d);
  CHECK(G.dim() == 2);
  auto chk = check_cocycle(G, 0);
  CHECK(chk.exhaustive);
  CHECK(chk.triples == 216);
  CHECK(chk.failures == 0);
  CHECK(chk.normalized);

  auto Reg = regular_realization(G);
  CHECK(Reg.order() == 54);
  CHECK(order_census(G, 1000) == order_census(Reg));

  CHECK(coset_min_order(G, Permutation(3)).min_order == 1);
  CHECK_THROWS_AS(coset_min_order(G, P(3, "(0 1)")), InputError);

  auto rep = verify_prop42(sym3(), P(3, "(0 1 2)"), {}, 3);
  CHECK(rep.ok);
  CHECK(rep.min_order_x == 9);
  CHECK(rep.z.empty());
}

TEST_CASE("transversal decomposition")
{
  auto d = shapiro_cocycle(alt6(), P(6, "(0 1 2)"), 3, default_caps());
  auto const &t = d.table->transversal();
  CHECK(t.reps().size() == 120);
  for (auto r : {P(6, "(0 1 2)(3 4 5)"), P(6, "(1 2 3 4 5)"), P(6, "(0 3)(1 4)")}) {
    auto [u, idx] = t.decompose(r);
    CHECK(compose(t.x.pow(u), t.reps()[idx]) == r);
  }
}

TEST_CASE("coinduced extension of A6 over <(0 1 2)>")
{
  auto rep = verify_prop42(alt6(), P(6, "(0 1 2)"), {P(6, "(0 1 2)(3 4 5)")}, 3, 5000);
  CHECK(rep.dim == 120);
  CHECK(rep.cocycle.failures == 0);
  CHECK(rep.cocycle.triples >= 5000);
  CHECK(rep.min_order_x == 9);
  CHECK(rep.C_x_E1_nonzero);
  CHECK(rep.E1_dim == 6);
  CHECK(rep.E1_expected == 6);
  REQUIRE(rep.z.size() == 1);
  CHECK_FALSE(rep.z[0].conjugate_into_X);
  CHECK(rep.z[0].min_order == 3);
  CHECK(rep.z[0].witness_replays);
  CHECK(rep.z[0].free);
  CHECK(rep.z[0].regular_orbits == 40);
  CHECK(rep.ok);
}

TEST_CASE("a Z conjugate into X is reported as such")
{
  auto rep = verify_prop42(alt6(), P(6, "(0 1 2)"), {P(6, "(3 5 4)")}, 3, 100);
  REQUIRE(rep.z.size() == 1);
  CHECK(rep.z[0].conjugate_into_X);
  CHECK(rep.z[0].min_order == 9);
  CHECK(rep.ok);
}

TEST_CASE("fusion failure in E x| PSL(2,19)")
{
  auto R = permutation_image(MatrixGroupSpec::parse("PSL(2,19)"));
  auto rep = verify_prop41(natural_perm_module(R, 3));
  CHECK(rep.generated_by_p_elements);
  CHECK(rep.T_order == 9);
  CHECK(rep.omega_bar_T_order == 3);
  CHECK(rep.quotient_not_p_group);
  CHECK(rep.preconditions);
  CHECK(rep.fixed_dim == 4);
  REQUIRE(rep.witness);
  CHECK(rep.witness->replays);
  CHECK(rep.ok);
}

TEST_CASE("precondition failures are named")
{
  GeneratedGroup A4(4, {P(4, "(0 1 2)"), P(4, "(0 1)(2 3)")});
  auto rep = verify_prop41(natural_perm_module(A4, 3));
  CHECK_FALSE(rep.preconditions);
  CHECK(rep.failing == "omega-bar(T) equals T");
  CHECK_FALSE(rep.ok);

  auto rep2 = verify_prop41(natural_perm_module(sym3(), 3));
  CHECK(rep2.failing == "R is not generated by elements of order p");
}
