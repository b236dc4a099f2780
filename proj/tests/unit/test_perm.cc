#include "doctest.h"

#include <algorithm>
#include <set>

#include "sclosure/group_algorithms.h"

using namespace sclosure;

namespace
{

Permutation P(std::size_t n, char const *s) { return Permutation::parse(s, n); }

GeneratedGroup sym(std::size_t n)
{
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Point>(i);
  return GeneratedGroup(n, {Permutation::from_cycles(n, {cyc}), P(n, "(0 1)")});
}

GeneratedGroup alt(std::size_t n)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return GeneratedGroup(n, gens);
}

} // namespace

TEST_CASE("compose reads left to right")
{
  CHECK(compose(P(3, "(0 1)"), P(3, "(1 2)")) == P(3, "(0 2 1)"));
  auto g = P(5, "(0 3 1)(2 4)");
  CHECK(compose(g, g.inverse()).is_identity());
  CHECK(compose(Permutation(5), g) == g);
  CHECK_THROWS_AS(compose(P(3, "(0 1)"), P(4, "(0 1)")), std::invalid_argument);
}

TEST_CASE("parse and print")
{
  CHECK(P(6, "(0 1 2)(3 4)").str() == "(0 1 2)(3 4)");
  CHECK(P(4, "()").is_identity());
  CHECK(P(4, "(0,1,2)") == P(4, "(0 1 2)"));
  CHECK_THROWS(P(3, "(0 3)"));
  CHECK_THROWS(P(3, "(0 1)(1 2)"));
  CHECK_THROWS(P(3, "(0 1"));
  CHECK(P(6, "(0 1 2)(3 4)").order() == 6);
}

TEST_CASE("conjugation convention")
{
  auto a = P(4, "(0 1)");
  auto g = P(4, "(1 2 3)");
  auto c = conjugate(a, g);
  CHECK(c == compose(compose(g.inverse(), a), g));
  CHECK(c == P(4, "(0 2)"));
}

TEST_CASE("orders from generators")
{
  CHECK(sym(5).order() == 120);
  CHECK(GeneratedGroup(5, {Permutation(5)}).order() == 1);
  CHECK(alt(9).order() == 181440);
  CHECK(sym(7).order() == 5040);
  CHECK_THROWS_AS(GeneratedGroup(4, {P(5, "(0 1)")}), std::invalid_argument);
}

TEST_CASE("enumeration agrees with membership and rank")
{
  for (std::size_t n : {3u, 4u, 5u}) {
    auto G = sym(n);
    auto els = G.elements(1000);
    std::set<Permutation> uniq(els.begin(), els.end());
    CHECK(uniq.size() == G.order_u64());
    for (std::uint64_t r = 0; r < els.size(); ++r) {
      CHECK(G.rank(els[r]) == r);
      CHECK(G.unrank(r) == els[r]);
    }
  }
  auto A = alt(5);
  std::size_t members = 0;
  sym(5).for_each_element([&](Permutation const &g) { members += A.contains(g); }, 1000);
  CHECK(members == 60);
}

TEST_CASE("enumeration cap is enforced")
{
  CHECK_THROWS_AS(alt(4).elements(10), CapExceeded);
  CHECK(GeneratedGroup::trivial(4).elements(10).size() == 1);
  CHECK(sym(3).elements(10).size() == 6);
}

TEST_CASE("conjugacy classes")
{
  auto t = conjugacy_classes(sym(3));
  std::multiset<std::uint64_t> sizes(t.sizes.begin(), t.sizes.end());
  CHECK(sizes == std::multiset<std::uint64_t>{1, 2, 3});

  auto A6 = alt(6);
  CHECK(class_of(A6, P(6, "(0 1 2)")).size() == 40);
  CHECK(class_of(A6, Permutation(6)).size() == 1);

  auto t6 = conjugacy_classes(A6);
  CHECK(t6.representatives.size() == 7);
  CHECK(t6.sizes[t6.locate(A6, P(6, "(0 1 2)(3 4 5)"))] == 40);
}

TEST_CASE("centralizers, normalizers, centers")
{
  CHECK(center(sym(3)).order() == 1);
  auto A4 = alt(4);
  GeneratedGroup P3(4, {P(4, "(0 1 2)")});
  CHECK(normalizer(A4, P3).order() == 3);
  auto S5 = sym(5);
  auto g = P(5, "(0 1 2)");
  auto C = centralizer(S5, g);
  CHECK(C.order() == 6);
  CHECK(C.contains(g));
  CHECK(P3.is_subgroup_of(normalizer(A4, P3)));
}

TEST_CASE("subgroup calculus")
{
  auto A4 = alt(4);
  CHECK(normal_closure(A4, std::vector<Permutation>{P(4, "(0 1)(2 3)")}).order() == 4);
  CHECK(derived_subgroup(sym(4)).order() == 12);
  GeneratedGroup D8(4, {P(4, "(0 1 2 3)"), P(4, "(0 2)")});
  CHECK(intersection(D8, A4).order() == 4);
  CHECK(is_normal(sym(4), A4));
  CHECK_FALSE(is_normal(sym(4), D8));
}

TEST_CASE("normal subgroups")
{
  auto ns = normal_subgroups(sym(4));
  std::vector<BigInt> orders;
  for (auto const &N : ns)
    orders.push_back(N.order());
  CHECK(orders == std::vector<BigInt>{1, 4, 12, 24});
  CHECK(normal_subgroups(alt(5)).size() == 2);
  CHECK(o_p_prime(sym(4), 3).order() == 4);
  CHECK(o_p_prime(sym(4), 2).order() == 1);
}

TEST_CASE("coset action")
{
  auto S4 = sym(4);
  CosetAction q(S4, alt(4));
  CHECK(q.image().order() == 2);
  CHECK(q.map(P(4, "(0 1)")).order() == 2);
  CHECK(q.map(P(4, "(0 1 2)")).is_identity());

  auto A4 = alt(4);
  GeneratedGroup V(4, {P(4, "(0 1)(2 3)"), P(4, "(0 2)(1 3)")});
  CosetAction q3(A4, V);
  CHECK(q3.image().order() == 3);

  CosetAction reg(S4, GeneratedGroup::trivial(4));
  CHECK(reg.index() == 24);
  CHECK(reg.image().order() == 24);

  // the map is a homomorphism
  auto a = P(4, "(0 1 2 3)"), b = P(4, "(1 3)");
  CHECK(reg.map(compose(a, b)) == compose(reg.map(a), reg.map(b)));
  CHECK(q3.map(compose(a.pow(0), P(4, "(0 1 2)"))) == q3.map(P(4, "(0 1 2)")));

  GeneratedGroup D8(4, {P(4, "(0 1 2 3)"), P(4, "(0 2)")});
  CHECK_THROWS_AS(CosetAction(S4, D8), InputError);
}

TEST_CASE("direct product")
{
  auto G = direct_product(alt(5), GeneratedGroup(3, {P(3, "(0 1 2)")}));
  CHECK(G.degree() == 8);
  CHECK(G.order() == 180);
}
