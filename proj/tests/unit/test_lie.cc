#include "doctest.h"

#include "sclosure/lie_predictor.h"
#include "sclosure/matrix_groups.h"
#include "sclosure/sylow.h"

using namespace sclosure;

TEST_CASE("cyclotomic profiles of small families")
{
  auto a2 = cyclotomic_profile('A', 2, 1);
  CHECK(a2.N == 3);
  CHECK(a2.r == std::map<unsigned, unsigned>{{1, 2}, {2, 1}, {3, 1}});

  auto g2 = cyclotomic_profile('G', 2, 1);
  CHECK(g2.N == 6);
  CHECK(g2.r == std::map<unsigned, unsigned>{{1, 2}, {2, 2}, {3, 1}, {6, 1}});

  CHECK(cyclotomic_profile('A', 10, 1).r_of(4) == 2);

  auto d4 = cyclotomic_profile('D', 4, 3);
  CHECK(d4.N == 12);
  CHECK(d4.r == std::map<unsigned, unsigned>{{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}});

  auto u3 = cyclotomic_profile('A', 2, 2);
  CHECK(u3.r == std::map<unsigned, unsigned>{{1, 1}, {2, 2}, {6, 1}});
  CHECK(cyclotomic_profile('B', 2, 2).order_only);
}

TEST_CASE("cyclotomic values")
{
  CHECK(cyclotomic_value(1, 7) == 6);
  CHECK(cyclotomic_value(2, 7) == 8);
  CHECK(cyclotomic_value(3, 2) == 7);
  CHECK(cyclotomic_value(12, 2) == 13);
  CHECK(cyclotomic_value(30, 2) == 331);
}

TEST_CASE("order identity for every supported family, 2 <= q <= 9")
{
  struct Fam
  {
    char f;
    unsigned l, t;
  };
  std::vector<Fam> fams = {{'A', 1, 1}, {'A', 2, 1}, {'A', 5, 1}, {'A', 10, 1}, {'A', 2, 2},
                           {'A', 3, 2}, {'A', 6, 2}, {'B', 2, 1}, {'B', 3, 1}, {'C', 4, 1},
                           {'D', 4, 1}, {'D', 5, 1}, {'D', 4, 2}, {'D', 5, 2}, {'D', 4, 3},
                           {'E', 6, 1}, {'E', 6, 2}, {'E', 7, 1}, {'E', 8, 1}, {'F', 4, 1},
                           {'G', 2, 1}};
  int checked = 0;
  for (auto fam : fams)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      LieSpec s = LieSpec::make(fam.f, fam.l, fam.t, q);
      CHECK_MESSAGE(profile_order(cyclotomic_profile(fam.f, fam.l, fam.t), q) ==
                      classical_lie_order(s),
                    s.name());
      ++checked;
    }
  for (auto [f, q] : std::vector<std::pair<char, std::uint64_t>>{{'B', 2}, {'B', 8}, {'F', 2}, {'F', 8}, {'G', 3}}) {
    LieSpec s = LieSpec::make(f, f == 'B' ? 2 : f == 'F' ? 4 : 2, 2, q);
    CHECK(profile_order(cyclotomic_profile(s.family, s.rank, 2), q) == classical_lie_order(s));
  }
  CHECK(checked == 147);
}

TEST_CASE("known group orders")
{
  CHECK(classical_lie_order(LieSpec::parse("A1(19)")) == 6840);
  CHECK(classical_lie_order(LieSpec::parse("A2(4)")) == 60480);
  CHECK(classical_lie_order(LieSpec::parse("2A2(3)")) == 6048);
  CHECK(classical_lie_order(LieSpec::parse("C2(3)")) == 51840);
  CHECK(classical_lie_order(LieSpec::parse("2B2(8)")) == 29120);
  CHECK(classical_lie_order(LieSpec::parse("G2(3)")) == 4245696);
}

TEST_CASE("spec parsing rejects inadmissible twists")
{
  CHECK_THROWS_AS(LieSpec::parse("3A2(4)"), InputError);
  CHECK_THROWS_AS(LieSpec::parse("2B2(4)"), InputError);
  CHECK_THROWS_AS(LieSpec::parse("2G2(9)"), InputError);
  CHECK_THROWS_AS(LieSpec::parse("A1(6)"), InputError);
  CHECK_THROWS_AS(LieSpec::parse("H3(2)"), InputError);
  CHECK(LieSpec::parse("3D4(2)").twist == 3);
}

TEST_CASE("Sylow shapes")
{
  auto s = sylow_shape(LieSpec::make('A', 10, 1, 243), 5);
  CHECK(s.rank == 2);
  CHECK(s.exponent == 25);
  CHECK(s.b == 0);
  CHECK(s.homocyclic);
  CHECK(s.invariants() == std::vector<BigInt>{25, 25});

  s = sylow_shape(LieSpec::parse("A1(19)"), 3);
  CHECK(s.m0 == 1);
  CHECK(s.rank == 1);
  CHECK(s.exponent == 9);
  CHECK(s.b == 0);

  s = sylow_shape(LieSpec::parse("A2(4)"), 3);
  CHECK(s.order == 27);
  CHECK(s.b == 1);
  CHECK_FALSE(s.abelian);

  s = sylow_shape(LieSpec::parse("3D4(2)"), 3);
  CHECK(s.special_case.has_value());
  CHECK(s.special_case->find("(9,3)") != std::string::npos);
  CHECK(s.rank == 2);
  CHECK(s.order == 81);

  s = sylow_shape(LieSpec::parse("C2(3)"), 2);
  CHECK(s.order == 128);
  CHECK_FALSE(s.abelian);

  s = sylow_shape(LieSpec::parse("2A2(3)"), 2);
  CHECK(s.order == 32);
  CHECK(s.m0 == 2);
  CHECK(s.exponent == 4);

  s = sylow_shape(LieSpec::parse("2B2(8)"), 5);
  CHECK_FALSE(s.order_only);
  CHECK(s.order == 5);
  CHECK(s.rank == 1);
  CHECK(s.abelian);
  s = sylow_shape(LieSpec::parse("2B2(32)"), 5);
  CHECK(s.exponent == 25);
  CHECK(s.describe() == "cyclic of order 25");
  s = sylow_shape(LieSpec::parse("2G2(27)"), 2);
  CHECK(s.order_only);
  CHECK(s.order == 8);
  s = sylow_shape(LieSpec::parse("2F4(8)"), 3);
  CHECK(s.order_only);

  CHECK_THROWS_AS(sylow_shape(LieSpec::parse("A1(9)"), 3), InputError);
}

TEST_CASE("Sylow shape matches brute force on SL(2,19), p = 3")
{
  auto G = permutation_image(MatrixGroupSpec::parse("SL(2,19)"));
  auto prof = p_group_profile(sylow_subgroup(G, 3), 3);
  auto s = sylow_shape(LieSpec::parse("A1(19)"), 3);
  CHECK(prof.order == s.order);
  CHECK(prof.abelian == s.abelian);
  REQUIRE(prof.homocyclic);
  CHECK(prof.homocyclic->rank == s.rank);
  CHECK(prof.homocyclic->exponent == s.exponent);
}

TEST_CASE("cyclotomic table regenerates")
{
  for (auto const &e : table3A_reference()) {
    std::size_t i = 0;
    unsigned twist = 1;
    if (std::isdigit(static_cast<unsigned char>(e.family[0])))
      twist = static_cast<unsigned>(e.family[i++] - '0');
    char fam = e.family[i];
    unsigned rank = static_cast<unsigned>(std::stoul(e.family.substr(i + 1)));
    CHECK_MESSAGE(table3A_rows(fam, rank, twist, e.p) == e.rows, e.family, " p=", e.p);
  }
  CHECK(table3A_rows('E', 8, 1, 5) == std::vector<Table3ARow>{{1, 8, 25}, {2, 8, 25}, {4, 4, 5}});
}

TEST_CASE("verdicts")
{
  auto v = strongly_closed_verdict("J2", 3);
  CHECK(v.has_proper_strongly_closed);
  CHECK(v.conclusion == "iv");
  REQUIRE(v.shapes.size() == 1);
  CHECK(v.shapes[0].order == 3);

  v = strongly_closed_verdict("J3", 3);
  CHECK(v.conclusion == "v");
  REQUIRE(v.shapes.size() == 2);
  CHECK(v.shapes[0].order == 9);
  CHECK(v.shapes[1].order == 27);

  CHECK_FALSE(strongly_closed_verdict("A9", 3).has_proper_strongly_closed);
  CHECK_FALSE(strongly_closed_verdict("J2", 5).has_proper_strongly_closed);
  CHECK_FALSE(strongly_closed_verdict("M11", 3).has_proper_strongly_closed);
  CHECK_FALSE(strongly_closed_verdict("none", 7).has_proper_strongly_closed);
  CHECK(strongly_closed_verdict("HS", 5).conclusion == "iv");
  CHECK(strongly_closed_verdict("J4", 11).conclusion == "iv");

  v = strongly_closed_verdict("L2(19)", 3);
  CHECK(v.conclusion == "i");
  REQUIRE(v.shapes.size() == 1);
  CHECK(v.shapes[0].order == 3);

  v = strongly_closed_verdict(LieSpec::make('A', 10, 1, 243), 5);
  CHECK(v.conclusion == "i");
  REQUIRE(v.shapes.size() == 1);
  CHECK(v.shapes[0].order == 25);
  CHECK(v.shapes[0].rank == 2);

  v = strongly_closed_verdict("U3(3)", 3);
  CHECK(v.conclusion == "ii");
  CHECK(v.shapes[0].order == 3);

  v = strongly_closed_verdict("Sz(8)", 2);
  CHECK(v.has_proper_strongly_closed);
  CHECK(v.shapes[0].order == 8);

  v = strongly_closed_verdict("Re(27)", 3);
  REQUIRE(v.shapes.size() == 2);
  CHECK(v.shapes[0].order == 27);
  CHECK(v.shapes[1].order == 729);

  CHECK(strongly_closed_verdict("G2(4)", 3).conclusion == "iii");
  CHECK_FALSE(strongly_closed_verdict("L3(4)", 3).has_proper_strongly_closed);
  CHECK_FALSE(strongly_closed_verdict("L2(7)", 7).has_proper_strongly_closed);
  CHECK_FALSE(strongly_closed_verdict("C2(3)", 2).has_proper_strongly_closed);

  CHECK_THROWS_AS(strongly_closed_verdict("Monster?", 3), InputError);
  CHECK_FALSE(strongly_closed_verdict("2B2(8)", 5).has_proper_strongly_closed);
  CHECK(strongly_closed_verdict("Sz(32)", 5).conclusion == "i");
  CHECK_THROWS_AS(strongly_closed_verdict("2F4(8)", 3), InputError);
  CHECK_THROWS_AS(strongly_closed_verdict("A1(3)", 2), InputError);
}
