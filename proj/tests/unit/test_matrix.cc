#include "doctest.h"

#include "sclosure/group_algorithms.h"
#include "sclosure/matrix_groups.h"

using namespace sclosure;

TEST_CASE("lex-least moduli")
{
  auto F9 = make_field(3, 2);
  CHECK(F9.q() == 9);
  CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(F9.modulus_str() == "x^2 + 1");

  auto F8 = make_field(2, 3);
  CHECK(F8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});

  auto F19 = make_field(19, 1);
  CHECK(F19.q() == 19);
  CHECK(F19.modulus() == std::vector<std::uint32_t>{0, 1});

  CHECK_THROWS_AS(make_field(4, 1), InputError);
  CHECK_THROWS_AS(make_field(2, 17), InputError);
}

TEST_CASE("field axioms spot check")
{
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 1u}, {2u, 6u}}) {
    auto F = make_field(p, n);
    for (Elt a = 1; a < F.q(); ++a) {
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.add(a, F.neg(a)) == 0);
    }
    // distributivity on a slice
    for (Elt a = 0; a < F.q(); a += 3)
      for (Elt b = 0; b < F.q(); b += 2) {
        Elt c = F.primitive();
        CHECK(F.mul(c, F.add(a, b)) == F.add(F.mul(c, a), F.mul(c, b)));
      }
    CHECK(F.pow(F.primitive(), F.q() - 1) == 1);
  }
}

TEST_CASE("irreducibility test")
{
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));
  CHECK(is_irreducible({1, 1, 0, 0, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2)); // (x^2+x+1)^2
}

TEST_CASE("spec parsing")
{
  auto s = MatrixGroupSpec::parse("SU(3,3):isotropic");
  CHECK(s.family == Family::SU3);
  CHECK(s.field->q() == 9);
  CHECK(s.default_action == Action::IsotropicPoints);
  CHECK(MatrixGroupSpec::parse("PSL(3,4)").name() == "PSL(3,4)");
  CHECK_THROWS_AS(MatrixGroupSpec::parse("SO(3,5)"), InputError);
  CHECK_THROWS_AS(MatrixGroupSpec::parse("SL(2,6)"), InputError);
}

TEST_CASE("classical permutation images")
{
  auto sl219 = permutation_image(MatrixGroupSpec::parse("SL(2,19)"));
  CHECK(sl219.order() == 6840);

  auto psl219 = permutation_image(MatrixGroupSpec::parse("PSL(2,19)"));
  CHECK(psl219.degree() == 20);
  CHECK(psl219.order() == 3420);

  auto sl23 = permutation_image(MatrixGroupSpec::parse("SL(2,3)"));
  CHECK(sl23.degree() == 8);
  CHECK(sl23.order() == 24);

  auto u33 = permutation_image(MatrixGroupSpec::parse("SU(3,3):isotropic"));
  CHECK(u33.degree() == 28);
  CHECK(u33.order() == 6048);

  auto sl34 = permutation_image(MatrixGroupSpec::parse("SL(3,4)"));
  CHECK(sl34.order() == 60480);
  auto psl34 = permutation_image(MatrixGroupSpec::parse("PSL(3,4)"));
  CHECK(psl34.degree() == 21);
  CHECK(psl34.order() == 20160);

  auto sp43 = permutation_image(MatrixGroupSpec::parse("Sp(4,3)"));
  CHECK(sp43.degree() == 80);
  CHECK(sp43.order() == 51840);

  auto gl23 = permutation_image(MatrixGroupSpec::parse("GL(2,3)"));
  CHECK(gl23.order() == 48);

  CHECK(permutation_image(MatrixGroupSpec::parse("PSL(2,8)")).order() == 504);
}

TEST_CASE("form preservation of generators")
{
  for (auto name : {"Sp(4,3)", "SU(3,3)", "SU(3,4)", "Sp(4,2)"}) {
    auto s = MatrixGroupSpec::parse(name);
    for (auto const &M : classical_generators(s))
      CHECK(preserves_form(s, M));
  }
  auto s = MatrixGroupSpec::parse("SU(3,3)");
  FMatrix bad = FMatrix::identity(3);
  bad(0, 1) = 1;
  CHECK_FALSE(preserves_form(s, bad));
}

TEST_CASE("projective order divides out scalars")
{
  auto s = MatrixGroupSpec::parse("SU(3,2)");
  auto G = permutation_image(s, Action::NonzeroVectors);
  auto H = permutation_image(s, Action::IsotropicPoints);
  CHECK(G.order() == 216);
  CHECK(H.order() == 72);
  CHECK(H.degree() == 9);
}

TEST_CASE("degree cap")
{
  Caps caps;
  caps.max_degree = 10;
  CHECK_THROWS_AS(permutation_image(MatrixGroupSpec::parse("PSL(2,19)"), caps), CapExceeded);
}
