#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "sclosure/corpus.h"

using namespace sclosure;

TEST_CASE("every corpus entry loads with its expected order")
{
  for (auto const &e : corpus_entries()) {
    if (e.large)
      continue;
    auto g = corpus_load(e.name);
    CHECK_MESSAGE(g.group.order() == e.expected_order, e.name);
    CHECK(g.group.degree() == e.degree);
  }
}

TEST_CASE("named examples")
{
  auto a9 = corpus_load("A9");
  CHECK(a9.group.degree() == 9);
  CHECK(a9.group.order() == 181440);
  auto sz = corpus_load("Sz8");
  CHECK(sz.group.degree() == 65);
  CHECK(sz.group.order() == 29120);
  auto u = corpus_load("U3_3");
  CHECK(u.group.order() == 6048);
  CHECK(u.group.degree() == 28);
  CHECK(corpus_load("sl2_19").entry.lie == "A1(19)");
}

TEST_CASE("ad-hoc names, specs and files")
{
  CHECK(corpus_load("A4").group.order() == 12);
  CHECK(corpus_load("S8").group.order() == 40320);
  CHECK(corpus_load("PSL(2,8)").group.order() == 504);

  std::string path = "test_corpus_tmp_group.txt";
  {
    std::ofstream f(path);
    f << "# Klein four\n\ndegree 4\n(0 1)(2 3)  # first\n(0 2)(1 3)\n";
  }
  auto g = corpus_load(path);
  CHECK(g.group.order() == 4);
  std::remove(path.c_str());
}

TEST_CASE("group text errors")
{
  CHECK_THROWS_AS(parse_group_text("(0 1)\n"), InputError);
  CHECK_THROWS_AS(parse_group_text(""), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 3\n(0 5)\n"), InputError);
  CHECK_THROWS_AS(corpus_load("NoSuchGroup"), InputError);
  Caps small;
  small.max_degree = 10;
  CHECK_THROWS_AS(parse_group_text("degree 11\n", small), CapExceeded);
}
