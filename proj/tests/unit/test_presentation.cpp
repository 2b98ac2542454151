#include <doctest.h>

#include "invqm/dimension.hpp"
#include "invqm/error.hpp"
#include "invqm/presentation.hpp"
#include "oracles.hpp"

using namespace invqm;
using namespace invqm::testing;

TEST_SUITE("presentation") {
  TEST_CASE("word grammar") {
    std::vector<std::string> const ab{"a", "b"};
    CHECK(render(parse_word("[a,b]^2", ab)) == "a b A B a b A B");
    CHECK(render(parse_word("a*b*a^-1", ab)) == "a b A");
    CHECK(render(parse_word("abAB", ab)) == "a b A B");
    CHECK(render(parse_word("(a b)^-2", ab)) == "B A B A");
    CHECK(render(parse_word("a^(-3) b^+1", ab)) == "A A A b");
    CHECK(parse_word("1", ab).is_identity());
    CHECK(parse_word("[a, [a,b]]", ab) == commutator(FreeWord::generator(2, 1), parse_word("[a,b]", ab)));
  }

  TEST_CASE("multi-character names") {
    std::vector<std::string> const names{"x1", "x2", "x12"};
    auto const w = parse_word("x12 x1x2 x1^-1", names);
    CHECK(w == FreeWord(3, {{3, 1}, {1, 1}, {2, 1}, {1, -1}}));
  }

  TEST_CASE("errors carry positions") {
    std::vector<std::string> const ab{"a", "b"};
    CHECK_THROWS_AS(parse_word("a c", ab), ParseError);
    CHECK_THROWS_AS(parse_word("[a,b", ab), ParseError);
    CHECK_THROWS_AS(parse_word("a^", ab), ParseError);
    CHECK_THROWS_AS(parse_word("", ab), ParseError);
    try {
      parse_presentation("gens: a, b\nrel: [a,q]\n");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 9);
    }
    CHECK_THROWS_AS(parse_presentation("rel: a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a, a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\ngens: b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nfoo: b\n"), ParseError);
    CHECK_THROWS_AS(load_presentation("/nonexistent/file.grp"), PreconditionError);
  }

  TEST_CASE("presentation file") {
    auto const p = parse_presentation(
        "# genus two\n"
        "gens: a1, a2, a3, a4\n"
        "rel: [a1,a2][a3,a4]   # surface relator\n");
    CHECK(p.rank() == 4);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].length() == 8);

    auto const q = parse_presentation("gens: a, b\n");
    CHECK(q.relators.empty());
  }

  TEST_CASE("surface presentation string for genus two") {
    auto const p = parse_presentation("gens: a1, a2, a3, a4\nrel: [a1,a2][a3,a4]\n");
    CHECK(p.relators[0] == surface_presentation(2).relators[0]);
    CHECK(is_in_commutator_subgroup(p.relators[0]));
  }

  TEST_CASE("render then parse is the identity") {
    auto rng = make_rng(11);
    std::vector<std::string> const names{"a", "b", "c"};
    for (int t = 0; t < 100; ++t) {
      auto const w = random_word(rng, 3, 20);
      CHECK(parse_word(render(w, names), names) == w);
    }
    std::vector<std::string> const odd{"x", "X", "y2"};
    for (int t = 0; t < 50; ++t) {
      auto const w = random_word(rng, 3, 20);
      CHECK(parse_word(render(w, odd), odd) == w);
    }
    for (auto const& p : {surface_presentation(3), circle_bundle_presentation(2, 3),
                          remark_group_presentation(2)}) {
      auto const back = parse_presentation(render_presentation(p));
      CHECK(back.names == p.names);
      CHECK(back.relators == p.relators);
    }
  }
}
