#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hommag/partial_magma.hpp"
#include "hommag/partial_map.hpp"

using namespace hommag;

namespace {

// All nine order-2 map codes, spelled out rather than enumerated by the
// library, so these tests do not lean on the code under test.
const std::array<std::string, 9> kMapCodes = {"11", "12", "13", "21", "22",
                                              "23", "31", "32", "33"};

}  // namespace

TEST_CASE("cell ordering puts undefined after every defined value") {
  REQUIRE(Cell(1) < Cell(2));
  REQUIRE(Cell(2) < undefined_cell);
  REQUIRE(Cell(1) < undefined_cell);
  REQUIRE(undefined_cell == undefined_cell);
  REQUIRE_FALSE(undefined_cell.defined());
  REQUIRE(Cell(2).value() == 2);
}

TEST_CASE("partial map basics") {
  PartialMap id = PartialMap::identity(2);
  REQUIRE(id.total());
  REQUIRE(id(1) == Cell(1));
  REQUIRE(id(2) == Cell(2));

  PartialMap none = PartialMap::nowhere_defined(3);
  REQUIRE_FALSE(none.total());
  REQUIRE(none.domain().empty());
  REQUIRE(none.range().empty());

  PartialMap f = decode_map("23");  // 1 -> 2, 2 undefined
  REQUIRE(f.domain() == std::vector<Elem>{1});
  REQUIRE(f.range() == std::vector<Elem>{2});
  REQUIRE(f.injective_on_domain());
  REQUIRE(f.apply(undefined_cell) == undefined_cell);
  REQUIRE(f.apply(Cell(1)) == Cell(2));

  PartialMap g(3, {Cell(1), Cell(1), undefined_cell});
  REQUIRE_FALSE(g.injective_on_domain());

  REQUIRE_THROWS_AS(PartialMap(2, {Cell(3), Cell(1)}), std::invalid_argument);
  REQUIRE_THROWS_AS(PartialMap(2, {Cell(1)}), std::invalid_argument);
}

TEST_CASE("composition is defined exactly where both stages are") {
  PartialMap f = decode_map("22");
  PartialMap g = decode_map("13");
  // g(f(x)) needs f(x) defined and g defined there; f sends both to 2 and
  // g is undefined at 2.
  REQUIRE(map_code(compose(g, f)) == "33");
  REQUIRE(map_code(compose(f, g)) == "23");

  PartialMap id = PartialMap::identity(2);
  for (const std::string& code : kMapCodes) {
    PartialMap a = decode_map(code);
    REQUIRE(compose(id, a) == a);
    REQUIRE(compose(a, id) == a);
    // point by point: composite defined iff both stages are
    for (Elem x = 1; x <= 2; ++x) {
      Cell inner = a(x);
      Cell expect = inner.defined() ? g(inner.value()) : undefined_cell;
      REQUIRE(compose(g, a)(x) == expect);
    }
  }
  REQUIRE_THROWS_AS(compose(g, PartialMap::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("pair map evaluates where both coordinates are defined") {
  PairMap p = pair_map(decode_map("13"), decode_map("32"));
  REQUIRE_FALSE(p(1, 1).has_value());  // second coordinate undefined
  REQUIRE_FALSE(p(2, 2).has_value());  // first coordinate undefined
  REQUIRE(p(1, 2) == std::make_pair(Elem{1}, Elem{2}));

  // 13 x identity lives exactly on the pairs whose first coordinate is 1
  PairMap q = pair_map(decode_map("13"), decode_map("12"));
  REQUIRE(q(1, 1) == std::make_pair(Elem{1}, Elem{1}));
  REQUIRE(q(1, 2) == std::make_pair(Elem{1}, Elem{2}));
  REQUIRE_FALSE(q(2, 1).has_value());
  REQUIRE_FALSE(q(2, 2).has_value());

  REQUIRE_THROWS_AS(pair_map(decode_map("13"), PartialMap::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("partial equality is reflexive and symmetric but not transitive") {
  for (const std::string& ca : kMapCodes) {
    PartialMap a = decode_map(ca);
    REQUIRE(partially_equal(a, a));
    for (const std::string& cb : kMapCodes) {
      PartialMap b = decode_map(cb);
      REQUIRE(partially_equal(a, b) == partially_equal(b, a));
    }
  }
  // 13 ~ 33 and 33 ~ 23 (nowhere both defined), yet 13 and 23 disagree
  // at 1: the relation does not chain.
  PartialMap f = decode_map("13");
  PartialMap g = decode_map("33");
  PartialMap h = decode_map("23");
  REQUIRE(partially_equal(f, g));
  REQUIRE(partially_equal(g, h));
  REQUIRE_FALSE(partially_equal(f, h));
  // 13 agrees with the identity on their common domain {1}.
  REQUIRE(partially_equal(f, decode_map("12")));
}

TEST_CASE("equality as partial functions is strictly stronger") {
  for (const std::string& ca : kMapCodes) {
    for (const std::string& cb : kMapCodes) {
      PartialMap a = decode_map(ca);
      PartialMap b = decode_map(cb);
      if (equal_as_partial_functions(a, b)) {
        REQUIRE(partially_equal(a, b));
        REQUIRE(ca == cb);  // for maps, equal domains + values means same map
      }
    }
  }
  // ...and on total maps the weak relation collapses to equality.
  for (const std::string& ca : kMapCodes) {
    for (const std::string& cb : kMapCodes) {
      PartialMap a = decode_map(ca);
      PartialMap b = decode_map(cb);
      if (a.total() && b.total()) {
        REQUIRE(partially_equal(a, b) == (a == b));
      }
    }
  }
  // 13 and the identity compare weakly equal yet differ as partial
  // functions: 13 is undefined at 2.
  REQUIRE(partially_equal(decode_map("13"), decode_map("12")));
  REQUIRE_FALSE(equal_as_partial_functions(decode_map("13"), decode_map("12")));
}

TEST_CASE("comparing maps of different orders is rejected") {
  PartialMap two = PartialMap::identity(2);
  PartialMap three = PartialMap::identity(3);
  REQUIRE_THROWS_AS(partially_equal(two, three), std::invalid_argument);
  REQUIRE_THROWS_AS(equal_as_partial_functions(two, three),
                    std::invalid_argument);
}

TEST_CASE("pointwise machinery works for any arity") {
  // Two partial triple functions: defined on different wedges, agreeing on
  // the overlap; weakly equal but not equal as partial functions.
  auto f = [](const Point<3>& p) -> std::optional<int> {
    if (p[0] == 1) {
      return p[1] + p[2];
    }
    return std::nullopt;
  };
  auto g = [](const Point<3>& p) -> std::optional<int> {
    if (p[2] == 2) {
      return p[1] + 2;
    }
    return std::nullopt;
  };
  REQUIRE(partially_equal_on<3>(2, f, g));
  REQUIRE_FALSE(equal_as_partial_functions_on<3>(2, f, g));

  int visited = 0;
  for_each_point<3>(2, [&](const Point<3>&) { ++visited; });
  REQUIRE(visited == 8);
}
