#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>

#include "hommag/partial_magma.hpp"

using namespace hommag;

TEST_CASE("worked decode example") {
  PartialMagma m = decode_table("2131");
  REQUIRE(m.order() == 2);
  REQUIRE(m.at(1, 1) == Cell(2));
  REQUIRE(m.at(1, 2) == Cell(1));
  REQUIRE(m.at(2, 1) == undefined_cell);
  REQUIRE(m.at(2, 2) == Cell(1));
  REQUIRE_FALSE(m.total());
  REQUIRE(m.at(Cell(1), undefined_cell) == undefined_cell);
  REQUIRE(m.at(Cell(2), Cell(2)) == Cell(1));
}

TEST_CASE("round trip over every order-2 code") {
  std::string code = "0000";
  for (char a : {'1', '2', '3'}) {
    for (char b : {'1', '2', '3'}) {
      for (char c : {'1', '2', '3'}) {
        for (char d : {'1', '2', '3'}) {
          code = {a, b, c, d};
          REQUIRE(encode(decode_table(code)) == code);
        }
      }
    }
  }
}

TEST_CASE("comma form codes for other orders") {
  PartialMagma m = decode_table("1,-,2,3,1,1,2,-,3");
  REQUIRE(m.order() == 3);
  REQUIRE(m.at(1, 2) == undefined_cell);
  REQUIRE(m.at(1, 3) == Cell(2));
  REQUIRE(m.at(3, 3) == Cell(3));
  REQUIRE(encode(m) == "1,-,2,3,1,1,2,-,3");

  PartialMagma one = decode_table("-");
  REQUIRE(one.order() == 1);
  REQUIRE(one == PartialMagma::nowhere_defined(1));
  REQUIRE(encode(decode_table("1")) == "1");

  // comma form is accepted for order 2 as well, but 3 is then a real
  // element and out of range
  REQUIRE(encode(decode_table("1,2,-,1")) == "1231");
  REQUIRE_THROWS_AS(decode_table("1,2,3,1"), std::invalid_argument);
}

TEST_CASE("malformed table codes are rejected") {
  REQUIRE_THROWS_AS(decode_table(""), std::invalid_argument);
  REQUIRE_THROWS_AS(decode_table("124"), std::invalid_argument);   // not square
  REQUIRE_THROWS_AS(decode_table("1241"), std::invalid_argument);  // bad symbol
  REQUIRE_THROWS_AS(decode_table("12,34"), std::invalid_argument); // long token
  REQUIRE_THROWS_AS(decode_table("1,2,3"), std::invalid_argument); // not square
  REQUIRE_THROWS_AS(decode_table("x"), std::invalid_argument);
}

TEST_CASE("map codes round trip and validate") {
  for (char a : {'1', '2', '3'}) {
    for (char b : {'1', '2', '3'}) {
      std::string code = {a, b};
      REQUIRE(map_code(decode_map(code)) == code);
    }
  }
  PartialMap f = decode_map("2,-,1");
  REQUIRE(f.order() == 3);
  REQUIRE(f(2) == undefined_cell);
  REQUIRE(map_code(f) == "2,-,1");
  REQUIRE(map_code(decode_map("-")) == "-");

  REQUIRE_THROWS_AS(decode_map(""), std::invalid_argument);
  REQUIRE_THROWS_AS(decode_map("14"), std::invalid_argument);
  REQUIRE_THROWS_AS(decode_map("3,1"), std::invalid_argument);  // 3 > order 2
  REQUIRE_THROWS_AS(decode_map("1,23"), std::invalid_argument);
}

TEST_CASE("table order validation") {
  REQUIRE_THROWS_AS(PartialMagma(2, {Cell(1)}), std::invalid_argument);
  REQUIRE_THROWS_AS(PartialMagma(2, {Cell(1), Cell(2), Cell(3), Cell(1)}),
                    std::invalid_argument);
  REQUIRE(PartialMagma::nowhere_defined(2) == decode_table("3333"));
}
