#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hommag/enumerate.hpp"
#include "hommag/report.hpp"

using namespace hommag;

namespace {

std::string partner(const std::string& code) {
  auto flip = [](char c) { return c == '1' ? '2' : (c == '2' ? '1' : '3'); };
  return {flip(code[3]), flip(code[2]), flip(code[1]), flip(code[0])};
}

}  // namespace

TEST_CASE("enumerator sizes and endpoints") {
  TableEnumerator t2(2);
  REQUIRE(t2.size() == 81);
  REQUIRE(encode(t2.at(0)) == "1111");
  REQUIRE(encode(t2.at(80)) == "3333");

  TableEnumerator t2t(2, true);
  REQUIRE(t2t.size() == 16);
  REQUIRE(encode(t2t.at(0)) == "1111");
  REQUIRE(encode(t2t.at(15)) == "2222");
  for (const PartialMagma& m : t2t) {
    REQUIRE(m.total());
  }

  TableEnumerator t3(3);
  REQUIRE(t3.size() == 262144);
  REQUIRE(encode(t3.at(0)) == "1,1,1,1,1,1,1,1,1");
  REQUIRE(encode(t3.at(262143)) == "-,-,-,-,-,-,-,-,-");
  REQUIRE(TableEnumerator(3, true).size() == 19683);

  REQUIRE_THROWS_AS(TableEnumerator(4), std::invalid_argument);
  TableEnumerator t4(4, false, std::uint64_t{1} << 40);  // raised budget
  REQUIRE(t4.size() == 152587890625ull);
  REQUIRE_THROWS_AS(t4.at(t4.size()), std::invalid_argument);
}

TEST_CASE("enumeration is strictly increasing in code order") {
  TableEnumerator t2(2);
  PartialMagma prev = t2.at(0);
  for (std::uint64_t i = 1; i < t2.size(); ++i) {
    PartialMagma cur = t2.at(i);
    REQUIRE(prev < cur);
    prev = cur;
  }
}

TEST_CASE("range splitting covers without overlap") {
  for (int jobs : {1, 2, 3, 7, 100}) {
    auto chunks = detail::split_range(81, jobs);
    REQUIRE(chunks.size() <= static_cast<std::size_t>(jobs));
    std::uint64_t expect = 0;
    for (auto [lo, hi] : chunks) {
      REQUIRE(lo == expect);
      REQUIRE(hi > lo);
      expect = hi;
    }
    REQUIRE(expect == 81);
  }
  REQUIRE(detail::split_range(0, 4).empty());
  REQUIRE(detail::split_range(3, 8).size() == 3);
}

TEST_CASE("order-2 classification recovers the 45 classes") {
  ClassificationReport report = classify(2);
  REQUIRE(report.order == 2);
  REQUIRE_FALSE(report.totals_only);
  REQUIRE(report.classes.size() == 45);

  std::set<std::string> seen;
  int singletons = 0;
  int pairs = 0;
  std::string prev_rep;
  for (const MagmaClass& c : report.classes) {
    std::string rep = encode(c.representative);
    REQUIRE(rep > prev_rep);  // ascending, so also distinct
    prev_rep = rep;
    REQUIRE_FALSE(c.members.empty());
    REQUIRE(c.members.front() == rep);  // representative is the least member
    REQUIRE(std::is_sorted(c.members.begin(), c.members.end()));
    for (const std::string& member : c.members) {
      REQUIRE(seen.insert(member).second);
    }
    if (c.members.size() == 1) {
      ++singletons;
      REQUIRE(partner(rep) == rep);
    } else {
      ++pairs;
      REQUIRE(c.members == std::vector<std::string>{rep, partner(rep)});
    }
    // the nowhere-defined twisting map works for every table, so no
    // reported set is empty
    for (const auto& set : c.alpha_sets) {
      REQUIRE_FALSE(set.empty());
      REQUIRE(std::find(set.begin(), set.end(), "33") != set.end());
    }
    if (c.associative) {
      REQUIRE(c.partially_associative);
    }
  }
  REQUIRE(seen.size() == 81);
  REQUIRE(singletons == 9);
  REQUIRE(pairs == 36);

  // the nowhere-defined table admits every map under every predicate
  const MagmaClass* empty_table = report.find_by_member("3333");
  REQUIRE(empty_table != nullptr);
  REQUIRE(empty_table->members == std::vector<std::string>{"3333"});
  for (const auto& set : empty_table->alpha_sets) {
    REQUIRE(set.size() == 9);
  }
  REQUIRE(empty_table->partially_associative);
  REQUIRE(empty_table->associative);

  // lookup through a non-representative member lands in the right class
  const MagmaClass* via_member = report.find_by_member("2132");
  REQUIRE(via_member != nullptr);
  REQUIRE(encode(via_member->representative) == "1321");
  REQUIRE(report.find_by_member("9999") == nullptr);
}

TEST_CASE("pinned twisting-map sets of well-known classes") {
  ClassificationReport report = classify(2);
  auto sets_of = [&](const std::string& member) {
    const MagmaClass* c = report.find_by_member(member);
    REQUIRE(c != nullptr);
    std::array<std::vector<std::string>, 4> sorted_sets = c->alpha_sets;
    for (auto& s : sorted_sets) {
      std::sort(s.begin(), s.end());
    }
    return sorted_sets;
  };

  // the group-like table: twisted associativity holds for the zero map,
  // the identity and the swap
  REQUIRE(sets_of("1221")[3] == std::vector<std::string>{"12", "21", "33"});
  // strict multiplicativity for 2133 holds only for the zero map and the
  // identity
  REQUIRE(sets_of("2133")[1] == std::vector<std::string>{"12", "33"});
  // the weak set of 1331
  REQUIRE(sets_of("1331")[0] ==
          std::vector<std::string>{"11", "12", "13", "31", "32", "33"});

  const MagmaClass* pair = report.find_by_member("2323");
  REQUIRE(pair != nullptr);
  REQUIRE(pair->members == std::vector<std::string>{"2323", "3131"});
}

TEST_CASE("classification output does not depend on the job count") {
  std::string baseline = classification_to_json(classify(2, false, 1)).dump(2);
  for (int jobs : {2, 3, 8}) {
    REQUIRE(classification_to_json(classify(2, false, jobs)).dump(2) ==
            baseline);
  }
}

TEST_CASE("totals-only classification") {
  ClassificationReport report = classify(2, true);
  REQUIRE(report.totals_only);
  REQUIRE(report.classes.size() == 10);
  std::size_t total_members = 0;
  for (const MagmaClass& c : report.classes) {
    REQUIRE(c.representative.total());
    total_members += c.members.size();
  }
  REQUIRE(total_members == 16);
}

TEST_CASE("class counting matches the closed form") {
  REQUIRE(count_classes(1) == 2);
  REQUIRE(count_classes(2) == burnside_class_count(2));
  REQUIRE(count_classes(2, true) == burnside_class_count(2, true));
  REQUIRE(count_classes(2, false, 5) == 45);
  // the order-3 total tables are few enough for a quick unit-level run;
  // the full order-3 partial scan lives in the acceptance suite
  REQUIRE(count_classes(3, true, 4) == 3330);
}
