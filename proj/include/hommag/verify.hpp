#ifndef HOMMAG_VERIFY_HPP_
#define HOMMAG_VERIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hommag/algebra.hpp"
#include "hommag/enumerate.hpp"
#include "hommag/fixture.hpp"
#include "hommag/predicates.hpp"

namespace hommag {

// One claim from the reference data, checked against a fresh computation.
// Items with match true and a nonempty note are observations, not defects
// (for instance a class whose listed first member is not the
// lexicographically least one).
struct VerificationItem {
  std::string section;
  std::string subject;
  bool match = true;
  std::string computed;
  std::string claimed;
  std::string note;
};

struct VerificationOutcome {
  std::vector<VerificationItem> items;

  [[nodiscard]] std::size_t mismatch_count() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(),
                      [](const VerificationItem& i) { return !i.match; }));
  }
  [[nodiscard]] bool all_match() const { return mismatch_count() == 0; }

  void append(VerificationOutcome other) {
    items.insert(items.end(), std::make_move_iterator(other.items.begin()),
                 std::make_move_iterator(other.items.end()));
  }
};

namespace detail {

inline std::string join_sorted(std::vector<std::string> words) {
  std::sort(words.begin(), words.end());
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out += words[i];
  }
  return out.empty() ? "(empty)" : out;
}

inline std::string join_items(const std::vector<int>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out += std::to_string(items[i]);
  }
  return out.empty() ? "(empty)" : out;
}

inline std::string item_subject(int item, const std::string& code) {
  return "(" + std::to_string(item) + ") " + code;
}

}  // namespace detail

// Checks every claim in the fixture against computation: the class
// pairings against the classification report, the four twisting-map tables
// and the associativity lists against the pointwise predicates, and the
// example blocks against the rational-coefficient route. Mismatches are
// reported, never patched.
inline VerificationOutcome verify_against_paper(
    const ClassificationReport& report, const PaperFixture& fixture) {
  VerificationOutcome out;
  detail::require(report.order == fixture.order,
                  "verify: report and fixture orders differ");

  out.items.push_back({"classes", "count",
                       report.classes.size() == fixture.classes.size(),
                       std::to_string(report.classes.size()),
                       std::to_string(fixture.classes.size()),
                       ""});

  // Membership of each listed class, plus a convention note whenever the
  // listed first member is not the canonical (least) representative.
  for (std::size_t i = 0; i < fixture.classes.size(); ++i) {
    const std::vector<std::string>& listed = fixture.classes[i];
    std::string subject = detail::item_subject(static_cast<int>(i) + 1,
                                               listed.front());
    const MagmaClass* cls = report.find_by_member(listed.front());
    if (cls == nullptr) {
      out.items.push_back({"classes", subject, false, "(absent)",
                           detail::join_sorted(listed), ""});
      continue;
    }
    out.items.push_back({"classes", subject,
                         detail::join_sorted(cls->members) ==
                             detail::join_sorted(listed),
                         detail::join_sorted(cls->members),
                         detail::join_sorted(listed), ""});
    std::string canon = encode(cls->representative);
    if (canon != listed.front()) {
      out.items.push_back({"representative", subject, true, canon,
                           listed.front(),
                           "listed first member is not the least one"});
    }
  }

  // Twisting-map tables are claims about the listed first member of each
  // class, so they are recomputed on that table, not on the canonical one.
  for (std::size_t k = 0; k < class_alpha_kinds.size(); ++k) {
    std::string section(to_string(class_alpha_kinds[k]));
    for (std::size_t i = 0; i < fixture.classes.size(); ++i) {
      const std::string& first = fixture.classes[i].front();
      PartialMagma m = decode_table(first);
      std::vector<std::string> computed;
      for (const PartialMap& a : alpha_set(m, class_alpha_kinds[k])) {
        computed.push_back(map_code(a));
      }
      std::string lhs = detail::join_sorted(computed);
      std::string rhs = detail::join_sorted(fixture.alpha_tables[k][i]);
      out.items.push_back({section,
                           detail::item_subject(static_cast<int>(i) + 1, first),
                           lhs == rhs, lhs, rhs, ""});
    }
  }

  // Associativity item lists. The claimed count and the claimed list are
  // checked independently; the reference data is known to be able to
  // disagree with itself here.
  auto check_claim = [&](const std::string& section, const ClaimedItems& claim,
                         bool strict) {
    std::vector<int> computed;
    for (std::size_t i = 0; i < fixture.classes.size(); ++i) {
      PartialMagma m = decode_table(fixture.classes[i].front());
      bool holds = strict ? is_associative(m) : is_partially_associative(m);
      if (holds) {
        computed.push_back(static_cast<int>(i) + 1);
      }
    }
    std::vector<int> claimed = claim.items;
    std::sort(claimed.begin(), claimed.end());
    out.items.push_back({section, "items", computed == claimed,
                         detail::join_items(computed),
                         detail::join_items(claimed), ""});
    std::string note;
    if (claim.claimed_count != static_cast<int>(claim.items.size())) {
      note = "claimed count disagrees with the claimed list, which has " +
             std::to_string(claim.items.size()) + " entries";
    }
    out.items.push_back({section, "count",
                         static_cast<int>(computed.size()) ==
                             claim.claimed_count,
                         std::to_string(computed.size()),
                         std::to_string(claim.claimed_count), note});
  };
  check_claim("partially-associative", fixture.partially_associative_claim,
              false);
  check_claim("associative", fixture.associative_claim, true);

  // Example blocks state predicate sets for the rational-coefficient
  // structure, so they are recomputed through that route.
  for (const ExampleFixture& ex : fixture.examples) {
    std::string section = "example (" + ex.label + ")";
    PartialMagma m = decode_table(ex.table);
    std::array<std::vector<std::string>, 5> computed;
    for (const PartialMap& a : all_partial_maps(m.order())) {
      HomAlgebraInstance h(m, a);
      bool mult = is_multiplicative(h);
      bool hom = is_hom_associative_algebra(h);
      std::string code = map_code(a);
      if (is_partially_basis_multiplicative(h)) {
        computed[0].push_back(code);
      }
      if (mult) {
        computed[1].push_back(code);
      }
      if (is_partially_basis_hom_associative(h)) {
        computed[2].push_back(code);
      }
      if (hom) {
        computed[3].push_back(code);
      }
      if (mult && hom) {
        computed[4].push_back(code);
      }
    }
    for (std::size_t k = 0; k < example_set_fields.size(); ++k) {
      std::string lhs = detail::join_sorted(computed[k]);
      std::string rhs = detail::join_sorted(ex.sets[k]);
      out.items.push_back(
          {section, example_set_fields[k], lhs == rhs, lhs, rhs, ""});
    }
    auto flag_text = [](bool pa, bool a) {
      if (pa && a) {
        return std::string("partially-associative associative");
      }
      if (pa) {
        return std::string("partially-associative");
      }
      if (a) {
        return std::string("associative");
      }
      return std::string("none");
    };
    std::string lhs = flag_text(is_partially_basis_associative(m),
                                is_associative_algebra(m));
    std::string rhs = flag_text(ex.partially_associative, ex.associative);
    out.items.push_back({section, "flags", lhs == rhs, lhs, rhs, ""});
  }
  return out;
}

// Folds a grid cross-check into the verification item shape.
inline VerificationOutcome as_verification(const CrossCheckResult& result,
                                           const std::string& section) {
  VerificationOutcome out;
  std::string summary = std::to_string(result.equivalences) +
                        " equivalences over " + std::to_string(result.pairs) +
                        " table/map pairs";
  out.items.push_back({section, "grid", result.ok(), summary,
                       "all equivalences hold",
                       result.ok() ? "" : "see violation items"});
  for (const std::string& v : result.violations) {
    out.items.push_back({section, "violation", false, v, "equivalence", ""});
  }
  return out;
}

}  // namespace hommag

#endif  // HOMMAG_VERIFY_HPP_
