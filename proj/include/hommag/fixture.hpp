#ifndef HOMMAG_FIXTURE_HPP_
#define HOMMAG_FIXTURE_HPP_

#include <array>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hommag/enumerate.hpp"
#include "hommag/partial_magma.hpp"
#include "hommag/predicates.hpp"

namespace hommag {

// A claimed count together with a claimed item list. The two are recorded
// separately on purpose: the reference data is allowed to disagree with
// itself, and the verifier reports when it does.
struct ClaimedItems {
  int claimed_count = 0;
  std::vector<int> items;
};

inline constexpr std::array<const char*, 5> example_set_fields = {
    "partially-multiplicative",
    "multiplicative",
    "partially-hom-associative",
    "hom-associative",
    "multiplicative-and-hom-associative",
};

struct ExampleFixture {
  std::string label;
  std::string table;
  std::array<std::vector<std::string>, 5> sets;  // by example_set_fields
  bool partially_associative = false;
  bool associative = false;
};

// Claimed classification data, loaded from the versioned data file and
// immutable afterwards. Class members are listed in source order; the
// first member of each class is the one the twisting-map tables refer to.
struct PaperFixture {
  int order = 2;
  std::vector<std::vector<std::string>> classes;  // item i at index i-1
  std::array<std::vector<std::vector<std::string>>, 4>
      alpha_tables;  // by class_alpha_kinds, item i at index i-1
  ClaimedItems partially_associative_claim;
  ClaimedItems associative_claim;
  std::vector<ExampleFixture> examples;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string word;
  while (in >> word) {
    out.push_back(word);
  }
  return out;
}

[[noreturn]] inline void fixture_error(std::size_t line_no,
                                       const std::string& what) {
  throw std::invalid_argument("fixture line " + std::to_string(line_no) +
                              ": " + what);
}

inline int parse_item_number(std::string_view s, std::size_t line_no) {
  int v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') {
      fixture_error(line_no, "expected an item number");
    }
    v = v * 10 + (ch - '0');
  }
  if (s.empty() || v < 1) {
    fixture_error(line_no, "expected an item number");
  }
  return v;
}

// "1-24 27 30-32" and the like.
inline std::vector<int> parse_item_ranges(std::string_view s,
                                          std::size_t line_no) {
  std::vector<int> items;
  for (const std::string& word : split_words(s)) {
    std::size_t dash = word.find('-');
    int lo;
    int hi;
    if (dash == std::string::npos) {
      lo = hi = parse_item_number(word, line_no);
    } else {
      lo = parse_item_number(std::string_view(word).substr(0, dash), line_no);
      hi = parse_item_number(std::string_view(word).substr(dash + 1), line_no);
    }
    if (hi < lo) {
      fixture_error(line_no, "descending item range");
    }
    for (int i = lo; i <= hi; ++i) {
      items.push_back(i);
    }
  }
  return items;
}

}  // namespace detail

inline PaperFixture parse_fixture(std::string_view text) {
  // Raw pass: numbered lines per section, key/value lines per section.
  std::map<std::string, std::map<int, std::vector<std::string>>> numbered;
  std::map<std::string, std::map<std::string, std::string>> keyed;
  std::vector<std::string> example_order;

  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        detail::fixture_error(line_no, "unterminated section header");
      }
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (section.empty()) {
        detail::fixture_error(line_no, "empty section name");
      }
      if (section.starts_with("example ")) {
        example_order.push_back(section.substr(8));
      }
      continue;
    }
    if (section.empty()) {
      detail::fixture_error(line_no, "data before the first section");
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      detail::fixture_error(line_no, "expected 'key: value'");
    }
    std::string_view key = detail::trim(line.substr(0, colon));
    std::string_view value = detail::trim(line.substr(colon + 1));
    if (!key.empty() && key.front() >= '0' && key.front() <= '9') {
      int item = detail::parse_item_number(key, line_no);
      auto [it, inserted] =
          numbered[section].emplace(item, detail::split_words(value));
      if (!inserted) {
        detail::fixture_error(line_no, "duplicate item in section");
      }
    } else {
      auto [it, inserted] =
          keyed[section].emplace(std::string(key), std::string(value));
      if (!inserted) {
        detail::fixture_error(line_no, "duplicate key in section");
      }
    }
  }

  auto take_numbered = [&](const std::string& name)
      -> std::vector<std::vector<std::string>> {
    auto it = numbered.find(name);
    if (it == numbered.end()) {
      throw std::invalid_argument("fixture: missing section [" + name + "]");
    }
    std::vector<std::vector<std::string>> rows;
    int expected = 1;
    for (auto& [item, words] : it->second) {
      if (item != expected++) {
        throw std::invalid_argument("fixture: section [" + name +
                                    "] items are not contiguous from 1");
      }
      if (words.empty()) {
        throw std::invalid_argument("fixture: empty row in [" + name + "]");
      }
      rows.push_back(std::move(words));
    }
    return rows;
  };

  PaperFixture fx;
  fx.classes = take_numbered("classes");
  fx.order = decode_table(fx.classes.front().front()).order();

  // "*" means every partial self-map of the fixture order.
  std::vector<std::string> all_codes;
  for (const PartialMap& a : all_partial_maps(fx.order)) {
    all_codes.push_back(map_code(a));
  }
  auto expand = [&](std::vector<std::string> words) {
    if (words.size() == 1 && words.front() == "*") {
      return all_codes;
    }
    for (const std::string& w : words) {
      if (decode_map(w).order() != fx.order) {
        throw std::invalid_argument("fixture: map code of wrong order: " + w);
      }
    }
    return words;
  };

  for (auto& members : fx.classes) {
    for (const std::string& code : members) {
      if (decode_table(code).order() != fx.order) {
        throw std::invalid_argument("fixture: table code of wrong order: " +
                                    code);
      }
    }
  }
  for (std::size_t k = 0; k < class_alpha_kinds.size(); ++k) {
    auto rows = take_numbered(std::string(to_string(class_alpha_kinds[k])));
    if (rows.size() != fx.classes.size()) {
      throw std::invalid_argument(
          "fixture: twisting-map table does not cover every class");
    }
    for (auto& row : rows) {
      fx.alpha_tables[k].push_back(expand(std::move(row)));
    }
  }

  auto take_claim = [&](const std::string& name) {
    auto it = keyed.find(name);
    if (it == keyed.end() || !it->second.count("count") ||
        !it->second.count("items")) {
      throw std::invalid_argument("fixture: section [" + name +
                                  "] needs count and items");
    }
    ClaimedItems claim;
    claim.claimed_count =
        detail::parse_item_number(it->second.at("count"), 0);
    claim.items = detail::parse_item_ranges(it->second.at("items"), 0);
    for (int i : claim.items) {
      if (i < 1 || static_cast<std::size_t>(i) > fx.classes.size()) {
        throw std::invalid_argument("fixture: claim item out of range");
      }
    }
    return claim;
  };
  fx.partially_associative_claim = take_claim("partially-associative-claim");
  fx.associative_claim = take_claim("associative-claim");

  for (const std::string& label : example_order) {
    auto& fields = keyed.at("example " + label);
    ExampleFixture ex;
    ex.label = label;
    if (!fields.count("table") || !fields.count("flags")) {
      throw std::invalid_argument("fixture: example " + label +
                                  " needs table and flags");
    }
    ex.table = fields.at("table");
    if (decode_table(ex.table).order() != fx.order) {
      throw std::invalid_argument("fixture: example table of wrong order");
    }
    for (std::size_t k = 0; k < example_set_fields.size(); ++k) {
      if (!fields.count(example_set_fields[k])) {
        throw std::invalid_argument("fixture: example " + label +
                                    " is missing a set field");
      }
      ex.sets[k] = expand(detail::split_words(fields.at(example_set_fields[k])));
    }
    for (const std::string& word : detail::split_words(fields.at("flags"))) {
      if (word == "partially-associative") {
        ex.partially_associative = true;
      } else if (word == "associative") {
        ex.associative = true;
      } else if (word != "none") {
        throw std::invalid_argument("fixture: unknown flag " + word);
      }
    }
    fx.examples.push_back(std::move(ex));
  }
  return fx;
}

inline PaperFixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("fixture: cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

}  // namespace hommag

#endif  // HOMMAG_FIXTURE_HPP_
