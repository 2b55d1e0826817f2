#ifndef HOMMAG_PARTIAL_MAGMA_HPP_
#define HOMMAG_PARTIAL_MAGMA_HPP_

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hommag/partial_map.hpp"

namespace hommag {

// A partial binary operation on {1..n}, stored as a row-major n x n table
// of cells. Immutable after construction.
class PartialMagma {
 public:
  PartialMagma(int order, std::vector<Cell> cells)
      : order_(order), cells_(std::move(cells)) {
    detail::require(order_ >= 1 && order_ <= 254, "table order out of range");
    detail::require(
        cells_.size() == static_cast<std::size_t>(order_) * order_,
        "cell list does not match table order");
    for (Cell c : cells_) {
      detail::require(!c.defined() || (c.value() >= 1 && c.value() <= order_),
                      "table cell out of range");
    }
  }

  static PartialMagma nowhere_defined(int order) {
    detail::require(order >= 1 && order <= 254, "table order out of range");
    return PartialMagma(
        order, std::vector<Cell>(static_cast<std::size_t>(order) * order));
  }

  [[nodiscard]] int order() const noexcept { return order_; }

  [[nodiscard]] Cell at(Elem x, Elem y) const {
    assert(x >= 1 && x <= order_ && y >= 1 && y <= order_);
    return cells_[static_cast<std::size_t>(x - 1) * order_ + (y - 1)];
  }

  // Undefined-propagating: the product is undefined if either factor is.
  [[nodiscard]] Cell at(Cell x, Cell y) const {
    if (!x.defined() || !y.defined()) {
      return undefined_cell;
    }
    return at(x.value(), y.value());
  }

  [[nodiscard]] bool total() const noexcept {
    for (Cell c : cells_) {
      if (!c.defined()) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] const std::vector<Cell>& cells() const noexcept {
    return cells_;
  }

  // Lexicographic on row-major cells; coincides with code order.
  friend bool operator==(const PartialMagma&, const PartialMagma&) = default;
  friend auto operator<=>(const PartialMagma&, const PartialMagma&) = default;

 private:
  int order_;
  std::vector<Cell> cells_;
};

// ---------------------------------------------------------------------------
// Table and map codes.
//
// Order 2 uses the compact form: a word over {1,2,3} where 3 marks an
// undefined cell, row-major for tables ("2131" is 1*1=2, 1*2=1, 2*1
// undefined, 2*2=1) and positional for maps ("21" sends 1 to 2, 2 to 1).
// Every other order uses comma-separated single digits with '-' for an
// undefined cell, e.g. "1,-,2,3,1,1,2,-,3". Codes cover orders up to 9.

namespace detail {

inline char compact_symbol(Cell c) { return c.defined() ? ('0' + c.value()) : '3'; }

inline std::string render_cells(const std::vector<Cell>& cells, int order,
                                bool compact) {
  std::string out;
  if (compact) {
    for (Cell c : cells) {
      out.push_back(compact_symbol(c));
    }
    return out;
  }
  (void)order;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out.push_back(cells[i].defined() ? static_cast<char>('0' + cells[i].value())
                                     : '-');
  }
  return out;
}

inline bool is_compact_code(std::string_view code, std::size_t expected_len) {
  if (code.size() != expected_len) {
    return false;
  }
  for (char ch : code) {
    if (ch != '1' && ch != '2' && ch != '3') {
      return false;
    }
  }
  return true;
}

inline std::vector<Cell> parse_compact(std::string_view code) {
  std::vector<Cell> cells;
  cells.reserve(code.size());
  for (char ch : code) {
    cells.push_back(ch == '3' ? undefined_cell
                              : Cell(static_cast<Elem>(ch - '0')));
  }
  return cells;
}

// Comma form: single-character tokens, digit or '-'.
inline std::vector<Cell> parse_comma(std::string_view code, int max_value,
                                     char const* what) {
  std::vector<Cell> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = code.find(',', pos);
    std::string_view tok = code.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    if (tok.size() != 1) {
      throw std::invalid_argument(std::string(what) +
                                  ": each cell must be one digit or '-'");
    }
    char ch = tok[0];
    if (ch == '-') {
      cells.push_back(undefined_cell);
    } else if (ch >= '1' && ch <= '9') {
      cells.push_back(Cell(static_cast<Elem>(ch - '0')));
    } else {
      throw std::invalid_argument(std::string(what) + ": invalid cell symbol");
    }
    if (cells.back().defined() && cells.back().value() > max_value) {
      throw std::invalid_argument(std::string(what) + ": cell value exceeds order");
    }
    if (next == std::string_view::npos) {
      break;
    }
    pos = next + 1;
  }
  return cells;
}

inline std::size_t comma_token_count(std::string_view code) {
  return static_cast<std::size_t>(std::count(code.begin(), code.end(), ',')) + 1;
}

}  // namespace detail

inline std::string encode(const PartialMagma& m) {
  return detail::render_cells(m.cells(), m.order(), m.order() == 2);
}

inline PartialMagma decode_table(std::string_view code) {
  detail::require(!code.empty(), "table code: empty");
  if (detail::is_compact_code(code, 4)) {
    return PartialMagma(2, detail::parse_compact(code));
  }
  std::size_t ncells = detail::comma_token_count(code);
  int order = 1;
  while (static_cast<std::size_t>(order) * order < ncells) {
    ++order;
  }
  detail::require(static_cast<std::size_t>(order) * order == ncells,
                  "table code: cell count is not a perfect square");
  detail::require(order <= 9, "table code: order above 9 is not representable");
  return PartialMagma(order, detail::parse_comma(code, order, "table code"));
}

inline std::string map_code(const PartialMap& f) {
  return detail::render_cells(f.images(), f.order(), f.order() == 2);
}

inline PartialMap decode_map(std::string_view code) {
  detail::require(!code.empty(), "map code: empty");
  if (detail::is_compact_code(code, 2)) {
    return PartialMap(2, detail::parse_compact(code));
  }
  std::size_t n = detail::comma_token_count(code);
  detail::require(n <= 9, "map code: order above 9 is not representable");
  return PartialMap(static_cast<int>(n),
                    detail::parse_comma(code, static_cast<int>(n), "map code"));
}

}  // namespace hommag

#endif  // HOMMAG_PARTIAL_MAGMA_HPP_
