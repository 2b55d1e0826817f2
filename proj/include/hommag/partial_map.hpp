#ifndef HOMMAG_PARTIAL_MAP_HPP_
#define HOMMAG_PARTIAL_MAP_HPP_

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hommag {

// Element labels are 1-based throughout, matching the table codes.
using Elem = std::uint8_t;

namespace detail {
inline void require(bool cond, char const* msg) {
  if (!cond) {
    throw std::invalid_argument(msg);
  }
}
}  // namespace detail

// One value of a partial operation: an element of {1..n} or undefined.
// Cells are totally ordered with defined values ascending and undefined
// after every defined value; canonical forms and code serialization both
// rely on this order.
class Cell {
 public:
  constexpr Cell() noexcept = default;  // undefined
  constexpr explicit Cell(Elem value) noexcept : rank_(value) {}

  [[nodiscard]] constexpr bool defined() const noexcept {
    return rank_ != kUndefinedRank;
  }
  [[nodiscard]] constexpr Elem value() const noexcept {
    assert(defined());
    return static_cast<Elem>(rank_);
  }

  friend constexpr bool operator==(Cell, Cell) noexcept = default;
  friend constexpr auto operator<=>(Cell, Cell) noexcept = default;

 private:
  static constexpr std::uint16_t kUndefinedRank = 0xFFFF;
  std::uint16_t rank_ = kUndefinedRank;
};

inline constexpr Cell undefined_cell{};

// A partial self-map of {1..n}. Immutable after construction.
class PartialMap {
 public:
  PartialMap(int order, std::vector<Cell> images)
      : order_(order), images_(std::move(images)) {
    detail::require(order_ >= 1 && order_ <= 254, "map order out of range");
    detail::require(images_.size() == static_cast<std::size_t>(order_),
                    "image list does not match map order");
    for (Cell c : images_) {
      detail::require(!c.defined() || (c.value() >= 1 && c.value() <= order_),
                      "map image out of range");
    }
  }

  static PartialMap nowhere_defined(int order) {
    return PartialMap(order, std::vector<Cell>(static_cast<std::size_t>(order)));
  }

  static PartialMap identity(int order) {
    std::vector<Cell> img(static_cast<std::size_t>(order));
    for (int x = 1; x <= order; ++x) {
      img[static_cast<std::size_t>(x - 1)] = Cell(static_cast<Elem>(x));
    }
    return PartialMap(order, std::move(img));
  }

  [[nodiscard]] int order() const noexcept { return order_; }

  [[nodiscard]] Cell operator()(Elem x) const {
    assert(x >= 1 && x <= order_);
    return images_[static_cast<std::size_t>(x - 1)];
  }

  // Undefined-propagating evaluation.
  [[nodiscard]] Cell apply(Cell x) const {
    return x.defined() ? (*this)(x.value()) : undefined_cell;
  }

  [[nodiscard]] bool total() const noexcept {
    return std::all_of(images_.begin(), images_.end(),
                       [](Cell c) { return c.defined(); });
  }

  [[nodiscard]] std::vector<Elem> domain() const {
    std::vector<Elem> d;
    for (int x = 1; x <= order_; ++x) {
      if ((*this)(static_cast<Elem>(x)).defined()) {
        d.push_back(static_cast<Elem>(x));
      }
    }
    return d;
  }

  [[nodiscard]] std::vector<Elem> range() const {
    std::vector<Elem> r;
    for (Cell c : images_) {
      if (c.defined()) {
        r.push_back(c.value());
      }
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  }

  [[nodiscard]] bool injective_on_domain() const {
    std::vector<bool> seen(static_cast<std::size_t>(order_) + 1, false);
    for (Cell c : images_) {
      if (!c.defined()) {
        continue;
      }
      if (seen[c.value()]) {
        return false;
      }
      seen[c.value()] = true;
    }
    return true;
  }

  [[nodiscard]] const std::vector<Cell>& images() const noexcept {
    return images_;
  }

  // Lexicographic on images with the Cell order; coincides with code order.
  friend bool operator==(const PartialMap&, const PartialMap&) = default;
  friend auto operator<=>(const PartialMap&, const PartialMap&) = default;

 private:
  int order_;
  std::vector<Cell> images_;
};

// g after f: defined at x iff f(x) and g(f(x)) are.
inline PartialMap compose(const PartialMap& g, const PartialMap& f) {
  detail::require(g.order() == f.order(), "compose: order mismatch");
  std::vector<Cell> img(static_cast<std::size_t>(f.order()));
  for (int x = 1; x <= f.order(); ++x) {
    img[static_cast<std::size_t>(x - 1)] = g.apply(f(static_cast<Elem>(x)));
  }
  return PartialMap(f.order(), std::move(img));
}

// f x h on ordered pairs: (x,y) -> (f(x), h(y)) where both are defined.
class PairMap {
 public:
  PairMap(PartialMap f, PartialMap h) : f_(std::move(f)), h_(std::move(h)) {
    detail::require(f_.order() == h_.order(), "pair map: order mismatch");
  }

  [[nodiscard]] int order() const noexcept { return f_.order(); }

  [[nodiscard]] std::optional<std::pair<Elem, Elem>> operator()(Elem x,
                                                                Elem y) const {
    Cell a = f_(x);
    Cell b = h_(y);
    if (!a.defined() || !b.defined()) {
      return std::nullopt;
    }
    return std::pair<Elem, Elem>{a.value(), b.value()};
  }

 private:
  PartialMap f_;
  PartialMap h_;
};

inline PairMap pair_map(const PartialMap& f, const PartialMap& h) {
  return PairMap(f, h);
}

// ---------------------------------------------------------------------------
// Pointwise machinery for partial functions on X^K. A "partial function" in
// this layer is any callable Point<K> -> std::optional<V>; partial maps on
// pairs and triples are evaluated through it rather than materialized.

template <std::size_t K>
using Point = std::array<Elem, K>;

// Visits every point of {1..order}^K in lexicographic order while the
// visitor returns true.
template <std::size_t K, typename Visit>
void for_each_point_while(int order, Visit&& visit) {
  static_assert(K >= 1, "arity must be positive");
  Point<K> p;
  p.fill(Elem{1});
  for (;;) {
    if (!visit(static_cast<const Point<K>&>(p))) {
      return;
    }
    std::size_t i = K;
    bool done = true;
    while (i > 0) {
      --i;
      if (p[i] < static_cast<Elem>(order)) {
        ++p[i];
        done = false;
        break;
      }
      p[i] = 1;
    }
    if (done) {
      return;
    }
  }
}

template <std::size_t K, typename Visit>
void for_each_point(int order, Visit&& visit) {
  for_each_point_while<K>(order, [&](const Point<K>& p) {
    visit(p);
    return true;
  });
}

// f ~ g: values agree at every point where both are defined. Reflexive and
// symmetric but not transitive.
template <std::size_t K, typename F, typename G>
bool partially_equal_on(int order, F&& f, G&& g) {
  bool equal = true;
  for_each_point_while<K>(order, [&](const Point<K>& p) {
    auto a = f(p);
    auto b = g(p);
    if (a && b && *a != *b) {
      equal = false;
      return false;
    }
    return true;
  });
  return equal;
}

// Equality as partial functions: identical domains and identical values.
template <std::size_t K, typename F, typename G>
bool equal_as_partial_functions_on(int order, F&& f, G&& g) {
  bool equal = true;
  for_each_point_while<K>(order, [&](const Point<K>& p) {
    auto a = f(p);
    auto b = g(p);
    if (a.has_value() != b.has_value() || (a && b && *a != *b)) {
      equal = false;
      return false;
    }
    return true;
  });
  return equal;
}

namespace detail {
inline auto as_point_fn(const PartialMap& f) {
  return [&f](const Point<1>& p) -> std::optional<Elem> {
    Cell c = f(p[0]);
    if (!c.defined()) {
      return std::nullopt;
    }
    return c.value();
  };
}
inline auto as_point_fn(const PairMap& f) {
  return [&f](const Point<2>& p) { return f(p[0], p[1]); };
}
}  // namespace detail

inline bool partially_equal(const PartialMap& f, const PartialMap& g) {
  detail::require(f.order() == g.order(), "partial equality: order mismatch");
  return partially_equal_on<1>(f.order(), detail::as_point_fn(f),
                               detail::as_point_fn(g));
}

inline bool equal_as_partial_functions(const PartialMap& f,
                                       const PartialMap& g) {
  detail::require(f.order() == g.order(), "partial equality: order mismatch");
  return equal_as_partial_functions_on<1>(f.order(), detail::as_point_fn(f),
                                          detail::as_point_fn(g));
}

inline bool partially_equal(const PairMap& f, const PairMap& g) {
  detail::require(f.order() == g.order(), "partial equality: order mismatch");
  return partially_equal_on<2>(f.order(), detail::as_point_fn(f),
                               detail::as_point_fn(g));
}

inline bool equal_as_partial_functions(const PairMap& f, const PairMap& g) {
  detail::require(f.order() == g.order(), "partial equality: order mismatch");
  return equal_as_partial_functions_on<2>(f.order(), detail::as_point_fn(f),
                                          detail::as_point_fn(g));
}

}  // namespace hommag

#endif  // HOMMAG_PARTIAL_MAP_HPP_
