#ifndef HOMMAG_ISO_HPP_
#define HOMMAG_ISO_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hommag/partial_magma.hpp"
#include "hommag/partial_map.hpp"

namespace hommag {

// A total bijection of {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<Elem> images) : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    detail::require(n >= 1 && n <= 254, "permutation order out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Elem v : images_) {
      detail::require(v >= 1 && v <= n && !seen[v],
                      "permutation images must be a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<Elem> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), Elem{1});
    return Permutation(std::move(img));
  }

  // All n! permutations in lexicographic order of their image words.
  static std::vector<Permutation> all(int n) {
    detail::require(n >= 1 && n <= 8, "permutation enumeration capped at order 8");
    std::vector<Elem> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), Elem{1});
    std::vector<Permutation> out;
    do {
      out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  [[nodiscard]] int order() const noexcept {
    return static_cast<int>(images_.size());
  }

  [[nodiscard]] Elem operator()(Elem x) const {
    return images_[static_cast<std::size_t>(x - 1)];
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<Elem> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      img[static_cast<std::size_t>(images_[i] - 1)] =
          static_cast<Elem>(i + 1);
    }
    return Permutation(std::move(img));
  }

  [[nodiscard]] PartialMap as_partial_map() const {
    std::vector<Cell> img;
    img.reserve(images_.size());
    for (Elem v : images_) {
      img.push_back(Cell(v));
    }
    return PartialMap(order(), std::move(img));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Elem> images_;
};

// The relabelled table phi . m, with (phi.m)(phi(x), phi(y)) = phi(m(x,y))
// and undefined cells carried along.
inline PartialMagma relabel(const PartialMagma& m, const Permutation& phi) {
  detail::require(m.order() == phi.order(), "relabel: order mismatch");
  int n = m.order();
  std::vector<Cell> cells(static_cast<std::size_t>(n) * n);
  for (Elem x = 1; x <= n; ++x) {
    for (Elem y = 1; y <= n; ++y) {
      Cell c = m.at(x, y);
      Cell image = c.defined() ? Cell(phi(c.value())) : undefined_cell;
      cells[static_cast<std::size_t>(phi(x) - 1) * n + (phi(y) - 1)] = image;
    }
  }
  return PartialMagma(n, std::move(cells));
}

// Isomorphism of partial tables: phi(m(x,y)) and m'(phi(x),phi(y)) are
// defined at the same pairs and agree there.
inline bool is_isomorphism_pm(const PartialMagma& m, const PartialMagma& mp,
                              const Permutation& phi) {
  detail::require(m.order() == mp.order() && m.order() == phi.order(),
                  "isomorphism check: order mismatch");
  bool ok = true;
  for_each_point_while<2>(m.order(), [&](const Point<2>& p) {
    Cell c = m.at(p[0], p[1]);
    Cell lhs = c.defined() ? Cell(phi(c.value())) : undefined_cell;
    Cell rhs = mp.at(phi(p[0]), phi(p[1]));
    ok = (lhs == rhs);
    return ok;
  });
  return ok;
}

// Isomorphism of total tables. Rejects partial input.
inline bool is_isomorphism_m(const PartialMagma& m, const PartialMagma& mp,
                             const Permutation& phi) {
  detail::require(m.total() && mp.total(),
                  "is_isomorphism_m: tables must be total");
  return is_isomorphism_pm(m, mp, phi);
}

// Isomorphism in the weak sense: f is a partial map, injective on its
// domain, with f(m(x,y)) = m'(f(x),f(y)) as partial functions of (x,y).
inline bool is_isomorphism_wpm(const PartialMagma& m, const PartialMagma& mp,
                               const PartialMap& f) {
  detail::require(m.order() == mp.order() && m.order() == f.order(),
                  "isomorphism check: order mismatch");
  if (!f.injective_on_domain()) {
    return false;
  }
  bool ok = true;
  for_each_point_while<2>(m.order(), [&](const Point<2>& p) {
    Cell lhs = f.apply(m.at(p[0], p[1]));
    Cell rhs = mp.at(f(p[0]), f(p[1]));
    ok = (lhs == rhs);
    return ok;
  });
  return ok;
}

// First permutation (in lexicographic order) carrying m onto mp, if any.
// Exhaustive over S_n, so capped at small orders.
inline std::optional<Permutation> are_isomorphic(const PartialMagma& m,
                                                 const PartialMagma& mp) {
  detail::require(m.order() == mp.order(), "are_isomorphic: order mismatch");
  for (const Permutation& phi : Permutation::all(m.order())) {
    if (is_isomorphism_pm(m, mp, phi)) {
      return phi;
    }
  }
  return std::nullopt;
}

// Lexicographically least relabelling of m, in the cell order (defined
// values ascending, undefined last). Class invariant: two tables have the
// same canonical form exactly when they are isomorphic.
inline PartialMagma canonical_form(const PartialMagma& m) {
  std::optional<PartialMagma> best;
  for (const Permutation& phi : Permutation::all(m.order())) {
    PartialMagma candidate = relabel(m, phi);
    if (!best || candidate < *best) {
      best = std::move(candidate);
    }
  }
  return *best;
}

// Number of isomorphism classes of partial (or total) tables of the given
// order, by the orbit-counting lemma: average over S_n of the number of
// tables fixed by each permutation. A permutation acting on the n^2 cell
// positions fixes a table iff the table is constant on each position cycle
// with a value whose own cycle length divides the position cycle length;
// counting choices per cycle gives a closed form, no enumeration.
inline std::uint64_t burnside_class_count(int order, bool totals_only = false,
                                          int max_order = 5) {
  detail::require(order >= 1 && order <= max_order,
                  "burnside_class_count: order above cap");
  int n = order;
  unsigned __int128 total = 0;
  std::uint64_t group_size = 0;
  for (const Permutation& phi : Permutation::all(n)) {
    ++group_size;
    std::vector<bool> visited(static_cast<std::size_t>(n) * n, false);
    unsigned __int128 fixed = 1;
    for (Elem x = 1; x <= n; ++x) {
      for (Elem y = 1; y <= n; ++y) {
        std::size_t start = static_cast<std::size_t>(x - 1) * n + (y - 1);
        if (visited[start]) {
          continue;
        }
        // Walk the position cycle of (x,y) under phi acting coordinatewise.
        std::uint64_t cycle_len = 0;
        Elem cx = x;
        Elem cy = y;
        do {
          visited[static_cast<std::size_t>(cx - 1) * n + (cy - 1)] = true;
          cx = phi(cx);
          cy = phi(cy);
          ++cycle_len;
        } while (!(cx == x && cy == y));
        // Values fixed by phi^cycle_len, each a constant choice for the
        // whole cycle; undefined adds one more choice unless totals only.
        std::uint64_t choices = totals_only ? 0 : 1;
        for (Elem e = 1; e <= n; ++e) {
          Elem w = e;
          for (std::uint64_t i = 0; i < cycle_len; ++i) {
            w = phi(w);
          }
          if (w == e) {
            ++choices;
          }
        }
        fixed *= choices;
      }
    }
    total += fixed;
  }
  unsigned __int128 classes = total / group_size;
  detail::require(classes * group_size == total,
                  "burnside_class_count: internal error, sum not divisible");
  return static_cast<std::uint64_t>(classes);
}

}  // namespace hommag

#endif  // HOMMAG_ISO_HPP_
