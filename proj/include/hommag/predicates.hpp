#ifndef HOMMAG_PREDICATES_HPP_
#define HOMMAG_PREDICATES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hommag/partial_magma.hpp"
#include "hommag/partial_map.hpp"

namespace hommag {

// The seven pointwise predicates on a table m with twisting map a.
//
//   WeakPartialEndo   a(m(x,y)) ~ m(a(x),a(y))          agree where both defined
//   PartialEndo       a(m(x,y)) = m(a(x),a(y))          equal as partial functions
//   Endo              PartialEndo with m and a total
//   PartialHomAssoc   m(a(x),m(y,z)) ~ m(m(x,y),a(z))
//   HomAssoc          m(a(x),m(y,z)) = m(m(x,y),a(z))   equal as partial functions
//   PartialAssoc      PartialHomAssoc at a = identity
//   Assoc             HomAssoc at a = identity
enum class PredicateKind {
  WeakPartialEndo,
  PartialEndo,
  Endo,
  PartialHomAssoc,
  HomAssoc,
  PartialAssoc,
  Assoc,
};

inline constexpr std::array<PredicateKind, 7> all_predicate_kinds = {
    PredicateKind::WeakPartialEndo, PredicateKind::PartialEndo,
    PredicateKind::Endo,            PredicateKind::PartialHomAssoc,
    PredicateKind::HomAssoc,        PredicateKind::PartialAssoc,
    PredicateKind::Assoc,
};

inline std::string_view to_string(PredicateKind k) {
  switch (k) {
    case PredicateKind::WeakPartialEndo: return "weak-partial-endo";
    case PredicateKind::PartialEndo: return "partial-endo";
    case PredicateKind::Endo: return "endo";
    case PredicateKind::PartialHomAssoc: return "partial-hom-assoc";
    case PredicateKind::HomAssoc: return "hom-assoc";
    case PredicateKind::PartialAssoc: return "partial-assoc";
    case PredicateKind::Assoc: return "assoc";
  }
  return "unknown";
}

inline std::optional<PredicateKind> predicate_from_name(std::string_view name) {
  for (PredicateKind k : all_predicate_kinds) {
    if (to_string(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

// True when the predicate takes a twisting map; PartialAssoc and Assoc are
// the identity-map specializations and take none.
inline bool takes_alpha(PredicateKind k) {
  return k != PredicateKind::PartialAssoc && k != PredicateKind::Assoc;
}

// First point where a check failed, with the two sides as cells. A side
// shows as '-' when it was undefined there (relevant for the strict modes,
// where a one-sided definition is itself the disagreement).
struct Witness {
  int arity = 2;  // 2 for the endomorphism family, 3 for associativity
  std::array<Elem, 3> point{};
  Cell lhs;
  Cell rhs;

  [[nodiscard]] std::string describe() const {
    auto side = [](Cell c) {
      return c.defined() ? std::string(1, static_cast<char>('0' + c.value()))
                         : std::string("-");
    };
    std::string s = "(";
    for (int i = 0; i < arity; ++i) {
      if (i > 0) {
        s.push_back(',');
      }
      s.push_back(static_cast<char>('0' + point[static_cast<std::size_t>(i)]));
    }
    s += "): lhs=" + side(lhs) + " rhs=" + side(rhs);
    return s;
  }
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;  // set for pointwise failures only

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

// The two sides of the endomorphism equation at (x,y).
inline Cell endo_lhs(const PartialMagma& m, const PartialMap& a, Elem x,
                     Elem y) {
  return a.apply(m.at(x, y));
}
inline Cell endo_rhs(const PartialMagma& m, const PartialMap& a, Elem x,
                     Elem y) {
  return m.at(a(x), a(y));
}

// The two sides of the twisted associativity equation at (x,y,z).
inline Cell hom_lhs(const PartialMagma& m, const PartialMap& a, Elem x, Elem y,
                    Elem z) {
  return m.at(a(x), m.at(y, z));
}
inline Cell hom_rhs(const PartialMagma& m, const PartialMap& a, Elem x, Elem y,
                    Elem z) {
  return m.at(m.at(x, y), a(z));
}

inline bool sides_disagree(Cell lhs, Cell rhs, bool strict) {
  if (strict) {
    return lhs != rhs;
  }
  return lhs.defined() && rhs.defined() && lhs != rhs;
}

template <typename LhsFn, typename RhsFn>
CheckResult check_on_pairs(int order, bool strict, LhsFn&& lhs_fn,
                           RhsFn&& rhs_fn) {
  CheckResult result;
  for_each_point_while<2>(order, [&](const Point<2>& p) {
    Cell lhs = lhs_fn(p[0], p[1]);
    Cell rhs = rhs_fn(p[0], p[1]);
    if (sides_disagree(lhs, rhs, strict)) {
      result.holds = false;
      result.witness = Witness{2, {p[0], p[1], 0}, lhs, rhs};
      return false;
    }
    return true;
  });
  return result;
}

template <typename LhsFn, typename RhsFn>
CheckResult check_on_triples(int order, bool strict, LhsFn&& lhs_fn,
                             RhsFn&& rhs_fn) {
  CheckResult result;
  for_each_point_while<3>(order, [&](const Point<3>& p) {
    Cell lhs = lhs_fn(p[0], p[1], p[2]);
    Cell rhs = rhs_fn(p[0], p[1], p[2]);
    if (sides_disagree(lhs, rhs, strict)) {
      result.holds = false;
      result.witness = Witness{3, p, lhs, rhs};
      return false;
    }
    return true;
  });
  return result;
}

inline void require_same_order(const PartialMagma& m, const PartialMap& a) {
  require(m.order() == a.order(), "predicate: table and map orders differ");
}

inline CheckResult check_endo_family(const PartialMagma& m,
                                     const PartialMap& a, bool strict) {
  require_same_order(m, a);
  return check_on_pairs(
      m.order(), strict,
      [&](Elem x, Elem y) { return endo_lhs(m, a, x, y); },
      [&](Elem x, Elem y) { return endo_rhs(m, a, x, y); });
}

inline CheckResult check_hom_family(const PartialMagma& m, const PartialMap& a,
                                    bool strict) {
  require_same_order(m, a);
  return check_on_triples(
      m.order(), strict,
      [&](Elem x, Elem y, Elem z) { return hom_lhs(m, a, x, y, z); },
      [&](Elem x, Elem y, Elem z) { return hom_rhs(m, a, x, y, z); });
}

}  // namespace detail

inline CheckResult check_weak_partial_endomorphism(const PartialMagma& m,
                                                   const PartialMap& a) {
  return detail::check_endo_family(m, a, /*strict=*/false);
}

inline CheckResult check_partial_endomorphism(const PartialMagma& m,
                                              const PartialMap& a) {
  return detail::check_endo_family(m, a, /*strict=*/true);
}

// Total maps on total tables only; a non-total input fails without a
// pointwise witness.
inline CheckResult check_endomorphism(const PartialMagma& m,
                                      const PartialMap& a) {
  detail::require_same_order(m, a);
  if (!m.total() || !a.total()) {
    return CheckResult{false, std::nullopt};
  }
  return check_partial_endomorphism(m, a);
}

inline CheckResult check_partially_hom_associative(const PartialMagma& m,
                                                   const PartialMap& a) {
  return detail::check_hom_family(m, a, /*strict=*/false);
}

inline CheckResult check_hom_associative(const PartialMagma& m,
                                         const PartialMap& a) {
  return detail::check_hom_family(m, a, /*strict=*/true);
}

inline CheckResult check_partially_associative(const PartialMagma& m) {
  return check_partially_hom_associative(m, PartialMap::identity(m.order()));
}

inline CheckResult check_associative(const PartialMagma& m) {
  return check_hom_associative(m, PartialMap::identity(m.order()));
}

inline CheckResult check_predicate(PredicateKind k, const PartialMagma& m,
                                   const PartialMap& a) {
  switch (k) {
    case PredicateKind::WeakPartialEndo:
      return check_weak_partial_endomorphism(m, a);
    case PredicateKind::PartialEndo:
      return check_partial_endomorphism(m, a);
    case PredicateKind::Endo:
      return check_endomorphism(m, a);
    case PredicateKind::PartialHomAssoc:
      return check_partially_hom_associative(m, a);
    case PredicateKind::HomAssoc:
      return check_hom_associative(m, a);
    case PredicateKind::PartialAssoc:
    case PredicateKind::Assoc:
      detail::require(a == PartialMap::identity(m.order()),
                      "associativity predicates take no twisting map");
      return k == PredicateKind::PartialAssoc ? check_partially_associative(m)
                                              : check_associative(m);
  }
  throw std::invalid_argument("unknown predicate kind");
}

inline CheckResult check_predicate(PredicateKind k, const PartialMagma& m) {
  detail::require(!takes_alpha(k), "this predicate kind needs a twisting map");
  return check_predicate(k, m, PartialMap::identity(m.order()));
}

inline bool is_weak_partial_endomorphism(const PartialMagma& m,
                                         const PartialMap& a) {
  return check_weak_partial_endomorphism(m, a).holds;
}
inline bool is_partial_endomorphism(const PartialMagma& m,
                                    const PartialMap& a) {
  return check_partial_endomorphism(m, a).holds;
}
inline bool is_endomorphism(const PartialMagma& m, const PartialMap& a) {
  return check_endomorphism(m, a).holds;
}
inline bool is_partially_hom_associative(const PartialMagma& m,
                                         const PartialMap& a) {
  return check_partially_hom_associative(m, a).holds;
}
inline bool is_hom_associative(const PartialMagma& m, const PartialMap& a) {
  return check_hom_associative(m, a).holds;
}
inline bool is_partially_associative(const PartialMagma& m) {
  return check_partially_associative(m).holds;
}
inline bool is_associative(const PartialMagma& m) {
  return check_associative(m).holds;
}

namespace detail {

inline std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base,
                                                    unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) {
      return std::nullopt;
    }
    out *= base;
  }
  return out;
}

// Map with index k in the enumeration order: base (order+1) digits, the
// image of 1 most significant, digit d < order meaning element d+1 and
// digit == order meaning undefined. This is lexicographic in the cell
// order (defined ascending, undefined last), which for order 2 is exactly
// the compact code order.
inline PartialMap map_at_index(int order, std::uint64_t k) {
  std::vector<Cell> img(static_cast<std::size_t>(order));
  std::uint64_t base = static_cast<std::uint64_t>(order) + 1;
  for (int pos = order - 1; pos >= 0; --pos) {
    std::uint64_t d = k % base;
    k /= base;
    img[static_cast<std::size_t>(pos)] =
        d < static_cast<std::uint64_t>(order)
            ? Cell(static_cast<Elem>(d + 1))
            : undefined_cell;
  }
  return PartialMap(order, std::move(img));
}

}  // namespace detail

// All (order+1)^order partial self-maps, in the code order described above.
// Guarded so that a careless order cannot allocate without bound.
inline std::vector<PartialMap> all_partial_maps(
    int order, std::uint64_t max_count = std::uint64_t{1} << 20) {
  detail::require(order >= 1, "map order out of range");
  auto count =
      detail::checked_pow_u64(static_cast<std::uint64_t>(order) + 1,
                              static_cast<unsigned>(order));
  detail::require(count.has_value() && *count <= max_count,
                  "all_partial_maps: map count exceeds budget");
  std::vector<PartialMap> maps;
  maps.reserve(static_cast<std::size_t>(*count));
  for (std::uint64_t k = 0; k < *count; ++k) {
    maps.push_back(detail::map_at_index(order, k));
  }
  return maps;
}

// Maps a (in enumeration order) with check_predicate(kind, m, a) true.
inline std::vector<PartialMap> alpha_set(
    const PartialMagma& m, PredicateKind kind,
    std::uint64_t max_count = std::uint64_t{1} << 20) {
  detail::require(takes_alpha(kind),
                  "alpha_set: predicate kind takes no twisting map");
  std::vector<PartialMap> out;
  for (PartialMap& a : all_partial_maps(m.order(), max_count)) {
    if (check_predicate(kind, m, a).holds) {
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace hommag

#endif  // HOMMAG_PREDICATES_HPP_
