#ifndef HOMMAG_ENUMERATE_HPP_
#define HOMMAG_ENUMERATE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "hommag/iso.hpp"
#include "hommag/partial_magma.hpp"
#include "hommag/predicates.hpp"

namespace hommag {

// Streams every partial (or total) table of a given order in code order:
// lexicographic on row-major cells, defined values ascending, undefined
// last. Tables are produced by index, so ranges can be split for parallel
// work without changing anything observable.
class TableEnumerator {
 public:
  static constexpr std::uint64_t default_budget = std::uint64_t{1} << 24;

  explicit TableEnumerator(int order, bool totals_only = false,
                           std::uint64_t budget = default_budget)
      : order_(order), totals_only_(totals_only) {
    detail::require(order >= 1, "enumeration order out of range");
    auto count = detail::checked_pow_u64(
        static_cast<std::uint64_t>(order) + (totals_only ? 0 : 1),
        static_cast<unsigned>(order) * static_cast<unsigned>(order));
    detail::require(count.has_value() && *count <= budget,
                    "enumeration: table count exceeds budget");
    size_ = *count;
  }

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] bool totals_only() const noexcept { return totals_only_; }
  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }

  [[nodiscard]] PartialMagma at(std::uint64_t index) const {
    detail::require(index < size_, "enumeration index out of range");
    int n = order_;
    std::size_t ncells = static_cast<std::size_t>(n) * n;
    std::uint64_t base = static_cast<std::uint64_t>(n) + (totals_only_ ? 0 : 1);
    std::vector<Cell> cells(ncells);
    for (std::size_t pos = ncells; pos-- > 0;) {
      std::uint64_t d = index % base;
      index /= base;
      cells[pos] = d < static_cast<std::uint64_t>(n)
                       ? Cell(static_cast<Elem>(d + 1))
                       : undefined_cell;
    }
    return PartialMagma(n, std::move(cells));
  }

  class iterator {
   public:
    using value_type = PartialMagma;
    using difference_type = std::int64_t;

    iterator(const TableEnumerator* owner, std::uint64_t index)
        : owner_(owner), index_(index) {}

    PartialMagma operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    const TableEnumerator* owner_;
    std::uint64_t index_;
  };

  [[nodiscard]] iterator begin() const { return iterator(this, 0); }
  [[nodiscard]] iterator end() const { return iterator(this, size_); }

 private:
  int order_;
  bool totals_only_;
  std::uint64_t size_;
};

// The four twisting-map tables reported per class, in reporting order.
inline constexpr std::array<PredicateKind, 4> class_alpha_kinds = {
    PredicateKind::WeakPartialEndo,
    PredicateKind::PartialEndo,
    PredicateKind::PartialHomAssoc,
    PredicateKind::HomAssoc,
};

struct MagmaClass {
  PartialMagma representative;        // lexicographically least member
  std::vector<std::string> members;   // all member codes, ascending
  std::array<std::vector<std::string>, 4> alpha_sets;  // by class_alpha_kinds
  bool partially_associative = false;
  bool associative = false;
};

struct ClassificationReport {
  int order = 0;
  bool totals_only = false;
  std::vector<MagmaClass> classes;  // ascending by representative code

  [[nodiscard]] const MagmaClass* find_by_member(std::string_view code) const {
    for (const MagmaClass& c : classes) {
      for (const std::string& member : c.members) {
        if (member == code) {
          return &c;
        }
      }
    }
    return nullptr;
  }
};

namespace detail {

// Splits [0, size) into at most jobs contiguous chunks.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(
    std::uint64_t size, int jobs) {
  if (jobs < 1) {
    jobs = 1;
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::uint64_t chunk = size / static_cast<std::uint64_t>(jobs);
  std::uint64_t rem = size % static_cast<std::uint64_t>(jobs);
  std::uint64_t lo = 0;
  for (int j = 0; j < jobs && lo < size; ++j) {
    std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(j) < rem);
    out.emplace_back(lo, hi);
    lo = hi;
  }
  return out;
}

// Runs work(lo, hi, slot) over the chunks, on worker threads when jobs > 1.
template <typename Work>
void run_chunked(std::uint64_t size, int jobs, Work&& work) {
  auto chunks = split_range(size, jobs);
  if (chunks.size() <= 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      work(chunks[i].first, chunks[i].second, i);
    }
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    threads.emplace_back(
        [&work, &chunks, i] { work(chunks[i].first, chunks[i].second, i); });
  }
  for (std::thread& t : threads) {
    t.join();
  }
}

}  // namespace detail

// Number of distinct classes under relabelling, by grouping canonical
// forms. Output is independent of jobs; jobs only splits the scan.
inline std::uint64_t count_classes(
    int order, bool totals_only = false, int jobs = 1,
    std::uint64_t budget = TableEnumerator::default_budget) {
  TableEnumerator tables(order, totals_only, budget);
  std::vector<std::set<std::string>> partial_sets(
      detail::split_range(tables.size(), jobs).size());
  detail::run_chunked(tables.size(), jobs,
                      [&](std::uint64_t lo, std::uint64_t hi, std::size_t slot) {
                        auto& seen = partial_sets[slot];
                        for (std::uint64_t i = lo; i < hi; ++i) {
                          seen.insert(encode(canonical_form(tables.at(i))));
                        }
                      });
  std::set<std::string> merged;
  for (auto& s : partial_sets) {
    merged.merge(s);
  }
  return merged.size();
}

// Full classification: members grouped by canonical form, plus the four
// twisting-map tables and the two associativity flags per class, computed
// on the canonical representative. Deterministic for any jobs value.
inline ClassificationReport classify(
    int order, bool totals_only = false, int jobs = 1,
    std::uint64_t budget = TableEnumerator::default_budget) {
  TableEnumerator tables(order, totals_only, budget);
  using Buckets = std::map<std::string, std::vector<std::string>>;
  std::vector<Buckets> partial_buckets(
      detail::split_range(tables.size(), jobs).size());
  detail::run_chunked(
      tables.size(), jobs,
      [&](std::uint64_t lo, std::uint64_t hi, std::size_t slot) {
        Buckets& buckets = partial_buckets[slot];
        for (std::uint64_t i = lo; i < hi; ++i) {
          PartialMagma m = tables.at(i);
          buckets[encode(canonical_form(m))].push_back(encode(m));
        }
      });

  // Chunks cover ascending index ranges and enumeration order is code
  // order, so concatenating per-chunk member lists keeps them sorted.
  Buckets merged;
  for (Buckets& buckets : partial_buckets) {
    for (auto& [canon, members] : buckets) {
      auto& dst = merged[canon];
      dst.insert(dst.end(), members.begin(), members.end());
    }
  }

  ClassificationReport report;
  report.order = order;
  report.totals_only = totals_only;
  report.classes.reserve(merged.size());
  for (auto& [canon, members] : merged) {
    MagmaClass c{decode_table(canon), std::move(members), {}, false, false};
    report.classes.push_back(std::move(c));
  }

  const std::vector<PartialMap> maps = all_partial_maps(order);
  detail::run_chunked(
      report.classes.size(), jobs,
      [&](std::uint64_t lo, std::uint64_t hi, std::size_t) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          MagmaClass& c = report.classes[i];
          for (std::size_t k = 0; k < class_alpha_kinds.size(); ++k) {
            for (const PartialMap& a : maps) {
              if (check_predicate(class_alpha_kinds[k], c.representative, a)
                      .holds) {
                c.alpha_sets[k].push_back(map_code(a));
              }
            }
          }
          c.partially_associative =
              is_partially_associative(c.representative);
          c.associative = is_associative(c.representative);
        }
      });
  return report;
}

}  // namespace hommag

#endif  // HOMMAG_ENUMERATE_HPP_
