#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bipart {

using Element = std::uint32_t;

/// Empty, or a strictly increasing sequence of positive integers.
///
/// Construction rejects unsorted, duplicated, or zero elements instead of
/// normalizing them, so every value has exactly one representation.
class OrderedSet {
 public:
  using const_iterator = std::vector<Element>::const_iterator;

  OrderedSet() = default;
  OrderedSet(std::initializer_list<Element> elements);
  explicit OrderedSet(std::vector<Element> elements);

  /// {first, first + 1, ..., last}; empty when last < first.
  static OrderedSet interval(Element first, Element last);

  /// Sorts and deduplicates; zero is still rejected.
  static OrderedSet fromUnsorted(std::vector<Element> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Element x) const noexcept;

  Element front() const { return elements_.front(); }
  Element back() const { return elements_.back(); }
  Element operator[](std::size_t i) const { return elements_[i]; }

  std::span<const Element> elements() const noexcept { return elements_; }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }

  friend bool operator==(const OrderedSet&, const OrderedSet&) = default;
  friend auto operator<=>(const OrderedSet&, const OrderedSet&) = default;

 private:
  std::vector<Element> elements_;
};

OrderedSet setUnion(const OrderedSet& a, const OrderedSet& b);
OrderedSet setIntersection(const OrderedSet& a, const OrderedSet& b);
OrderedSet setDifference(const OrderedSet& a, const OrderedSet& b);
OrderedSet unionOf(std::span<const OrderedSet> sets);
bool disjoint(const OrderedSet& a, const OrderedSet& b) noexcept;
bool isSubsetOf(const OrderedSet& sub, const OrderedSet& super) noexcept;

}  // namespace bipart
