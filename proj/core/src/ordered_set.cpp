#include <bipart/ordered_set.hpp>

#include <bipart/errors.hpp>

#include <algorithm>
#include <iterator>
#include <string>

namespace bipart {

namespace {

void checkStrictlyIncreasing(const std::vector<Element>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == 0) {
      throw domainError("InvalidOrderedSet", "ordered set elements must be positive integers");
    }
    if (i > 0 && elements[i - 1] >= elements[i]) {
      throw domainError("InvalidOrderedSet",
                        "ordered set elements must be strictly increasing (at index " +
                            std::to_string(i) + ")");
    }
  }
}

}  // namespace

OrderedSet::OrderedSet(std::initializer_list<Element> elements)
    : OrderedSet(std::vector<Element>(elements)) {}

OrderedSet::OrderedSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  checkStrictlyIncreasing(elements_);
}

OrderedSet OrderedSet::interval(Element first, Element last) {
  std::vector<Element> out;
  if (last < first) return OrderedSet();
  for (Element x = first;; ++x) {
    out.push_back(x);
    if (x == last) break;
  }
  return OrderedSet(std::move(out));
}

OrderedSet OrderedSet::fromUnsorted(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return OrderedSet(std::move(elements));
}

bool OrderedSet::contains(Element x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

OrderedSet setUnion(const OrderedSet& a, const OrderedSet& b) {
  std::vector<Element> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return OrderedSet(std::move(out));
}

OrderedSet setIntersection(const OrderedSet& a, const OrderedSet& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return OrderedSet(std::move(out));
}

OrderedSet setDifference(const OrderedSet& a, const OrderedSet& b) {
  std::vector<Element> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return OrderedSet(std::move(out));
}

OrderedSet unionOf(std::span<const OrderedSet> sets) {
  std::vector<Element> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  return OrderedSet::fromUnsorted(std::move(all));
}

bool disjoint(const OrderedSet& a, const OrderedSet& b) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

bool isSubsetOf(const OrderedSet& sub, const OrderedSet& super) noexcept {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace bipart
