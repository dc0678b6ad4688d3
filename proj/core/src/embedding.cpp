#include <bipart/embedding.hpp>

#include <bipart/errors.hpp>

#include <string>
#include <vector>

namespace bipart {

Partition embeddingPartition(const OrderedSet& superset, const OrderedSet& subset) {
  for (Element a : subset) {
    if (!superset.contains(a)) {
      throw domainError("NotASubset", "element " + std::to_string(a) +
                                          " of the subset is missing from the superset");
    }
  }
  std::vector<std::vector<Element>> blocks(1);
  for (Element b : superset) {
    if (subset.contains(b)) {
      blocks.back().push_back(b);
    } else {
      blocks.emplace_back();
    }
  }
  std::vector<OrderedSet> out;
  out.reserve(blocks.size());
  for (auto& b : blocks) out.emplace_back(std::move(b));
  return Partition(std::move(out));
}

}  // namespace bipart
