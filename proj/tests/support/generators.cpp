#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bipart::test {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Splits a shuffled pool of 1..maxElements into `count` disjoint sets whose
/// sizes sum to `total`.
std::vector<OrderedSet> disjointSets(Rng& rng, std::size_t count, std::size_t total,
                                     std::size_t maxElements) {
  std::vector<Element> pool(maxElements);
  std::iota(pool.begin(), pool.end(), Element{1});
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::vector<Element>> sets(count);
  for (std::size_t k = 0; k < total; ++k) sets[uniform(rng, 0, count - 1)].push_back(pool[k]);
  std::vector<OrderedSet> out;
  for (auto& s : sets) out.push_back(OrderedSet::fromUnsorted(std::move(s)));
  return out;
}

Partition scatter(Rng& rng, const OrderedSet& set, std::size_t length) {
  std::vector<std::vector<Element>> blocks(length);
  for (Element x : set) blocks[uniform(rng, 0, length - 1)].push_back(x);
  std::vector<OrderedSet> out;
  for (auto& b : blocks) out.emplace_back(std::move(b));
  return Partition(std::move(out));
}

}  // namespace

BipartitionMatrix randomMatrix(Rng& rng, const MatrixLimits& limits) {
  const std::size_t q = uniform(rng, 1, limits.maxRows);
  const std::size_t p = uniform(rng, 1, limits.maxCols);
  const std::size_t total = uniform(rng, 0, limits.maxElements);
  const std::size_t inputCount = uniform(rng, 0, total);
  const auto inputs = disjointSets(rng, p, inputCount, limits.maxElements);
  const auto outputs = disjointSets(rng, q, total - inputCount, limits.maxElements);
  std::vector<std::vector<Bipartition>> grid(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const std::size_t r = uniform(rng, 1, limits.maxLength);
      grid[i].emplace_back(scatter(rng, inputs[j], r), scatter(rng, outputs[i], r));
    }
  }
  return BipartitionMatrix(std::move(grid));
}

Bipartition randomBipartition(Rng& rng, const BipartitionLimits& limits) {
  const std::size_t r = uniform(rng, 1, limits.maxLength);
  const std::size_t total = uniform(rng, 0, limits.maxElements);
  const std::size_t inputCount = uniform(rng, 0, total);
  const auto in = disjointSets(rng, 1, inputCount, limits.maxElements);
  const auto out = disjointSets(rng, 1, total - inputCount, limits.maxElements);
  return Bipartition(scatter(rng, in[0], r), scatter(rng, out[0], r));
}

OrderedSet randomSubset(Rng& rng, const OrderedSet& from) {
  std::vector<Element> out;
  for (Element x : from) {
    if (rng() & 1U) out.push_back(x);
  }
  return OrderedSet(std::move(out));
}

}  // namespace bipart::test
