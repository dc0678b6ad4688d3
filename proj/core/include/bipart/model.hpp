#pragma once

#include <bipart/ordered_set.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bipart {

/// Ordered tuple of pairwise-disjoint, possibly empty blocks. A partition of
/// length r has r - 1 dividers.
class Partition {
 public:
  explicit Partition(std::vector<OrderedSet> blocks);

  /// r empty blocks.
  static Partition null(std::size_t length);

  std::size_t length() const noexcept { return blocks_.size(); }
  std::size_t dividers() const noexcept { return blocks_.size() - 1; }
  const OrderedSet& block(std::size_t k) const { return blocks_[k]; }
  std::span<const OrderedSet> blocks() const noexcept { return blocks_; }
  /// Union of all blocks.
  const OrderedSet& underlying() const noexcept { return underlying_; }
  bool isNull() const noexcept { return underlying_.empty(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.blocks_ <=> b.blocks_; }

 private:
  std::vector<OrderedSet> blocks_;
  OrderedSet underlying_;
};

/// Input partition (denominator) paired with an output partition (numerator)
/// of the same length.
class Bipartition {
 public:
  Bipartition(Partition inputs, Partition outputs);

  static Bipartition null(std::size_t length);
  /// Length-1 bipartition out/in.
  static Bipartition elementary(OrderedSet inputs, OrderedSet outputs);

  const Partition& inputs() const noexcept { return inputs_; }
  const Partition& outputs() const noexcept { return outputs_; }
  std::size_t length() const noexcept { return inputs_.length(); }

  const OrderedSet& inputSet() const noexcept { return inputs_.underlying(); }
  const OrderedSet& outputSet() const noexcept { return outputs_.underlying(); }

  bool isElementary() const noexcept { return length() == 1; }
  bool isNull() const noexcept { return inputs_.isNull() && outputs_.isNull(); }
  bool isEmptyBiblock(std::size_t k) const {
    return inputs_.block(k).empty() && outputs_.block(k).empty();
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

 private:
  Partition inputs_;
  Partition outputs_;
};

/// q x p grid of bipartitions such that, within each row, input sets are
/// pairwise disjoint and output sets are equal, and within each column,
/// input sets are equal and output sets are pairwise disjoint. Entry lengths
/// may differ.
class BipartitionMatrix {
 public:
  /// Validates shape and all four row/column constraints; throws
  /// ValidationError naming the first violation found.
  explicit BipartitionMatrix(std::vector<std::vector<Bipartition>> grid);
  explicit BipartitionMatrix(Bipartition single);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Bipartition& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Row-major.
  std::span<const Bipartition> entries() const noexcept { return entries_; }

  BipartitionMatrix row(std::size_t i) const;
  BipartitionMatrix column(std::size_t j) const;
  std::vector<std::vector<Bipartition>> grid() const;

  bool isNull() const noexcept;
  bool isElementary() const noexcept;
  std::size_t totalLength() const noexcept;

  friend bool operator==(const BipartitionMatrix&, const BipartitionMatrix&) = default;

 private:
  BipartitionMatrix(std::size_t rows, std::size_t cols, std::vector<Bipartition> entries);
  void validate() const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Bipartition> entries_;
};

std::size_t hashValue(const BipartitionMatrix& m) noexcept;

/// Replaces each null entry by 0/0 and drops every empty biblock from the
/// remaining entries.
BipartitionMatrix piReduce(const BipartitionMatrix& m);

/// Union of the entry input sets of a single-row matrix.
OrderedSet inputElements(const BipartitionMatrix& row);
/// Union of the entry output sets of a single-column matrix.
OrderedSet outputElements(const BipartitionMatrix& column);

struct DimensionReport {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  std::uint64_t ent = 0;
  std::uint64_t total = 0;

  static DimensionReport of(std::uint64_t row, std::uint64_t col, std::uint64_t ent) {
    return {row, col, ent, row + col + ent};
  }

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

}  // namespace bipart

template <>
struct std::hash<bipart::BipartitionMatrix> {
  std::size_t operator()(const bipart::BipartitionMatrix& m) const noexcept {
    return bipart::hashValue(m);
  }
};
