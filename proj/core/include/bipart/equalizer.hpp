#pragma once

#include <bipart/model.hpp>
#include <bipart/ordered_set.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bipart {

/// Default cap on the work performed by one equalizer search.
inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

struct SearchOptions {
  /// Upper bound on search work: the per-entry subset counts plus the number
  /// of partial grids visited (or full grids materialized). Exceeding it
  /// throws SearchBudgetExceeded.
  std::uint64_t budget = kDefaultSearchBudget;
};

/// q x p grid of kept-divider sets. Entry (i, j) lists which dividers of the
/// associated matrix entry survive a merge; an empty entry merges the whole
/// entry into a single biblock.
class EqualizerMatrix {
 public:
  EqualizerMatrix(std::size_t rows, std::size_t cols, std::vector<OrderedSet> entries);

  /// All entries empty, shaped like m.
  static EqualizerMatrix null(const BipartitionMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const OrderedSet& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const OrderedSet> entries() const noexcept { return entries_; }

  bool isNull() const noexcept;
  /// True when some entry is empty. Every entry of an equalizer has the
  /// same cardinality, so for equalizers this coincides with isNull().
  bool hasEmptyEntry() const noexcept;

  friend bool operator==(const EqualizerMatrix&, const EqualizerMatrix&) = default;
  friend auto operator<=>(const EqualizerMatrix&, const EqualizerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<OrderedSet> entries_;
};

enum class EqualizerKind { Row, Column, Joint };

/// Merges the biblocks of b between consecutive kept dividers. The result
/// has length #kept + 1. Throws a Domain error "DividerOutOfRange" if kept
/// is not a subset of {1, ..., length - 1}.
Bipartition applyMerge(const Bipartition& b, const OrderedSet& kept);

bool isRowEqualizer(const BipartitionMatrix& m, const EqualizerMatrix& e);
bool isColumnEqualizer(const BipartitionMatrix& m, const EqualizerMatrix& e);
/// Row and column equalizer at once.
bool isEqualizer(const BipartitionMatrix& m, const EqualizerMatrix& e);

/// All row equalizers, in canonical (ascending) order.
std::vector<EqualizerMatrix> rowEqualizers(const BipartitionMatrix& m, const SearchOptions& opts = {});
/// All column equalizers, in canonical (ascending) order.
std::vector<EqualizerMatrix> columnEqualizers(const BipartitionMatrix& m,
                                              const SearchOptions& opts = {});
/// All equalizers, in canonical (ascending) order. Never empty: the null
/// equalizer always qualifies.
std::vector<EqualizerMatrix> equalizers(const BipartitionMatrix& m, const SearchOptions& opts = {});

/// Streams every equalizer of m to visit, in the search's row-major order
/// (not canonical order).
void forEachEqualizer(const BipartitionMatrix& m, const SearchOptions& opts,
                      const std::function<void(const EqualizerMatrix&)>& visit);

/// Selection rule of the maximal equalizer: scanning entries in row-major
/// order, at the first entry where the two grids differ the larger set wins;
/// equal sizes are broken by the lexicographically smaller element sequence.
/// Returns true when candidate beats champion. Grids must share a shape.
bool outranks(const EqualizerMatrix& candidate, const EqualizerMatrix& champion);

/// Running-champion scan over candidates using outranks. Throws a Domain
/// error "NoCandidates" for an empty span.
const EqualizerMatrix& selectMaximal(std::span<const EqualizerMatrix> candidates);

EqualizerMatrix maximalEqualizer(const BipartitionMatrix& m, const SearchOptions& opts = {});

/// Entrywise applyMerge. Throws a Domain error "NotAnEqualizer" when e is not
/// an equalizer of the requested kind (or does not match m's shape).
BipartitionMatrix equalization(const BipartitionMatrix& m, const EqualizerMatrix& e,
                               EqualizerKind kind = EqualizerKind::Joint);

/// True when the maximal equalizer of m is null.
bool isIndecomposable(const BipartitionMatrix& m, const SearchOptions& opts = {});

}  // namespace bipart
