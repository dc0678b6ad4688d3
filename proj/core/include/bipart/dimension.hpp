#pragma once

#include <bipart/equalizer.hpp>
#include <bipart/factorization.hpp>
#include <bipart/model.hpp>

#include <cstdint>
#include <memory>
#include <vector>

namespace bipart {

struct DimensionOptions {
  SearchOptions search;
  /// Record every terminating matrix and its contribution. Disables result
  /// memoization so each terminal is reported once per occurrence.
  bool trace = false;
};

enum class Component { Row, Column, Entry };

const char* toString(Component c) noexcept;

/// A matrix at which a dimension recursion stopped, and what it added.
struct TerminalContribution {
  Component component;
  BipartitionMatrix matrix;
  std::uint64_t value;
};

/// Recursive row/column/entry dimension computation with a shared
/// factorization cache. One engine may be reused across many matrices.
class DimensionEngine {
 public:
  explicit DimensionEngine(DimensionOptions opts = {});
  ~DimensionEngine();
  DimensionEngine(DimensionEngine&&) noexcept;
  DimensionEngine& operator=(DimensionEngine&&) noexcept;

  std::uint64_t rowDimension(const BipartitionMatrix& m);
  std::uint64_t colDimension(const BipartitionMatrix& m);
  std::uint64_t entryDimension(const BipartitionMatrix& m);
  /// All three components; all zero for a null matrix.
  DimensionReport dimension(const BipartitionMatrix& m);
  /// Componentwise sum over the factors of a formal product.
  DimensionReport dimension(const FormalProduct& p);

  /// Terminal contributions recorded so far (empty unless tracing).
  const std::vector<TerminalContribution>& trace() const noexcept;
  void clearTrace() noexcept;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::uint64_t rowDimension(const BipartitionMatrix& m, const SearchOptions& opts = {});
std::uint64_t colDimension(const BipartitionMatrix& m, const SearchOptions& opts = {});
std::uint64_t entryDimension(const BipartitionMatrix& m, const SearchOptions& opts = {});
DimensionReport dimension(const BipartitionMatrix& m, const SearchOptions& opts = {});
DimensionReport dimension(const FormalProduct& p, const SearchOptions& opts = {});

}  // namespace bipart
