#include <bipart/dimension.hpp>

#include <unordered_map>
#include <utility>

namespace bipart {

const char* toString(Component c) noexcept {
  switch (c) {
    case Component::Row: return "row";
    case Component::Column: return "col";
    case Component::Entry: return "ent";
  }
  return "?";
}

// Row and column recursions share one shape; `fromSplit` marks a line that
// was cut out of a larger matrix by the multi-row (multi-column) split.
// Such lines are evaluated as they stand, whereas a line that is itself the
// matrix under evaluation (an input, a factor, or a wrapped entry) is first
// reduced by piReduce.
struct DimensionEngine::State {
  DimensionOptions opts;
  std::unordered_map<BipartitionMatrix, FormalProduct> factorizations;
  std::unordered_map<BipartitionMatrix, std::uint64_t> rowMemo[2];
  std::unordered_map<BipartitionMatrix, std::uint64_t> colMemo[2];
  std::unordered_map<BipartitionMatrix, std::uint64_t> entMemo;
  std::vector<TerminalContribution> trace;

  const FormalProduct& factorization(const BipartitionMatrix& m) {
    auto it = factorizations.find(m);
    if (it == factorizations.end()) {
      it = factorizations.emplace(m, indecomposableFactorization(m, opts.search)).first;
    }
    return it->second;
  }

  std::uint64_t terminal(Component c, const BipartitionMatrix& m, std::uint64_t value) {
    if (opts.trace) trace.push_back({c, m, value});
    return value;
  }

  template <typename Compute>
  std::uint64_t memoized(std::unordered_map<BipartitionMatrix, std::uint64_t>& memo,
                         const BipartitionMatrix& m, Compute compute) {
    if (opts.trace) return compute();
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const std::uint64_t value = compute();
    memo.emplace(m, value);
    return value;
  }

  std::uint64_t row(const BipartitionMatrix& m, bool fromSplit) {
    return memoized(rowMemo[fromSplit ? 1 : 0], m, [&] { return computeRow(m, fromSplit); });
  }

  std::uint64_t col(const BipartitionMatrix& m, bool fromSplit) {
    return memoized(colMemo[fromSplit ? 1 : 0], m, [&] { return computeCol(m, fromSplit); });
  }

  std::uint64_t ent(const BipartitionMatrix& m) {
    return memoized(entMemo, m, [&] { return computeEnt(m); });
  }

  std::uint64_t computeRow(const BipartitionMatrix& m, bool fromSplit) {
    const FormalProduct& factors = factorization(m);
    std::uint64_t sum = 0;
    if (factors.size() > 1) {
      for (const auto& f : factors) sum += row(f, false);
      return sum;
    }
    if (m.rows() > 1) {
      for (std::size_t i = 0; i < m.rows(); ++i) sum += row(m.row(i), true);
      return sum;
    }
    const BipartitionMatrix c = fromSplit ? m : piReduce(m);
    if (c.cols() == 1 && c.isElementary() && !c.at(0, 0).outputSet().empty()) {
      return terminal(Component::Row, c, 0);
    }
    if (c.isElementary() && c.at(0, 0).outputSet().empty()) {
      const std::size_t n = inputElements(c).size();
      return terminal(Component::Row, c, n == 0 ? 0 : n - 1);
    }
    for (const auto& b : c.entries()) sum += row(BipartitionMatrix(b), false);
    return sum;
  }

  std::uint64_t computeCol(const BipartitionMatrix& m, bool fromSplit) {
    const FormalProduct& factors = factorization(m);
    std::uint64_t sum = 0;
    if (factors.size() > 1) {
      for (const auto& f : factors) sum += col(f, false);
      return sum;
    }
    if (m.cols() > 1) {
      for (std::size_t j = 0; j < m.cols(); ++j) sum += col(m.column(j), true);
      return sum;
    }
    const BipartitionMatrix c = fromSplit ? m : piReduce(m);
    if (c.rows() == 1 && c.isElementary() && !c.at(0, 0).inputSet().empty()) {
      return terminal(Component::Column, c, 0);
    }
    if (c.isElementary() && c.at(0, 0).inputSet().empty()) {
      const std::size_t n = outputElements(c).size();
      return terminal(Component::Column, c, n == 0 ? 0 : n - 1);
    }
    for (const auto& b : c.entries()) sum += col(BipartitionMatrix(b), false);
    return sum;
  }

  std::uint64_t computeEnt(const BipartitionMatrix& m) {
    const FormalProduct& factors = factorization(m);
    std::uint64_t sum = 0;
    if (factors.size() > 1) {
      for (const auto& f : factors) sum += ent(f);
      return sum;
    }
    for (const auto& b : m.entries()) {
      if (!b.isElementary()) {
        for (const auto& f : factorElementary(b)) sum += ent(f);
        continue;
      }
      const std::size_t a = b.inputSet().size();
      const std::size_t o = b.outputSet().size();
      sum += terminal(Component::Entry, BipartitionMatrix(b), a > 0 && o > 0 ? a + o - 1 : 0);
    }
    return sum;
  }
};

DimensionEngine::DimensionEngine(DimensionOptions opts) : state_(std::make_unique<State>()) {
  state_->opts = opts;
}

DimensionEngine::~DimensionEngine() = default;
DimensionEngine::DimensionEngine(DimensionEngine&&) noexcept = default;
DimensionEngine& DimensionEngine::operator=(DimensionEngine&&) noexcept = default;

std::uint64_t DimensionEngine::rowDimension(const BipartitionMatrix& m) {
  return m.isNull() ? 0 : state_->row(m, false);
}

std::uint64_t DimensionEngine::colDimension(const BipartitionMatrix& m) {
  return m.isNull() ? 0 : state_->col(m, false);
}

std::uint64_t DimensionEngine::entryDimension(const BipartitionMatrix& m) {
  return m.isNull() ? 0 : state_->ent(m);
}

DimensionReport DimensionEngine::dimension(const BipartitionMatrix& m) {
  const std::uint64_t row = rowDimension(m);
  const std::uint64_t col = colDimension(m);
  const std::uint64_t ent = entryDimension(m);
  return DimensionReport::of(row, col, ent);
}

DimensionReport DimensionEngine::dimension(const FormalProduct& p) {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  std::uint64_t ent = 0;
  for (const auto& f : p) {
    const DimensionReport r = dimension(f);
    row += r.row;
    col += r.col;
    ent += r.ent;
  }
  return DimensionReport::of(row, col, ent);
}

const std::vector<TerminalContribution>& DimensionEngine::trace() const noexcept {
  return state_->trace;
}

void DimensionEngine::clearTrace() noexcept { state_->trace.clear(); }

std::uint64_t rowDimension(const BipartitionMatrix& m, const SearchOptions& opts) {
  return DimensionEngine({opts, false}).rowDimension(m);
}

std::uint64_t colDimension(const BipartitionMatrix& m, const SearchOptions& opts) {
  return DimensionEngine({opts, false}).colDimension(m);
}

std::uint64_t entryDimension(const BipartitionMatrix& m, const SearchOptions& opts) {
  return DimensionEngine({opts, false}).entryDimension(m);
}

DimensionReport dimension(const BipartitionMatrix& m, const SearchOptions& opts) {
  return DimensionEngine({opts, false}).dimension(m);
}

DimensionReport dimension(const FormalProduct& p, const SearchOptions& opts) {
  return DimensionEngine({opts, false}).dimension(p);
}

}  // namespace bipart
