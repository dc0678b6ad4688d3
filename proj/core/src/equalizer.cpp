#include <bipart/equalizer.hpp>

#include <bipart/errors.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace bipart {

namespace {

std::vector<OrderedSet> mergeBlocks(const Partition& part, const OrderedSet& kept) {
  std::vector<OrderedSet> out;
  out.reserve(kept.size() + 1);
  std::size_t start = 0;
  auto close = [&](std::size_t stop) {
    out.push_back(unionOf(part.blocks().subspan(start, stop - start)));
    start = stop;
  };
  for (Element d : kept) close(d);
  close(part.length());
  return out;
}

bool keptInRange(const OrderedSet& kept, std::size_t length) {
  return kept.empty() || kept.back() < length;
}

bool sameShape(const BipartitionMatrix& m, const EqualizerMatrix& e) {
  if (m.rows() != e.rows() || m.cols() != e.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!keptInRange(e.at(i, j), m.at(i, j).length())) return false;
    }
  }
  return true;
}

/// Tracks search work against the configured budget.
class Meter {
 public:
  explicit Meter(std::uint64_t budget) : budget_(budget) {}

  void charge(std::uint64_t amount) {
    if (amount > budget_ - used_) {
      throw SearchBudgetExceeded(budget_, "equalizer search exceeded its budget of " +
                                              std::to_string(budget_) + " steps");
    }
    used_ += amount;
  }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

/// One candidate kept-divider set for an entry, with interned identifiers
/// of the merged numerator and denominator.
struct Choice {
  OrderedSet kept;
  int num = 0;
  int den = 0;
};

/// Interns merged partitions so keys can be compared across entries.
class Interner {
 public:
  int id(std::vector<OrderedSet> blocks) {
    auto [it, inserted] = ids_.try_emplace(std::move(blocks), static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::vector<OrderedSet>, int> ids_;
};

struct EntryChoices {
  std::vector<Choice> all;
  std::map<int, std::vector<std::size_t>> byNum;
  std::map<int, std::vector<std::size_t>> byDen;
  std::map<std::pair<int, int>, std::vector<std::size_t>> byBoth;
};

EntryChoices enumerateEntry(const Bipartition& b, Interner& interner, Meter& meter) {
  const std::size_t dividers = b.length() - 1;
  if (dividers >= 63) meter.charge(std::numeric_limits<std::uint64_t>::max());
  const std::uint64_t count = std::uint64_t{1} << dividers;
  meter.charge(count);
  EntryChoices out;
  out.all.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Element> kept;
    for (std::size_t d = 0; d < dividers; ++d) {
      if (mask & (std::uint64_t{1} << d)) kept.push_back(static_cast<Element>(d + 1));
    }
    Choice c;
    c.kept = OrderedSet(std::move(kept));
    c.num = interner.id(mergeBlocks(b.outputs(), c.kept));
    c.den = interner.id(mergeBlocks(b.inputs(), c.kept));
    const std::size_t k = out.all.size();
    out.byNum[c.num].push_back(k);
    out.byDen[c.den].push_back(k);
    out.byBoth[{c.num, c.den}].push_back(k);
    out.all.push_back(std::move(c));
  }
  return out;
}

/// Backtracking search over a sub-grid of entries. Row constraints are
/// enforced when rowKeyed is set, column constraints when colKeyed is set.
class GridSearch {
 public:
  GridSearch(const std::vector<EntryChoices>& choices, std::vector<std::size_t> cells,
             std::size_t cols, bool rowKeyed, bool colKeyed, Meter& meter)
      : choices_(choices),
        cells_(std::move(cells)),
        cols_(cols),
        rowKeyed_(rowKeyed),
        colKeyed_(colKeyed),
        meter_(meter),
        picked_(cells_.size()) {}

  void run(const std::function<void(const std::vector<const Choice*>&)>& emit) {
    emit_ = &emit;
    rowKey_.clear();
    colKey_.clear();
    recurse(0);
  }

 private:
  void recurse(std::size_t depth) {
    if (depth == cells_.size()) {
      (*emit_)(picked_);
      return;
    }
    const std::size_t cell = cells_[depth];
    const std::size_t i = cell / cols_;
    const std::size_t j = cell % cols_;
    const EntryChoices& ec = choices_[cell];
    auto rk = rowKeyed_ ? rowKey_.find(i) : rowKey_.end();
    auto ck = colKeyed_ ? colKey_.find(j) : colKey_.end();
    const bool haveRow = rk != rowKey_.end();
    const bool haveCol = ck != colKey_.end();

    auto visit = [&](std::size_t k) {
      meter_.charge(1);
      const Choice& c = ec.all[k];
      const bool setRow = rowKeyed_ && !haveRow;
      const bool setCol = colKeyed_ && !haveCol;
      if (setRow) rowKey_[i] = c.num;
      if (setCol) colKey_[j] = c.den;
      picked_[depth] = &c;
      recurse(depth + 1);
      if (setRow) rowKey_.erase(i);
      if (setCol) colKey_.erase(j);
    };
    auto visitAll = [&](const std::vector<std::size_t>* list) {
      if (list == nullptr) return;
      for (std::size_t k : *list) visit(k);
    };
    auto lookup = [](const auto& map, const auto& key) -> const std::vector<std::size_t>* {
      auto it = map.find(key);
      return it == map.end() ? nullptr : &it->second;
    };

    if (haveRow && haveCol) {
      visitAll(lookup(ec.byBoth, std::pair{rk->second, ck->second}));
    } else if (haveRow) {
      visitAll(lookup(ec.byNum, rk->second));
    } else if (haveCol) {
      visitAll(lookup(ec.byDen, ck->second));
    } else {
      for (std::size_t k = 0; k < ec.all.size(); ++k) visit(k);
    }
  }

  const std::vector<EntryChoices>& choices_;
  std::vector<std::size_t> cells_;
  std::size_t cols_;
  bool rowKeyed_;
  bool colKeyed_;
  Meter& meter_;
  std::vector<const Choice*> picked_;
  std::map<std::size_t, int> rowKey_;
  std::map<std::size_t, int> colKey_;
  const std::function<void(const std::vector<const Choice*>&)>* emit_ = nullptr;
};

std::vector<EntryChoices> enumerateAll(const BipartitionMatrix& m, Meter& meter) {
  Interner interner;
  std::vector<EntryChoices> out;
  out.reserve(m.entries().size());
  for (const auto& b : m.entries()) out.push_back(enumerateEntry(b, interner, meter));
  return out;
}

/// Enumerates, for each line (row or column), the kept-set tuples that
/// satisfy that line's condition, then materializes their full product.
std::vector<EqualizerMatrix> lineProduct(const BipartitionMatrix& m, const SearchOptions& opts,
                                         bool byRows) {
  Meter meter(opts.budget);
  const auto choices = enumerateAll(m, meter);
  const std::size_t q = m.rows();
  const std::size_t p = m.cols();
  const std::size_t lines = byRows ? q : p;
  const std::size_t span = byRows ? p : q;

  std::vector<std::vector<std::vector<OrderedSet>>> perLine(lines);
  for (std::size_t line = 0; line < lines; ++line) {
    std::vector<std::size_t> cells;
    for (std::size_t t = 0; t < span; ++t) cells.push_back(byRows ? line * p + t : t * p + line);
    GridSearch search(choices, cells, p, byRows, !byRows, meter);
    search.run([&](const std::vector<const Choice*>& picked) {
      std::vector<OrderedSet> tuple;
      tuple.reserve(picked.size());
      for (const Choice* c : picked) tuple.push_back(c->kept);
      perLine[line].push_back(std::move(tuple));
    });
  }

  std::uint64_t total = 1;
  for (const auto& tuples : perLine) {
    if (tuples.empty()) return {};
    if (total > opts.budget / tuples.size()) {
      meter.charge(std::numeric_limits<std::uint64_t>::max());
    }
    total *= tuples.size();
  }
  meter.charge(total);

  std::vector<EqualizerMatrix> out;
  out.reserve(total);
  std::vector<std::size_t> index(lines, 0);
  while (true) {
    std::vector<OrderedSet> grid(q * p);
    for (std::size_t line = 0; line < lines; ++line) {
      const auto& tuple = perLine[line][index[line]];
      for (std::size_t t = 0; t < span; ++t) {
        grid[byRows ? line * p + t : t * p + line] = tuple[t];
      }
    }
    out.emplace_back(q, p, std::move(grid));
    std::size_t line = lines;
    while (line > 0) {
      --line;
      if (++index[line] < perLine[line].size()) break;
      index[line] = 0;
      if (line == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// EqualizerMatrix

EqualizerMatrix::EqualizerMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<OrderedSet> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
    throw domainError("MalformedEqualizer", "equalizer grid must be a non-empty " +
                                                std::to_string(rows_) + "x" +
                                                std::to_string(cols_) + " grid");
  }
}

EqualizerMatrix EqualizerMatrix::null(const BipartitionMatrix& m) {
  return EqualizerMatrix(m.rows(), m.cols(), std::vector<OrderedSet>(m.rows() * m.cols()));
}

bool EqualizerMatrix::isNull() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.empty(); });
}

bool EqualizerMatrix::hasEmptyEntry() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.empty(); });
}

// ---------------------------------------------------------------------------
// Merging and predicates

Bipartition applyMerge(const Bipartition& b, const OrderedSet& kept) {
  if (!keptInRange(kept, b.length())) {
    throw domainError("DividerOutOfRange",
                      "kept divider " + std::to_string(kept.back()) +
                          " is outside 1.." + std::to_string(b.length() - 1));
  }
  return Bipartition(Partition(mergeBlocks(b.inputs(), kept)),
                     Partition(mergeBlocks(b.outputs(), kept)));
}

bool isRowEqualizer(const BipartitionMatrix& m, const EqualizerMatrix& e) {
  if (!sameShape(m, e)) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto first = mergeBlocks(m.at(i, 0).outputs(), e.at(i, 0));
    for (std::size_t j = 1; j < m.cols(); ++j) {
      if (mergeBlocks(m.at(i, j).outputs(), e.at(i, j)) != first) return false;
    }
  }
  return true;
}

bool isColumnEqualizer(const BipartitionMatrix& m, const EqualizerMatrix& e) {
  if (!sameShape(m, e)) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto first = mergeBlocks(m.at(0, j).inputs(), e.at(0, j));
    for (std::size_t i = 1; i < m.rows(); ++i) {
      if (mergeBlocks(m.at(i, j).inputs(), e.at(i, j)) != first) return false;
    }
  }
  return true;
}

bool isEqualizer(const BipartitionMatrix& m, const EqualizerMatrix& e) {
  return isRowEqualizer(m, e) && isColumnEqualizer(m, e);
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<EqualizerMatrix> rowEqualizers(const BipartitionMatrix& m, const SearchOptions& opts) {
  return lineProduct(m, opts, true);
}

std::vector<EqualizerMatrix> columnEqualizers(const BipartitionMatrix& m,
                                              const SearchOptions& opts) {
  return lineProduct(m, opts, false);
}

void forEachEqualizer(const BipartitionMatrix& m, const SearchOptions& opts,
                      const std::function<void(const EqualizerMatrix&)>& visit) {
  Meter meter(opts.budget);
  const auto choices = enumerateAll(m, meter);
  std::vector<std::size_t> cells(m.rows() * m.cols());
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k] = k;
  GridSearch search(choices, std::move(cells), m.cols(), true, true, meter);
  search.run([&](const std::vector<const Choice*>& picked) {
    std::vector<OrderedSet> grid;
    grid.reserve(picked.size());
    for (const Choice* c : picked) grid.push_back(c->kept);
    visit(EqualizerMatrix(m.rows(), m.cols(), std::move(grid)));
  });
}

std::vector<EqualizerMatrix> equalizers(const BipartitionMatrix& m, const SearchOptions& opts) {
  std::vector<EqualizerMatrix> out;
  forEachEqualizer(m, opts, [&](const EqualizerMatrix& e) { out.push_back(e); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Selection

bool outranks(const EqualizerMatrix& candidate, const EqualizerMatrix& champion) {
  const auto a = candidate.entries();
  const auto b = champion.entries();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] == b[k]) continue;
    if (a[k].size() != b[k].size()) return a[k].size() > b[k].size();
    return a[k] < b[k];
  }
  return false;
}

const EqualizerMatrix& selectMaximal(std::span<const EqualizerMatrix> candidates) {
  if (candidates.empty()) throw domainError("NoCandidates", "no equalizer candidates to select from");
  const EqualizerMatrix* champion = &candidates.front();
  for (const auto& c : candidates.subspan(1)) {
    if (outranks(c, *champion)) champion = &c;
  }
  return *champion;
}

EqualizerMatrix maximalEqualizer(const BipartitionMatrix& m, const SearchOptions& opts) {
  std::optional<EqualizerMatrix> champion;
  forEachEqualizer(m, opts, [&](const EqualizerMatrix& e) {
    if (!champion || outranks(e, *champion)) champion = e;
  });
  if (!champion) {
    throw internalError("MissingNullEqualizer", "the null equalizer was not enumerated");
  }
  return *champion;
}

BipartitionMatrix equalization(const BipartitionMatrix& m, const EqualizerMatrix& e,
                               EqualizerKind kind) {
  bool ok = false;
  switch (kind) {
    case EqualizerKind::Row: ok = isRowEqualizer(m, e); break;
    case EqualizerKind::Column: ok = isColumnEqualizer(m, e); break;
    case EqualizerKind::Joint: ok = isEqualizer(m, e); break;
  }
  if (!ok) throw domainError("NotAnEqualizer", "the grid is not an equalizer of the matrix");
  std::vector<std::vector<Bipartition>> grid(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) grid[i].push_back(applyMerge(m.at(i, j), e.at(i, j)));
  }
  return BipartitionMatrix(std::move(grid));
}

bool isIndecomposable(const BipartitionMatrix& m, const SearchOptions& opts) {
  return maximalEqualizer(m, opts).isNull();
}

}  // namespace bipart
