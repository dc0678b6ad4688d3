#include <bipart/model.hpp>

#include <bipart/errors.hpp>

#include <string>

namespace bipart {

namespace {

std::string coords(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

const char* toString(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Budget: return "SearchBudgetExceeded";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<OrderedSet> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw domainError("InvalidPartition", "a partition needs at least one block");
  }
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.size();
  underlying_ = unionOf(blocks_);
  if (underlying_.size() != total) {
    throw domainError("InvalidPartition", "partition blocks are not pairwise disjoint");
  }
}

Partition Partition::null(std::size_t length) {
  return Partition(std::vector<OrderedSet>(length));
}

// ---------------------------------------------------------------------------
// Bipartition

Bipartition::Bipartition(Partition inputs, Partition outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  if (inputs_.length() != outputs_.length()) {
    throw domainError("LengthMismatch", "input partition has length " +
                                            std::to_string(inputs_.length()) +
                                            " but output partition has length " +
                                            std::to_string(outputs_.length()));
  }
}

Bipartition Bipartition::null(std::size_t length) {
  return Bipartition(Partition::null(length), Partition::null(length));
}

Bipartition Bipartition::elementary(OrderedSet inputs, OrderedSet outputs) {
  return Bipartition(Partition({std::move(inputs)}), Partition({std::move(outputs)}));
}

// ---------------------------------------------------------------------------
// BipartitionMatrix

BipartitionMatrix::BipartitionMatrix(std::vector<std::vector<Bipartition>> grid) {
  if (grid.empty() || grid.front().empty()) {
    throw ValidationError("MalformedGrid", {}, "a bipartition matrix needs at least one entry");
  }
  rows_ = grid.size();
  cols_ = grid.front().size();
  entries_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (grid[i].size() != cols_) {
      throw ValidationError("MalformedGrid", {i + 1},
                            "row " + std::to_string(i + 1) + " has " +
                                std::to_string(grid[i].size()) + " entries, expected " +
                                std::to_string(cols_));
    }
    for (auto& b : grid[i]) entries_.push_back(std::move(b));
  }
  validate();
}

BipartitionMatrix::BipartitionMatrix(Bipartition single)
    : rows_(1), cols_(1), entries_{std::move(single)} {}

BipartitionMatrix::BipartitionMatrix(std::size_t rows, std::size_t cols,
                                     std::vector<Bipartition> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

void BipartitionMatrix::validate() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j1 = 0; j1 < cols_; ++j1) {
      for (std::size_t j2 = j1 + 1; j2 < cols_; ++j2) {
        if (!disjoint(at(i, j1).inputSet(), at(i, j2).inputSet())) {
          throw ValidationError("RowInputOverlap", {i + 1, j1 + 1, j2 + 1},
                                "input sets in row " + std::to_string(i + 1) +
                                    " are not pairwise disjoint " + coords(i + 1, j1 + 1, j2 + 1));
        }
      }
    }
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 1; i < rows_; ++i) {
      if (at(i, j).inputSet() != at(0, j).inputSet()) {
        throw ValidationError("ColumnInputMismatch", {j + 1, 1, i + 1},
                              "input sets in column " + std::to_string(j + 1) +
                                  " are not all equal " + coords(j + 1, 1, i + 1));
      }
    }
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 1; j < cols_; ++j) {
      if (at(i, j).outputSet() != at(i, 0).outputSet()) {
        throw ValidationError("RowOutputMismatch", {i + 1, 1, j + 1},
                              "output sets in row " + std::to_string(i + 1) +
                                  " are not all equal " + coords(i + 1, 1, j + 1));
      }
    }
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i1 = 0; i1 < rows_; ++i1) {
      for (std::size_t i2 = i1 + 1; i2 < rows_; ++i2) {
        if (!disjoint(at(i1, j).outputSet(), at(i2, j).outputSet())) {
          throw ValidationError("ColumnOutputOverlap", {j + 1, i1 + 1, i2 + 1},
                                "output sets in column " + std::to_string(j + 1) +
                                    " are not pairwise disjoint " +
                                    coords(j + 1, i1 + 1, i2 + 1));
        }
      }
    }
  }
}

BipartitionMatrix BipartitionMatrix::row(std::size_t i) const {
  std::vector<Bipartition> out(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return BipartitionMatrix(1, cols_, std::move(out));
}

BipartitionMatrix BipartitionMatrix::column(std::size_t j) const {
  std::vector<Bipartition> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return BipartitionMatrix(rows_, 1, std::move(out));
}

std::vector<std::vector<Bipartition>> BipartitionMatrix::grid() const {
  std::vector<std::vector<Bipartition>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j));
  }
  return out;
}

bool BipartitionMatrix::isNull() const noexcept {
  for (const auto& b : entries_) {
    if (!b.isNull()) return false;
  }
  return true;
}

bool BipartitionMatrix::isElementary() const noexcept {
  for (const auto& b : entries_) {
    if (!b.isElementary()) return false;
  }
  return true;
}

std::size_t BipartitionMatrix::totalLength() const noexcept {
  std::size_t n = 0;
  for (const auto& b : entries_) n += b.length();
  return n;
}

std::size_t hashValue(const BipartitionMatrix& m) noexcept {
  // FNV-1a over a flattened structural encoding.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(m.rows());
  mix(m.cols());
  for (const auto& b : m.entries()) {
    for (const Partition* p : {&b.inputs(), &b.outputs()}) {
      mix(0xFFFFFFFFULL);
      for (const auto& block : p->blocks()) {
        mix(0xFFFFFFFEULL);
        for (Element x : block) mix(x);
      }
    }
  }
  return static_cast<std::size_t>(h);
}

BipartitionMatrix piReduce(const BipartitionMatrix& m) {
  std::vector<std::vector<Bipartition>> grid(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Bipartition& b = m.at(i, j);
      if (b.isNull()) {
        grid[i].push_back(Bipartition::null(1));
        continue;
      }
      std::vector<OrderedSet> in;
      std::vector<OrderedSet> out;
      for (std::size_t k = 0; k < b.length(); ++k) {
        if (b.isEmptyBiblock(k)) continue;
        in.push_back(b.inputs().block(k));
        out.push_back(b.outputs().block(k));
      }
      grid[i].emplace_back(Partition(std::move(in)), Partition(std::move(out)));
    }
  }
  return BipartitionMatrix(std::move(grid));
}

OrderedSet inputElements(const BipartitionMatrix& row) {
  if (row.rows() != 1) {
    throw domainError("NotARow", "inputElements expects a single-row matrix");
  }
  std::vector<OrderedSet> sets;
  for (const auto& b : row.entries()) sets.push_back(b.inputSet());
  return unionOf(sets);
}

OrderedSet outputElements(const BipartitionMatrix& column) {
  if (column.cols() != 1) {
    throw domainError("NotAColumn", "outputElements expects a single-column matrix");
  }
  std::vector<OrderedSet> sets;
  for (const auto& b : column.entries()) sets.push_back(b.outputSet());
  return unionOf(sets);
}

}  // namespace bipart
