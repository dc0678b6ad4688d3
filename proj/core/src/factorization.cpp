#include <bipart/factorization.hpp>

#include <bipart/embedding.hpp>
#include <bipart/errors.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace bipart {

namespace {

OrderedSet unionRange(const Partition& part, std::size_t first, std::size_t last) {
  return unionOf(part.blocks().subspan(first, last - first));
}

std::vector<OrderedSet> reversedBlocks(const Partition& part) {
  std::vector<OrderedSet> out(part.blocks().begin(), part.blocks().end());
  std::reverse(out.begin(), out.end());
  return out;
}

/// Pieces produced by splitting one entry at divider e.
struct EntrySplit {
  std::vector<Bipartition> head;  // one per b-block
  std::vector<Bipartition> tail;  // one per a-block
};

EntrySplit splitEntry(const Bipartition& c, std::size_t e) {
  const Partition& A = c.inputs();
  const Partition& B = c.outputs();
  const std::size_t r = c.length();
  const Partition aBlocks = embeddingPartition(c.inputSet(), unionRange(A, e, r));
  const Partition bBlocks = embeddingPartition(c.outputSet(), unionRange(B, 0, e));

  EntrySplit out;
  const Partition headInputs(std::vector<OrderedSet>(A.blocks().begin(), A.blocks().begin() + e));
  for (const OrderedSet& bl : bBlocks.blocks()) {
    std::vector<OrderedSet> outs;
    for (std::size_t t = 0; t < e; ++t) outs.push_back(setIntersection(B.block(t), bl));
    out.head.emplace_back(headInputs, Partition(std::move(outs)));
  }
  const Partition tailOutputs(std::vector<OrderedSet>(B.blocks().begin() + e, B.blocks().end()));
  for (const OrderedSet& ak : aBlocks.blocks()) {
    std::vector<OrderedSet> ins;
    for (std::size_t t = e; t < r; ++t) ins.push_back(setIntersection(A.block(t), ak));
    out.tail.emplace_back(Partition(std::move(ins)), tailOutputs);
  }
  return out;
}

}  // namespace

FormalProduct::FormalProduct(std::vector<BipartitionMatrix> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw domainError("EmptyProduct", "a formal product needs a factor");
}

FormalProduct factorElementary(const Bipartition& b) {
  const std::size_t r = b.length();
  if (r == 1) return FormalProduct({BipartitionMatrix(b)});
  std::vector<BipartitionMatrix> factors;
  factors.reserve(r);
  for (std::size_t k = 0; k < r; ++k) {
    const OrderedSet& Ak = b.inputs().block(k);
    const OrderedSet& Bk = b.outputs().block(k);
    const Partition aBlocks = embeddingPartition(unionRange(b.inputs(), 0, k + 1), Ak);
    const Partition bBlocks = embeddingPartition(unionRange(b.outputs(), k, r), Bk);
    std::vector<std::vector<Bipartition>> grid(bBlocks.length());
    for (std::size_t l = 0; l < bBlocks.length(); ++l) {
      for (const OrderedSet& am : aBlocks.blocks()) {
        grid[l].push_back(Bipartition::elementary(am, bBlocks.block(l)));
      }
    }
    factors.emplace_back(std::move(grid));
  }
  return FormalProduct(std::move(factors));
}

namespace {

TransverseDecomposition splitAt(const BipartitionMatrix& m, const EqualizerMatrix& eq) {
  const std::size_t q = m.rows();
  const std::size_t p = m.cols();

  std::vector<EntrySplit> splits;
  splits.reserve(q * p);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < p; ++j) splits.push_back(splitEntry(m.at(i, j), eq.at(i, j).front()));
  }

  std::vector<std::vector<Bipartition>> head;
  std::vector<std::vector<Bipartition>> tail(q);
  for (std::size_t i = 0; i < q; ++i) {
    const std::size_t height = splits[i * p].head.size();
    for (std::size_t j = 1; j < p; ++j) {
      if (splits[i * p + j].head.size() != height) {
        throw internalError("RaggedTransverseSplit",
                            "entries of row " + std::to_string(i + 1) +
                                " split into different numbers of head rows");
      }
    }
    for (std::size_t l = 0; l < height; ++l) {
      std::vector<Bipartition> row;
      for (std::size_t j = 0; j < p; ++j) row.push_back(splits[i * p + j].head[l]);
      head.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < p; ++j) {
      for (auto& piece : splits[i * p + j].tail) tail[i].push_back(std::move(piece));
    }
  }
  return {BipartitionMatrix(std::move(head)), BipartitionMatrix(std::move(tail))};
}

}  // namespace

TransverseDecomposition transverseDecomposition(const BipartitionMatrix& m,
                                                const SearchOptions& opts) {
  const EqualizerMatrix eq = maximalEqualizer(m, opts);
  if (eq.hasEmptyEntry()) {
    throw domainError("NullMaximalEqualizer",
                      "the matrix is indecomposable; it has no transverse decomposition");
  }
  return splitAt(m, eq);
}

FormalProduct indecomposableFactorization(const BipartitionMatrix& m, const SearchOptions& opts) {
  const std::size_t guard = m.totalLength();
  std::vector<BipartitionMatrix> factors;
  BipartitionMatrix rest = m;
  for (std::size_t step = 0;; ++step) {
    if (step > guard) {
      throw internalError("NonTermination", "factorization did not terminate within " +
                                                std::to_string(guard) + " steps");
    }
    const EqualizerMatrix eq = maximalEqualizer(rest, opts);
    if (eq.hasEmptyEntry()) break;
    auto [head, tail] = splitAt(rest, eq);
    factors.push_back(std::move(head));
    rest = std::move(tail);
  }
  factors.push_back(std::move(rest));
  return FormalProduct(std::move(factors));
}

Bipartition multiply(const FormalProduct& product) {
  std::vector<OrderedSet> inputs;
  std::vector<OrderedSet> outputs;
  for (std::size_t k = 0; k < product.size(); ++k) {
    const BipartitionMatrix& f = product[k];
    if (!f.isElementary()) {
      throw domainError("MalformedFactor", "factor " + std::to_string(k + 1) + " is not elementary");
    }
    std::vector<OrderedSet> firstRow;
    for (std::size_t j = 0; j < f.cols(); ++j) firstRow.push_back(f.at(0, j).inputSet());
    std::vector<OrderedSet> firstCol;
    for (std::size_t i = 0; i < f.rows(); ++i) firstCol.push_back(f.at(i, 0).outputSet());
    inputs.push_back(unionOf(firstRow));
    outputs.push_back(unionOf(firstCol));
  }
  try {
    return Bipartition(Partition(std::move(inputs)), Partition(std::move(outputs)));
  } catch (const Error& e) {
    throw domainError("MalformedFactor", std::string("factors do not recover a bipartition: ") +
                                             e.what());
  }
}

Bipartition rotation(const Bipartition& b) {
  return Bipartition(Partition(reversedBlocks(b.outputs())), Partition(reversedBlocks(b.inputs())));
}

BipartitionMatrix transposeRotation(const BipartitionMatrix& m) {
  std::vector<std::vector<Bipartition>> grid(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) grid[i].push_back(rotation(m.at(j, i)));
  }
  return BipartitionMatrix(std::move(grid));
}

}  // namespace bipart
