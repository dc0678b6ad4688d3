// Randomized and exhaustive properties. Every suite draws from a fixed seed
// so failures are reproducible; each reports the first counterexample.

#include <bipart/dimension.hpp>
#include <bipart/embedding.hpp>
#include <bipart/equalizer.hpp>
#include <bipart/factorization.hpp>
#include <bipart/serialization.hpp>

#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace bipart;
using namespace bipart::test;

namespace {

constexpr int kCases = 500;

/// The fixture corpus followed by kCases random matrices.
std::vector<BipartitionMatrix> corpus(std::uint64_t seed, const MatrixLimits& limits = {}) {
  std::vector<BipartitionMatrix> out{example3(),    example22(), matrix5x5(),
                                     modified4x4(), appendixB(), factIv()};
  Rng rng(seed);
  for (int k = 0; k < kCases; ++k) out.push_back(randomMatrix(rng, limits));
  return out;
}

std::vector<EqualizerMatrix> intersect(const std::vector<EqualizerMatrix>& a,
                                       const std::vector<EqualizerMatrix>& b) {
  std::vector<EqualizerMatrix> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_SUITE("prop-multiply-roundtrip") {
  TEST_CASE("multiply(factorElementary(b)) == b") {
    Rng rng(101);
    for (int k = 0; k < kCases; ++k) {
      const Bipartition b = randomBipartition(rng);
      CAPTURE(emitBipartition(b));
      REQUIRE(multiply(factorElementary(b)) == b);
    }
  }

  TEST_CASE("elementary factors are valid and sized by divider counts") {
    Rng rng(102);
    for (int k = 0; k < kCases; ++k) {
      const Bipartition b = randomBipartition(rng);
      CAPTURE(emitBipartition(b));
      const FormalProduct p = factorElementary(b);
      REQUIRE(p.size() == b.length());
      if (b.length() == 1) continue;
      for (std::size_t f = 0; f < p.size(); ++f) {
        const auto& inputs = b.inputs().blocks();
        const auto& outputs = b.outputs().blocks();
        const std::size_t upTo = unionOf(inputs.subspan(0, f + 1)).size();
        const std::size_t from = unionOf(outputs.subspan(f)).size();
        CHECK(p[f].isElementary());
        CHECK(p[f].cols() == upTo - inputs[f].size() + 1);
        CHECK(p[f].rows() == from - outputs[f].size() + 1);
      }
    }
  }
}

TEST_SUITE("prop-trrot-involution") {
  TEST_CASE("transposeRotation is an involution and preserves validity") {
    for (const auto& m : corpus(201)) {
      CAPTURE(emitMatrix(m));
      const auto t = transposeRotation(m);  // validated on construction
      CHECK(t.rows() == m.cols());
      CHECK(transposeRotation(t) == m);
    }
  }

  TEST_CASE("rotation is an involution") {
    Rng rng(202);
    for (int k = 0; k < kCases; ++k) {
      const Bipartition b = randomBipartition(rng);
      CHECK(rotation(rotation(b)) == b);
    }
  }
}

TEST_SUITE("prop-trrot-duality") {
  TEST_CASE("rowDimension(M) == colDimension(transposeRotation(M)) and dually") {
    DimensionEngine engine;
    int failures = 0;
    std::string first;
    const auto all = corpus(301);
    for (const auto& m : all) {
      const auto t = transposeRotation(m);
      const bool ok = engine.rowDimension(m) == engine.colDimension(t) &&
                      engine.colDimension(m) == engine.rowDimension(t);
      if (!ok && failures++ == 0) first = emitMatrix(m);
    }
    INFO("first counterexample: " << first);
    INFO(failures << " of " << all.size() << " matrices violate duality");
    CHECK(failures == 0);
  }
}

TEST_SUITE("prop-factor-additivity") {
  TEST_CASE("dimension equals the sum over indecomposable factors") {
    DimensionEngine engine;
    for (const auto& m : corpus(401)) {
      CAPTURE(emitMatrix(m));
      const FormalProduct f = indecomposableFactorization(m);
      std::uint64_t sum = 0;
      for (const auto& factor : f) sum += engine.dimension(factor).total;
      CHECK(engine.dimension(m).total == sum);
    }
  }

  TEST_CASE("terminal contributions sum to the dimension") {
    for (const auto& m : corpus(402)) {
      CAPTURE(emitMatrix(m));
      DimensionEngine traced({SearchOptions{}, true});
      const auto report = traced.dimension(m);
      std::uint64_t sum = 0;
      for (const auto& t : traced.trace()) sum += t.value;
      CHECK(sum == report.total);
      CHECK(report == dimension(m));
    }
  }
}

TEST_SUITE("prop-pi-idempotent") {
  TEST_CASE("piReduce is idempotent and keeps entry sets") {
    for (const auto& m : corpus(501)) {
      CAPTURE(emitMatrix(m));
      const auto once = piReduce(m);
      CHECK(piReduce(once) == once);
      for (std::size_t k = 0; k < m.entries().size(); ++k) {
        CHECK(once.entries()[k].inputSet() == m.entries()[k].inputSet());
        CHECK(once.entries()[k].outputSet() == m.entries()[k].outputSet());
      }
    }
  }

  TEST_CASE("row input elements are a disjoint union") {
    for (const auto& m : corpus(502)) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t sum = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j).inputSet().size();
        CHECK(inputElements(m.row(i)).size() == sum);
      }
    }
  }
}

TEST_SUITE("prop-pi-invariance") {
  TEST_CASE("dimension(piReduce(M)) == dimension(M)") {
    DimensionEngine engine;
    int failures = 0;
    std::string first;
    const auto all = corpus(601);
    for (const auto& m : all) {
      if (engine.dimension(piReduce(m)) != engine.dimension(m) && failures++ == 0) {
        first = emitMatrix(m);
      }
    }
    INFO("first counterexample: " << first);
    INFO(failures << " of " << all.size() << " matrices change dimension under piReduce");
    CHECK(failures == 0);
  }
}

TEST_SUITE("prop-equalizers") {
  TEST_CASE("the null equalizer is always present") {
    for (const auto& m : corpus(701)) {
      CAPTURE(emitMatrix(m));
      const auto all = equalizers(m);
      CHECK(std::binary_search(all.begin(), all.end(), EqualizerMatrix::null(m)));
      CHECK(equalization(m, EqualizerMatrix::null(m)).isElementary());
    }
  }

  TEST_CASE("the maximal equalizer is an equalizer and dominates entrywise") {
    for (const auto& m : corpus(702)) {
      CAPTURE(emitMatrix(m));
      const auto all = equalizers(m);
      const auto best = maximalEqualizer(m);
      CHECK(std::binary_search(all.begin(), all.end(), best));
      CHECK(best == selectMaximal(all));
      for (const auto& e : all) {
        for (std::size_t k = 0; k < e.entries().size(); ++k) {
          CHECK(e.entries()[k].size() <= best.entries()[k].size());
        }
      }
    }
  }

  TEST_CASE("every equalizer is both a row and a column equalizer") {
    for (const auto& m : corpus(703)) {
      for (const auto& e : equalizers(m)) CHECK(isEqualizer(m, e));
    }
  }
}

TEST_SUITE("prop-equalizer-oracle") {
  TEST_CASE("row/column intersection equals joint brute-force filtering") {
    const MatrixLimits small{2, 2, 3, 10};
    Rng rng(801);
    for (int k = 0; k < kCases; ++k) {
      const auto m = randomMatrix(rng, small);
      CAPTURE(emitMatrix(m));
      const auto brute = bruteForceEqualizers(m);
      CHECK(intersect(rowEqualizers(m), columnEqualizers(m)) == brute);
      CHECK(equalizers(m) == brute);
    }
  }
}

TEST_SUITE("prop-factorization") {
  TEST_CASE("non-final factors are indecomposable and the product is structurally sound") {
    for (const auto& m : corpus(901)) {
      CAPTURE(emitMatrix(m));
      const FormalProduct f = indecomposableFactorization(m);
      for (std::size_t k = 0; k + 1 < f.size(); ++k) CHECK(isIndecomposable(f[k]));
      CHECK((isIndecomposable(f[f.size() - 1]) || f[f.size() - 1].isElementary()));
    }
  }

  TEST_CASE("transverse decomposition shapes") {
    for (const auto& m : corpus(902)) {
      if (isIndecomposable(m)) continue;
      CAPTURE(emitMatrix(m));
      const auto best = maximalEqualizer(m);
      const auto [head, tail] = transverseDecomposition(m);
      CHECK(isIndecomposable(head));
      CHECK(tail.rows() == m.rows());
      CHECK(head.cols() == m.cols());
      std::size_t blocks = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Bipartition& c = m.at(0, j);
        const std::size_t e = best.at(0, j).front();
        blocks += embeddingPartition(c.inputSet(),
                                     unionOf(c.inputs().blocks().subspan(e)))
                      .length();
      }
      CHECK(tail.cols() == blocks);
    }
  }

  TEST_CASE("single entries factor exactly as their elementary factorization") {
    Rng rng(903);
    for (int k = 0; k < kCases; ++k) {
      const Bipartition b = randomBipartition(rng);
      CAPTURE(emitBipartition(b));
      CHECK(indecomposableFactorization(BipartitionMatrix(b)) == factorElementary(b));
    }
  }
}

TEST_SUITE("prop-serialization") {
  TEST_CASE("parse(emit(M)) == M") {
    for (const auto& m : corpus(1001)) {
      const std::string text = emitMatrix(m);
      CAPTURE(text);
      CHECK(parseMatrix(text) == m);
      CHECK(emitMatrix(parseMatrix(text)) == text);
      CHECK(parseProduct(emitProduct(indecomposableFactorization(m))) ==
            indecomposableFactorization(m));
    }
  }
}

TEST_SUITE("prop-embedding") {
  TEST_CASE("random subsets embed per divider counting") {
    Rng rng(1101);
    for (int k = 0; k < kCases; ++k) {
      const OrderedSet superset = randomSubset(rng, OrderedSet::interval(1, 12));
      const OrderedSet subset = randomSubset(rng, superset);
      const Partition p = embeddingPartition(superset, subset);
      CHECK(p.dividers() == superset.size() - subset.size());
      CHECK(p.underlying() == subset);
      CHECK(blockString(p) == embeddingByCounting(superset, subset));
    }
  }
}

TEST_SUITE("prop-permutahedron") {
  TEST_CASE("facets A|B of P_n give monomials of dimension n - 2") {
    for (Element n = 3; n <= 6; ++n) {
      const OrderedSet all = OrderedSet::interval(1, n);
      int cases = 0;
      for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
        std::vector<Element> a;
        std::vector<Element> b;
        for (Element x = 1; x <= n; ++x) ((mask >> (x - 1)) & 1U ? a : b).push_back(x);
        const Partition blocks = embeddingPartition(all, OrderedSet(b));
        std::vector<Bipartition> row;
        for (const auto& block : blocks.blocks()) row.push_back(Bipartition::elementary(block, {}));
        const FormalProduct monomial(
            {BipartitionMatrix(Bipartition::elementary(OrderedSet(a), {})),
             BipartitionMatrix(std::vector<std::vector<Bipartition>>{row})});
        CAPTURE(n);
        CAPTURE(mask);
        CHECK(dimension(monomial).total == n - 2);
        ++cases;
      }
      CHECK(cases == (1 << n) - 2);
    }
  }

  TEST_CASE("a row is not the sum of its entries") {
    for (Element n = 3; n <= 6; ++n) {
      const OrderedSet all = OrderedSet::interval(1, n);
      for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
        std::vector<Element> b;
        for (Element x = 1; x <= n; ++x) {
          if (!((mask >> (x - 1)) & 1U)) b.push_back(x);
        }
        const Partition blocks = embeddingPartition(all, OrderedSet(b));
        const auto nonEmpty = std::count_if(blocks.blocks().begin(), blocks.blocks().end(),
                                            [](const OrderedSet& s) { return !s.empty(); });
        if (nonEmpty < 2) continue;
        std::vector<Bipartition> row;
        std::uint64_t entrySum = 0;
        for (const auto& block : blocks.blocks()) {
          row.push_back(Bipartition::elementary(block, {}));
          entrySum += dimension(BipartitionMatrix(row.back())).total;
        }
        const BipartitionMatrix m(std::vector<std::vector<Bipartition>>{row});
        CAPTURE(emitMatrix(m));
        CHECK(entrySum < dimension(m).total);
      }
    }
  }
}
