#pragma once

#include <bipart/equalizer.hpp>
#include <bipart/model.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace bipart {

/// Ordered juxtaposition of bipartition matrices. No cancellation or
/// normalization is ever performed; equality is factor-by-factor.
class FormalProduct {
 public:
  /// Throws a Domain error "EmptyProduct" when factors is empty.
  explicit FormalProduct(std::vector<BipartitionMatrix> factors);

  std::size_t size() const noexcept { return factors_.size(); }
  const BipartitionMatrix& operator[](std::size_t k) const { return factors_[k]; }
  std::span<const BipartitionMatrix> factors() const noexcept { return factors_; }
  auto begin() const noexcept { return factors_.begin(); }
  auto end() const noexcept { return factors_.end(); }

  friend bool operator==(const FormalProduct&, const FormalProduct&) = default;

 private:
  std::vector<BipartitionMatrix> factors_;
};

/// Factors a bipartition of length r into r elementary matrices. Factor k
/// has entry (l, m) = b_l / a_m, where the a-blocks embed A_k in
/// A_1 u ... u A_k and the b-blocks embed B_k in B_k u ... u B_r.
FormalProduct factorElementary(const Bipartition& b);

struct TransverseDecomposition {
  /// Column-shaped, indecomposable factor.
  BipartitionMatrix head;
  /// Row-shaped remainder.
  BipartitionMatrix tail;
};

/// Splits every entry at the first kept divider of the maximal equalizer.
/// Throws a Domain error "NullMaximalEqualizer" when m is indecomposable.
TransverseDecomposition transverseDecomposition(const BipartitionMatrix& m,
                                                const SearchOptions& opts = {});

/// Repeated transverse decomposition until the remainder is indecomposable.
/// Every factor but the last is indecomposable.
FormalProduct indecomposableFactorization(const BipartitionMatrix& m,
                                          const SearchOptions& opts = {});

/// Inverse of factorElementary: A_k is the union of the denominators across
/// the first row of factor k, B_k the union of the numerators down its first
/// column. Throws a Domain error "MalformedFactor" when a factor is not
/// elementary or the recovered blocks do not form a bipartition.
Bipartition multiply(const FormalProduct& product);

/// Reverses the block order and swaps numerator with denominator.
Bipartition rotation(const Bipartition& b);

/// Transpose combined with entrywise rotation.
BipartitionMatrix transposeRotation(const BipartitionMatrix& m);

}  // namespace bipart
