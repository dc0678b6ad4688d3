#pragma once

#include <bipart/model.hpp>
#include <bipart/ordered_set.hpp>

namespace bipart {

/// Partition of `subset` recording how it sits inside `superset`: every
/// element of superset \ subset contributes one divider at its position, so
/// the result has #superset - #subset dividers. An empty subset yields the
/// null partition with #superset dividers.
///
/// Throws a Domain error with code "NotASubset" if subset is not contained in
/// superset.
Partition embeddingPartition(const OrderedSet& superset, const OrderedSet& subset);

}  // namespace bipart
