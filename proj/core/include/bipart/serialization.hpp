#pragma once

#include <bipart/dimension.hpp>
#include <bipart/equalizer.hpp>
#include <bipart/factorization.hpp>
#include <bipart/model.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bipart {

// Nested-list JSON format:
//   matrix    = [row, ...]
//   row       = [entry, ...]
//   entry     = [inputPartition, outputPartition]
//   partition = [block, ...]
//   block     = [positive integer, ...]   (strictly increasing)
//
// Parsers throw SyntaxError for malformed JSON, SchemaError (with a JSON
// pointer) for a document of the wrong shape or an invalid block/partition/
// entry, and ValidationError when the grid violates a matrix constraint.

BipartitionMatrix parseMatrix(std::string_view text);
/// Array of matrices.
FormalProduct parseProduct(std::string_view text);
/// Either a bare entry [inputs, outputs] or a 1x1 matrix.
Bipartition parseBipartition(std::string_view text);
/// Grid of kept-divider arrays.
EqualizerMatrix parseEqualizer(std::string_view text);

// Emitters produce compact, canonical JSON (no whitespace).
std::string emitMatrix(const BipartitionMatrix& m);
std::string emitProduct(const FormalProduct& p);
std::string emitEqualizer(const EqualizerMatrix& e);
std::string emitEqualizers(std::span<const EqualizerMatrix> es);
std::string emitBipartition(const Bipartition& b);
std::string emitPartition(const Partition& p);
/// {"row":R,"col":C,"ent":E,"total":T}
std::string emitReport(const DimensionReport& r);
/// The report with an extra "trace" array of
/// {"component":..,"matrix":..,"value":..} objects.
std::string emitReport(const DimensionReport& r, std::span<const TerminalContribution> trace);

// Fraction notation: each entry renders as "B1|...|Br / A1|...|Ar" with an
// empty block shown as 0. Blocks are written as concatenated digits when
// every element of the value is below 10, and comma-separated otherwise.
// Matrix rows are printed one per line with aligned columns.
std::string prettyPrint(const Partition& p);
std::string prettyPrint(const Bipartition& b);
std::string prettyPrint(const BipartitionMatrix& m);
/// Factors separated by blank lines.
std::string prettyPrint(const FormalProduct& p);

}  // namespace bipart
