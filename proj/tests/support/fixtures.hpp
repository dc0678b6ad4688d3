#pragma once

#include <bipart/model.hpp>

#include <initializer_list>
#include <string>
#include <string_view>

namespace bipart::test {

/// Builds a bipartition from fraction notation "B1|...|Br/A1|...|Ar": the
/// numerator holds the outputs, the denominator the inputs, each block is a
/// run of single-digit elements and "0" is the empty block.
Bipartition frac(std::string_view text);

/// Builds a matrix from rows of whitespace-separated fractions.
BipartitionMatrix mat(std::initializer_list<std::string_view> rows);

BipartitionMatrix example3();
BipartitionMatrix example22();
BipartitionMatrix matrix5x5();
/// example22 with entry (2,1) replaced by (3|4)/(12|0).
BipartitionMatrix modified4x4();
BipartitionMatrix appendixB();
/// (0/1  (0|0)/(0|2))
BipartitionMatrix factIv();
/// (0|34|5)/(1|0|2)
Bipartition example5();

std::string fixturePath(std::string_view name);
std::string readFixture(std::string_view name);

}  // namespace bipart::test
