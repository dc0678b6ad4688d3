#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#ifndef BIPART_FIXTURE_DIR
#error "BIPART_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace bipart::test {

namespace {

Partition blocks(std::string_view text) {
  std::vector<OrderedSet> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view block = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
    std::vector<Element> elements;
    if (block != "0") {
      for (char c : block) elements.push_back(static_cast<Element>(c - '0'));
    }
    out.emplace_back(std::move(elements));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Partition(std::move(out));
}

}  // namespace

Bipartition frac(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("fraction needs a '/'");
  return Bipartition(blocks(text.substr(slash + 1)), blocks(text.substr(0, slash)));
}

BipartitionMatrix mat(std::initializer_list<std::string_view> rows) {
  std::vector<std::vector<Bipartition>> grid;
  for (std::string_view row : rows) {
    std::vector<Bipartition> entries;
    std::istringstream words{std::string(row)};
    std::string word;
    while (words >> word) entries.push_back(frac(word));
    grid.push_back(std::move(entries));
  }
  return BipartitionMatrix(std::move(grid));
}

BipartitionMatrix example3() {
  return mat({"1|2/3|0 12/4", "5|6|7|8/3|0|0|0 5|67|8/0|0|4"});
}

BipartitionMatrix example22() {
  return mat({"1|2|0/0|1|2 1|0|2/0|3|4 1|2|0|0/5|0|6|0 1|2/7|8",
              "3|4/0|12 3|0|4/0|3|4 3|0|4|0/5|0|6|0 3|4/7|8",
              "5|6|0/0|1|2 5|6|0/0|3|4 5|6|0|0/5|0|6|0 5|6/7|8",
              "7|8/0|12 7|8/0|34 7|8|0|0/5|0|6|0 7|8|0|0/7|0|0|8"});
}

BipartitionMatrix matrix5x5() {
  return mat({"1|2|0/0|1|2 1|0|2/0|3|4 1|2|0|0/5|0|6|0 1|2/7|8 1|2/0|9",
              "3|4/0|12 3|0|4/0|3|4 3|0|4|0/5|0|6|0 3|4/7|8 3|4|0/0|9|0",
              "5|6|0/0|1|2 5|6|0/0|3|4 5|6|0|0/5|0|6|0 5|6/7|8 5|6/0|9",
              "7|8/0|12 7|8/0|34 7|8|0|0/5|0|6|0 7|8|0|0/7|0|0|8 7|0|8/0|9|0",
              "9|0/0|12 9|0/0|34 9|0/5|6 9|0|0|0/7|0|8|0 9|0|0/0|9|0"});
}

BipartitionMatrix modified4x4() {
  return mat({"1|2|0/0|1|2 1|0|2/0|3|4 1|2|0|0/5|0|6|0 1|2/7|8",
              "3|4/12|0 3|0|4/0|3|4 3|0|4|0/5|0|6|0 3|4/7|8",
              "5|6|0/0|1|2 5|6|0/0|3|4 5|6|0|0/5|0|6|0 5|6/7|8",
              "7|8/0|12 7|8/0|34 7|8|0|0/5|0|6|0 7|8|0|0/7|0|0|8"});
}

BipartitionMatrix appendixB() {
  return mat({"1|2|3|4|5/0|0|0|1|2 1|2|34|5/0|0|3|4 12|4|3|5/0|0|5|6"});
}

BipartitionMatrix factIv() { return mat({"0/1 0|0/0|2"}); }

Bipartition example5() { return frac("0|34|5/1|0|2"); }

std::string fixturePath(std::string_view name) {
  return std::string(BIPART_FIXTURE_DIR) + "/" + std::string(name);
}

std::string readFixture(std::string_view name) {
  std::ifstream file(fixturePath(name), std::ios::binary);
  if (!file) throw std::runtime_error("missing fixture " + std::string(name));
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

}  // namespace bipart::test
