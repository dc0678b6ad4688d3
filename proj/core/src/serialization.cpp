#include <bipart/serialization.hpp>

#include <bipart/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace bipart {

namespace {

using nlohmann::json;

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

json parseDocument(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based index of the last character read.
    throw SyntaxError(e.byte == 0 ? 0 : e.byte - 1, "malformed JSON: " + std::string(e.what()));
  }
}

const json& expectArray(const json& node, const std::string& path, const char* what) {
  if (!node.is_array()) throw SchemaError(path, std::string("expected ") + what + " (an array)");
  return node;
}

OrderedSet readBlock(const json& node, const std::string& path) {
  expectArray(node, path, "a block");
  std::vector<Element> elements;
  elements.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) {
    const json& x = node[k];
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() == 0 ||
        x.get<std::uint64_t>() > std::numeric_limits<Element>::max()) {
      throw SchemaError(child(path, k), "block elements must be positive integers");
    }
    elements.push_back(static_cast<Element>(x.get<std::uint64_t>()));
  }
  try {
    return OrderedSet(std::move(elements));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

Partition readPartition(const json& node, const std::string& path) {
  expectArray(node, path, "a partition");
  if (node.empty()) throw SchemaError(path, "a partition needs at least one block");
  std::vector<OrderedSet> blocks;
  blocks.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) blocks.push_back(readBlock(node[k], child(path, k)));
  try {
    return Partition(std::move(blocks));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

Bipartition readEntry(const json& node, const std::string& path) {
  expectArray(node, path, "an entry [inputs, outputs]");
  if (node.size() != 2) {
    throw SchemaError(path, "an entry must be a pair [inputPartition, outputPartition]");
  }
  Partition inputs = readPartition(node[0], child(path, 0));
  Partition outputs = readPartition(node[1], child(path, 1));
  if (inputs.length() != outputs.length()) {
    throw SchemaError(path, "partition lengths " + std::to_string(inputs.length()) +
                                " and " + std::to_string(outputs.length()) + " differ");
  }
  return Bipartition(std::move(inputs), std::move(outputs));
}

BipartitionMatrix readMatrix(const json& node, const std::string& path) {
  expectArray(node, path, "a matrix");
  std::vector<std::vector<Bipartition>> grid;
  grid.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string rowPath = child(path, i);
    const json& row = expectArray(node[i], rowPath, "a row");
    std::vector<Bipartition> entries;
    entries.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) entries.push_back(readEntry(row[j], child(rowPath, j)));
    grid.push_back(std::move(entries));
  }
  return BipartitionMatrix(std::move(grid));
}

json blockJson(const OrderedSet& s) {
  json out = json::array();
  for (Element x : s) out.push_back(x);
  return out;
}

json partitionJson(const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(blockJson(b));
  return out;
}

json entryJson(const Bipartition& b) {
  return json::array({partitionJson(b.inputs()), partitionJson(b.outputs())});
}

json matrixJson(const BipartitionMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entryJson(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json equalizerJson(const EqualizerMatrix& e) {
  json out = json::array();
  for (std::size_t i = 0; i < e.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < e.cols(); ++j) row.push_back(blockJson(e.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction notation

bool allSingleDigit(std::span<const Bipartition> entries) {
  for (const auto& b : entries) {
    if (!b.inputSet().empty() && b.inputSet().back() >= 10) return false;
    if (!b.outputSet().empty() && b.outputSet().back() >= 10) return false;
  }
  return true;
}

std::string renderPartition(const Partition& p, bool compact) {
  std::string out;
  for (std::size_t k = 0; k < p.length(); ++k) {
    if (k > 0) out += '|';
    const OrderedSet& block = p.block(k);
    if (block.empty()) {
      out += '0';
      continue;
    }
    for (std::size_t t = 0; t < block.size(); ++t) {
      if (t > 0 && !compact) out += ',';
      out += std::to_string(block[t]);
    }
  }
  return out;
}

std::string renderEntry(const Bipartition& b, bool compact) {
  return renderPartition(b.outputs(), compact) + " / " + renderPartition(b.inputs(), compact);
}

std::string renderMatrix(const BipartitionMatrix& m, bool compact) {
  std::vector<std::string> cells;
  cells.reserve(m.entries().size());
  for (const auto& b : m.entries()) cells.push_back(renderEntry(b, compact));
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    width[k % m.cols()] = std::max(width[k % m.cols()], cells[k].size());
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[i * m.cols() + j];
      if (j > 0) line += "  ";
      line += cell;
      if (j + 1 < m.cols()) line.append(width[j] - cell.size(), ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

BipartitionMatrix parseMatrix(std::string_view text) { return readMatrix(parseDocument(text), ""); }

FormalProduct parseProduct(std::string_view text) {
  const json doc = parseDocument(text);
  expectArray(doc, "", "a product (an array of matrices)");
  if (doc.empty()) throw SchemaError("", "a product needs at least one factor");
  std::vector<BipartitionMatrix> factors;
  for (std::size_t k = 0; k < doc.size(); ++k) factors.push_back(readMatrix(doc[k], child("", k)));
  return FormalProduct(std::move(factors));
}

Bipartition parseBipartition(std::string_view text) {
  const json doc = parseDocument(text);
  expectArray(doc, "", "a bipartition");
  // A bare entry's second level holds blocks (arrays of numbers); a matrix's
  // second level holds entries (arrays of partitions).
  const bool bare = !doc.empty() && doc[0].is_array() && !doc[0].empty() && doc[0][0].is_array() &&
                    (doc[0][0].empty() || !doc[0][0][0].is_array());
  if (bare) return readEntry(doc, "");
  BipartitionMatrix m = readMatrix(doc, "");
  if (m.rows() != 1 || m.cols() != 1) {
    throw SchemaError("", "expected a single bipartition or a 1x1 matrix");
  }
  return m.at(0, 0);
}

EqualizerMatrix parseEqualizer(std::string_view text) {
  const json doc = parseDocument(text);
  expectArray(doc, "", "an equalizer grid");
  if (doc.empty()) throw SchemaError("", "an equalizer grid needs at least one row");
  std::vector<OrderedSet> entries;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string rowPath = child("", i);
    const json& row = expectArray(doc[i], rowPath, "an equalizer row");
    if (i == 0) cols = row.size();
    if (row.empty() || row.size() != cols) {
      throw SchemaError(rowPath, "equalizer rows must be non-empty and of equal length");
    }
    for (std::size_t j = 0; j < row.size(); ++j) entries.push_back(readBlock(row[j], child(rowPath, j)));
  }
  return EqualizerMatrix(doc.size(), cols, std::move(entries));
}

// ---------------------------------------------------------------------------
// Emission

std::string emitMatrix(const BipartitionMatrix& m) { return matrixJson(m).dump(); }

std::string emitProduct(const FormalProduct& p) {
  json out = json::array();
  for (const auto& f : p) out.push_back(matrixJson(f));
  return out.dump();
}

std::string emitEqualizer(const EqualizerMatrix& e) { return equalizerJson(e).dump(); }

std::string emitEqualizers(std::span<const EqualizerMatrix> es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(equalizerJson(e));
  return out.dump();
}

std::string emitBipartition(const Bipartition& b) { return entryJson(b).dump(); }

std::string emitPartition(const Partition& p) { return partitionJson(p).dump(); }

std::string emitReport(const DimensionReport& r) {
  nlohmann::ordered_json out;
  out["row"] = r.row;
  out["col"] = r.col;
  out["ent"] = r.ent;
  out["total"] = r.total;
  return out.dump();
}

std::string emitReport(const DimensionReport& r, std::span<const TerminalContribution> trace) {
  nlohmann::ordered_json out;
  out["row"] = r.row;
  out["col"] = r.col;
  out["ent"] = r.ent;
  out["total"] = r.total;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& t : trace) {
    nlohmann::ordered_json item;
    item["component"] = toString(t.component);
    item["matrix"] = matrixJson(t.matrix);
    item["value"] = t.value;
    items.push_back(std::move(item));
  }
  out["trace"] = std::move(items);
  return out.dump();
}

// ---------------------------------------------------------------------------
// Fraction notation

std::string prettyPrint(const Partition& p) {
  return renderPartition(p, p.underlying().empty() || p.underlying().back() < 10);
}

std::string prettyPrint(const Bipartition& b) {
  return renderEntry(b, allSingleDigit(std::span<const Bipartition>(&b, 1)));
}

std::string prettyPrint(const BipartitionMatrix& m) {
  return renderMatrix(m, allSingleDigit(m.entries()));
}

std::string prettyPrint(const FormalProduct& p) {
  bool compact = true;
  for (const auto& f : p) compact = compact && allSingleDigit(f.entries());
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += '\n';
    out += renderMatrix(p[k], compact);
  }
  return out;
}

}  // namespace bipart
