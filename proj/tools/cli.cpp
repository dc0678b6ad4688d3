#include "cli.hpp"

#include <bipart/dimension.hpp>
#include <bipart/embedding.hpp>
#include <bipart/equalizer.hpp>
#include <bipart/errors.hpp>
#include <bipart/factorization.hpp>
#include <bipart/serialization.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace bipart::cli {

namespace {

using nlohmann::ordered_json;

/// A problem with the command line itself.
struct UsageError {
  std::string message;
};

std::string readDocument(const std::string& name, std::istream& in) {
  if (name == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(name, std::ios::binary);
  if (!file) throw domainError("IOError", "cannot open '" + name + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

std::uint64_t parseBudget(const std::string& text, const std::string& source) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0) {
    throw UsageError{source + " must be a positive integer, got '" + text + "'"};
  }
  return value;
}

/// "1,2,3" -> {1, 2, 3}; the empty string is the empty set.
OrderedSet parseElementList(const std::string& text, const std::string& flag) {
  std::vector<Element> elements;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    Element value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError{flag + " expects comma-separated positive integers, got '" + text + "'"};
    }
    elements.push_back(value);
    start = comma + 1;
  }
  return OrderedSet(std::move(elements));
}

void reportError(std::ostream& err, const Error& e) {
  ordered_json j;
  j["error"] = toString(e.kind());
  j["code"] = e.code();
  j["message"] = e.what();
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) j["location"] = v->location();
  if (const auto* s = dynamic_cast<const SchemaError*>(&e)) j["path"] = s->path();
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) j["position"] = s->position();
  if (const auto* b = dynamic_cast<const SearchBudgetExceeded*>(&e)) j["budget"] = b->budget();
  err << j.dump() << '\n';
}

void reportPlain(std::ostream& err, const char* kind, const std::string& message) {
  ordered_json j;
  j["error"] = kind;
  j["code"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Budget: return kExitBudget;
    case ErrorKind::Internal: return kExitInternal;
    default: return kExitInvalid;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app("Dimension and factorization of bipartition matrices", "bipart");
  app.require_subcommand(1);

  bool pretty = false;
  std::string budgetFlag;
  app.add_flag("--pretty", pretty, "Print matrices, bipartitions and partitions in fraction notation");
  app.add_option("--budget", budgetFlag, "Equalizer search budget (default 2^24, or $" +
                                             std::string(kBudgetEnv) + ")");

  std::string file = "-";
  auto addCommand = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto withFile = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", file, std::string(what) + " document ('-' for standard input)");
    return sub;
  };

  CLI::App* validateCmd = withFile(addCommand("validate", "Check a matrix document"), "Matrix");
  CLI::App* dimCmd = withFile(addCommand("dim", "Row, column and entry dimension"), "Matrix");
  bool trace = false;
  dimCmd->add_flag("--trace", trace, "Also list terminating matrices and their contributions");
  CLI::App* factorCmd =
      withFile(addCommand("factor", "Indecomposable factorization of a matrix"), "Matrix");
  CLI::App* factorBipCmd = withFile(
      addCommand("factor-bipartition", "Elementary factorization of one bipartition"),
      "Bipartition");
  CLI::App* multiplyCmd =
      withFile(addCommand("multiply", "Recover a bipartition from its factors"), "Product");
  CLI::App* equalizersCmd = withFile(addCommand("equalizers", "Enumerate equalizers"), "Matrix");
  bool rowOnly = false;
  bool colOnly = false;
  auto* rowFlag = equalizersCmd->add_flag("--row", rowOnly, "Row equalizers only");
  auto* colFlag = equalizersCmd->add_flag("--col", colOnly, "Column equalizers only");
  rowFlag->excludes(colFlag);
  CLI::App* maximalCmd =
      withFile(addCommand("maximal-equalizer", "Select the maximal equalizer"), "Matrix");
  CLI::App* embedCmd = addCommand("embed", "Embedding partition of a subset in a superset");
  std::string superset;
  std::string subset;
  embedCmd->add_option("--superset", superset, "Comma-separated elements")->required();
  embedCmd->add_option("--subset", subset, "Comma-separated elements")->required();
  CLI::App* trrotCmd = withFile(addCommand("trrot", "Transpose-rotation of a matrix"), "Matrix");
  CLI::App* piCmd = withFile(addCommand("pi", "Drop empty biblocks and shrink null entries"),
                             "Matrix");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    reportPlain(err, "UsageError", e.what());
    return kExitInvalid;
  }

  try {
    SearchOptions search;
    if (const char* env = std::getenv(kBudgetEnv); env != nullptr && *env != '\0') {
      search.budget = parseBudget(env, kBudgetEnv);
    }
    if (!budgetFlag.empty()) search.budget = parseBudget(budgetFlag, "--budget");

    auto matrix = [&] { return parseMatrix(readDocument(file, in)); };
    auto emit = [&](const auto& value, auto&& json) {
      if (pretty) {
        std::string text = prettyPrint(value);
        if (text.empty() || text.back() != '\n') text += '\n';
        out << text;
      } else {
        out << json(value) << '\n';
      }
    };

    if (app.got_subcommand(validateCmd)) {
      matrix();
    } else if (app.got_subcommand(dimCmd)) {
      DimensionEngine engine({search, trace});
      const auto m = matrix();
      const auto report = engine.dimension(m);
      out << (trace ? emitReport(report, engine.trace()) : emitReport(report)) << '\n';
    } else if (app.got_subcommand(factorCmd)) {
      emit(indecomposableFactorization(matrix(), search),
           [](const FormalProduct& p) { return emitProduct(p); });
    } else if (app.got_subcommand(factorBipCmd)) {
      emit(factorElementary(parseBipartition(readDocument(file, in))),
           [](const FormalProduct& p) { return emitProduct(p); });
    } else if (app.got_subcommand(multiplyCmd)) {
      emit(multiply(parseProduct(readDocument(file, in))),
           [](const Bipartition& b) { return emitBipartition(b); });
    } else if (app.got_subcommand(equalizersCmd)) {
      const auto m = matrix();
      const auto found = rowOnly   ? rowEqualizers(m, search)
                         : colOnly ? columnEqualizers(m, search)
                                   : equalizers(m, search);
      out << emitEqualizers(found) << '\n';
    } else if (app.got_subcommand(maximalCmd)) {
      out << emitEqualizer(maximalEqualizer(matrix(), search)) << '\n';
    } else if (app.got_subcommand(embedCmd)) {
      emit(embeddingPartition(parseElementList(superset, "--superset"),
                              parseElementList(subset, "--subset")),
           [](const Partition& p) { return emitPartition(p); });
    } else if (app.got_subcommand(trrotCmd)) {
      emit(transposeRotation(matrix()), [](const BipartitionMatrix& m) { return emitMatrix(m); });
    } else if (app.got_subcommand(piCmd)) {
      emit(piReduce(matrix()), [](const BipartitionMatrix& m) { return emitMatrix(m); });
    }
    return kExitOk;
  } catch (const UsageError& e) {
    reportPlain(err, "UsageError", e.message);
    return kExitInvalid;
  } catch (const Error& e) {
    reportError(err, e);
    return exitCodeFor(e.kind());
  } catch (const std::exception& e) {
    reportPlain(err, "InternalError", e.what());
    return kExitInternal;
  }
}

}  // namespace bipart::cli
