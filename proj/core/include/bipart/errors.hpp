#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bipart {

/// Broad failure classes. The CLI maps these onto its exit codes.
enum class ErrorKind {
  Domain,      // operation precondition on an otherwise well-formed value
  Validation,  // bipartition-matrix constraint violated
  Schema,      // document shape is wrong
  Syntax,      // document is not parseable JSON
  Budget,      // equalizer search bound exceeded
  Internal,    // invariant of the library itself broken
};

const char* toString(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Machine-readable identifier, e.g. "RowInputOverlap" or "NotASubset".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

/// A violated bipartition-matrix constraint. `location()` holds 1-based
/// coordinates: (row, col1, col2) for row constraints and (col, row1, row2)
/// for column constraints.
class ValidationError : public Error {
 public:
  ValidationError(std::string code, std::vector<std::size_t> location,
                  const std::string& message)
      : Error(ErrorKind::Validation, std::move(code), message),
        location_(std::move(location)) {}

  const std::vector<std::size_t>& location() const noexcept { return location_; }

 private:
  std::vector<std::size_t> location_;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(ErrorKind::Schema, "SchemaError", message), path_(std::move(path)) {}

  /// JSON pointer to the offending node.
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Syntax, "SyntaxError", message), position_(position) {}

  /// Byte offset at which parsing failed.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(std::uint64_t budget, const std::string& message)
      : Error(ErrorKind::Budget, "SearchBudgetExceeded", message), budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

inline Error domainError(std::string code, const std::string& message) {
  return Error(ErrorKind::Domain, std::move(code), message);
}

inline Error internalError(std::string code, const std::string& message) {
  return Error(ErrorKind::Internal, std::move(code), message);
}

}  // namespace bipart
