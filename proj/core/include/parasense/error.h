#pragma once

#include <stdexcept>
#include <string>

namespace parasense {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorKind { kUsage = 1, kData = 2, kNumerical = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::kUsage, what) {}
};

// Malformed or inconsistent input data (corpora, alignments, TSV, model files).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::kData, what) {}
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& token, const std::string& why)
      : DataError("line " + std::to_string(line) + ": " + why + " at token \"" +
                  token + "\""),
        line_(line),
        token_(token) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

class ModelFormatError : public DataError {
 public:
  explicit ModelFormatError(const std::string& what)
      : DataError("model file: " + what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorKind::kNumerical, what) {}
};

}  // namespace parasense
