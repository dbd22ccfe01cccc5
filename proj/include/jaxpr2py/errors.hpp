#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jaxpr2py {

/// Position inside the source text. Line and column are 1-based.
struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t col = 1;
};

class DecompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LexError : public DecompileError {
 public:
  LexError(const std::string& message, SourcePos pos);

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class ParseError : public DecompileError {
 public:
  ParseError(const std::string& message, SourcePos pos,
             std::vector<std::string> expected = {});

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

/// A well-formed equation that cannot be rendered (bad parameters, unknown
/// dtype, construct unavailable in the selected dialect).
class TranslationError : public DecompileError {
 public:
  TranslationError(std::string primitive, const std::string& message);

  const std::string& primitive() const { return primitive_; }

 private:
  std::string primitive_;
};

/// No rule is registered for the primitive. The message always contains the
/// primitive name verbatim.
class UnknownOperator : public TranslationError {
 public:
  explicit UnknownOperator(const std::string& primitive);
  UnknownOperator(const std::string& primitive, const std::string& detail);
};

}  // namespace jaxpr2py
