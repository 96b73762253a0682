#pragma once

#include <stdexcept>
#include <string>

namespace capsula {

enum class Errc {
  // provenance documents
  MalformedDocument,
  UnknownKind,
  DanglingEdge,
  CycleDetected,
  InvalidGraph,
  // minilang
  SyntaxError,
  UndefinedVariable,
  FileNotFound,
  UnknownLibrary,
  UnknownFunction,
  TypeMismatch,
  NonFiniteOutput,
  // curation
  UnknownTarget,
  InconsistentTrace,
  MissingInput,
  HashMismatch,
  EmitUnparseable,
  // capsules
  EmptySelection,
  DuplicateTarget,
  MissingFile,
  IOFailure,
  CorruptArchive,
  DestNotEmpty,
  EnvironmentError,
};

const char* errc_name(Errc code);

/// Toolkit-wide exception. `line` is a 1-based script or document line,
/// 0 when not applicable.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message, int line = 0);

  Errc code() const { return code_; }
  int line() const { return line_; }

private:
  Errc code_;
  int line_;
};

[[noreturn]] void fail(Errc code, const std::string& message, int line = 0);

} // namespace capsula
