#include "capsula/error.hpp"

namespace capsula {

const char* errc_name(Errc code) {
  switch (code) {
  case Errc::MalformedDocument: return "MalformedDocument";
  case Errc::UnknownKind: return "UnknownKind";
  case Errc::DanglingEdge: return "DanglingEdge";
  case Errc::CycleDetected: return "CycleDetected";
  case Errc::InvalidGraph: return "InvalidGraph";
  case Errc::SyntaxError: return "SyntaxError";
  case Errc::UndefinedVariable: return "UndefinedVariable";
  case Errc::FileNotFound: return "FileNotFound";
  case Errc::UnknownLibrary: return "UnknownLibrary";
  case Errc::UnknownFunction: return "UnknownFunction";
  case Errc::TypeMismatch: return "TypeMismatch";
  case Errc::NonFiniteOutput: return "NonFiniteOutput";
  case Errc::UnknownTarget: return "UnknownTarget";
  case Errc::InconsistentTrace: return "InconsistentTrace";
  case Errc::MissingInput: return "MissingInput";
  case Errc::HashMismatch: return "HashMismatch";
  case Errc::EmitUnparseable: return "EmitUnparseable";
  case Errc::EmptySelection: return "EmptySelection";
  case Errc::DuplicateTarget: return "DuplicateTarget";
  case Errc::MissingFile: return "MissingFile";
  case Errc::IOFailure: return "IOFailure";
  case Errc::CorruptArchive: return "CorruptArchive";
  case Errc::DestNotEmpty: return "DestNotEmpty";
  case Errc::EnvironmentError: return "EnvironmentError";
  }
  return "UnknownError";
}

static std::string compose(Errc code, const std::string& message, int line) {
  std::string out = errc_name(code);
  if (line > 0) {
    out += ": line ";
    out += std::to_string(line);
  }
  out += ": ";
  out += message;
  return out;
}

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(compose(code, message, line)), code_(code), line_(line) {}

void fail(Errc code, const std::string& message, int line) {
  throw Error(code, message, line);
}

} // namespace capsula
