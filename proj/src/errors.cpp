#include "u1/errors.hpp"

namespace u1 {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

const char* to_string(StructureErrorKind kind) {
  switch (kind) {
    case StructureErrorKind::kMalformed: return "malformed";
    case StructureErrorKind::kEmptyDomain: return "empty-domain";
    case StructureErrorKind::kDuplicateElement: return "duplicate-element";
    case StructureErrorKind::kUnknownRelation: return "unknown-relation";
    case StructureErrorKind::kInvalidArity: return "invalid-arity";
    case StructureErrorKind::kArityMismatch: return "arity-mismatch";
    case StructureErrorKind::kElementOutsideDomain: return "element-outside-domain";
    case StructureErrorKind::kVocabularyMismatch: return "vocabulary-mismatch";
    case StructureErrorKind::kTooLarge: return "too-large";
  }
  return "unknown";
}

StructureError::StructureError(StructureErrorKind kind, const std::string& message)
    : Error(message), kind_(kind) {}

}  // namespace u1
