// Exception types shared by every module.
//
// Semantic outcomes (a fragment violation, a missing model) are data, not
// errors. Exceptions are reserved for malformed input and refused requests.

#ifndef U1_ERRORS_HPP
#define U1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace u1 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that does not follow a grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

// Well-formed text or AST that disagrees with a vocabulary or an invariant
// (arity mismatch, unknown symbol, duplicate quantified variable, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class StructureErrorKind {
  kMalformed,
  kEmptyDomain,
  kDuplicateElement,
  kUnknownRelation,
  kInvalidArity,
  kArityMismatch,
  kElementOutsideDomain,
  kVocabularyMismatch,
  kTooLarge,
};

const char* to_string(StructureErrorKind kind);

class StructureError : public Error {
 public:
  StructureError(StructureErrorKind kind, const std::string& message);
  StructureErrorKind kind() const { return kind_; }

 private:
  StructureErrorKind kind_;
};

// Evaluation preconditions (unbound free variable, vocabulary mismatch).
class EvalError : public Error {
 public:
  using Error::Error;
};

// A request outside the fragment an operation supports, e.g. Kleene star or
// number restrictions handed to the star-free translation.
class FragmentGateError : public Error {
 public:
  using Error::Error;
};

// find_model refusals: free variables, cell limit exceeded.
class SearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace u1

#endif  // U1_ERRORS_HPP
