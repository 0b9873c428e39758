#pragma once

#include <stdexcept>
#include <string>

namespace lindef {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch final : Error { using Error::Error; };
struct CompositionNonzero final : Error { using Error::Error; };
struct VertexOutOfRange final : Error { using Error::Error; };
struct NonDisjointJoin final : Error { using Error::Error; };
struct FullSimplex final : Error { using Error::Error; };
struct EmptyComplex final : Error { using Error::Error; };
struct BadParams final : Error { using Error::Error; };
struct BuiltinValidationFailed final : Error { using Error::Error; };
struct FieldMismatch final : Error { using Error::Error; };
struct AmbientMismatch final : Error { using Error::Error; };
struct ZeroModule final : Error { using Error::Error; };
struct IndexOutOfRange final : Error { using Error::Error; };
struct NotMinimal final : Error { using Error::Error; };
struct PreconditionFailed final : Error { using Error::Error; };
struct ParseError final : Error { using Error::Error; };

// Raised when two routes that must agree (ld via the linear part vs. via the
// Ext tower, Betti tables from different formulas) disagree.  Always a bug.
struct OracleMismatch final : Error { using Error::Error; };

}  // namespace lindef
