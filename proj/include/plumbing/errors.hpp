#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plumbing {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : Error {
    using Error::Error;
};

// Position-carrying parse failure for the DSL / JSON front end.
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

struct SingularMatrix : Error { using Error::Error; };
struct SingularBlock : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct NotNegativeDefinite : Error { using Error::Error; };
struct NotWeaklyNegativeDefinite : Error { using Error::Error; };
struct ImpossibleForWeaklyNegDef : Error { using Error::Error; };
struct InvalidPair : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct MoveNotApplicable : Error { using Error::Error; };
struct NodeCreatingMoveRejected : Error { using Error::Error; };
struct NonTermination : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };
struct VertexNotInDiagram : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

}  // namespace plumbing
