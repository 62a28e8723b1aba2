#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct DegeneracyError : Error { using Error::Error; };
struct ZeroDivision : Error { using Error::Error; };
struct EmbeddingError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct InversionError : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };
struct LookupError : Error { using Error::Error; };

struct SingularError : Error {
    SingularError(const std::string& what, std::size_t rank)
        : Error(what + " (rank " + std::to_string(rank) + ")"), rank(rank) {}
    std::size_t rank;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t col)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what),
          line(line), col(col) {}
    std::size_t line, col;
};

}  // namespace elnet
