#pragma once

#include <stdexcept>
#include <string>

namespace qgen {

// Base for all library errors. The CLI maps DataError to exit code 2 and
// NumericError to exit code 3; usage errors (exit 1) never leave the CLI
// parser.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

// Malformed program text. `position` is a 0-based byte offset into the input.
struct SyntaxError : DataError {
    SyntaxError(const std::string& msg, std::size_t position)
        : DataError(msg + " (at offset " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

// Ill-typed expression. `path` is a /-separated argument index path from the root.
struct TypeError : DataError {
    TypeError(const std::string& msg, const std::string& path)
        : DataError(msg + " (at node " + path + ")"), path(path) {}
    std::string path;
};

// Lambda variable used outside a lambda body, or a nested lambda.
struct ScopeError : DataError {
    using DataError::DataError;
};

// topleft/bottomright of an empty location set.
struct EmptySetError : DataError {
    using DataError::DataError;
};

// No hypothesis is consistent with the board.
struct EmptySpaceError : DataError {
    using DataError::DataError;
};

// Question whose top-level type is not a valid answer type (LocSet/BoolSet).
struct UnsupportedAnswerTypeError : DataError {
    using DataError::DataError;
};

// Derivation state has no nonterminal left to expand.
struct CompleteStateError : DataError {
    using DataError::DataError;
};

// A production was applied that the action mask forbids.
struct IllegalActionError : DataError {
    using DataError::DataError;
};

// Asked for more questions than the candidate pool holds.
struct PoolTooSmallError : DataError {
    using DataError::DataError;
};

struct IoError : DataError {
    using DataError::DataError;
};

// Malformed record in a corpus/checkpoint/dump file. `line` is 1-based.
struct FormatError : DataError {
    FormatError(const std::string& msg, std::size_t line)
        : DataError(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

// Checkpoint or corpus written against a different rule table.
struct GrammarMismatchError : DataError {
    using DataError::DataError;
};

// Non-finite value encountered during training.
struct NonFiniteError : NumericError {
    using NumericError::NumericError;
};

struct TooFewBoardsError : DataError {
    using DataError::DataError;
};

}  // namespace qgen
