#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fca {

enum class ParseErrc {
    MalformedHeader,
    DimensionMismatch,
    IllegalCell,
    MalformedRow,
    NonBinaryCell,
    InvalidName,
};

const char* to_string(ParseErrc code);

/// Thrown by the context readers. `line` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrc code, std::size_t line, const std::string& what)
        : std::runtime_error(what), code_(code), line_(line) {}

    ParseErrc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrc code_;
    std::size_t line_;
};

/// An 'X'/'.' grid cell holding anything else. Row and column are 0-based.
class IllegalCellError : public ParseError {
public:
    IllegalCellError(char cell, std::size_t row, std::size_t col, std::size_t line);

    char cell() const noexcept { return cell_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    char cell_;
    std::size_t row_;
    std::size_t col_;
};

enum class GuardErrc {
    ConceptBudgetExceeded,
    ContextTooLarge,
    IntentTooLarge,
};

const char* to_string(GuardErrc code);

/// A size guard tripped (concept budget, oracle limits, stability's |B| cap).
class GuardError : public std::runtime_error {
public:
    GuardError(GuardErrc code, const std::string& what, std::optional<std::size_t> concept_id = std::nullopt)
        : std::runtime_error(what), code_(code), concept_id_(concept_id) {}

    GuardErrc code() const noexcept { return code_; }
    std::optional<std::size_t> concept_id() const noexcept { return concept_id_; }

private:
    GuardErrc code_;
    std::optional<std::size_t> concept_id_;
};

enum class DomainErrc {
    EmptyContext,
    AttributeNotInIntent,
    ZeroVariance,
    LengthMismatch,
    EmptyInput,
    InvalidSpec,
};

const char* to_string(DomainErrc code);

class DomainError : public std::invalid_argument {
public:
    DomainError(DomainErrc code, const std::string& what) : std::invalid_argument(what), code_(code) {}

    DomainErrc code() const noexcept { return code_; }

private:
    DomainErrc code_;
};

}  // namespace fca
