#include "fca/errors.hpp"

namespace fca {

const char* to_string(ParseErrc code) {
    switch (code) {
        case ParseErrc::MalformedHeader: return "MalformedHeader";
        case ParseErrc::DimensionMismatch: return "DimensionMismatch";
        case ParseErrc::IllegalCell: return "IllegalCell";
        case ParseErrc::MalformedRow: return "MalformedRow";
        case ParseErrc::NonBinaryCell: return "NonBinaryCell";
        case ParseErrc::InvalidName: return "InvalidName";
    }
    return "ParseError";
}

const char* to_string(GuardErrc code) {
    switch (code) {
        case GuardErrc::ConceptBudgetExceeded: return "ConceptBudgetExceeded";
        case GuardErrc::ContextTooLarge: return "ContextTooLarge";
        case GuardErrc::IntentTooLarge: return "IntentTooLarge";
    }
    return "GuardError";
}

const char* to_string(DomainErrc code) {
    switch (code) {
        case DomainErrc::EmptyContext: return "EmptyContext";
        case DomainErrc::AttributeNotInIntent: return "AttributeNotInIntent";
        case DomainErrc::ZeroVariance: return "ZeroVariance";
        case DomainErrc::LengthMismatch: return "LengthMismatch";
        case DomainErrc::EmptyInput: return "EmptyInput";
        case DomainErrc::InvalidSpec: return "InvalidSpec";
    }
    return "DomainError";
}

IllegalCellError::IllegalCellError(char cell, std::size_t row, std::size_t col, std::size_t line)
    : ParseError(ParseErrc::IllegalCell, line,
                 "line " + std::to_string(line) + ": illegal cell '" + std::string(1, cell) + "' at row " +
                     std::to_string(row + 1) + ", column " + std::to_string(col + 1)),
      cell_(cell),
      row_(row),
      col_(col) {}

}  // namespace fca
