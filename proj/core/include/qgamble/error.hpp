#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgamble {

enum class Errc {
    EmptyGamble,
    DuplicateAtomWithinAlgebra,
    TooFewAtoms,
    MissingEvent,
    DimMismatch,
    DependentBasis,
    NotOrthogonal,
    UnmappedAtom,
    InvalidRealization,
    InvalidState,
    ZeroProbabilityCondition,
    NoViolation,
    UnlabeledAtomInSupport,
    InvalidScheme,
    SyntaxError,
    SemanticError,
    DivisionByZero,
};

std::string_view to_string(Errc code) noexcept;

/// Base exception for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qgamble
