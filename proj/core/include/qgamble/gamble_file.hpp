#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgamble/born.hpp"
#include "qgamble/coloring.hpp"
#include "qgamble/error.hpp"
#include "qgamble/fixtures.hpp"
#include "qgamble/gamble.hpp"
#include "qgamble/realization.hpp"

namespace qgamble {

/// Diagnostic carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

struct NamedState {
    std::string name;
    State state;

    friend bool operator==(const NamedState&, const NamedState&) = default;
};

struct NamedFunctional {
    std::string name;
    LinearFunctional functional;

    friend bool operator==(const NamedFunctional&, const NamedFunctional&) = default;
};

/// In-memory form of a `.gamble` file.
///
/// ```
/// gamble "name" dim 3 field real
/// event E1 = span [1 0 2]
/// algebra B1 = { E1 E2 F2 }
/// state PSI = vec [1 0 2]
/// state MIX = density [1/2 0 ; 0 1/2]
/// basevar A1 B1
/// label E1 = +A1 -B1
/// functional U = E1 + 1/2 E8 - 1
/// ```
///
/// Scalars are integers, `p/q` rationals, or Gaussian rationals `a+bi`;
/// decimal points are rejected. `#` starts a comment.
struct GambleFile {
    Gamble gamble;
    std::optional<Realization> realization;
    std::vector<NamedState> states;
    std::optional<BaseVariableScheme> scheme;
    std::vector<NamedFunctional> functionals;

    const State* find_state(std::string_view name) const;
    const LinearFunctional* find_functional(std::string_view name) const;
};

/// Throws ParseError with code SyntaxError or SemanticError.
GambleFile parse_gamble_file(std::string_view text);

/// Canonical text; parse_gamble_file(serialize(x)) reproduces x exactly.
std::string serialize(const GambleFile& file);

GambleFile to_gamble_file(const Fixture& fixture);

/// Sums and differences of event names with optional rational coefficients
/// and constants, e.g. `E1 + E8` or `2 E1 - 1/2 F3 + 1`. Throws ParseError.
LinearFunctional parse_functional(std::string_view text, const Gamble& g);

/// Book file: one `p EVENT = VALUE` or `p EVENT @ ALGEBRA = VALUE` per line.
/// Throws ParseError.
ProbabilityAssignment parse_book(std::string_view text, const Gamble& g);

} // namespace qgamble
