#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgamble/born.hpp"
#include "qgamble/coloring.hpp"
#include "qgamble/gamble.hpp"
#include "qgamble/realization.hpp"

namespace qgamble {

/// A builtin gamble with its realization and the values the test suite
/// expects from it.
struct Fixture {
    std::string name;
    Gamble gamble;
    Realization realization;
    std::map<std::string, State> states;
    std::optional<BaseVariableScheme> scheme;
    std::map<std::string, LinearFunctional> functionals;
    std::map<std::string, Rational> expected;
};

/// Two spin-1 triples sharing the z axis: <E1,E2,E3>, <E1,E4,E5>.
Fixture figure1_gamble();

/// Seven triples over thirteen rays of R^3, bounding p(E1) + p(E8) by 3/2.
Fixture uncertainty13_gamble();

/// Eleven four-outcome measurements over twenty rays of R^4 with no
/// two-valued coloring.
Fixture kernaghan20_gamble();

/// Mermin's GHZ version: four product measurements of sigma_x/sigma_y on
/// three qubits plus four six-outcome measurements through the GHZ ray S.
Fixture ghz_mermin_gamble();

std::vector<std::string> fixture_names();
/// Throws std::out_of_range for an unknown name.
Fixture fixture_by_name(std::string_view name);

/// Labels of the sixteen GHZ events whose probabilities sum to P.
std::vector<EventId> ghz_sixteen_events();

} // namespace qgamble
