#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgamble/gamble.hpp"

namespace qgamble {

/// 0/1 truth values with exactly one true atom per algebra.
struct Coloring {
    std::map<EventId, bool> truth;

    std::vector<EventId> true_atoms(const Gamble& g) const;
    ProbabilityAssignment as_assignment() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Exactly one true atom in every algebra, every atom of `g` valued.
bool is_coloring(const Gamble& g, const Coloring& c);

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Complete backtracking search. Algebras are visited by descending count of
/// shared atoms (ties by index); within an algebra atoms are tried in
/// declaration order.
std::vector<Coloring> enumerate_colorings(const Gamble& g, std::size_t limit = kUnlimited);

/// An odd set of algebras covering every atom an even number of times: no
/// coloring can exist.
struct ParityCertificate {
    std::vector<std::size_t> algebra_subset;
    std::map<EventId, std::size_t> occurrence_counts;
};

bool check_certificate(const Gamble& g, const ParityCertificate& cert);

/// Tries the full set of algebras, then solves the GF(2) system for any odd
/// null combination.
std::optional<ParityCertificate> parity_certificate(const Gamble& g);

struct Literal {
    std::size_t variable;
    bool positive;

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Binary base variables and, for each labeled atom, the conjunction of
/// literals it denotes.
struct BaseVariableScheme {
    std::vector<std::string> variables;
    std::map<EventId, std::vector<Literal>> labels;

    std::optional<std::size_t> find_variable(std::string_view name) const;
    /// Conjunction value under `assignment` (indexed like `variables`).
    bool holds(const EventId& atom, const std::vector<bool>& assignment) const;
    std::string describe(const EventId& atom) const;

    friend bool operator==(const BaseVariableScheme&, const BaseVariableScheme&) = default;
};

/// Throws Error(InvalidScheme) if a label repeats a variable or two labels in
/// one algebra of `g` are not mutually exclusive.
void check_scheme(const BaseVariableScheme& scheme, const Gamble& g);

struct ClassicalMax {
    Rational value;
    std::vector<bool> witness;
};

inline constexpr std::size_t kMaxBaseVariables = 20;

/// Maximum of f over all deterministic base assignments, which equals the
/// maximum over classical probability spaces. Throws
/// Error(UnlabeledAtomInSupport) and Error(InvalidScheme) beyond
/// kMaxBaseVariables.
ClassicalMax classical_max(const BaseVariableScheme& scheme, const LinearFunctional& f);

} // namespace qgamble
