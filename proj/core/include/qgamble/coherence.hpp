#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgamble/gamble.hpp"
#include "qgamble/realization.hpp"

namespace qgamble {

enum class Rule { Rule1, Rule2 };

struct CoherenceViolation {
    Rule rule;
    std::optional<std::size_t> algebra;  // set for RULE 1 violations
    std::string message;
};

struct CoherenceReport {
    std::vector<CoherenceViolation> violations;

    bool coherent() const { return violations.empty(); }
    bool has_rule1() const;
    bool has_rule2() const;
};

/// RULE 1: values nonnegative and summing to 1 inside each algebra. RULE 2:
/// an event keeps one value across algebras, and every join identity holds.
CoherenceReport audit(const ProbabilityAssignment& p, const Gamble& g,
                      const std::vector<JoinIdentity>& identities = {});

/// Bets against one algebra. The bettor's net payoff when atom E occurs is
/// sum_a stake[a] * ([a == E] - p(a)).
struct DutchBook {
    std::size_t algebra;
    std::map<EventId, Rational> stakes;
    Rational guaranteed_loss;
};

/// Payoff of `book` to the bettor holding book values `p` when `outcome`
/// occurs.
Rational payoff(const DutchBook& book, const ProbabilityAssignment& p, const Gamble& g, const EventId& outcome);

struct DutchBookOutcome {
    std::optional<DutchBook> book;
    /// Only RULE 2 is violated: no single-shot sure loss exists.
    bool rule2_only = false;
    std::string note;
};

/// Unit stakes against the first RULE 1 violation: +1 on every atom when the
/// algebra overshoots 1, -1 when it undershoots, or -1 on the most negative
/// atom when the sum is 1. Throws Error(NoViolation) on a coherent book.
DutchBookOutcome dutch_book(const ProbabilityAssignment& p, const Gamble& g,
                            const std::vector<JoinIdentity>& identities = {});

} // namespace qgamble
