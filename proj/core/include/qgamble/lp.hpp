#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgamble/gamble.hpp"
#include "qgamble/realization.hpp"

namespace qgamble {

/// lhs(p) = rhs, with a short note on where the row comes from.
struct Equality {
    LinearFunctional lhs;
    Rational rhs;
    std::string origin;
};

/// RULE 1 and RULE 2 as linear equalities over one nonnegative variable per
/// event. Shared atoms are unified into a single variable, so only join
/// identities and pins need explicit rows beyond the per-algebra sums.
struct ConstraintSystem {
    std::vector<EventId> variables;
    std::vector<Equality> equalities;
    std::vector<Equality> extra_equalities;

    std::size_t row_count() const { return equalities.size() + extra_equalities.size(); }
    bool has_variable(const EventId& e) const;
    /// Pins p(e) = 1.
    void pin_certain(const EventId& e);
    /// True iff every variable is nonnegative and every row holds exactly.
    bool satisfied_by(const ProbabilityAssignment& p) const;
};

ConstraintSystem constraints_from_gamble(const Gamble& g, const std::vector<JoinIdentity>& identities = {});

enum class Direction { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

std::string_view to_string(LPStatus s);

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::optional<Rational> value;
    std::optional<ProbabilityAssignment> witness;

    bool optimal() const { return status == LPStatus::Optimal; }
};

/// Exact two-phase simplex over the rationals with Bland's rule. The witness
/// is re-checked against `cs` before returning. Throws Error(MissingEvent)
/// when `f` mentions an event that is not a variable.
LPResult optimize(const ConstraintSystem& cs, const LinearFunctional& f, Direction direction);

/// Feasibility of `cs` alone.
bool feasible(const ConstraintSystem& cs);

/// optimize() with p(e) = 1 pinned for each event in `certain`. Throws
/// Error(MissingEvent) for a pin that is not an atom of `g`.
LPResult bound_with_certainty(const Gamble& g, const std::vector<EventId>& certain, const LinearFunctional& f,
                              Direction direction, const std::vector<JoinIdentity>& identities = {});

} // namespace qgamble
