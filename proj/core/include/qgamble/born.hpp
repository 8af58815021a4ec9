#pragma once

#include <optional>

#include "qgamble/coherence.hpp"
#include "qgamble/gamble.hpp"
#include "qgamble/linalg.hpp"
#include "qgamble/realization.hpp"

namespace qgamble {

/// Quantum state: an unnormalized nonzero vector, or a density operator with
/// rational entries and trace exactly 1.
class State {
public:
    enum class Kind { Pure, Density };

    /// Throws Error(InvalidState) for the zero vector.
    static State pure(Vector v);
    /// Throws Error(InvalidState) unless self-adjoint, positive semidefinite
    /// and of unit trace.
    static State density(Matrix w);
    /// No validation; for probing what checks reject.
    static State density_unchecked(Matrix w);
    static State maximally_mixed(std::size_t dim);

    Kind kind() const { return kind_; }
    bool is_pure() const { return kind_ == Kind::Pure; }
    std::size_t dim() const;
    const Vector& vector() const;   // pure only
    /// W itself, or v v^dagger / (v^dagger v) for a pure state.
    Matrix density_matrix() const;
    const Matrix& matrix() const;   // density only

    friend bool operator==(const State&, const State&) = default;

private:
    State(Kind kind, Vector v, Matrix w) : kind_(kind), vector_(std::move(v)), matrix_(std::move(w)) {}

    Kind kind_ = Kind::Pure;
    Vector vector_;
    Matrix matrix_;
};

/// Exact Hermitian positive-semidefiniteness test (LDL-style elimination).
bool is_positive_semidefinite(const Matrix& m);

/// p(H) = tr(W P_H); for a pure state <v, P_H v> / <v, v>. Throws
/// Error(DimMismatch).
Rational born(const State& state, const Subspace& s);
Rational born(const State& state, const Projector& p);

struct BornAssignment {
    ProbabilityAssignment assignment;
    State state;
    Realization realization;
};

/// Born value for every atom of `g`. The result is audited against RULE 1 and
/// RULE 2 (including join identities) before it is returned. Throws
/// Error(InvalidRealization).
BornAssignment born_assignment(const State& state, const Gamble& g, const Realization& r);

/// Born values of every algebra's atoms sum to exactly 1.
bool frame_check(const State& state, const Realization& r, const Gamble& g);

/// P W P / tr(W P); a pure state stays pure as P v. Throws
/// Error(ZeroProbabilityCondition).
State luders(const State& state, const Subspace& s);

/// Born assignment of the second gamble after conditioning on `outcome` of
/// the first.
BornAssignment sequential_condition(const EventId& outcome, const Realization& first, const State& state,
                                    const Gamble& second, const Realization& second_realization);

} // namespace qgamble
