#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qgamble/gamble.hpp"
#include "qgamble/linalg.hpp"

namespace qgamble {

enum class Field { Real, Complex };

std::string_view to_string(Field f);

/// Assignment of a subspace of one inner-product space to every event.
class Realization {
public:
    Realization(std::size_t ambient_dim, Field field) : ambient_dim_(ambient_dim), field_(field) {}

    /// Throws Error(DimMismatch) when the subspace lives elsewhere.
    void assign(const EventId& e, Subspace s);

    std::size_t ambient_dim() const { return ambient_dim_; }
    Field field() const { return field_; }
    bool has(const EventId& e) const { return subspaces_.contains(e); }
    /// Throws Error(UnmappedAtom).
    const Subspace& at(const EventId& e) const;
    const std::map<EventId, Subspace>& subspaces() const { return subspaces_; }

    friend bool operator==(const Realization& a, const Realization& b);

private:
    std::size_t ambient_dim_;
    Field field_;
    std::map<EventId, Subspace> subspaces_;
};

/// Join of `left` atoms in algebra `left_algebra` equals join of `right` atoms
/// in `right_algebra` as subspaces, with the shared EventIds removed from
/// both sides.
struct JoinIdentity {
    std::size_t left_algebra;
    std::vector<EventId> left;
    std::size_t right_algebra;
    std::vector<EventId> right;

    friend bool operator==(const JoinIdentity&, const JoinIdentity&) = default;
};

std::string describe(const JoinIdentity& id, const Gamble& g);

enum class PossibilityGroup { Partition, Identity, Incompatibility };

struct PossibilityViolation {
    PossibilityGroup group;
    std::string message;
};

struct PossibilityReport {
    std::vector<PossibilityViolation> violations;
    std::vector<JoinIdentity> derived_identities;

    bool passes(PossibilityGroup g) const;
    bool passes() const { return violations.empty(); }
    std::vector<std::string> messages(PossibilityGroup g) const;
};

/// Checks, for every algebra, that atoms are nonzero, pairwise orthogonal and
/// sum to the whole space; that shared EventIds resolve to one subspace; that
/// every two algebras contain an incompatible atom pair; and lists the join
/// identities implied by the realization. Throws Error(UnmappedAtom).
PossibilityReport verify_realization(const Gamble& g, const Realization& r);

/// Just the join identities (the PossibilityReport's last group).
std::vector<JoinIdentity> derived_identities(const Gamble& g, const Realization& r);

} // namespace qgamble
