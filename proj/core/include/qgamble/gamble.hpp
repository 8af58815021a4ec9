#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgamble/rational.hpp"

namespace qgamble {

/// Opaque event label. Equal labels in different algebras denote the same
/// event.
class EventId {
public:
    EventId() = default;
    explicit EventId(std::string label) : label_(std::move(label)) {}

    const std::string& label() const { return label_; }

    friend auto operator<=>(const EventId&, const EventId&) = default;
    friend bool operator==(const EventId&, const EventId&) = default;

private:
    std::string label_;
};

std::vector<EventId> event_ids(std::initializer_list<std::string_view> labels);

/// One measurement: an exhaustive, mutually exclusive list of distinct atoms.
class OutcomeAlgebra {
public:
    /// Throws Error(DuplicateAtomWithinAlgebra) or Error(TooFewAtoms).
    OutcomeAlgebra(std::string name, std::vector<EventId> atoms);
    explicit OutcomeAlgebra(std::vector<EventId> atoms) : OutcomeAlgebra({}, std::move(atoms)) {}

    const std::string& name() const { return name_; }
    const std::vector<EventId>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool contains(const EventId& e) const;

    /// Same atoms irrespective of order and name.
    bool same_partition(const OutcomeAlgebra& other) const;

    friend bool operator==(const OutcomeAlgebra&, const OutcomeAlgebra&) = default;

private:
    std::string name_;
    std::vector<EventId> atoms_;
};

struct SharedAtom {
    EventId event;
    std::vector<std::size_t> algebras;

    friend bool operator==(const SharedAtom&, const SharedAtom&) = default;
};

/// A finite family of outcome algebras over a common event space.
class Gamble {
public:
    const std::string& name() const { return name_; }
    const std::vector<OutcomeAlgebra>& algebras() const { return algebras_; }
    const OutcomeAlgebra& algebra(std::size_t k) const { return algebras_.at(k); }
    std::size_t algebra_count() const { return algebras_.size(); }

    /// Atoms in order of first appearance.
    const std::vector<EventId>& universe() const { return universe_; }
    bool has_event(const EventId& e) const { return index_.contains(e); }
    std::size_t event_index(const EventId& e) const;
    std::optional<std::size_t> find_algebra(std::string_view name) const;

    /// Indices of the algebras that contain `e`, ascending.
    const std::vector<std::size_t>& occurrences(const EventId& e) const;

    friend bool operator==(const Gamble& a, const Gamble& b) {
        return a.name_ == b.name_ && a.algebras_ == b.algebras_;
    }

private:
    friend Gamble build_gamble(std::string name, std::vector<OutcomeAlgebra> algebras);

    std::string name_;
    std::vector<OutcomeAlgebra> algebras_;
    std::vector<EventId> universe_;
    std::map<EventId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> occurrences_;
};

/// Drops duplicate partitions (first occurrence kept). Throws
/// Error(EmptyGamble) for an empty list.
Gamble build_gamble(std::string name, std::vector<OutcomeAlgebra> algebras);
inline Gamble build_gamble(std::vector<OutcomeAlgebra> algebras) {
    return build_gamble({}, std::move(algebras));
}

/// Every event occurring in two or more algebras, in universe order.
std::vector<SharedAtom> shared_atoms(const Gamble& g);

/// A proposed book. Values need not be coherent. Per-algebra overrides let a
/// book give one event different values in different measurements, which is
/// how RULE 2 violations are expressed.
class ProbabilityAssignment {
public:
    ProbabilityAssignment() = default;
    explicit ProbabilityAssignment(std::map<EventId, Rational> values) : values_(std::move(values)) {}

    void set(const EventId& e, Rational value) { values_[e] = std::move(value); }
    void set_in(std::size_t algebra, const EventId& e, Rational value);

    bool has(const EventId& e) const { return values_.contains(e); }
    /// Throws Error(MissingEvent).
    const Rational& value(const EventId& e) const;
    /// Override for `algebra` if present, else the plain value.
    const Rational& value_in(std::size_t algebra, const EventId& e) const;

    const std::map<EventId, Rational>& values() const { return values_; }
    const std::map<std::pair<std::size_t, EventId>, Rational>& overrides() const { return overrides_; }
    bool is_context_free() const { return overrides_.empty(); }

    friend bool operator==(const ProbabilityAssignment&, const ProbabilityAssignment&) = default;

private:
    std::map<EventId, Rational> values_;
    std::map<std::pair<std::size_t, EventId>, Rational> overrides_;
};

/// sum_i c_i p(E_i) + constant, with zero coefficients never stored.
class LinearFunctional {
public:
    LinearFunctional() = default;
    explicit LinearFunctional(std::map<EventId, Rational> coefficients, Rational constant = 0);

    /// Unit-coefficient sum over `events`.
    static LinearFunctional sum_of(const std::vector<EventId>& events);

    void add_term(const EventId& e, const Rational& coefficient);
    void add_constant(const Rational& c) { constant_ += c; }

    const std::map<EventId, Rational>& coefficients() const { return coefficients_; }
    const Rational& constant() const { return constant_; }
    Rational coefficient(const EventId& e) const;
    bool is_zero() const { return coefficients_.empty() && constant_.is_zero(); }

    std::string to_string() const;

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

private:
    std::map<EventId, Rational> coefficients_;
    Rational constant_;
};

/// Exact value of `f` under `p`. Throws Error(MissingEvent).
Rational evaluate(const LinearFunctional& f, const ProbabilityAssignment& p);

} // namespace qgamble
