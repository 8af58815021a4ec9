#include "qgamble/gamble.hpp"

#include <algorithm>
#include <set>

#include "qgamble/error.hpp"

namespace qgamble {

std::vector<EventId> event_ids(std::initializer_list<std::string_view> labels) {
    std::vector<EventId> out;
    out.reserve(labels.size());
    for (auto l : labels) out.emplace_back(std::string(l));
    return out;
}

OutcomeAlgebra::OutcomeAlgebra(std::string name, std::vector<EventId> atoms)
    : name_(std::move(name)), atoms_(std::move(atoms)) {
    if (atoms_.size() < 2) {
        throw Error(Errc::TooFewAtoms, "algebra " + name_ + " needs at least two atoms");
    }
    std::set<EventId> seen;
    for (const auto& a : atoms_) {
        if (!seen.insert(a).second) {
            throw Error(Errc::DuplicateAtomWithinAlgebra,
                        "atom " + a.label() + " repeated in algebra " + name_);
        }
    }
}

bool OutcomeAlgebra::contains(const EventId& e) const {
    return std::find(atoms_.begin(), atoms_.end(), e) != atoms_.end();
}

bool OutcomeAlgebra::same_partition(const OutcomeAlgebra& other) const {
    if (atoms_.size() != other.atoms_.size()) return false;
    std::set<EventId> a(atoms_.begin(), atoms_.end());
    std::set<EventId> b(other.atoms_.begin(), other.atoms_.end());
    return a == b;
}

std::size_t Gamble::event_index(const EventId& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw Error(Errc::MissingEvent, "unknown event " + e.label());
    return it->second;
}

std::optional<std::size_t> Gamble::find_algebra(std::string_view name) const {
    for (std::size_t k = 0; k < algebras_.size(); ++k) {
        if (algebras_[k].name() == name) return k;
    }
    return std::nullopt;
}

const std::vector<std::size_t>& Gamble::occurrences(const EventId& e) const {
    return occurrences_[event_index(e)];
}

Gamble build_gamble(std::string name, std::vector<OutcomeAlgebra> algebras) {
    if (algebras.empty()) throw Error(Errc::EmptyGamble, "a gamble needs at least one algebra");
    Gamble g;
    g.name_ = std::move(name);
    for (auto& alg : algebras) {
        const bool duplicate = std::any_of(g.algebras_.begin(), g.algebras_.end(),
                                           [&](const OutcomeAlgebra& o) { return o.same_partition(alg); });
        if (!duplicate) g.algebras_.push_back(std::move(alg));
    }
    for (std::size_t k = 0; k < g.algebras_.size(); ++k) {
        for (const auto& a : g.algebras_[k].atoms()) {
            auto [it, inserted] = g.index_.emplace(a, g.universe_.size());
            if (inserted) {
                g.universe_.push_back(a);
                g.occurrences_.emplace_back();
            }
            g.occurrences_[it->second].push_back(k);
        }
    }
    return g;
}

std::vector<SharedAtom> shared_atoms(const Gamble& g) {
    std::vector<SharedAtom> out;
    for (const auto& e : g.universe()) {
        const auto& occ = g.occurrences(e);
        if (occ.size() >= 2) out.push_back({e, occ});
    }
    return out;
}

void ProbabilityAssignment::set_in(std::size_t algebra, const EventId& e, Rational value) {
    overrides_[{algebra, e}] = std::move(value);
}

const Rational& ProbabilityAssignment::value(const EventId& e) const {
    auto it = values_.find(e);
    if (it == values_.end()) throw Error(Errc::MissingEvent, "no value for event " + e.label());
    return it->second;
}

const Rational& ProbabilityAssignment::value_in(std::size_t algebra, const EventId& e) const {
    auto it = overrides_.find({algebra, e});
    if (it != overrides_.end()) return it->second;
    return value(e);
}

LinearFunctional::LinearFunctional(std::map<EventId, Rational> coefficients, Rational constant)
    : constant_(std::move(constant)) {
    for (auto& [e, c] : coefficients) add_term(e, c);
}

LinearFunctional LinearFunctional::sum_of(const std::vector<EventId>& events) {
    LinearFunctional f;
    for (const auto& e : events) f.add_term(e, 1);
    return f;
}

void LinearFunctional::add_term(const EventId& e, const Rational& coefficient) {
    auto& c = coefficients_[e];
    c += coefficient;
    if (c.is_zero()) coefficients_.erase(e);
}

Rational LinearFunctional::coefficient(const EventId& e) const {
    auto it = coefficients_.find(e);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

std::string LinearFunctional::to_string() const {
    std::string out;
    for (const auto& [e, c] : coefficients_) {
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != Rational(1)) out += mag.to_string() + " ";
        out += e.label();
    }
    if (!constant_.is_zero() || out.empty()) {
        if (out.empty()) {
            out = constant_.to_string();
        } else {
            out += constant_.sign() < 0 ? " - " : " + ";
            out += constant_.abs().to_string();
        }
    }
    return out;
}

Rational evaluate(const LinearFunctional& f, const ProbabilityAssignment& p) {
    Rational total = f.constant();
    for (const auto& [e, c] : f.coefficients()) total += c * p.value(e);
    return total;
}

} // namespace qgamble
