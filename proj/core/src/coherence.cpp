#include "qgamble/coherence.hpp"

#include <algorithm>

#include "qgamble/error.hpp"

namespace qgamble {

bool CoherenceReport::has_rule1() const {
    return std::any_of(violations.begin(), violations.end(),
                       [](const CoherenceViolation& v) { return v.rule == Rule::Rule1; });
}

bool CoherenceReport::has_rule2() const {
    return std::any_of(violations.begin(), violations.end(),
                       [](const CoherenceViolation& v) { return v.rule == Rule::Rule2; });
}

namespace {

std::string algebra_label(const Gamble& g, std::size_t k) {
    const auto& name = g.algebra(k).name();
    return name.empty() ? "algebra " + std::to_string(k + 1) : name;
}

Rational algebra_sum(const ProbabilityAssignment& p, const Gamble& g, std::size_t k) {
    Rational total;
    for (const auto& a : g.algebra(k).atoms()) total += p.value_in(k, a);
    return total;
}

} // namespace

CoherenceReport audit(const ProbabilityAssignment& p, const Gamble& g, const std::vector<JoinIdentity>& identities) {
    CoherenceReport report;
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        for (const auto& a : g.algebra(k).atoms()) {
            const Rational& v = p.value_in(k, a);
            if (v.sign() < 0) {
                report.violations.push_back({Rule::Rule1, k,
                                             algebra_label(g, k) + ": p(" + a.label() + ") = " + v.to_string() +
                                                 " is negative"});
            }
        }
        const Rational total = algebra_sum(p, g, k);
        if (total != Rational(1)) {
            report.violations.push_back({Rule::Rule1, k,
                                         algebra_label(g, k) + ": atoms sum to " + total.to_string()});
        }
    }
    for (const auto& shared : shared_atoms(g)) {
        const auto& occ = shared.algebras;
        const Rational& first = p.value_in(occ.front(), shared.event);
        for (std::size_t i = 1; i < occ.size(); ++i) {
            const Rational& other = p.value_in(occ[i], shared.event);
            if (other != first) {
                report.violations.push_back({Rule::Rule2, std::nullopt,
                                             "p(" + shared.event.label() + ") is " + first.to_string() + " in " +
                                                 algebra_label(g, occ.front()) + " but " + other.to_string() +
                                                 " in " + algebra_label(g, occ[i])});
            }
        }
    }
    for (const auto& id : identities) {
        Rational left, right;
        for (const auto& e : id.left) left += p.value_in(id.left_algebra, e);
        for (const auto& e : id.right) right += p.value_in(id.right_algebra, e);
        if (left != right) {
            report.violations.push_back({Rule::Rule2, std::nullopt,
                                         describe(id, g) + " but values are " + left.to_string() + " and " +
                                             right.to_string()});
        }
    }
    return report;
}

Rational payoff(const DutchBook& book, const ProbabilityAssignment& p, const Gamble& g, const EventId& outcome) {
    Rational total;
    for (const auto& a : g.algebra(book.algebra).atoms()) {
        auto it = book.stakes.find(a);
        if (it == book.stakes.end()) continue;
        const Rational indicator = a == outcome ? Rational(1) : Rational(0);
        total += it->second * (indicator - p.value_in(book.algebra, a));
    }
    return total;
}

DutchBookOutcome dutch_book(const ProbabilityAssignment& p, const Gamble& g,
                            const std::vector<JoinIdentity>& identities) {
    const CoherenceReport report = audit(p, g, identities);
    if (report.coherent()) throw Error(Errc::NoViolation, "the book is coherent; no Dutch book exists");

    DutchBookOutcome out;
    if (!report.has_rule1()) {
        out.rule2_only = true;
        out.note = "only RULE 2 is violated; a single-shot game does not force a sure loss";
        return out;
    }

    // Prefer an algebra whose sum is off; fall back to a negative value.
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        const Rational total = algebra_sum(p, g, k);
        if (total == Rational(1)) continue;
        DutchBook book{k, {}, (total - 1).abs()};
        const Rational stake = total > Rational(1) ? Rational(1) : Rational(-1);
        for (const auto& a : g.algebra(k).atoms()) book.stakes.emplace(a, stake);
        out.note = algebra_label(g, k) + " sums to " + total.to_string();
        out.book = std::move(book);
        return out;
    }
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        const EventId* worst = nullptr;
        for (const auto& a : g.algebra(k).atoms()) {
            if (p.value_in(k, a).sign() < 0 && (!worst || p.value_in(k, a) < p.value_in(k, *worst))) worst = &a;
        }
        if (!worst) continue;
        DutchBook book{k, {{*worst, Rational(-1)}}, p.value_in(k, *worst).abs()};
        out.note = algebra_label(g, k) + " gives " + worst->label() + " a negative value";
        out.book = std::move(book);
        return out;
    }
    return out;  // unreachable: has_rule1() implies one of the cases above
}

} // namespace qgamble
