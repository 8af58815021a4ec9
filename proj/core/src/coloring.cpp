#include "qgamble/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "qgamble/error.hpp"

namespace qgamble {

std::vector<EventId> Coloring::true_atoms(const Gamble& g) const {
    std::vector<EventId> out;
    for (const auto& e : g.universe()) {
        auto it = truth.find(e);
        if (it != truth.end() && it->second) out.push_back(e);
    }
    return out;
}

ProbabilityAssignment Coloring::as_assignment() const {
    ProbabilityAssignment p;
    for (const auto& [e, t] : truth) p.set(e, t ? 1 : 0);
    return p;
}

bool is_coloring(const Gamble& g, const Coloring& c) {
    for (const auto& e : g.universe()) {
        if (!c.truth.contains(e)) return false;
    }
    for (const auto& alg : g.algebras()) {
        const auto trues = std::count_if(alg.atoms().begin(), alg.atoms().end(),
                                         [&](const EventId& e) { return c.truth.at(e); });
        if (trues != 1) return false;
    }
    return true;
}

namespace {

enum class Value : unsigned char { Unknown, False, True };

class ColoringSearch {
public:
    ColoringSearch(const Gamble& g, std::size_t limit) : g_(g), limit_(limit) {
        for (const auto& alg : g.algebras()) {
            std::vector<std::size_t> idx;
            for (const auto& a : alg.atoms()) idx.push_back(g.event_index(a));
            atoms_.push_back(std::move(idx));
        }
        for (const auto& e : g.universe()) occurrences_.push_back(g.occurrences(e));
        order_.resize(g.algebra_count());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::vector<std::size_t> shared(g.algebra_count());
        for (std::size_t k = 0; k < g.algebra_count(); ++k) {
            for (auto a : atoms_[k]) shared[k] += occurrences_[a].size() >= 2 ? 1 : 0;
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return shared[a] > shared[b]; });
    }

    std::vector<Coloring> run() {
        if (limit_ == 0) return {};
        std::vector<Value> values(g_.universe().size(), Value::Unknown);
        search(0, values);
        return std::move(found_);
    }

private:
    bool done() const { return found_.size() >= limit_; }

    // Sets atom true and every atom sharing an algebra with it false.
    bool make_true(std::size_t atom, std::vector<Value>& values) const {
        values[atom] = Value::True;
        for (auto k : occurrences_[atom]) {
            for (auto other : atoms_[k]) {
                if (other == atom) continue;
                if (values[other] == Value::True) return false;
                values[other] = Value::False;
            }
        }
        return true;
    }

    bool viable(const std::vector<Value>& values) const {
        for (const auto& algebra : atoms_) {
            const bool open = std::any_of(algebra.begin(), algebra.end(),
                                          [&](std::size_t a) { return values[a] != Value::False; });
            if (!open) return false;
        }
        return true;
    }

    void search(std::size_t depth, std::vector<Value>& values) {
        if (done()) return;
        if (depth == order_.size()) {
            Coloring c;
            for (std::size_t a = 0; a < values.size(); ++a) c.truth.emplace(g_.universe()[a], values[a] == Value::True);
            found_.push_back(std::move(c));
            return;
        }
        const auto& algebra = atoms_[order_[depth]];
        const bool decided = std::any_of(algebra.begin(), algebra.end(),
                                         [&](std::size_t a) { return values[a] == Value::True; });
        if (decided) {
            search(depth + 1, values);
            return;
        }
        for (auto atom : algebra) {
            if (values[atom] != Value::Unknown) continue;
            std::vector<Value> next = values;
            if (!make_true(atom, next) || !viable(next)) continue;
            search(depth + 1, next);
            if (done()) return;
        }
    }

    const Gamble& g_;
    std::size_t limit_;
    std::vector<std::vector<std::size_t>> atoms_;
    std::vector<std::vector<std::size_t>> occurrences_;
    std::vector<std::size_t> order_;
    std::vector<Coloring> found_;
};

ParityCertificate make_certificate(const Gamble& g, std::vector<std::size_t> subset) {
    ParityCertificate cert{std::move(subset), {}};
    for (auto k : cert.algebra_subset) {
        for (const auto& a : g.algebra(k).atoms()) ++cert.occurrence_counts[a];
    }
    return cert;
}

} // namespace

std::vector<Coloring> enumerate_colorings(const Gamble& g, std::size_t limit) {
    return ColoringSearch(g, limit).run();
}

bool check_certificate(const Gamble& g, const ParityCertificate& cert) {
    if (cert.algebra_subset.size() % 2 == 0) return false;
    std::map<EventId, std::size_t> counts;
    for (auto k : cert.algebra_subset) {
        if (k >= g.algebra_count()) return false;
        for (const auto& a : g.algebra(k).atoms()) ++counts[a];
    }
    for (const auto& [e, n] : counts) {
        if (n % 2 != 0) return false;
    }
    return true;
}

std::optional<ParityCertificate> parity_certificate(const Gamble& g) {
    const std::size_t m = g.algebra_count();
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (auto cert = make_certificate(g, all); check_certificate(g, cert)) return cert;

    // Rows: one per atom (incidence mod 2, rhs 0) plus the parity row (all
    // ones, rhs 1). Unknowns: algebra membership bits.
    std::vector<std::vector<unsigned char>> rows;
    for (const auto& e : g.universe()) {
        std::vector<unsigned char> row(m + 1, 0);
        for (auto k : g.occurrences(e)) row[k] ^= 1;
        rows.push_back(std::move(row));
    }
    std::vector<unsigned char> parity(m + 1, 1);
    rows.push_back(std::move(parity));

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q != r && rows[q][c]) {
                for (std::size_t k = c; k <= m; ++k) rows[q][k] ^= rows[r][k];
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < rows.size(); ++q) {
        if (rows[q][m]) return std::nullopt;  // inconsistent
    }
    // Free variables at 0; pivots read off the rhs.
    std::vector<std::size_t> subset;
    std::vector<unsigned char> x(m, 0);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rows[i][m];
    for (std::size_t k = 0; k < m; ++k) {
        if (x[k]) subset.push_back(k);
    }
    auto cert = make_certificate(g, std::move(subset));
    if (!check_certificate(g, cert)) return std::nullopt;
    return cert;
}

std::optional<std::size_t> BaseVariableScheme::find_variable(std::string_view name) const {
    for (std::size_t k = 0; k < variables.size(); ++k) {
        if (variables[k] == name) return k;
    }
    return std::nullopt;
}

bool BaseVariableScheme::holds(const EventId& atom, const std::vector<bool>& assignment) const {
    auto it = labels.find(atom);
    if (it == labels.end()) {
        throw Error(Errc::UnlabeledAtomInSupport, "atom " + atom.label() + " has no base-variable label");
    }
    return std::all_of(it->second.begin(), it->second.end(),
                       [&](const Literal& l) { return assignment[l.variable] == l.positive; });
}

std::string BaseVariableScheme::describe(const EventId& atom) const {
    std::string out;
    for (const auto& l : labels.at(atom)) {
        if (!out.empty()) out += ' ';
        out += (l.positive ? "+" : "-") + variables.at(l.variable);
    }
    return out;
}

void check_scheme(const BaseVariableScheme& scheme, const Gamble& g) {
    for (const auto& [e, lits] : scheme.labels) {
        std::vector<std::size_t> vars;
        for (const auto& l : lits) {
            if (l.variable >= scheme.variables.size()) {
                throw Error(Errc::InvalidScheme, "label of " + e.label() + " uses an undeclared variable");
            }
            vars.push_back(l.variable);
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
            throw Error(Errc::InvalidScheme, "label of " + e.label() + " repeats a base variable");
        }
    }
    auto exclusive = [&](const std::vector<Literal>& a, const std::vector<Literal>& b) {
        return std::any_of(a.begin(), a.end(), [&](const Literal& x) {
            return std::any_of(b.begin(), b.end(),
                               [&](const Literal& y) { return x.variable == y.variable && x.positive != y.positive; });
        });
    };
    for (const auto& alg : g.algebras()) {
        const auto& atoms = alg.atoms();
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            auto li = scheme.labels.find(atoms[i]);
            if (li == scheme.labels.end()) continue;
            for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                auto lj = scheme.labels.find(atoms[j]);
                if (lj == scheme.labels.end()) continue;
                if (!exclusive(li->second, lj->second)) {
                    throw Error(Errc::InvalidScheme, atoms[i].label() + " and " + atoms[j].label() +
                                                         " are not mutually exclusive");
                }
            }
        }
    }
}

ClassicalMax classical_max(const BaseVariableScheme& scheme, const LinearFunctional& f) {
    for (const auto& [e, c] : f.coefficients()) {
        if (!scheme.labels.contains(e)) {
            throw Error(Errc::UnlabeledAtomInSupport, "atom " + e.label() + " has no base-variable label");
        }
    }
    const std::size_t n = scheme.variables.size();
    if (n > kMaxBaseVariables) throw Error(Errc::InvalidScheme, "too many base variables to enumerate");

    std::optional<ClassicalMax> best;
    std::vector<bool> assignment(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        // Most significant variable first, so the all-true assignment is
        // visited first and ties resolve to the lexicographically largest.
        for (std::size_t v = 0; v < n; ++v) assignment[v] = !((bits >> (n - 1 - v)) & 1U);
        Rational total = f.constant();
        for (const auto& [e, c] : f.coefficients()) {
            if (scheme.holds(e, assignment)) total += c;
        }
        if (!best || total > best->value) best = ClassicalMax{std::move(total), assignment};
    }
    return *best;
}

} // namespace qgamble
