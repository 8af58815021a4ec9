#include "qgamble/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qgamble/error.hpp"

namespace qgamble {

std::string_view to_string(LPStatus s) {
    switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

bool ConstraintSystem::has_variable(const EventId& e) const {
    return std::find(variables.begin(), variables.end(), e) != variables.end();
}

void ConstraintSystem::pin_certain(const EventId& e) {
    if (!has_variable(e)) throw Error(Errc::MissingEvent, "cannot pin unknown event " + e.label());
    LinearFunctional lhs;
    lhs.add_term(e, 1);
    extra_equalities.push_back({std::move(lhs), Rational(1), "p(" + e.label() + ") = 1"});
}

bool ConstraintSystem::satisfied_by(const ProbabilityAssignment& p) const {
    for (const auto& v : variables) {
        if (!p.has(v) || p.value(v).sign() < 0) return false;
    }
    auto holds = [&](const Equality& eq) { return evaluate(eq.lhs, p) == eq.rhs; };
    return std::all_of(equalities.begin(), equalities.end(), holds) &&
           std::all_of(extra_equalities.begin(), extra_equalities.end(), holds);
}

ConstraintSystem constraints_from_gamble(const Gamble& g, const std::vector<JoinIdentity>& identities) {
    ConstraintSystem cs;
    cs.variables = g.universe();
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        const auto& alg = g.algebra(k);
        const std::string name = alg.name().empty() ? "algebra " + std::to_string(k + 1) : alg.name();
        cs.equalities.push_back({LinearFunctional::sum_of(alg.atoms()), Rational(1), "RULE 1: " + name});
    }
    for (const auto& id : identities) {
        LinearFunctional lhs = LinearFunctional::sum_of(id.left);
        for (const auto& e : id.right) lhs.add_term(e, -1);
        cs.equalities.push_back({std::move(lhs), Rational(0), "RULE 2: " + describe(id, g)});
    }
    return cs;
}

namespace {

// Dense simplex tableau for: minimize c.x subject to A x = b, x >= 0.
class Simplex {
public:
    Simplex(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t structural)
        : structural_(structural) {
        const std::size_t m = rows.size();
        columns_ = structural_ + m;
        for (std::size_t r = 0; r < m; ++r) {
            if (rhs[r].sign() < 0) {
                for (auto& a : rows[r]) a = -a;
                rhs[r] = -rhs[r];
            }
            std::vector<Rational> row(columns_ + 1);
            std::copy(rows[r].begin(), rows[r].end(), row.begin());
            row[structural_ + r] = 1;
            row[columns_] = rhs[r];
            tableau_.push_back(std::move(row));
            basis_.push_back(structural_ + r);
        }
        allowed_.assign(columns_, true);
    }

    // Returns false when the system has no nonnegative solution.
    bool phase_one() {
        std::vector<Rational> cost(columns_);
        for (std::size_t j = structural_; j < columns_; ++j) cost[j] = 1;
        load_costs(cost);
        run();  // bounded below by 0
        if (!objective_value().is_zero()) return false;
        drive_out_artificials();
        for (std::size_t j = structural_; j < columns_; ++j) allowed_[j] = false;
        return true;
    }

    // False when unbounded below.
    bool phase_two(const std::vector<Rational>& structural_cost) {
        std::vector<Rational> cost(columns_);
        std::copy(structural_cost.begin(), structural_cost.end(), cost.begin());
        load_costs(cost);
        return run();
    }

    Rational objective_value() const { return -objective_.back(); }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(structural_);
        for (std::size_t r = 0; r < tableau_.size(); ++r) {
            if (basis_[r] < structural_) x[basis_[r]] = tableau_[r][columns_];
        }
        return x;
    }

private:
    void load_costs(const std::vector<Rational>& cost) {
        objective_.assign(columns_ + 1, Rational(0));
        for (std::size_t j = 0; j < columns_; ++j) objective_[j] = cost[j];
        for (std::size_t r = 0; r < tableau_.size(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j <= columns_; ++j) objective_[j] -= cb * tableau_[r][j];
        }
    }

    // Bland's rule: lowest-index improving column, lowest-index basic
    // variable among minimum ratios.
    bool run() {
        for (;;) {
            std::size_t entering = columns_;
            for (std::size_t j = 0; j < columns_; ++j) {
                if (allowed_[j] && objective_[j].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == columns_) return true;
            std::size_t leaving = tableau_.size();
            Rational best;
            for (std::size_t r = 0; r < tableau_.size(); ++r) {
                const Rational& a = tableau_[r][entering];
                if (a.sign() <= 0) continue;
                Rational ratio = tableau_[r][columns_] / a;
                if (leaving == tableau_.size() || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = std::move(ratio);
                }
            }
            if (leaving == tableau_.size()) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        const Rational inv = pr[col].inverse();
        for (auto& a : pr) {
            if (!a.is_zero()) a *= inv;
        }
        auto eliminate = [&](std::vector<Rational>& target) {
            if (target[col].is_zero()) return;
            const Rational factor = target[col];
            for (std::size_t j = 0; j <= columns_; ++j) {
                if (!pr[j].is_zero()) target[j] -= factor * pr[j];
            }
        };
        for (std::size_t r = 0; r < tableau_.size(); ++r) {
            if (r != row) eliminate(tableau_[r]);
        }
        eliminate(objective_);
        basis_[row] = col;
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < tableau_.size();) {
            if (basis_[r] < structural_) {
                ++r;
                continue;
            }
            std::size_t col = structural_;
            for (std::size_t j = 0; j < structural_; ++j) {
                if (!tableau_[r][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col == structural_) {
                // Redundant equality.
                tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                continue;
            }
            pivot(r, col);
            ++r;
        }
    }

    std::size_t structural_;
    std::size_t columns_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> objective_;
    std::vector<bool> allowed_;
};

Simplex make_simplex(const ConstraintSystem& cs, const std::map<EventId, std::size_t>& index) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto add = [&](const Equality& eq) {
        std::vector<Rational> row(cs.variables.size());
        for (const auto& [e, c] : eq.lhs.coefficients()) {
            auto it = index.find(e);
            if (it == index.end()) throw Error(Errc::MissingEvent, "constraint mentions unknown event " + e.label());
            row[it->second] += c;
        }
        rows.push_back(std::move(row));
        rhs.push_back(eq.rhs - eq.lhs.constant());
    };
    for (const auto& eq : cs.equalities) add(eq);
    for (const auto& eq : cs.extra_equalities) add(eq);
    return Simplex(std::move(rows), std::move(rhs), cs.variables.size());
}

std::map<EventId, std::size_t> index_variables(const ConstraintSystem& cs) {
    std::map<EventId, std::size_t> index;
    for (std::size_t k = 0; k < cs.variables.size(); ++k) index.emplace(cs.variables[k], k);
    return index;
}

} // namespace

LPResult optimize(const ConstraintSystem& cs, const LinearFunctional& f, Direction direction) {
    const auto index = index_variables(cs);
    std::vector<Rational> cost(cs.variables.size());
    for (const auto& [e, c] : f.coefficients()) {
        auto it = index.find(e);
        if (it == index.end()) throw Error(Errc::MissingEvent, "functional mentions unknown event " + e.label());
        cost[it->second] = direction == Direction::Maximize ? -c : c;
    }

    Simplex simplex = make_simplex(cs, index);
    LPResult result;
    if (!simplex.phase_one()) {
        result.status = LPStatus::Infeasible;
        return result;
    }
    if (!simplex.phase_two(cost)) {
        result.status = LPStatus::Unbounded;
        return result;
    }

    const auto x = simplex.solution();
    ProbabilityAssignment witness;
    for (std::size_t k = 0; k < cs.variables.size(); ++k) witness.set(cs.variables[k], x[k]);
    Rational value = simplex.objective_value();
    if (direction == Direction::Maximize) value = -value;
    value += f.constant();

    if (!cs.satisfied_by(witness) || evaluate(f, witness) != value) {
        throw std::logic_error("simplex witness failed exact re-verification");
    }
    result.status = LPStatus::Optimal;
    result.value = std::move(value);
    result.witness = std::move(witness);
    return result;
}

bool feasible(const ConstraintSystem& cs) {
    return optimize(cs, LinearFunctional{}, Direction::Maximize).optimal();
}

LPResult bound_with_certainty(const Gamble& g, const std::vector<EventId>& certain, const LinearFunctional& f,
                              Direction direction, const std::vector<JoinIdentity>& identities) {
    ConstraintSystem cs = constraints_from_gamble(g, identities);
    for (const auto& e : certain) {
        if (!g.has_event(e)) throw Error(Errc::MissingEvent, "certain event " + e.label() + " is not an atom");
        cs.pin_certain(e);
    }
    return optimize(cs, f, direction);
}

} // namespace qgamble
