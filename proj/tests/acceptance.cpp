// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qgamble/born.hpp"
#include "qgamble/coherence.hpp"
#include "qgamble/coloring.hpp"
#include "qgamble/error.hpp"
#include "qgamble/fixtures.hpp"
#include "qgamble/lp.hpp"
#include "qgamble/realization.hpp"

using namespace qgamble;

namespace {

EventId ev(const char* s) { return EventId(s); }

// Collects failed expectations; an empty list means the criterion passed.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream s;
            s << what << ": got " << got << ", want " << want;
            failures_.push_back(s.str());
        }
    }
    void note(const std::string& s) { notes_.push_back(s); }

    const std::vector<std::string>& failures() const { return failures_; }
    std::string summary() const {
        std::string out;
        for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
        return out;
    }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string ms(double s) { return std::to_string(static_cast<long>(s * 1000)) + " ms"; }

void uncertainty_bound(Checker& c) {
    const Fixture f = uncertainty13_gamble();
    const auto start = std::chrono::steady_clock::now();
    const ConstraintSystem cs = constraints_from_gamble(f.gamble);
    const LPResult r = optimize(cs, LinearFunctional::sum_of({ev("E1"), ev("E8")}), Direction::Maximize);
    const double t = seconds_since(start);
    c.expect(r.optimal(), "LP optimal");
    if (!r.optimal()) return;
    c.equal(*r.value, Rational(3, 2), "max p(E1)+p(E8)");
    c.expect(r.witness && cs.satisfied_by(*r.witness), "witness satisfies RULE 1 and RULE 2");
    if (r.witness) c.equal(evaluate(LinearFunctional::sum_of({ev("E1"), ev("E8")}), *r.witness), Rational(3, 2), "witness value");
    c.expect(t < 1.0, "runtime under 1 s");
    c.note("max = " + r.value->to_string() + " in " + ms(t));
}

void conditional_uncertainty(Checker& c) {
    const Fixture f = uncertainty13_gamble();
    const LPResult r =
        bound_with_certainty(f.gamble, {ev("E1")}, LinearFunctional::sum_of({ev("E8")}), Direction::Maximize);
    c.expect(r.optimal(), "LP optimal");
    if (!r.optimal()) return;
    c.equal(*r.value, Rational(1, 2), "max p(E8) given p(E1)=1");
    c.expect(r.witness && r.witness->value(ev("E1")) == Rational(1), "witness has p(E1)=1");
    c.note("max p(E8) = " + r.value->to_string());
}

void kochen_specker(Checker& c) {
    const Fixture f = kernaghan20_gamble();
    const auto start = std::chrono::steady_clock::now();
    const auto colorings = enumerate_colorings(f.gamble);
    const auto cert = parity_certificate(f.gamble);
    const double t = seconds_since(start);
    c.equal(colorings.size(), std::size_t{0}, "colorings");
    c.expect(cert.has_value(), "parity certificate found");
    if (cert) {
        c.equal(cert->algebra_subset.size(), std::size_t{11}, "certificate size");
        c.expect(check_certificate(f.gamble, *cert), "certificate verifies");
        for (const auto& [e, n] : cert->occurrence_counts) {
            c.equal(n, e.label().front() == 'E' ? std::size_t{4} : std::size_t{2}, "count of " + e.label());
        }
        c.equal(cert->occurrence_counts.size(), std::size_t{20}, "atoms counted");
    }
    c.expect(t < 1.0, "runtime under 1 s");
    c.note("0 colorings, odd 11-set with counts {4,4,2,...,2} in " + ms(t));
}

void ghz_quantum(Checker& c) {
    const Fixture f = ghz_mermin_gamble();
    const auto ba = born_assignment(f.states.at("GHZ"), f.gamble, f.realization);
    c.equal(ba.assignment.value(ev("S")), Rational(1), "p(S)");
    for (const auto& e : ghz_sixteen_events()) c.equal(ba.assignment.value(e), Rational(1, 4), "p(" + e.label() + ")");
    const Rational q = evaluate(f.functionals.at("P16"), ba.assignment);
    c.equal(q, Rational(4), "16-event functional");
    const auto ids = derived_identities(f.gamble, f.realization);
    const auto lo = bound_with_certainty(f.gamble, {ev("S")}, f.functionals.at("P16"), Direction::Minimize, ids);
    const auto hi = bound_with_certainty(f.gamble, {ev("S")}, f.functionals.at("P16"), Direction::Maximize, ids);
    c.expect(lo.optimal() && hi.optimal(), "pinned LP optimal");
    if (lo.optimal() && hi.optimal()) {
        c.equal(*lo.value, Rational(4), "LP min with p(S)=1");
        c.equal(*hi.value, Rational(4), "LP max with p(S)=1");
        c.note("Born value " + q.to_string() + ", LP [" + lo.value->to_string() + ", " + hi.value->to_string() + "]");
    }
}

void ghz_classical(Checker& c) {
    const Fixture f = ghz_mermin_gamble();
    c.expect(f.scheme.has_value(), "base-variable scheme");
    if (!f.scheme) return;
    c.equal(f.scheme->variables.size(), std::size_t{6}, "base variables (64 assignments)");
    const auto best = classical_max(*f.scheme, f.functionals.at("P16"));
    c.equal(best.value, Rational(3), "classical max");
    Rational recount = 0;
    for (const auto& e : ghz_sixteen_events()) recount += f.scheme->holds(e, best.witness) ? 1 : 0;
    c.equal(recount, best.value, "witness attains the maximum");
    std::string w;
    for (std::size_t v = 0; v < best.witness.size(); ++v) {
        w += (best.witness[v] ? "+" : "-") + f.scheme->variables[v];
    }
    c.note("classical max " + best.value.to_string() + " at " + w + " vs quantum 4");
}

void possibility(Checker& c) {
    std::size_t perturbations = 0;
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture_by_name(name);
        const auto report = verify_realization(f.gamble, f.realization);
        c.expect(report.passes(), name + " passes");
        c.expect(report.passes(PossibilityGroup::Incompatibility), name + " algebras pairwise incompatible");
        for (const auto& e : f.gamble.universe()) {
            const Subspace& s = f.realization.at(e);
            if (s.rank() != 1) continue;
            const Vector v = s.basis()[0];
            bool flipped = false;
            for (std::size_t k = 0; k < v.dim() && !flipped; ++k) {
                Realization r = f.realization;
                r.assign(e, Subspace::ray(v + Vector::unit(v.dim(), k)));
                if (r.at(e) == s) continue;
                flipped = !verify_realization(f.gamble, r).passes();
            }
            c.expect(flipped, name + ": perturbing " + e.label() + " flips the verdict");
            ++perturbations;
        }
    }
    const Fixture g = ghz_mermin_gamble();
    for (int k = 1; k <= 4; ++k) {
        const EventId d("D" + std::to_string(k));
        c.equal(g.realization.at(d).rank(), std::size_t{3}, "dim " + d.label());
    }
    c.note("4 fixtures possible, dim D = 3, " + std::to_string(perturbations) + " perturbations all rejected");
}

void gleason_direction(Checker& c) {
    std::mt19937_64 rng(20260214);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::size_t states = 0;
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture_by_name(name);
        const bool complex = f.realization.field() == Field::Complex;
        const auto ids = derived_identities(f.gamble, f.realization);
        for (int trial = 0; trial < 100; ++trial) {
            Vector v(f.realization.ambient_dim());
            do {
                for (std::size_t k = 0; k < v.dim(); ++k) {
                    v[k] = Scalar(Rational(entry(rng)), Rational(complex ? entry(rng) : 0));
                }
            } while (v.is_zero());
            const State s = State::pure(v);
            ProbabilityAssignment p;
            for (const auto& e : f.gamble.universe()) p.set(e, born(s, f.realization.at(e)));
            c.expect(audit(p, f.gamble, ids).coherent(), name + ": state " + v.to_string() + " coherent");
            ++states;
        }
        // born_assignment runs the same audit internally.
        try {
            born_assignment(State::pure(Vector::unit(f.realization.ambient_dim(), 0)), f.gamble, f.realization);
        } catch (const std::exception& e) {
            c.expect(false, name + ": born_assignment threw " + e.what());
        }
    }
    c.note(std::to_string(states) + " random states, every RULE 1 sum and RULE 2 identity exact");
}

void luders_rule(Checker& c) {
    const Fixture f = ghz_mermin_gamble();
    const Subspace& s = f.realization.at(ev("S"));
    const State post = luders(State::maximally_mixed(8), s);
    c.expect(post.density_matrix() == projector(s).matrix(), "I/8 conditioned on S is the GHZ projector");
    c.expect(post.density_matrix() == f.states.at("GHZ").density_matrix(), "and equals the GHZ state");
    c.expect(luders(post, s).density_matrix() == post.density_matrix(), "conditioning twice on S");
    for (const auto& e : f.gamble.universe()) {
        const State once = luders(State::maximally_mixed(8), f.realization.at(e));
        c.expect(luders(once, f.realization.at(e)).density_matrix() == once.density_matrix(),
                 "idempotent on " + e.label());
    }
    bool raised = false;
    try {
        luders(f.states.at("GHZ"), f.realization.at(ev("A1B1C1")));
    } catch (const Error& e) {
        raised = e.code() == Errc::ZeroProbabilityCondition;
    }
    c.expect(raised, "p = 0 condition raises ZeroProbabilityCondition");
    c.note("GHZ projector recovered, idempotent on all 37 events, p = 0 rejected");
}

void dutch_book_criterion(Checker& c) {
    const Gamble g = build_gamble({OutcomeAlgebra("T", event_ids({"A", "B", "C"}))});
    ProbabilityAssignment p({{ev("A"), Rational(1, 2)}, {ev("B"), Rational(1, 2)}, {ev("C"), Rational(1, 2)}});
    const auto db = dutch_book(p, g);
    c.expect(db.book.has_value(), "book constructed");
    if (db.book) {
        for (const auto& outcome : g.universe()) {
            // Brute force: pay stake * price for every bet, collect the stake
            // on the bet that wins.
            Rational net = 0;
            for (const auto& [a, stake] : db.book->stakes) {
                net -= stake * p.value(a);
                if (a == outcome) net += stake;
            }
            c.equal(net, -db.book->guaranteed_loss, "payoff if " + outcome.label());
            c.equal(payoff(*db.book, p, g, outcome), net, "reported payoff if " + outcome.label());
        }
        c.equal(db.book->guaranteed_loss, Rational(1, 2), "guaranteed loss");
    }

    const Fixture f = figure1_gamble();
    ProbabilityAssignment q;
    for (const auto& e : f.gamble.universe()) q.set(e, Rational(1, 3));
    q.set_in(1, ev("E1"), Rational(1, 2));
    q.set(ev("E4"), Rational(1, 4));
    q.set(ev("E5"), Rational(1, 4));
    const auto none = dutch_book(q, f.gamble);
    c.expect(!none.book, "RULE 2-only violation yields no book");
    c.expect(none.rule2_only, "RULE 2-only flag set");
    if (db.book) c.note("sure loss " + db.book->guaranteed_loss.to_string() + " on each outcome; RULE 2-only flagged");
}

void polytope_containment(Checker& c) {
    const Gamble g = figure1_gamble().gamble;
    // Brute-force oracle: one true atom in each of the two triples.
    std::size_t oracle = 0;
    const auto& u = g.universe();
    for (unsigned long mask = 0; mask < (1UL << u.size()); ++mask) {
        ProbabilityAssignment p;
        for (std::size_t k = 0; k < u.size(); ++k) p.set(u[k], Rational(static_cast<long>((mask >> k) & 1UL)));
        bool one_each = true;
        for (const auto& alg : g.algebras()) {
            Rational sum = 0;
            for (const auto& a : alg.atoms()) sum += p.value(a);
            one_each = one_each && sum == Rational(1);
        }
        if (!one_each) continue;
        ++oracle;
        c.expect(audit(p, g).coherent(), "oracle coloring coherent");
    }
    const auto colorings = enumerate_colorings(g);
    c.equal(oracle, std::size_t{5}, "oracle colorings");
    c.equal(colorings.size(), oracle, "enumerated colorings");
    for (const auto& col : colorings) c.expect(audit(col.as_assignment(), g).coherent(), "coloring coherent");

    const Fixture f = ghz_mermin_gamble();
    const Rational classical = classical_max(*f.scheme, f.functionals.at("P16")).value;
    const auto lp = bound_with_certainty(f.gamble, {}, f.functionals.at("P16"), Direction::Maximize,
                                         derived_identities(f.gamble, f.realization));
    c.expect(lp.optimal(), "GHZ LP optimal");
    if (lp.optimal()) {
        c.expect(classical <= *lp.value, "classical max within LP max");
        c.equal(*lp.value, Rational(4), "GHZ LP max");
        c.note("5 colorings coherent; classical " + classical.to_string() + " <= LP " + lp.value->to_string());
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"uncertainty bound", uncertainty_bound},
        {"conditional uncertainty", conditional_uncertainty},
        {"Kochen-Specker", kochen_specker},
        {"GHZ quantum value", ghz_quantum},
        {"GHZ classical bound", ghz_classical},
        {"possibility criterion", possibility},
        {"Gleason direction", gleason_direction},
        {"Lueders conditioning", luders_rule},
        {"Dutch book", dutch_book_criterion},
        {"polytope containment", polytope_containment},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Checker c;
        try {
            criteria[k].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = c.failures().empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].title;
        if (ok) {
            std::cout << ": " << c.summary() << '\n';
        } else {
            std::cout << ": " << c.failures().front();
            if (c.failures().size() > 1) std::cout << " (+" << c.failures().size() - 1 << " more)";
            std::cout << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
