#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qgamble/coloring.hpp"
#include "qgamble/error.hpp"
#include "qgamble/fixtures.hpp"
#include "qgamble/lp.hpp"

namespace qgamble {
namespace {

EventId ev(const char* s) { return EventId(s); }

// Oracle: walk every 0/1 assignment of the universe.
std::size_t brute_force_colorings(const Gamble& g) {
    const auto& u = g.universe();
    std::size_t count = 0;
    for (unsigned long mask = 0; mask < (1UL << u.size()); ++mask) {
        bool ok = true;
        for (const auto& alg : g.algebras()) {
            int ones = 0;
            for (const auto& a : alg.atoms()) ones += (mask >> g.event_index(a)) & 1UL;
            ok = ok && ones == 1;
        }
        count += ok ? 1 : 0;
    }
    return count;
}

TEST(Coloring, Figure1HasFive) {
    const Gamble g = figure1_gamble().gamble;
    const auto cs = enumerate_colorings(g);
    EXPECT_EQ(cs.size(), 5U);
    EXPECT_EQ(brute_force_colorings(g), 5U);
    std::set<std::vector<EventId>> distinct;
    for (const auto& c : cs) {
        EXPECT_TRUE(is_coloring(g, c));
        distinct.insert(c.true_atoms(g));
    }
    EXPECT_EQ(distinct.size(), 5U);
    EXPECT_TRUE(distinct.contains(event_ids({"E1"})));
}

TEST(Coloring, Uncertainty13MatchesOracle) {
    const Gamble g = uncertainty13_gamble().gamble;
    EXPECT_EQ(enumerate_colorings(g).size(), brute_force_colorings(g));
}

TEST(Coloring, Limit) {
    EXPECT_EQ(enumerate_colorings(figure1_gamble().gamble, 2).size(), 2U);
}

TEST(Coloring, KernaghanHasNone) {
    const Gamble g = kernaghan20_gamble().gamble;
    EXPECT_TRUE(enumerate_colorings(g).empty());
    EXPECT_EQ(brute_force_colorings(g), 0U);
    const auto cert = parity_certificate(g);
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->algebra_subset.size(), 11U);
    EXPECT_TRUE(check_certificate(g, *cert));
    for (const auto& [e, n] : cert->occurrence_counts) {
        EXPECT_EQ(n, e.label().front() == 'E' ? 4U : 2U) << e.label();
    }
}

// The B11 row as printed repeats F12 and omits F13; that variant is both
// colorable and unrealizable.
TEST(Coloring, PrintedKernaghanVariant) {
    Fixture f = kernaghan20_gamble();
    std::vector<OutcomeAlgebra> algebras = f.gamble.algebras();
    algebras[10] = OutcomeAlgebra("B11", event_ids({"F6", "F12", "F17", "F18"}));
    const Gamble printed = build_gamble(algebras);
    EXPECT_FALSE(enumerate_colorings(printed).empty());
    EXPECT_FALSE(parity_certificate(printed));
    EXPECT_FALSE(verify_realization(printed, f.realization).passes(PossibilityGroup::Partition));
}

TEST(Coloring, FigureOneHasNoCertificate) {
    EXPECT_FALSE(parity_certificate(figure1_gamble().gamble));
}

TEST(Certificate, RejectsBadWitness) {
    const Gamble g = kernaghan20_gamble().gamble;
    ParityCertificate even{{0, 1}, {}};
    EXPECT_FALSE(check_certificate(g, even));
}

// Certificates on random gambles must never coexist with a coloring.
TEST(Certificate, SoundOnRandomGambles) {
    std::mt19937_64 rng(2718);
    int certified = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> alg_count(1, 5), size(2, 3), atom(0, 6);
        std::vector<OutcomeAlgebra> algebras;
        auto name = [](int a) { return EventId("X" + std::to_string(a)); };
        for (int k = alg_count(rng); k > 0; --k) {
            std::set<int> picked;
            const auto want = static_cast<std::size_t>(size(rng));
            while (picked.size() < want) picked.insert(atom(rng));
            std::vector<EventId> atoms;
            for (int a : picked) atoms.push_back(name(a));
            algebras.emplace_back(std::move(atoms));
        }
        if (trial % 2 == 0) {
            // Plant an odd cycle of two-atom algebras.
            const int a = atom(rng), b = (a + 1) % 7, c = (a + 2) % 7;
            algebras.emplace_back(std::vector{name(a), name(b)});
            algebras.emplace_back(std::vector{name(b), name(c)});
            algebras.emplace_back(std::vector{name(c), name(a)});
        }
        const Gamble g = build_gamble(algebras);
        const auto cert = parity_certificate(g);
        const std::size_t n = brute_force_colorings(g);
        EXPECT_EQ(enumerate_colorings(g).size(), n);
        if (cert) {
            ++certified;
            EXPECT_TRUE(check_certificate(g, *cert));
            EXPECT_EQ(n, 0U);
        }
    }
    EXPECT_GT(certified, 0);
}

TEST(Scheme, Validation) {
    const Gamble g = build_gamble({OutcomeAlgebra(event_ids({"a", "na"}))});
    BaseVariableScheme s;
    s.variables = {"A"};
    s.labels[ev("a")] = {{0, true}};
    s.labels[ev("na")] = {{0, false}};
    EXPECT_NO_THROW(check_scheme(s, g));
    s.labels[ev("na")] = {{0, true}};
    EXPECT_THROW(check_scheme(s, g), Error);
    s.labels[ev("na")] = {{0, false}, {0, false}};
    EXPECT_THROW(check_scheme(s, g), Error);
}

TEST(ClassicalMax, GhzIsThree) {
    const Fixture f = ghz_mermin_gamble();
    const auto best = classical_max(*f.scheme, f.functionals.at("P16"));
    EXPECT_EQ(best.value, Rational(3));
    EXPECT_EQ(best.value, f.expected.at("P16 classical"));
    ASSERT_EQ(best.witness.size(), 6U);
    Rational recount = 0;
    for (const auto& e : ghz_sixteen_events()) {
        if (f.scheme->holds(e, best.witness)) recount += 1;
    }
    EXPECT_EQ(recount, Rational(3));
}

// Oracle for the GHZ bound: each of the four rows is an odd/even parity
// condition on a product of three signs, and the four products multiply to
// +1, so at most three parities can match.
TEST(ClassicalMax, GhzParityOracle) {
    const Fixture f = ghz_mermin_gamble();
    int best = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        auto sign = [&](unsigned v) { return ((mask >> v) & 1U) != 0U ? 1 : -1; };
        // Row 1 wants A1 B1 C1 = -1, the others want +1.
        int hits = 0;
        hits += sign(0) * sign(1) * sign(2) == -1;
        hits += sign(0) * sign(4) * sign(5) == 1;
        hits += sign(3) * sign(1) * sign(5) == 1;
        hits += sign(3) * sign(4) * sign(2) == 1;
        best = std::max(best, hits);
    }
    EXPECT_EQ(Rational(best), classical_max(*f.scheme, f.functionals.at("P16")).value);
}

TEST(ClassicalMax, SingleProductRowIsOne) {
    const Fixture f = ghz_mermin_gamble();
    const auto sixteen = ghz_sixteen_events();
    const std::vector<EventId> row(sixteen.begin(), sixteen.begin() + 4);
    EXPECT_EQ(classical_max(*f.scheme, LinearFunctional::sum_of(row)).value, Rational(1));
}

TEST(ClassicalMax, RelabelingSymmetry) {
    // Negating one base variable in every label permutes the assignments, so
    // the maximum is unchanged.
    const Fixture f = ghz_mermin_gamble();
    for (std::size_t v = 0; v < f.scheme->variables.size(); ++v) {
        BaseVariableScheme flipped = *f.scheme;
        for (auto& [e, lits] : flipped.labels) {
            for (auto& l : lits) {
                if (l.variable == v) l.positive = !l.positive;
            }
        }
        EXPECT_EQ(classical_max(flipped, f.functionals.at("P16")).value, Rational(3)) << v;
    }
}

TEST(ClassicalMax, BoundedByPolytope) {
    const Fixture f = ghz_mermin_gamble();
    const auto ids = derived_identities(f.gamble, f.realization);
    const auto lp = bound_with_certainty(f.gamble, {}, f.functionals.at("P16"), Direction::Maximize, ids);
    ASSERT_TRUE(lp.optimal());
    EXPECT_LE(classical_max(*f.scheme, f.functionals.at("P16")).value, *lp.value);
}

TEST(ClassicalMax, Errors) {
    const Fixture f = ghz_mermin_gamble();
    try {
        classical_max(*f.scheme, LinearFunctional::sum_of({ev("S")}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnlabeledAtomInSupport);
    }
    BaseVariableScheme big;
    for (int k = 0; k < 21; ++k) big.variables.push_back("V" + std::to_string(k));
    EXPECT_THROW(classical_max(big, LinearFunctional{}), Error);
}

} // namespace
} // namespace qgamble
