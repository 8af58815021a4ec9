#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qgamble/error.hpp"
#include "qgamble/fixtures.hpp"
#include "qgamble/gamble_file.hpp"

namespace qgamble {
namespace {

EventId ev(const char* s) { return EventId(s); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Errc parse_code(std::string_view text) {
    try {
        parse_gamble_file(text);
    } catch (const ParseError& e) {
        return e.code();
    }
    return Errc::NoViolation;
}

constexpr const char* kSmall = R"(# two triples
gamble "small" dim 3 field real
event E1 = span [0 0 1]
event E2 = span [1 0 0]
event E3 = span [0 1 0]
event E4 = span [1 1 0]
event E5 = span [1 -1 0]
algebra B1 = { E1 E2 E3 }
algebra B2 = { E1 E4 E5 }
state PSI = vec [1 0 2]
state MIX = density [1/2 0 0 ; 0 1/2 0 ; 0 0 0]
functional U = E1 + 1/2 E4 - 1
)";

TEST(GambleFile, ParsesSmallFile) {
    const GambleFile file = parse_gamble_file(kSmall);
    EXPECT_EQ(file.gamble.name(), "small");
    EXPECT_EQ(file.gamble.algebra_count(), 2U);
    ASSERT_TRUE(file.realization);
    EXPECT_EQ(file.realization->at(ev("E4")), Subspace::ray({1, 1, 0}));
    ASSERT_NE(file.find_state("MIX"), nullptr);
    EXPECT_FALSE(file.find_state("MIX")->is_pure());
    const LinearFunctional* u = file.find_functional("U");
    ASSERT_NE(u, nullptr);
    EXPECT_EQ(u->coefficient(ev("E4")), Rational(1, 2));
    EXPECT_EQ(u->constant(), Rational(-1));
    EXPECT_EQ(file.find_state("NONE"), nullptr);
}

TEST(GambleFile, ComplexEntries) {
    const GambleFile file = parse_gamble_file(
        "gamble \"q\" dim 2 field complex\n"
        "event P = span [1 i]\nevent M = span [1 -i]\n"
        "algebra Y = { P M }\n"
        "state W = density [1/2 -1/2i ; 1/2i 1/2]\n");
    EXPECT_EQ(file.realization->at(ev("P")), Subspace::ray({1, Scalar::i()}));
    EXPECT_TRUE(file.find_state("W")->density_matrix().is_hermitian());
}

TEST(GambleFile, RoundTripEveryFixture) {
    for (const auto& name : fixture_names()) {
        const GambleFile original = to_gamble_file(fixture_by_name(name));
        const std::string text = serialize(original);
        const GambleFile again = parse_gamble_file(text);
        EXPECT_EQ(again.gamble, original.gamble) << name;
        EXPECT_EQ(again.realization, original.realization) << name;
        EXPECT_EQ(again.states, original.states) << name;
        EXPECT_EQ(again.scheme, original.scheme) << name;
        EXPECT_EQ(again.functionals, original.functionals) << name;
        EXPECT_EQ(serialize(again), text) << name;
    }
}

TEST(GambleFile, GoldenFilesMatch) {
    for (const auto& name : fixture_names()) {
        const std::string golden = read_file(std::string(QGAMBLE_DATA_DIR) + "/fixtures/" + name + ".gamble");
        ASSERT_FALSE(golden.empty()) << name;
        EXPECT_EQ(serialize(to_gamble_file(fixture_by_name(name))), golden) << name;
    }
}

TEST(GambleFile, RejectsDecimals) {
    EXPECT_EQ(parse_code("gamble \"x\" dim 2\nevent A = span [0.5 1]\n"), Errc::SyntaxError);
}

TEST(GambleFile, UndeclaredEvent) {
    EXPECT_EQ(parse_code("gamble \"x\"\nevent A\nalgebra B = { A Z }\n"), Errc::SemanticError);
}

TEST(GambleFile, ReportsPosition) {
    try {
        parse_gamble_file("gamble \"x\"\nevent A\nalgebra B = { A Z }\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_GT(e.column(), 1U);
    }
}

TEST(GambleFile, StructuralErrors) {
    EXPECT_EQ(parse_code("event A\n"), Errc::SyntaxError);
    EXPECT_EQ(parse_code("gamble \"x\" dim 2\nevent A\n"), Errc::SemanticError);
    EXPECT_EQ(parse_code("gamble \"x\" dim 2\nevent A = span [1 0 0]\n"), Errc::SemanticError);
    EXPECT_EQ(parse_code("gamble \"x\"\nevent A\nevent B\nalgebra C = { A A B }\n"), Errc::SemanticError);
    EXPECT_EQ(parse_code("gamble \"x\"\nevent A\nalgebra C = { A\n"), Errc::SyntaxError);
    EXPECT_EQ(parse_code("gamble \"x\"\n"), Errc::SemanticError);
}

TEST(Functional, Parse) {
    const Gamble g = uncertainty13_gamble().gamble;
    const auto f = parse_functional("2 E1 - 1/2 F3 + 1", g);
    EXPECT_EQ(f.coefficient(ev("E1")), Rational(2));
    EXPECT_EQ(f.coefficient(ev("F3")), Rational(-1, 2));
    EXPECT_EQ(f.constant(), Rational(1));
    EXPECT_EQ(parse_functional("E1+E8", g), LinearFunctional::sum_of({ev("E1"), ev("E8")}));
    EXPECT_THROW(parse_functional("E1 + Q", g), ParseError);
    EXPECT_THROW(parse_functional("E1 +", g), ParseError);
}

TEST(Book, Parse) {
    const Gamble g = figure1_gamble().gamble;
    const auto p = parse_book("# book\np E1 = 1/3\np E1 @ B2 = 1/2\np E2 = -1\np E3 = 0\np E4 = 0\np E5 = 0\n", g);
    EXPECT_EQ(p.value(ev("E1")), Rational(1, 3));
    EXPECT_EQ(p.value_in(1, ev("E1")), Rational(1, 2));
    EXPECT_EQ(p.value(ev("E2")), Rational(-1));
    EXPECT_THROW(parse_book("p E9 = 1\n", g), ParseError);
    EXPECT_THROW(parse_book("p E1 = 1\n", g), ParseError);
    const std::string rest = "p E2 = 0\np E3 = 0\np E4 = 0\np E5 = 0\n";
    EXPECT_NO_THROW(parse_book("p E1 = 1\n" + rest, g));
    EXPECT_THROW(parse_book("p E1 = 1\np E1 @ B7 = 1\n" + rest, g), ParseError);
    EXPECT_THROW(parse_book("p E1 = 0.3\n" + rest, g), ParseError);
    EXPECT_THROW(parse_book("p E1 = 1\np E9 = 1\n" + rest, g), ParseError);
}

} // namespace
} // namespace qgamble
