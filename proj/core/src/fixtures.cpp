#include "qgamble/fixtures.hpp"

#include <array>
#include <stdexcept>

namespace qgamble {

namespace {

EventId ev(std::string_view label) { return EventId(std::string(label)); }

OutcomeAlgebra algebra(std::string name, std::initializer_list<std::string_view> atoms) {
    return OutcomeAlgebra(std::move(name), event_ids(atoms));
}

void assign_rays(Realization& r, std::initializer_list<std::pair<std::string_view, Vector>> rays) {
    for (const auto& [label, v] : rays) r.assign(ev(label), Subspace::ray(v));
}

} // namespace

Fixture figure1_gamble() {
    Gamble g = build_gamble("figure1", {
        algebra("B1", {"E1", "E2", "E3"}),
        algebra("B2", {"E1", "E4", "E5"}),
    });
    // E1 = {S_z^2 = 0}; (x, y, z) and (x', y', z) with x', y' rotated by 45
    // degrees about z.
    Realization r(3, Field::Real);
    assign_rays(r, {
        {"E1", {0, 0, 1}},
        {"E2", {1, 0, 0}},
        {"E3", {0, 1, 0}},
        {"E4", {1, 1, 0}},
        {"E5", {1, -1, 0}},
    });
    Fixture f{"figure1", std::move(g), std::move(r), {}, std::nullopt, {}, {}};
    f.states.emplace("MIXED", State::maximally_mixed(3));
    f.functionals.emplace("E1", LinearFunctional::sum_of({ev("E1")}));
    f.expected.emplace("colorings", Rational(5));
    f.expected.emplace("max E1", Rational(1));
    return f;
}

Fixture uncertainty13_gamble() {
    Gamble g = build_gamble("uncertainty13", {
        algebra("B1", {"E1", "E2", "F2"}),
        algebra("B2", {"E1", "E3", "F3"}),
        algebra("B3", {"E2", "E4", "E6"}),
        algebra("B4", {"E3", "E5", "E7"}),
        algebra("B5", {"E6", "E7", "F"}),
        algebra("B6", {"E4", "E8", "F4"}),
        algebra("B7", {"E5", "E8", "F5"}),
    });
    Realization r(3, Field::Real);
    assign_rays(r, {
        {"E1", {1, 0, 2}},
        {"E2", {0, 1, 0}},
        {"F2", {2, 0, -1}},
        {"E3", {2, 1, -1}},
        {"F3", {2, -5, -1}},
        {"E4", {0, 0, 1}},
        {"E5", {1, -1, 1}},
        {"E6", {1, 0, 0}},
        {"E7", {0, 1, 1}},
        {"F", {0, 1, -1}},
        {"F4", {1, -1, 0}},
        {"F5", {-1, 1, 2}},
        {"E8", {1, 1, 0}},
    });
    Fixture f{"uncertainty13", std::move(g), std::move(r), {}, std::nullopt, {}, {}};
    f.states.emplace("E1", State::pure({1, 0, 2}));
    f.states.emplace("MIXED", State::maximally_mixed(3));
    f.functionals.emplace("U", LinearFunctional::sum_of({ev("E1"), ev("E8")}));
    f.expected.emplace("max U", Rational(3, 2));
    f.expected.emplace("max E8 given E1", Rational(1, 2));
    return f;
}

Fixture kernaghan20_gamble() {
    Gamble g = build_gamble("kernaghan20", {
        algebra("B1", {"E1", "F1", "F2", "F3"}),
        algebra("B2", {"E1", "F1", "F4", "F5"}),
        algebra("B3", {"E1", "F2", "F6", "F7"}),
        algebra("B4", {"E1", "F3", "F8", "F9"}),
        algebra("B5", {"E2", "F10", "F11", "F12"}),
        algebra("B6", {"E2", "F7", "F10", "F13"}),
        algebra("B7", {"E2", "F8", "F11", "F14"}),
        algebra("B8", {"E2", "F4", "F12", "F15"}),
        algebra("B9", {"F9", "F14", "F16", "F17"}),
        algebra("B10", {"F5", "F15", "F16", "F18"}),
        algebra("B11", {"F6", "F13", "F17", "F18"}),
    });
    Realization r(4, Field::Real);
    assign_rays(r, {
        {"E1", {1, 0, 0, 0}},
        {"F1", {0, 1, 0, 0}},
        {"F2", {0, 0, 1, 0}},
        {"F3", {0, 0, 0, 1}},
        {"F4", {0, 0, 1, 1}},
        {"F5", {0, 0, 1, -1}},
        {"F6", {0, 1, 0, 1}},
        {"F7", {0, 1, 0, -1}},
        {"F8", {0, 1, 1, 0}},
        {"F9", {0, 1, -1, 0}},
        {"E2", {1, 1, -1, 1}},
        {"F10", {-1, 1, 1, 1}},
        {"F11", {1, -1, 1, 1}},
        {"F12", {1, 1, 1, -1}},
        {"F13", {1, 0, 1, 0}},
        {"F14", {1, 0, 0, -1}},
        {"F15", {1, -1, 0, 0}},
        {"F16", {1, 1, 1, 1}},
        {"F17", {1, -1, -1, 1}},
        {"F18", {1, 1, -1, -1}},
    });
    Fixture f{"kernaghan20", std::move(g), std::move(r), {}, std::nullopt, {}, {}};
    f.states.emplace("E1", State::pure({1, 0, 0, 0}));
    f.states.emplace("MIXED", State::maximally_mixed(4));
    f.expected.emplace("colorings", Rational(0));
    return f;
}

namespace {

// Base variables in declaration order.
constexpr std::array<std::string_view, 6> kGhzVariables = {"A1", "B1", "C1", "A2", "B2", "C2"};

// The four product measurements, as indices into kGhzVariables.
constexpr std::array<std::array<std::size_t, 3>, 4> kGhzTriples = {{
    {0, 1, 2},  // {A1, B1, C1}
    {0, 4, 5},  // {A1, B2, C2}
    {3, 1, 5},  // {A2, B1, C2}
    {3, 4, 2},  // {A2, B2, C1}
}};

// Sign patterns over a triple, true = barred.
using Bars = std::array<bool, 3>;

std::string conjunction_label(const std::array<std::size_t, 3>& triple, const Bars& bars) {
    std::string out;
    for (std::size_t k = 0; k < 3; ++k) {
        if (bars[k]) out += '~';
        out += kGhzVariables[triple[k]];
    }
    return out;
}

// Eigenvector of sigma_x (setting 1) or sigma_y (setting 2) for +1, or the
// orthogonal -1 eigenvector when barred.
Vector local_ray(std::size_t variable, bool barred) {
    const bool y_setting = variable >= 3;
    const Scalar second = y_setting ? Scalar::i() : Scalar(1);
    return Vector{Scalar(1), barred ? -second : second};
}

Vector product_ray(const std::array<std::size_t, 3>& triple, const Bars& bars) {
    return tensor(tensor(local_ray(triple[0], bars[0]), local_ray(triple[1], bars[1])),
                  local_ray(triple[2], bars[2]));
}

// Lexicographic sign order, unbarred before barred.
std::array<Bars, 8> all_bars() {
    std::array<Bars, 8> out{};
    for (std::size_t k = 0; k < 8; ++k) out[k] = {(k & 4U) != 0, (k & 2U) != 0, (k & 1U) != 0};
    return out;
}

// Atoms of B1..B4 that the GHZ state excludes (they join S in B5..B8), in
// the order they are listed for B5..B8.
constexpr std::array<std::array<Bars, 4>, 4> kExcluded = {{
    {{{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}},
    {{{true, false, false}, {false, true, false}, {false, false, true}, {true, true, true}}},
    {{{true, false, false}, {false, true, false}, {false, false, true}, {true, true, true}}},
    {{{true, false, false}, {false, true, false}, {false, false, true}, {true, true, true}}},
}};

// The complementary rows: the sixteen events summed in P.
constexpr std::array<std::array<Bars, 4>, 4> kSurviving = {{
    {{{true, false, false}, {false, true, false}, {false, false, true}, {true, true, true}}},
    {{{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}},
    {{{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}},
    {{{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}},
}};

} // namespace

std::vector<EventId> ghz_sixteen_events() {
    std::vector<EventId> out;
    for (std::size_t m = 0; m < 4; ++m) {
        for (const auto& bars : kSurviving[m]) out.push_back(ev(conjunction_label(kGhzTriples[m], bars)));
    }
    return out;
}

Fixture ghz_mermin_gamble() {
    std::vector<OutcomeAlgebra> algebras;
    Realization r(8, Field::Complex);
    BaseVariableScheme scheme;
    for (auto v : kGhzVariables) scheme.variables.emplace_back(v);

    for (std::size_t m = 0; m < 4; ++m) {
        std::vector<EventId> atoms;
        for (const auto& bars : all_bars()) {
            const EventId e = ev(conjunction_label(kGhzTriples[m], bars));
            atoms.push_back(e);
            r.assign(e, Subspace::ray(product_ray(kGhzTriples[m], bars)));
            std::vector<Literal> lits;
            for (std::size_t k = 0; k < 3; ++k) lits.push_back({kGhzTriples[m][k], !bars[k]});
            scheme.labels.emplace(e, std::move(lits));
        }
        algebras.emplace_back("B" + std::to_string(m + 1), std::move(atoms));
    }

    const EventId s = ev("S");
    const Subspace s_ray = Subspace::ray(Vector{1, 0, 0, 0, 0, 0, 0, -1});
    r.assign(s, s_ray);
    for (std::size_t m = 0; m < 4; ++m) {
        const EventId d = ev("D" + std::to_string(m + 1));
        std::vector<EventId> atoms{s, d};
        std::vector<Subspace> pieces{s_ray};
        for (const auto& bars : kExcluded[m]) {
            const EventId e = ev(conjunction_label(kGhzTriples[m], bars));
            atoms.push_back(e);
            pieces.push_back(r.at(e));
        }
        r.assign(d, orthocomplement(direct_sum(pieces, 8)));
        algebras.emplace_back("B" + std::to_string(m + 5), std::move(atoms));
    }

    Fixture f{"ghz_mermin", build_gamble("ghz_mermin", std::move(algebras)), std::move(r), {}, std::move(scheme),
              {}, {}};
    f.states.emplace("GHZ", State::pure(Vector{1, 0, 0, 0, 0, 0, 0, -1}));
    f.states.emplace("MIXED", State::maximally_mixed(8));
    f.functionals.emplace("P16", LinearFunctional::sum_of(ghz_sixteen_events()));
    f.expected.emplace("P16 quantum", Rational(4));
    f.expected.emplace("P16 classical", Rational(3));
    f.expected.emplace("dim D", Rational(3));
    return f;
}

std::vector<std::string> fixture_names() {
    return {"figure1", "uncertainty13", "kernaghan20", "ghz_mermin"};
}

Fixture fixture_by_name(std::string_view name) {
    if (name == "figure1") return figure1_gamble();
    if (name == "uncertainty13") return uncertainty13_gamble();
    if (name == "kernaghan20") return kernaghan20_gamble();
    if (name == "ghz_mermin") return ghz_mermin_gamble();
    throw std::out_of_range("unknown fixture " + std::string(name));
}

} // namespace qgamble
