#include "qgamble/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgamble/born.hpp"
#include "qgamble/coherence.hpp"
#include "qgamble/coloring.hpp"
#include "qgamble/fixtures.hpp"
#include "qgamble/gamble_file.hpp"
#include "qgamble/lp.hpp"
#include "qgamble/realization.hpp"

namespace qgamble::cli {

namespace {

// Raised for bad input files and arguments; maps to kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A path to a .gamble file, or the name of a builtin fixture.
GambleFile load_source(const std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        try {
            return parse_gamble_file(read_file(source));
        } catch (const ParseError& e) {
            throw UsageError(source + ":" + e.what());
        }
    }
    const auto names = fixture_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return to_gamble_file(fixture_by_name(source));
    throw UsageError("no such file or fixture: " + source);
}

const Realization& require_realization(const GambleFile& file) {
    if (!file.realization) throw UsageError("gamble '" + file.gamble.name() + "' has no realization (no 'dim')");
    return *file.realization;
}

const State& require_state(const GambleFile& file, const std::string& name) {
    const State* s = file.find_state(name);
    if (!s) throw UsageError("unknown state '" + name + "'");
    return *s;
}

LinearFunctional resolve_functional(const GambleFile& file, const std::string& spec) {
    if (const auto* f = file.find_functional(spec)) return *f;
    try {
        return parse_functional(spec, file.gamble);
    } catch (const ParseError& e) {
        throw UsageError("functional '" + spec + "': " + e.message());
    }
}

std::vector<EventId> split_events(const std::string& list, const Gamble& g) {
    std::vector<EventId> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        EventId e(item);
        if (!g.has_event(e)) throw UsageError("unknown event '" + item + "'");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<JoinIdentity> identities_for(const GambleFile& file) {
    if (!file.realization) return {};
    return verify_realization(file.gamble, *file.realization).derived_identities;
}

std::string algebra_set(const std::vector<std::size_t>& subset) {
    bool contiguous = !subset.empty();
    for (std::size_t k = 0; k < subset.size(); ++k) contiguous = contiguous && subset[k] == subset.front() + k;
    if (contiguous && subset.size() > 2) {
        return "{" + std::to_string(subset.front() + 1) + ".." + std::to_string(subset.back() + 1) + "}";
    }
    std::string out = "{";
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(subset[k] + 1);
    }
    return out + "}";
}

void print_assignment(std::ostream& out, const Gamble& g, const ProbabilityAssignment& p) {
    for (const auto& e : g.universe()) out << e.label() << " = " << p.value(e) << '\n';
}

int cmd_validate(const std::string& source, std::ostream& out) {
    const GambleFile file = load_source(source);
    const Realization& r = require_realization(file);
    const Gamble& g = file.gamble;
    const PossibilityReport report = verify_realization(g, r);
    out << "gamble " << g.name() << ": " << g.algebra_count() << " algebras, " << g.universe().size()
        << " atoms, dim " << r.ambient_dim() << " (" << to_string(r.field()) << ")\n";
    const std::pair<PossibilityGroup, const char*> groups[] = {
        {PossibilityGroup::Partition, "(a) partition"},
        {PossibilityGroup::Identity, "(b) identity"},
        {PossibilityGroup::Incompatibility, "(c) incompatibility"},
    };
    for (const auto& [group, label] : groups) {
        out << label << ": " << (report.passes(group) ? "pass" : "FAIL") << '\n';
        for (const auto& m : report.messages(group)) out << "  - " << m << '\n';
    }
    out << "(d) derived identities: " << report.derived_identities.size() << '\n';
    for (const auto& id : report.derived_identities) out << "  " << describe(id, g) << '\n';
    out << "verdict: " << (report.passes() ? "possible" : "not possible") << '\n';
    return report.passes() ? kExitOk : kExitVerdictFail;
}

int cmd_bounds(const std::string& source, const std::string& functional, bool maximize, const std::string& certain,
               bool witness, std::ostream& out) {
    const GambleFile file = load_source(source);
    const LinearFunctional f = resolve_functional(file, functional);
    const auto pins = split_events(certain, file.gamble);
    const LPResult result = bound_with_certainty(file.gamble, pins, f,
                                                 maximize ? Direction::Maximize : Direction::Minimize,
                                                 identities_for(file));
    if (!result.optimal()) {
        out << to_string(result.status) << '\n';
        return kExitVerdictFail;
    }
    out << *result.value << '\n';
    if (witness) {
        out << "witness:\n";
        print_assignment(out, file.gamble, *result.witness);
    }
    return kExitOk;
}

int cmd_color(const std::string& source, std::size_t limit, bool certify, std::ostream& out) {
    const GambleFile file = load_source(source);
    const Gamble& g = file.gamble;
    const auto colorings = enumerate_colorings(g, limit);
    out << "colorings: " << colorings.size();
    std::optional<ParityCertificate> cert;
    if (certify) {
        cert = parity_certificate(g);
        out << "; parity certificate: " << (cert ? "algebras " + algebra_set(cert->algebra_subset) : "none");
    }
    out << '\n';
    if (cert) {
        out << "occurrences:";
        for (const auto& e : g.universe()) {
            auto it = cert->occurrence_counts.find(e);
            if (it != cert->occurrence_counts.end()) out << ' ' << e.label() << ':' << it->second;
        }
        out << '\n';
    }
    for (const auto& c : colorings) {
        out << "  true:";
        for (const auto& e : c.true_atoms(g)) out << ' ' << e.label();
        out << '\n';
    }
    return kExitOk;
}

int cmd_classical(const std::string& source, const std::string& functional, std::ostream& out) {
    const GambleFile file = load_source(source);
    if (!file.scheme) throw UsageError("gamble '" + file.gamble.name() + "' has no base-variable scheme");
    const LinearFunctional f = resolve_functional(file, functional);
    const ClassicalMax best = classical_max(*file.scheme, f);
    out << "max = " << best.value << '\n';
    out << "witness:";
    for (std::size_t v = 0; v < best.witness.size(); ++v) {
        out << ' ' << (best.witness[v] ? '+' : '-') << file.scheme->variables[v];
    }
    out << '\n';
    return kExitOk;
}

void print_born(std::ostream& out, const GambleFile& file, const BornAssignment& born) {
    print_assignment(out, file.gamble, born.assignment);
    for (const auto& f : file.functionals) {
        out << "functional " << f.name << " = " << evaluate(f.functional, born.assignment) << '\n';
    }
    out << "audit: coherent\n";
}

int cmd_born(const std::string& source, const std::string& state, std::ostream& out) {
    const GambleFile file = load_source(source);
    const Realization& r = require_realization(file);
    print_born(out, file, born_assignment(require_state(file, state), file.gamble, r));
    return kExitOk;
}

int cmd_condition(const std::string& source, const std::string& state, const std::string& event, std::ostream& out) {
    const GambleFile file = load_source(source);
    const Realization& r = require_realization(file);
    const EventId e(event);
    if (!file.gamble.has_event(e)) throw UsageError("unknown event '" + event + "'");
    const State& prior = require_state(file, state);
    const Rational p = born(prior, r.at(e));
    const BornAssignment post = sequential_condition(e, r, prior, file.gamble, r);
    out << "conditioned on " << event << " (prior probability " << p << ")\n";
    print_born(out, file, post);
    return kExitOk;
}

int cmd_audit(const std::string& source, const std::string& book_path, std::ostream& out) {
    const GambleFile file = load_source(source);
    const Gamble& g = file.gamble;
    ProbabilityAssignment book;
    try {
        book = parse_book(read_file(book_path), g);
    } catch (const ParseError& e) {
        throw UsageError(book_path + ":" + e.what());
    }
    const auto ids = identities_for(file);
    const CoherenceReport report = audit(book, g, ids);
    if (report.coherent()) {
        out << "coherent\n";
        return kExitOk;
    }
    out << "incoherent: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) out << "  " << (v.rule == Rule::Rule1 ? "RULE1" : "RULE2") << ": " << v.message << '\n';
    const DutchBookOutcome db = dutch_book(book, g, ids);
    if (!db.book) {
        out << "no dutch book: " << db.note << '\n';
        return kExitVerdictFail;
    }
    const auto& alg = g.algebra(db.book->algebra);
    out << "dutch book on " << alg.name() << " (" << db.note << "), guaranteed loss " << db.book->guaranteed_loss << '\n';
    for (const auto& a : alg.atoms()) {
        auto it = db.book->stakes.find(a);
        if (it != db.book->stakes.end()) out << "  stake " << a.label() << " = " << it->second << '\n';
    }
    for (const auto& a : alg.atoms()) out << "  if " << a.label() << ": payoff " << payoff(*db.book, book, g, a) << '\n';
    return kExitVerdictFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of quantum gambles", "qgamble"};
    app.require_subcommand(1);

    std::string source, functional, certain, state, event, book, fixture;
    bool maximize = false, minimize = false, witness = false, certify = false;
    std::size_t limit = kUnlimited;

    auto* validate = app.add_subcommand("validate", "Check the possibility criterion for a realization");
    validate->add_option("file", source, "gamble file or fixture name")->required();

    auto* bounds = app.add_subcommand("bounds", "Exact bound of a functional over the RULE 1 + RULE 2 polytope");
    bounds->add_option("file", source, "gamble file or fixture name")->required();
    bounds->add_option("--functional", functional, "functional name or expression")->required();
    auto* max_flag = bounds->add_flag("--max", maximize, "maximize");
    auto* min_flag = bounds->add_flag("--min", minimize, "minimize");
    max_flag->excludes(min_flag);
    bounds->add_option("--certain", certain, "comma-separated events pinned to probability 1");
    bounds->add_flag("--witness", witness, "print the optimal assignment");

    auto* color = app.add_subcommand("color", "Enumerate two-valued colorings");
    color->add_option("file", source, "gamble file or fixture name")->required();
    color->add_option("--limit", limit, "stop after N colorings")->check(CLI::PositiveNumber);
    color->add_flag("--certify", certify, "search for a parity certificate");

    auto* classical = app.add_subcommand("classical", "Maximum of a functional over classical assignments");
    classical->add_option("file", source, "gamble file or fixture name")->required();
    classical->add_option("--functional", functional, "functional name or expression")->required();

    auto* born_cmd = app.add_subcommand("born", "Born-rule assignment of a state");
    born_cmd->add_option("file", source, "gamble file or fixture name")->required();
    born_cmd->add_option("--state", state, "state name")->required();

    auto* condition = app.add_subcommand("condition", "Born assignment after Lueders conditioning on an event");
    condition->add_option("file", source, "gamble file or fixture name")->required();
    condition->add_option("--state", state, "state name")->required();
    condition->add_option("--event", event, "event conditioned on")->required();

    auto* audit_cmd = app.add_subcommand("audit", "Coherence audit of a book, with a Dutch book on RULE 1 failures");
    audit_cmd->add_option("file", source, "gamble file or fixture name")->required();
    audit_cmd->add_option("--book", book, "book file")->required();

    auto* fixtures = app.add_subcommand("fixtures", "Builtin fixtures");
    fixtures->require_subcommand(1);
    auto* fx_list = fixtures->add_subcommand("list", "List fixture names");
    auto* fx_export = fixtures->add_subcommand("export", "Print a fixture in gamble-file format");
    fx_export->add_option("name", fixture, "fixture name")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(source, out);
        if (bounds->parsed()) {
            if (maximize == minimize) throw UsageError("bounds needs exactly one of --max or --min");
            return cmd_bounds(source, functional, maximize, certain, witness, out);
        }
        if (color->parsed()) return cmd_color(source, limit, certify, out);
        if (classical->parsed()) return cmd_classical(source, functional, out);
        if (born_cmd->parsed()) return cmd_born(source, state, out);
        if (condition->parsed()) return cmd_condition(source, state, event, out);
        if (audit_cmd->parsed()) return cmd_audit(source, book, out);
        if (fx_list->parsed()) {
            for (const auto& n : fixture_names()) out << n << '\n';
            return kExitOk;
        }
        if (fx_export->parsed()) {
            const auto names = fixture_names();
            if (std::find(names.begin(), names.end(), fixture) == names.end()) {
                throw UsageError("unknown fixture '" + fixture + "'");
            }
            out << serialize(to_gamble_file(fixture_by_name(fixture)));
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "qgamble: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "qgamble: " << to_string(e.code()) << ": " << e.what() << '\n';
        return e.code() == Errc::ZeroProbabilityCondition || e.code() == Errc::InvalidRealization ? kExitVerdictFail
                                                                                                  : kExitUsage;
    }
    return kExitUsage;
}

} // namespace qgamble::cli
