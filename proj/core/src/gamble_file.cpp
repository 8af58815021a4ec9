#include "qgamble/gamble_file.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qgamble {

ParseError::ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

const State* GambleFile::find_state(std::string_view name) const {
    for (const auto& s : states) {
        if (s.name == name) return &s.state;
    }
    return nullptr;
}

const LinearFunctional* GambleFile::find_functional(std::string_view name) const {
    for (const auto& f : functionals) {
        if (f.name == name) return &f.functional;
    }
    return nullptr;
}

namespace {

enum class Tok { Word, String, Bracket, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;  // 1-based
};

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~' || c == '\'' || c == '/' || c == '.';
}

bool identifier(const std::string& s) {
    if (s.empty()) return false;
    const char c = s.front();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~')) return false;
    for (char k : s) {
        if (!(std::isalnum(static_cast<unsigned char>(k)) || k == '_' || k == '~' || k == '\'')) return false;
    }
    return true;
}

std::vector<Token> lex_line(std::string_view line, std::size_t lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            const auto close = line.find('"', i + 1);
            if (close == std::string_view::npos) throw ParseError(Errc::SyntaxError, lineno, i + 1, "unterminated string");
            out.push_back({Tok::String, std::string(line.substr(i + 1, close - i - 1)), i + 1});
            i = close + 1;
        } else if (c == '[') {
            const auto close = line.find(']', i + 1);
            if (close == std::string_view::npos) throw ParseError(Errc::SyntaxError, lineno, i + 1, "unterminated '['");
            out.push_back({Tok::Bracket, std::string(line.substr(i + 1, close - i - 1)), i + 1});
            i = close + 1;
        } else if (std::string_view("={};@+-*").find(c) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, c), i + 1});
            ++i;
        } else if (word_char(c)) {
            const std::size_t start = i;
            while (i < line.size() && word_char(line[i])) ++i;
            out.push_back({Tok::Word, std::string(line.substr(start, i - start)), start + 1});
        } else {
            throw ParseError(Errc::SyntaxError, lineno, i + 1, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, {}, line.size() + 1});
    return out;
}

void reject_decimal(const std::string& text, std::size_t line, std::size_t column) {
    if (text.find('.') != std::string::npos) {
        throw ParseError(Errc::SyntaxError, line, column,
                         "decimal literal '" + text + "' rejected; write exact values as p/q");
    }
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    std::size_t line() const { return line_; }

    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const Token& t, const std::string& message) const {
        throw ParseError(Errc::SyntaxError, line_, t.column, message);
    }
    [[noreturn]] void semantic(const Token& t, const std::string& message) const {
        throw ParseError(Errc::SemanticError, line_, t.column, message);
    }

    bool accept_punct(char c) {
        if (peek().kind == Tok::Punct && peek().text[0] == c) {
            next();
            return true;
        }
        return false;
    }

    void expect_punct(char c) {
        if (!accept_punct(c)) fail(peek(), std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w) {
        if (peek().kind == Tok::Word && peek().text == w) {
            next();
            return true;
        }
        return false;
    }

    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
    }

    const Token& expect_identifier(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::Word || !identifier(t.text)) fail(t, std::string("expected ") + what);
        return next();
    }

    Rational expect_rational() {
        bool negative = false;
        if (accept_punct('-')) {
            negative = true;
        } else {
            accept_punct('+');
        }
        const Token& t = peek();
        if (t.kind != Tok::Word) fail(t, "expected a rational number");
        reject_decimal(t.text, line_, t.column);
        auto r = Rational::parse(t.text);
        if (!r) fail(t, "malformed rational '" + t.text + "'");
        next();
        return negative ? -*r : *r;
    }

    std::size_t expect_count() {
        const Token& t = peek();
        reject_decimal(t.text, line_, t.column);
        auto r = t.kind == Tok::Word ? Rational::parse(t.text) : std::nullopt;
        if (!r || !r->is_integer() || r->sign() <= 0) fail(t, "expected a positive integer");
        next();
        return static_cast<std::size_t>(r->numerator().get_ui());
    }

    void expect_end() {
        if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
    }

    // Entries of a bracket token; rows split on ';'.
    std::vector<std::vector<Scalar>> bracket_rows(const Token& t) const {
        std::vector<std::vector<Scalar>> rows(1);
        std::size_t i = 0;
        const std::string& s = t.text;
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
                continue;
            }
            if (s[i] == ';') {
                rows.emplace_back();
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ';') ++i;
            const std::string entry = s.substr(start, i - start);
            const std::size_t column = t.column + 1 + start;
            reject_decimal(entry, line_, column);
            auto z = GaussianRational::parse(entry);
            if (!z) throw ParseError(Errc::SyntaxError, line_, column, "malformed scalar '" + entry + "'");
            rows.back().push_back(std::move(*z));
        }
        return rows;
    }

    Vector expect_vector() {
        const Token& t = peek();
        if (t.kind != Tok::Bracket) fail(t, "expected '[' vector");
        next();
        auto rows = bracket_rows(t);
        if (rows.size() != 1 || rows.front().empty()) fail(t, "expected a nonempty vector without ';'");
        return Vector(std::move(rows.front()));
    }

    // [sign] term { sign term }, term = number [*] [event] | event.
    LinearFunctional functional(const std::function<bool(const std::string&)>& known) {
        LinearFunctional f;
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (accept_punct('-')) {
                sign = -1;
            } else if (!accept_punct('+') && !first) {
                fail(peek(), "expected '+' or '-'");
            }
            first = false;
            const Token& t = peek();
            if (t.kind != Tok::Word) fail(t, "expected a term");
            if (identifier(t.text)) {
                next();
                if (!known(t.text)) semantic(t, "unknown event '" + t.text + "'");
                f.add_term(EventId(t.text), sign);
                continue;
            }
            reject_decimal(t.text, line_, t.column);
            auto c = Rational::parse(t.text);
            if (!c) fail(t, "malformed coefficient '" + t.text + "'");
            next();
            const bool star = accept_punct('*');
            const Token& e = peek();
            if (e.kind == Tok::Word && identifier(e.text)) {
                next();
                if (!known(e.text)) semantic(e, "unknown event '" + e.text + "'");
                f.add_term(EventId(e.text), sign * *c);
            } else {
                if (star) fail(e, "expected an event after '*'");
                f.add_constant(sign * *c);
            }
        }
        if (first) fail(peek(), "empty functional");
        return f;
    }

private:
    std::vector<Token> tokens_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++lineno;
        auto tokens = lex_line(line, lineno);
        if (tokens.front().kind != Tok::End) fn(LineParser(std::move(tokens), lineno));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
}

struct EventDecl {
    std::size_t line;
    std::size_t column;
    std::vector<Vector> span;
    bool has_span = false;
};

struct AlgebraDecl {
    std::size_t line;
    std::size_t column;
    std::string name;
    std::vector<EventId> atoms;
};

} // namespace

GambleFile parse_gamble_file(std::string_view text) {
    bool have_header = false;
    std::string name;
    std::optional<std::size_t> dim;
    Field field = Field::Real;
    std::map<std::string, EventDecl> events;
    std::vector<std::string> event_order;
    std::vector<AlgebraDecl> algebras;
    std::vector<std::pair<NamedState, std::size_t>> states;
    std::optional<BaseVariableScheme> scheme;
    std::size_t scheme_line = 0;
    std::vector<NamedFunctional> functionals;
    std::set<std::string> state_names, functional_names, algebra_names;

    for_each_line(text, [&](LineParser p) {
        const Token& kw = p.peek();
        if (kw.kind != Tok::Word) p.fail(kw, "expected a keyword");
        if (!have_header && kw.text != "gamble") p.fail(kw, "file must start with 'gamble'");
        p.next();

        if (kw.text == "gamble") {
            if (have_header) p.fail(kw, "duplicate 'gamble' header");
            have_header = true;
            const Token& n = p.peek();
            if (n.kind != Tok::String) p.fail(n, "expected quoted gamble name");
            name = p.next().text;
            while (!p.at_end()) {
                if (p.accept_word("dim")) {
                    dim = p.expect_count();
                } else if (p.accept_word("field")) {
                    if (p.accept_word("real")) {
                        field = Field::Real;
                    } else if (p.accept_word("complex")) {
                        field = Field::Complex;
                    } else {
                        p.fail(p.peek(), "expected 'real' or 'complex'");
                    }
                } else {
                    p.fail(p.peek(), "expected 'dim' or 'field'");
                }
            }
        } else if (kw.text == "event") {
            const Token& id = p.expect_identifier("event name");
            if (events.contains(id.text)) p.semantic(id, "event '" + id.text + "' declared twice");
            EventDecl decl{p.line(), id.column, {}, false};
            if (p.accept_punct('=')) {
                p.expect_word("span");
                decl.has_span = true;
                if (!dim) p.semantic(id, "span given but the gamble has no 'dim'");
                while (!p.at_end()) {
                    const Token& at = p.peek();
                    Vector v = p.expect_vector();
                    if (v.dim() != *dim) {
                        p.semantic(at, "vector has dimension " + std::to_string(v.dim()) + ", expected " +
                                           std::to_string(*dim));
                    }
                    decl.span.push_back(std::move(v));
                }
                if (rank_of(decl.span) != decl.span.size()) p.semantic(id, "span vectors are linearly dependent");
            } else if (dim) {
                p.semantic(id, "event '" + id.text + "' needs a span in a gamble with 'dim'");
            }
            p.expect_end();
            event_order.push_back(id.text);
            events.emplace(id.text, std::move(decl));
        } else if (kw.text == "algebra") {
            const Token& id = p.expect_identifier("algebra name");
            if (!algebra_names.insert(id.text).second) p.semantic(id, "algebra '" + id.text + "' declared twice");
            AlgebraDecl decl{p.line(), id.column, id.text, {}};
            p.expect_punct('=');
            p.expect_punct('{');
            while (!p.accept_punct('}')) {
                if (p.at_end()) p.fail(p.peek(), "expected '}'");
                const Token& atom = p.expect_identifier("event name");
                if (!events.contains(atom.text)) p.semantic(atom, "undeclared event '" + atom.text + "'");
                decl.atoms.emplace_back(atom.text);
            }
            p.expect_end();
            algebras.push_back(std::move(decl));
        } else if (kw.text == "state") {
            const Token& id = p.expect_identifier("state name");
            if (!state_names.insert(id.text).second) p.semantic(id, "state '" + id.text + "' declared twice");
            p.expect_punct('=');
            const Token& kind = p.peek();
            std::optional<State> state;
            try {
                if (p.accept_word("vec")) {
                    state = State::pure(p.expect_vector());
                } else if (p.accept_word("density")) {
                    const Token& body = p.peek();
                    if (body.kind != Tok::Bracket) p.fail(body, "expected '[' matrix");
                    p.next();
                    state = State::density(Matrix::from_rows(p.bracket_rows(body)));
                } else {
                    p.fail(kind, "expected 'vec' or 'density'");
                }
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                p.semantic(kind, e.what());
            }
            if (dim && state->dim() != *dim) {
                p.semantic(kind, "state has dimension " + std::to_string(state->dim()) + ", expected " +
                                     std::to_string(*dim));
            }
            p.expect_end();
            states.push_back({NamedState{id.text, std::move(*state)}, p.line()});
        } else if (kw.text == "basevar") {
            if (!scheme) {
                scheme.emplace();
                scheme_line = p.line();
            }
            while (!p.at_end()) {
                const Token& v = p.expect_identifier("base variable");
                if (scheme->find_variable(v.text)) p.semantic(v, "base variable '" + v.text + "' declared twice");
                scheme->variables.push_back(v.text);
            }
        } else if (kw.text == "label") {
            const Token& id = p.expect_identifier("event name");
            if (!events.contains(id.text)) p.semantic(id, "undeclared event '" + id.text + "'");
            if (!scheme) p.semantic(id, "label before any 'basevar'");
            if (scheme->labels.contains(EventId(id.text))) p.semantic(id, "event '" + id.text + "' labeled twice");
            p.expect_punct('=');
            std::vector<Literal> lits;
            while (!p.at_end()) {
                bool positive = true;
                if (p.accept_punct('-')) {
                    positive = false;
                } else {
                    p.expect_punct('+');
                }
                const Token& v = p.expect_identifier("base variable");
                auto idx = scheme->find_variable(v.text);
                if (!idx) p.semantic(v, "undeclared base variable '" + v.text + "'");
                lits.push_back({*idx, positive});
            }
            if (lits.empty()) p.fail(p.peek(), "expected at least one literal");
            scheme->labels.emplace(EventId(id.text), std::move(lits));
        } else if (kw.text == "functional") {
            const Token& id = p.expect_identifier("functional name");
            if (!functional_names.insert(id.text).second) p.semantic(id, "functional '" + id.text + "' declared twice");
            p.expect_punct('=');
            auto f = p.functional([&](const std::string& e) { return events.contains(e); });
            functionals.push_back({id.text, std::move(f)});
        } else {
            p.fail(kw, "unknown keyword '" + kw.text + "'");
        }
    });

    if (!have_header) throw ParseError(Errc::SyntaxError, 1, 1, "missing 'gamble' header");
    if (algebras.empty()) throw ParseError(Errc::SemanticError, 1, 1, "gamble declares no algebras");

    std::vector<OutcomeAlgebra> built;
    for (auto& a : algebras) {
        try {
            built.emplace_back(a.name, std::move(a.atoms));
        } catch (const Error& e) {
            throw ParseError(Errc::SemanticError, a.line, a.column, e.what());
        }
    }
    GambleFile file{build_gamble(name, std::move(built)), std::nullopt, {}, std::nullopt, std::move(functionals)};

    for (const auto& e : event_order) {
        if (!file.gamble.has_event(EventId(e))) {
            const auto& d = events.at(e);
            throw ParseError(Errc::SemanticError, d.line, d.column, "event '" + e + "' is not an atom of any algebra");
        }
    }
    if (dim) {
        Realization r(*dim, field);
        for (const auto& e : event_order) r.assign(EventId(e), Subspace(*dim, events.at(e).span));
        file.realization = std::move(r);
    }
    for (auto& [s, line] : states) file.states.push_back(std::move(s));
    if (scheme) {
        try {
            check_scheme(*scheme, file.gamble);
        } catch (const Error& e) {
            throw ParseError(Errc::SemanticError, scheme_line, 1, e.what());
        }
        file.scheme = std::move(scheme);
    }
    return file;
}

namespace {

std::string algebra_name(const Gamble& g, std::size_t k) {
    const auto& n = g.algebra(k).name();
    return n.empty() ? "B" + std::to_string(k + 1) : n;
}

} // namespace

std::string serialize(const GambleFile& file) {
    std::ostringstream os;
    const Gamble& g = file.gamble;
    os << "gamble \"" << g.name() << "\"";
    if (file.realization) {
        os << " dim " << file.realization->ambient_dim() << " field " << to_string(file.realization->field());
    }
    os << '\n';
    for (const auto& e : g.universe()) {
        os << "event " << e.label();
        if (file.realization) {
            os << " = span";
            for (const auto& v : file.realization->at(e).basis()) os << ' ' << v.to_string();
        }
        os << '\n';
    }
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        os << "algebra " << algebra_name(g, k) << " = {";
        for (const auto& a : g.algebra(k).atoms()) os << ' ' << a.label();
        os << " }\n";
    }
    for (const auto& s : file.states) {
        os << "state " << s.name << " = ";
        if (s.state.is_pure()) {
            os << "vec " << s.state.vector().to_string();
        } else {
            os << "density " << s.state.matrix().to_string();
        }
        os << '\n';
    }
    if (file.scheme) {
        os << "basevar";
        for (const auto& v : file.scheme->variables) os << ' ' << v;
        os << '\n';
        for (const auto& e : g.universe()) {
            if (file.scheme->labels.contains(e)) os << "label " << e.label() << " = " << file.scheme->describe(e) << '\n';
        }
    }
    for (const auto& f : file.functionals) os << "functional " << f.name << " = " << f.functional.to_string() << '\n';
    return os.str();
}

GambleFile to_gamble_file(const Fixture& fixture) {
    GambleFile file{fixture.gamble, fixture.realization, {}, fixture.scheme, {}};
    for (const auto& [name, state] : fixture.states) file.states.push_back({name, state});
    for (const auto& [name, f] : fixture.functionals) file.functionals.push_back({name, f});
    return file;
}

LinearFunctional parse_functional(std::string_view text, const Gamble& g) {
    LineParser p(lex_line(text, 1), 1);
    return p.functional([&](const std::string& e) { return g.has_event(EventId(e)); });
}

ProbabilityAssignment parse_book(std::string_view text, const Gamble& g) {
    ProbabilityAssignment book;
    for_each_line(text, [&](LineParser p) {
        p.expect_word("p");
        const Token& id = p.expect_identifier("event name");
        const EventId e(id.text);
        if (!g.has_event(e)) p.semantic(id, "unknown event '" + id.text + "'");
        std::optional<std::size_t> context;
        if (p.accept_punct('@')) {
            const Token& a = p.expect_identifier("algebra name");
            context = g.find_algebra(a.text);
            if (!context) p.semantic(a, "unknown algebra '" + a.text + "'");
            if (!g.algebra(*context).contains(e)) p.semantic(a, id.text + " is not an atom of " + a.text);
        }
        p.expect_punct('=');
        Rational v = p.expect_rational();
        p.expect_end();
        if (context) {
            book.set_in(*context, e, std::move(v));
        } else {
            book.set(e, std::move(v));
        }
    });
    for (const auto& e : g.universe()) {
        if (book.has(e)) continue;
        // Fully contextual books still need a base value for every event.
        bool covered = true;
        for (auto k : g.occurrences(e)) covered = covered && book.overrides().contains({k, e});
        if (!covered) throw ParseError(Errc::SemanticError, 1, 1, "book gives no value for event '" + e.label() + "'");
        book.set(e, book.overrides().at({g.occurrences(e).front(), e}));
    }
    return book;
}

} // namespace qgamble
