#include "affix/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace affix::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        std::istringstream fields(raw);
        Line line{number, {}};
        for (std::string t; fields >> t;) {
            if (t.front() == '#') {
                break;
            }
            line.tokens.push_back(std::move(t));
        }
        if (!line.tokens.empty()) {
            out.push_back(std::move(line));
        }
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what)
{
    throw InputError("line " + std::to_string(line.number) + ": " + what);
}

std::size_t parse_count(const Line& line, const std::string& token)
{
    std::size_t value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        fail(line, "expected a nonnegative integer, got '" + token + "'");
    }
    return value;
}

State parse_state(const Line& line, const std::string& token, std::size_t states)
{
    const std::size_t q = parse_count(line, token);
    if (q >= states) {
        fail(line, "state " + token + " out of range");
    }
    return static_cast<State>(q);
}

Alphabet parse_alphabet(const Line& line)
{
    try {
        return Alphabet(std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } catch (const InputError& e) {
        fail(line, e.what());
    }
}

std::string join(const std::vector<State>& states)
{
    std::string out;
    for (State q : states) {
        out += ' ';
        out += std::to_string(q);
    }
    return out;
}

} // namespace

Automaton parse_automaton(std::string_view text)
{
    const auto lines = tokenize(text);
    std::optional<std::string> type;
    std::optional<Alphabet> sigma;
    std::optional<std::size_t> states;
    const Line* initial = nullptr;
    const Line* final = nullptr;
    std::vector<const Line*> trans;

    for (const auto& line : lines) {
        const std::string& key = line.tokens.front();
        if (key == "type") {
            if (type) fail(line, "duplicate 'type'");
            if (line.tokens.size() != 2 || (line.tokens[1] != "dfa" && line.tokens[1] != "nfa")) {
                fail(line, "expected 'type dfa' or 'type nfa'");
            }
            type = line.tokens[1];
        } else if (key == "alphabet") {
            if (sigma) fail(line, "duplicate 'alphabet'");
            sigma = parse_alphabet(line);
        } else if (key == "states") {
            if (states) fail(line, "duplicate 'states'");
            if (line.tokens.size() != 2) fail(line, "expected 'states N'");
            states = parse_count(line, line.tokens[1]);
        } else if (key == "initial") {
            if (initial != nullptr) fail(line, "duplicate 'initial'");
            initial = &line;
        } else if (key == "final") {
            if (final != nullptr) fail(line, "duplicate 'final'");
            final = &line;
        } else if (key == "trans") {
            if (line.tokens.size() != 4) fail(line, "expected 'trans from sym to'");
            trans.push_back(&line);
        } else {
            fail(line, "unknown keyword '" + key + "'");
        }
    }
    if (!type) throw InputError("missing 'type' line");
    if (!sigma) throw InputError("missing 'alphabet' line");
    if (!states) throw InputError("missing 'states' line");
    if (initial == nullptr) throw InputError("missing 'initial' line");

    const std::size_t n = *states;
    std::vector<State> initials;
    for (std::size_t i = 1; i < initial->tokens.size(); ++i) {
        initials.push_back(parse_state(*initial, initial->tokens[i], n));
    }
    std::vector<State> finals;
    if (final != nullptr) {
        for (std::size_t i = 1; i < final->tokens.size(); ++i) {
            finals.push_back(parse_state(*final, final->tokens[i], n));
        }
    }
    auto symbol_of = [&](const Line& line) {
        auto a = sigma->find(line.tokens[2]);
        if (!a) fail(line, "symbol '" + line.tokens[2] + "' not in alphabet");
        return *a;
    };

    if (*type == "dfa") {
        if (n == 0) throw InputError("a DFA needs at least one state");
        if (initials.size() != 1) fail(*initial, "a DFA has exactly one initial state");
        Dfa m(*sigma, n, initials.front());
        for (State q : finals) {
            m.set_final(q);
        }
        for (const Line* line : trans) {
            const State p = parse_state(*line, line->tokens[1], n);
            const Symbol a = symbol_of(*line);
            const State q = parse_state(*line, line->tokens[3], n);
            if (m.next(p, a) != kNoState && m.next(p, a) != q) {
                fail(*line, "second transition from state " + line->tokens[1] + " on '" + line->tokens[2] + "'");
            }
            m.set_next(p, a, q);
        }
        m.require_complete();
        return m;
    }

    Nfa m(*sigma, n);
    for (State q : initials) {
        m.set_initial(q);
    }
    for (State q : finals) {
        m.set_final(q);
    }
    for (const Line* line : trans) {
        m.add_transition(parse_state(*line, line->tokens[1], n), symbol_of(*line),
                         parse_state(*line, line->tokens[3], n));
    }
    return m;
}

std::string serialize(const Dfa& m)
{
    m.require_complete();
    std::ostringstream out;
    out << "type dfa\n";
    out << "alphabet";
    for (const auto& t : m.alphabet().tokens()) {
        out << ' ' << t;
    }
    out << "\nstates " << m.state_count() << "\n";
    out << "initial " << m.start() << "\n";
    out << "final" << join(m.final_states()) << "\n";
    for (State p = 0; p < m.state_count(); ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            out << "trans " << p << ' ' << m.alphabet().token(a) << ' ' << m.next(p, a) << "\n";
        }
    }
    return out.str();
}

std::string serialize(const Nfa& input)
{
    const Nfa m = remove_epsilon(input);
    std::ostringstream out;
    out << "type nfa\n";
    out << "alphabet";
    for (const auto& t : m.alphabet().tokens()) {
        out << ' ' << t;
    }
    out << "\nstates " << m.state_count() << "\n";
    out << "initial" << join(m.initial_states()) << "\n";
    out << "final" << join(m.final_states()) << "\n";
    for (State p = 0; p < m.state_count(); ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                out << "trans " << p << ' ' << m.alphabet().token(a) << ' ' << q << "\n";
            }
        }
    }
    return out.str();
}

std::string serialize(const Automaton& m)
{
    return std::visit([](const auto& x) { return serialize(x); }, m);
}

WordSet parse_word_set(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.front() != "alphabet") {
        throw InputError("word list must start with an 'alphabet' line");
    }
    Alphabet sigma = parse_alphabet(lines.front());
    if (sigma.contains("eps")) {
        fail(lines.front(), "'eps' is reserved for the empty word in word lists");
    }
    WordSet s(sigma);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() == 1 && line.tokens.front() == "eps") {
            s.insert(Word{});
            continue;
        }
        Word w;
        for (const auto& t : line.tokens) {
            auto a = sigma.find(t);
            if (!a) fail(line, "symbol '" + t + "' not in alphabet");
            w.push_back(*a);
        }
        s.insert(std::move(w));
    }
    return s;
}

std::string serialize(const WordSet& s)
{
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : s.alphabet().tokens()) {
        out << ' ' << t;
    }
    out << "\n";
    for (const auto& w : s.words()) {
        if (w.empty()) {
            out << "eps\n";
            continue;
        }
        out << s.alphabet().format(w) << "\n";
    }
    return out.str();
}

MatrixSet parse_matrix_set(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.front() != "dim" || lines.front().tokens.size() != 2) {
        throw InputError("matrix file must start with 'dim N'");
    }
    const std::size_t dim = parse_count(lines.front(), lines.front().tokens[1]);
    if (dim == 0) {
        fail(lines.front(), "matrix dimension must be positive");
    }
    std::vector<std::string> symbols;
    std::vector<BoolMatrix> mats;
    std::size_t i = 1;
    while (i < lines.size()) {
        const Line& header = lines[i];
        if (header.tokens.front() != "matrix" || header.tokens.size() != 2) {
            fail(header, "expected 'matrix sym'");
        }
        symbols.push_back(header.tokens[1]);
        BoolMatrix m(dim);
        for (std::size_t row = 0; row < dim; ++row) {
            if (++i >= lines.size()) {
                fail(header, "matrix '" + header.tokens[1] + "' has fewer than " + std::to_string(dim) + " rows");
            }
            const Line& line = lines[i];
            if (line.tokens.size() != dim) {
                fail(line, "expected " + std::to_string(dim) + " entries");
            }
            for (std::size_t col = 0; col < dim; ++col) {
                const auto& cell = line.tokens[col];
                if (cell != "0" && cell != "1") {
                    fail(line, "matrix entries must be 0 or 1");
                }
                m.set(row, col, cell == "1");
            }
        }
        mats.push_back(std::move(m));
        ++i;
    }
    if (mats.empty()) {
        throw InputError("matrix file has no matrices");
    }
    return MatrixSet(Alphabet(std::move(symbols)), std::move(mats));
}

std::string serialize(const MatrixSet& ms)
{
    std::ostringstream out;
    out << "dim " << ms.dim() << "\n";
    for (Symbol a = 0; a < ms.alphabet().size(); ++a) {
        out << "matrix " << ms.alphabet().token(a) << "\n";
        const auto& m = ms.matrix(a);
        for (std::size_t row = 0; row < m.dim(); ++row) {
            for (std::size_t col = 0; col < m.dim(); ++col) {
                out << (col == 0 ? "" : " ") << (m.at(row, col) ? 1 : 0);
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace affix::io
