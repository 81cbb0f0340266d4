#include "affix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "affix/closures.hpp"
#include "affix/deciders.hpp"
#include "affix/finite_sets.hpp"
#include "affix/io.hpp"
#include "affix/oracle.hpp"
#include "affix/reductions.hpp"
#include "affix/synchronization.hpp"
#include "affix/witnesses.hpp"

namespace affix {

namespace {

struct Options {
    std::string kind;
    std::string input;
    std::string words;
    std::string side;
    std::string family;
    std::string inputs;
    std::string primes;
    std::string marker_a = "_a";
    std::string marker_c = "_c";
    std::size_t n = 0;
    std::size_t maxlen = 0;
    std::optional<std::size_t> pad;
    std::size_t max_subsets = std::size_t{1} << 20;
    bool witness = false;
    bool shortest = false;
    bool antichains = false;
};

ExitStatus verdict(std::ostream& out, bool yes, const char* positive, const char* negative)
{
    out << (yes ? positive : negative) << "\n";
    return yes ? ExitStatus::yes : ExitStatus::no;
}

void print_witness(std::ostream& out, const Alphabet& sigma, const Word& w)
{
    out << "witness: " << sigma.format(w) << "\n";
}

ExitStatus report(std::ostream& out, const Decision& d, const Alphabet& sigma)
{
    const ExitStatus status = verdict(out, d.universal, "UNIVERSAL", "NOT UNIVERSAL");
    if (d.witness) {
        print_witness(out, sigma, *d.witness);
    }
    return status;
}

std::vector<std::string> split_commas(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream in(list);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) {
            throw InputError("empty item in comma-separated list '" + list + "'");
        }
        out.push_back(item);
    }
    return out;
}

Automaton load_automaton(const std::string& path)
{
    try {
        return io::parse_automaton(io::read_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

WordSet load_words(const std::string& path)
{
    try {
        return io::parse_word_set(io::read_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Dfa require_dfa(const Automaton& m, const std::string& path)
{
    if (const auto* d = std::get_if<Dfa>(&m)) {
        return *d;
    }
    throw InputError(path + ": expected a DFA");
}

void print_notes(std::ostream& out, const std::vector<std::string>& notes)
{
    for (const auto& note : notes) {
        out << "# " << note << "\n";
    }
}

ExitStatus run_check(const Options& o, const SearchBudget& budget, std::ostream& out)
{
    const Automaton m = load_automaton(o.input);
    const ClosureKind kind = parse_closure_kind(o.kind);
    Decision d = closure_universal(m, kind, budget);
    if (!d.universal && !d.witness && o.witness) {
        d.witness = shortest_missing(m, kind, budget);
    }
    return report(out, d, alphabet_of(m));
}

ExitStatus run_nfa_universal(const Options& o, const SearchBudget& budget, std::ostream& out)
{
    const Automaton m = load_automaton(o.input);
    return report(out, nfa_universal(as_nfa(m), budget), alphabet_of(m));
}

ExitStatus run_sync(const Options& o, const SearchBudget& budget, std::ostream& out)
{
    const Dfa m = require_dfa(load_automaton(o.input), o.input);
    if (!o.shortest) {
        return verdict(out, is_synchronizing(m), "SYNCHRONIZING", "NOT SYNCHRONIZING");
    }
    const auto w = shortest_reset_word(m, budget);
    const ExitStatus status = verdict(out, w.has_value(), "SYNCHRONIZING", "NOT SYNCHRONIZING");
    if (w) {
        print_witness(out, m.alphabet(), *w);
    }
    return status;
}

ExitStatus run_mortal(const Options& o, const SearchBudget& budget, std::ostream& out)
{
    MatrixSet ms = [&] {
        try {
            return io::parse_matrix_set(io::read_file(o.input));
        } catch (const InputError& e) {
            throw InputError(o.input + ": " + e.what());
        }
    }();
    const Decision d = is_mortal(ms, budget);
    const ExitStatus status = verdict(out, d.universal, "MORTAL", "NOT MORTAL");
    if (d.witness) {
        print_witness(out, ms.alphabet(), *d.witness);
    }
    return status;
}

ExitStatus run_finite(const Options& o, const SearchBudget& budget, std::ostream& out)
{
    const WordSet s = load_words(o.words);
    const ClosureKind kind = parse_closure_kind(o.kind);
    switch (kind) {
    case ClosureKind::pref: return report(out, pref_star_universal(s), s.alphabet());
    case ClosureKind::suff: return report(out, suff_star_universal(s), s.alphabet());
    case ClosureKind::fact: return report(out, fact_star_universal(s, budget), s.alphabet());
    case ClosureKind::subw: break;
    }
    throw InputError("finite supports --kind pref, suff or fact");
}

ExitStatus run_omega(const Options& o, const SearchBudget& budget, std::ostream& out)
{
    const WordSet s = load_words(o.words);
    return report(out, omega_universal(s, parse_omega_side(o.side), budget), s.alphabet());
}

ExitStatus run_gen(const Options& o, std::ostream& out)
{
    const FamilyKind kind = parse_family_kind(o.family);
    std::vector<std::size_t> primes;
    if (!o.primes.empty()) {
        if (kind != FamilyKind::suffix_primes) {
            throw InputError("--primes only applies to suffix-primes");
        }
        for (const auto& item : split_commas(o.primes)) {
            std::size_t p = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
            if (ec != std::errc{} || ptr != item.data() + item.size()) {
                throw InputError("bad prime '" + item + "'");
            }
            primes.push_back(p);
        }
    } else if (o.n == 0) {
        throw InputError("--n must be a positive integer");
    }
    if (kind == FamilyKind::suffix_primes) {
        const auto g = suffix_primes(primes.empty() ? first_primes(o.n) : primes);
        print_notes(out, g.notes);
        out << io::serialize(g.machine);
        return ExitStatus::yes;
    }
    std::visit([&](const auto& x) { out << io::serialize(x); }, gen_family(kind, o.n));
    return ExitStatus::yes;
}

ExitStatus run_gadget(const Options& o, std::ostream& out)
{
    GadgetSpec spec;
    spec.a = o.marker_a;
    spec.c = o.marker_c;
    for (const auto& path : split_commas(o.inputs)) {
        spec.machines.push_back(require_dfa(load_automaton(path), path));
    }
    if (o.kind == "suffix") {
        const auto g = suffix_gadget(spec);
        print_notes(out, g.notes);
        out << io::serialize(g.machine);
    } else if (o.kind == "factor") {
        const auto g = factor_gadget(spec);
        print_notes(out, g.notes);
        out << io::serialize(g.machine);
    } else {
        throw InputError("gadget --kind must be suffix or factor");
    }
    return ExitStatus::yes;
}

ExitStatus run_oracle(const Options& o, std::ostream& out)
{
    const Automaton m = load_automaton(o.input);
    const ClosureKind kind = parse_closure_kind(o.kind);
    const std::size_t pad = o.pad.value_or(oracle::default_pad(m));
    return report(out, oracle::universal_up_to(m, kind, {o.maxlen, std::nullopt}, pad), alphabet_of(m));
}

} // namespace

ExitStatus run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Universality of prefix, suffix, factor and subword closures of regular languages", "affix"};
    app.require_subcommand(1);
    Options o;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-subsets", o.max_subsets, "Cap on explored subsets")->check(CLI::PositiveNumber);
    };
    const std::string kinds = "pref|suff|fact|subw";

    auto* check = app.add_subcommand("check", "Closure universality of an automaton");
    check->add_option("--kind", o.kind, kinds)->required();
    check->add_option("--input", o.input, "Automaton file")->required();
    check->add_flag("--witness", o.witness, "Always print a shortest missing word");
    check->add_flag("--antichains", o.antichains, "Prune the subset search with antichains");
    add_budget(check);

    auto* nfa = app.add_subcommand("nfa-universal", "Universality of L(M) itself");
    nfa->add_option("--input", o.input, "Automaton file")->required();
    nfa->add_flag("--antichains", o.antichains, "Prune the subset search with antichains");
    add_budget(nfa);

    auto* sync = app.add_subcommand("sync", "Synchronizing word existence for a DFA");
    sync->add_option("--input", o.input, "DFA file")->required();
    sync->add_flag("--shortest", o.shortest, "Print a shortest reset word");
    add_budget(sync);

    auto* mortal = app.add_subcommand("mortal", "Boolean matrix mortality");
    mortal->add_option("--input", o.input, "Matrix file")->required();
    mortal->add_flag("--witness", o.witness, "Print the shortest zero product (always printed when mortal)");
    add_budget(mortal);

    auto* finite = app.add_subcommand("finite", "Closure universality of S* for a finite word set");
    finite->add_option("--kind", o.kind, "pref|suff|fact")->required();
    finite->add_option("--words", o.words, "Word list file")->required();
    add_budget(finite);

    auto* omega = app.add_subcommand("omega", "Whether S generates all infinite words");
    omega->add_option("--side", o.side, "right|left|bi")->required();
    omega->add_option("--words", o.words, "Word list file")->required();
    add_budget(omega);

    auto* gen = app.add_subcommand("gen", "Print a member of an extremal family");
    gen->add_option("--family", o.family, "pref-line|suffix-primes|subword-chain|factor-wordset|cerny")->required();
    gen->add_option("--n", o.n, "Family parameter");
    gen->add_option("--primes", o.primes, "Comma-separated moduli for suffix-primes");

    auto* gadget = app.add_subcommand("gadget", "Build a hardness gadget from DFAs");
    gadget->add_option("--kind", o.kind, "suffix|factor")->required();
    gadget->add_option("--inputs", o.inputs, "Comma-separated DFA files")->required();
    gadget->add_option("--a", o.marker_a, "Fresh marker symbol a");
    gadget->add_option("--c", o.marker_c, "Fresh marker symbol c");

    auto* orc = app.add_subcommand("oracle", "Brute-force closure universality up to a length");
    orc->add_option("--kind", o.kind, kinds)->required();
    orc->add_option("--input", o.input, "Automaton file")->required();
    orc->add_option("--maxlen", o.maxlen, "Longest word checked")->required();
    orc->add_option("--pad", o.pad, "Longest context word (default 2 x states)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitStatus::yes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitStatus::yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitStatus::input_error;
    }

    SearchBudget budget;
    budget.max_subsets = o.max_subsets;
    budget.antichains = o.antichains;

    try {
        if (check->parsed()) return run_check(o, budget, out);
        if (nfa->parsed()) return run_nfa_universal(o, budget, out);
        if (sync->parsed()) return run_sync(o, budget, out);
        if (mortal->parsed()) return run_mortal(o, budget, out);
        if (finite->parsed()) return run_finite(o, budget, out);
        if (omega->parsed()) return run_omega(o, budget, out);
        if (gen->parsed()) return run_gen(o, out);
        if (gadget->parsed()) return run_gadget(o, out);
        if (orc->parsed()) return run_oracle(o, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return ExitStatus::resource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitStatus::input_error;
    }
    err << "error: no subcommand\n";
    return ExitStatus::input_error;
}

} // namespace affix
