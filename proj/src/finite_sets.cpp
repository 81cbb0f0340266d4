#include "affix/finite_sets.hpp"

#include <algorithm>
#include <string>

#include "affix/closures.hpp"
#include "affix/deciders.hpp"

namespace affix {

WordSet::WordSet(Alphabet alphabet, const std::vector<Word>& words) : alphabet_(std::move(alphabet))
{
    for (const auto& w : words) {
        insert(w);
    }
}

void WordSet::insert(Word w)
{
    check_word(alphabet_, w);
    words_.insert(std::move(w));
}

WordSet WordSet::reversed() const
{
    WordSet out(alphabet_);
    for (const auto& w : words_) {
        out.insert(Word(w.rbegin(), w.rend()));
    }
    return out;
}

// ---------------------------------------------------------------------------

Trie::Trie(std::size_t symbol_count) : symbol_count_(symbol_count), nodes_(1) {}

void Trie::insert(const Word& w)
{
    std::size_t node = root;
    for (Symbol a : w) {
        if (a >= symbol_count_) {
            throw InputError("trie symbol out of range");
        }
        if (nodes_[node].terminal) {
            return;
        }
        auto it = nodes_[node].children.find(a);
        if (it == nodes_[node].children.end()) {
            const std::size_t fresh = nodes_.size();
            nodes_[node].children.emplace(a, fresh);
            nodes_.emplace_back();
            node = fresh;
        } else {
            node = it->second;
        }
    }
    // w is a prefix of everything below this node; it replaces them.
    nodes_[node].children.clear();
    nodes_[node].terminal = true;
}

std::vector<std::size_t> Trie::live_nodes() const
{
    std::vector<std::size_t> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& [a, child] : nodes_[order[i]].children) {
            order.push_back(child);
        }
    }
    return order;
}

std::vector<Word> Trie::words() const
{
    std::vector<Word> out;
    std::vector<std::pair<std::size_t, Word>> stack{{root, {}}};
    while (!stack.empty()) {
        auto [node, path] = std::move(stack.back());
        stack.pop_back();
        if (nodes_[node].terminal) {
            out.push_back(path);
        }
        for (const auto& [a, child] : nodes_[node].children) {
            Word next = path;
            next.push_back(a);
            stack.emplace_back(child, std::move(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// All shortest words missing from Pref(S*), or nothing when it is universal.
std::optional<std::vector<Word>> shortest_unextendable(const WordSet& s)
{
    const std::size_t k = s.alphabet().size();
    Trie trie(k);
    for (const auto& w : s.words()) {
        if (!w.empty()) {
            trie.insert(w);
        }
    }
    if (trie.degree(Trie::root) == 0) {
        // S* = {epsilon}: every single symbol is missing.
        std::vector<Word> out;
        for (Symbol a = 0; a < k; ++a) {
            out.push_back({a});
        }
        return out;
    }

    struct Path {
        std::size_t parent;
        Symbol via;
        std::size_t depth;
    };
    std::vector<std::size_t> order{Trie::root};
    std::vector<Path> info{{0, 0, 0}};
    std::optional<std::size_t> best_depth;
    std::vector<Word> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t node = order[i];
        const std::size_t degree = trie.degree(node);
        if (best_depth && info[i].depth > *best_depth) {
            break;
        }
        if (degree != 0 && degree != k) {
            best_depth = info[i].depth;
            Word path(info[i].depth);
            for (std::size_t j = i, d = path.size(); d > 0; --d) {
                path[d - 1] = info[j].via;
                j = info[j].parent;
            }
            for (Symbol a = 0; a < k; ++a) {
                if (!trie.children(node).contains(a)) {
                    Word w = path;
                    w.push_back(a);
                    out.push_back(std::move(w));
                }
            }
        }
        for (const auto& [a, child] : trie.children(node)) {
            order.push_back(child);
            info.push_back({i, a, info[i].depth + 1});
        }
    }
    if (out.empty()) {
        return std::nullopt;
    }
    return out;
}

} // namespace

Decision pref_star_universal(const WordSet& s)
{
    auto missing = shortest_unextendable(s);
    if (!missing) {
        return Decision::yes();
    }
    return Decision::no(*std::min_element(missing->begin(), missing->end()));
}

Decision suff_star_universal(const WordSet& s)
{
    auto missing = shortest_unextendable(s.reversed());
    if (!missing) {
        return Decision::yes();
    }
    for (auto& w : *missing) {
        std::reverse(w.begin(), w.end());
    }
    return Decision::no(*std::min_element(missing->begin(), missing->end()));
}

Nfa star_nfa(const WordSet& s)
{
    Nfa out(s.alphabet(), 1);
    const State hub = 0;
    out.set_initial(hub);
    out.set_final(hub);
    for (const auto& w : s.words()) {
        if (w.empty()) {
            continue;
        }
        State from = hub;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const State fresh = out.add_state();
            out.add_transition(from, w[i], fresh);
            from = fresh;
        }
        out.add_transition(from, w.back(), hub);
    }
    return out;
}

Decision fact_star_universal(const WordSet& s, const SearchBudget& budget)
{
    return nfa_universal(closure_nfa(star_nfa(s), ClosureKind::fact), budget);
}

std::string_view to_string(OmegaSide side)
{
    switch (side) {
    case OmegaSide::right: return "right";
    case OmegaSide::left: return "left";
    case OmegaSide::bi: return "bi";
    }
    return "?";
}

OmegaSide parse_omega_side(std::string_view name)
{
    if (name == "right") return OmegaSide::right;
    if (name == "left") return OmegaSide::left;
    if (name == "bi") return OmegaSide::bi;
    throw InputError("unknown omega side: " + std::string(name));
}

Decision omega_universal(const WordSet& s, OmegaSide side, const SearchBudget& budget)
{
    switch (side) {
    case OmegaSide::right: return pref_star_universal(s);
    case OmegaSide::left: return suff_star_universal(s);
    case OmegaSide::bi: return fact_star_universal(s, budget);
    }
    throw InputError("unknown omega side");
}

} // namespace affix
