#include "ooeval/langkit.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace ooo {

// ---------------------------------------------------------------------------
// Parser.

namespace {

class regex_parser {
public:
    explicit regex_parser(const std::string& s) : s_(s) {}

    std::unique_ptr<regex_node> parse() {
        auto node = parse_alt();
        if (pos_ != s_.size()) fail(errc::parse_error, "regex: unexpected '" + std::string(1, s_[pos_]) +
                                                           "' at offset " + std::to_string(pos_));
        return node;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ == s_.size(); }
    char peek() const { return s_[pos_]; }

    static std::unique_ptr<regex_node> mk(regex_node::kind k) {
        auto n = std::make_unique<regex_node>();
        n->k = k;
        return n;
    }

    std::unique_ptr<regex_node> parse_alt() {
        auto left = parse_cat();
        while (!at_end() && peek() == '|') {
            ++pos_;
            auto right = parse_cat();
            auto n = mk(regex_node::kind::alt);
            n->a = std::move(left);
            n->b = std::move(right);
            left = std::move(n);
        }
        return left;
    }

    std::unique_ptr<regex_node> parse_cat() {
        std::unique_ptr<regex_node> left;
        while (!at_end() && peek() != '|' && peek() != ')') {
            auto right = parse_rep();
            if (!left) {
                left = std::move(right);
            } else {
                auto n = mk(regex_node::kind::concat);
                n->a = std::move(left);
                n->b = std::move(right);
                left = std::move(n);
            }
        }
        if (!left) left = mk(regex_node::kind::epsilon);
        return left;
    }

    std::unique_ptr<regex_node> parse_rep() {
        auto node = parse_atom();
        while (!at_end() && (peek() == '*' || peek() == '+' || peek() == '?')) {
            auto n = mk(peek() == '*'   ? regex_node::kind::star
                        : peek() == '+' ? regex_node::kind::plus
                                        : regex_node::kind::opt);
            ++pos_;
            n->a = std::move(node);
            node = std::move(n);
        }
        return node;
    }

    std::unique_ptr<regex_node> parse_atom() {
        if (at_end()) fail(errc::parse_error, "regex: unexpected end of pattern");
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto inner = parse_alt();
            if (at_end() || peek() != ')') fail(errc::parse_error, "regex: missing ')'");
            ++pos_;
            return inner;
        }
        if (c == ')' || c == '|' || c == '*' || c == '+' || c == '?')
            fail(errc::parse_error, std::string("regex: unexpected '") + c + "' at offset " + std::to_string(pos_));
        ++pos_;
        if (c == '.') return mk(regex_node::kind::dot);
        auto n = mk(regex_node::kind::letter);
        n->letter = c;
        return n;
    }
};

}  // namespace

std::unique_ptr<regex_node> parse_regex(const std::string& pattern) { return regex_parser(pattern).parse(); }

std::string regex_letters(const std::string& pattern) {
    std::set<char> letters;
    for (char c : pattern)
        if (c != '(' && c != ')' && c != '|' && c != '*' && c != '+' && c != '?' && c != '.') letters.insert(c);
    return std::string(letters.begin(), letters.end());
}

bool regex_uses_dot(const std::string& pattern) { return pattern.find('.') != std::string::npos; }

// ---------------------------------------------------------------------------
// Thompson NFA and subset construction.

namespace {

struct nfa {
    // Transitions by letter index; -1 marks epsilon edges.
    struct edge {
        int label;
        int to;
    };
    std::vector<std::vector<edge>> adj;
    int start = 0, accept = 0;

    int add_state() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    }
    void link(int from, int label, int to) { adj[static_cast<std::size_t>(from)].push_back({label, to}); }
};

// Builds the fragment for `node`, returns (start, accept).
std::pair<int, int> build_nfa(nfa& n, const regex_node* node, const std::string& alphabet) {
    using kind = regex_node::kind;
    switch (node->k) {
        case kind::epsilon: {
            int s = n.add_state(), t = n.add_state();
            n.link(s, -1, t);
            return {s, t};
        }
        case kind::letter: {
            auto pos = alphabet.find(node->letter);
            if (pos == std::string::npos)
                fail(errc::parse_error, std::string("regex letter '") + node->letter + "' not in alphabet");
            int s = n.add_state(), t = n.add_state();
            n.link(s, static_cast<int>(pos), t);
            return {s, t};
        }
        case kind::dot: {
            int s = n.add_state(), t = n.add_state();
            for (std::size_t i = 0; i < alphabet.size(); ++i) n.link(s, static_cast<int>(i), t);
            return {s, t};
        }
        case kind::concat: {
            auto [s1, t1] = build_nfa(n, node->a.get(), alphabet);
            auto [s2, t2] = build_nfa(n, node->b.get(), alphabet);
            n.link(t1, -1, s2);
            return {s1, t2};
        }
        case kind::alt: {
            auto [s1, t1] = build_nfa(n, node->a.get(), alphabet);
            auto [s2, t2] = build_nfa(n, node->b.get(), alphabet);
            int s = n.add_state(), t = n.add_state();
            n.link(s, -1, s1);
            n.link(s, -1, s2);
            n.link(t1, -1, t);
            n.link(t2, -1, t);
            return {s, t};
        }
        case kind::star: {
            auto [s1, t1] = build_nfa(n, node->a.get(), alphabet);
            int s = n.add_state(), t = n.add_state();
            n.link(s, -1, s1);
            n.link(s, -1, t);
            n.link(t1, -1, s1);
            n.link(t1, -1, t);
            return {s, t};
        }
        case kind::plus: {
            auto [s1, t1] = build_nfa(n, node->a.get(), alphabet);
            int t = n.add_state();
            n.link(t1, -1, s1);
            n.link(t1, -1, t);
            return {s1, t};
        }
        case kind::opt: {
            auto [s1, t1] = build_nfa(n, node->a.get(), alphabet);
            int s = n.add_state(), t = n.add_state();
            n.link(s, -1, s1);
            n.link(s, -1, t);
            n.link(t1, -1, t);
            return {s, t};
        }
    }
    fail(errc::contract_error, "bad regex node");
}

std::set<int> epsilon_closure(const nfa& n, const std::set<int>& states) {
    std::set<int> out = states;
    std::vector<int> stack(states.begin(), states.end());
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const auto& e : n.adj[static_cast<std::size_t>(q)])
            if (e.label < 0 && out.insert(e.to).second) stack.push_back(e.to);
    }
    return out;
}

dfa subset_construction(const nfa& n, const std::string& alphabet) {
    const int a = static_cast<int>(alphabet.size());
    std::map<std::set<int>, int> index;
    std::vector<std::set<int>> sets;
    auto intern = [&](const std::set<int>& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(sets.size());
        index[s] = id;
        sets.push_back(s);
        return id;
    };

    dfa d;
    d.letters.assign(alphabet.begin(), alphabet.end());
    d.initial = intern(epsilon_closure(n, {n.start}));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int c = 0; c < a; ++c) {
            std::set<int> next;
            for (int q : sets[i])
                for (const auto& e : n.adj[static_cast<std::size_t>(q)])
                    if (e.label == c) next.insert(e.to);
            // The empty set is the dead state; interning it keeps the DFA complete.
            d.delta.push_back(intern(epsilon_closure(n, next)));
        }
    }
    d.accepting.resize(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) d.accepting[i] = sets[i].count(n.accept) > 0;
    // delta was appended row by row while sets grew; rebuild densely.
    std::vector<int> delta(sets.size() * static_cast<std::size_t>(a));
    for (std::size_t i = 0, row = 0; i < sets.size(); ++i)
        for (int c = 0; c < a; ++c, ++row) delta[i * static_cast<std::size_t>(a) + static_cast<std::size_t>(c)] = d.delta[row];
    d.delta = std::move(delta);
    return d;
}

// Canonical BFS renumbering from the initial state (letters in index order).
dfa canonicalize(const dfa& d) {
    const int a = d.alphabet_size();
    std::vector<int> order(static_cast<std::size_t>(d.states()), -1);
    std::vector<int> bfs;
    order[static_cast<std::size_t>(d.initial)] = 0;
    bfs.push_back(d.initial);
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int c = 0; c < a; ++c) {
            int t = d.step(bfs[i], c);
            if (order[static_cast<std::size_t>(t)] < 0) {
                order[static_cast<std::size_t>(t)] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    dfa out;
    out.letters = d.letters;
    out.initial = 0;
    out.delta.resize(bfs.size() * static_cast<std::size_t>(a));
    out.accepting.resize(bfs.size());
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        out.accepting[i] = d.accepting[static_cast<std::size_t>(bfs[i])];
        for (int c = 0; c < a; ++c)
            out.delta[i * static_cast<std::size_t>(a) + static_cast<std::size_t>(c)] =
                order[static_cast<std::size_t>(d.step(bfs[i], c))];
    }
    return out;
}

}  // namespace

bool dfa::run(std::span<const int> w) const {
    int q = initial;
    for (int c : w) {
        if (c < 0 || c >= alphabet_size()) fail(errc::contract_error, "letter index out of range");
        q = step(q, c);
    }
    return accepting[static_cast<std::size_t>(q)];
}

int dfa::letter_index(char c) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == c) return static_cast<int>(i);
    return -1;
}

dfa minimize(const dfa& d) {
    const int a = d.alphabet_size();
    // Only reachable states participate; canonicalize prunes the rest at the end.
    std::vector<bool> reach(static_cast<std::size_t>(d.states()), false);
    std::vector<int> stack = {d.initial};
    reach[static_cast<std::size_t>(d.initial)] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int c = 0; c < a; ++c) {
            int t = d.step(q, c);
            if (!reach[static_cast<std::size_t>(t)]) {
                reach[static_cast<std::size_t>(t)] = true;
                stack.push_back(t);
            }
        }
    }

    // Moore partition refinement.
    std::vector<int> cls(static_cast<std::size_t>(d.states()), -1);
    for (int q = 0; q < d.states(); ++q)
        if (reach[static_cast<std::size_t>(q)]) cls[static_cast<std::size_t>(q)] = d.accepting[static_cast<std::size_t>(q)] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next(static_cast<std::size_t>(d.states()), -1);
        for (int q = 0; q < d.states(); ++q) {
            if (!reach[static_cast<std::size_t>(q)]) continue;
            std::vector<int> sig;
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int c = 0; c < a; ++c) sig.push_back(cls[static_cast<std::size_t>(d.step(q, c))]);
            auto it = sig_index.find(sig);
            if (it == sig_index.end()) it = sig_index.emplace(sig, static_cast<int>(sig_index.size())).first;
            next[static_cast<std::size_t>(q)] = it->second;
        }
        if (next == cls) break;
        cls = std::move(next);
    }

    int classes = 0;
    for (int q = 0; q < d.states(); ++q) classes = std::max(classes, cls[static_cast<std::size_t>(q)] + 1);
    dfa m;
    m.letters = d.letters;
    m.initial = cls[static_cast<std::size_t>(d.initial)];
    m.delta.assign(static_cast<std::size_t>(classes) * static_cast<std::size_t>(a), -1);
    m.accepting.assign(static_cast<std::size_t>(classes), false);
    for (int q = 0; q < d.states(); ++q) {
        if (!reach[static_cast<std::size_t>(q)]) continue;
        int cq = cls[static_cast<std::size_t>(q)];
        m.accepting[static_cast<std::size_t>(cq)] = d.accepting[static_cast<std::size_t>(q)];
        for (int c = 0; c < a; ++c)
            m.delta[static_cast<std::size_t>(cq) * static_cast<std::size_t>(a) + static_cast<std::size_t>(c)] =
                cls[static_cast<std::size_t>(d.step(q, c))];
    }
    return canonicalize(m);
}

dfa compile_regex(const std::string& pattern, const std::string& alphabet) {
    // Alphabet order is preserved: it fixes letter indexing and therefore the
    // element naming order of syntactic closures.
    if (alphabet.empty()) fail(errc::parse_error, "empty alphabet");
    if (std::set<char>(alphabet.begin(), alphabet.end()).size() != alphabet.size())
        fail(errc::parse_error, "alphabet has repeated letters");
    auto ast = parse_regex(pattern);
    nfa n;
    auto [s, t] = build_nfa(n, ast.get(), alphabet);
    n.start = s;
    n.accept = t;
    return minimize(subset_construction(n, alphabet));
}

bool equivalent(const dfa& a, const dfa& b) {
    if (a.letters != b.letters) return false;
    // BFS over the product automaton looking for a verdict mismatch.
    std::set<std::pair<int, int>> seen;
    std::queue<std::pair<int, int>> q;
    q.push({a.initial, b.initial});
    seen.insert({a.initial, b.initial});
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        if (a.accepting[static_cast<std::size_t>(x)] != b.accepting[static_cast<std::size_t>(y)]) return false;
        for (int c = 0; c < a.alphabet_size(); ++c) {
            std::pair<int, int> nx{a.step(x, c), b.step(y, c)};
            if (seen.insert(nx).second) q.push(nx);
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Syntactic algebras.

namespace {

struct closure_result {
    std::vector<std::vector<int>> transforms;
    std::vector<std::string> words;  // naming word per element ("" for the seeded identity)
    std::vector<int> letter_elem;
};

closure_result transition_closure(const dfa& d, bool seed_identity, int max_elements) {
    const int a = d.alphabet_size();
    const int ns = d.states();
    std::map<std::vector<int>, int> index;
    closure_result out;

    auto intern = [&](const std::vector<int>& t, const std::string& w) -> int {
        auto it = index.find(t);
        if (it != index.end()) return it->second;
        if (static_cast<int>(out.transforms.size()) >= max_elements)
            fail(errc::cap_exceeded, "syntactic closure exceeds element cap");
        int id = static_cast<int>(out.transforms.size());
        index[t] = id;
        out.transforms.push_back(t);
        out.words.push_back(w);
        return id;
    };

    if (seed_identity) {
        std::vector<int> ident(static_cast<std::size_t>(ns));
        for (int q = 0; q < ns; ++q) ident[static_cast<std::size_t>(q)] = q;
        intern(ident, "");
    }
    std::vector<std::vector<int>> letter_t(static_cast<std::size_t>(a), std::vector<int>(static_cast<std::size_t>(ns)));
    for (int c = 0; c < a; ++c)
        for (int q = 0; q < ns; ++q) letter_t[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)] = d.step(q, c);

    std::size_t seeded = out.transforms.size();
    for (int c = 0; c < a; ++c)
        out.letter_elem.push_back(intern(letter_t[static_cast<std::size_t>(c)], std::string(1, d.letters[static_cast<std::size_t>(c)])));
    (void)seeded;

    // BFS by right-extension in alphabet order discovers elements in
    // length-lex order of their shortest generating words.
    for (std::size_t i = 0; i < out.transforms.size(); ++i) {
        std::vector<int> base = out.transforms[i];  // copy: vector may reallocate
        std::string base_word = out.words[i];
        for (int c = 0; c < a; ++c) {
            std::vector<int> composed(static_cast<std::size_t>(ns));
            for (int q = 0; q < ns; ++q)
                composed[static_cast<std::size_t>(q)] =
                    letter_t[static_cast<std::size_t>(c)][static_cast<std::size_t>(base[static_cast<std::size_t>(q)])];
            intern(composed, base_word + d.letters[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

std::string pick_name(const std::string& preferred, const std::vector<std::string>& fallbacks,
                      const std::set<std::string>& taken) {
    if (!taken.count(preferred)) return preferred;
    for (const auto& f : fallbacks)
        if (!taken.count(f)) return f;
    fail(errc::contract_error, "cannot find a free display name");
}

syntactic_structure build_structure(const dfa& d, bool seed_identity, int max_elements) {
    dfa m = minimize(d);
    auto clo = transition_closure(m, seed_identity, max_elements);
    const int k = static_cast<int>(clo.transforms.size());

    std::vector<int> table(static_cast<std::size_t>(k) * k);
    {
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < k; ++i) index[clo.transforms[static_cast<std::size_t>(i)]] = i;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                // i * j acts as "word of i, then word of j".
                const auto& f = clo.transforms[static_cast<std::size_t>(i)];
                const auto& g = clo.transforms[static_cast<std::size_t>(j)];
                std::vector<int> h(f.size());
                for (std::size_t q = 0; q < f.size(); ++q) h[q] = g[static_cast<std::size_t>(f[q])];
                table[static_cast<std::size_t>(i) * k + j] = index.at(h);
            }
    }

    // Display names: shortest generating word, with "1" for the seeded
    // identity and "0" for an absorbing zero (fallbacks on collision).
    std::vector<std::string> names = clo.words;
    std::set<std::string> taken(names.begin(), names.end());
    taken.erase("");
    if (seed_identity) {
        std::string n = pick_name("1", {"e", "id", "_1"}, taken);
        names[0] = n;
        taken.insert(n);
    }
    auto is_zero = [&](int z) {
        for (int x = 0; x < k; ++x)
            if (table[static_cast<std::size_t>(z) * k + x] != z || table[static_cast<std::size_t>(x) * k + z] != z)
                return false;
        return true;
    };
    for (int z = 0; z < k; ++z)
        if (is_zero(z)) {
            taken.erase(names[static_cast<std::size_t>(z)]);
            std::string n = pick_name("0", {"z", "zero", "_0"}, taken);
            names[static_cast<std::size_t>(z)] = n;
            taken.insert(n);
            break;
        }

    syntactic_structure out{finite_semigroup(std::move(names), std::move(table)),
                            clo.letter_elem,
                            {},
                            seed_identity,
                            m};
    out.accepting_elem.resize(static_cast<std::size_t>(k));
    for (int e = 0; e < k; ++e)
        out.accepting_elem[static_cast<std::size_t>(e)] =
            m.accepting[static_cast<std::size_t>(clo.transforms[static_cast<std::size_t>(e)][static_cast<std::size_t>(m.initial)])];
    return out;
}

}  // namespace

bool syntactic_structure::member_by_algebra(std::span<const int> letters_word) const {
    if (letters_word.empty()) {
        if (!monoid) fail(errc::contract_error, "empty word needs the monoid view");
        return accepting_elem[static_cast<std::size_t>(*algebra.identity())];
    }
    int acc = morphism(letters_word[0]);
    for (std::size_t i = 1; i < letters_word.size(); ++i) acc = algebra.mul(acc, morphism(letters_word[i]));
    return accepting_elem[static_cast<std::size_t>(acc)];
}

syntactic_structure syntactic_monoid(const dfa& d, int max_elements) { return build_structure(d, true, max_elements); }

syntactic_structure syntactic_semigroup(const dfa& d, int max_elements) {
    return build_structure(d, false, max_elements);
}

bool is_commutative_language(const dfa& d) {
    return !check_equation(syntactic_monoid(d).algebra, equation_id::com).has_value();
}

}  // namespace ooo
