#ifndef OOEVAL_LANGKIT_HPP
#define OOEVAL_LANGKIT_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ooeval/common.hpp"
#include "ooeval/semigroup.hpp"

namespace ooo {

// ---------------------------------------------------------------------------
// Regular expressions. Grammar:
//   alt  := cat ('|' cat)*
//   cat  := rep*                       (empty concatenation matches epsilon)
//   rep  := atom ('*' | '+' | '?')*
//   atom := '(' alt ')' | '.' | letter
// A letter is any character other than the metacharacters ()|*+?.
struct regex_node {
    enum class kind { epsilon, letter, dot, concat, alt, star, plus, opt } k;
    char letter = 0;
    std::unique_ptr<regex_node> a, b;
};

std::unique_ptr<regex_node> parse_regex(const std::string& pattern);

// Letters appearing literally in the pattern, sorted and deduplicated.
std::string regex_letters(const std::string& pattern);
bool regex_uses_dot(const std::string& pattern);

// ---------------------------------------------------------------------------
// Complete DFAs over an indexed alphabet. compile_regex always returns the
// minimal complete DFA in canonical BFS state order, so two compilations of
// the same language over the same alphabet are structurally identical.
struct dfa {
    std::vector<char> letters;  // index -> letter, in alphabet order
    int initial = 0;
    std::vector<int> delta;  // state * letters.size() + letter -> state
    std::vector<bool> accepting;

    int states() const { return static_cast<int>(accepting.size()); }
    int alphabet_size() const { return static_cast<int>(letters.size()); }
    int step(int q, int a) const { return delta[static_cast<std::size_t>(q) * letters.size() + static_cast<std::size_t>(a)]; }
    bool run(std::span<const int> w) const;
    int letter_index(char c) const;  // -1 when absent
};

dfa compile_regex(const std::string& pattern, const std::string& alphabet);
dfa minimize(const dfa& d);
bool equivalent(const dfa& a, const dfa& b);  // requires identical letter sets

// ---------------------------------------------------------------------------
// Syntactic algebras, computed as the transition monoid / semigroup of the
// minimal complete DFA. Elements are discovered by a length-lex BFS over
// words, so each element is named by the shortest word mapping to it (the
// identity displays as "1", an absorbing zero as "0"). Discovery order is the
// element-declaration order used by equation witnesses.
struct syntactic_structure {
    finite_semigroup algebra;
    std::vector<int> letter_to_elem;   // alphabet index -> element
    std::vector<bool> accepting_elem;  // element maps initial state into accepting
    bool monoid = false;               // identity was seeded for the empty word
    dfa machine;

    int morphism(int letter) const { return letter_to_elem[static_cast<std::size_t>(letter)]; }
    bool member_by_algebra(std::span<const int> letters_word) const;
};

inline constexpr int default_syntactic_cap = 10'000;

syntactic_structure syntactic_monoid(const dfa& d, int max_elements = default_syntactic_cap);
syntactic_structure syntactic_semigroup(const dfa& d, int max_elements = default_syntactic_cap);

bool is_commutative_language(const dfa& d);

}  // namespace ooo

#endif
