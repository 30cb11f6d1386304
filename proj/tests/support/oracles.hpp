#pragma once

// Test-only brute-force oracles and instance generators. Nothing here calls
// into the algorithms under test except for the automaton container types,
// the random NFA model, subset construction and canonical renumbering.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperdfa/automaton.hpp"
#include "hyperdfa/count.hpp"

namespace hyperdfa::testing {

using Word = std::vector<Symbol>;

/// All words of length <= max_len over k symbols, shortest first.
std::vector<Word> all_words(std::size_t k, std::size_t max_len);

/// Literal enumeration of |{w : |w| <= max_len, w in L(q) xor w in L(p)}|.
std::size_t enumerate_diff(const Dfa& d, State q, State p, std::size_t max_len);

/// Literal enumeration of the words up to max_len on which m and n disagree.
std::size_t enumerate_diff_pair(const Dfa& m, const Dfa& n, std::size_t max_len);

/// Same set as enumerate_diff, literally enumerated, as strings over the alphabet labels.
std::vector<std::string> diff_strings(const Dfa& d, State q, State p, std::size_t max_len);

/// Number of diff strings of each exact length 0..max_len, counted by a
/// layered walk over state pairs (no recursion on pairs, no cycle analysis).
std::vector<Count> diff_by_length(const Dfa& m, State q, const Dfa& n, State p, std::size_t max_len);

/// Sum of diff_by_length over lengths in [lo, hi].
Count diff_in_window(const Dfa& m, State q, const Dfa& n, State p, std::size_t lo, std::size_t hi);

/// |L(q) △ L(p)|, judged finite iff no difference has a length in (N, 2N]
/// where N = |Q_m| * |Q_n| bounds every cycle-free product path.
struct BruteDiff {
    bool finite;
    Count count;  // valid when finite
};
BruteDiff brute_diff(const Dfa& m, State q, const Dfa& n, State p);

/// Number of words of length <= max_len leading from the initial state to q,
/// literally enumerated.
Count enumerate_access(const Dfa& d, State q, std::size_t max_len);

/// Kernel test by counting: q is reached by some word of length in (n, 2n].
bool reached_by_long_word(const Dfa& d, State q);

/// Depth-first search; every state reaches itself.
bool reaches(const Dfa& d, State from, State to);

/// Moore's round-based partition refinement, written independently of the
/// library's Hopcroft implementation. Output is the quotient of the
/// accessible part, numbered by class discovery order.
Dfa moore_minimize(const Dfa& d);

/// Uniform random total DFA.
Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t symbols, double final_prob);

/// Random DFA shaped like a preamble DAG feeding a random kernel, so that
/// minimization keeps preamble states and almost-equivalent blocks.
Dfa random_layered_dfa(std::mt19937_64& rng, std::size_t preamble, std::size_t kernel, std::size_t symbols,
                       double final_prob);

/// Mixed-source minimal DFAs with at most `max_states` states over {a, b}.
/// Instances whose initial state is almost-equivalent to a kernel state are
/// thinned out so that most instances exercise preamble blocks.
std::vector<Dfa> random_minimal_dfas(std::size_t count, std::size_t max_states, std::uint64_t seed);

}  // namespace hyperdfa::testing
