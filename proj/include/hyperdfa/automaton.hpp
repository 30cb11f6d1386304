#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperdfa {

using State = std::uint32_t;
using Symbol = std::uint32_t;

inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Raised when an operation's precondition on its automaton arguments fails.
class AutomatonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Alphabet = std::vector<std::string>;

struct Transition {
    State src;
    Symbol symbol;
    State dst;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic automaton without epsilon moves.
struct Nfa {
    std::size_t state_count = 0;
    Alphabet alphabet;
    State initial = 0;
    std::vector<Transition> transitions;  // sorted by (src, symbol, dst), no duplicates
    std::vector<State> finals;            // sorted, no duplicates

    /// Sorts and deduplicates, then checks index bounds. Throws AutomatonError.
    void normalize();

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// Deterministic automaton whose transition function may be undefined
/// (kNoState) for some (state, symbol) pairs. This is what a `dfa` file
/// decodes to before completion.
struct PartialDfa {
    std::size_t state_count = 0;
    Alphabet alphabet;
    State initial = 0;
    std::vector<State> delta;  // row-major: delta[q * |alphabet| + a]
    std::vector<bool> finals;

    State next(State q, Symbol a) const { return delta[q * alphabet.size() + a]; }
};

/// Deterministic automaton with a total transition function.
class Dfa {
public:
    Dfa() = default;

    /// `delta` is row-major with one entry per (state, symbol); every entry
    /// must name a state. Throws AutomatonError on malformed input.
    Dfa(Alphabet alphabet, State initial, std::vector<State> delta, std::vector<bool> finals);

    std::size_t state_count() const { return finals_.size(); }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }

    State next(State q, Symbol a) const { return delta_[q * alphabet_.size() + a]; }
    std::span<const State> row(State q) const {
        return {delta_.data() + q * alphabet_.size(), alphabet_.size()};
    }
    bool is_final(State q) const { return finals_[q]; }

    const std::vector<State>& delta() const { return delta_; }
    const std::vector<bool>& finals() const { return finals_; }

    /// Runs the automaton from `q` on a word of symbol indices.
    State run(State q, std::span<const Symbol> word) const;
    bool accepts(std::span<const Symbol> word) const { return is_final(run(initial_, word)); }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<bool> finals_;
};

PartialDfa to_partial(const Dfa& d);

/// Predecessor index: for every state, its incoming (src, symbol) pairs
/// sorted by (symbol, src).
class ReverseIndex {
public:
    explicit ReverseIndex(const Dfa& d);

    struct Edge {
        State src;
        Symbol symbol;
    };

    std::span<const Edge> incoming(State q) const {
        return {edges_.data() + offsets_[q], offsets_[q + 1] - offsets_[q]};
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Edge> edges_;
};

}  // namespace hyperdfa
