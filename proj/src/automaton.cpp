#include "hyperdfa/automaton.hpp"

#include <algorithm>

namespace hyperdfa {

void Nfa::normalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());

    if (state_count == 0) throw AutomatonError("nfa has no states");
    if (initial >= state_count) throw AutomatonError("nfa initial state out of range");
    for (const auto& t : transitions) {
        if (t.src >= state_count || t.dst >= state_count)
            throw AutomatonError("nfa transition state out of range");
        if (t.symbol >= alphabet.size()) throw AutomatonError("nfa transition symbol out of range");
    }
    if (!finals.empty() && finals.back() >= state_count)
        throw AutomatonError("nfa final state out of range");
}

Dfa::Dfa(Alphabet alphabet, State initial, std::vector<State> delta, std::vector<bool> finals)
    : alphabet_(std::move(alphabet)), initial_(initial), delta_(std::move(delta)), finals_(std::move(finals)) {
    const std::size_t n = finals_.size();
    if (n == 0) throw AutomatonError("dfa has no states");
    if (alphabet_.empty()) throw AutomatonError("dfa alphabet is empty");
    if (delta_.size() != n * alphabet_.size()) throw AutomatonError("dfa transition table has wrong size");
    if (initial_ >= n) throw AutomatonError("dfa initial state out of range");
    for (State t : delta_)
        if (t >= n) throw AutomatonError("dfa transition function is not total");
}

State Dfa::run(State q, std::span<const Symbol> word) const {
    for (Symbol a : word) q = next(q, a);
    return q;
}

PartialDfa to_partial(const Dfa& d) {
    return PartialDfa{d.state_count(), d.alphabet(), d.initial(), d.delta(), d.finals()};
}

ReverseIndex::ReverseIndex(const Dfa& d) : offsets_(d.state_count() + 1, 0) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet_size();
    for (State t : d.delta()) ++offsets_[t + 1];
    for (std::size_t q = 0; q < n; ++q) offsets_[q + 1] += offsets_[q];
    edges_.resize(d.delta().size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Symbol-major sweep leaves each bucket sorted by (symbol, src).
    for (Symbol a = 0; a < k; ++a)
        for (State q = 0; q < n; ++q) edges_[fill[d.next(q, a)]++] = Edge{q, a};
}

}  // namespace hyperdfa
