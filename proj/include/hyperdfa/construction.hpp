#pragma once

#include "hyperdfa/automaton.hpp"
#include "hyperdfa/text_format.hpp"

namespace hyperdfa {

/// Subset construction. The empty subset becomes an explicit sink when it is
/// reachable. States are numbered in breadth-first discovery order with
/// symbols taken in alphabet order.
Dfa determinize(const Nfa& n);

/// Completes a partial DFA with a fresh non-final sink (only if some
/// transition is undefined on a reachable state) and drops unreachable states.
/// Output is canonically numbered.
Dfa complete_and_trim(const PartialDfa& d);

/// Drops unreachable states and renumbers breadth-first from the initial
/// state, symbols in alphabet order.
Dfa canonicalize(const Dfa& d);

/// Same as canonicalize, but starting from `start` instead of the initial
/// state.
Dfa canonicalize_from(const Dfa& d, State start);

/// Hopcroft partition refinement. Input must be total; unreachable states are
/// dropped first. Output is canonically numbered.
Dfa minimize(const Dfa& d);

bool is_minimal(const Dfa& d);

/// merge(p -> q): transitions entering p are redirected to q, the initial
/// state moves to q if it was p, and q keeps its finality. For p != q the
/// state p is removed and the states above it shift down by one; nothing
/// else is renumbered or trimmed.
Dfa merge(const Dfa& d, State p, State q);

/// Any parsed automaton to a total, accessible DFA (no minimization).
Dfa to_dfa(const ParsedAutomaton& a);

/// to_dfa followed by minimize.
Dfa to_minimal_dfa(const ParsedAutomaton& a);

}  // namespace hyperdfa
