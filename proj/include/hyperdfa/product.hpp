#pragma once

#include "hyperdfa/automaton.hpp"
#include "hyperdfa/count.hpp"

namespace hyperdfa {

/// |L(m) △ L(n)| via the reachable product automaton: INFINITE if a product
/// state that can reach a disagreement lies on a cycle, otherwise the exact
/// number of strings ending in a disagreement. Throws AutomatonError on an
/// alphabet mismatch.
DiffCount diff_count(const Dfa& m, const Dfa& n);

/// |L(q, m) △ L(p, n)| for right languages of arbitrary states.
DiffCount right_language_diff(const Dfa& m, State q, const Dfa& n, State p);

/// True iff the right languages of q and p in d are almost-equal.
bool almost_equiv_oracle(const Dfa& d, State q, State p);

/// True iff a DFA isomorphism exists between m and n (both accessible).
bool isomorphic(const Dfa& m, const Dfa& n);

}  // namespace hyperdfa
