#pragma once

#include <span>
#include <vector>

#include "hyperdfa/automaton.hpp"
#include "hyperdfa/kernel.hpp"

namespace hyperdfa {

/// The almost-equivalence congruence of a minimal DFA, with the kernel
/// bookkeeping the error model needs.
struct AlmostEquivPartition {
    std::vector<std::size_t> block_id;       // per state
    std::vector<std::vector<State>> blocks;  // members ascending; blocks ordered by smallest member
    std::vector<std::vector<State>> kernel_members;  // per block, ascending
    std::vector<std::size_t> pure_preamble_blocks;   // blocks without kernel members, ascending

    std::size_t block_of(State q) const { return block_id[q]; }
    bool related(State q, State p) const { return block_id[q] == block_id[p]; }

    /// Kernel states almost-equivalent to q.
    std::span<const State> kernel_mates(State q) const { return kernel_members[block_id[q]]; }

    bool is_pure_preamble(std::size_t block) const { return kernel_members[block].empty(); }
};

/// Signature-merging fixpoint: two live classes whose successor classes agree
/// on every symbol are united, and predecessors of the absorbed class are
/// revisited until no two classes share a signature. Throws AutomatonError if
/// `d` is not minimal.
AlmostEquivPartition compute_almost_equivalence(const Dfa& d, const KernelInfo& kernel);

}  // namespace hyperdfa
