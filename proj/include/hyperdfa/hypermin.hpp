#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperdfa/almost_equiv.hpp"
#include "hyperdfa/automaton.hpp"
#include "hyperdfa/count.hpp"
#include "hyperdfa/error_model.hpp"
#include "hyperdfa/kernel.hpp"
#include "hyperdfa/text_format.hpp"

namespace hyperdfa {

/// Merges almost-equivalent states without regard to errors: preamble members
/// of a block with kernel states go into its smallest kernel member, and a
/// pure preamble block collapses into its smallest member. Output is
/// hyper-minimal and canonically numbered.
Dfa merge_states_naive(const Dfa& d, const AlmostEquivPartition& part, const KernelInfo& kernel);

struct FinalityChoice {
    State representative;  // smallest member with the chosen finality
    Count errors;
    bool make_final;
};

/// Finality of a block of almost-equivalent preamble states: making it final
/// costs the access counts of its non-final members and vice versa. Ties go
/// to non-final. Throws AutomatonError if a member is a kernel state.
FinalityChoice comp_finality(const Dfa& d, std::span<const State> block, const AccessCounts& access);

struct InitialChoice {
    State target;  // kernel state the initial state is merged into
    Count errors;
};

struct BlockFinality {
    std::size_t block;
    FinalityChoice choice;
};

struct BlockTarget {
    std::size_t block;
    Symbol symbol;
    State target;  // kernel state
    Count errors;
};

/// Every decision taken by the optimal merge, with its error contribution.
struct MergePlan {
    std::optional<InitialChoice> initial_choice;
    std::vector<BlockFinality> block_finality;  // ordered by block
    std::vector<BlockTarget> block_targets;     // ordered by (block, symbol)
    Count planned_error = 0;
};

struct HyperOptReport {
    Dfa output;
    Count errors;
    MergePlan plan;
    std::size_t states_before = 0;  // minimal input
    std::size_t states_after = 0;
};

/// Hyper-optimal merge of a minimal DFA. `errors` is filled lazily.
HyperOptReport opt_merge(const Dfa& d, const AlmostEquivPartition& part, const KernelInfo& kernel,
                         ErrorMatrix& errors, const AccessCounts& access);

/// Everything needed to hyper-minimize one minimal DFA.
struct Analysis {
    Dfa minimal;
    KernelInfo kernel;
    AlmostEquivPartition partition;
    AccessCounts access;
};

/// Minimizes and runs the kernel, almost-equivalence and access analyses.
Analysis analyze(const Dfa& d);

/// Full pipeline: to total DFA, minimize, analyze, opt_merge.
HyperOptReport hyper_optimize(const ParsedAutomaton& input);
HyperOptReport hyper_optimize(const Dfa& input);

/// Pipeline with the naive strategy; the result carries no error count.
Dfa hyper_minimize_naive(const Dfa& input);

struct Variant {
    Dfa dfa;
    DiffCount errors;  // against the minimal input
};

/// Lazily enumerates every hyper-minimal DFA for a minimal DFA, up to
/// isomorphism: one per kernel state almost-equivalent to the initial state
/// if there is one, otherwise every combination of block finality and kernel
/// target per (pure preamble block, symbol). Meant for small inputs; the
/// constructor throws AutomatonError when the variant count exceeds
/// `max_variants`.
class VariantEnumerator {
public:
    VariantEnumerator(const Dfa& d, const AlmostEquivPartition& part, const KernelInfo& kernel,
                      std::size_t max_variants = 1u << 16);

    std::size_t size() const { return total_; }

    /// Next variant, or nullopt when exhausted.
    std::optional<Variant> next();

private:
    Dfa build_current() const;

    const Dfa& dfa_;
    const AlmostEquivPartition& part_;
    std::vector<State> initial_options_;
    // Odometer digits: one per pure preamble block (finality), then one per
    // (block, symbol) slot with kernel-mate successors (target choice).
    std::vector<std::size_t> radix_;
    std::vector<std::size_t> digits_;
    std::vector<std::pair<std::size_t, Symbol>> target_slots_;
    std::size_t total_ = 0;
    std::size_t produced_ = 0;
};

}  // namespace hyperdfa
