#pragma once

#include <optional>
#include <vector>

#include "hyperdfa/almost_equiv.hpp"
#include "hyperdfa/automaton.hpp"
#include "hyperdfa/count.hpp"
#include "hyperdfa/kernel.hpp"

namespace hyperdfa {

/// Exact |L(q) △ L(p)| for almost-equivalent pairs of a minimal DFA.
///
/// Entries are filled lazily on first request by evaluating
///
///   E(q, q) = 0
///   E(q, p) = [q and p differ on finality] + sum over a of E(δ(q, a), δ(p, a))
///
/// with an explicit stack, since chains of pending pairs can be quadratic in
/// the state count. Storage is one triangular table per almost-equivalence
/// block. The matrix keeps references to the DFA and partition it was built
/// from; both must outlive it. Filling is single-threaded; concurrent reads are
/// safe once every needed entry is filled (see fill_all).
class ErrorMatrix {
public:
    ErrorMatrix(const Dfa& d, const AlmostEquivPartition& part);

    /// Throws AutomatonError if q and p are not almost-equivalent.
    const Count& at(State q, State p);

    /// Entry if already computed.
    const Count* cached(State q, State p) const;

    /// Computes every entry (O(mn) total).
    void fill_all();

    std::size_t computed_entries() const { return computed_; }

private:
    enum class Status : unsigned char { uncomputed, pending, computed };

    std::size_t slot(State q, State p) const;  // q, p in the same block

    const Dfa* dfa_;
    const AlmostEquivPartition* part_;
    std::vector<std::size_t> local_;        // position of each state inside its block
    std::vector<std::size_t> block_base_;   // offset of each block's triangle
    std::vector<Count> values_;
    std::vector<Status> status_;
    std::size_t computed_ = 0;
};

/// Access counts |L(M, q)| for preamble states.
class AccessCounts {
public:
    AccessCounts() = default;
    explicit AccessCounts(std::vector<std::optional<Count>> counts) : counts_(std::move(counts)) {}

    bool contains(State q) const { return q < counts_.size() && counts_[q].has_value(); }

    /// Throws AutomatonError for kernel states, whose count is infinite.
    const Count& at(State q) const;

private:
    std::vector<std::optional<Count>> counts_;
};

/// Path counts over the preamble in topological order.
AccessCounts comp_access(const Dfa& d, const KernelInfo& kernel);

/// w_p * E(p, q): the error count of merge(p -> q) for a preamble state
/// p ~ q, exact when p is not reachable from q. If q reaches p the merge
/// closes a cycle through q and the count no longer applies.
Count merge_error_count(State p, State q, ErrorMatrix& errors, const AccessCounts& access);

}  // namespace hyperdfa
