#include "hyperdfa/hypermin.hpp"

#include <string>

#include "hyperdfa/construction.hpp"
#include "hyperdfa/product.hpp"

namespace hyperdfa {

Dfa merge_states_naive(const Dfa& d, const AlmostEquivPartition& part, const KernelInfo& kernel) {
    const std::size_t n = d.state_count();
    std::vector<State> into(n);
    for (State q = 0; q < n; ++q) {
        const std::size_t b = part.block_of(q);
        if (kernel.kernel(q))
            into[q] = q;
        else if (!part.kernel_members[b].empty())
            into[q] = part.kernel_members[b].front();
        else
            into[q] = part.blocks[b].front();
    }
    // Merged states lose all incoming transitions and drop out in the trim.
    std::vector<State> delta(d.delta().size());
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = into[d.delta()[i]];
    return canonicalize(Dfa(d.alphabet(), into[d.initial()], std::move(delta), d.finals()));
}

FinalityChoice comp_finality(const Dfa& d, std::span<const State> block, const AccessCounts& access) {
    if (block.empty()) throw AutomatonError("comp_finality: empty block");
    Count if_nonfinal = 0;  // accepted strings lost
    Count if_final = 0;     // rejected strings gained
    for (State q : block) {
        if (!access.contains(q))
            throw AutomatonError("comp_finality: state " + std::to_string(q) + " is not a preamble state");
        (d.is_final(q) ? if_nonfinal : if_final) += access.at(q);
    }
    const bool make_final = if_nonfinal > if_final;
    State rep = kNoState;
    for (State q : block)
        if (d.is_final(q) == make_final) {
            rep = q;
            break;
        }
    return FinalityChoice{rep, make_final ? if_final : if_nonfinal, make_final};
}

HyperOptReport opt_merge(const Dfa& d, const AlmostEquivPartition& part, const KernelInfo& /*kernel*/,
                         ErrorMatrix& errors, const AccessCounts& access) {
    if (!is_minimal(d)) throw AutomatonError("opt_merge requires a minimal dfa");
    const std::size_t k = d.alphabet_size();
    HyperOptReport report;
    report.states_before = d.state_count();
    MergePlan& plan = report.plan;

    const auto initial_mates = part.kernel_mates(d.initial());
    if (!initial_mates.empty()) {
        // Every hyper-minimal DFA is the kernel entered at some mate of q0.
        std::optional<InitialChoice> best;
        for (State q : initial_mates) {
            const Count& e = errors.at(d.initial(), q);
            if (!best || e < best->errors) best = InitialChoice{q, e};
        }
        plan.initial_choice = best;
        plan.planned_error = best->errors;
        report.output = canonicalize_from(d, best->target);
    } else {
        // Plan against the unmodified input, then apply in one pass.
        std::vector<State> rep_of_block(part.blocks.size(), kNoState);
        for (std::size_t b : part.pure_preamble_blocks) {
            FinalityChoice fc = comp_finality(d, part.blocks[b], access);
            rep_of_block[b] = fc.representative;
            plan.planned_error += fc.errors;
            plan.block_finality.push_back({b, std::move(fc)});
        }

        std::vector<State> delta = d.delta();
        for (std::size_t b : part.pure_preamble_blocks) {
            const auto& members = part.blocks[b];
            const State rep = rep_of_block[b];
            for (Symbol a = 0; a < k; ++a) {
                const std::size_t succ_block = part.block_of(d.next(rep, a));
                const auto& candidates = part.kernel_members[succ_block];
                if (candidates.empty()) {
                    delta[rep * k + a] = rep_of_block[succ_block];
                    continue;
                }
                std::optional<BlockTarget> best;
                for (State target : candidates) {
                    Count cost = 0;
                    for (State p : members) cost += access.at(p) * errors.at(d.next(p, a), target);
                    if (!best || cost < best->errors) best = BlockTarget{b, a, target, std::move(cost)};
                }
                delta[rep * k + a] = best->target;
                plan.planned_error += best->errors;
                plan.block_targets.push_back(std::move(*best));
            }
        }
        const State initial = rep_of_block[part.block_of(d.initial())];
        report.output = canonicalize(Dfa(d.alphabet(), initial, std::move(delta), d.finals()));
    }
    report.errors = plan.planned_error;
    report.states_after = report.output.state_count();
    return report;
}

Analysis analyze(const Dfa& d) {
    Dfa minimal = minimize(d);
    KernelInfo kernel = kernel_preamble(minimal);
    AlmostEquivPartition partition = compute_almost_equivalence(minimal, kernel);
    AccessCounts access = comp_access(minimal, kernel);
    return Analysis{std::move(minimal), std::move(kernel), std::move(partition), std::move(access)};
}

HyperOptReport hyper_optimize(const Dfa& input) {
    const Analysis a = analyze(input);
    ErrorMatrix errors(a.minimal, a.partition);
    return opt_merge(a.minimal, a.partition, a.kernel, errors, a.access);
}

HyperOptReport hyper_optimize(const ParsedAutomaton& input) { return hyper_optimize(to_dfa(input)); }

Dfa hyper_minimize_naive(const Dfa& input) {
    const Analysis a = analyze(input);
    return merge_states_naive(a.minimal, a.partition, a.kernel);
}

VariantEnumerator::VariantEnumerator(const Dfa& d, const AlmostEquivPartition& part, const KernelInfo& /*kernel*/,
                                     std::size_t max_variants)
    : dfa_(d), part_(part) {
    const auto mates = part.kernel_mates(d.initial());
    if (!mates.empty()) {
        initial_options_.assign(mates.begin(), mates.end());
        total_ = initial_options_.size();
        return;
    }
    for (std::size_t b = 0; b < part.pure_preamble_blocks.size(); ++b) radix_.push_back(2);
    for (std::size_t b : part.pure_preamble_blocks) {
        State rep = part.blocks[b].front();
        for (Symbol a = 0; a < d.alphabet_size(); ++a) {
            const auto& candidates = part.kernel_members[part.block_of(d.next(rep, a))];
            if (candidates.empty()) continue;
            target_slots_.emplace_back(b, a);
            radix_.push_back(candidates.size());
        }
    }
    total_ = 1;
    for (std::size_t r : radix_) {
        if (total_ > max_variants / r) throw AutomatonError("variant enumeration exceeds size guard");
        total_ *= r;
    }
    digits_.assign(radix_.size(), 0);
}

Dfa VariantEnumerator::build_current() const {
    if (!initial_options_.empty()) return canonicalize_from(dfa_, initial_options_[produced_]);

    const std::size_t k = dfa_.alphabet_size();
    const auto& pure = part_.pure_preamble_blocks;
    std::vector<State> rep_of_block(part_.blocks.size(), kNoState);
    for (std::size_t b : pure) rep_of_block[b] = part_.blocks[b].front();

    std::vector<State> delta = dfa_.delta();
    std::vector<bool> finals = dfa_.finals();
    for (std::size_t i = 0; i < pure.size(); ++i) {
        const State rep = rep_of_block[pure[i]];
        finals[rep] = digits_[i] == 1;
        for (Symbol a = 0; a < k; ++a) delta[rep * k + a] = rep_of_block[part_.block_of(dfa_.next(rep, a))];
    }
    for (std::size_t s = 0; s < target_slots_.size(); ++s) {
        auto [b, a] = target_slots_[s];
        const State rep = rep_of_block[b];
        const auto& candidates = part_.kernel_members[part_.block_of(dfa_.next(rep, a))];
        delta[rep * k + a] = candidates[digits_[pure.size() + s]];
    }
    const State initial = rep_of_block[part_.block_of(dfa_.initial())];
    return canonicalize(Dfa(dfa_.alphabet(), initial, std::move(delta), std::move(finals)));
}

std::optional<Variant> VariantEnumerator::next() {
    if (produced_ == total_) return std::nullopt;
    Dfa variant = build_current();
    DiffCount e = diff_count(dfa_, variant);
    ++produced_;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (++digits_[i] < radix_[i]) break;
        digits_[i] = 0;
    }
    return Variant{std::move(variant), std::move(e)};
}

}  // namespace hyperdfa
