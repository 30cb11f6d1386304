#include "hyperdfa/error_model.hpp"

#include <string>

namespace hyperdfa {

ErrorMatrix::ErrorMatrix(const Dfa& d, const AlmostEquivPartition& part)
    : dfa_(&d), part_(&part), local_(d.state_count(), 0) {
    std::size_t total = 0;
    for (const auto& block : part.blocks) {
        block_base_.push_back(total);
        for (std::size_t i = 0; i < block.size(); ++i) local_[block[i]] = i;
        total += block.size() * (block.size() + 1) / 2;
    }
    values_.resize(total);
    status_.assign(total, Status::uncomputed);
    // Diagonal entries are zero.
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
        for (State q : part.blocks[b]) {
            status_[slot(q, q)] = Status::computed;
            ++computed_;
        }
}

std::size_t ErrorMatrix::slot(State q, State p) const {
    std::size_t i = local_[q], j = local_[p];
    if (i > j) std::swap(i, j);
    return block_base_[part_->block_of(q)] + j * (j + 1) / 2 + i;
}

const Count* ErrorMatrix::cached(State q, State p) const {
    if (!part_->related(q, p)) return nullptr;
    std::size_t s = slot(q, p);
    return status_[s] == Status::computed ? &values_[s] : nullptr;
}

const Count& ErrorMatrix::at(State q, State p) {
    if (q >= dfa_->state_count() || p >= dfa_->state_count() || !part_->related(q, p))
        throw AutomatonError("error matrix queried for states " + std::to_string(q) + ", " + std::to_string(p) +
                             " that are not almost-equivalent");
    const std::size_t root = slot(q, p);
    if (status_[root] == Status::computed) return values_[root];

    // Two-phase DFS: a frame is expanded once, then finalized after every
    // frame above it (its descendants) has been computed. Meeting a pending
    // pair that is not yet expanded here means it is an ancestor, i.e. the
    // difference is infinite, which cannot happen on a minimal DFA.
    const std::size_t k = dfa_->alphabet_size();
    struct Frame {
        State x, y;
        bool expanded;
    };
    std::vector<Frame> stack{{q, p, false}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const std::size_t s = slot(f.x, f.y);
        if (status_[s] == Status::computed) {
            stack.pop_back();
            continue;
        }
        if (!f.expanded) {
            if (status_[s] == Status::pending)
                throw AutomatonError("error matrix: infinite difference (input not minimal?)");
            status_[s] = Status::pending;
            f.expanded = true;
            const State x = f.x, y = f.y;
            for (Symbol a = 0; a < k; ++a) {
                State tx = dfa_->next(x, a), ty = dfa_->next(y, a);
                if (status_[slot(tx, ty)] != Status::computed) stack.push_back({tx, ty, false});
            }
            continue;
        }
        Count sum = dfa_->is_final(f.x) != dfa_->is_final(f.y) ? 1 : 0;
        for (Symbol a = 0; a < k; ++a) sum += values_[slot(dfa_->next(f.x, a), dfa_->next(f.y, a))];
        values_[s] = std::move(sum);
        status_[s] = Status::computed;
        ++computed_;
        stack.pop_back();
    }
    return values_[root];
}

void ErrorMatrix::fill_all() {
    for (const auto& block : part_->blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) at(block[i], block[j]);
}

const Count& AccessCounts::at(State q) const {
    if (!contains(q)) throw AutomatonError("access count requested for kernel state " + std::to_string(q));
    return *counts_[q];
}

AccessCounts comp_access(const Dfa& d, const KernelInfo& kernel) {
    const ReverseIndex rev(d);
    std::vector<std::optional<Count>> w(d.state_count());
    for (State q : kernel.preamble_order) {
        Count sum = q == d.initial() ? 1 : 0;
        for (const auto& e : rev.incoming(q)) sum += *w[e.src];
        w[q] = std::move(sum);
    }
    return AccessCounts(std::move(w));
}

Count merge_error_count(State p, State q, ErrorMatrix& errors, const AccessCounts& access) {
    const Count& paths = access.at(p);
    return paths * errors.at(p, q);
}

}  // namespace hyperdfa
