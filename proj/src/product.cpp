#include "hyperdfa/product.hpp"

#include <unordered_map>

namespace hyperdfa {
namespace {

// Product state ids are assigned on discovery; dense table for small
// products, hash map otherwise.
class PairIndex {
public:
    PairIndex(std::size_t n1, std::size_t n2) : n2_(n2) {
        if (n1 * n2 <= (std::size_t{1} << 24)) dense_.assign(n1 * n2, kNoState);
    }

    // Returns (id, inserted).
    std::pair<State, bool> intern(State a, State b, State next_id) {
        std::size_t key = static_cast<std::size_t>(a) * n2_ + b;
        if (!dense_.empty()) {
            State& slot = dense_[key];
            if (slot != kNoState) return {slot, false};
            slot = next_id;
            return {next_id, true};
        }
        auto [it, inserted] = sparse_.emplace(key, next_id);
        return {it->second, inserted};
    }

private:
    std::size_t n2_;
    std::vector<State> dense_;
    std::unordered_map<std::size_t, State> sparse_;
};

}  // namespace

DiffCount right_language_diff(const Dfa& m, State q, const Dfa& n, State p) {
    if (m.alphabet() != n.alphabet()) throw AutomatonError("alphabet mismatch");
    const std::size_t k = m.alphabet_size();

    PairIndex index(m.state_count(), n.state_count());
    std::vector<std::pair<State, State>> pairs{{q, p}};
    std::vector<State> succ;  // succ[i * k + a]
    index.intern(q, p, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        for (Symbol a = 0; a < k; ++a) {
            State tx = m.next(x, a), ty = n.next(y, a);
            auto [id, inserted] = index.intern(tx, ty, static_cast<State>(pairs.size()));
            if (inserted) pairs.emplace_back(tx, ty);
            succ.push_back(id);
        }
    }
    const std::size_t total = pairs.size();
    std::vector<bool> differs(total);
    for (std::size_t i = 0; i < total; ++i) differs[i] = m.is_final(pairs[i].first) != n.is_final(pairs[i].second);

    // Predecessor lists in CSR form.
    std::vector<std::size_t> off(total + 1, 0);
    for (State t : succ) ++off[t + 1];
    for (std::size_t i = 0; i < total; ++i) off[i + 1] += off[i];
    std::vector<State> pred(succ.size());
    {
        std::vector<std::size_t> fill(off.begin(), off.end() - 1);
        for (std::size_t i = 0; i < total; ++i)
            for (Symbol a = 0; a < k; ++a) pred[fill[succ[i * k + a]]++] = static_cast<State>(i);
    }

    // States that can reach a disagreement.
    std::vector<bool> live(total, false);
    std::vector<State> work;
    for (std::size_t i = 0; i < total; ++i)
        if (differs[i]) {
            live[i] = true;
            work.push_back(static_cast<State>(i));
        }
    if (work.empty()) return DiffCount(Count(0));
    while (!work.empty()) {
        State s = work.back();
        work.pop_back();
        for (std::size_t e = off[s]; e < off[s + 1]; ++e)
            if (!live[pred[e]]) {
                live[pred[e]] = true;
                work.push_back(pred[e]);
            }
    }

    // Topological order of the live subgraph; leftovers mean a live cycle.
    std::vector<std::size_t> indegree(total, 0);
    std::size_t live_count = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (!live[i]) continue;
        ++live_count;
        for (Symbol a = 0; a < k; ++a)
            if (live[succ[i * k + a]]) ++indegree[succ[i * k + a]];
    }
    std::vector<State> order;
    order.reserve(live_count);
    for (std::size_t i = 0; i < total; ++i)
        if (live[i] && indegree[i] == 0) order.push_back(static_cast<State>(i));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Symbol a = 0; a < k; ++a) {
            State t = succ[order[i] * k + a];
            if (live[t] && --indegree[t] == 0) order.push_back(t);
        }
    if (order.size() != live_count) return DiffCount::infinite();

    // Every product state is reachable from the start, and the start is live
    // because some disagreement exists.
    std::vector<Count> paths(total);
    paths[0] = 1;
    Count result = 0;
    for (State s : order) {
        if (paths[s] == 0) continue;
        if (differs[s]) result += paths[s];
        for (Symbol a = 0; a < k; ++a) {
            State t = succ[s * k + a];
            if (live[t]) paths[t] += paths[s];
        }
    }
    return DiffCount(std::move(result));
}

DiffCount diff_count(const Dfa& m, const Dfa& n) { return right_language_diff(m, m.initial(), n, n.initial()); }

bool almost_equiv_oracle(const Dfa& d, State q, State p) { return right_language_diff(d, q, d, p).is_finite(); }

bool isomorphic(const Dfa& m, const Dfa& n) {
    if (m.alphabet_size() != n.alphabet_size() || m.state_count() != n.state_count()) return false;
    const std::size_t k = m.alphabet_size();
    std::vector<State> fwd(m.state_count(), kNoState), bwd(n.state_count(), kNoState);
    std::vector<State> queue{m.initial()};
    fwd[m.initial()] = n.initial();
    bwd[n.initial()] = m.initial();
    for (std::size_t i = 0; i < queue.size(); ++i) {
        State x = queue[i], y = fwd[x];
        if (m.is_final(x) != n.is_final(y)) return false;
        for (Symbol a = 0; a < k; ++a) {
            State tx = m.next(x, a), ty = n.next(y, a);
            if (fwd[tx] == kNoState && bwd[ty] == kNoState) {
                fwd[tx] = ty;
                bwd[ty] = tx;
                queue.push_back(tx);
            } else if (fwd[tx] != ty || bwd[ty] != tx) {
                return false;
            }
        }
    }
    // The image is closed under transitions and contains n's initial state,
    // so it is exactly n's accessible part.
    return true;
}

}  // namespace hyperdfa
