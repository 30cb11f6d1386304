#include "hyperdfa/construction.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hyperdfa {

Dfa determinize(const Nfa& n) {
    const std::size_t k = n.alphabet.size();
    // successors[q * k + a] = sorted targets
    std::vector<std::vector<State>> successors(n.state_count * k);
    for (const auto& t : n.transitions) successors[t.src * k + t.symbol].push_back(t.dst);
    std::vector<bool> nfa_final(n.state_count, false);
    for (State f : n.finals) nfa_final[f] = true;

    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> s) {
        auto [it, inserted] = index.emplace(s, static_cast<State>(subsets.size()));
        if (inserted) subsets.push_back(std::move(s));
        return it->second;
    };
    intern({n.initial});

    std::vector<State> delta;
    std::vector<bool> finals;
    std::vector<bool> seen(n.state_count, false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        bool fin = false;
        for (State q : subsets[i]) fin = fin || nfa_final[q];
        finals.push_back(fin);
        for (Symbol a = 0; a < k; ++a) {
            std::vector<State> target;
            for (State q : subsets[i])
                for (State p : successors[q * k + a])
                    if (!seen[p]) {
                        seen[p] = true;
                        target.push_back(p);
                    }
            for (State p : target) seen[p] = false;
            std::sort(target.begin(), target.end());
            delta.push_back(intern(std::move(target)));
        }
    }
    return Dfa(n.alphabet, 0, std::move(delta), std::move(finals));
}

Dfa complete_and_trim(const PartialDfa& d) {
    const std::size_t k = d.alphabet.size();
    bool need_sink = false;

    // BFS over the partial automaton; the sink is numbered last if used.
    std::vector<State> order_of(d.state_count, kNoState);
    std::vector<State> order{d.initial};
    order_of[d.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Symbol a = 0; a < k; ++a) {
            State t = d.next(order[i], a);
            if (t == kNoState) {
                need_sink = true;
            } else if (order_of[t] == kNoState) {
                order_of[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }

    const std::size_t n = order.size() + (need_sink ? 1 : 0);
    std::vector<State> delta(n * k);
    std::vector<bool> finals(n, false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        finals[i] = d.finals[order[i]];
        for (Symbol a = 0; a < k; ++a) {
            State t = d.next(order[i], a);
            delta[i * k + a] = t == kNoState ? static_cast<State>(order.size()) : order_of[t];
        }
    }
    if (need_sink)
        for (Symbol a = 0; a < k; ++a) delta[order.size() * k + a] = static_cast<State>(order.size());
    // Renumber so the sink takes its breadth-first slot.
    return canonicalize(Dfa(d.alphabet, 0, std::move(delta), std::move(finals)));
}

Dfa canonicalize_from(const Dfa& d, State start) {
    const std::size_t k = d.alphabet_size();
    std::vector<State> order_of(d.state_count(), kNoState);
    std::vector<State> order{start};
    order_of[start] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (State t : d.row(order[i]))
            if (order_of[t] == kNoState) {
                order_of[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
    std::vector<State> delta(order.size() * k);
    std::vector<bool> finals(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        finals[i] = d.is_final(order[i]);
        for (Symbol a = 0; a < k; ++a) delta[i * k + a] = order_of[d.next(order[i], a)];
    }
    return Dfa(d.alphabet(), 0, std::move(delta), std::move(finals));
}

Dfa canonicalize(const Dfa& d) { return canonicalize_from(d, d.initial()); }

namespace {

// Refinable partition over 0..n-1 with in-place block splitting.
class Partition {
public:
    explicit Partition(std::size_t n) : elems_(n), pos_(n), block_of_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) elems_[i] = pos_[i] = static_cast<State>(i);
        blocks_.push_back({0, n, 0});
    }

    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_of(State s) const { return block_of_[s]; }
    std::size_t size(std::size_t b) const { return blocks_[b].end - blocks_[b].begin; }
    std::span<const State> members(std::size_t b) const {
        return {elems_.data() + blocks_[b].begin, size(b)};
    }

    void mark(State s) {
        Block& b = blocks_[block_of_[s]];
        std::size_t p = pos_[s];
        if (p < b.begin + b.marked) return;
        std::size_t target = b.begin + b.marked;
        std::swap(elems_[p], elems_[target]);
        pos_[elems_[p]] = static_cast<State>(p);
        pos_[elems_[target]] = static_cast<State>(target);
        ++b.marked;
    }

    // Splits off the marked prefix of block b if it is a proper subset; returns
    // the new block id or npos. Always clears the mark.
    std::size_t split(std::size_t b) {
        Block& blk = blocks_[b];
        std::size_t marked = blk.marked;
        blk.marked = 0;
        if (marked == 0 || marked == blk.end - blk.begin) return npos;
        Block fresh{blk.begin, blk.begin + marked, 0};
        blk.begin += marked;
        std::size_t id = blocks_.size();
        blocks_.push_back(fresh);
        for (std::size_t i = fresh.begin; i < fresh.end; ++i) block_of_[elems_[i]] = id;
        return id;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Block {
        std::size_t begin, end, marked;
    };
    std::vector<State> elems_;
    std::vector<State> pos_;
    std::vector<std::size_t> block_of_;
    std::vector<Block> blocks_;
};

}  // namespace

Dfa minimize(const Dfa& input) {
    const Dfa d = canonicalize(input);
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet_size();
    const ReverseIndex rev(d);

    Partition part(n);
    for (State q = 0; q < n; ++q)
        if (d.is_final(q)) part.mark(q);
    part.split(0);

    // Splitters are (block, symbol) pairs.
    std::vector<bool> pending;
    std::deque<std::pair<std::size_t, Symbol>> work;
    auto push = [&](std::size_t b, Symbol a) {
        if (pending.size() <= b * k + a) pending.resize((b + 1) * k, false);
        if (pending[b * k + a]) return;
        pending[b * k + a] = true;
        work.emplace_back(b, a);
    };
    auto is_pending = [&](std::size_t b, Symbol a) { return pending.size() > b * k + a && pending[b * k + a]; };

    if (part.block_count() == 2) {
        std::size_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
        for (Symbol a = 0; a < k; ++a) push(smaller, a);
    }

    std::vector<State> preds;
    std::vector<std::size_t> touched;
    std::vector<bool> is_touched;
    while (!work.empty()) {
        auto [b, a] = work.front();
        work.pop_front();
        pending[b * k + a] = false;

        preds.clear();
        for (State s : part.members(b))
            for (const auto& e : rev.incoming(s))
                if (e.symbol == a) preds.push_back(e.src);

        touched.clear();
        is_touched.resize(part.block_count(), false);
        for (State p : preds) {
            std::size_t c = part.block_of(p);
            if (!is_touched[c]) {
                is_touched[c] = true;
                touched.push_back(c);
            }
            part.mark(p);
        }
        for (std::size_t c : touched) {
            is_touched[c] = false;
            std::size_t fresh = part.split(c);
            if (fresh == Partition::npos) continue;
            is_touched.resize(part.block_count(), false);
            for (Symbol x = 0; x < k; ++x) {
                if (is_pending(c, x))
                    push(fresh, x);
                else
                    push(part.size(fresh) <= part.size(c) ? fresh : c, x);
            }
        }
    }

    std::vector<State> delta(part.block_count() * k);
    std::vector<bool> finals(part.block_count());
    for (std::size_t b = 0; b < part.block_count(); ++b) {
        State rep = part.members(b).front();
        finals[b] = d.is_final(rep);
        for (Symbol x = 0; x < k; ++x) delta[b * k + x] = static_cast<State>(part.block_of(d.next(rep, x)));
    }
    State init = static_cast<State>(part.block_of(d.initial()));
    return canonicalize(Dfa(d.alphabet(), init, std::move(delta), std::move(finals)));
}

bool is_minimal(const Dfa& d) {
    return minimize(d).state_count() == d.state_count();
}

Dfa merge(const Dfa& d, State p, State q) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet_size();
    if (p >= n || q >= n) throw AutomatonError("merge: state out of range");
    if (p == q) return d;

    auto renumber = [&](State s) {
        if (s == p) s = q;
        return s > p ? s - 1 : s;
    };
    std::vector<State> delta;
    std::vector<bool> finals;
    delta.reserve((n - 1) * k);
    for (State s = 0; s < n; ++s) {
        if (s == p) continue;
        finals.push_back(d.is_final(s));
        for (State t : d.row(s)) delta.push_back(renumber(t));
    }
    return Dfa(d.alphabet(), renumber(d.initial()), std::move(delta), std::move(finals));
}

Dfa to_dfa(const ParsedAutomaton& a) {
    if (const auto* n = std::get_if<Nfa>(&a)) return determinize(*n);
    return complete_and_trim(std::get<PartialDfa>(a));
}

Dfa to_minimal_dfa(const ParsedAutomaton& a) { return minimize(to_dfa(a)); }

}  // namespace hyperdfa
