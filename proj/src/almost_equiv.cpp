#include "hyperdfa/almost_equiv.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "hyperdfa/construction.hpp"

namespace hyperdfa {
namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<State>(i);
    }

    State find(State x) {
        State root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            State next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    // Union by size; on equal sizes the smaller index stays the root.
    // Returns the surviving root.
    State unite(State a, State b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

private:
    std::vector<State> parent_;
    std::vector<std::size_t> size_;
};

struct SignatureHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (State s : v) h = (h ^ s) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace

AlmostEquivPartition compute_almost_equivalence(const Dfa& d, const KernelInfo& kernel) {
    if (!is_minimal(d)) throw AutomatonError("almost-equivalence requires a minimal dfa");
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet_size();
    const ReverseIndex rev(d);

    UnionFind uf(n);
    std::vector<std::vector<State>> members(n);
    for (State q = 0; q < n; ++q) members[q] = {q};

    std::unordered_map<std::vector<State>, State, SignatureHash> owner;
    std::vector<std::vector<State>> stored(n);  // key under which a live class is registered

    std::deque<State> work;
    std::vector<bool> queued(n, true);
    for (State q = 0; q < n; ++q) work.push_back(q);

    std::vector<State> signature(k);
    std::vector<State> preds;
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        queued[s] = false;
        if (uf.find(s) != s) continue;

        if (!stored[s].empty()) {
            auto it = owner.find(stored[s]);
            if (it != owner.end() && it->second == s) owner.erase(it);
            stored[s].clear();
        }
        for (Symbol a = 0; a < k; ++a) signature[a] = uf.find(d.next(s, a));

        auto it = owner.find(signature);
        if (it == owner.end()) {
            owner.emplace(signature, s);
            stored[s] = signature;
            continue;
        }
        State t = it->second;
        State root = uf.unite(s, t);
        State absorbed = root == s ? t : s;
        it->second = root;
        stored[root] = signature;
        stored[absorbed].clear();

        // Classes pointing into the absorbed class now have new signatures.
        preds.clear();
        for (State m : members[absorbed])
            for (const auto& e : rev.incoming(m)) preds.push_back(uf.find(e.src));
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
        for (State p : preds)
            if (!queued[p]) {
                queued[p] = true;
                work.push_back(p);
            }
        members[root].insert(members[root].end(), members[absorbed].begin(), members[absorbed].end());
        members[absorbed].clear();
        members[absorbed].shrink_to_fit();
    }

    AlmostEquivPartition part;
    part.block_id.assign(n, 0);
    std::vector<std::size_t> block_of_root(n, static_cast<std::size_t>(-1));
    for (State q = 0; q < n; ++q) {
        State r = uf.find(q);
        if (block_of_root[r] == static_cast<std::size_t>(-1)) {
            block_of_root[r] = part.blocks.size();
            part.blocks.emplace_back();
            part.kernel_members.emplace_back();
        }
        std::size_t b = block_of_root[r];
        part.block_id[q] = b;
        part.blocks[b].push_back(q);
        if (kernel.kernel(q)) part.kernel_members[b].push_back(q);
    }
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
        if (part.kernel_members[b].empty()) part.pure_preamble_blocks.push_back(b);
    return part;
}

}  // namespace hyperdfa
