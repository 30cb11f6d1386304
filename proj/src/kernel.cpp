#include "hyperdfa/kernel.hpp"

#include <algorithm>

namespace hyperdfa {
namespace {

// Iterative Tarjan; returns the component id of every state.
std::vector<std::size_t> strongly_connected_components(const Dfa& d) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet_size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    struct Frame {
        State q;
        Symbol next_symbol;
    };
    std::vector<Frame> call;
    std::size_t counter = 0, comp_count = 0;

    for (State root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next_symbol < k) {
                State t = d.next(f.q, f.next_symbol++);
                if (index[t] == unvisited) {
                    index[t] = low[t] = counter++;
                    stack.push_back(t);
                    on_stack[t] = true;
                    call.push_back({t, 0});
                } else if (on_stack[t]) {
                    low[f.q] = std::min(low[f.q], index[t]);
                }
                continue;
            }
            State q = f.q;
            call.pop_back();
            if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
            if (low[q] == index[q]) {
                State s;
                do {
                    s = stack.back();
                    stack.pop_back();
                    on_stack[s] = false;
                    comp[s] = comp_count;
                } while (s != q);
                ++comp_count;
            }
        }
    }
    return comp;
}

}  // namespace

KernelInfo kernel_preamble(const Dfa& d) {
    const std::size_t n = d.state_count();
    const auto comp = strongly_connected_components(d);

    KernelInfo info;
    info.is_kernel.assign(n, false);
    std::vector<State> work;
    for (State q = 0; q < n; ++q)
        for (State t : d.row(q))
            if (comp[t] == comp[q] && !info.is_kernel[q]) {
                info.is_kernel[q] = true;
                work.push_back(q);
            }
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (State t : d.row(q))
            if (!info.is_kernel[t]) {
                info.is_kernel[t] = true;
                work.push_back(t);
            }
    }

    // Kahn's algorithm on the preamble subgraph. Every predecessor of a
    // preamble state is preamble, so in-degrees count preamble edges only.
    std::vector<std::size_t> indegree(n, 0);
    for (State q = 0; q < n; ++q)
        if (!info.is_kernel[q])
            for (State t : d.row(q))
                if (!info.is_kernel[t]) ++indegree[t];
    std::vector<State> ready;
    for (State q = 0; q < n; ++q)
        if (!info.is_kernel[q] && indegree[q] == 0) ready.push_back(q);
    std::reverse(ready.begin(), ready.end());
    while (!ready.empty()) {
        State q = ready.back();
        ready.pop_back();
        info.preamble_order.push_back(q);
        for (State t : d.row(q))
            if (!info.is_kernel[t] && --indegree[t] == 0) ready.push_back(t);
    }
    return info;
}

}  // namespace hyperdfa
