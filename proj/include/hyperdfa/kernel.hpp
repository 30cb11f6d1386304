#pragma once

#include <vector>

#include "hyperdfa/automaton.hpp"

namespace hyperdfa {

/// Kernel states are reached by infinitely many strings; the rest form the
/// preamble. On an accessible DFA the preamble induces an acyclic subgraph
/// that is closed under predecessors.
struct KernelInfo {
    std::vector<bool> is_kernel;
    std::vector<State> preamble_order;  // topological; initial state first when preamble

    bool kernel(State q) const { return is_kernel[q]; }
    bool preamble(State q) const { return !is_kernel[q]; }
};

/// Linear time: strongly connected components with an internal edge seed the
/// kernel, which is then closed under successors. Requires an accessible DFA.
KernelInfo kernel_preamble(const Dfa& d);

}  // namespace hyperdfa
