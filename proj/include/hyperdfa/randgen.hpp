#pragma once

#include <cstdint>
#include <random>

#include "hyperdfa/automaton.hpp"

namespace hyperdfa {

struct RandomModelParams {
    std::size_t states = 30;
    std::size_t alphabet = 2;
    double d_delta = 0.04;    // probability of a forward transition
    double d_final = 0.5;     // probability of a state being final
    double cyclicity = 1.0;   // backward transitions (dst <= src) use cyclicity * d_delta
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when out of range.
    void validate() const;
};

/// Uniform double in [0, 1) from the top 53 bits of one engine output. Fixed
/// here rather than via std::uniform_real_distribution, whose output is
/// implementation-defined.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Random NFA over states 0..n-1 with initial state 0.
///
/// Engine: std::mt19937_64 seeded with `seed`. Draw order: one draw per state
/// for finality (state q final iff draw < d_final), then one draw per
/// (src, symbol, dst) in lexicographic order; the transition exists iff the
/// draw is below d_delta when dst > src, else below cyclicity * d_delta.
/// Symbols are labelled a, b, c, ... (then s26, s27, ... past z).
Nfa generate_nfa(const RandomModelParams& params);

}  // namespace hyperdfa
