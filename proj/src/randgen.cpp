#include "hyperdfa/randgen.hpp"

#include <stdexcept>
#include <string>

namespace hyperdfa {

void RandomModelParams::validate() const {
    auto probability = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (states == 0) throw std::invalid_argument("state count must be positive");
    if (alphabet == 0) throw std::invalid_argument("alphabet size must be positive");
    if (!probability(d_delta)) throw std::invalid_argument("d_delta must lie in [0, 1]");
    if (!probability(d_final)) throw std::invalid_argument("d_final must lie in [0, 1]");
    if (!probability(cyclicity)) throw std::invalid_argument("cyclicity must lie in [0, 1]");
}

Nfa generate_nfa(const RandomModelParams& params) {
    params.validate();
    std::mt19937_64 rng(params.seed);

    Nfa nfa;
    nfa.state_count = params.states;
    for (std::size_t a = 0; a < params.alphabet; ++a)
        nfa.alphabet.push_back(a < 26 ? std::string(1, static_cast<char>('a' + a)) : "s" + std::to_string(a));
    nfa.initial = 0;

    for (State q = 0; q < params.states; ++q)
        if (unit_draw(rng) < params.d_final) nfa.finals.push_back(q);

    const double backward = params.cyclicity * params.d_delta;
    for (State q = 0; q < params.states; ++q)
        for (Symbol a = 0; a < params.alphabet; ++a)
            for (State p = 0; p < params.states; ++p) {
                const double f = unit_draw(rng);
                if (f < (p > q ? params.d_delta : backward)) nfa.transitions.push_back({q, a, p});
            }
    return nfa;
}

}  // namespace hyperdfa
