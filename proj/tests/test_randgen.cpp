#include <doctest.h>

#include <cmath>

#include "hyperdfa/randgen.hpp"

using namespace hyperdfa;

namespace {

RandomModelParams params(std::size_t states, double d_delta, double d_final, double cyclicity, std::uint64_t seed) {
    RandomModelParams p;
    p.states = states;
    p.d_delta = d_delta;
    p.d_final = d_final;
    p.cyclicity = cyclicity;
    p.seed = seed;
    return p;
}

// |observed - p| within 3 standard errors of a Bernoulli(p) mean over n draws.
bool within_3se(double hits, double n, double p) { return std::abs(hits / n - p) <= 3.0 * std::sqrt(p * (1 - p) / n); }

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(generate_nfa(params(0, 0.1, 0.5, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(generate_nfa(params(5, 1.5, 0.5, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(generate_nfa(params(5, 0.1, -0.1, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(generate_nfa(params(5, 0.1, 0.5, 2, 0)), std::invalid_argument);
    RandomModelParams p = params(5, 0.1, 0.5, 1, 0);
    p.alphabet = 0;
    CHECK_THROWS_AS(generate_nfa(p), std::invalid_argument);
}

TEST_CASE("shape") {
    RandomModelParams p = params(7, 0.3, 0.5, 0.5, 1);
    p.alphabet = 28;
    Nfa n = generate_nfa(p);
    CHECK(n.state_count == 7);
    CHECK(n.initial == 0);
    CHECK(n.alphabet.size() == 28);
    CHECK(n.alphabet[0] == "a");
    CHECK(n.alphabet[25] == "z");
    CHECK(n.alphabet[26] != n.alphabet[27]);
}

TEST_CASE("zero cyclicity gives an acyclic automaton") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Nfa n = generate_nfa(params(30, 0.2, 0.5, 0.0, seed));
        for (const auto& t : n.transitions) REQUIRE(t.dst > t.src);
    }
}

TEST_CASE("probability-one draws") {
    Nfa n = generate_nfa(params(6, 1.0, 1.0, 1.0, 3));
    CHECK(n.transitions.size() == 6 * 2 * 6);
    CHECK(n.finals.size() == 6);
    Nfa none = generate_nfa(params(6, 0.0, 0.0, 1.0, 3));
    CHECK(none.transitions.empty());
    CHECK(none.finals.empty());
}

TEST_CASE("same seed, same automaton") {
    for (std::uint64_t seed : {0ull, 1ull, 123456789ull, ~0ull}) {
        CHECK(generate_nfa(params(20, 0.1, 0.4, 0.7, seed)) == generate_nfa(params(20, 0.1, 0.4, 0.7, seed)));
    }
    CHECK_FALSE(generate_nfa(params(20, 0.1, 0.4, 0.7, 1)) == generate_nfa(params(20, 0.1, 0.4, 0.7, 2)));
}

TEST_CASE("draw order: finality first, then (q, sigma, p)") {
    const RandomModelParams p = params(4, 0.5, 0.5, 0.6, 77);
    std::mt19937_64 rng(p.seed);
    std::vector<State> finals;
    for (State q = 0; q < p.states; ++q)
        if (unit_draw(rng) < p.d_final) finals.push_back(q);
    std::vector<Transition> transitions;
    for (State q = 0; q < p.states; ++q)
        for (Symbol a = 0; a < p.alphabet; ++a)
            for (State r = 0; r < p.states; ++r)
                if (unit_draw(rng) < (r > q ? p.d_delta : p.cyclicity * p.d_delta)) transitions.push_back({q, a, r});
    Nfa n = generate_nfa(p);
    CHECK(n.finals == finals);
    CHECK(n.transitions == transitions);
}

TEST_CASE("empirical frequencies") {
    const double d_delta = 0.3, a = 0.4, d_final = 0.35;
    double fwd = 0, fwd_n = 0, bwd = 0, bwd_n = 0, fin = 0, fin_n = 0;
    // 25 states, 2 symbols: 600 forward and 650 backward pairs per automaton.
    for (std::uint64_t seed = 0; fin_n < 1e4 || fwd_n < 1e4 || bwd_n < 1e4; ++seed) {
        Nfa n = generate_nfa(params(25, d_delta, d_final, a, seed));
        fin += static_cast<double>(n.finals.size());
        fin_n += 25;
        for (const auto& t : n.transitions) (t.dst > t.src ? fwd : bwd) += 1;
        fwd_n += 2 * 25 * 24 / 2;
        bwd_n += 2 * 25 * 26 / 2;
    }
    CHECK(within_3se(fwd, fwd_n, d_delta));
    CHECK(within_3se(bwd, bwd_n, a * d_delta));
    CHECK(within_3se(fin, fin_n, d_final));
}

TEST_CASE("unit draws lie in [0, 1)") {
    std::mt19937_64 rng(5);
    double lo = 1, hi = 0;
    for (int i = 0; i < 100000; ++i) {
        double u = unit_draw(rng);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 1e-3);
    CHECK(hi > 1 - 1e-3);
}
