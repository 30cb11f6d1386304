#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "hyperdfa/almost_equiv.hpp"
#include "hyperdfa/construction.hpp"
#include "hyperdfa/error_model.hpp"
#include "hyperdfa/hypermin.hpp"
#include "hyperdfa/kernel.hpp"
#include "hyperdfa/product.hpp"
#include "oracles.hpp"

using namespace hyperdfa;
using namespace hyperdfa::testing;

namespace {

std::vector<std::string> disagreements(const Dfa& m, const Dfa& n, std::size_t max_len) {
    std::vector<std::string> out;
    for (const auto& w : all_words(m.alphabet_size(), max_len))
        if (m.accepts(w) != n.accepts(w)) {
            std::string s;
            for (Symbol a : w) s += m.alphabet()[a];
            out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool hyper_minimal(const Dfa& d) {
    const KernelInfo k = kernel_preamble(d);
    const auto part = compute_almost_equivalence(d, k);
    for (const auto& block : part.blocks)
        if (block.size() > 1)
            for (State q : block)
                if (k.preamble(q)) return false;
    return true;
}

}  // namespace

TEST_CASE("comp_finality") {
    const Dfa d({"a"}, 0, {1, 2, 2}, {true, false, false});
    SUBCASE("weighted majority final") {
        AccessCounts w({Count(3), Count(1), std::nullopt});
        const State block[] = {0, 1};
        FinalityChoice c = comp_finality(d, block, w);
        CHECK(c.make_final);
        CHECK(c.errors == 1);
        CHECK(c.representative == 0);
    }
    SUBCASE("tie goes to non-final") {
        AccessCounts w({Count(1), Count(1), std::nullopt});
        const State block[] = {0, 1};
        FinalityChoice c = comp_finality(d, block, w);
        CHECK_FALSE(c.make_final);
        CHECK(c.errors == 1);
        CHECK(c.representative == 1);
    }
    SUBCASE("all final") {
        const Dfa all({"a"}, 0, {1, 1}, {true, true});
        AccessCounts w({Count(1), Count(4)});
        const State block[] = {0, 1};
        FinalityChoice c = comp_finality(all, block, w);
        CHECK(c.make_final);
        CHECK(c.errors == 0);
    }
    SUBCASE("kernel member rejected") {
        AccessCounts w({Count(1), Count(1), std::nullopt});
        const State block[] = {1, 2};
        CHECK_THROWS_AS(comp_finality(d, block, w), AutomatonError);
    }
    SUBCASE("example block C, D") {
        const Dfa m = m_ex();
        const KernelInfo k = kernel_preamble(m);
        const AccessCounts w = comp_access(m, k);
        const State block[] = {m_ex_state('C'), m_ex_state('D')};
        FinalityChoice c = comp_finality(m, block, w);
        CHECK(c.make_final);
        CHECK(c.errors == 1);
        CHECK(c.representative == m_ex_state('C'));
    }
}

TEST_CASE("example automaton") {
    const Dfa m = m_ex();
    REQUIRE(isomorphic(minimize(m), m));
    // Keep the file numbering so states can be named by letter.
    const KernelInfo kernel = kernel_preamble(m);
    const Analysis a{m, kernel, compute_almost_equivalence(m, kernel), comp_access(m, kernel)};
    ErrorMatrix e(a.minimal, a.partition);
    const HyperOptReport report = opt_merge(a.minimal, a.partition, a.kernel, e, a.access);

    SUBCASE("optimal strategy") {
        CHECK(report.errors == 7);
        CHECK(diff_count(m, report.output) == 7);
        CHECK(report.states_before == 14);
        CHECK(report.states_after == 11);
        CHECK_FALSE(report.plan.initial_choice.has_value());
        const std::vector<std::string> seven = {"aaaab", "aaab", "aab", "aabab", "aabb", "abab", "abb"};
        CHECK(disagreements(m, report.output, 12) == seven);
        CHECK(hyper_minimal(report.output));
    }
    SUBCASE("targets chosen for block C, D") {
        const State c = m_ex_state('C'), d = m_ex_state('D');
        const std::size_t cd = a.partition.block_of(c);
        REQUIRE(a.partition.blocks[cd] == std::vector<State>{c, d});
        // Expected cost per target: on a, I = 2*1 + 1*1 and J = 2*4 + 1*4; on b, I = 3*4 and J = 3*1.
        const std::map<std::pair<Symbol, State>, int> cost = {
            {{0, m_ex_state('I')}, 3}, {{0, m_ex_state('J')}, 12}, {{1, m_ex_state('I')}, 12}, {{1, m_ex_state('J')}, 3}};
        std::size_t seen = 0;
        for (const BlockTarget& t : report.plan.block_targets) {
            if (t.block != cd) {
                CHECK(t.errors == 0);  // initial state on b has the single mate E
                continue;
            }
            ++seen;
            CHECK(t.errors == 3);
            for (State target : a.partition.kernel_mates(a.minimal.next(c, t.symbol))) {
                Count total = a.access.at(c) * e.at(a.minimal.next(c, t.symbol), target) +
                              a.access.at(d) * e.at(a.minimal.next(d, t.symbol), target);
                CHECK(total == cost.at({t.symbol, target}));
            }
            CHECK(t.target == (t.symbol == 0 ? m_ex_state('I') : m_ex_state('J')));
        }
        CHECK(seen == 2);
        CHECK(report.plan.block_targets.size() == 3);
    }
    SUBCASE("naive strategy") {
        const Dfa naive = merge_states_naive(a.minimal, a.partition, a.kernel);
        CHECK(diff_count(m, naive) == 16);
        CHECK(naive.state_count() == report.output.state_count());
        CHECK(hyper_minimal(naive));
    }
    SUBCASE("all variants") {
        VariantEnumerator variants(a.minimal, a.partition, a.kernel);
        std::vector<Count> errors;
        while (auto v = variants.next()) {
            REQUIRE(v->errors.is_finite());
            REQUIRE(v->dfa.state_count() == 11);
            errors.push_back(v->errors.value());
        }
        CHECK(errors.size() == variants.size());
        CHECK(variants.size() == 64);  // 4 pure blocks, two 2-way slots
        CHECK(*std::min_element(errors.begin(), errors.end()) == 7);
        CHECK(*std::max_element(errors.begin(), errors.end()) == 29);
    }
}

TEST_CASE("unary example") {
    const Dfa u = unary_example();
    const HyperOptReport report = hyper_optimize(u);
    CHECK(report.output.state_count() == 1);
    CHECK(report.errors == 1);
    REQUIRE(report.plan.initial_choice.has_value());
    CHECK(report.plan.initial_choice->target == 2);
    CHECK(diff_count(u, report.output) == 1);

    const Dfa naive = hyper_minimize_naive(u);
    CHECK(naive == Dfa({"a"}, 0, {0}, {true}));

    const Analysis a = analyze(u);
    VariantEnumerator variants(a.minimal, a.partition, a.kernel);
    CHECK(variants.size() == 1);
    auto v = variants.next();
    REQUIRE(v);
    CHECK(v->errors == 1);
    CHECK_FALSE(variants.next());
}

TEST_CASE("inputs that are already hyper-minimal") {
    SUBCASE("all-kernel with kernel initial") {
        const HyperOptReport report = hyper_optimize(even_as());
        CHECK(report.errors == 0);
        CHECK(isomorphic(report.output, even_as()));
        const Analysis a = analyze(even_as());
        CHECK(merge_states_naive(a.minimal, a.partition, a.kernel) == a.minimal);
        VariantEnumerator variants(a.minimal, a.partition, a.kernel);
        CHECK(variants.size() == 1);
        CHECK(variants.next()->errors == 0);
    }
    SUBCASE("empty language") {
        const HyperOptReport report = hyper_optimize(Dfa({"a", "b"}, 0, {1, 1, 1, 1}, {false, false}));
        CHECK(report.output.state_count() == 1);
        CHECK(report.errors == 0);
    }
    SUBCASE("preamble state with singleton block") {
        // aΣ* over {a, b}: the initial state differs infinitely from both kernel states.
        const Dfa d({"a", "b"}, 0, {1, 2, 1, 1, 2, 2}, {false, true, false});
        const Analysis a = analyze(d);
        REQUIRE(a.minimal.state_count() == 3);
        REQUIRE(a.kernel.preamble(a.minimal.initial()));
        CHECK(merge_states_naive(a.minimal, a.partition, a.kernel) == a.minimal);
        CHECK(hyper_optimize(d).errors == 0);
    }
}

TEST_CASE("opt_merge rejects non-minimal input") {
    const Dfa d({"a"}, 0, {1, 0}, {true, true});
    const KernelInfo k = kernel_preamble(d);
    AlmostEquivPartition part;
    part.block_id = {0, 1};
    part.blocks = {{0}, {1}};
    part.kernel_members = {{0}, {1}};
    ErrorMatrix e(d, part);
    CHECK_THROWS_AS(opt_merge(d, part, k, e, comp_access(d, k)), AutomatonError);
}

TEST_CASE("variant size guard") {
    const Analysis a = analyze(m_ex());
    CHECK_THROWS_AS(VariantEnumerator(a.minimal, a.partition, a.kernel, 16), AutomatonError);
}

TEST_CASE("random instances: exactness, size agreement, optimal never worse") {
    std::size_t strictly_better = 0, total = 0;
    for (const Dfa& d : random_minimal_dfas(1000, 12, 101)) {
        const Analysis a = analyze(d);
        ErrorMatrix e(a.minimal, a.partition);
        const HyperOptReport report = opt_merge(a.minimal, a.partition, a.kernel, e, a.access);
        const Dfa naive = merge_states_naive(a.minimal, a.partition, a.kernel);
        const DiffCount opt = diff_count(a.minimal, report.output);
        const DiffCount nai = diff_count(a.minimal, naive);
        REQUIRE(opt.is_finite());
        REQUIRE(nai.is_finite());
        REQUIRE(opt.value() == report.errors);
        REQUIRE(report.output.state_count() == naive.state_count());
        REQUIRE(opt.value() <= nai.value());
        REQUIRE(hyper_minimal(report.output));
        strictly_better += opt.value() < nai.value();
        ++total;
    }
    CHECK(total == 1000);
    CHECK(strictly_better > 0);
}

TEST_CASE("error classes form a weak partition of all strings") {
    std::mt19937_64 rng(404);
    for (const Dfa& d : random_minimal_dfas(300, 12, 77)) {
        const Analysis a = analyze(d);
        const auto& part = a.partition;
        const bool w0 = !part.kernel_mates(d.initial()).empty();
        // Slots (B, sigma) whose successors have kernel mates.
        auto has_slot = [&](std::size_t b, Symbol s) {
            for (State q : part.blocks[b])
                if (!part.kernel_mates(d.next(q, s)).empty()) return true;
            return false;
        };
        for (int trial = 0; trial < 50; ++trial) {
            Word w(rng() % (2 * d.state_count() + 1));
            for (auto& s : w) s = static_cast<Symbol>(rng() % 2);
            std::size_t classes = w0 ? 1 : 0;
            // W_B: the full word ends in a pure-preamble block.
            const std::size_t end_block = part.block_of(d.run(d.initial(), w));
            if (part.is_pure_preamble(end_block)) ++classes;
            // W_{B,sigma}: some prefix u ends in a pure block B with a slot on the next letter.
            State q = d.initial();
            for (std::size_t i = 0; i < w.size(); ++i) {
                const std::size_t b = part.block_of(q);
                if (part.is_pure_preamble(b) && has_slot(b, w[i])) ++classes;
                q = d.next(q, w[i]);
            }
            REQUIRE(classes == 1);
        }
    }
}
