#include "hyperdfa/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hyperdfa/construction.hpp"
#include "hyperdfa/hypermin.hpp"
#include "hyperdfa/product.hpp"

namespace hyperdfa {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double to_double(const Count& c) { return c.convert_to<double>(); }

}  // namespace

ExperimentGrid ExperimentGrid::defaults() {
    ExperimentGrid g;
    for (int i = 1; i <= 15; ++i) g.densities.push_back(i * 0.2);
    for (int i = 0; i <= 10; ++i) g.cyclicities.push_back(i * 0.1);
    return g;
}

RandomModelParams ExperimentGrid::instance_params(std::size_t di, std::size_t ci, std::size_t i) const {
    RandomModelParams p;
    p.states = states;
    p.alphabet = alphabet;
    p.d_delta = densities[di] / static_cast<double>(states);
    p.cyclicity = cyclicities[ci];
    p.seed = base_seed + (di * cyclicities.size() + ci) * instances + i;
    // Separate stream so d_final is not correlated with the finality draws.
    std::mt19937_64 rng(splitmix64(p.seed));
    p.d_final = d_final_min + (d_final_max - d_final_min) * unit_draw(rng);
    return p;
}

InstanceResult run_instance(const RandomModelParams& params) {
    const Analysis a = analyze(determinize(generate_nfa(params)));
    ErrorMatrix errors(a.minimal, a.partition);
    const HyperOptReport report = opt_merge(a.minimal, a.partition, a.kernel, errors, a.access);
    const Dfa naive = merge_states_naive(a.minimal, a.partition, a.kernel);

    const DiffCount naive_errors = diff_count(a.minimal, naive);
    const DiffCount optimal_errors = diff_count(a.minimal, report.output);
    if (naive_errors.is_infinite() || optimal_errors.is_infinite())
        throw std::logic_error("hyper-minimization produced a language with infinite difference");
    if (optimal_errors.value() != report.errors)
        throw std::logic_error("reported error count " + report.errors.str() + " differs from oracle " +
                               optimal_errors.to_string());
    if (naive.state_count() != report.output.state_count())
        throw std::logic_error("naive and optimal outputs differ in size");
    if (optimal_errors.value() > naive_errors.value()) throw std::logic_error("optimal exceeds naive error count");

    return InstanceResult{a.minimal.state_count(), report.output.state_count(), naive_errors.value(),
                          optimal_errors.value()};
}

std::vector<CellStats> run_experiment(const ExperimentGrid& grid) {
    for (double d : grid.densities)
        if (d < 0 || d > static_cast<double>(grid.states)) throw std::invalid_argument("density out of range");
    if (grid.instances == 0) throw std::invalid_argument("instances must be positive");

    const std::size_t cells = grid.densities.size() * grid.cyclicities.size();
    const std::size_t total = cells * grid.instances;
    std::vector<InstanceResult> results(total);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t job = next++; job < total; job = next++) {
            const std::size_t cell = job / grid.instances;
            const std::size_t di = cell / grid.cyclicities.size(), ci = cell % grid.cyclicities.size();
            try {
                results[job] = run_instance(grid.instance_params(di, ci, job % grid.instances));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };
    unsigned threads = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    // Aggregate in grid order so output is independent of scheduling.
    std::vector<CellStats> rows;
    rows.reserve(cells);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        CellStats s;
        s.density = grid.densities[cell / grid.cyclicities.size()];
        s.cyclicity = grid.cyclicities[cell % grid.cyclicities.size()];
        for (std::size_t i = 0; i < grid.instances; ++i) {
            const auto& r = results[cell * grid.instances + i];
            s.avg_min_size += static_cast<double>(r.min_size);
            s.savings_ratio += static_cast<double>(r.min_size - r.hyper_size) / static_cast<double>(r.min_size);
            s.naive_errors += to_double(r.naive_errors);
            if (r.naive_errors != 0)
                s.avoided_ratio += to_double(r.naive_errors - r.optimal_errors) / to_double(r.naive_errors);
        }
        const double n = static_cast<double>(grid.instances);
        s.avg_min_size /= n;
        s.savings_ratio /= n;
        s.naive_errors /= n;
        s.avoided_ratio /= n;
        rows.push_back(s);
    }
    return rows;
}

std::string to_csv(const std::vector<CellStats>& rows) {
    std::string out = std::string(kCsvHeader) + '\n';
    char line[256];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%g,%g,%.6f,%.6f,%.6f,%.6f\n", r.density, r.cyclicity, r.avg_min_size,
                      r.savings_ratio, r.naive_errors, r.avoided_ratio);
        out += line;
    }
    return out;
}

}  // namespace hyperdfa
