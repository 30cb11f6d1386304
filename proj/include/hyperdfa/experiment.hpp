#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperdfa/count.hpp"
#include "hyperdfa/randgen.hpp"

namespace hyperdfa {

/// Parameter sweep over transition density (d_delta * |Q|) and cyclicity.
struct ExperimentGrid {
    std::vector<double> densities;    // default 0.2, 0.4, ..., 3.0
    std::vector<double> cyclicities;  // default 0.0, 0.1, ..., 1.0
    std::size_t instances = 100;      // per cell
    std::size_t states = 30;
    std::size_t alphabet = 2;
    double d_final_min = 0.3;  // d_final is drawn uniformly per instance
    double d_final_max = 0.7;
    std::uint64_t base_seed = 0;
    unsigned threads = 0;  // 0: hardware concurrency

    static ExperimentGrid defaults();

    /// Random-model parameters of one instance. Instance `i` of cell
    /// (density index di, cyclicity index ci) uses seed
    /// base_seed + (di * |cyclicities| + ci) * instances + i.
    RandomModelParams instance_params(std::size_t di, std::size_t ci, std::size_t i) const;
};

struct InstanceResult {
    std::size_t min_size = 0;
    std::size_t hyper_size = 0;
    Count naive_errors;
    Count optimal_errors;
};

struct CellStats {
    double density = 0;
    double cyclicity = 0;
    double avg_min_size = 0;
    double savings_ratio = 0;  // mean of (min_size - hyper_size) / min_size
    double naive_errors = 0;   // mean
    double avoided_ratio = 0;  // mean of (naive - optimal) / naive, 0/0 counted as 0
};

/// Generates, determinizes and minimizes one instance, runs both strategies
/// and measures both error counts with the product oracle. Throws
/// std::logic_error if the optimal report disagrees with the oracle, the
/// sizes differ, or the optimal count exceeds the naive one.
InstanceResult run_instance(const RandomModelParams& params);

/// One row per (density, cyclicity) in grid order. Results do not depend on
/// the thread count.
std::vector<CellStats> run_experiment(const ExperimentGrid& grid);

inline constexpr const char* kCsvHeader = "density,cyclicity,avg_min_size,savings_ratio,naive_errors,avoided_ratio";

std::string to_csv(const std::vector<CellStats>& rows);

}  // namespace hyperdfa
