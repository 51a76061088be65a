#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cosep/cotree.hpp"
#include "cosep/count_tables.hpp"
#include "cosep/graph.hpp"
#include "cosep/permutation.hpp"
#include "cosep/rng.hpp"
#include "cosep/schroder.hpp"

namespace cosep {

// Exactly uniform over the 2 l[n] labeled cotrees of size n (root decoration
// uniform for n >= 2). Inverse transform on the exact counting tables: the
// block containing the smallest unused label gets size m with probability
// C(n-1,m-1) c_m A(n-m, max(j-1,0)) / A(n,j).
Cotree sample_cotree(int n, RandomSource& rng, const CountTables& tables);

// cograph_of_cotree composed with sample_cotree: uniform labeled cograph.
Graph sample_cograph(int n, RandomSource& rng, const CountTables& tables);

// Exactly uniform signed Schroeder tree of size n (root sign uniform for
// n >= 2); first-child sizes by inverse transform on the sequence tables.
SchroderTree sample_schroder(int n, RandomSource& rng, const CountTables& tables);

// perm_of_tree composed with sample_schroder: uniform separable permutation.
Permutation sample_separable(int n, RandomSource& rng, const CountTables& tables);

struct MonteCarloSample {
    int n = 0;
    int rep = 0;
    int stat = 0;        // alpha (cograph model) or lis (separable model)
    int dual_stat = 0;   // omega or lds
};

struct MonteCarloSummary {
    int n = 0;
    double mean = 0.0;    // of stat/n
    double median = 0.0;
    std::vector<std::pair<double, double>> quantiles;  // (p, quantile of stat/n)
    bool sqrt_bound_ok = true;  // max(stat, dual_stat) >= ceil(sqrt(n)) in every rep
};

struct MonteCarloResult {
    std::uint64_t seed = 0;
    std::vector<MonteCarloSample> samples;     // ordered by (size index, rep)
    std::vector<MonteCarloSummary> summaries;  // one per requested size
};

// Per size: reps independent uniform cotrees; records alpha and omega and
// summarizes alpha/n. Deterministic given seed: rep r of size n uses the
// derived stream mix(seed, n, r), so results do not depend on the worker
// count.
MonteCarloResult monte_carlo_alpha(const std::vector<int>& sizes, int reps,
                                   const std::vector<double>& quantiles, std::uint64_t seed,
                                   CountTables& tables);

// Same over uniform Schroeder trees, recording lis and lds.
MonteCarloResult monte_carlo_lis(const std::vector<int>& sizes, int reps,
                                 const std::vector<double>& quantiles, std::uint64_t seed,
                                 CountTables& tables);

// ceil(sqrt(n)) on exact integers
int ceil_sqrt(int n);

// Deterministic quantile of a sample: linear interpolation on the sorted
// values at position p (size - 1).
double sample_quantile(std::vector<double> values, double p);

}  // namespace cosep
