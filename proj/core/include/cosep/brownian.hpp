#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cosep/graph.hpp"
#include "cosep/rng.hpp"

namespace cosep {

// Uniform Dyck path of length 2N with i.i.d. decorations at strict local
// minima, the discretization of a decorated Brownian excursion. Signs are
// drawn lazily (only O(k^2) minima are ever queried per sample) and memoized
// by position; a blocked sparse table answers leftmost-argmin queries.
class DecoratedExcursion {
public:
    // Uniform via the cycle lemma: a random arrangement of N up and N+1 down
    // steps has exactly one rotation that stays nonnegative until the final
    // step; dropping that step leaves a uniform Dyck path.
    static DecoratedExcursion sample(int half_steps, double p, RandomSource& rng);

    int length() const { return 2 * half_steps_; }          // positions 0..length()
    int height(int i) const { return height_[i]; }
    double sign_probability_zero() const { return p_; }

    // leftmost position of the minimum height over [a, b], a <= b
    int leftmost_argmin(int a, int b) const;

    bool is_strict_local_min(int i) const {
        return i > 0 && i < length() && height_[i - 1] > height_[i] && height_[i + 1] > height_[i];
    }

    // decoration of a strict local minimum, drawn on first query
    int sign_at(int pos);

    // Decoration rule between positions x != y: the decoration at the leftmost
    // argmin of the path on [min,max]; an argmin at either endpoint is not a
    // local minimum and yields 0 (the continuum convention for ill-defined
    // minima). Leftmost tie-breaking among interior minima is a deliberate
    // discretization choice; its bias vanishes as N grows.
    int dec(int x, int y);

private:
    DecoratedExcursion() = default;
    void build_rmq();

    int half_steps_ = 0;
    double p_ = 0.0;
    std::vector<std::int32_t> height_;
    RandomSource sign_rng_{0};
    std::unordered_map<int, int> signs_;

    static constexpr int kBlock = 64;
    std::vector<std::int32_t> block_argmin_;
    std::vector<std::vector<std::int32_t>> sparse_;  // over blocks, leftmost ties
};

struct CographonSample {
    Graph graph;
    long long degenerate_draws = 0;  // position collisions that were redrawn
};

// Sample_k of the Brownian cographon at discretization N: k distinct uniform
// positions in {0..2N}, vertices adjacent iff the decoration between their
// positions is 1. Collisions are redrawn and counted.
CographonSample sample_cographon_graph(int k, int half_steps, double p, RandomSource& rng);

// All values lie in [0, 1].
struct EmpiricalDistribution {
    std::vector<double> samples;
    void validate() const;
};

struct AlphaTildeResult {
    EmpiricalDistribution dist;      // reps values of alpha(sample)/k
    long long degenerate_draws = 0;
};

// Prefix estimator of the graphon independence number: alpha(Sample_k)/k over
// independent decorated excursions.
AlphaTildeResult estimate_alpha_tilde(int k, int half_steps, double p, int reps,
                                      std::uint64_t seed);

// One application of the Phi_p operator by Monte Carlo: each output particle
// combines three resamples through a Dirichlet(1/2,1/2,1/2) triple and a
// Bernoulli(1-p) switch between sum and max forms.
EmpiricalDistribution phi_p_apply(const EmpiricalDistribution& dist, double p, int particles,
                                  RandomSource& rng);

struct PhiIterationSummary {
    int iteration = 0;
    double mean = 0.0;
    double median = 0.0;
    double w1_prev = 0.0;  // Wasserstein-1 distance to the previous iterate
};

// Iterates Phi_p from the Dirac mass at 1 and summarizes each iterate.
std::vector<PhiIterationSummary> phi_p_iterate(double p, int iterations, int particles,
                                               std::uint64_t seed);

// Wasserstein-1 between equal-size empirical samples: mean absolute difference
// of the sorted values.
double wasserstein1(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

}  // namespace cosep
