#include "cosep/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosep/cotree.hpp"
#include "cosep/parallel.hpp"
#include "cosep/statistics.hpp"

namespace cosep {

DecoratedExcursion DecoratedExcursion::sample(int half_steps, double p, RandomSource& rng) {
    if (half_steps < 1) throw std::invalid_argument("DecoratedExcursion: need N >= 1");
    if (p < 0.0 || p >= 1.0)
        throw std::invalid_argument("DecoratedExcursion: need p in [0, 1)");
    int N = half_steps;
    int total = 2 * N + 1;
    std::vector<std::int8_t> steps(total, -1);
    for (int i = 0; i < N; ++i) steps[i] = 1;
    for (int i = total - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(steps[i], steps[j]);
    }
    // first position of the minimum prefix sum; the good rotation starts after it
    int best_pos = 0, best = 1, sum = 0;
    for (int i = 0; i < total; ++i) {
        sum += steps[i];
        if (sum < best) { best = sum; best_pos = i; }
    }
    DecoratedExcursion e;
    e.half_steps_ = N;
    e.p_ = p;
    e.height_.resize(2 * N + 1);
    e.height_[0] = 0;
    for (int t = 0; t < 2 * N; ++t)
        e.height_[t + 1] = e.height_[t] + steps[(best_pos + 1 + t) % total];
    e.sign_rng_ = RandomSource(rng.next_u64());
    e.build_rmq();
    return e;
}

void DecoratedExcursion::build_rmq() {
    int n = static_cast<int>(height_.size());
    int blocks = (n + kBlock - 1) / kBlock;
    block_argmin_.resize(blocks);
    for (int b = 0; b < blocks; ++b) {
        int lo = b * kBlock, hi = std::min(n, lo + kBlock);
        int arg = lo;
        for (int i = lo + 1; i < hi; ++i)
            if (height_[i] < height_[arg]) arg = i;
        block_argmin_[b] = arg;
    }
    int levels = 1;
    while ((1 << levels) <= blocks) ++levels;
    sparse_.assign(levels, block_argmin_);
    for (int k = 1; k < levels; ++k)
        for (int b = 0; b + (1 << k) <= blocks; ++b) {
            int left = sparse_[k - 1][b];
            int right = sparse_[k - 1][b + (1 << (k - 1))];
            sparse_[k][b] = height_[right] < height_[left] ? right : left;
        }
}

int DecoratedExcursion::leftmost_argmin(int a, int b) const {
    int arg = a;
    int ba = a / kBlock, bb = b / kBlock;
    if (ba == bb) {
        for (int i = a + 1; i <= b; ++i)
            if (height_[i] < height_[arg]) arg = i;
        return arg;
    }
    for (int i = a + 1; i < (ba + 1) * kBlock; ++i)
        if (height_[i] < height_[arg]) arg = i;
    if (bb - ba >= 2) {
        int lo = ba + 1, hi = bb - 1;
        int k = 0;
        while ((2 << k) <= hi - lo + 1) ++k;
        int left = sparse_[k][lo];
        int right = sparse_[k][hi - (1 << k) + 1];
        int mid = height_[right] < height_[left] ? right : left;
        if (height_[mid] < height_[arg]) arg = mid;
    }
    for (int i = bb * kBlock; i <= b; ++i)
        if (height_[i] < height_[arg]) arg = i;
    return arg;
}

int DecoratedExcursion::sign_at(int pos) {
    auto it = signs_.find(pos);
    if (it != signs_.end()) return it->second;
    if (!is_strict_local_min(pos))
        throw std::logic_error("DecoratedExcursion::sign_at: not a strict local minimum");
    int s = sign_rng_.bernoulli(p_) ? 0 : 1;  // P(sign = 0) = p
    signs_.emplace(pos, s);
    return s;
}

int DecoratedExcursion::dec(int x, int y) {
    if (x == y) throw std::invalid_argument("DecoratedExcursion::dec: positions must differ");
    int a = std::min(x, y), b = std::max(x, y);
    int m = leftmost_argmin(a, b);
    if (m == a || m == b) return 0;
    return sign_at(m);
}

CographonSample sample_cographon_graph(int k, int half_steps, double p, RandomSource& rng) {
    if (k < 1) throw std::invalid_argument("sample_cographon_graph: need k >= 1");
    DecoratedExcursion exc = DecoratedExcursion::sample(half_steps, p, rng);
    std::vector<int> pos;
    pos.reserve(k);
    long long degenerate = 0;
    std::uint64_t range = static_cast<std::uint64_t>(2 * half_steps) + 1;
    while (static_cast<int>(pos.size()) < k) {
        int candidate = static_cast<int>(rng.below(range));
        if (std::find(pos.begin(), pos.end(), candidate) != pos.end()) {
            ++degenerate;
            continue;
        }
        pos.push_back(candidate);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (exc.dec(pos[i], pos[j]) == 1) edges.emplace_back(i + 1, j + 1);
    return {Graph(k, std::move(edges)), degenerate};
}

void EmpiricalDistribution::validate() const {
    for (double v : samples)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("EmpiricalDistribution: value outside [0,1]");
}

AlphaTildeResult estimate_alpha_tilde(int k, int half_steps, double p, int reps,
                                      std::uint64_t seed) {
    AlphaTildeResult out;
    out.dist.samples.resize(reps);
    std::vector<long long> degenerate(reps, 0);
    parallel_for(0, reps, [&](int rep) {
        RandomSource rng(RandomSource::mix(seed, static_cast<std::uint64_t>(k),
                                           static_cast<std::uint64_t>(rep)));
        CographonSample s = sample_cographon_graph(k, half_steps, p, rng);
        degenerate[rep] = s.degenerate_draws;
        Cotree t = cotree_of_cograph(s.graph);
        out.dist.samples[rep] = static_cast<double>(alpha(t)) / k;
    });
    for (long long d : degenerate) out.degenerate_draws += d;
    out.dist.validate();
    return out;
}

EmpiricalDistribution phi_p_apply(const EmpiricalDistribution& dist, double p, int particles,
                                  RandomSource& rng) {
    if (dist.samples.empty()) throw std::invalid_argument("phi_p_apply: empty distribution");
    auto resample = [&]() {
        return dist.samples[rng.below(static_cast<std::uint64_t>(dist.samples.size()))];
    };
    EmpiricalDistribution out;
    out.samples.resize(particles);
    for (int i = 0; i < particles; ++i) {
        double x0 = resample(), x1 = resample(), x2 = resample();
        auto d = rng.dirichlet_half3();
        bool b = rng.bernoulli(1.0 - p);
        double y = b ? d[0] * x0 + std::max(d[1] * x1, d[2] * x2)
                     : d[0] * x0 + d[1] * x1 + d[2] * x2;
        // the exact value lies in [0,1]; rounding of the simplex sum can
        // overshoot by an ulp
        out.samples[i] = std::min(1.0, std::max(0.0, y));
    }
    return out;
}

std::vector<PhiIterationSummary> phi_p_iterate(double p, int iterations, int particles,
                                               std::uint64_t seed) {
    RandomSource rng(seed);
    EmpiricalDistribution current;
    current.samples.assign(particles, 1.0);
    std::vector<PhiIterationSummary> out;
    out.reserve(iterations);
    for (int it = 1; it <= iterations; ++it) {
        EmpiricalDistribution next = phi_p_apply(current, p, particles, rng);
        PhiIterationSummary s;
        s.iteration = it;
        double sum = 0.0;
        for (double v : next.samples) sum += v;
        s.mean = sum / particles;
        std::vector<double> sorted = next.samples;
        std::sort(sorted.begin(), sorted.end());
        s.median = sorted[sorted.size() / 2];
        s.w1_prev = wasserstein1(next, current);
        out.push_back(s);
        current = std::move(next);
    }
    return out;
}

double wasserstein1(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    if (a.samples.size() != b.samples.size() || a.samples.empty())
        throw std::invalid_argument("wasserstein1: need equal nonempty sample sizes");
    std::vector<double> sa = a.samples, sb = b.samples;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) acc += std::fabs(sa[i] - sb[i]);
    return acc / static_cast<double>(sa.size());
}

}  // namespace cosep
