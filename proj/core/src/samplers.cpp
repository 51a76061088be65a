#include "cosep/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosep/parallel.hpp"
#include "cosep/statistics.hpp"

namespace cosep {

namespace {

// Chooses the first block size m in {1..n} with P(m) proportional to
// C(n-1,m-1) c_m A(n-m, jrest) (cograph case, with_binomial) or
// s_m B(n-m, jrest) (Schroeder case). The mass sits at both ends of the
// range, so the scan alternates m = n, 1, n-1, 2, ... with incrementally
// updated binomials.
template <class WeightFn, class TableFn>
int choose_first_size(int n, int jrest, bool with_binomial, WeightFn weight,
                      TableFn rest_table, RandomSource& rng, const mpz_class& total) {
    mpz_class x = rng.below(total);
    mpz_class cum = 0, term, binom_hi = 1, binom_lo = 1;
    int hi = n, lo = 1;
    bool take_hi = true;
    while (lo <= hi) {
        int m;
        if (take_hi || lo == hi) {
            m = hi;
            term = with_binomial ? mpz_class(binom_hi * weight(m)) : mpz_class(weight(m));
            term *= rest_table(n - m, jrest);
            if (hi > 1 && with_binomial) {
                // C(n-1, hi-2) = C(n-1, hi-1) (hi-1) / (n-hi+1)
                mpz_mul_ui(binom_hi.get_mpz_t(), binom_hi.get_mpz_t(), hi - 1);
                mpz_divexact_ui(binom_hi.get_mpz_t(), binom_hi.get_mpz_t(), n - hi + 1);
            }
            --hi;
        } else {
            m = lo;
            term = with_binomial ? mpz_class(binom_lo * weight(m)) : mpz_class(weight(m));
            term *= rest_table(n - m, jrest);
            if (with_binomial) {
                // C(n-1, lo) = C(n-1, lo-1) (n-lo) / lo
                mpz_mul_ui(binom_lo.get_mpz_t(), binom_lo.get_mpz_t(), n - lo);
                mpz_divexact_ui(binom_lo.get_mpz_t(), binom_lo.get_mpz_t(), lo);
            }
            ++lo;
        }
        cum += term;
        if (x < cum) return m;
        take_hi = !take_hi;
    }
    throw std::logic_error("choose_first_size: inverse transform ran past the table total");
}

Cotree sample_hierarchy(std::vector<int> labels, int dec, const CountTables& tables,
                        RandomSource& rng);

// Children of an internal node on `labels` (size >= 2), root decoration dec.
std::vector<Cotree> sample_block_children(std::vector<int>& labels, int dec,
                                          const CountTables& tables, RandomSource& rng) {
    std::vector<Cotree> children;
    int j = 2;
    std::vector<int> rest;
    while (!labels.empty()) {
        int n = static_cast<int>(labels.size());
        int jrest = std::max(j - 1, 0);
        static const mpz_class one = 1;
        int m = choose_first_size(
            n, jrest, /*with_binomial=*/true,
            [&](int mm) -> const mpz_class& { return mm == 1 ? one : tables.hierarchy_count(mm); },
            [&](int r, int jj) { return tables.block_table(r, jj); }, rng,
            tables.block_table(n, j));
        // block = labels[0] plus a uniform (m-1)-subset of labels[1..]
        for (int t = 1; t < m; ++t) {
            int idx = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - t)));
            std::swap(labels[t], labels[idx]);
        }
        if (m == 1) {
            children.push_back(Cotree::leaf(labels[0]));
        } else {
            std::vector<int> block(labels.begin(), labels.begin() + m);
            children.push_back(sample_hierarchy(std::move(block), 1 - dec, tables, rng));
        }
        rest.assign(labels.begin() + m, labels.end());
        labels.swap(rest);
        j = jrest;
    }
    return children;
}

Cotree sample_hierarchy(std::vector<int> labels, int dec, const CountTables& tables,
                        RandomSource& rng) {
    std::vector<Cotree> children = sample_block_children(labels, dec, tables, rng);
    return Cotree::internal(dec, std::move(children));
}

std::vector<SchroderTree> sample_seq_children(int n, TreeSign sign, const CountTables& tables,
                                              RandomSource& rng);

SchroderTree sample_schroder_internal(int n, TreeSign sign, const CountTables& tables,
                                      RandomSource& rng) {
    return SchroderTree::internal(sign, sample_seq_children(n, sign, tables, rng));
}

std::vector<SchroderTree> sample_seq_children(int n, TreeSign sign, const CountTables& tables,
                                              RandomSource& rng) {
    std::vector<SchroderTree> children;
    int j = 2;
    int remaining = n;
    while (remaining > 0) {
        int jrest = std::max(j - 1, 0);
        int m = choose_first_size(
            remaining, jrest, /*with_binomial=*/false,
            [&](int mm) -> const mpz_class& { return tables.schroder_count(mm); },
            [&](int r, int jj) { return tables.seq_table(r, jj); }, rng,
            tables.seq_table(remaining, j));
        children.push_back(m == 1 ? SchroderTree::leaf()
                                  : sample_schroder_internal(m, opposite(sign), tables, rng));
        remaining -= m;
        j = jrest;
    }
    return children;
}

}  // namespace

Cotree sample_cotree(int n, RandomSource& rng, const CountTables& tables) {
    if (n < 1) throw std::invalid_argument("sample_cotree: n must be >= 1");
    if (tables.cograph_max() < n)
        throw std::invalid_argument("sample_cotree: count tables built only to " +
                                    std::to_string(tables.cograph_max()));
    if (n == 1) return Cotree::leaf(1);
    int dec = static_cast<int>(rng.below(2ULL));
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    return sample_hierarchy(std::move(labels), dec, tables, rng);
}

Graph sample_cograph(int n, RandomSource& rng, const CountTables& tables) {
    return cograph_of_cotree(sample_cotree(n, rng, tables));
}

SchroderTree sample_schroder(int n, RandomSource& rng, const CountTables& tables) {
    if (n < 1) throw std::invalid_argument("sample_schroder: n must be >= 1");
    if (tables.schroder_max() < n)
        throw std::invalid_argument("sample_schroder: count tables built only to " +
                                    std::to_string(tables.schroder_max()));
    if (n == 1) return SchroderTree::leaf();
    TreeSign sign = rng.below(2ULL) ? TreeSign::minus : TreeSign::plus;
    return sample_schroder_internal(n, sign, tables, rng);
}

Permutation sample_separable(int n, RandomSource& rng, const CountTables& tables) {
    return perm_of_tree(sample_schroder(n, rng, tables));
}

int ceil_sqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r >= 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

double sample_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("sample_quantile: empty sample");
    std::sort(values.begin(), values.end());
    double pos = p * static_cast<double>(values.size() - 1);
    std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= values.size()) return values.back();
    double frac = pos - static_cast<double>(i);
    return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

namespace {

MonteCarloResult monte_carlo_run(const std::vector<int>& sizes, int reps,
                                 const std::vector<double>& quantiles, std::uint64_t seed,
                                 CountTables& tables, bool cograph_model) {
    if (reps < 1) throw std::invalid_argument("monte_carlo: reps must be >= 1");
    int nmax = 0;
    for (int n : sizes) nmax = std::max(nmax, n);
    if (cograph_model) tables.build_cograph(nmax);
    else tables.build_schroder(nmax);

    MonteCarloResult result;
    result.seed = seed;
    result.samples.resize(sizes.size() * static_cast<std::size_t>(reps));
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        int n = sizes[si];
        parallel_for(0, reps, [&, n, si](int rep) {
            RandomSource rng(RandomSource::mix(seed, static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(rep)));
            MonteCarloSample s;
            s.n = n;
            s.rep = rep;
            if (cograph_model) {
                Cotree t = sample_cotree(n, rng, tables);
                s.stat = alpha(t);
                s.dual_stat = omega(t);
            } else {
                SchroderTree t = sample_schroder(n, rng, tables);
                s.stat = lis(t);
                s.dual_stat = lds(t);
            }
            result.samples[si * reps + rep] = s;
        });
    }
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        int n = sizes[si];
        MonteCarloSummary sum;
        sum.n = n;
        std::vector<double> ratios(reps);
        int bound = ceil_sqrt(n);
        for (int rep = 0; rep < reps; ++rep) {
            const MonteCarloSample& s = result.samples[si * reps + rep];
            ratios[rep] = static_cast<double>(s.stat) / n;
            sum.mean += ratios[rep];
            if (std::max(s.stat, s.dual_stat) < bound) sum.sqrt_bound_ok = false;
        }
        sum.mean /= reps;
        sum.median = sample_quantile(ratios, 0.5);
        for (double p : quantiles) sum.quantiles.emplace_back(p, sample_quantile(ratios, p));
        result.summaries.push_back(std::move(sum));
    }
    return result;
}

}  // namespace

MonteCarloResult monte_carlo_alpha(const std::vector<int>& sizes, int reps,
                                   const std::vector<double>& quantiles, std::uint64_t seed,
                                   CountTables& tables) {
    return monte_carlo_run(sizes, reps, quantiles, seed, tables, true);
}

MonteCarloResult monte_carlo_lis(const std::vector<int>& sizes, int reps,
                                 const std::vector<double>& quantiles, std::uint64_t seed,
                                 CountTables& tables) {
    return monte_carlo_run(sizes, reps, quantiles, seed, tables, false);
}

}  // namespace cosep
