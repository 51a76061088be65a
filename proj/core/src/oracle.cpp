#include "cosep/oracle.hpp"

#include <algorithm>

#include "cosep/errors.hpp"

namespace cosep {
namespace oracle {

bool is_p4_free(const Graph& g) {
    int n = g.size();
    // every induced path on four vertices, in any of the 12 vertex orderings
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    int quad[4] = {a, b, c, d};
                    std::sort(quad, quad + 4);
                    do {
                        int p = quad[0], q = quad[1], r = quad[2], s = quad[3];
                        if (p > s) continue;  // each path counted once per direction
                        if (g.edge(p, q) && g.edge(q, r) && g.edge(r, s) && !g.edge(p, r) &&
                            !g.edge(p, s) && !g.edge(q, s))
                            return false;
                    } while (std::next_permutation(quad, quad + 4));
                }
    return true;
}

bool avoids_2413_3142(const Permutation& sigma) {
    int n = sigma.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    int va = sigma(a), vb = sigma(b), vc = sigma(c), vd = sigma(d);
                    // 2413: vc < va < vd < vb;  3142: vb < vd < va < vc
                    if (vc < va && va < vd && vd < vb) return false;
                    if (vb < vd && vd < va && va < vc) return false;
                }
    return true;
}

ExhaustiveCatalog<Graph> enumerate_cographs(int n) {
    if (n < 1 || n > 5) throw SizeLimitExceeded("enumerate_cographs: n must be in 1..5");
    ExhaustiveCatalog<Graph> cat;
    cat.n = n;
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++bit)
                if (mask >> bit & 1) edges.emplace_back(i, j);
        Graph g(n, std::move(edges));
        if (is_p4_free(g)) cat.items.push_back(std::move(g));
    }
    return cat;
}

ExhaustiveCatalog<Permutation> enumerate_separable(int n) {
    if (n < 1 || n > 8) throw SizeLimitExceeded("enumerate_separable: n must be in 1..8");
    ExhaustiveCatalog<Permutation> cat;
    cat.n = n;
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    do {
        Permutation sigma(vals);
        if (avoids_2413_3142(sigma)) cat.items.push_back(std::move(sigma));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return cat;
}

mpz_class count_independent_sets(const Graph& g, int k) {
    int n = g.size();
    if (n > 20) throw SizeLimitExceeded("count_independent_sets: n too large for subsets");
    mpz_class count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        bool independent = true;
        for (int i = 1; i <= n && independent; ++i) {
            if (!(mask >> (i - 1) & 1)) continue;
            for (int j = i + 1; j <= n && independent; ++j)
                if ((mask >> (j - 1) & 1) && g.edge(i, j)) independent = false;
        }
        if (independent) ++count;
    }
    return count;
}

mpz_class count_increasing_subsequences(const Permutation& sigma, int k) {
    int n = sigma.size();
    if (n > 20) throw SizeLimitExceeded("count_increasing_subsequences: n too large for subsets");
    mpz_class count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        bool increasing = true;
        int prev = 0;
        for (int i = 1; i <= n && increasing; ++i) {
            if (!(mask >> (i - 1) & 1)) continue;
            if (sigma(i) < prev) increasing = false;
            prev = sigma(i);
        }
        if (increasing) ++count;
    }
    return count;
}

mpq_class oracle_expected_X(int n, int k) {
    ExhaustiveCatalog<Graph> cat = enumerate_cographs(n);
    mpz_class total = 0;
    for (const Graph& g : cat.items) total += count_independent_sets(g, k);
    mpq_class r(total, static_cast<unsigned long>(cat.items.size()));
    r.canonicalize();
    return r;
}

mpq_class oracle_expected_Z(int n, int k) {
    ExhaustiveCatalog<Permutation> cat = enumerate_separable(n);
    mpz_class total = 0;
    for (const Permutation& sigma : cat.items) total += count_increasing_subsequences(sigma, k);
    mpq_class r(total, static_cast<unsigned long>(cat.items.size()));
    r.canonicalize();
    return r;
}

}  // namespace oracle
}  // namespace cosep
