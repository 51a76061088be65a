#pragma once

#include <vector>

#include <gmpxx.h>

#include "cosep/graph.hpp"
#include "cosep/permutation.hpp"

namespace cosep {
namespace oracle {

// Complete catalogs of small objects, built by raw filters so that nothing in
// here shares code with the cotree/Schroeder machinery it is used to check.
template <class T>
struct ExhaustiveCatalog {
    int n = 0;
    std::vector<T> items;
};

// direct induced-P4 search over all 4-subsets
bool is_p4_free(const Graph& g);

// direct pattern containment test against 2413 and 3142
bool avoids_2413_3142(const Permutation& sigma);

// all labeled P4-free graphs on n <= 5 vertices
ExhaustiveCatalog<Graph> enumerate_cographs(int n);

// all 2413/3142-avoiding permutations of size n <= 8
ExhaustiveCatalog<Permutation> enumerate_separable(int n);

// number of independent sets of size k, by checking every vertex subset
mpz_class count_independent_sets(const Graph& g, int k);

// number of increasing subsequences of length k, by checking every index subset
mpz_class count_increasing_subsequences(const Permutation& sigma, int k);

// exact average of the above over the full catalog
mpq_class oracle_expected_X(int n, int k);
mpq_class oracle_expected_Z(int n, int k);

}  // namespace oracle
}  // namespace cosep
