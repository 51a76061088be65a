#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cosep {

// Exact counting tables backing the recursive-method samplers.
//
// l[n] counts labeled cotrees of size n with a fixed root decoration
// (l[1] = 1 for the bare leaf). The weighted-block tables A[n][j] (ways to
// split n labels into >= j blocks, a block of size m weighing c_m = 1 if
// m = 1 else l[m]) collapse through e^L - 1 = 2L - z:
//   A[n][1] = 2 l[n] (n >= 2), A[1][1] = 1, A[n][2] = l[n] (n >= 2),
//   A[n][0] = A[n][1] for n >= 1, A[0][0] = 1.
// The Schroeder sequence tables B[n][j] collapse the same way onto s[n].
class CountTables {
public:
    CountTables() = default;

    void build_cograph(int nmax);
    void build_schroder(int nmax);

    int cograph_max() const { return static_cast<int>(l_.size()) - 1; }
    int schroder_max() const { return static_cast<int>(s_.size()) - 1; }

    const mpz_class& hierarchy_count(int n) const { return l_.at(n); }
    const mpz_class& schroder_count(int n) const { return s_.at(n); }

    // A[n][j] for j in {0,1,2}
    mpz_class block_table(int n, int j) const;
    // B[n][j] for j in {0,1,2}
    mpz_class seq_table(int n, int j) const;

private:
    std::vector<mpz_class> l_;  // l_[0] = 0 placeholder
    std::vector<mpz_class> s_;
};

}  // namespace cosep
