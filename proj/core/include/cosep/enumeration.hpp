#pragma once

#include <vector>

#include <gmpxx.h>

#include "cosep/series.hpp"

namespace cosep {

// Bivariate counting series with exact integer-scaled coefficients, truncated
// at z-order N, u-degree at most z-degree. For exponential generating
// functions (labeled cographs) raw(n,k) = n! * [z^n u^k] F, which is an
// integer for every series in this module; for ordinary generating functions
// (separable permutations) raw(n,k) = [z^n u^k] F.
class TruncatedBiSeries {
public:
    TruncatedBiSeries(int order, bool egf);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_egf() const { return egf_; }

    const mpz_class& raw(int n, int k) const;
    mpz_class& raw_mut(int n, int k);

    // exact rational coefficient [z^n u^k]
    mpq_class coeff(int n, int k) const;

private:
    bool egf_;
    std::vector<std::vector<mpz_class>> c_;
};

// --------------------------------------------------------------- univariate

// Labeled-hierarchy counts l_n = n! [z^n] L for n = 0..nmax (l_0 = 0).
std::vector<mpz_class> hierarchy_counts(int nmax);

// Schroeder-tree counts s_n = [z^n] S for n = 0..nmax (s_0 = 0).
std::vector<mpz_class> schroder_counts(int nmax);

// L(z), the EGF of decoration-free labeled cotrees: the unique series without
// constant term with L = z + e^L - 1 - L, solved by fixed-point iteration.
TruncatedSeries series_L(int order);

// S(z), the OGF of Schroeder trees: S = z + S^2/(1-S), by fixed-point
// iteration.
TruncatedSeries series_S(int order);

// Expansion of the closed form (1 + z - sqrt(1 - 6z + z^2))/4.
TruncatedSeries series_S_closed_form(int order);

// Number of labeled cographs of size n: 1 for n = 1, else 2 n! [z^n] L.
mpz_class count_labeled_cographs(int n);

// Number of separable permutations of size n: 1 for n = 1, else 2 [z^n] S.
mpz_class count_separable(int n);

// ---------------------------------------------------------------- bivariate

// Cograph side: C1 counts 1-rooted marked cographs, C all marked cographs,
//   C1 = e^L - 1 - L + (e^L - 1)(e^{z(1+u)+C1} - 1 - C1 - L)
//   C  = e^{z(1+u)+C1} - 1
// solved order by order in z (exact EGF integers).
struct CographSeries {
    TruncatedBiSeries c1;
    TruncatedBiSeries c;
};
CographSeries solve_cograph_series(int order);

// Separable side:
//   S_minus = S^2/(1-S) + ((S_minus+z+zu)^2/(1-(S_minus+z+zu)) + zu + z - S) (1/(1-S)^2 - 1)
//   S_plus  = (S_minus+z+zu)^2/(1-(S_minus+z+zu))
//   Z       = z + zu + S_plus + S_minus
// solved order by order in z (exact OGF integers).
struct SeparableSeries {
    TruncatedBiSeries sminus;
    TruncatedBiSeries splus;
    TruncatedBiSeries z;
};
SeparableSeries solve_separable_series(int order);

TruncatedBiSeries series_C1(int order);
TruncatedBiSeries series_C(int order);
TruncatedBiSeries series_Sominus(int order);
TruncatedBiSeries series_Soplus(int order);

// E[X_{n,k}] = [z^n u^k] C / [z^n] C(z,0): expected number of independent sets
// of size k in a uniform labeled cograph of size n. Requires 1 <= k <= n <=
// series order.
mpq_class expected_X(const CographSeries& cs, int n, int k);

// E[Z_{n,k}] for increasing subsequences in uniform separable permutations.
mpq_class expected_Z(const SeparableSeries& ss, int n, int k);

}  // namespace cosep
