#pragma once

#include <vector>

#include "cosep/scaled_real.hpp"

namespace cosep {

// Floating mirror of the exact bivariate pipelines, for orders far beyond the
// exact default. Coefficients are true series values held as ScaledReal, and
// all recurrences are arranged as sums and products of nonnegative terms, so
// no cancellation occurs.

struct FloatCographSeries {
    int order = 0;
    std::vector<std::vector<ScaledReal>> c;  // c[n][k] = [z^n u^k] C(z,u)
};

struct FloatSeparableSeries {
    int order = 0;
    std::vector<std::vector<ScaledReal>> z;  // z[n][k] = [z^n u^k] Z(z,u)
};

FloatCographSeries solve_cograph_series_float(int order);
FloatSeparableSeries solve_separable_series_float(int order);

// E[X_{n,k}] as a double; throws OverflowSignal when the value exceeds the
// double range (the log value is always available below).
double float_expected_X(const FloatCographSeries& fs, int n, int k);
double float_expected_Z(const FloatSeparableSeries& fs, int n, int k);

double log_expected_X(const FloatCographSeries& fs, int n, int k);
double log_expected_Z(const FloatSeparableSeries& fs, int n, int k);

// log of [z^n] L and [z^n] S for radius-of-convergence checks
std::vector<double> float_L_logcoeffs(int order);
std::vector<double> float_S_logcoeffs(int order);

}  // namespace cosep
