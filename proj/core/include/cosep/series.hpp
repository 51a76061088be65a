#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

namespace cosep {

// Univariate formal power series over exact rationals, truncated at order N
// (coefficients of z^0..z^N are retained). All ring operations are exact and
// closed under truncation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(order + 1) {}
    TruncatedSeries(int order, std::vector<mpq_class> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int n) const;
    void set_coeff(int n, const mpq_class& v);

    // smallest n with nonzero coefficient; order()+1 for the zero series
    int valuation() const;

    TruncatedSeries truncated(int new_order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
    TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }

    friend TruncatedSeries operator*(const mpq_class& c, const TruncatedSeries& a);
    friend TruncatedSeries operator+(const mpq_class& c, const TruncatedSeries& a);
    friend TruncatedSeries operator-(const mpq_class& c, const TruncatedSeries& a);

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order);
    static TruncatedSeries z(int order);

private:
    std::vector<mpq_class> coeffs_;
};

// exp(A) for A with zero constant term, via the recurrence F' = A'F.
TruncatedSeries exp_series(const TruncatedSeries& a);

// sqrt(A) for A with constant term 1, via F*F = A.
TruncatedSeries sqrt_series(const TruncatedSeries& a);

// 1/A for A with nonzero constant term.
TruncatedSeries inverse_series(const TruncatedSeries& a);

// A(B) for B with valuation >= 1 (Horner scheme).
TruncatedSeries compose_series(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries derivative_series(const TruncatedSeries& a);

// Solves A = phi(A) for the unique fixed point without constant term, by
// iteration from 0. Each step must gain at least one order of agreement;
// otherwise NonConvergence is thrown (an implementation bug, not a math
// condition). Working order grows with the iteration, so the cost is O(N)
// truncated applications of phi at increasing orders.
TruncatedSeries solve_fixed_point(
    int order, const std::function<TruncatedSeries(const TruncatedSeries&)>& phi);

// Bivariate formal power series in (z, u) over exact rationals, truncated at
// z-order N, with u-degree at most the z-degree (triangular storage).
class BiSeriesQ {
public:
    explicit BiSeriesQ(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int n, int k) const;
    void set_coeff(int n, int k, const mpq_class& v);

    friend BiSeriesQ operator+(const BiSeriesQ& a, const BiSeriesQ& b);
    friend BiSeriesQ operator-(const BiSeriesQ& a, const BiSeriesQ& b);
    friend BiSeriesQ operator*(const BiSeriesQ& a, const BiSeriesQ& b);
    friend BiSeriesQ operator*(const mpq_class& c, const BiSeriesQ& a);

    bool operator==(const BiSeriesQ& other) const { return coeffs_ == other.coeffs_; }

    // the univariate series A(z, 0)
    TruncatedSeries at_u0() const;

    static BiSeriesQ from_univariate(const TruncatedSeries& a);
    // z * u as a bivariate series
    static BiSeriesQ zu(int order);

    bool is_zero() const;

private:
    std::vector<std::vector<mpq_class>> coeffs_;  // coeffs_[n][k], k <= n
};

// exp(A) for bivariate A with zero constant term, via F_z = A_z F.
BiSeriesQ exp_series(const BiSeriesQ& a);

}  // namespace cosep
