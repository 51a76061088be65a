#include "cosep/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

TruncatedSeries::TruncatedSeries(int order, std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

const mpq_class& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries::coeff");
    return coeffs_[n];
}

void TruncatedSeries::set_coeff(int n, const mpq_class& v) {
    if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries::set_coeff");
    coeffs_[n] = v;
}

int TruncatedSeries::valuation() const {
    for (int n = 0; n <= order(); ++n)
        if (coeffs_[n] != 0) return n;
    return order() + 1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    TruncatedSeries out(new_order);
    for (int n = 0; n <= std::min(order(), new_order); ++n) out.coeffs_[n] = coeffs_[n];
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries out(N);
    mpq_class t;
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.coeffs_[j] == 0) continue;
            t = a.coeffs_[i] * b.coeffs_[j];
            out.coeffs_[i + j] += t;
        }
    }
    return out;
}

TruncatedSeries operator*(const mpq_class& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) out.coeffs_[n] = c * a.coeffs_[n];
    return out;
}

TruncatedSeries operator+(const mpq_class& c, const TruncatedSeries& a) {
    TruncatedSeries out = a;
    out.coeffs_[0] += c;
    return out;
}

TruncatedSeries operator-(const mpq_class& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) out.coeffs_[n] = -a.coeffs_[n];
    out.coeffs_[0] += c;
    return out;
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries out(order);
    out.coeffs_[0] = 1;
    return out;
}

TruncatedSeries TruncatedSeries::z(int order) {
    TruncatedSeries out(order);
    if (order >= 1) out.coeffs_[1] = 1;
    return out;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    if (a.coeff(0) != 0)
        throw std::invalid_argument("exp_series: constant term must be zero");
    int N = a.order();
    TruncatedSeries f(N);
    f.set_coeff(0, 1);
    // n f_n = sum_{i=1..n} i a_i f_{n-i}
    for (int n = 1; n <= N; ++n) {
        mpq_class s = 0;
        for (int i = 1; i <= n; ++i) {
            if (a.coeff(i) == 0) continue;
            s += i * a.coeff(i) * f.coeff(n - i);
        }
        s /= n;
        f.set_coeff(n, s);
    }
    return f;
}

TruncatedSeries sqrt_series(const TruncatedSeries& a) {
    if (a.coeff(0) != 1)
        throw std::invalid_argument("sqrt_series: constant term must be one");
    int N = a.order();
    TruncatedSeries f(N);
    f.set_coeff(0, 1);
    for (int n = 1; n <= N; ++n) {
        mpq_class s = a.coeff(n);
        for (int i = 1; i < n; ++i) s -= f.coeff(i) * f.coeff(n - i);
        s /= 2;
        f.set_coeff(n, s);
    }
    return f;
}

TruncatedSeries inverse_series(const TruncatedSeries& a) {
    if (a.coeff(0) == 0)
        throw std::invalid_argument("inverse_series: constant term must be nonzero");
    int N = a.order();
    TruncatedSeries f(N);
    mpq_class inv0 = 1 / a.coeff(0);
    f.set_coeff(0, inv0);
    for (int n = 1; n <= N; ++n) {
        mpq_class s = 0;
        for (int i = 1; i <= n; ++i) s += a.coeff(i) * f.coeff(n - i);
        f.set_coeff(n, -inv0 * s);
    }
    return f;
}

TruncatedSeries compose_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff(0) != 0)
        throw std::invalid_argument("compose_series: inner series needs valuation >= 1");
    int N = std::min(a.order(), b.order());
    TruncatedSeries acc(N);
    for (int i = N; i >= 0; --i) {
        acc = acc * b;
        acc.set_coeff(0, acc.coeff(0) + a.coeff(i));
    }
    return acc;
}

TruncatedSeries derivative_series(const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int n = 1; n <= a.order(); ++n) out.set_coeff(n - 1, n * a.coeff(n));
    return out;
}

TruncatedSeries solve_fixed_point(
    int order, const std::function<TruncatedSeries(const TruncatedSeries&)>& phi) {
    TruncatedSeries a = TruncatedSeries::zero(0);
    for (int k = 1; k <= order; ++k) {
        TruncatedSeries next = phi(a.truncated(k)).truncated(k);
        // the new iterate must reproduce the previous one through order k-1
        for (int n = 0; n < k; ++n)
            if (next.coeff(n) != a.coeff(std::min(n, a.order())))
                throw NonConvergence("solve_fixed_point: no valuation gain at order " +
                                     std::to_string(k));
        a = next;
    }
    // final residual check at full order
    TruncatedSeries res = phi(a) - a;
    if (res.valuation() <= order)
        throw NonConvergence("solve_fixed_point: residual at order " +
                             std::to_string(res.valuation()));
    return a;
}

// ---------------------------------------------------------------- bivariate

BiSeriesQ::BiSeriesQ(int order) : coeffs_(order + 1) {
    for (int n = 0; n <= order; ++n) coeffs_[n].resize(n + 1);
}

const mpq_class& BiSeriesQ::coeff(int n, int k) const {
    static const mpq_class zero = 0;
    if (n < 0 || n > order()) throw std::out_of_range("BiSeriesQ::coeff");
    if (k < 0 || k > n) return zero;
    return coeffs_[n][k];
}

void BiSeriesQ::set_coeff(int n, int k, const mpq_class& v) {
    if (n < 0 || n > order() || k < 0 || k > n) throw std::out_of_range("BiSeriesQ::set_coeff");
    coeffs_[n][k] = v;
}

BiSeriesQ operator+(const BiSeriesQ& a, const BiSeriesQ& b) {
    int N = std::min(a.order(), b.order());
    BiSeriesQ out(N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) out.coeffs_[n][k] = a.coeffs_[n][k] + b.coeffs_[n][k];
    return out;
}

BiSeriesQ operator-(const BiSeriesQ& a, const BiSeriesQ& b) {
    int N = std::min(a.order(), b.order());
    BiSeriesQ out(N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) out.coeffs_[n][k] = a.coeffs_[n][k] - b.coeffs_[n][k];
    return out;
}

BiSeriesQ operator*(const BiSeriesQ& a, const BiSeriesQ& b) {
    int N = std::min(a.order(), b.order());
    BiSeriesQ out(N);
    mpq_class t;
    for (int n1 = 0; n1 <= N; ++n1)
        for (int k1 = 0; k1 <= n1; ++k1) {
            if (a.coeffs_[n1][k1] == 0) continue;
            for (int n2 = 0; n1 + n2 <= N; ++n2)
                for (int k2 = 0; k2 <= n2; ++k2) {
                    if (b.coeffs_[n2][k2] == 0) continue;
                    t = a.coeffs_[n1][k1] * b.coeffs_[n2][k2];
                    out.coeffs_[n1 + n2][k1 + k2] += t;
                }
        }
    return out;
}

BiSeriesQ operator*(const mpq_class& c, const BiSeriesQ& a) {
    BiSeriesQ out(a.order());
    for (int n = 0; n <= a.order(); ++n)
        for (int k = 0; k <= n; ++k) out.coeffs_[n][k] = c * a.coeffs_[n][k];
    return out;
}

TruncatedSeries BiSeriesQ::at_u0() const {
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.set_coeff(n, coeffs_[n][0]);
    return out;
}

BiSeriesQ BiSeriesQ::from_univariate(const TruncatedSeries& a) {
    BiSeriesQ out(a.order());
    for (int n = 0; n <= a.order(); ++n) out.coeffs_[n][0] = a.coeff(n);
    return out;
}

BiSeriesQ BiSeriesQ::zu(int order) {
    BiSeriesQ out(order);
    if (order >= 1) out.coeffs_[1][1] = 1;
    return out;
}

bool BiSeriesQ::is_zero() const {
    for (const auto& row : coeffs_)
        for (const auto& c : row)
            if (c != 0) return false;
    return true;
}

BiSeriesQ exp_series(const BiSeriesQ& a) {
    if (a.coeff(0, 0) != 0)
        throw std::invalid_argument("exp_series: constant term must be zero");
    int N = a.order();
    BiSeriesQ f(N);
    f.set_coeff(0, 0, 1);
    // n f_n(u) = sum_{i=1..n} i a_i(u) f_{n-i}(u)
    mpq_class t;
    for (int n = 1; n <= N; ++n) {
        std::vector<mpq_class> acc(n + 1);
        for (int i = 1; i <= n; ++i)
            for (int k1 = 0; k1 <= i; ++k1) {
                if (a.coeff(i, k1) == 0) continue;
                t = i * a.coeff(i, k1);
                for (int k2 = 0; k2 <= n - i; ++k2) {
                    if (f.coeff(n - i, k2) == 0) continue;
                    acc[k1 + k2] += t * f.coeff(n - i, k2);
                }
            }
        for (int k = 0; k <= n; ++k) {
            acc[k] /= n;
            f.set_coeff(n, k, acc[k]);
        }
    }
    return f;
}

}  // namespace cosep
