#include "cosep/float_series.hpp"

#include <cmath>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

namespace {

// lambda_n = [z^n] L and e_n = [z^n] e^L, from 2L = z + e^L - 1 and E' = L'E:
//   lambda_n = [n=1] + (1/n) sum_{i<n} i lambda_i e_{n-i},  e_n = 2 lambda_n - [n=1]
void univariate_L(int N, std::vector<ScaledReal>& lam, std::vector<ScaledReal>& e) {
    lam.assign(N + 1, ScaledReal::zero());
    e.assign(N + 1, ScaledReal::zero());
    e[0] = ScaledReal::from_double(1.0);
    for (int n = 1; n <= N; ++n) {
        ScaledReal acc = ScaledReal::zero();
        for (int i = 1; i < n; ++i)
            acc = acc + ScaledReal::from_double(i) * lam[i] * e[n - i];
        acc = acc / ScaledReal::from_double(n);
        if (n == 1) acc = acc + ScaledReal::from_double(1.0);
        lam[n] = acc;
        e[n] = ScaledReal::from_double(2.0) * lam[n];
        if (n == 1) e[1] = e[1] - ScaledReal::from_double(1.0);
    }
}

// s_n = [z^n] S via s_n = sum_{m<n} s_m U_{n-m}, U_m = 2 s_m - [m=1]
void univariate_S(int N, std::vector<ScaledReal>& s, std::vector<ScaledReal>& U) {
    s.assign(N + 1, ScaledReal::zero());
    U.assign(N + 1, ScaledReal::zero());
    if (N >= 1) {
        s[1] = ScaledReal::from_double(1.0);
        U[1] = ScaledReal::from_double(1.0);
    }
    for (int n = 2; n <= N; ++n) {
        ScaledReal acc = ScaledReal::zero();
        for (int m = 1; m < n; ++m) acc = acc + s[m] * U[n - m];
        s[n] = acc;
        U[n] = ScaledReal::from_double(2.0) * s[n];
    }
}

}  // namespace

FloatCographSeries solve_cograph_series_float(int order) {
    if (order < 1) throw std::invalid_argument("solve_cograph_series_float: order must be >= 1");
    const int N = order;
    std::vector<ScaledReal> lam, e;
    univariate_L(N, lam, e);
    // g = [z^n](e^L - 1 - L), h = [z^n](e^L - 1); both nonnegative with
    // g_1 = 0, g_n = lambda_n (n >= 2), h_1 = 1, h_n = 2 lambda_n (n >= 2)
    std::vector<ScaledReal> g(N + 1), h(N + 1);
    for (int n = 2; n <= N; ++n) {
        g[n] = lam[n];
        h[n] = ScaledReal::from_double(2.0) * lam[n];
    }
    if (N >= 1) h[1] = ScaledReal::from_double(1.0);

    // same order-by-order recurrences as the exact pipeline, on true values:
    //   c1_n = g_n + sum_{j=1..n-1} h_j d_{n-j},  d = zu + C0 - L (k >= 1 cols of P)
    //   p_n  = (1/n) sum_{i=1..n-1} i v_i (p+v)_{n-i}
    //   C    = V + P
    std::vector<std::vector<ScaledReal>> v(N + 1), p(N + 1), w(N + 1);
    FloatCographSeries out;
    out.order = N;
    out.c.assign(N + 1, {});
    for (int n = 1; n <= N; ++n) {
        std::vector<ScaledReal> c1n(n + 1);
        c1n[0] = g[n];
        for (int j = 1; j <= n - 1; ++j) {
            int m = n - j;
            if (h[j].is_zero()) continue;
            if (m == 1) {
                c1n[1] = c1n[1] + h[j];
            } else {
                for (int k = 1; k <= m; ++k) c1n[k] = c1n[k] + h[j] * p[m][k];
            }
        }
        v[n] = c1n;
        if (n == 1) {
            v[1][0] = v[1][0] + ScaledReal::from_double(1.0);
            v[1][1] = v[1][1] + ScaledReal::from_double(1.0);
        }
        std::vector<ScaledReal> pn(n + 1);
        for (int i = 1; i <= n - 1; ++i) {
            ScaledReal iw = ScaledReal::from_double(i);
            for (int k1 = 0; k1 <= i; ++k1) {
                if (v[i][k1].is_zero()) continue;
                ScaledReal t = iw * v[i][k1];
                const auto& wrow = w[n - i];
                for (int k2 = 0; k2 < static_cast<int>(wrow.size()); ++k2)
                    pn[k1 + k2] = pn[k1 + k2] + t * wrow[k2];
            }
        }
        ScaledReal invn = ScaledReal::from_double(1.0) / ScaledReal::from_double(n);
        for (auto& x : pn) x = x * invn;
        w[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) w[n][k] = pn[k] + v[n][k];
        p[n] = std::move(pn);
        out.c[n] = w[n];
    }
    return out;
}

FloatSeparableSeries solve_separable_series_float(int order) {
    if (order < 1)
        throw std::invalid_argument("solve_separable_series_float: order must be >= 1");
    const int N = order;
    std::vector<ScaledReal> s, U;
    univariate_S(N, s, U);
    std::vector<ScaledReal> K(N + 1);  // 2U + U^2
    for (int n = 1; n <= N; ++n) {
        ScaledReal acc = ScaledReal::from_double(2.0) * U[n];
        for (int i = 1; i < n; ++i) acc = acc + U[i] * U[n - i];
        K[n] = acc;
    }
    std::vector<std::vector<ScaledReal>> q(N + 1), rp(N + 1), sp(N + 1), so(N + 1);
    FloatSeparableSeries out;
    out.order = N;
    out.z.assign(N + 1, {});
    for (int n = 1; n <= N; ++n) {
        std::vector<ScaledReal> son(n + 1);
        son[0] = s[n];
        if (n == 1) son[0] = ScaledReal::zero();
        for (int j = 1; j <= n - 1; ++j) {
            int m = n - j;
            if (K[j].is_zero()) continue;
            if (m == 1) {
                son[1] = son[1] + K[j];
            } else {
                for (int k = 1; k <= m; ++k) son[k] = son[k] + K[j] * sp[m][k];
            }
        }
        q[n] = son;
        if (n == 1) {
            q[1][0] = q[1][0] + ScaledReal::from_double(1.0);
            q[1][1] = q[1][1] + ScaledReal::from_double(1.0);
        }
        std::vector<ScaledReal> acc(n + 1);  // splus_n = sum_{i<n} q_i rp_{n-i}
        for (int i = 1; i <= n - 1; ++i)
            for (int k1 = 0; k1 <= i; ++k1) {
                if (q[i][k1].is_zero()) continue;
                const auto& row = rp[n - i];
                for (int k2 = 0; k2 < static_cast<int>(row.size()); ++k2)
                    acc[k1 + k2] = acc[k1 + k2] + q[i][k1] * row[k2];
            }
        rp[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) rp[n][k] = q[n][k] + acc[k];
        sp[n] = std::move(acc);
        so[n] = std::move(son);
        out.z[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) out.z[n][k] = so[n][k] + sp[n][k];
        if (n == 1) {
            out.z[1][0] = out.z[1][0] + ScaledReal::from_double(1.0);
            out.z[1][1] = out.z[1][1] + ScaledReal::from_double(1.0);
        }
    }
    return out;
}

namespace {

ScaledReal checked_ratio(const std::vector<std::vector<ScaledReal>>& c, int order, int n, int k,
                         const char* who) {
    if (n < 1 || k < 1 || k > n) throw DomainError(std::string(who) + ": need 1 <= k <= n");
    if (n > order)
        throw TruncationExceeded(std::string(who) + ": n exceeds float order " +
                                 std::to_string(order));
    return c[n][k] / c[n][0];
}

double to_double_checked(ScaledReal r, const char* who) {
    double v = r.to_double();
    if (std::isinf(v))
        throw OverflowSignal(std::string(who) + ": value exceeds double range, use the log form");
    return v;
}

}  // namespace

double float_expected_X(const FloatCographSeries& fs, int n, int k) {
    return to_double_checked(checked_ratio(fs.c, fs.order, n, k, "float_expected_X"),
                             "float_expected_X");
}

double float_expected_Z(const FloatSeparableSeries& fs, int n, int k) {
    return to_double_checked(checked_ratio(fs.z, fs.order, n, k, "float_expected_Z"),
                             "float_expected_Z");
}

double log_expected_X(const FloatCographSeries& fs, int n, int k) {
    return checked_ratio(fs.c, fs.order, n, k, "log_expected_X").log_abs();
}

double log_expected_Z(const FloatSeparableSeries& fs, int n, int k) {
    return checked_ratio(fs.z, fs.order, n, k, "log_expected_Z").log_abs();
}

std::vector<double> float_L_logcoeffs(int order) {
    std::vector<ScaledReal> lam, e;
    univariate_L(order, lam, e);
    std::vector<double> out(order + 1);
    for (int n = 0; n <= order; ++n) out[n] = lam[n].log_abs();
    return out;
}

std::vector<double> float_S_logcoeffs(int order) {
    std::vector<ScaledReal> s, U;
    univariate_S(order, s, U);
    std::vector<double> out(order + 1);
    for (int n = 0; n <= order; ++n) out[n] = s[n].log_abs();
    return out;
}

}  // namespace cosep
