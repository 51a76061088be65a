#include "cosep/enumeration.hpp"

#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

TruncatedBiSeries::TruncatedBiSeries(int order, bool egf) : egf_(egf), c_(order + 1) {
    for (int n = 0; n <= order; ++n) c_[n].resize(n + 1);
}

const mpz_class& TruncatedBiSeries::raw(int n, int k) const {
    static const mpz_class zero = 0;
    if (n < 0 || n > order()) throw std::out_of_range("TruncatedBiSeries::raw");
    if (k < 0 || k > n) return zero;
    return c_[n][k];
}

mpz_class& TruncatedBiSeries::raw_mut(int n, int k) {
    if (n < 0 || n > order() || k < 0 || k > n)
        throw std::out_of_range("TruncatedBiSeries::raw_mut");
    return c_[n][k];
}

mpq_class TruncatedBiSeries::coeff(int n, int k) const {
    mpq_class q(raw(n, k));
    if (egf_) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        q /= mpq_class(fact);
    }
    q.canonicalize();
    return q;
}

// --------------------------------------------------------------- univariate

std::vector<mpz_class> hierarchy_counts(int nmax) {
    // From L'(1+z-2L) = 1 one gets L^2 = L - z + zL - int(L), whose
    // coefficients give the symmetric recurrence
    //   l_n = sum_{i=1..n-1} C(n,i) l_i l_{n-i} - (n-1) l_{n-1}   (n >= 2).
    std::vector<mpz_class> l(std::max(nmax + 1, 2));
    l[1] = 1;
    mpz_class binom, w, acc;
    for (int n = 2; n <= nmax; ++n) {
        acc = 0;
        binom = n;  // C(n,1)
        for (int i = 1; 2 * i < n; ++i) {
            w = binom * l[i];
            mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), l[n - i].get_mpz_t());
            mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(), n - i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i + 1);
        }
        acc <<= 1;
        if (n % 2 == 0) {
            w = binom * l[n / 2];
            mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), l[n / 2].get_mpz_t());
        }
        acc -= (n - 1) * l[n - 1];
        l[n] = acc;
    }
    l.resize(nmax + 1);
    return l;
}

std::vector<mpz_class> schroder_counts(int nmax) {
    // s_n = sum_m s_m U_{n-m} with U_m = 2 s_m - [m=1] gives
    //   s_n = 2 sum_{i=1..n-1} s_i s_{n-i} - s_{n-1}   (n >= 2).
    std::vector<mpz_class> s(std::max(nmax + 1, 2));
    s[1] = 1;
    mpz_class acc;
    for (int n = 2; n <= nmax; ++n) {
        acc = 0;
        for (int i = 1; 2 * i < n; ++i)
            mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), s[n - i].get_mpz_t());
        acc <<= 1;
        if (n % 2 == 0) mpz_addmul(acc.get_mpz_t(), s[n / 2].get_mpz_t(), s[n / 2].get_mpz_t());
        acc <<= 1;
        acc -= s[n - 1];
        s[n] = acc;
    }
    s.resize(nmax + 1);
    return s;
}

TruncatedSeries series_L(int order) {
    if (order < 1) throw std::invalid_argument("series_L: order must be >= 1");
    return solve_fixed_point(order, [](const TruncatedSeries& a) {
        return TruncatedSeries::z(a.order()) + exp_series(a) - TruncatedSeries::one(a.order()) - a;
    });
}

TruncatedSeries series_S(int order) {
    if (order < 1) throw std::invalid_argument("series_S: order must be >= 1");
    return solve_fixed_point(order, [](const TruncatedSeries& a) {
        TruncatedSeries one = TruncatedSeries::one(a.order());
        return TruncatedSeries::z(a.order()) + a * a * inverse_series(one - a);
    });
}

TruncatedSeries series_S_closed_form(int order) {
    TruncatedSeries inner = TruncatedSeries::one(order);
    if (order >= 1) inner.set_coeff(1, -6);
    if (order >= 2) inner.set_coeff(2, 1);
    TruncatedSeries s = TruncatedSeries::one(order) + TruncatedSeries::z(order) -
                        sqrt_series(inner);
    return mpq_class(1, 4) * s;
}

mpz_class count_labeled_cographs(int n) {
    if (n < 1) throw std::invalid_argument("count_labeled_cographs: n must be >= 1");
    if (n == 1) return 1;
    return 2 * hierarchy_counts(n)[n];
}

mpz_class count_separable(int n) {
    if (n < 1) throw std::invalid_argument("count_separable: n must be >= 1");
    if (n == 1) return 1;
    return 2 * schroder_counts(n)[n];
}

// ---------------------------------------------------------------- bivariate

namespace {

// acc[k1+k2] += scale * a[k1] * b[k2], with acc sized to hold the result
void addmul_scaled(std::vector<mpz_class>& acc, const mpz_class& scale,
                   const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class t;
    for (std::size_t k1 = 0; k1 < a.size(); ++k1) {
        if (a[k1] == 0) continue;
        t = scale * a[k1];
        for (std::size_t k2 = 0; k2 < b.size(); ++k2) {
            if (b[k2] == 0) continue;
            mpz_addmul(acc[k1 + k2].get_mpz_t(), t.get_mpz_t(), b[k2].get_mpz_t());
        }
    }
}

}  // namespace

CographSeries solve_cograph_series(int order) {
    if (order < 1) throw std::invalid_argument("solve_cograph_series: order must be >= 1");
    const int N = order;
    std::vector<mpz_class> l = hierarchy_counts(N);
    // g = n! [z^n](e^L - 1 - L) = l_n - [n=1];  h = n! [z^n](e^L - 1) = 2 l_n - [n=1]
    std::vector<mpz_class> g(N + 1), h(N + 1);
    for (int n = 1; n <= N; ++n) {
        g[n] = l[n];
        h[n] = 2 * l[n];
    }
    g[1] -= 1;
    h[1] -= 1;

    // Work in n!-scaled integers. With V = z(1+u) + C1 and P = C0 =
    // exp_{>=2}(V), the defining equation C1 = G(z,C1,u) reads
    //   c1_n = g_n + sum_{j>=1} C(n,j) h_j d_{n-j},   d = zu + C0 - L,
    // and P satisfies P' = V'(P + V), i.e.
    //   p_n = sum_{i=1..n-1} C(n-1,i-1) v_i (p+v)_{n-i}.
    // C = V + P (order by order these close: each step only reads lower
    // orders, which realizes the fixed point one z-order per step).
    std::vector<std::vector<mpz_class>> v(N + 1), p(N + 1), w(N + 1);  // w = p + v
    TruncatedBiSeries c1(N, true), c(N, true);
    mpz_class binom, scale;
    for (int n = 1; n <= N; ++n) {
        // c1_n
        std::vector<mpz_class> c1n(n + 1);
        c1n[0] = g[n];
        binom = n;  // C(n,1)
        for (int j = 1; j <= n - 1; ++j) {
            // d_{n-j}: k>=1 columns of p_{n-j}, plus u when n-j = 1
            int m = n - j;
            if (h[j] != 0) {
                scale = binom * h[j];
                if (m == 1) {
                    c1n[1] += scale;
                } else {
                    for (int k = 1; k <= m; ++k)
                        if (p[m][k] != 0)
                            mpz_addmul(c1n[k].get_mpz_t(), scale.get_mpz_t(),
                                       p[m][k].get_mpz_t());
                }
            }
            mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(), n - j);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j + 1);
        }
        // v_n = c1_n + [n=1](1 + u)
        v[n] = c1n;
        if (n == 1) {
            v[1][0] += 1;
            v[1][1] += 1;
        }
        // p_n = sum_{i=1..n-1} C(n-1,i-1) v_i w_{n-i}
        std::vector<mpz_class> pn(n + 1);
        binom = 1;  // C(n-1,0)
        for (int i = 1; i <= n - 1; ++i) {
            addmul_scaled(pn, binom, v[i], w[n - i]);
            mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(), n - 1 - (i - 1));
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i);
        }
        w[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) w[n][k] = pn[k] + v[n][k];
        for (int k = 0; k <= n; ++k) {
            c1.raw_mut(n, k) = std::move(c1n[k]);
            c.raw_mut(n, k) = w[n][k];
        }
        p[n] = std::move(pn);
    }
    return {std::move(c1), std::move(c)};
}

SeparableSeries solve_separable_series(int order) {
    if (order < 1) throw std::invalid_argument("solve_separable_series: order must be >= 1");
    const int N = order;
    std::vector<mpz_class> s = schroder_counts(N);
    std::vector<mpz_class> U(N + 1), K(N + 1);
    for (int n = 1; n <= N; ++n) U[n] = 2 * s[n];
    U[1] -= 1;
    // K = 1/(1-S)^2 - 1 = 2U + U^2
    for (int n = 1; n <= N; ++n) {
        K[n] = 2 * U[n];
        for (int i = 1; i < n; ++i) mpz_addmul(K[n].get_mpz_t(), U[i].get_mpz_t(), U[n - i].get_mpz_t());
    }

    // With Q = z + zu + S_minus and R = 1/(1-Q):
    //   sminus_n = (s_n - [n=1]) + sum_{j>=1} K_j (zu + S_plus^+)_{n-j}
    //   rplus = QR satisfies rplus_n = q_n + sum_{i<n} (q_i * rplus_{n-i})
    //   splus_n = rplus_n - q_n
    // where S_plus^+ keeps only the u-degree >= 1 part.
    std::vector<std::vector<mpz_class>> q(N + 1), rp(N + 1), sp(N + 1);
    TruncatedBiSeries sminus(N, false), splus(N, false), Z(N, false);
    const mpz_class one = 1;
    for (int n = 1; n <= N; ++n) {
        std::vector<mpz_class> son(n + 1);
        son[0] = s[n];
        if (n == 1) son[0] -= 1;
        for (int j = 1; j <= n - 1; ++j) {
            int m = n - j;
            if (K[j] == 0) continue;
            if (m == 1) {
                son[1] += K[j];
            } else {
                for (int k = 1; k <= m; ++k)
                    if (sp[m][k] != 0)
                        mpz_addmul(son[k].get_mpz_t(), K[j].get_mpz_t(), sp[m][k].get_mpz_t());
            }
        }
        q[n] = son;
        if (n == 1) {
            q[1][0] += 1;
            q[1][1] += 1;
        }
        std::vector<mpz_class> acc(n + 1);  // sum_{i<n} q_i * rp_{n-i} = splus_n
        for (int i = 1; i <= n - 1; ++i) addmul_scaled(acc, one, q[i], rp[n - i]);
        rp[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) rp[n][k] = q[n][k] + acc[k];
        sp[n] = std::move(acc);
        for (int k = 0; k <= n; ++k) {
            sminus.raw_mut(n, k) = son[k];
            splus.raw_mut(n, k) = sp[n][k];
            Z.raw_mut(n, k) = son[k] + sp[n][k];
        }
        if (n == 1) {
            Z.raw_mut(1, 0) += 1;
            Z.raw_mut(1, 1) += 1;
        }
    }
    return {std::move(sminus), std::move(splus), std::move(Z)};
}

TruncatedBiSeries series_C1(int order) { return solve_cograph_series(order).c1; }
TruncatedBiSeries series_C(int order) { return solve_cograph_series(order).c; }
TruncatedBiSeries series_Sominus(int order) { return solve_separable_series(order).sminus; }
TruncatedBiSeries series_Soplus(int order) { return solve_separable_series(order).splus; }

mpq_class expected_X(const CographSeries& cs, int n, int k) {
    if (n < 1 || k < 1 || k > n) throw DomainError("expected_X: need 1 <= k <= n");
    if (n > cs.c.order())
        throw TruncationExceeded("expected_X: n exceeds series order " +
                                 std::to_string(cs.c.order()));
    mpq_class r(cs.c.raw(n, k), cs.c.raw(n, 0));
    r.canonicalize();
    return r;
}

mpq_class expected_Z(const SeparableSeries& ss, int n, int k) {
    if (n < 1 || k < 1 || k > n) throw DomainError("expected_Z: need 1 <= k <= n");
    if (n > ss.z.order())
        throw TruncationExceeded("expected_Z: n exceeds series order " +
                                 std::to_string(ss.z.order()));
    mpq_class r(ss.z.raw(n, k), ss.z.raw(n, 0));
    r.canonicalize();
    return r;
}

}  // namespace cosep
