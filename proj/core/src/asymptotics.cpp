#include "cosep/asymptotics.hpp"

#include <cmath>
#include <mutex>

#include "cosep/errors.hpp"

namespace cosep {
namespace asymptotics {

namespace {

const real kLog2 = 0.693147180559945309417232121458L;
const real kRhoC = 2.0L * kLog2 - 1.0L;          // 2 log 2 - 1
const real kSqrt2 = 1.41421356237309504880168872L;
const real kRhoS = 3.0L - 2.0L * kSqrt2;         // 3 - 2 sqrt 2
const real kYMaxSep = (2.0L - kSqrt2) / 2.0L;    // S(rho)

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

// bisection for a strictly decreasing f, targeting f(y) = target
template <class F>
real bisect_decreasing(F f, real lo, real hi, real target, real rel_tol, int max_iter = 200) {
    real flo = f(lo), fhi = f(hi);
    if (!(flo >= target && fhi <= target))
        throw NonConvergence("bisection: target not bracketed");
    for (int it = 0; it < max_iter; ++it) {
        real mid = 0.5L * (lo + hi);
        real fm = f(mid);
        if (std::fabs(fm - target) <= rel_tol * std::fabs(target) || hi - lo < 1e-19L * hi)
            return mid;
        if (fm > target) lo = mid;
        else hi = mid;
    }
    throw NonConvergence("bisection: iteration cap reached");
}

// golden-section maximizer for a unimodal f on [lo, hi]
template <class F>
std::pair<real, real> golden_max(F f, real lo, real hi, real x_tol) {
    const real invphi = 0.6180339887498948482045868343656L;
    real a = lo, b = hi;
    real c = b - invphi * (b - a), d = a + invphi * (b - a);
    real fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    real x = 0.5L * (a + b);
    return {x, f(x)};
}

}  // namespace

real cograph_rho() { return kRhoC; }
real separable_rho() { return kRhoS; }

real cograph_u_of_y(real y) {
    require(y > 0.0L && y < kLog2, "cograph_u_of_y: need 0 < y < log 2");
    real ey = std::exp(y);
    return (ey - 2.0L - std::log(ey - 1.0L)) / (2.0L * y + 1.0L - ey);
}

real cograph_beta_of_y(real y) {
    require(y > 0.0L && y < kLog2, "cograph_beta_of_y: need 0 < y < log 2");
    real ey = std::exp(y);
    real lg = std::log(ey - 1.0L);
    real num = (ey - 2.0L - lg) * (ey - 1.0L);
    real den = 2.0L * y + 1.0L - ey + (ey - 1.0L) * (2.0L * y - 1.0L - lg);
    return num / den;
}

real cograph_beta_via_derivatives(real y) {
    real u = cograph_u_of_y(y);
    real ey = std::exp(y);
    real r = 2.0L * y + 1.0L - ey;
    real gu = ey * (2.0L * y + 1.0L - ey);
    real gz = ey / (ey - 1.0L) + ey * (1.0L + u);
    return u * gu / (r * gz);
}

real cograph_y_of_beta(real beta, real tol) {
    require(beta > 0.0L && beta < 1.0L, "cograph_y_of_beta: need 0 < beta < 1");
    real lo, hi;
    if (beta < 1e-4L) {
        // beta ~ (y - log 2)^2 / rho, so seed the bracket around the expansion;
        // naive endpoints lose all digits in the quadratically flat region
        real d = std::sqrt(beta * kRhoC);
        lo = kLog2 - 8.0L * d;
        hi = kLog2 - 0.125L * d;
        while (cograph_beta_of_y(lo) < beta) lo = kLog2 - 2.0L * (kLog2 - lo);
        while (cograph_beta_of_y(hi) > beta) hi = kLog2 - 0.5L * (kLog2 - hi);
    } else {
        lo = 1e-8L;
        hi = kLog2 - 1e-14L;
    }
    return bisect_decreasing([](real y) { return cograph_beta_of_y(y); }, lo, hi, beta, tol);
}

CographCharPoint cograph_point_of_y(real y) {
    CographCharPoint pt;
    pt.y = y;
    pt.u = cograph_u_of_y(y);
    pt.r = 2.0L * y + 1.0L - std::exp(y);
    pt.s = 1.0L - y;
    pt.beta = cograph_beta_of_y(y);
    pt.C = kRhoC / (pt.r * std::pow(pt.u, pt.beta));
    return pt;
}

real C_of_beta(real beta) {
    return cograph_point_of_y(cograph_y_of_beta(beta)).C;
}

Residuals cograph_residuals(real y) {
    CographCharPoint pt = cograph_point_of_y(y);
    // G(z,c,u) = e^L - 1 - L + (e^L - 1)(e^{c + z(1+u)} - 1 - c - L), L(r) = y
    real ey = std::exp(y);
    real w = std::exp(pt.s + pt.r * (1.0L + pt.u));
    real G = ey - 1.0L - y + (ey - 1.0L) * (w - 1.0L - pt.s - y);
    real Gc = (ey - 1.0L) * (w - 1.0L);
    return {std::fabs(G - pt.s), std::fabs(Gc - 1.0L)};
}

real cograph_y_of_u(real u, real tol) {
    require(u > 0.0L, "cograph_y_of_u: need u > 0");
    // u(y) is decreasing from +inf (y -> 0) to 0 (y -> log 2)
    return bisect_decreasing([](real y) { return cograph_u_of_y(y); }, 1e-12L,
                             kLog2 - 1e-16L, u, tol);
}

real gamma1_cograph(real u) {
    real y = cograph_y_of_u(u);
    CographCharPoint pt = cograph_point_of_y(y);
    real ey = std::exp(y);
    real gz = ey / (ey - 1.0L) + ey * (1.0L + u);
    // G_cc evaluated directly: (e^L - 1) e^{s + r(1+u)}
    real gcc = (ey - 1.0L) * std::exp(pt.s + pt.r * (1.0L + u));
    require(gz > 0.0L && gcc > 0.0L, "gamma1_cograph: derivative signs");
    return std::sqrt(2.0L * pt.r * gz / gcc);
}

real find_beta0() {
    // C(beta) is decreasing through 1 in this window
    real lo = 0.1L, hi = 0.9L;
    if (!(C_of_beta(lo) > 1.0L && C_of_beta(hi) < 1.0L))
        throw NonConvergence("find_beta0: C - 1 not bracketed on (0.1, 0.9)");
    for (int it = 0; it < 200 && hi - lo > 1e-12L; ++it) {
        real mid = 0.5L * (lo + hi);
        (C_of_beta(mid) > 1.0L ? lo : hi) = mid;
    }
    return 0.5L * (lo + hi);
}

std::pair<real, real> find_beta_star() {
    return golden_max([](real b) { return C_of_beta(b); }, 0.01L, 0.9L, 1e-8L);
}

// ----------------------------------------------------------- separable side

SepCharPoint sep_point_of_y(real y) {
    require(y > 0.0L && y < kYMaxSep, "sep_point_of_y: need 0 < y < (2 - sqrt 2)/2");
    SepCharPoint pt;
    pt.y = y;
    real q = std::sqrt(2.0L * y - y * y);
    pt.u = (2.0L * (1.0L - y) * q - 1.0L) / (2.0L * y * y - y);
    pt.r = (2.0L * y - 2.0L * q + 1.0L) / (1.0L + pt.u);
    pt.s = -2.0L * y + q;
    // G_z closed form; denominator vanishes only at the boundary y = 1 - sqrt2/2
    real gz_num = 6.0L * y * y * q - 4.0L * y * y - 10.0L * y * q + 9.0L * y + 2.0L * q - 2.0L;
    real gz_den = y * (y - 1.0L) * (y - 2.0L) * (2.0L * y - 1.0L) *
                  (2.0L * y * y - 4.0L * y + 1.0L);
    real gz = gz_num / gz_den;
    // G_u = z K (w(2-w)/(1-w)^2 + 1) with w = s + r(1+u) = 1 - sqrt(2y - y^2)
    real w = 1.0L - q;
    real K = 1.0L / ((1.0L - y) * (1.0L - y)) - 1.0L;
    real gu = pt.r * K * (w * (2.0L - w) / ((1.0L - w) * (1.0L - w)) + 1.0L);
    pt.beta = pt.u * gu / (pt.r * gz);
    pt.E = 1.0L / ((3.0L + 2.0L * kSqrt2) * pt.r * std::pow(pt.u, pt.beta));
    return pt;
}

real sep_beta_of_y(real y) { return sep_point_of_y(y).beta; }

namespace {

// beta(y) is inverted by bisection; the paper leaves invertibility implicit,
// so the first inversion verifies strict decrease on a dense grid and aborts
// with a diagnostic if that ever fails.
void check_sep_monotonicity() {
    static std::once_flag flag;
    std::call_once(flag, []() {
        const int grid = 10000;
        real prev = 2.0L;
        for (int i = 1; i < grid; ++i) {
            real y = kYMaxSep * static_cast<real>(i) / grid;
            real b = sep_beta_of_y(y);
            if (!(b < prev))
                throw NonMonotonic("separable beta(y) failed the grid monotonicity check near y = " +
                                   std::to_string(static_cast<double>(y)));
            prev = b;
        }
    });
}

}  // namespace

real sep_y_of_beta(real beta, real tol) {
    require(beta > 0.0L && beta < 1.0L, "sep_y_of_beta: need 0 < beta < 1");
    check_sep_monotonicity();
    real lo, hi;
    if (beta < 1e-4L) {
        // y ~ ymax - sqrt(beta) sqrt(3 sqrt2/4 - 1) near beta -> 0
        real d = std::sqrt(beta) * std::sqrt(0.75L * kSqrt2 - 1.0L);
        lo = kYMaxSep - 8.0L * d;
        hi = kYMaxSep - 0.125L * d;
        while (sep_beta_of_y(lo) < beta) lo = kYMaxSep - 2.0L * (kYMaxSep - lo);
        while (sep_beta_of_y(hi) > beta) hi = kYMaxSep - 0.5L * (kYMaxSep - hi);
    } else {
        lo = 1e-10L;
        hi = kYMaxSep - 1e-16L;
    }
    return bisect_decreasing([](real y) { return sep_beta_of_y(y); }, lo, hi, beta, tol);
}

Residuals sep_residuals(real y) {
    SepCharPoint pt = sep_point_of_y(y);
    // G from the defining equation, with S(r) = y:
    // G = y^2/(1-y) + (w^2/(1-w) + r u + r - y) K,  w = s + r(1+u)
    real w = pt.s + pt.r * (1.0L + pt.u);
    real K = 1.0L / ((1.0L - y) * (1.0L - y)) - 1.0L;
    real G = y * y / (1.0L - y) + (w * w / (1.0L - w) + pt.r * pt.u + pt.r - y) * K;
    real Gc = K * w * (2.0L - w) / ((1.0L - w) * (1.0L - w));
    return {std::fabs(G - pt.s), std::fabs(Gc - 1.0L)};
}

real E_of_beta(real beta) { return sep_point_of_y(sep_y_of_beta(beta)).E; }

real find_beta1() {
    real lo = 0.1L, hi = 0.9L;
    if (!(E_of_beta(lo) > 1.0L && E_of_beta(hi) < 1.0L))
        throw NonConvergence("find_beta1: E - 1 not bracketed on (0.1, 0.9)");
    for (int it = 0; it < 200 && hi - lo > 1e-12L; ++it) {
        real mid = 0.5L * (lo + hi);
        (E_of_beta(mid) > 1.0L ? lo : hi) = mid;
    }
    return 0.5L * (lo + hi);
}

std::pair<real, real> find_E_star() {
    return golden_max([](real b) { return E_of_beta(b); }, 0.01L, 0.9L, 1e-8L);
}

// ------------------------------------------------------------------ curves

std::vector<std::pair<double, double>> curve(Model model, const std::vector<double>& betas) {
    std::vector<std::pair<double, double>> out;
    out.reserve(betas.size());
    for (double b : betas) {
        real v = model == Model::cograph ? C_of_beta(static_cast<real>(b))
                                         : E_of_beta(static_cast<real>(b));
        out.emplace_back(b, static_cast<double>(v));
    }
    return out;
}

Constants compute_constants() {
    Constants k;
    k.beta0 = static_cast<double>(find_beta0());
    auto [bs, cs] = find_beta_star();
    k.beta_star = static_cast<double>(bs);
    k.C_star = static_cast<double>(cs);
    k.beta1 = static_cast<double>(find_beta1());
    auto [be, es] = find_E_star();
    k.E_beta_argmax = static_cast<double>(be);
    k.E_star = static_cast<double>(es);
    k.root_tol = 1e-12;
    k.max_tol = 1e-8;
    return k;
}

}  // namespace asymptotics
}  // namespace cosep
