#pragma once

#include <utility>
#include <vector>

namespace cosep {
namespace asymptotics {

using real = long double;

// radius of convergence of L: 2 log 2 - 1
real cograph_rho();
// radius of convergence of S: 3 - 2 sqrt(2)
real separable_rho();

// ------------------------------------------------------------- cograph side
// Everything is parametrized by y = L(r(u)) in (0, log 2).

struct CographCharPoint {
    real y, u, r, s, beta, C;
};

// u = (e^y - 2 - log(e^y - 1)) / (2y + 1 - e^y); decreasing, onto (0, inf)
real cograph_u_of_y(real y);

// explicit beta(y); decreasing bijection onto (0, 1)
real cograph_beta_of_y(real y);

// beta computed the second way, as u G_u / (r G_z) with
// G_u = e^y (2y + 1 - e^y) and G_z = e^y/(e^y - 1) + e^y (1 + u)
real cograph_beta_via_derivatives(real y);

// inverse of cograph_beta_of_y by bisection, |beta(y) - beta| <= tol |beta|;
// near beta -> 0 the bracket is seeded from beta ~ (y - log 2)^2 / rho
real cograph_y_of_beta(real beta, real tol = 1e-12L);

CographCharPoint cograph_point_of_y(real y);
real C_of_beta(real beta);

// residuals of the characteristic system G(r,s,u) = s, G_c(r,s,u) = 1
// evaluated directly from the defining G
struct Residuals {
    real value_eq;  // |G(r,s,u) - s|
    real deriv_eq;  // |G_c(r,s,u) - 1|
};
Residuals cograph_residuals(real y);

// gamma_1(u) = sqrt(2 r G_z / G_cc), the square-root singularity amplitude
real gamma1_cograph(real u);
real cograph_y_of_u(real u, real tol = 1e-14L);

// unique root of C(beta) = 1 in (0.1, 0.9)
real find_beta0();
// maximizer of C on (0.01, 0.9) by golden section, and the maximum value
std::pair<real, real> find_beta_star();

// ----------------------------------------------------------- separable side
// Parametrized by y = S(r(u)) in (0, (2 - sqrt 2)/2).

struct SepCharPoint {
    real y, u, r, s, beta, E;
};

SepCharPoint sep_point_of_y(real y);
real sep_beta_of_y(real y);
real sep_y_of_beta(real beta, real tol = 1e-12L);
Residuals sep_residuals(real y);

real E_of_beta(real beta);
real find_beta1();
std::pair<real, real> find_E_star();

// ------------------------------------------------------------------ curves

enum class Model { cograph, separable };

// (beta, growth constant) pairs over the grid
std::vector<std::pair<double, double>> curve(Model model, const std::vector<double>& betas);

struct Constants {
    double beta0;
    double beta_star;
    double C_star;
    double beta1;
    double E_beta_argmax;
    double E_star;
    double root_tol;
    double max_tol;
};
Constants compute_constants();

}  // namespace asymptotics
}  // namespace cosep
