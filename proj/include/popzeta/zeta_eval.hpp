#pragma once

#include <complex>
#include <span>
#include <vector>

#include "popzeta/arithfun.hpp"
#include "popzeta/population.hpp"
#include "popzeta/primes.hpp"

namespace popzeta {

using Complex = std::complex<double>;

struct EvalConfig {
    u64 prime_cutoff = 1'000'000;   // P: Euler products / eta truncated at primes <= P
    u64 series_cutoff = 1'000'000;  // N: Dirichlet series truncated at n <= N
    double quad_tol = 1e-9;
    unsigned weierstrass_order = 2;  // order of the regularizing factors in g_k
};

// A complex value with a heuristic truncation-error estimate. The estimates
// come from the documented tail formulas, not certified bounds.
struct EvalResult {
    Complex value{0.0, 0.0};
    double err = 0.0;
    EvalConfig config{};
};

// eta_M(s) = sum over p in M of p^{-s}; requires Re(s) > 1.
EvalResult eta(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});

enum class ZetaMethod { euler_product, dirichlet_series };

// Z_M(s), either as the Euler product over primes <= P or the Dirichlet
// series over pop members <= N; requires Re(s) > 1.
EvalResult zeta_partial(ArithmeticalList& M, Complex s, ZetaMethod method,
                        const EvalConfig& cfg = {});
// Dirichlet-series form over an existing population table.
EvalResult zeta_partial(const PopulationTable& pop, Complex s, const EvalConfig& cfg = {});

// W_M(s) = prod 1 / ((1 - p^{-s}) e^{p^{-s}}); converges for Re(s) > 1/2.
EvalResult w_regularized(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});

// w(s) = eta_1(s) - r eta_M(s) as the paired alternating Dirichlet series
// from the shifted lists; converges (numerically) for Re(s) > 0.
EvalResult w_shift(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});

// Correction factor in zeta = g_k zeta_k^k, from the paired Weierstrass
// products over the k shifted lists.
EvalResult g_k(Complex s, unsigned k, const EvalConfig& cfg = {});

// zeta_k continued along a path starting from a real anchor s0 > 1, as
// exp((log zeta - log g_k)/k) with the log branch tracked stepwise.
struct ZetaKPath {
    std::vector<EvalResult> values;        // zeta_k per path point
    std::vector<double> a_k_estimates;     // zeta_k(s) (s-1)^{1/k} at real s > 1, else NaN
    double a_k_stabilized = 0.0;           // estimate at the last real point > 1
};
ZetaKPath zeta_k_path(unsigned k, std::span<const Complex> path, const EvalConfig& cfg = {});

// Z_M = W_M e^{eta_M} for Re(s) > 1.
IdentityReport weierstrass_split_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});
// eta_1 = r eta_M + w for an arithmetical list of reason r.
IdentityReport shift_decomposition_check(ArithmeticalList& M, Complex s,
                                         const EvalConfig& cfg = {});
// zeta = g_k zeta_k^k for Re(s) > 1.
IdentityReport g_k_factor_check(unsigned k, Complex s, const EvalConfig& cfg = {});

// eta_M(s) vs sum mu(n)/n log Z_M(n s).
IdentityReport log_mobius_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});

// d/ds eta_M(s) = -sum ln(p) p^{-s}.
EvalResult eta_derivative(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});

// int_2^{x_cut} pi(t) ln(t) t^{-s-1} dt, piecewise exact over the steps of
// pi(t), with a pi(t) <= t tail estimate.
EvalResult pi_log_integral(Complex s, u64 x_cut, const EvalConfig& cfg = {});

// d/ds eta_1(s) - eta_1(s)/s = -s int_2^inf pi(t) ln(t) t^{-s-1} dt.
IdentityReport eta_derivative_integral_check(Complex s, u64 x_cut, const EvalConfig& cfg = {});

// Gamma(s) Z_M(s) = int_0^inf G_pop(e^{-t}) t^{s-1} dt by adaptive
// quadrature; the integrand uses inclusion-exclusion over the complement
// for small t and the direct pop sum elsewhere.
IdentityReport gamma_integral_check(ArithmeticalList& M, Complex s, const EvalConfig& cfg = {});

// Z_M(s) = s int_1^inf N_pop(t) t^{-s-1} dt, the integral piecewise exact
// over the steps of N_pop up to X.
IdentityReport abel_integral_check(ArithmeticalList& M, Complex s, u64 X,
                                   const EvalConfig& cfg = {});

// Perron contour estimate of N_pop(x) for non-integer x: the trapezoid sum
// of Z_M(s) x^s / s over sigma - iT .. sigma + iT.
EvalResult perron_estimate(ArithmeticalList& M, double x, double sigma, double T,
                           const EvalConfig& cfg = {});

// Riemann zeta by Euler-Maclaurin; accurate for Re(s) > 0, s != 1,
// moderate |Im(s)|.
Complex riemann_zeta(Complex s);
// Lanczos approximation of Gamma(s).
Complex gamma_fn(Complex s);

}  // namespace popzeta
