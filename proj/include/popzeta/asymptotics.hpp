#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "popzeta/population.hpp"
#include "popzeta/primes.hpp"

namespace popzeta {

// Empirical fit of a limiting constant along a grid. Constants are always
// reported with the oscillation band over the upper half of the grid, never
// as bare point estimates.
struct AsymptoticFit {
    std::string list_descr;
    std::string quantity;
    std::vector<double> grid;
    std::vector<double> observed;
    std::vector<double> model;
    std::vector<double> estimates;  // per-point constant estimate
    double constant = 0.0;          // estimate at the last grid point
    double band_lo = 0.0, band_hi = 0.0;
    bool exploratory = false;       // no claim that the limit exists

    // x,observed,model,constant_estimate
    std::string csv() const;
    // constant,band_lo,band_hi,grid_max
    std::string summary() const;
};

// Geometric grid, `per_decade` points per decade of [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, int per_decade = 10);

// gamma_M from the Euler product: ln prod (1-1/p)^{-1} - (1/r) ln ln x.
AsymptoticFit mertens_fit(ArithmeticalList& M, std::span<const double> grid);

// Residual of sum ln(p)/p against (1/r) ln x (stays bounded).
AsymptoticFit lnp_over_p(ArithmeticalList& M, std::span<const double> grid);
// Residual of sum 1/p against (1/r) ln ln x (converges to b).
AsymptoticFit one_over_p(ArithmeticalList& M, std::span<const double> grid);

// Density constant of N_pop: estimate A(x) = N_pop(x) ln x / (x (ln x)^{1/r}).
// Exploratory: the underlying equivalence is an unproved hypothesis.
AsymptoticFit estimate_A(ArithmeticalList& M, std::span<const double> grid,
                         const PopulationTable& pop);

// Harmonic-sum law: ratio S_pop(x;1) / (r A (ln x)^{1/r}), trending to 1.
AsymptoticFit mesch_check(const PopulationTable& pop, std::span<const double> grid, double A_est);

// Laplace-transform law at small x. `identity_residual[i]` is the relative
// gap of the exact identity sum e^{-nx} = x int N_pop(t) e^{-tx} dt at
// x_grid[i]; the fit tracks the asymptotic ratio against (A/x)(ln 1/x)^{1/r-1}.
struct SigExpResult {
    AsymptoticFit fit;
    std::vector<double> identity_residual;
};
SigExpResult sigexp_check(const PopulationTable& pop, std::span<const double> x_grid,
                          double A_est);

// Series-vs-integral constant: u_n = sum_{i<=n, i in A} f(i) - int_{A_n^+} f,
// for decreasing positive f vanishing at infinity. Members of A given by the
// population table; the overload without a table uses A = N*.
AsymptoticFit series_integral_constant(const PopulationTable& pop,
                                       const std::function<double(double)>& f, u64 n_max);
AsymptoticFit series_integral_constant(const std::function<double(double)>& f, u64 n_max);

}  // namespace popzeta
